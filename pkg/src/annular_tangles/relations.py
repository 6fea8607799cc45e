"""The relation corpus for framed affine tangles, generated per boundary size.

Relations are written in application order (first generator acts first).
Each family is index-schematic, so instances are produced for every boundary
size up to a bound and every index for which all generators are defined.
Only the linear indices ``1..n-1`` are used; the wrap-around generators are
reached through the rotation families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import BoundaryMismatch
from .tangles import (
    GenSym,
    TangleWord,
    cap,
    cross,
    cup,
    rot_ccw,
    rot_cw,
    twist,
    wrap,
)


class RuleId(enum.Enum):
    R1 = "1"
    R2 = "2"
    R3 = "3"
    R4 = "4"
    R5 = "5"
    R6 = "6"
    R7 = "7"
    R8 = "8"
    R9 = "9"
    R10 = "10"
    R11 = "11"
    R12 = "12"
    R13 = "13"
    R14 = "14"
    R15 = "15"
    R16 = "16"
    R17 = "17"
    R18 = "18"
    R19 = "19"
    R20 = "20"
    R21 = "21"
    WRAP_COMMUTE = "affrelns-1"
    WRAP_CAP = "affrelns-2"
    WRAP_CUP = "affrelns-3"
    WRAP_BRAID = "affrelns-4"
    ROTATION = "rotation-expansion"

    @property
    def label(self) -> str:
        names = {
            "1": "Reidemeister 0",
            "2": "framed Reidemeister 1",
            "3": "Reidemeister 2",
            "4": "Reidemeister 3",
            "5": "cup-cup isotopy",
            "6": "cap-cap isotopy",
            "7": "cup-cap isotopy",
            "8": "cup-crossing isotopy",
            "9": "cap-crossing isotopy",
            "10": "crossing-crossing isotopy",
            "11": "pitchfork",
            "12": "rotation inverse",
            "13": "cap rotation",
            "14": "cup rotation",
            "15": "crossing rotation",
            "16": "twist inverse / commutation",
            "17": "twist through cup",
            "18": "twist through cap",
            "19": "twist through crossing (first strand)",
            "20": "twist through crossing (second strand)",
            "21": "twist through rotation",
        }
        return names.get(self.value, self.value)


@dataclass(frozen=True)
class RelationInstance:
    lhs: TangleWord
    rhs: TangleWord
    rule_id: RuleId

    def __post_init__(self):
        if (self.lhs.source_size, self.lhs.target_size) != (
            self.rhs.source_size,
            self.rhs.target_size,
        ):
            raise BoundaryMismatch(f"relation {self.rule_id.value} has unequal boundaries")

    def reversed(self) -> RelationInstance:
        return RelationInstance(self.rhs, self.lhs, self.rule_id)


def _w(src: int, gens: list[GenSym]) -> TangleWord:
    size = gens[-1].out_size if gens else src
    return TangleWord(src, size, gens)


def _rel(rule: RuleId, lhs: list[GenSym], rhs: list[GenSym], src: int) -> RelationInstance:
    return RelationInstance(_w(src, lhs), _w(src, rhs), rule)


_SENSES = (True, False)


def _linear_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Pairs (i, i+k) with k >= 2, both valid linear crossing indices at n."""
    for i in range(1, n):
        for j in range(i + 2, n):
            yield i, j


def relation_corpus(max_size: int) -> list[RelationInstance]:
    """Every relation instance whose words stay within ``max_size`` points."""
    out: list[RelationInstance] = []
    add = out.append
    N = max_size
    for n in range(0, N + 1):
        # (1) Reidemeister 0, at boundary n-2 -> n -> n-2
        if n >= 3:
            for i in range(1, n - 1):
                add(_rel(RuleId.R1, [cup(i + 1, n), cap(i, n)], [], n - 2))
                add(_rel(RuleId.R1, [cup(i, n), cap(i + 1, n)], [], n - 2))
        # (2) framed Reidemeister 1
        if n >= 3:
            for i in range(1, n):
                for l in _SENSES:
                    if i + 1 <= n - 1:
                        add(_rel(RuleId.R2, [cup(i, n), cross(i + 1, n, l), cap(i, n)],
                                 [twist(i, n - 2, l)], n - 2))
                    if i - 1 >= 1:
                        add(_rel(RuleId.R2, [cup(i, n), cross(i - 1, n, l), cap(i, n)],
                                 [twist(i - 1, n - 2, l)], n - 2))
        if n >= 2:
            for i in range(1, n):
                # (3) Reidemeister 2
                add(_rel(RuleId.R3, [cross(i, n, True), cross(i, n, False)], [], n))
                add(_rel(RuleId.R3, [cross(i, n, False), cross(i, n, True)], [], n))
                # (4) Reidemeister 3
                if i + 1 <= n - 1:
                    for l in _SENSES:
                        a, b = cross(i, n, l), cross(i + 1, n, l)
                        add(_rel(RuleId.R4, [a, b, a], [b, a, b], n))
            # (10) distant crossings commute
            for i, j in _linear_pairs(n):
                for l in _SENSES:
                    for l2 in _SENSES:
                        a, b = cross(i, n, l), cross(j, n, l2)
                        add(_rel(RuleId.R10, [b, a], [a, b], n))
        # (5)-(7): isotopies between cups/caps at n and n+2
        if n >= 2 and n + 2 <= N:
            for i in range(1, n + 2):
                for k in range(2, n + 2):
                    j = i + k
                    # (5) g_{n+2}^{i+k} o g_n^i = g_{n+2}^i o g_n^{i+k-2}
                    if i <= n - 1 and j <= n + 1 and j - 2 <= n - 1:
                        add(_rel(RuleId.R5, [cup(i, n), cup(j, n + 2)],
                                 [cup(j - 2, n), cup(i, n + 2)], n - 2))
                        # (6) f_n^{i+k-2} o f_{n+2}^i = f_n^i o f_{n+2}^{i+k}
                        add(_rel(RuleId.R6, [cap(i, n + 2), cap(j - 2, n)],
                                 [cap(j, n + 2), cap(i, n)], n + 2))
                        # (7) g_n^{i+k-2} o f_n^i = f_{n+2}^i o g_{n+2}^{i+k}
                        add(_rel(RuleId.R7, [cap(i, n), cup(j - 2, n)],
                                 [cup(j, n + 2), cap(i, n + 2)], n))
                        #     g_n^i o f_n^{i+k-2} = f_{n+2}^{i+k} o g_{n+2}^i
                        add(_rel(RuleId.R7, [cap(j - 2, n), cup(i, n)],
                                 [cup(i, n + 2), cap(j, n + 2)], n))
        # (8), (9): crossings sliding past cups and caps
        if n >= 4:
            for i in range(1, n):
                for k in range(2, n):
                    j = i + k
                    if j > n - 1 or j - 2 > n - 3:
                        continue
                    for l in _SENSES:
                        # (8) g_n^i o t_{n-2}^{i+k-2} = t_n^{i+k} o g_n^i
                        add(_rel(RuleId.R8, [cross(j - 2, n - 2, l), cup(i, n)],
                                 [cup(i, n), cross(j, n, l)], n - 2))
                        # g_n^{i+k} o t_{n-2}^i = t_n^i o g_n^{i+k}
                        if i <= n - 3:
                            add(_rel(RuleId.R8, [cross(i, n - 2, l), cup(j, n)],
                                     [cup(j, n), cross(i, n, l)], n - 2))
                        # (9) f_n^i o t_n^{i+k} = t_{n-2}^{i+k-2} o f_n^i
                        add(_rel(RuleId.R9, [cross(j, n, l), cap(i, n)],
                                 [cap(i, n), cross(j - 2, n - 2, l)], n))
                        # f_n^{i+k} o t_n^i = t_{n-2}^i o f_n^{i+k}
                        if i <= n - 3:
                            add(_rel(RuleId.R9, [cross(i, n, l), cap(j, n)],
                                     [cap(j, n), cross(i, n - 2, l)], n))
        # (11) pitchfork
        if n >= 3:
            for i in range(1, n - 1):
                add(_rel(RuleId.R11, [cup(i + 1, n), cross(i, n, True)],
                         [cup(i, n), cross(i + 1, n, False)], n - 2))
                add(_rel(RuleId.R11, [cup(i + 1, n), cross(i, n, False)],
                         [cup(i, n), cross(i + 1, n, True)], n - 2))
        # (12)-(15) rotations
        if n >= 1:
            add(_rel(RuleId.R12, [rot_ccw(n), rot_cw(n)], [], n))
            add(_rel(RuleId.R12, [rot_cw(n), rot_ccw(n)], [], n))
        if n >= 3:
            for i in range(1, n - 1):
                add(_rel(RuleId.R13, [rot_cw(n), cap(i, n), rot_ccw(n - 2)], [cap(i + 1, n)], n))
                add(_rel(RuleId.R14, [rot_cw(n - 2), cup(i, n), rot_ccw(n)], [cup(i + 1, n)], n - 2))
        if n >= 2:
            add(_rel(RuleId.R13, [rot_cw(n), rot_cw(n), cap(n - 1, n)], [cap(1, n)], n))
            add(_rel(RuleId.R14, [cup(n - 1, n), rot_ccw(n), rot_ccw(n)], [cup(1, n)], n - 2))
            for l in _SENSES:
                for i in range(1, n - 1):
                    add(_rel(RuleId.R15, [rot_cw(n), cross(i, n, l), rot_ccw(n)],
                             [cross(i + 1, n, l)], n))
                if n >= 3:
                    add(_rel(RuleId.R15,
                             [rot_cw(n), rot_cw(n), cross(n - 1, n, l), rot_ccw(n), rot_ccw(n)],
                             [cross(1, n, l)], n))
        # (16)-(21) twists
        if n >= 1:
            for i in range(1, n + 1):
                add(_rel(RuleId.R16, [twist(i, n, False), twist(i, n, True)], [], n))
                add(_rel(RuleId.R16, [twist(i, n, True), twist(i, n, False)], [], n))
                for j in range(1, n + 1):
                    if j != i:
                        for l in _SENSES:
                            for l2 in _SENSES:
                                a, b = twist(i, n, l), twist(j, n, l2)
                                add(_rel(RuleId.R16, [b, a], [a, b], n))
                for l in _SENSES:
                    # (21) twist slides through a rotation: r carries inner j to outer j-1
                    add(_rel(RuleId.R21, [rot_cw(n), twist(i, n, l)],
                             [twist(i % n + 1, n, l), rot_cw(n)], n))
                    add(_rel(RuleId.R21, [rot_ccw(n), twist(i, n, l)],
                             [twist((i - 2) % n + 1, n, l), rot_ccw(n)], n))
        if n >= 2:
            for l in _SENSES:
                for j in range(1, n):
                    # (17) twist on either end of a cup; twists away from it commute
                    add(_rel(RuleId.R17, [cup(j, n), twist(j, n, l)],
                             [cup(j, n), twist(j + 1, n, l)], n - 2))
                    # (18) the same for caps
                    add(_rel(RuleId.R18, [twist(j, n, l), cap(j, n)],
                             [twist(j + 1, n, l), cap(j, n)], n))
                    for i in range(1, n + 1):
                        if i in (j, j + 1):
                            continue
                        inner = i if i < j else i - 2
                        add(_rel(RuleId.R17, [twist(inner, n - 2, l), cup(j, n)],
                                 [cup(j, n), twist(i, n, l)], n - 2))
                        add(_rel(RuleId.R18, [twist(i, n, l), cap(j, n)],
                                 [cap(j, n), twist(inner, n - 2, l)], n))
                    for l2 in _SENSES:
                        t = cross(j, n, l2)
                        # (19)/(20) twist follows its strand through a crossing
                        add(_rel(RuleId.R19, [twist(j, n, l), t], [t, twist(j + 1, n, l)], n))
                        add(_rel(RuleId.R20, [twist(j + 1, n, l), t], [t, twist(j, n, l)], n))
                        for i in range(1, n + 1):
                            if i not in (j, j + 1):
                                add(_rel(RuleId.R19, [twist(i, n, l), t], [t, twist(i, n, l)], n))
        # Wrap relations, with 1 <= i <= n-2 as for the wrap functor
        if n >= 2:
            s = wrap(n)
            for l in _SENSES:
                for i in range(1, n - 1):
                    t = cross(i, n, l)
                    add(_rel(RuleId.WRAP_COMMUTE, [t, s], [s, t], n))
            if n >= 3:
                for i in range(1, n - 1):
                    add(_rel(RuleId.WRAP_COMMUTE, [cup(i, n), s], [wrap(n - 2), cup(i, n)], n - 2))
                    add(_rel(RuleId.WRAP_COMMUTE, [s, cap(i, n)], [cap(i, n), wrap(n - 2)], n))
            u = cross(n - 1, n, False)
            add(_rel(RuleId.WRAP_CAP, [u, s, u, s, cap(n - 1, n)], [cap(n - 1, n)], n))
            add(_rel(RuleId.WRAP_CUP, [cup(n - 1, n), u, s, u, s], [cup(n - 1, n)], n - 2))
            add(_rel(RuleId.WRAP_BRAID, [u, s, u, s, u], [u, u, s, u, s], n))
            add(_rel(RuleId.ROTATION, [cross(i, n, False) for i in range(1, n)] + [s],
                     [rot_cw(n)], n))
    return [r for r in out if max(r.lhs.sizes() + r.rhs.sizes()) <= max_size]

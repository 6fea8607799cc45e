"""Affine framed tangle words.

A word is a list of generators stored in *application order*: ``gens[0]`` acts
first, on the inner circle.  The usual right-to-left notation ``b o a`` for
"a, then b" is therefore the list ``[a, b]``.  The text form uses the same
left-to-right order::

    tangle 0 -> 2: g1
    tangle 2 -> 2: t1:o t1:u

Strand positions are 1-based, as in the generator names ``g_n^i``.  The
index ``i = n`` on a cup, cap or crossing is the wrap-around generator joining
position ``n`` to position ``1``; it is defined by conjugation with rotations
(see :func:`expand_wrap_indices`).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundaryMismatch, InvalidGenerator, NoMatch, ParseError


class Kind(enum.Enum):
    CUP = "cup"
    CAP = "cap"
    CROSS_OVER = "cross_over"
    CROSS_UNDER = "cross_under"
    TWIST_POS = "twist_pos"
    TWIST_NEG = "twist_neg"
    ROT_CW = "rot_cw"
    ROT_CCW = "rot_ccw"
    WRAP = "wrap"


_INDEXLESS = {Kind.ROT_CW, Kind.ROT_CCW, Kind.WRAP}
_CROSSINGS = {Kind.CROSS_OVER, Kind.CROSS_UNDER}
_TWISTS = {Kind.TWIST_POS, Kind.TWIST_NEG}


@dataclass(frozen=True)
class GenSym:
    """One generator with its boundary sizes."""

    kind: Kind
    index: int | None
    in_size: int
    out_size: int

    def __post_init__(self):
        k, i, a, b = self.kind, self.index, self.in_size, self.out_size
        if a < 0 or b < 0:
            raise InvalidGenerator(f"negative boundary size in {self!r}")
        if k in _INDEXLESS:
            if i is not None:
                raise InvalidGenerator(f"{k.value} takes no index")
            if a != b:
                raise InvalidGenerator(f"{k.value} must have in_size == out_size")
            return
        if i is None:
            raise InvalidGenerator(f"{k.value} needs an index")
        if k is Kind.CUP:
            ok = b == a + 2 and 1 <= i <= b
        elif k is Kind.CAP:
            ok = a == b + 2 and 1 <= i <= a
        elif k in _CROSSINGS:
            ok = a == b and a >= 2 and 1 <= i <= a
        else:
            ok = a == b and 1 <= i <= a
        if not ok:
            raise InvalidGenerator(f"invalid generator {k.value}({i}) : {a} -> {b}")

    @property
    def size(self) -> int:
        """The larger of the two boundary sizes (the ``n`` in ``g_n^i``)."""
        return max(self.in_size, self.out_size)

    @property
    def is_wrap_index(self) -> bool:
        return self.index is not None and self.kind not in _TWISTS and self.index == self.size

    def token(self) -> str:
        k, i = self.kind, self.index
        return {
            Kind.CUP: f"g{i}",
            Kind.CAP: f"f{i}",
            Kind.CROSS_OVER: f"t{i}:o",
            Kind.CROSS_UNDER: f"t{i}:u",
            Kind.TWIST_POS: f"w{i}:+",
            Kind.TWIST_NEG: f"w{i}:-",
            Kind.ROT_CW: "r",
            Kind.ROT_CCW: "r'",
            Kind.WRAP: "s",
        }[k]

    def __repr__(self):
        return f"{self.token()}@{self.in_size}->{self.out_size}"


# Constructors.  ``n`` is always the larger boundary size.

def cup(i: int, n: int) -> GenSym:
    return GenSym(Kind.CUP, i, n - 2, n)


def cap(i: int, n: int) -> GenSym:
    return GenSym(Kind.CAP, i, n, n - 2)


def cross(i: int, n: int, over: bool = True) -> GenSym:
    return GenSym(Kind.CROSS_OVER if over else Kind.CROSS_UNDER, i, n, n)


def twist(i: int, n: int, positive: bool = True) -> GenSym:
    return GenSym(Kind.TWIST_POS if positive else Kind.TWIST_NEG, i, n, n)


def rot_cw(n: int) -> GenSym:
    return GenSym(Kind.ROT_CW, None, n, n)


def rot_ccw(n: int) -> GenSym:
    return GenSym(Kind.ROT_CCW, None, n, n)


def wrap(n: int) -> GenSym:
    return GenSym(Kind.WRAP, None, n, n)


@dataclass(frozen=True)
class TangleWord:
    source_size: int
    target_size: int
    gens: tuple[GenSym, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if (self.source_size - self.target_size) % 2:
            raise BoundaryMismatch("source and target sizes must have equal parity")
        size = self.source_size
        for k, g in enumerate(self.gens):
            if g.in_size != size:
                raise BoundaryMismatch(
                    f"generator {k} ({g!r}) expects {g.in_size} points, got {size}"
                )
            size = g.out_size
        if size != self.target_size:
            raise BoundaryMismatch(f"word ends at {size}, declared target {self.target_size}")

    @classmethod
    def identity(cls, n: int) -> TangleWord:
        return cls(n, n, ())

    @classmethod
    def of(cls, *gens: GenSym) -> TangleWord:
        """Build a word from a non-empty generator list, inferring the ends."""
        if not gens:
            raise ValueError("use TangleWord.identity for the empty word")
        return cls(gens[0].in_size, gens[-1].out_size, gens)

    def __len__(self):
        return len(self.gens)

    def sizes(self) -> list[int]:
        """Boundary size before each generator, plus the final size."""
        out = [self.source_size]
        for g in self.gens:
            out.append(g.out_size)
        return out

    def __str__(self):
        return format_word(self)


def compose(a: TangleWord, b: TangleWord) -> TangleWord:
    """``a`` followed by ``b`` (the tangle ``b o a``)."""
    if a.target_size != b.source_size:
        raise BoundaryMismatch(
            f"cannot compose {a.source_size}->{a.target_size} with "
            f"{b.source_size}->{b.target_size}"
        )
    return TangleWord(a.source_size, b.target_size, a.gens + b.gens)


def concat(words: Iterable[TangleWord]) -> TangleWord:
    words = list(words)
    out = words[0]
    for w in words[1:]:
        out = compose(out, w)
    return out


# -- text form ---------------------------------------------------------------

_HEADER = re.compile(r"^tangle (\d+) -> (\d+):(.*)$")
_TOKEN = re.compile(r"^(?:([gft])(\d+)(?::([ou]))?|w(\d+):([+-])|(r'|r|s))$")


def parse_word(text: str) -> TangleWord:
    m = _HEADER.match(text.strip())
    if not m:
        raise ParseError(f"expected 'tangle P -> Q: tokens', got {text!r}")
    source, target = int(m.group(1)), int(m.group(2))
    body = m.group(3).strip()
    tokens = body.split()
    size = source
    gens = []
    for tok in tokens:
        t = _TOKEN.match(tok)
        if not t:
            raise ParseError(f"bad token {tok!r}")
        letter, idx, sense, widx, wsign, bare = t.groups()
        try:
            if bare is not None:
                g = {"r": rot_cw, "r'": rot_ccw, "s": wrap}[bare](size)
            elif widx is not None:
                g = twist(int(widx), size, wsign == "+")
            elif letter == "g":
                if sense:
                    raise ParseError(f"bad token {tok!r}")
                g = cup(int(idx), size + 2)
            elif letter == "f":
                if sense:
                    raise ParseError(f"bad token {tok!r}")
                g = cap(int(idx), size)
            else:
                if not sense:
                    raise ParseError(f"crossing token needs :o or :u, got {tok!r}")
                g = cross(int(idx), size, sense == "o")
        except InvalidGenerator as exc:
            raise ParseError(f"{tok!r} at boundary size {size}: {exc}") from exc
        gens.append(g)
        size = g.out_size
    return TangleWord(source, target, gens)


def format_word(w: TangleWord) -> str:
    head = f"tangle {w.source_size} -> {w.target_size}:"
    if not w.gens:
        return head
    return head + " " + " ".join(g.token() for g in w.gens)


# -- structural operations ---------------------------------------------------

def expand_rotation(n: int, direction: str = "cw") -> TangleWord:
    """Rotation as a wrap followed/preceded by a chain of under-crossings.

    ``r_n = s o t^{n-1}(2) o ... o t^1(2)``; the counter-clockwise word is its
    inverse, ``s^{-1}`` being ``r' `` followed by ``t^1(2) ... t^{n-1}(2)``.
    """
    if n < 2:
        raise ValueError("expand_rotation needs n >= 2")
    unders = [cross(i, n, over=False) for i in range(1, n)]
    if direction == "cw":
        return TangleWord(n, n, unders + [wrap(n)])
    if direction == "ccw":
        overs = [cross(i, n, over=True) for i in range(n - 1, 0, -1)]
        return TangleWord(n, n, [rot_ccw(n)] + unders + overs)
    raise ValueError(f"direction must be 'cw' or 'ccw', got {direction!r}")


def inverse_wrap_word(n: int) -> TangleWord:
    return TangleWord(n, n, [rot_ccw(n)] + [cross(i, n, over=False) for i in range(1, n)])


_MIRROR = {
    Kind.CUP: Kind.CAP,
    Kind.CAP: Kind.CUP,
    Kind.CROSS_OVER: Kind.CROSS_OVER,
    Kind.CROSS_UNDER: Kind.CROSS_UNDER,
    Kind.TWIST_POS: Kind.TWIST_POS,
    Kind.TWIST_NEG: Kind.TWIST_NEG,
    Kind.ROT_CW: Kind.ROT_CCW,
    Kind.ROT_CCW: Kind.ROT_CW,
}


def invert_diagrammatically(a: TangleWord) -> TangleWord:
    """Inversion in the unit circle, which swaps the two boundary circles.

    Cups and caps trade places and the rotation direction reverses. Crossing
    sense and framing twists are kept as they are; no matrix computed here can
    tell the difference.
    """
    gens: list[GenSym] = []
    for g in reversed(a.gens):
        if g.kind is Kind.WRAP:
            gens.extend(inverse_wrap_word(g.size).gens)
        else:
            gens.append(GenSym(_MIRROR[g.kind], g.index, g.out_size, g.in_size))
    return TangleWord(a.target_size, a.source_size, gens)


def expand_wrap_indices(w: TangleWord) -> TangleWord:
    """Rewrite every wrap-index generator through rotations.

    ``g_n^n = r'_n o g_n^{n-1} o r_{n-2}``, ``f_n^n = r'_{n-2} o f_n^{n-1} o r_n``
    and ``t_n^n = r'_n o t_n^{n-1} o r_n``.
    """
    gens: list[GenSym] = []
    for g in w.gens:
        if not g.is_wrap_index:
            gens.append(g)
            continue
        n = g.size
        if g.kind is Kind.CUP:
            gens += [rot_cw(n - 2), cup(n - 1, n), rot_ccw(n)]
        elif g.kind is Kind.CAP:
            gens += [rot_cw(n), cap(n - 1, n), rot_ccw(n - 2)]
        else:
            gens += [rot_cw(n), GenSym(g.kind, n - 1, n, n), rot_ccw(n)]
    return TangleWord(w.source_size, w.target_size, gens)


# -- rewriting ---------------------------------------------------------------

def rewrite_step(w: TangleWord, rule, position: int) -> TangleWord:
    """Replace the occurrence of ``rule.lhs`` starting at ``gens[position]``."""
    lhs, rhs = rule.lhs, rule.rhs
    sizes = w.sizes()
    if not 0 <= position <= len(w.gens) or sizes[position] != lhs.source_size:
        raise NoMatch(f"{rule.rule_id}: boundary size mismatch at position {position}")
    k = len(lhs.gens)
    if tuple(w.gens[position:position + k]) != lhs.gens:
        raise NoMatch(f"{rule.rule_id}: left side does not occur at position {position}")
    gens = w.gens[:position] + rhs.gens + w.gens[position + k:]
    return TangleWord(w.source_size, w.target_size, gens)


def _cancels(a: GenSym, b: GenSym) -> bool:
    if a.in_size != b.out_size or a.out_size != b.in_size:
        return False
    ka, kb = a.kind, b.kind
    if {ka, kb} == {Kind.ROT_CW, Kind.ROT_CCW}:
        return True
    if {ka, kb} in ({Kind.CROSS_OVER, Kind.CROSS_UNDER}, {Kind.TWIST_POS, Kind.TWIST_NEG}):
        return a.index == b.index
    if ka is Kind.CUP and kb is Kind.CAP:
        # f^i o g^{i+1} = id = f^{i+1} o g^i
        n = a.out_size
        return abs(a.index - b.index) == 1 and max(a.index, b.index) <= n - 1
    return False


def _find_reduction(gens: Sequence[GenSym]) -> tuple[int, int, list[GenSym]] | None:
    for k in range(len(gens) - 1):
        if _cancels(gens[k], gens[k + 1]):
            return k, 2, []
    # t^1(2) ... t^{n-1}(2) s  ->  r
    for k, g in enumerate(gens):
        if g.kind is Kind.WRAP and g.size >= 2:
            n = g.size
            start = k - (n - 1)
            if start >= 0 and list(gens[start:k]) == [cross(i, n, False) for i in range(1, n)]:
                return start, n, [rot_cw(n)]
    return None


def greedy_simplify(w: TangleWord) -> TangleWord:
    """Apply length-decreasing relations until none applies.

    Reidemeister 0, Reidemeister 2, twist and rotation cancellation, and the
    contraction of ``t^1(2)...t^{n-1}(2) s`` to ``r``.
    """
    gens = list(w.gens)
    while (hit := _find_reduction(gens)) is not None:
        k, length, repl = hit
        gens[k:k + length] = repl
    return TangleWord(w.source_size, w.target_size, gens)

"""Affine crossingless matchings and their sign-sequence encoding.

Outer boundary points are numbered ``0 .. N-1`` with ``N = m + 2n``, increasing
anticlockwise.  A matching joins ``n`` pairs of points by non-crossing cups and
connects the remaining ``m`` points radially to the inner circle.

Sign sequences encode matchings bijectively: every minus is joined to the first
plus met while moving anticlockwise such that the pluses and minuses strictly
in between balance; the unmatched pluses are the rays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import InternalInvariant
from .tangles import TangleWord, cup


@dataclass(frozen=True)
class SignSequence:
    m: int
    n: int
    signs: str

    def __post_init__(self):
        if set(self.signs) - {"+", "-"}:
            raise ValueError(f"signs must use '+' and '-' only: {self.signs!r}")
        if len(self.signs) != self.m + 2 * self.n or self.signs.count("-") != self.n:
            raise ValueError(f"{self.signs!r} is not a sign sequence for m={self.m}, n={self.n}")

    @classmethod
    def parse(cls, signs: str) -> SignSequence:
        n = signs.count("-")
        return cls(len(signs) - 2 * n, n, signs)


def _pair_signs(signs: str) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    size = len(signs)
    cups = []
    matched = set()
    for p, c in enumerate(signs):
        if c != "-":
            continue
        plus = minus = 0
        for step in range(1, size):
            q = (p + step) % size
            if signs[q] == "+":
                if plus == minus:
                    cups.append((p, q))
                    matched.update((p, q))
                    break
                plus += 1
            else:
                minus += 1
        else:
            raise InternalInvariant(f"minus at {p} in {signs!r} has no balanced partner")
    if len(matched) != 2 * len(cups):
        raise InternalInvariant(f"two minuses share a plus in {signs!r}")
    rays = tuple(q for q in range(size) if q not in matched)
    return tuple(cups), rays


def span(minus: int, plus: int, size: int) -> list[int]:
    """Positions met going anticlockwise from ``minus`` to ``plus`` inclusive."""
    return [(minus + k) % size for k in range((plus - minus) % size + 1)]


@dataclass(frozen=True)
class Matching:
    """A crossingless matching, identified by its sign string."""

    m: int
    n: int
    signs: str

    def __post_init__(self):
        SignSequence(self.m, self.n, self.signs)

    @property
    def size(self) -> int:
        return self.m + 2 * self.n

    @cached_property
    def _pairs(self):
        return _pair_signs(self.signs)

    @property
    def cups(self) -> tuple[tuple[int, int], ...]:
        """Cups as ``(minus, plus)`` position pairs, sorted by the minus end."""
        return self._pairs[0]

    @property
    def rays(self) -> tuple[int, ...]:
        return self._pairs[1]

    def partner(self, p: int) -> int | None:
        for a, b in self.cups:
            if p == a:
                return b
            if p == b:
                return a
        return None

    def cup_span(self, cup_: tuple[int, int]) -> list[int]:
        return span(cup_[0], cup_[1], self.size)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "signs": self.signs,
            "cups": [list(c) for c in self.cups],
            "rays": list(self.rays),
        }

    @classmethod
    def from_json(cls, obj: dict) -> Matching:
        mch = cls(int(obj["m"]), int(obj["n"]), obj["signs"])
        if "cups" in obj and [list(c) for c in mch.cups] != [list(c) for c in obj["cups"]]:
            raise ValueError(f"cups {obj['cups']} disagree with signs {mch.signs!r}")
        return mch

    def __str__(self):
        return self.signs


def from_signs(s: SignSequence | str) -> Matching:
    if isinstance(s, str):
        s = SignSequence.parse(s)
    mch = Matching(s.m, s.n, s.signs)
    _check_noncrossing(mch)
    return mch


def to_signs(mch: Matching) -> SignSequence:
    chars = ["+"] * mch.size
    for minus, _ in mch.cups:
        chars[minus] = "-"
    return SignSequence(mch.m, mch.n, "".join(chars))


def _check_noncrossing(mch: Matching) -> None:
    spans = [set(mch.cup_span(c)) for c in mch.cups]
    for a, b in itertools.combinations(spans, 2):
        if not (a <= b or b <= a or not a & b):
            raise InternalInvariant(f"crossing cups in {mch.signs!r}")
    for r in mch.rays:
        for c, sp in zip(mch.cups, spans):
            if r in sp:
                raise InternalInvariant(f"ray {r} inside cup {c} in {mch.signs!r}")


def enumerate_matchings(m: int, n: int) -> list[Matching]:
    """All of Cross(m, n), in lexicographic sign order ('+' before '-')."""
    size = m + 2 * n
    out = []
    for minus in itertools.combinations(range(size), n):
        chars = ["+"] * size
        for p in minus:
            chars[p] = "-"
        out.append("".join(chars))
    return [Matching(m, n, s) for s in sorted(out)]


def cup_decomposition(mch: Matching) -> TangleWord:
    """A word of ``n`` cups building ``mch`` from the ``m`` rays.

    Innermost cups are peeled off one at a time; the word lists the last peeled
    cup first, since it is the first one to be created.
    """
    signs = mch.signs
    peeled = []
    while "-" in signs:
        size = len(signs)
        p = next(
            (q for q in range(size) if signs[q] == "-" and signs[(q + 1) % size] == "+"),
            None,
        )
        if p is None:
            raise InternalInvariant(f"no innermost cup in {signs!r}")
        if p + 1 < size:
            peeled.append(cup(p + 1, size))
            signs = signs[:p] + signs[p + 2:]
        else:
            # the wrap cup g^N joins N-1 to 0; inner point 0 sits at N-2
            peeled.append(cup(size, size))
            signs = signs[size - 2] + signs[1:size - 2]
    return TangleWord(mch.m, mch.size, list(reversed(peeled)))

"""Concrete annular realizations of matchings and their two-layer composites.

A composite ``alpha^ o beta`` is drawn on three square circles: the inner
boundary at radius 1, the glue circle at radius 2 carrying the ``m + 2n``
points, and the outer boundary at radius 3.  ``beta`` lives between 1 and 2
(its cups hang inward from the glue circle), the inverted ``alpha`` between 2
and 3 (its caps bulge outward).  Loops are traced combinatorially; polylines
are only used to decide which loops sit inside which.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import GeometryDegenerate, InternalInvariant, InvalidGenerator, MixedContext
from .geometry import GRID64, ROUTERS, Point, Router, cup_polyline, point_in_polygon, radial_polyline
from .matchings import Matching
from .tangles import Kind, TangleWord

Node = Hashable


@dataclass(frozen=True)
class Strand:
    ends: tuple[Node, Node]
    displacement: int  # signed, in units of 1/size turns, traversed ends[0] -> ends[1]
    polyline: tuple[Point, ...]

    def reversed(self) -> Strand:
        return Strand((self.ends[1], self.ends[0]), -self.displacement, self.polyline[::-1])


@dataclass(frozen=True)
class Loop:
    strands: tuple[Strand, ...]  # consecutive, each oriented along the traversal
    winding: int

    @property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(s.ends[0] for s in self.strands)

    def polygon(self) -> list[Point]:
        pts: list[Point] = []
        for s in self.strands:
            pts.extend(s.polyline[1:])
        return pts


@dataclass(frozen=True)
class Path:
    """An open strand chain between two boundary points."""

    strands: tuple[Strand, ...]

    @property
    def ends(self) -> tuple[Node, Node]:
        return self.strands[0].ends[0], self.strands[-1].ends[1]

    @property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(s.ends[0] for s in self.strands) + (self.strands[-1].ends[1],)


def trace(strands: Iterable[Strand], boundary: Iterable[Node], size: int) -> tuple[list[Path], list[Loop]]:
    """Split a 1-manifold given by strands into open paths and closed loops.

    Boundary nodes have degree one, every other node degree two.
    """
    incident: dict[Node, list[tuple[int, bool]]] = defaultdict(list)
    strands = list(strands)
    for k, s in enumerate(strands):
        incident[s.ends[0]].append((k, True))
        incident[s.ends[1]].append((k, False))
    boundary = [b for b in boundary if b in incident]
    for node, inc in incident.items():
        want = 1 if node in boundary else 2
        if len(inc) != want:
            raise InternalInvariant(f"node {node!r} has degree {len(inc)}, expected {want}")

    used = [False] * len(strands)

    def walk(node: Node, first: tuple[int, bool]) -> list[Strand]:
        out = []
        k, fwd = first
        while True:
            used[k] = True
            s = strands[k] if fwd else strands[k].reversed()
            out.append(s)
            node = s.ends[1]
            nxt = [(j, f) for j, f in incident[node] if not used[j]]
            if not nxt:
                return out
            k, fwd = nxt[0]

    paths = []
    for b in boundary:
        k, fwd = incident[b][0]
        if not used[k]:
            paths.append(Path(tuple(walk(b, (k, fwd)))))
    loops = []
    for k in range(len(strands)):
        if used[k]:
            continue
        chain = walk(strands[k].ends[0], (k, True))
        total = sum(s.displacement for s in chain)
        if total % size:
            raise InternalInvariant(f"loop displacement {total} is not a multiple of {size}")
        loops.append(Loop(tuple(chain), total // size))
    return paths, loops


# -- matching layers -----------------------------------------------------------

def cup_heights(mch: Matching) -> dict[tuple[int, int], int]:
    """1 + the largest height of a cup nested strictly inside, per cup."""
    spans = {c: set(mch.cup_span(c)) for c in mch.cups}
    heights: dict[tuple[int, int], int] = {}
    for c in sorted(mch.cups, key=lambda c: len(spans[c])):
        inner = [heights[d] for d in heights if spans[d] < spans[c]]
        heights[c] = 1 + max(inner, default=0)
    return heights


def cup_strands(mch: Matching, glue: Fraction, sign: int, level, router: Router) -> list[Strand]:
    """Cups of ``mch`` drawn on the glue circle ``level`` toward ``sign``."""
    size = mch.size
    heights = cup_heights(mch)
    out = []
    for a, b in mch.cups:
        poly = cup_polyline(router, glue, sign, heights[(a, b)], mch.n, a, b, size)
        out.append(Strand((("G", level, a), ("G", level, b)), (b - a) % size, tuple(poly)))
    return out


def ray_strands(mch: Matching, glue: Fraction, level, rim: Fraction, side: str) -> list[Strand]:
    """Radial strands from the rays of ``mch`` to the boundary circle ``side``."""
    out = []
    for k, r in enumerate(mch.rays):
        poly = radial_polyline(glue, rim, Fraction(r, mch.size))
        out.append(Strand((("G", level, r), (side, k)), 0, tuple(poly)))
    return out


# -- composites ----------------------------------------------------------------

@dataclass(frozen=True)
class CompositeDiagram:
    m: int
    n: int
    alpha: Matching
    beta: Matching
    loops: tuple[Loop, ...]
    throughs: tuple[Path, ...]
    open_pairs: tuple = field(default=())
    router: str = GRID64.name

    @property
    def size(self) -> int:
        return self.m + 2 * self.n

    @property
    def bad(self) -> bool:
        return any(p.ends[0][0] == p.ends[1][0] for p in self.throughs)


def loop_sort_key(loop: Loop) -> tuple[bool, int]:
    glue = [node[-1] for node in loop.nodes if node[0] == "G"]
    return (loop.winding != 0, min(glue))


def compose_matchings(alpha: Matching, beta: Matching, router: str | Router = GRID64) -> CompositeDiagram:
    """The m-link obtained by gluing ``beta`` (inside) to the inverted ``alpha`` (outside)."""
    if (alpha.m, alpha.n) != (beta.m, beta.n):
        raise MixedContext(f"matchings over ({alpha.m},{alpha.n}) and ({beta.m},{beta.n})")
    if isinstance(router, str):
        router = ROUTERS[router]
    two, one, three = Fraction(2), Fraction(1), Fraction(3)
    strands = (
        cup_strands(beta, two, -1, 0, router)
        + ray_strands(beta, two, 0, one, "I")
        + cup_strands(alpha, two, +1, 0, router)
        + ray_strands(alpha, two, 0, three, "O")
    )
    boundary = [("I", k) for k in range(beta.m)] + [("O", k) for k in range(alpha.m)]
    paths, loops = trace(strands, boundary, alpha.size)
    for lp in loops:
        if lp.winding not in (-1, 0, 1):
            raise InternalInvariant(f"loop winding {lp.winding} outside {{-1,0,1}}")
    loops.sort(key=loop_sort_key)
    return CompositeDiagram(alpha.m, alpha.n, alpha, beta, tuple(loops), tuple(paths), (), router.name)


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class Bad:
    def __str__(self):
        return "Bad"


@dataclass(frozen=True)
class Good:
    omega: int
    omega0: int

    def __str__(self):
        return f"Good({self.omega},{self.omega0})"


MLinkClass = Bad | Good


def classify(d: CompositeDiagram) -> MLinkClass:
    if d.open_pairs:
        raise ValueError("diagram still has open surgery pairs")
    if d.bad:
        return Bad()
    omega = sum(1 for lp in d.loops if lp.winding == 0)
    omega0 = len(d.loops) - omega
    if d.m > 0 and omega0:
        raise InternalInvariant("a good m-link with m > 0 has a loop around the hole")
    return Good(omega, omega0)


# -- Laurent polynomials -------------------------------------------------------

class Laurent:
    """Integer Laurent polynomial in ``q``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> Laurent:
        return cls({e: c})

    def __mul__(self, other: Laurent) -> Laurent:
        out: dict[int, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] += c1 * c2
        return Laurent(out)

    def __pow__(self, k: int) -> Laurent:
        out = Laurent({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, q: int) -> int:
        if q == 0 and any(e < 0 for e in self.terms):
            raise ZeroDivisionError("negative power of q at q = 0")
        val = sum((Fraction(q) ** e * c for e, c in self.terms.items()), Fraction(0))
        if val.denominator != 1:
            raise ValueError(f"{self} is not integral at q = {q}")
        return int(val)

    def total(self) -> int:
        return sum(self.terms.values())

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                body = str(abs(c))
            else:
                body = (str(abs(c)) if abs(c) != 1 else "") + mono
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


def ext_poincare(alpha: Matching, beta: Matching) -> Laurent:
    """Graded dimension of Ext between the two irreducibles, as a polynomial in q."""
    cls = classify(compose_matchings(alpha, beta))
    if isinstance(cls, Bad):
        return Laurent()
    lam = Laurent({1: 1, -1: 1})
    return Laurent.monomial(alpha.n) * lam ** cls.omega * Laurent.monomial(0, 2 ** cls.omega0)


# -- nesting ---------------------------------------------------------------------

def nesting_forest(d: CompositeDiagram | Sequence[Loop]) -> dict[int, int | None]:
    """Parent of each winding-0 loop (index into the loop list), or None for roots.

    The parent is the smallest winding-0 loop whose polygon strictly contains
    the child; containment is tested exactly on one vertex of the child.
    """
    loops = list(d.loops if isinstance(d, CompositeDiagram) else d)
    flat = [k for k, lp in enumerate(loops) if lp.winding == 0]
    polys = {k: loops[k].polygon() for k in flat}
    inside: dict[int, set[int]] = {k: set() for k in flat}
    for a in flat:
        probe = polys[a][0]
        for b in flat:
            if a != b and point_in_polygon(probe, polys[b]):
                inside[a].add(b)
    parent: dict[int, int | None] = {}
    for a in flat:
        if not inside[a]:
            parent[a] = None
            continue
        # the smallest container is the one contained in all the others
        best = max(inside[a], key=lambda b: len(inside[b]))
        if inside[a] - {best} != inside[best]:
            raise GeometryDegenerate(f"containment is not a chain above loop {a}")
        parent[a] = best
    return parent


# -- evaluating cup words ----------------------------------------------------------

def evaluate(word: TangleWord, m: int) -> Matching:
    """The matching drawn by a word of cups and rotations applied to ``m`` rays."""
    if word.source_size != m:
        raise ValueError(f"word starts at {word.source_size} points, not {m}")
    cups: list[tuple[int, int]] = []
    size = m
    for g in word.gens:
        if g.kind is Kind.CUP:
            new = g.out_size
            if g.index < new:
                i = g.index

                def move(q, i=i):
                    return q if q < i - 1 else q + 2

                fresh = (i - 1, i)
            else:
                def move(q, new=new):
                    return ((q - 1) % (new - 2)) + 1

                fresh = (new - 1, 0)
            cups = [(move(a), move(b)) for a, b in cups] + [fresh]
            size = new
        elif g.kind in (Kind.ROT_CW, Kind.ROT_CCW):
            shift = -1 if g.kind is Kind.ROT_CW else 1
            cups = [((a + shift) % size, (b + shift) % size) for a, b in cups]
        else:
            raise InvalidGenerator(f"{g!r} is not a cup or rotation")
    chars = ["+"] * size
    for a, _ in cups:
        chars[a] = "-"
    mch = Matching(m, len(cups), "".join(chars))
    if sorted(cups) != sorted(mch.cups):
        raise InternalInvariant(f"cups {sorted(cups)} do not form the matching {mch.signs!r}")
    return mch

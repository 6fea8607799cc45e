"""The annular arc algebra and its surgery multiplication.

A basis diagram ``(alpha, beta, labels)`` is a good m-link ``alpha^ o beta`` whose
loops carry labels: ``1`` (degree -1) or ``X`` (degree +1) on ordinary circles,
``Y1`` or ``Y2`` (degree 0) on 0-circles, the loops that go around the hole.
The degree of a diagram is ``n`` plus the sum of its label degrees.

The product of ``(alpha, beta, L1)`` and ``(beta, gamma, L2)`` stacks the two
m-links and replaces, one cup of ``beta`` at a time, the cap/cup pair in the
middle by two radial lines.  Every such surgery merges or splits components,
and the labels are transformed by a fixed local rule.  Radii of the stack:

    1 .. 2   gamma           (cups hang inward from the lower glue circle)
    2        lower glue circle
    2 .. 3   inverted beta   ("hills", caps bulging outward)
    3 .. 4   beta            ("valleys", cups hanging inward)
    4        upper glue circle
    4 .. 5   inverted alpha
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .diagram import (
    Good,
    Loop,
    Path,
    Strand,
    classify,
    compose_matchings,
    cup_strands,
    ext_poincare,
    nesting_forest,
    trace,
)
from .errors import ConjectureViolation, InternalInvariant, MixedContext, NoSupport, RuleGap
from .geometry import GRID64, point_in_polygon, radial_polyline
from .matchings import Matching, enumerate_matchings

GRADING = {"1": -1, "X": 1, "Y1": 0, "Y2": 0}
CIRCLE_LABELS = ("1", "X")
ZERO_CIRCLE_LABELS = ("Y1", "Y2")

LOWER, UPPER = "L", "U"


class _Mixed:
    def __repr__(self):
        return "MIXED"


MIXED = _Mixed()


@dataclass(frozen=True)
class BasisDiagram:
    alpha: Matching
    beta: Matching
    labels: tuple[str, ...]

    def __post_init__(self):
        if (self.alpha.m, self.alpha.n) != (self.beta.m, self.beta.n):
            raise MixedContext("alpha and beta have different (m, n)")
        cls = classify(compose_matchings(self.alpha, self.beta))
        if not isinstance(cls, Good):
            raise ValueError(f"({self.alpha}, {self.beta}) is a bad m-link")
        loops = _loops(self.alpha, self.beta)
        if len(self.labels) != len(loops):
            raise ValueError(f"expected {len(loops)} labels, got {len(self.labels)}")
        for lab, lp in zip(self.labels, loops):
            allowed = CIRCLE_LABELS if lp.winding == 0 else ZERO_CIRCLE_LABELS
            if lab not in allowed:
                raise ValueError(f"label {lab!r} on a loop of winding {lp.winding}")

    @property
    def m(self) -> int:
        return self.alpha.m

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def degree(self) -> int:
        return self.n + sum(GRADING[lab] for lab in self.labels)

    def to_json(self) -> dict:
        return {"alpha": self.alpha.signs, "beta": self.beta.signs, "labels": list(self.labels)}

    @classmethod
    def from_json(cls, obj: dict) -> BasisDiagram:
        from .matchings import from_signs

        return cls(from_signs(obj["alpha"]), from_signs(obj["beta"]), tuple(obj["labels"]))

    def __str__(self):
        return f"({self.alpha},{self.beta},{','.join(self.labels)})"


@lru_cache(maxsize=None)
def _loops(alpha: Matching, beta: Matching) -> tuple[Loop, ...]:
    return compose_matchings(alpha, beta).loops


def _loop_positions(loop: Loop) -> frozenset[int]:
    return frozenset(node[-1] for node in loop.nodes if node[0] == "G")


class ArcAlgebraElement:
    """Finite integer combination of basis diagrams over a fixed (m, n)."""

    __slots__ = ("m", "n", "coeffs")

    def __init__(self, m: int, n: int, coeffs: dict[BasisDiagram, int] | None = None):
        self.m, self.n = m, n
        self.coeffs: dict[BasisDiagram, int] = {}
        for b, c in (coeffs or {}).items():
            if (b.m, b.n) != (m, n):
                raise MixedContext(f"diagram over ({b.m},{b.n}) in an element over ({m},{n})")
            if c:
                self.coeffs[b] = c

    @classmethod
    def of(cls, b: BasisDiagram, c: int = 1) -> ArcAlgebraElement:
        return cls(b.m, b.n, {b: c})

    @classmethod
    def zero(cls, m: int, n: int) -> ArcAlgebraElement:
        return cls(m, n)

    def _check(self, other: ArcAlgebraElement) -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise MixedContext(f"({self.m},{self.n}) vs ({other.m},{other.n})")

    def __add__(self, other: ArcAlgebraElement) -> ArcAlgebraElement:
        self._check(other)
        out = defaultdict(int, self.coeffs)
        for b, c in other.coeffs.items():
            out[b] += c
        return ArcAlgebraElement(self.m, self.n, out)

    def __neg__(self) -> ArcAlgebraElement:
        return ArcAlgebraElement(self.m, self.n, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: ArcAlgebraElement) -> ArcAlgebraElement:
        return self + (-other)

    def __rmul__(self, k: int) -> ArcAlgebraElement:
        return ArcAlgebraElement(self.m, self.n, {b: k * c for b, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, ArcAlgebraElement)
            and (self.m, self.n) == (other.m, other.n)
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def terms(self) -> list[tuple[BasisDiagram, int]]:
        return sorted(self.coeffs.items(), key=lambda t: _basis_key(t[0]))

    def to_json_lines(self) -> list[str]:
        return [json.dumps({**b.to_json(), "coeff": c}) for b, c in self.terms()]

    def __repr__(self):
        if not self.coeffs:
            return f"ArcAlgebraElement({self.m},{self.n}, 0)"
        body = " + ".join(f"{c}*{b}" for b, c in self.terms())
        return f"ArcAlgebraElement({self.m},{self.n}, {body})"


def _basis_key(b: BasisDiagram):
    return (b.alpha.signs, b.beta.signs, b.labels)


def label_choices(alpha: Matching, beta: Matching) -> list[tuple[str, ...]]:
    if not isinstance(classify(compose_matchings(alpha, beta)), Good):
        return []
    pools = [CIRCLE_LABELS if lp.winding == 0 else ZERO_CIRCLE_LABELS for lp in _loops(alpha, beta)]
    return list(itertools.product(*pools))


@lru_cache(maxsize=None)
def basis(m: int, n: int) -> tuple[BasisDiagram, ...]:
    out = []
    for a in enumerate_matchings(m, n):
        for b in enumerate_matchings(m, n):
            out.extend(BasisDiagram(a, b, labels) for labels in label_choices(a, b))
    return tuple(out)


def identity_element(m: int, n: int) -> ArcAlgebraElement:
    out = {}
    for a in enumerate_matchings(m, n):
        labels = tuple("1" for _ in _loops(a, a))
        out[BasisDiagram(a, a, labels)] = 1
    return ArcAlgebraElement(m, n, out)


def degree(x: ArcAlgebraElement):
    """Common degree of the support, or ``MIXED``; the zero element has none."""
    if not x.coeffs:
        raise NoSupport("the zero element has no degree")
    degs = {b.degree for b in x.coeffs}
    return degs.pop() if len(degs) == 1 else MIXED


# -- the surgery stack ---------------------------------------------------------

R1, R2, R3, R4, R5 = (Fraction(k) for k in range(1, 6))


def _radial(level_from, p: int, size: int, r_from: Fraction, r_to: Fraction, node_to) -> Strand:
    return Strand((level_from, node_to), 0, tuple(radial_polyline(r_from, r_to, Fraction(p, size))))


def _build_stack(alpha: Matching, beta: Matching, gamma: Matching):
    size = alpha.size
    strands: dict = {}
    for s in cup_strands(gamma, R2, -1, LOWER, GRID64):
        strands[("gamma",) + s.ends] = s
    for k, r in enumerate(gamma.rays):
        strands[("gamma-ray", r)] = _radial(("G", LOWER, r), r, size, R2, R1, ("I", k))
    for s in cup_strands(beta, R2, +1, LOWER, GRID64):
        strands[("hill", s.ends[0][2])] = s
    for s in cup_strands(beta, R4, -1, UPPER, GRID64):
        strands[("valley", s.ends[0][2])] = s
    for r in beta.rays:
        strands[("beta-ray", r)] = _radial(("G", LOWER, r), r, size, R2, R4, ("G", UPPER, r))
    for s in cup_strands(alpha, R4, +1, UPPER, GRID64):
        strands[("alpha",) + s.ends] = s
    for k, r in enumerate(alpha.rays):
        strands[("alpha-ray", r)] = _radial(("G", UPPER, r), r, size, R4, R5, ("O", k))
    return strands


def _boundary(m: int) -> list:
    return [("I", k) for k in range(m)] + [("O", k) for k in range(m)]


def _components(strands: dict, m: int, size: int):
    paths, loops = trace(strands.values(), _boundary(m), size)
    return paths, loops


def _comp_key(c) -> frozenset:
    return frozenset(c.nodes)


def _kind(c) -> str:
    if isinstance(c, Path):
        return "line" if c.ends[0][0] != c.ends[1][0] else "arc"
    return "circle" if c.winding == 0 else "zero"


def _containing(comps, node):
    for c in comps:
        if node in c.nodes:
            return c
    raise InternalInvariant(f"node {node!r} is on no component")


def _outer_first(a: Loop, b: Loop) -> tuple[Loop, Loop, bool]:
    """Order two disjoint loops as (outer, inner); the flag says whether they are nested."""
    if a.winding == 0 and b.winding == 0:
        forest = nesting_forest([a, b])
        if forest[1] == 0:
            return a, b, True
        if forest[0] == 1:
            return b, a, True
        return a, b, False
    # two loops around the hole are always nested
    if point_in_polygon(b.polygon()[0], a.polygon()):
        return a, b, True
    return b, a, True


# Label transformations.  Two-factor labels are ordered (outer, inner) for
# nested loops and (circle, 0-circle) otherwise.  Each returns a list of (labels of the new components, coefficient).

_MERGE_DISJOINT = {("1", "1"): [("1", 1)], ("1", "X"): [("X", 1)], ("X", "1"): [("X", 1)], ("X", "X"): []}
_MERGE_NESTED = {("1", "1"): [("1", 1)], ("1", "X"): [("X", -1)], ("X", "1"): [("X", 1)], ("X", "X"): []}
_SPLIT_DISJOINT = {"1": [(("1", "X"), 1), (("X", "1"), 1)], "X": [(("X", "X"), 1)]}
_SPLIT_NESTED = {"1": [(("1", "X"), -1), (("X", "1"), 1)], "X": [(("X", "X"), 1)]}
_SPLIT_ZEROS = {"1": [(("Y1", "Y2"), 1), (("Y2", "Y1"), -1)], "X": []}
_MERGE_ZEROS = {("Y1", "Y2"): [("X", 1)], ("Y2", "Y1"): [("X", -1)], ("Y1", "Y1"): [], ("Y2", "Y2"): []}


class _Step:
    """One surgery, resolved to a linear map on label assignments."""

    def __init__(self, before: list, after: list, m: int):
        self.before = before
        self.after = after
        self.rule, self.order_in, self.order_out = self._resolve(m)

    def _resolve(self, m: int):
        before, after = self.before, self.after
        kb = sorted(_kind(c) for c in before)
        ka = sorted(_kind(c) for c in after)
        if any(k == "zero" for k in kb + ka) and m > 0:
            raise RuleGap(f"a loop around the hole meets a line: {kb} -> {ka}")
        if "arc" in kb or "arc" in ka:
            return "zero", before, after
        if len(before) == 2 and len(after) == 1:
            a, b = before
            if kb == ["circle", "circle"]:
                outer, inner, nested = _outer_first(a, b)
                return ("merge-nested" if nested else "merge-disjoint"), [outer, inner], after
            if kb == ["circle", "zero"]:
                circ = a if _kind(a) == "circle" else b
                return "merge-circle-zero", [circ, b if circ is a else a], after
            if kb == ["zero", "zero"] and ka == ["circle"]:
                outer, inner, _ = _outer_first(a, b)
                return "merge-zeros", [outer, inner], after
            if kb == ["circle", "line"]:
                circ = a if _kind(a) == "circle" else b
                return "merge-line-circle", [circ], after
        if len(before) == 1 and len(after) == 2:
            a, b = after
            kind = kb[0]
            if kind == "circle" and ka == ["circle", "circle"]:
                outer, inner, nested = _outer_first(a, b)
                return ("split-nested" if nested else "split-disjoint"), before, [outer, inner]
            if kind == "circle" and ka == ["zero", "zero"]:
                outer, inner, _ = _outer_first(a, b)
                return "split-zeros", before, [outer, inner]
            if kind == "zero" and ka == ["circle", "zero"]:
                circ = a if _kind(a) == "circle" else b
                return "split-zero", before, [circ, b if circ is a else a]
            if kind == "line" and ka == ["circle", "line"]:
                circ = a if _kind(a) == "circle" else b
                return "split-line", before, [circ]
        if kb == ka and set(kb) == {"line"}:
            # lines into lines keeps the label degree, so the graded map is zero
            return "zero", before, after
        raise RuleGap(f"no surgery rule for {kb} -> {ka}")

    def apply(self, labels: tuple[str, ...]) -> list[tuple[tuple[str, ...], int]]:
        rule = self.rule
        if rule == "zero":
            return []
        if rule in ("merge-disjoint", "merge-nested"):
            table = _MERGE_DISJOINT if rule == "merge-disjoint" else _MERGE_NESTED
            return [((lab,), c) for lab, c in table[labels]]
        if rule == "merge-circle-zero":
            circ, y = labels
            return [((y,), 1)] if circ == "1" else []
        if rule == "merge-zeros":
            return [((lab,), c) for lab, c in _MERGE_ZEROS[labels]]
        if rule == "merge-line-circle":
            return [((), 1)] if labels[0] == "1" else []
        if rule in ("split-disjoint", "split-nested"):
            table = _SPLIT_DISJOINT if rule == "split-disjoint" else _SPLIT_NESTED
            return table[labels[0]]
        if rule == "split-zeros":
            return _SPLIT_ZEROS[labels[0]]
        if rule == "split-zero":
            return [(("X", labels[0]), 1)]
        if rule == "split-line":
            return [(("X",), 1)]
        raise InternalInvariant(f"unknown rule {rule}")


def beta_cup_poset(beta: Matching) -> dict[tuple[int, int], set[tuple[int, int]]]:
    """For each cup of ``beta`` the cups whose span strictly contains it."""
    spans = {c: set(beta.cup_span(c)) for c in beta.cups}
    return {c: {d for d in beta.cups if d != c and spans[c] < spans[d]} for c in beta.cups}


def canonical_order(beta: Matching) -> tuple[tuple[int, int], ...]:
    """Outermost cups first, ties broken by the minus position."""
    above = beta_cup_poset(beta)
    return tuple(sorted(beta.cups, key=lambda c: (len(above[c]), c[0])))


def surgery_orders(beta: Matching) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every order that surgers each cup after all cups enclosing it."""
    above = beta_cup_poset(beta)

    def rec(done: tuple, left: frozenset):
        if not left:
            yield done
            return
        for c in sorted(left):
            if above[c] <= set(done):
                yield from rec(done + (c,), left - {c})

    yield from rec((), frozenset(beta.cups))


@lru_cache(maxsize=None)
def _product_basis(x: BasisDiagram, y: BasisDiagram, order: tuple | None = None) -> tuple[tuple[BasisDiagram, int], ...]:
    alpha, beta, gamma = x.alpha, x.beta, y.beta
    m, size = alpha.m, alpha.size
    if order is None:
        order = canonical_order(beta)
    strands = _build_stack(alpha, beta, gamma)
    paths, loops = _components(strands, m, size)

    state: dict[frozenset, int] = {}
    labels: dict[frozenset, str] = {}
    for lab, lp in zip(x.labels, _loops(alpha, beta)):
        pos = _loop_positions(lp)
        labels[_find_loop(loops, UPPER, pos)] = lab
    for lab, lp in zip(y.labels, _loops(beta, gamma)):
        pos = _loop_positions(lp)
        labels[_find_loop(loops, LOWER, pos)] = lab
    state[frozenset(labels.items())] = 1

    for a, b in order:
        before_comps = paths + loops
        hill = strands[("hill", a)]
        valley = strands[("valley", a)]
        before = _unique([_containing(before_comps, hill.ends[0]), _containing(before_comps, valley.ends[0])])
        del strands[("hill", a)], strands[("valley", a)]
        for p in (a, b):
            strands[("surgery", p)] = _radial(("G", LOWER, p), p, size, R2, R4, ("G", UPPER, p))
        paths, loops = _components(strands, m, size)
        after_comps = paths + loops
        after = _unique([_containing(after_comps, ("G", LOWER, a)), _containing(after_comps, ("G", LOWER, b))])
        step = _Step(before, after, m)

        new_state: dict[frozenset, int] = defaultdict(int)
        in_keys = [_comp_key(c) for c in step.order_in if not isinstance(c, Path)]
        out_keys = [_comp_key(c) for c in step.order_out if not isinstance(c, Path)]
        drop = {_comp_key(c) for c in before}
        for assignment, coeff in state.items():
            amap = dict(assignment)
            ins = tuple(amap[k] for k in in_keys)
            rest = {k: v for k, v in amap.items() if k not in drop}
            for outs, c in step.apply(ins):
                new = dict(rest)
                new.update(zip(out_keys, outs))
                new_state[frozenset(new.items())] += coeff * c
        state = {k: v for k, v in new_state.items() if v}
        if not state:
            return ()

    if any(_kind(p) == "arc" for p in paths):
        return ()
    final_loops = _loops(alpha, gamma)
    keys = []
    for lp in final_loops:
        keys.append(_find_loop(loops, UPPER, _loop_positions(lp)))
    if len(keys) != len(loops):
        raise InternalInvariant("surgery result does not match the composite of alpha and gamma")
    out = []
    for assignment, coeff in state.items():
        amap = dict(assignment)
        out.append((BasisDiagram(alpha, gamma, tuple(amap[k] for k in keys)), coeff))
    return tuple(sorted(out, key=lambda t: _basis_key(t[0])))


def _unique(comps: list) -> list:
    out = []
    for c in comps:
        if all(c is not d for d in out):
            out.append(c)
    return out


def _find_loop(loops: Iterable[Loop], level: str, positions: frozenset[int]) -> frozenset:
    for lp in loops:
        pos = frozenset(node[2] for node in lp.nodes if node[0] == "G" and node[1] == level)
        if pos == positions:
            return _comp_key(lp)
    raise InternalInvariant(f"no loop through {sorted(positions)} on the {level} circle")


def multiply_basis(x: BasisDiagram, y: BasisDiagram, check_orders: bool = False) -> ArcAlgebraElement:
    if (x.m, x.n) != (y.m, y.n):
        raise MixedContext(f"({x.m},{x.n}) vs ({y.m},{y.n})")
    if x.beta != y.alpha:
        return ArcAlgebraElement.zero(x.m, x.n)
    result = _product_basis(x, y)
    if check_orders:
        for order in surgery_orders(x.beta):
            other = _product_basis(x, y, order)
            if other != result:
                raise ConjectureViolation(
                    json.dumps({"x": x.to_json(), "y": y.to_json(), "order": [list(c) for c in order]})
                )
    return ArcAlgebraElement(x.m, x.n, dict(result))


def multiply(x: ArcAlgebraElement, y: ArcAlgebraElement, check_orders: bool = False) -> ArcAlgebraElement:
    x._check(y)
    out: dict[BasisDiagram, int] = defaultdict(int)
    for bx, cx in x.coeffs.items():
        for by, cy in y.coeffs.items():
            if bx.beta != by.alpha:
                continue
            for b, c in multiply_basis(bx, by, check_orders).coeffs.items():
                out[b] += cx * cy * c
    return ArcAlgebraElement(x.m, x.n, out)


# -- property suites -----------------------------------------------------------

@dataclass(frozen=True)
class SuiteResult:
    suite: str
    m: int
    n: int
    passed: bool
    checked: int
    counterexample: dict | None = None


def _pairs(m: int, n: int):
    B = basis(m, n)
    for x in B:
        for y in B:
            if x.beta == y.alpha:
                yield x, y


def check_order(m: int, n: int) -> SuiteResult:
    count = 0
    for x, y in _pairs(m, n):
        count += 1
        try:
            multiply_basis(x, y, check_orders=True)
        except ConjectureViolation as exc:
            return SuiteResult("order", m, n, False, count, json.loads(str(exc)))
    return SuiteResult("order", m, n, True, count)


def check_assoc(m: int, n: int) -> SuiteResult:
    B = basis(m, n)
    by_alpha = defaultdict(list)
    for b in B:
        by_alpha[b.alpha].append(b)
    count = 0
    for x in B:
        for y in by_alpha[x.beta]:
            xy = multiply_basis(x, y)
            for z in by_alpha[y.beta]:
                count += 1
                left = multiply(xy, ArcAlgebraElement.of(z))
                right = multiply(ArcAlgebraElement.of(x), multiply_basis(y, z))
                if left != right:
                    return SuiteResult("assoc", m, n, False, count, {
                        "x": x.to_json(), "y": y.to_json(), "z": z.to_json(),
                        "left": [json.loads(s) for s in left.to_json_lines()],
                        "right": [json.loads(s) for s in right.to_json_lines()],
                    })
    return SuiteResult("assoc", m, n, True, count)


def check_unit(m: int, n: int) -> SuiteResult:
    e = identity_element(m, n)
    count = 0
    for b in basis(m, n):
        count += 1
        x = ArcAlgebraElement.of(b)
        left, right = multiply(e, x), multiply(x, e)
        if left != x or right != x:
            return SuiteResult("unit", m, n, False, count, {
                "b": b.to_json(),
                "e*b": [json.loads(s) for s in left.to_json_lines()],
                "b*e": [json.loads(s) for s in right.to_json_lines()],
            })
    return SuiteResult("unit", m, n, True, count)


def check_degree(m: int, n: int) -> SuiteResult:
    count = 0
    for x, y in _pairs(m, n):
        count += 1
        for b, _ in multiply_basis(x, y).terms():
            if b.degree != x.degree + y.degree:
                return SuiteResult("degree", m, n, False, count, {
                    "x": x.to_json(), "y": y.to_json(), "term": b.to_json(),
                    "expected": x.degree + y.degree, "got": b.degree,
                })
    return SuiteResult("degree", m, n, True, count)


def check_block_ranks(m: int, n: int) -> SuiteResult:
    count = 0
    sizes = defaultdict(int)
    for b in basis(m, n):
        sizes[(b.alpha, b.beta)] += 1
    for a in enumerate_matchings(m, n):
        for c in enumerate_matchings(m, n):
            count += 1
            want = ext_poincare(a, c).total()
            if sizes[(a, c)] != want:
                return SuiteResult("rank", m, n, False, count, {
                    "alpha": a.signs, "beta": c.signs, "rank": sizes[(a, c)], "ext": want,
                })
    return SuiteResult("rank", m, n, True, count)


SUITES = {
    "assoc": check_assoc,
    "unit": check_unit,
    "order": check_order,
    "degree": check_degree,
    "rank": check_block_ranks,
}

"""Decategorified invariant: integer matrices on sl2 tensor powers.

Basis vectors of ``V^{(x)k}`` are sign strings over ``+``/``-`` of length ``k``,
ordered lexicographically with ``+`` first; the string ``s`` sits at index
``int(s, base 2)`` with ``+ -> 0`` and ``- -> 1``.  The weight of a string is
``#plus - #minus``.

Conventions (q = 1):

* cup inserts ``u = v- (x) v+  -  v+ (x) v-`` at two adjacent positions;
* cap pairs ``<v+, v-> = 1``, ``<v-, v+> = -1``, equal signs pair to 0;
  so ``cap o cup = -2`` and the zigzags are identities;
* a crossing of either sense is ``Id + cup o cap`` (which is the flip);
* a framing twist of either sign is ``-Id``;
* ``r`` carries the factor at position ``j`` to ``j - 1`` (cyclically) and is
  multiplied by the global sign ``EPSILON``;
* the wrap ``s`` is ``r o t^1 o ... o t^{n-1}`` so that
  ``r = s o t^{n-1}(2) o ... o t^1(2)``.

All arithmetic is on Python/NumPy integers; entries stay tiny (bounded by
``2**len(word)``), well inside int64.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

import numpy as np

from .errors import ArityMismatch
from .tangles import GenSym, Kind, TangleWord, expand_wrap_indices, invert_diagrammatically

# Sign of the rotation matrix.  Every relation holds for both signs (rotations
# always occur in canceling pairs); +1 is the choice for which the rotation of
# the one-dimensional space at n = 0 is the identity.
EPSILON = 1

Vector = dict[str, int]


def weight(s: str) -> int:
    return s.count("+") - s.count("-")


def weight_basis(k: int, m: int) -> list[str]:
    """Sign strings of length ``k`` with weight ``m``, lexicographic."""
    if (k - m) % 2 or abs(m) > k:
        return []
    minus = (k - m) // 2
    out = []
    for pos in itertools.combinations(range(k), minus):
        chars = ["+"] * k
        for p in pos:
            chars[p] = "-"
        out.append("".join(chars))
    return sorted(out)


def full_basis(k: int) -> list[str]:
    return ["".join(t) for t in itertools.product("+-", repeat=k)]


# -- action on basis strings ---------------------------------------------------

_CAP_PAIRING = {"+-": 1, "-+": -1}


def _cup(s: str, i: int) -> Vector:
    j = i - 1
    return {s[:j] + "-+" + s[j:]: 1, s[:j] + "+-" + s[j:]: -1}


def _cap(s: str, i: int) -> Vector:
    j = i - 1
    c = _CAP_PAIRING.get(s[j:j + 2], 0)
    return {s[:j] + s[j + 2:]: c} if c else {}


def _apply_vec(fn: Callable[[str], Vector], v: Vector) -> Vector:
    out: dict[str, int] = defaultdict(int)
    for s, c in v.items():
        for t, d in fn(s).items():
            out[t] += c * d
    return {t: c for t, c in out.items() if c}


def _crossing(s: str, i: int) -> Vector:
    # Id + cup_i o cap_i
    out: dict[str, int] = defaultdict(int)
    out[s] += 1
    for t, c in _cap(s, i).items():
        for r, d in _cup(t, i).items():
            out[r] += c * d
    return {t: c for t, c in out.items() if c}


def _rot(s: str, cw: bool, eps: int) -> Vector:
    if not s:
        return {s: eps}
    t = s[1:] + s[:1] if cw else s[-1:] + s[:-1]
    return {t: eps}


def _wrap(s: str, eps: int) -> Vector:
    v: Vector = {s: 1}
    n = len(s)
    for i in range(n - 1, 0, -1):
        v = _apply_vec(lambda x, i=i: _crossing(x, i), v)
    return _apply_vec(lambda x: _rot(x, True, eps), v)


def apply_gen(g: GenSym, s: str, eps: int = EPSILON) -> Vector:
    """Image of the basis string ``s`` under a generator with a linear index."""
    if len(s) != g.in_size:
        raise ArityMismatch(f"{g!r} applied to a string of length {len(s)}")
    k = g.kind
    if k is Kind.CUP:
        return _cup(s, g.index)
    if k is Kind.CAP:
        return _cap(s, g.index)
    if k in (Kind.CROSS_OVER, Kind.CROSS_UNDER):
        return _crossing(s, g.index)
    if k in (Kind.TWIST_POS, Kind.TWIST_NEG):
        return {s: -1}
    if k is Kind.ROT_CW:
        return _rot(s, True, eps)
    if k is Kind.ROT_CCW:
        return _rot(s, False, eps)
    return _wrap(s, eps)


def apply_word(w: TangleWord, v: Vector, eps: int = EPSILON) -> Vector:
    for g in expand_wrap_indices(w).gens:
        v = _apply_vec(lambda s, g=g: apply_gen(g, s, eps), v)
    return v


# -- matrices ---------------------------------------------------------------

def _matrix(rows: list[str], cols: list[str], image: Callable[[str], Vector]) -> np.ndarray:
    index = {s: r for r, s in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, s in enumerate(cols):
        for t, x in image(s).items():
            if t not in index:
                raise ArityMismatch(f"image {t!r} leaves the target basis")
            mat[index[t], c] += x
    return mat


def gen_matrix(g: GenSym, k: int, eps: int = EPSILON) -> np.ndarray:
    """Matrix of ``g`` on the full tensor space ``V^{(x)k}``, shape ``2^out x 2^k``."""
    if k != g.in_size:
        raise ArityMismatch(f"{g!r} does not act on {k} points")
    return _gen_matrix(g, eps).copy()


@lru_cache(maxsize=None)
def _gen_matrix(g: GenSym, eps: int) -> np.ndarray:
    word = expand_wrap_indices(TangleWord(g.in_size, g.out_size, (g,)))
    mat = _matrix(full_basis(g.out_size), full_basis(g.in_size),
                  lambda s: apply_word(word, {s: 1}, eps))
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def _gen_sparse(g: GenSym, eps: int) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
    rows, cols = np.nonzero(_gen_matrix(g, eps))
    return 2 ** g.out_size, rows, cols, _gen_matrix(g, eps)[rows, cols]


_FULL_SPACE_LIMIT = 12


def full_matrix(w: TangleWord, eps: int = EPSILON) -> np.ndarray:
    """Product of generator matrices on full tensor spaces."""
    if max(w.sizes()) > _FULL_SPACE_LIMIT:
        raise ValueError(f"full tensor spaces are only built up to {_FULL_SPACE_LIMIT} points")
    mat = np.eye(2 ** w.source_size, dtype=np.int64)
    for g in w.gens:
        dim, rows, cols, vals = _gen_sparse(g, eps)
        out = np.zeros((dim, mat.shape[1]), dtype=np.int64)
        np.add.at(out, rows, vals[:, None] * mat[cols])
        mat = out
    return mat


def psi_hat(w: TangleWord, m: int, eps: int = EPSILON) -> np.ndarray:
    """Matrix of the word between the weight-``m`` subspaces."""
    if (w.source_size - m) % 2 or w.source_size < m or w.target_size < m:
        raise ArityMismatch(f"weight {m} is not available on {w.source_size} -> {w.target_size}")
    rows = weight_basis(w.target_size, m)
    cols = weight_basis(w.source_size, m)
    return _matrix(rows, cols, lambda s: apply_word(w, {s: 1}, eps))


def is_weight_preserving(mat: np.ndarray, k_in: int, k_out: int) -> bool:
    rows = full_basis(k_out)
    cols = full_basis(k_in)
    nz = np.argwhere(mat)
    return all(weight(rows[r]) == weight(cols[c]) for r, c in nz)


# -- Grothendieck-group computations ------------------------------------------

def irreducible_classes(m: int, n: int) -> np.ndarray:
    """Columns are the classes of the cup words of Cross(m, n), in enumeration order."""
    from .matchings import cup_decomposition, enumerate_matchings

    start = {"+" * m: 1}
    rows = weight_basis(m + 2 * n, m)
    cols = []
    for mch in enumerate_matchings(m, n):
        v = apply_word(cup_decomposition(mch), start)
        cols.append([v.get(s, 0) for s in rows])
    return np.array(cols, dtype=np.int64).T.reshape(len(rows), len(cols))


def exact_rank(mat: np.ndarray) -> int:
    """Rank over Q by fraction-free Gaussian elimination on Python ints."""
    a = [[int(x) for x in row] for row in np.asarray(mat)]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(rank + 1, rows):
            for cc in range(c + 1, cols):
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) // prev
            a[r][c] = 0
        prev = a[rank][c]
        rank += 1
    return rank


@dataclass(frozen=True)
class EulerPairingReport:
    m: int
    n: int
    sign: int | None
    passed: bool
    rows: tuple[tuple[str, str, int, int], ...]  # (alpha, beta, s, e)


def link_word(alpha, beta) -> TangleWord:
    """Word for the m-link formed by ``beta`` followed by the inversion of ``alpha``."""
    from .matchings import cup_decomposition
    from .tangles import compose

    return compose(cup_decomposition(beta), invert_diagrammatically(cup_decomposition(alpha)))


def euler_pairing_check(m: int, n: int) -> EulerPairingReport:
    """Compare the link scalar with the Ext Euler characteristic, pair by pair."""
    from .diagram import ext_poincare
    from .matchings import enumerate_matchings

    rows = []
    for a in enumerate_matchings(m, n):
        for b in enumerate_matchings(m, n):
            s = int(psi_hat(link_word(a, b), m)[0, 0])
            e = ext_poincare(a, b).evaluate(-1) * (-1) ** n
            rows.append((a.signs, b.signs, s, e))
    signs = {1 if s == e else -1 for _, _, s, e in rows if s or e}
    ok = all(abs(s) == abs(e) for _, _, s, e in rows) and len(signs) <= 1
    sign = (signs.pop() if signs else 1) if ok else None
    return EulerPairingReport(m, n, sign, ok, tuple(rows))


# -- relation verification ---------------------------------------------------

@dataclass(frozen=True)
class RelationResult:
    rule: str
    label: str
    instances: int
    passes: dict[int, int]  # eps -> number of instances satisfied


def verify_relations(max_size: int, eps_values: Iterable[int] = (1, -1)) -> list[RelationResult]:
    from .relations import relation_corpus

    eps_values = tuple(eps_values)
    counts: dict = {}
    cache: dict = {}

    def mat(w: TangleWord, eps: int) -> np.ndarray:
        key = (w, eps)
        if key not in cache:
            cache[key] = full_matrix(w, eps)
        return cache[key]

    for rel in relation_corpus(max_size):
        entry = counts.setdefault(rel.rule_id, [0, {e: 0 for e in eps_values}])
        entry[0] += 1
        for eps in eps_values:
            if np.array_equal(mat(rel.lhs, eps), mat(rel.rhs, eps)):
                entry[1][eps] += 1
    return [
        RelationResult(rid.value, rid.label, total, passes)
        for rid, (total, passes) in counts.items()
    ]


def satisfying_signs(results: list[RelationResult]) -> list[int]:
    eps_values = results[0].passes.keys() if results else ()
    return [e for e in eps_values if all(r.passes[e] == r.instances for r in results)]


def expected_rank(m: int, n: int) -> int:
    return comb(m + 2 * n, n)

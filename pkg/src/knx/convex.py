"""Exact convex geometry over perturbed rational points.

All polytopes in this package arise as {w_i + eps*lam}: every vertex
carries the same eps-direction, so difference vectors are eps-free,
affine independence is a plain rational rank test, closest points are
affine in eps, and every comparison is a degree-<=2 sign decided in the
limit eps -> 0^-.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded, InternalInconsistency, InvalidParameter
from .linalg import matrix_rank, solve_exact
from .scalars import (
    NEGATIVE,
    EpsScalar,
    EpsVector,
    GramForm,
    Vector,
    pair,
    vec_add,
    vec_scale,
    vec_sub,
)

DEFAULT_VERTEX_CAP = 24


@dataclass(frozen=True)
class Polytope:
    """Convex hull of perturbed points sharing one eps-direction."""

    vertices: tuple[EpsVector, ...]
    form: GramForm

    def __post_init__(self):
        if not self.vertices:
            raise InvalidParameter("polytope needs at least one vertex")
        n = len(self.vertices[0])
        if any(len(v) != n for v in self.vertices):
            raise InvalidParameter("vertices must all have the same length")
        lin = self.vertices[0].lin
        if any(v.lin != lin for v in self.vertices):
            raise InvalidParameter("vertices must share one eps-direction")

    @property
    def eps_direction(self) -> Vector:
        return self.vertices[0].lin


@dataclass(frozen=True)
class MinNormCertificate:
    """Closest point of a polytope to the origin, with its support data.

    coefficients are convex weights on the support: nonnegative for small
    eps < 0, summing to 1 exactly, reproducing the point.  For every
    vertex s the variational inequality pair(point, s - point) >= 0 holds.
    """

    point: EpsVector
    support: tuple[int, ...]
    coefficients: tuple[EpsScalar, ...]


def min_norm_point(P: Polytope, cap: int = DEFAULT_VERTEX_CAP) -> MinNormCertificate:
    """Unique q-closest point of P to the origin, exact in eps.

    Enumerates affinely independent vertex subsets in (size, lex) order
    and accepts the first one whose affine-hull foot point has nonnegative
    convex coefficients and satisfies the variational inequality against
    every vertex.  Uniqueness of the optimum makes the accepted point
    independent of the enumeration order; the order fixes the support.
    """
    _check_cap(P, cap)
    q = P.form
    verts = P.vertices
    dim = len(verts[0])
    for size in range(1, min(len(verts), dim + 1) + 1):
        for support in combinations(range(len(verts)), size):
            got = _affine_foot(verts, support, q)
            if got is None:
                continue
            x, coeffs = got
            if any(c.sign() == NEGATIVE for c in coeffs):
                continue
            if _is_optimal(x, verts, q):
                return MinNormCertificate(x, support, coeffs)
    raise InternalInconsistency("no support certified the minimum-norm point")


def _affine_foot(
    verts: Sequence[EpsVector], support: Sequence[int], q: GramForm
) -> tuple[EpsVector, tuple[EpsScalar, ...]] | None:
    """Closest point of aff{verts[i] : i in support} to 0, or None if the
    support is affinely dependent."""
    base = verts[support[0]]
    diffs = [vec_sub(verts[i].const, base.const) for i in support[1:]]
    if diffs and matrix_rank(diffs) != len(diffs):
        return None
    if not diffs:
        x = base
        return x, (EpsScalar(Fraction(1)),)
    gram = [[q.apply(a, b) for b in diffs] for a in diffs]
    rhs0 = [-q.apply(base.const, d) for d in diffs]
    rhs1 = [-q.apply(base.lin, d) for d in diffs]
    a = solve_exact(gram, rhs0)
    b = solve_exact(gram, rhs1)
    if a is None or b is None:
        raise InternalInconsistency("independent support gave a singular Gram matrix")
    const = base.const
    lin = base.lin
    for ai, bi, d in zip(a, b, diffs):
        const = vec_add(const, vec_scale(ai, d))
        lin = vec_add(lin, vec_scale(bi, d))
    coeffs = [EpsScalar(Fraction(1) - sum(a), -sum(b))]
    coeffs += [EpsScalar(ai, bi) for ai, bi in zip(a, b)]
    return EpsVector(const, lin), tuple(coeffs)


def _is_optimal(x: EpsVector, verts: Sequence[EpsVector], q: GramForm) -> bool:
    return all(pair(x, s - x, q).sign() != NEGATIVE for s in verts)


def hull_contains(p: EpsVector, P: Polytope, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff p lies in conv(P) for all sufficiently small eps < 0.

    Exact feasibility by basic-solution enumeration: if p is in the hull,
    Caratheodory gives an affinely independent support whose (unique)
    affine coefficients are nonnegative in the limit.
    """
    _check_cap(P, cap)
    verts = P.vertices
    lam = P.eps_direction
    dim = len(verts[0])
    n = len(p)
    if n != dim:
        raise InvalidParameter("point length does not match the polytope")
    for size in range(1, min(len(verts), dim + 1) + 1):
        for support in combinations(range(len(verts)), size):
            consts = [verts[i].const for i in support]
            if size > 1:
                diffs = [vec_sub(c, consts[0]) for c in consts[1:]]
                if matrix_rank(diffs) != len(diffs):
                    continue
            # affine system: sum a_i v_i = p_const with sum a_i = 1,
            # and for the eps part sum b_i v_i = p_lin - lam with sum b_i = 0
            rows = [[consts[j][r] for j in range(size)] for r in range(n)]
            rows.append([Fraction(1)] * size)
            a = solve_exact(rows, list(p.const) + [Fraction(1)])
            if a is None:
                continue
            b = solve_exact(rows, list(vec_sub(p.lin, lam)) + [Fraction(0)])
            if b is None:
                continue
            if all(EpsScalar(ai, bi).sign() != NEGATIVE for ai, bi in zip(a, b)):
                return True
    return False


def witnesses_compare(
    p: EpsVector, p_alt: EpsVector, points: Sequence[EpsVector], q: GramForm
) -> bool:
    """True iff p_alt is strictly q-closer than p to every point of S."""
    for s in points:
        d_alt = pair(p_alt - s, p_alt - s, q)
        d_p = pair(p - s, p - s, q)
        if (d_alt - d_p).sign() != NEGATIVE:
            return False
    return True


def _check_cap(P: Polytope, cap: int) -> None:
    if len(P.vertices) > cap:
        raise CapExceeded(f"{len(P.vertices)} vertices exceed the cap of {cap}")

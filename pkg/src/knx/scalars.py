"""Exact scalars and vectors: rationals, epsilon-polynomials, pairings.

Every number on the certification path is a Fraction or a polynomial of
degree <= 2 in a formal infinitesimal eps, compared in the limit
eps -> 0^-.  Degree 2 suffices throughout: points of interest are affine
in eps and squared distances are quadratic.  Exceeding it is a logic bug
and raises DegreeOverflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeOverflow, InvalidParameter
from .linalg import determinant, independent_subset, solve_exact

NEGATIVE, ZERO_SIGN, POSITIVE = -1, 0, 1

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rat(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction.  Floats are rejected outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidParameter("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value.strip()):
            raise InvalidParameter(f"not a rational string: {value!r}")
        return Fraction(value.strip())
    raise InvalidParameter(f"floats and other types are not allowed: {value!r}")


def rat_str(value: Fraction) -> str:
    """Serialize a rational as 'p/q', or 'p' when q=1.  Never a float."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


Vector = tuple[Fraction, ...]


def vector(entries: Iterable) -> Vector:
    return tuple(rat(e) for e in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_zero(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class EpsScalar:
    """c0 + c1*eps + c2*eps^2 with eps a formal negative infinitesimal."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __add__(self, other: "EpsScalar") -> "EpsScalar":
        o = _as_eps(other)
        return EpsScalar(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __sub__(self, other: "EpsScalar") -> "EpsScalar":
        o = _as_eps(other)
        return EpsScalar(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)

    def __neg__(self) -> "EpsScalar":
        return EpsScalar(-self.c0, -self.c1, -self.c2)

    def __mul__(self, other) -> "EpsScalar":
        o = _as_eps(other)
        d3 = self.c1 * o.c2 + self.c2 * o.c1
        d4 = self.c2 * o.c2
        if d3 != 0 or d4 != 0:
            raise DegreeOverflow("product exceeds degree 2 in eps")
        return EpsScalar(
            self.c0 * o.c0,
            self.c0 * o.c1 + self.c1 * o.c0,
            self.c0 * o.c2 + self.c1 * o.c1 + self.c2 * o.c0,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Sign of self(eps) for all sufficiently small eps < 0.

        First nonzero coefficient decides, with the linear term flipped
        (eps < 0) and the quadratic term kept (eps^2 > 0).
        """
        if self.c0 != 0:
            return POSITIVE if self.c0 > 0 else NEGATIVE
        if self.c1 != 0:
            return NEGATIVE if self.c1 > 0 else POSITIVE
        if self.c2 != 0:
            return POSITIVE if self.c2 > 0 else NEGATIVE
        return ZERO_SIGN

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0 and self.c2 == 0

    def evaluate(self, eps0: Fraction) -> Fraction:
        return self.c0 + self.c1 * eps0 + self.c2 * eps0 * eps0


def _as_eps(x) -> EpsScalar:
    if isinstance(x, EpsScalar):
        return x
    return EpsScalar(rat(x))


def eps_scalar(c0=0, c1=0, c2=0) -> EpsScalar:
    return EpsScalar(rat(c0), rat(c1), rat(c2))


def eps_sign(x: EpsScalar) -> int:
    return x.sign()


@dataclass(frozen=True)
class EpsVector:
    """constant + eps * linear, both exact rational vectors of equal length."""

    const: Vector
    lin: Vector

    def __post_init__(self):
        if len(self.const) != len(self.lin):
            raise InvalidParameter("constant and linear parts differ in length")

    def __len__(self) -> int:
        return len(self.const)

    def __sub__(self, other: "EpsVector") -> "EpsVector":
        return EpsVector(vec_sub(self.const, other.const), vec_sub(self.lin, other.lin))

    def __add__(self, other: "EpsVector") -> "EpsVector":
        return EpsVector(vec_add(self.const, other.const), vec_add(self.lin, other.lin))

    def evaluate(self, eps0: Fraction) -> Vector:
        return vec_add(self.const, vec_scale(eps0, self.lin))


def eps_vector(const: Iterable, lin: Iterable | None = None) -> EpsVector:
    c = vector(const)
    l = vector(lin) if lin is not None else vec_zero(len(c))
    return EpsVector(c, l)


@dataclass(frozen=True)
class GramForm:
    """Symmetric positive-definite rational bilinear form (Weyl-invariant q)."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "GramForm":
        return cls(
            tuple(
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GramForm":
        mat = tuple(tuple(rat(x) for x in r) for r in rows)
        n = len(mat)
        if any(len(r) != n for r in mat):
            raise InvalidParameter("form matrix must be square")
        for i in range(n):
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise InvalidParameter("form matrix must be symmetric")
        for k in range(1, n + 1):
            minor = [list(mat[i][:k]) for i in range(k)]
            if determinant(minor) <= 0:
                raise InvalidParameter("form matrix must be positive definite")
        return cls(mat)

    def apply(self, u: Vector, v: Vector) -> Fraction:
        if len(u) != self.rank or len(v) != self.rank:
            raise InvalidParameter("vector length does not match form rank")
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.rows[i]
            total += ui * sum(row[j] * v[j] for j in range(self.rank))
        return total

    def norm2(self, v: Vector) -> Fraction:
        return self.apply(v, v)

    def pair_eps(self, u: EpsVector, v: EpsVector) -> EpsScalar:
        return EpsScalar(
            self.apply(u.const, v.const),
            self.apply(u.const, v.lin) + self.apply(u.lin, v.const),
            self.apply(u.lin, v.lin),
        )


def pair(u: EpsVector, v: EpsVector, q: GramForm) -> EpsScalar:
    """Bilinear form value u^T q v expanded as a polynomial in eps."""
    return q.pair_eps(u, v)


def project_out_span(v: Vector, spanning: Sequence[Vector], q: GramForm) -> Vector:
    """q-orthogonal component of v relative to span(spanning).

    The spanning set may be empty or linearly dependent; the normal
    equations are solved exactly over a maximal independent subset.
    """
    if not spanning:
        return v
    idx = independent_subset(spanning)
    if not idx:
        return v
    basis = [spanning[i] for i in idx]
    gram = [[q.apply(a, b) for b in basis] for a in basis]
    rhs = [q.apply(a, v) for a in basis]
    coeffs = solve_exact(gram, rhs)
    if coeffs is None:  # positive definite q makes the Gram matrix invertible
        raise InvalidParameter("singular Gram matrix for an independent set")
    out = v
    for c, b in zip(coeffs, basis):
        out = vec_sub(out, vec_scale(c, b))
    return out

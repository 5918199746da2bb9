"""Reductive group presets and custom root data.

A group is stored as torus data only: rank, the nonzero weights of the
adjoint action (roots), generating reflections, and the invariant pairing
form.  Weyl groups are never materialized; canonicalization only needs
the reflection action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InternalInconsistency, InvalidParameter, ZeroVector
from .scalars import GramForm, Vector, vec_scale, vec_sub, vector

_CANONICALIZE_ITER_CAP = 100_000


@dataclass(frozen=True)
class GroupData:
    rank: int
    roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    form: GramForm
    label: str = "custom"

    @property
    def is_torus(self) -> bool:
        return not self.roots


def group_data(
    rank: int,
    roots: Sequence[Sequence],
    simple_roots: Sequence[Sequence],
    form: GramForm | Sequence[Sequence] | None = None,
    label: str = "custom",
) -> GroupData:
    """Build and machine-verify a group description."""
    if rank < 1:
        raise InvalidParameter("rank must be >= 1")
    if form is None:
        q = GramForm.identity(rank)
    elif isinstance(form, GramForm):
        q = form
    else:
        q = GramForm.from_rows(form)
    if q.rank != rank:
        raise InvalidParameter("form rank does not match group rank")
    root_vecs = tuple(vector(r) for r in roots)
    simple_vecs = tuple(vector(r) for r in simple_roots)
    for r in root_vecs + simple_vecs:
        if len(r) != rank:
            raise InvalidParameter("root length does not match rank")
        if all(x == 0 for x in r):
            raise InvalidParameter("zero vector is not a root")
    root_set = set(root_vecs)
    for r in root_vecs:
        if tuple(-x for x in r) not in root_set:
            raise InvalidParameter(f"roots not closed under negation: {r}")
    for s in simple_vecs:
        if s not in root_set:
            raise InvalidParameter("every simple root must be a root")
        for r in root_vecs:
            if reflect(r, s, q) not in root_set:
                raise InvalidParameter("a simple reflection does not preserve the roots")
        if not _reflection_preserves_form(s, q, rank):
            raise InvalidParameter("the form is not invariant under a simple reflection")
    return GroupData(rank, root_vecs, simple_vecs, q, label)


def reflect(v: Vector, root: Vector, q: GramForm) -> Vector:
    """v  ->  v - 2 q(v,root)/q(root,root) * root."""
    c = 2 * q.apply(v, root) / q.apply(root, root)
    return vec_sub(v, vec_scale(c, root))


def _reflection_preserves_form(root: Vector, q: GramForm, rank: int) -> bool:
    basis = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(rank)) for i in range(rank)]
    images = [reflect(e, root, q) for e in basis]
    for i in range(rank):
        for j in range(rank):
            if q.apply(images[i], images[j]) != q.apply(basis[i], basis[j]):
                return False
    return True


def torus(rank: int) -> GroupData:
    if rank < 1:
        raise InvalidParameter("rank must be >= 1")
    return GroupData(rank, (), (), GramForm.identity(rank), f"torus({rank})")


def gl(n: int) -> GroupData:
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                r = [Fraction(0)] * n
                r[i], r[j] = Fraction(1), Fraction(-1)
                roots.append(tuple(r))
    simple = []
    for i in range(n - 1):
        r = [Fraction(0)] * n
        r[i], r[i + 1] = Fraction(1), Fraction(-1)
        simple.append(tuple(r))
    return GroupData(n, tuple(roots), tuple(simple), GramForm.identity(n), f"gl({n})")


def sl(n: int) -> GroupData:
    """sl(n) on the rank-n coordinate lattice; the trace-zero constraint is
    recorded in the label, characters live modulo (1,...,1)."""
    g = gl(n)
    return GroupData(g.rank, g.roots, g.simple_roots, g.form, f"sl({n})")


def product(factors: Sequence[GroupData]) -> GroupData:
    if not factors:
        raise InvalidParameter("product needs at least one factor")
    rank = sum(g.rank for g in factors)
    roots: list[Vector] = []
    simple: list[Vector] = []
    rows = [[Fraction(0)] * rank for _ in range(rank)]
    offset = 0
    for g in factors:
        for r in g.roots:
            roots.append(_embed(r, offset, rank))
        for r in g.simple_roots:
            simple.append(_embed(r, offset, rank))
        for i in range(g.rank):
            for j in range(g.rank):
                rows[offset + i][offset + j] = g.form.rows[i][j]
        offset += g.rank
    label = "x".join(g.label for g in factors)
    return GroupData(rank, tuple(roots), tuple(simple), GramForm(tuple(tuple(r) for r in rows)), label)


def _embed(v: Vector, offset: int, rank: int) -> Vector:
    out = [Fraction(0)] * rank
    for i, x in enumerate(v):
        out[offset + i] = x
    return tuple(out)


def weyl_canonicalize(v: Vector, group: GroupData) -> Vector:
    """Dominant representative of the Weyl orbit of v.

    Repeatedly applies any simple reflection whose root pairs negatively
    with v; for gl(n) this sorts the coordinates in nonincreasing order.
    """
    q = group.form
    current = v
    for _ in range(_CANONICALIZE_ITER_CAP):
        moved = False
        for s in group.simple_roots:
            if q.apply(current, s) < 0:
                current = reflect(current, s, q)
                moved = True
                break
        if not moved:
            return current
    raise InternalInconsistency("Weyl canonicalization did not terminate")


def primitive_rescale(v: Vector) -> Vector:
    """Unique positive rational multiple of v with coprime integer entries."""
    if all(x == 0 for x in v):
        raise ZeroVector("cannot rescale the zero vector")
    denom = lcm(*(x.denominator for x in v))
    ints = [int(x * denom) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a, g) for a in ints)


def negative_root_weight_sum(beta: Vector, group: GroupData) -> Fraction:
    """Sum of the negative beta-pairings over the roots (nonpositive; 0 for tori)."""
    total = Fraction(0)
    for r in group.roots:
        p = group.form.apply(r, beta)
        if p < 0:
            total += p
    return total


@dataclass(frozen=True)
class TorusCharacter:
    """Differential of a character of the maximal torus, in weight coordinates."""

    vec: Vector
    genuine: bool = False

    def __post_init__(self):
        if self.genuine and any(x.denominator != 1 for x in self.vec):
            raise InvalidParameter("a genuine group character needs integer entries")


def torus_character(entries: Sequence, genuine: bool = False) -> TorusCharacter:
    return TorusCharacter(vector(entries), genuine)


@dataclass(frozen=True)
class LieCharacter:
    """Linear functional on the Lie algebra killing [g, g].

    ``base`` is the fixed part; an optional ``direction`` makes the
    parametric family base + t*direction.
    """

    base: Vector
    direction: Vector | None = None


def lie_character(base: Sequence, direction: Sequence | None = None) -> LieCharacter:
    return LieCharacter(vector(base), vector(direction) if direction is not None else None)


def validate_lie_character(c: LieCharacter, group: GroupData) -> None:
    for name, part in (("base", c.base), ("direction", c.direction)):
        if part is None:
            continue
        if len(part) != group.rank:
            raise InvalidParameter(f"character {name} length does not match rank")
        for r in group.roots:
            if group.form.apply(part, r) != 0:
                raise InvalidParameter(
                    f"character {name} does not vanish on the root {tuple(map(str, r))}"
                )

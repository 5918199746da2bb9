"""Independent concrete-epsilon oracle for the symbolic enumeration.

The oracle substitutes a concrete small negative rational for epsilon and
re-solves every span subset with exhaustive support enumeration and a
global minimum — exact arithmetic throughout, no early exit, and no use
of the EpsScalar comparison path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .convex import DEFAULT_VERTEX_CAP
from .engine import ExactnessProblem
from .errors import CapExceeded, InvalidParameter
from .groups import GroupData, LieCharacter, TorusCharacter, primitive_rescale, torus
from .linalg import matrix_rank, solve_exact
from .scalars import (
    GramForm,
    Vector,
    is_zero_vector,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .strata import WeightSystem, enumerate_kn, span_candidates

DEFAULT_EPSILONS = (Fraction(-1, 2**20), Fraction(-1, 2**24))


@dataclass(frozen=True)
class OracleConfig:
    epsilon_values: tuple[Fraction, ...] = DEFAULT_EPSILONS
    sample_count: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        if len(self.epsilon_values) < 2:
            raise InvalidParameter("need at least two epsilon values for stability")
        if any(e >= 0 for e in self.epsilon_values):
            raise InvalidParameter("epsilon values must be negative")


def numeric_min_norm(
    vertices: Sequence[Vector], q: GramForm, cap: int = DEFAULT_VERTEX_CAP
) -> Vector:
    """Exact minimum-norm point of conv(vertices) by full support enumeration.

    Every affinely independent support is solved; feasible candidates are
    collected and the global q-norm minimum returned.  Deliberately no
    early exit: this is the independent check of the certificate path.
    """
    if len(vertices) > cap:
        raise CapExceeded(f"{len(vertices)} vertices exceed the cap of {cap}")
    dim = len(vertices[0])
    best: Vector | None = None
    best_norm: Fraction | None = None
    for size in range(1, min(len(vertices), dim + 1) + 1):
        for support in combinations(range(len(vertices)), size):
            pts = [vertices[i] for i in support]
            diffs = [vec_sub(p, pts[0]) for p in pts[1:]]
            if diffs and matrix_rank(diffs) != len(diffs):
                continue
            if not diffs:
                candidate = pts[0]
            else:
                gram = [[q.apply(a, b) for b in diffs] for a in diffs]
                rhs = [-q.apply(pts[0], d) for d in diffs]
                sol = solve_exact(gram, rhs)
                if sol is None:
                    continue
                if any(s < 0 for s in sol) or sum(sol) > 1:
                    continue
                candidate = pts[0]
                for s, d in zip(sol, diffs):
                    candidate = vec_add(candidate, vec_scale(s, d))
            norm = q.norm2(candidate)
            if best_norm is None or norm < best_norm:
                best, best_norm = candidate, norm
    assert best is not None
    return best


@dataclass(frozen=True)
class OracleReport:
    agreed: bool
    subsets_checked: int
    mismatches: tuple[str, ...]
    directions: tuple[Vector, ...]


def cross_check_enumeration(
    ws: WeightSystem,
    chi: TorusCharacter,
    group: GroupData,
    config: OracleConfig = OracleConfig(),
    cap: int = DEFAULT_VERTEX_CAP,
) -> OracleReport:
    """Re-derive every span subset at each concrete epsilon and compare."""
    mismatches: list[str] = []
    per_eps_directions: dict[Fraction, set[Vector]] = {e: set() for e in config.epsilon_values}
    count = 0
    symbolic_directions: set[Vector] = set()
    for subset, cert in span_candidates(ws, chi, group, cap):
        count += 1
        x = cert.point
        if is_zero_vector(x.const) and not is_zero_vector(x.lin):
            symbolic_directions.add(primitive_rescale(vec_neg(x.lin)))
        for eps0 in config.epsilon_values:
            concrete = [vec_add(w, vec_scale(eps0, chi.vec)) for w in subset]
            numeric = numeric_min_norm(concrete, group.form, cap)
            symbolic_at_eps = x.evaluate(eps0)
            if numeric != symbolic_at_eps:
                mismatches.append(
                    f"subset of size {len(subset)} disagrees at eps={eps0}: "
                    f"{numeric} != {symbolic_at_eps}"
                )
            elif not is_zero_vector(numeric):
                direction = vec_scale(Fraction(1) / eps0, numeric)
                per_eps_directions[eps0].add(primitive_rescale(vec_neg(direction)))
    direction_sets = list(per_eps_directions.values())
    for ds in direction_sets:
        if ds != symbolic_directions:
            mismatches.append("strata direction sets differ between oracle and symbolic path")
            break
    return OracleReport(
        agreed=not mismatches,
        subsets_checked=count,
        mismatches=tuple(mismatches),
        directions=tuple(sorted(symbolic_directions)),
    )


def random_problem(rank: int, weight_count: int, seed: int) -> ExactnessProblem:
    """Reproducible random torus problem (cotangent mode)."""
    if rank > 4 or weight_count > 8:
        raise InvalidParameter("random problems are capped at rank 4 and 8 weights")
    rng = random.Random(seed)
    weights = tuple(
        tuple(Fraction(rng.randint(-3, 3)) for _ in range(rank))
        for _ in range(weight_count)
    )
    chi = tuple(Fraction(rng.randint(-3, 3)) for _ in range(rank))
    while all(x == 0 for x in chi):
        chi = tuple(Fraction(rng.randint(-3, 3)) for _ in range(rank))
    return ExactnessProblem(
        group=torus(rank),
        weights=WeightSystem(weights, "cotangent"),
        chi=TorusCharacter(chi),
        c=LieCharacter(vec_zero(rank)),
    )


def cross_check_problem(problem: ExactnessProblem, config: OracleConfig = OracleConfig()) -> OracleReport:
    from .groups import weyl_canonicalize

    report = cross_check_enumeration(
        problem.weights, problem.chi, problem.group, config, problem.cap
    )
    # double-check the reported strata against a fresh enumeration
    kn = enumerate_kn(problem.weights, problem.chi, problem.group, "negative", problem.cap)
    enumerated = {s.beta_dominant for s in kn.strata}
    oracle_side = {weyl_canonicalize(d, problem.group) for d in report.directions}
    if enumerated != oracle_side:
        return OracleReport(
            agreed=False,
            subsets_checked=report.subsets_checked,
            mismatches=report.mismatches
            + ("enumerated strata differ from oracle directions",),
            directions=report.directions,
        )
    return report

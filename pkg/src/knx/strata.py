"""Enumeration of Kirwan-Ness one-parameter subgroups of a linearized
representation, with stratum descriptions, ordering and semistability
detection.

The destabilizing candidates are found by exact minimum-norm geometry on
the perturbed weight hulls conv{a_i + eps*lam}, with the affine-cone
weight 0 always adjoined.  Subsets are deduplicated by the span of their
weights: if J is a minimal support of the optimum for any subset, the
optimum is also the optimum of the maximal subset with span(J), so
evaluating one maximal subset per span finds every stratum and every
semistable witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .convex import DEFAULT_VERTEX_CAP, MinNormCertificate, Polytope, min_norm_point
from .errors import CapExceeded, InternalInconsistency, InvalidParameter, NonabelianUnsupported
from .groups import GroupData, TorusCharacter, primitive_rescale, weyl_canonicalize
from .linalg import span_contains, span_extend, span_key
from .scalars import (
    EpsVector,
    Vector,
    is_zero_vector,
    pair,
    project_out_span,
    vec_neg,
    vec_zero,
    vector,
)

ORIENTATIONS = ("negative", "positive", "both")


@dataclass(frozen=True)
class WeightSystem:
    """Torus weights of the space to stratify.

    cotangent mode stratifies T*W: the weight list doubles to
    w_weights + (-w_weights) and w_weights feeds the shift formula.
    raw mode stratifies the given weights directly.
    """

    w_weights: tuple[Vector, ...]
    mode: str = "cotangent"

    def __post_init__(self):
        if self.mode not in ("cotangent", "raw"):
            raise InvalidParameter(f"unknown mode {self.mode!r}")
        if not self.w_weights:
            raise InvalidParameter("at least one weight is required")
        n = len(self.w_weights[0])
        if any(len(w) != n for w in self.w_weights):
            raise InvalidParameter("weights must all have the same length")

    @property
    def rank(self) -> int:
        return len(self.w_weights[0])

    @property
    def stratify_weights(self) -> tuple[Vector, ...]:
        if self.mode == "cotangent":
            return self.w_weights + tuple(vec_neg(w) for w in self.w_weights)
        return self.w_weights


def weight_system(weights: Sequence[Sequence], mode: str = "cotangent") -> WeightSystem:
    return WeightSystem(tuple(vector(w) for w in weights), mode)


@dataclass(frozen=True)
class KNStratum:
    """One Kirwan-Ness stratum of the stratified space.

    ``direction`` is the unrescaled closest-point direction v (the eps
    coefficient of the minimum-norm point); beta_neg/beta_pos are the two
    signed primitive representatives, beta the orientation-selected one.
    Index fields refer to positions in stratify_weights.
    """

    direction: Vector
    beta_neg: Vector
    beta_pos: Vector
    beta: Vector
    beta_dominant: Vector
    q_norm: Fraction
    defining_indices: tuple[int, ...]
    defining_includes_origin: bool
    v_plus: tuple[int, ...]
    v_zero: tuple[int, ...]
    v_minus: tuple[int, ...]

    @property
    def z_indices(self) -> tuple[int, ...]:
        return self.v_zero

    @property
    def y_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.v_plus + self.v_zero))


@dataclass(frozen=True)
class KNResult:
    strata: tuple[KNStratum, ...]
    semistable_nonempty: bool
    orientation: str


def span_candidates(
    ws: WeightSystem,
    chi: TorusCharacter,
    group: GroupData,
    cap: int = DEFAULT_VERTEX_CAP,
) -> Iterator[tuple[tuple[Vector, ...], MinNormCertificate]]:
    """Yield (maximal weight subset, min-norm certificate) per distinct span.

    The subset always carries the affine-cone weight 0 as vertex 0.  The
    same generator feeds both the symbolic enumeration and the concrete-eps
    oracle, which re-solves each subset independently.
    """
    weights = ws.stratify_weights
    if len(chi.vec) != ws.rank or group.rank != ws.rank:
        raise InvalidParameter("weights, character and group rank disagree")
    distinct = sorted(set(weights))
    if len(distinct) + 1 > cap:
        raise CapExceeded(f"{len(distinct)} distinct weights exceed the cap of {cap}")
    lam = chi.vec
    zero = vec_zero(ws.rank)
    nonzero = [w for w in distinct if not is_zero_vector(w)]

    spans = {span_key([]): []}
    frontier = [[]]
    while frontier:
        nxt = []
        for basis in frontier:
            for w in nonzero:
                if span_contains(basis, w):
                    continue
                bigger = span_extend([list(r) for r in basis], w)
                key = span_key(bigger)
                if key not in spans:
                    spans[key] = bigger
                    nxt.append(bigger)
        frontier = nxt

    ordered = sorted(spans.values(), key=lambda b: (len(b), span_key(b)))
    for basis in ordered:
        members = tuple(w for w in distinct if span_contains(basis, w))
        vertices = [EpsVector(zero, lam)] + [EpsVector(w, lam) for w in members]
        cert = min_norm_point(Polytope(tuple(vertices), group.form), cap)
        yield (zero,) + members, cert


def enumerate_kn(
    ws: WeightSystem,
    chi: TorusCharacter,
    group: GroupData,
    orientation: str = "negative",
    cap: int = DEFAULT_VERTEX_CAP,
) -> KNResult:
    """Enumerate the KN one-parameter subgroups for the character chi."""
    if orientation not in ORIENTATIONS:
        raise InvalidParameter(f"unknown orientation {orientation!r}")
    weights = ws.stratify_weights
    q = group.form
    semistable = False
    found: dict[Vector, dict] = {}
    for subset, cert in span_candidates(ws, chi, group, cap):
        x = cert.point
        if not is_zero_vector(x.const):
            continue  # stratum does not meet the affine chart
        v = x.lin
        if is_zero_vector(v):
            semistable = True
            continue
        _validate_candidate(subset, cert, v, chi.vec, q)
        beta_neg = primitive_rescale(vec_neg(v))
        key = weyl_canonicalize(beta_neg, group)
        if key in found:
            continue
        found[key] = {
            "direction": v,
            "beta_neg": beta_neg,
            "beta_pos": primitive_rescale(v),
            "q_norm": q.norm2(v),
            "support_weights": tuple(subset[i] for i in cert.support if i != 0),
            "support_has_origin": 0 in cert.support,
        }

    strata = []
    for data in found.values():
        beta = data["beta_neg"] if orientation in ("negative", "both") else data["beta_pos"]
        dominant = weyl_canonicalize(beta, group)
        plus, zero_idx, minus = [], [], []
        for i, w in enumerate(weights):
            s = q.apply(w, beta)
            (plus if s > 0 else zero_idx if s == 0 else minus).append(i)
        defining = _support_indices(data["support_weights"], weights)
        strata.append(
            KNStratum(
                direction=data["direction"],
                beta_neg=data["beta_neg"],
                beta_pos=data["beta_pos"],
                beta=beta,
                beta_dominant=dominant,
                q_norm=data["q_norm"],
                defining_indices=defining,
                defining_includes_origin=data["support_has_origin"],
                v_plus=tuple(plus),
                v_zero=tuple(zero_idx),
                v_minus=tuple(minus),
            )
        )
    strata.sort(key=lambda s: (s.q_norm, s.beta_dominant))
    return KNResult(tuple(strata), semistable, orientation)


def _validate_candidate(
    subset: tuple[Vector, ...],
    cert: MinNormCertificate,
    v: Vector,
    lam: Vector,
    q,
) -> None:
    # cross-check: the optimum must be the projection of eps*lam away from
    # the span of its own support weights
    support_weights = [subset[i] for i in cert.support if not is_zero_vector(subset[i])]
    proj = project_out_span(lam, support_weights, q)
    if proj != v:
        raise InternalInconsistency(
            "minimum-norm point disagrees with the orthogonal projection of the character"
        )
    # every support weight pairs with the closest point exactly as the
    # closest point pairs with itself (the fixed-locus condition)
    x = cert.point
    xx = pair(x, x, q)
    for i in cert.support:
        vertex = EpsVector(subset[i], lam)
        if pair(vertex, x, q) != xx:
            raise InternalInconsistency("support weight violates the fixed-locus pairing")


def _support_indices(
    support_weights: tuple[Vector, ...], weights: tuple[Vector, ...]
) -> tuple[int, ...]:
    # map each distinct support weight (alpha0 excluded) to the first
    # stratify-weight index carrying that vector
    out = set()
    for w in support_weights:
        out.add(weights.index(w))
    return tuple(sorted(out))


def classify_point(
    support: Sequence[int],
    ws: WeightSystem,
    chi: TorusCharacter,
    group: GroupData,
    orientation: str = "negative",
    cap: int = DEFAULT_VERTEX_CAP,
    enumerated: KNResult | None = None,
) -> KNStratum | str:
    """Stratum of a point with the given weight support, or "semistable".

    Only defined for torus actions: for nonabelian groups the stratum of a
    point is not determined by its torus weight support alone.
    """
    if not group.is_torus:
        raise NonabelianUnsupported("classify_point needs a torus action")
    weights = ws.stratify_weights
    for i in support:
        if not 0 <= i < len(weights):
            raise InvalidParameter(f"support index {i} out of range")
    lam = chi.vec
    zero = vec_zero(ws.rank)
    members = sorted({weights[i] for i in support})
    vertices = [EpsVector(zero, lam)] + [EpsVector(w, lam) for w in members]
    cert = min_norm_point(Polytope(tuple(vertices), group.form), cap)
    x = cert.point
    if not is_zero_vector(x.const):
        raise InternalInconsistency("point classification left the affine chart")
    if is_zero_vector(x.lin):
        return "semistable"
    beta_neg = primitive_rescale(vec_neg(x.lin))
    result = enumerated or enumerate_kn(ws, chi, group, orientation, cap)
    for stratum in result.strata:
        if stratum.beta_neg == beta_neg:
            return stratum
    raise InternalInconsistency("classified direction is not an enumerated stratum")

"""Precompactness machinery: equivariation witnesses, product metrics, ε-nets.

A finite family is covered in two moves: find one partition pair whose
joint-variation defect (supremum minus value at the pair) is uniformly
small over all member pairs, then greedily cover the family under the
fixed-partition pseudo-metric.  The composition bounds the full metric, so
the returned centers form an ε-net that can be re-verified directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import DimensionMismatchError, InputError, MalformedFileError
from .gridfn import GridFunction2D, PartitionPair, function_from_json, function_to_json
from .partition_search import solve_sup
from .semigroup import SemigroupInstance
from .variation import FamilyConfig, joint_variation_on_partition, rho_on_partition


@dataclass(frozen=True)
class FunctionFamily:
    """A finite labelled set of functions on shared grids and instance."""

    members: tuple[GridFunction2D, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise InputError("family must be nonempty")
        if len(self.labels) != len(self.members):
            raise InputError("one label per member required")
        first = self.members[0]
        for f in self.members[1:]:
            if (
                f.instance != first.instance
                or f.grid_t.points != first.grid_t.points
                or f.grid_s.points != first.grid_s.points
            ):
                raise InputError("family members must share grids and instance")

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "members": [function_to_json(f) for f in self.members],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, obj: Any) -> "FunctionFamily":
        if not isinstance(obj, dict) or "members" not in obj:
            raise MalformedFileError("family file must be an object with 'members'")
        members = tuple(function_from_json(o) for o in obj["members"])
        labels = obj.get("labels")
        if labels is None:
            labels = [f"member-{k}" for k in range(len(members))]
        return cls(members, tuple(str(x) for x in labels))


@dataclass(frozen=True)
class EquivariationCertificate:
    epsilon: float
    witness: PartitionPair
    defect: float
    holds: bool

    def to_json(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "witness": self.witness.to_json(),
            "defect": self.defect,
            "holds": self.holds,
        }


def _pair_sups(A: FunctionFamily, cfg: FamilyConfig) -> dict[tuple[int, int], float]:
    sups = {}
    for a in range(len(A)):
        for b in range(a + 1, len(A)):
            sups[(a, b)] = solve_sup(A.members[a], A.members[b], cfg).value
    return sups


def _defect_at(
    A: FunctionFamily,
    P: PartitionPair,
    cfg: FamilyConfig,
    sups: dict[tuple[int, int], float],
) -> float:
    worst = 0.0  # the diagonal pair always contributes exactly 0
    for (a, b), sup in sups.items():
        gap = sup - joint_variation_on_partition(
            A.members[a], A.members[b], P, cfg
        ).total
        if gap > worst:
            worst = gap
    return worst


def equivariation_defect(
    A: FunctionFamily, P: PartitionPair, cfg: FamilyConfig
) -> float:
    """Max over member pairs of sup joint variation minus its value at P."""
    return _defect_at(A, P, cfg, _pair_sups(A, cfg))


def find_equivariation_witness(
    A: FunctionFamily, epsilon: float, cfg: FamilyConfig
) -> EquivariationCertificate:
    """Search for a partition pair witnessing equivariation within epsilon.

    Tries the full grid, then greedily removes the interior point whose
    removal lowers the defect the most.  Failure to find a witness is not a
    proof of non-equivariation; the best pair found is returned with
    ``holds=False``.
    """
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    sups = _pair_sups(A, cfg)
    f0 = A.members[0]

    current = f0.full_partition()
    current_defect = _defect_at(A, current, cfg, sups)
    best_pair, best_defect = current, current_defect
    while current_defect > epsilon:
        cand_pair, cand_defect = None, current_defect
        for idx in current.pi[1:-1]:
            P = PartitionPair(tuple(i for i in current.pi if i != idx), current.pi_star)
            d = _defect_at(A, P, cfg, sups)
            if d < cand_defect:
                cand_pair, cand_defect = P, d
        for idx in current.pi_star[1:-1]:
            P = PartitionPair(current.pi, tuple(j for j in current.pi_star if j != idx))
            d = _defect_at(A, P, cfg, sups)
            if d < cand_defect:
                cand_pair, cand_defect = P, d
        if cand_pair is None:
            break
        current, current_defect = cand_pair, cand_defect
        if current_defect < best_defect:
            best_pair, best_defect = current, current_defect
    return EquivariationCertificate(
        epsilon, best_pair, best_defect, best_defect <= epsilon
    )


# -- product tuples ----------------------------------------------------------


@dataclass(frozen=True)
class ProductTuple:
    """Image of a function under partition evaluation, with its points."""

    t_points: tuple[float, ...]
    s_points: tuple[float, ...]
    instance: SemigroupInstance
    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.t_points) or any(
            len(r) != len(self.s_points) for r in self.entries
        ):
            raise DimensionMismatchError("tuple entries do not match the partition")


def partition_image(f: GridFunction2D, P: PartitionPair) -> ProductTuple:
    """The tuple Tf of f's values at the partition nodes."""
    f.check_partition(P)
    return ProductTuple(
        tuple(f.grid_t[i] for i in P.pi),
        tuple(f.grid_s[j] for j in P.pi_star),
        f.instance,
        tuple(tuple(f.value(i, j) for j in P.pi_star) for i in P.pi),
    )


def product_rho_prime(
    xi: ProductTuple, delta: ProductTuple, cfg: FamilyConfig
) -> float:
    """The product-space metric on fixed tuples (partition points carried
    by the tuples themselves)."""
    if (
        xi.t_points != delta.t_points
        or xi.s_points != delta.s_points
        or xi.instance != delta.instance
    ):
        raise DimensionMismatchError("tuples live over different partitions")
    inst = xi.instance
    A, D = inst.add, inst.dist
    t, s = xi.t_points, xi.s_points
    n, m = len(t) - 1, len(s) - 1
    x, y = xi.entries, delta.entries

    base = D(x[0][0], y[0][0])
    row_inner = 0.0
    for i in range(1, n + 1):
        d = D(A(x[i][0], y[i - 1][0]), A(x[i - 1][0], y[i][0]))
        row_inner += cfg.inner_1d(d, t[i] - t[i - 1], i, "t")
    col_inner = 0.0
    for j in range(1, m + 1):
        d = D(A(x[0][j], y[0][j - 1]), A(x[0][j - 1], y[0][j]))
        col_inner += cfg.inner_1d(d, s[j] - s[j - 1], j, "s")
    mixed_inner = 0.0
    for j in range(1, m + 1):
        ws = s[j] - s[j - 1]
        for i in range(1, n + 1):
            lhs = A(A(A(x[i][j], x[i - 1][j - 1]), y[i][j - 1]), y[i - 1][j])
            rhs = A(A(A(y[i][j], y[i - 1][j - 1]), x[i][j - 1]), x[i - 1][j])
            mixed_inner += cfg.inner_2d(D(lhs, rhs), t[i] - t[i - 1], ws, i, j)
    # group exactly like the per-partition metric so the two agree bitwise
    total = cfg.outer(row_inner) + cfg.outer(col_inner) + cfg.outer(mixed_inner)
    return base + total


# -- epsilon nets -------------------------------------------------------------


def pointwise_net(
    A: FunctionFamily, i: int, j: int, epsilon: float
) -> list[Any]:
    """Greedy cover of the value set {f(t_i, s_j)} with radius epsilon."""
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    inst = A.members[0].instance
    centers: list[Any] = []
    for f in A.members:
        v = f.value(i, j)
        if all(inst.dist(v, c) > epsilon for c in centers):
            centers.append(v)
    return centers


@dataclass(frozen=True)
class EpsilonNet:
    center_indices: tuple[int, ...]
    center_labels: tuple[str, ...]
    certificate: EquivariationCertificate

    def to_json(self) -> dict:
        return {
            "center_indices": list(self.center_indices),
            "center_labels": list(self.center_labels),
            "certificate": self.certificate.to_json(),
        }


def build_epsilon_net(
    A: FunctionFamily, epsilon: float, cfg: FamilyConfig
) -> EpsilonNet:
    """Constructive ε-net: witness at ε/2, then a greedy cover under the
    witness pseudo-metric.

    The covering radius is ``epsilon - defect`` (at least ε/2 when the
    certificate holds), so full-metric distances to centers stay below
    epsilon while the net stays close to the radius-ε optimum.
    """
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    cert = find_equivariation_witness(A, epsilon / 2, cfg)
    if not cert.holds:
        return EpsilonNet((), (), cert)
    radius = epsilon - max(cert.defect, 0.0)
    centers: list[int] = []
    for k, f in enumerate(A.members):
        covered = any(
            rho_on_partition(f, A.members[c], cert.witness, cfg) <= radius
            for c in centers
        )
        if not covered:
            centers.append(k)
    return EpsilonNet(
        tuple(centers), tuple(A.labels[k] for k in centers), cert
    )


@dataclass(frozen=True)
class NetVerification:
    ok: bool
    worst: float
    offender: str | None

    def to_json(self) -> dict:
        return {"ok": self.ok, "worst": self.worst, "offender": self.offender}


def verify_epsilon_net(
    A: FunctionFamily,
    center_indices: tuple[int, ...],
    epsilon: float,
    cfg: FamilyConfig,
) -> NetVerification:
    """Direct check of the net by evaluating the full metric to each center."""
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    if not center_indices:
        return NetVerification(False, float("inf"), A.labels[0])
    if any(c < 0 or c >= len(A) for c in center_indices):
        raise InputError("center indices must point into the family")
    worst, offender = 0.0, None
    for k, f in enumerate(A.members):
        best = float("inf")
        for c in center_indices:
            g = A.members[c]
            base = f.instance.dist(f.value(0, 0), g.value(0, 0))
            best = min(best, base + solve_sup(f, g, cfg).value)
        if best > worst:
            worst, offender = best, A.labels[k]
    ok = worst <= epsilon + 1e-9 * max(1.0, worst)
    return NetVerification(ok, worst, offender if not ok else None)

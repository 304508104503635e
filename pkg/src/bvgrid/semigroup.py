"""Metric semigroup instances: addition, translation-invariant distance, laws.

Four concrete instances are shipped:

* ``nonneg-real`` -- nonnegative scalars with ``+`` and ``|a-b|``;
* ``real-vector(k)`` -- k-vectors with componentwise ``+`` and the
  Euclidean distance;
* ``interval`` -- intervals ``[lo, hi]`` with Minkowski sum and the
  Hausdorff distance ``max(|lo1-lo2|, |hi1-hi2|)``;
* ``box(k)`` -- products of k intervals, distance = max over coordinates.

The interval and box instances are semigroups but not groups (Minkowski
addition never shrinks the width), which keeps every consumer honest about
the absence of subtraction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any

from .errors import InputError, InstanceMismatchError

KINDS = ("nonneg-real", "real-vector", "interval", "box")

# Samplers draw payload coordinates from the dyadic grid k/64 so that sums
# and differences are exact in IEEE doubles; law checks on interval/box
# instances can then demand exactness rather than a tolerance.
_DYADIC_DEN = 64
_FLOAT_TOL = 1e-12


@dataclass(frozen=True)
class SemigroupInstance:
    """One of the four shipped metric semigroups."""

    kind: str
    dim: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InputError(f"unknown semigroup kind: {self.kind!r}")
        if self.kind in ("real-vector", "box"):
            if not isinstance(self.dim, int) or self.dim < 1:
                raise InputError(f"{self.kind} requires a positive dimension")
        elif self.dim is not None:
            raise InputError(f"{self.kind} takes no dimension")

    @property
    def float_backed(self) -> bool:
        """True for instances whose laws are only checked to 1e-12 relative."""
        return self.kind in ("nonneg-real", "real-vector")

    # -- payload handling ------------------------------------------------

    def check(self, payload: Any) -> Any:
        """Validate and normalize a payload (floats, nested tuples)."""
        if self.kind == "nonneg-real":
            v = _as_float(payload)
            if v < 0:
                raise InputError(f"nonneg-real payload must be >= 0, got {v}")
            return v
        if self.kind == "real-vector":
            vec = _as_seq(payload, self.dim, "vector")
            return tuple(_as_float(x) for x in vec)
        if self.kind == "interval":
            return _check_interval(payload)
        # box
        coords = _as_seq(payload, self.dim, "box")
        return tuple(_check_interval(c) for c in coords)

    def add(self, a: Any, b: Any) -> Any:
        if self.kind == "nonneg-real":
            return a + b
        if self.kind == "real-vector":
            return tuple(x + y for x, y in zip(a, b))
        if self.kind == "interval":
            return (a[0] + b[0], a[1] + b[1])
        return tuple((x[0] + y[0], x[1] + y[1]) for x, y in zip(a, b))

    def dist(self, a: Any, b: Any) -> float:
        if self.kind == "nonneg-real":
            return abs(a - b)
        if self.kind == "real-vector":
            return math.dist(a, b)
        if self.kind == "interval":
            return max(abs(a[0] - b[0]), abs(a[1] - b[1]))
        return max(
            max(abs(x[0] - y[0]), abs(x[1] - y[1])) for x, y in zip(a, b)
        )

    def sample(self, rng: random.Random, scale: float = 4.0) -> Any:
        """Draw a payload with dyadic coordinates (exact float arithmetic)."""

        def scalar(lo: float = 0.0) -> float:
            span = int(scale * _DYADIC_DEN)
            return lo + rng.randrange(0, span + 1) / _DYADIC_DEN

        if self.kind == "nonneg-real":
            return scalar()
        if self.kind == "real-vector":
            return tuple(scalar() for _ in range(self.dim))
        if self.kind == "interval":
            lo = scalar()
            return (lo, lo + scalar())
        out = []
        for _ in range(self.dim):
            lo = scalar()
            out.append((lo, lo + scalar()))
        return tuple(out)

    # -- JSON ------------------------------------------------------------

    def payload_to_json(self, payload: Any) -> Any:
        if self.kind == "nonneg-real":
            return payload
        if self.kind == "real-vector":
            return list(payload)
        if self.kind == "interval":
            return [payload[0], payload[1]]
        return [[c[0], c[1]] for c in payload]

    def payload_from_json(self, obj: Any) -> Any:
        return self.check(obj)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.dim is not None:
            out["dim"] = self.dim
        return out

    @classmethod
    def from_json(cls, obj: Any) -> "SemigroupInstance":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise InputError("semigroup spec must be an object with a 'kind'")
        return cls(kind=obj["kind"], dim=obj.get("dim"))


def _as_float(x: Any) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"expected a number, got {x!r}")
    return float(x)


def _as_seq(x: Any, dim: int | None, what: str) -> tuple:
    if not isinstance(x, (list, tuple)):
        raise InputError(f"expected a {what} payload, got {x!r}")
    if dim is not None and len(x) != dim:
        raise InputError(f"{what} payload has length {len(x)}, expected {dim}")
    return tuple(x)


def _check_interval(payload: Any) -> tuple[float, float]:
    pair = _as_seq(payload, 2, "interval")
    lo, hi = _as_float(pair[0]), _as_float(pair[1])
    if lo > hi:
        raise InputError(f"interval endpoints out of order: [{lo}, {hi}]")
    return (lo, hi)


@dataclass(frozen=True)
class SemigroupElement:
    """A payload tagged with its instance."""

    instance: SemigroupInstance
    payload: Any

    def __post_init__(self) -> None:
        object.__setattr__(self, "payload", self.instance.check(self.payload))


def _same_instance(a: SemigroupElement, b: SemigroupElement) -> SemigroupInstance:
    if a.instance != b.instance:
        raise InstanceMismatchError(
            f"mixed instances: {a.instance.kind} vs {b.instance.kind}"
        )
    return a.instance


def add(a: SemigroupElement, b: SemigroupElement) -> SemigroupElement:
    inst = _same_instance(a, b)
    return SemigroupElement(inst, inst.add(a.payload, b.payload))


def dist(a: SemigroupElement, b: SemigroupElement) -> float:
    inst = _same_instance(a, b)
    return inst.dist(a.payload, b.payload)


# -- law verification ----------------------------------------------------

LAWS = (
    "associativity",
    "commutativity",
    "metric-nonnegativity",
    "metric-identity",
    "metric-symmetry",
    "metric-triangle",
    "translation-invariance",
    "inequality-1",
    "inequality-2",
)


@dataclass(frozen=True)
class LawResult:
    passed: bool
    worst: float


@dataclass(frozen=True)
class LawReport:
    instance: SemigroupInstance
    sample_count: int
    seed: int
    laws: dict[str, LawResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.laws.values())

    def to_json(self) -> dict:
        return {
            "instance": self.instance.to_json(),
            "sample_count": self.sample_count,
            "seed": self.seed,
            "all_passed": self.all_passed,
            "laws": {
                name: {"passed": r.passed, "worst": r.worst}
                for name, r in self.laws.items()
            },
        }


def verify_semigroup_laws(
    instance: SemigroupInstance, sample_count: int, seed: int
) -> LawReport:
    """Check the semigroup and metric laws on seeded random samples.

    Records the worst violation magnitude per law, scaled by
    ``max(1, magnitudes involved)``.  Float-backed instances pass within
    1e-12 relative; interval/box must be exact (dyadic samples make every
    sum and difference representable).
    """
    if sample_count < 1:
        raise InputError("sample_count must be >= 1")
    rng = random.Random(seed)
    worst = {name: 0.0 for name in LAWS}

    def note(law: str, violation: float, scale: float) -> None:
        rel = violation / max(1.0, scale)
        if rel > worst[law]:
            worst[law] = rel

    D = instance.dist
    A = instance.add
    for _ in range(sample_count):
        u, v, w, ub, vb = (instance.sample(rng) for _ in range(5))

        note("associativity", D(A(A(u, v), w), A(u, A(v, w))), 1.0)
        note("commutativity", D(A(u, v), A(v, u)), 1.0)

        duv = D(u, v)
        note("metric-nonnegativity", max(0.0, -duv), 1.0)
        note("metric-identity", D(u, u), 1.0)
        if u != v and duv == 0.0:
            note("metric-identity", 1.0, 1.0)
        note("metric-symmetry", abs(duv - D(v, u)), duv)
        tri = D(u, w) - (duv + D(v, w))
        note("metric-triangle", max(0.0, tri), D(u, w))
        note("translation-invariance", abs(D(A(u, w), A(v, w)) - duv), duv)

        lhs1 = duv - (D(A(u, ub), A(v, vb)) + D(ub, vb))
        note("inequality-1", max(0.0, lhs1), duv)
        sums = D(A(u, ub), A(v, vb))
        lhs2 = sums - (duv + D(ub, vb))
        note("inequality-2", max(0.0, lhs2), sums)

    tol = _FLOAT_TOL if instance.float_backed else 0.0
    laws = {name: LawResult(worst[name] <= tol, worst[name]) for name in LAWS}
    return LawReport(instance, sample_count, seed, laws)

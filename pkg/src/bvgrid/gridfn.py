"""Grid-sampled bivariate functions into a metric semigroup.

A function is stored as its values on a finite grid of ``[0,1] x [0,1]``;
partitions are index subsets of the grid axes containing both endpoints.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Any

from .canon import canonical_dump_bytes
from .errors import (
    DimensionMismatchError,
    EndpointError,
    GeneratorError,
    MalformedFileError,
    NonMonotoneGridError,
    PartitionIndexError,
)
from .semigroup import SemigroupElement, SemigroupInstance


@dataclass(frozen=True)
class Grid1D:
    """Strictly increasing points in [0,1] with both endpoints present."""

    points: tuple[float, ...]

    def __post_init__(self) -> None:
        pts = tuple(float(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise EndpointError("grid needs at least the two endpoints")
        if pts[0] != 0.0 or pts[-1] != 1.0:
            raise EndpointError(f"grid must span [0,1], got [{pts[0]}, {pts[-1]}]")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise NonMonotoneGridError(f"grid is not strictly increasing: {pts}")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> float:
        return self.points[i]


@dataclass(frozen=True)
class PartitionPair:
    """Index subsets of the two grid axes, endpoints included."""

    pi: tuple[int, ...]
    pi_star: tuple[int, ...]

    def __post_init__(self) -> None:
        for name, idx in (("pi", self.pi), ("pi_star", self.pi_star)):
            idx = tuple(int(i) for i in idx)
            object.__setattr__(self, name, idx)
            if len(idx) < 2 or idx[0] != 0:
                raise PartitionIndexError(f"{name} must start at index 0")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise PartitionIndexError(f"{name} must be strictly increasing")

    def to_json(self) -> dict:
        return {"pi": list(self.pi), "pi_star": list(self.pi_star)}

    @classmethod
    def from_json(cls, obj: Any) -> "PartitionPair":
        if not isinstance(obj, dict):
            raise MalformedFileError("partition pair must be an object")
        return cls(tuple(obj.get("pi", ())), tuple(obj.get("pi_star", ())))


@dataclass(frozen=True)
class GridFunction2D:
    """Values of f: I x I -> M on grid_t x grid_s (i over t, j over s)."""

    grid_t: Grid1D
    grid_s: Grid1D
    instance: SemigroupInstance
    values: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        n, m = len(self.grid_t), len(self.grid_s)
        if len(self.values) != n or any(len(row) != m for row in self.values):
            raise DimensionMismatchError(
                f"values shape {_shape(self.values)} does not match grid {n}x{m}"
            )
        checked = tuple(
            tuple(self.instance.check(v) for v in row) for row in self.values
        )
        object.__setattr__(self, "values", checked)

    @property
    def n(self) -> int:
        return len(self.grid_t)

    @property
    def m(self) -> int:
        return len(self.grid_s)

    def value(self, i: int, j: int) -> Any:
        return self.values[i][j]

    def element(self, i: int, j: int) -> SemigroupElement:
        return SemigroupElement(self.instance, self.values[i][j])

    def full_partition(self) -> PartitionPair:
        return PartitionPair(tuple(range(self.n)), tuple(range(self.m)))

    def check_partition(self, P: PartitionPair) -> None:
        if P.pi[-1] != self.n - 1 or P.pi_star[-1] != self.m - 1:
            raise PartitionIndexError("partition must end at the last grid index")
        if P.pi[-1] >= self.n or P.pi_star[-1] >= self.m:
            raise PartitionIndexError("partition index out of range")


def _shape(values: Any) -> str:
    rows = len(values)
    cols = {len(r) for r in values} if rows else set()
    return f"{rows}x{sorted(cols)}"


# -- serialization ---------------------------------------------------------


def function_to_json(f: GridFunction2D) -> dict:
    return {
        "grid_t": list(f.grid_t.points),
        "grid_s": list(f.grid_s.points),
        "semigroup": f.instance.to_json(),
        "values": [
            [f.instance.payload_to_json(v) for v in row] for row in f.values
        ],
    }


def function_from_json(obj: Any) -> GridFunction2D:
    if not isinstance(obj, dict):
        raise MalformedFileError("function file must be a JSON object")
    for key in ("grid_t", "grid_s", "semigroup", "values"):
        if key not in obj:
            raise MalformedFileError(f"function file is missing {key!r}")
    instance = SemigroupInstance.from_json(obj["semigroup"])
    grid_t = Grid1D(tuple(obj["grid_t"]))
    grid_s = Grid1D(tuple(obj["grid_s"]))
    values = obj["values"]
    if not isinstance(values, list) or not all(isinstance(r, list) for r in values):
        raise MalformedFileError("values must be a 2D array")
    payloads = tuple(
        tuple(instance.payload_from_json(v) for v in row) for row in values
    )
    return GridFunction2D(grid_t, grid_s, instance, payloads)


def load_function(data: bytes | str) -> GridFunction2D:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"not valid JSON: {exc}") from exc
    return function_from_json(obj)


def save_function(f: GridFunction2D) -> bytes:
    """Canonical bytes; ``load_function(save_function(f))`` equals ``f``."""
    return canonical_dump_bytes(function_to_json(f))


# -- generators ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic test-function generators."""

    kind: str
    c: Any = None
    a: float = 0.0
    b: float = 0.0
    step: float = 0.125

    @classmethod
    def constant(cls, c: Any) -> "GeneratorSpec":
        return cls("constant", c=c)

    @classmethod
    def separable_additive(cls, a: float, b: float) -> "GeneratorSpec":
        return cls("separable-additive", a=a, b=b)

    @classmethod
    def product(cls) -> "GeneratorSpec":
        return cls("product")

    @classmethod
    def random_walk(cls, step: float) -> "GeneratorSpec":
        return cls("random-walk", step=step)


def synth_function(
    gen: GeneratorSpec,
    grid_t: Grid1D,
    grid_s: Grid1D,
    instance: SemigroupInstance,
    seed: int = 0,
) -> GridFunction2D:
    """Build a grid function; a pure function of its arguments."""
    if gen.kind == "constant":
        c = instance.check(gen.c)
        values = tuple(tuple(c for _ in grid_s.points) for _ in grid_t.points)
    elif gen.kind == "separable-additive":
        values = _scalar_field(
            lambda t, s: gen.a * t + gen.b * s, grid_t, grid_s, instance
        )
    elif gen.kind == "product":
        values = _scalar_field(lambda t, s: t * s, grid_t, grid_s, instance)
    elif gen.kind == "random-walk":
        values = _random_walk(gen.step, grid_t, grid_s, instance, seed)
    else:
        raise GeneratorError(f"unknown generator: {gen.kind!r}")
    return GridFunction2D(grid_t, grid_s, instance, values)


def _scalar_field(fn, grid_t: Grid1D, grid_s: Grid1D, instance: SemigroupInstance):
    if instance.kind not in ("nonneg-real", "real-vector"):
        raise GeneratorError(
            f"scalar generator is incompatible with {instance.kind}"
        )
    rows = []
    for t in grid_t.points:
        row = []
        for s in grid_s.points:
            v = fn(t, s)
            if v < 0:
                raise GeneratorError(
                    f"generator produced negative value {v} at ({t},{s})"
                )
            row.append(v if instance.kind == "nonneg-real" else (v,) * instance.dim)
        rows.append(tuple(row))
    return tuple(rows)


def _random_walk(step, grid_t, grid_s, instance, seed):
    # Steps are dyadic multiples of step/8 so float sums stay exact when
    # step itself is dyadic; the walk runs row-major from (0,0), each value
    # perturbing its left (or, in column 0, upper) neighbour.
    rng = random.Random(seed)

    def delta() -> float:
        return step * rng.randrange(-8, 9) / 8

    def walk_scalar(prev: float) -> float:
        return max(0.0, prev + delta())

    def start_scalar() -> float:
        return rng.randrange(0, 17) / 8

    def step_payload(prev):
        if instance.kind == "nonneg-real":
            return walk_scalar(prev)
        if instance.kind == "real-vector":
            return tuple(walk_scalar(x) for x in prev)
        if instance.kind == "interval":
            lo = prev[0] + delta()
            width = max(0.0, (prev[1] - prev[0]) + delta())
            return (lo, lo + width)
        return tuple(
            (lambda lo, w: (lo, lo + w))(
                c[0] + delta(), max(0.0, (c[1] - c[0]) + delta())
            )
            for c in prev
        )

    def start_payload():
        if instance.kind == "nonneg-real":
            return start_scalar()
        if instance.kind == "real-vector":
            return tuple(start_scalar() for _ in range(instance.dim))
        if instance.kind == "interval":
            lo = start_scalar()
            return (lo, lo + start_scalar())
        out = []
        for _ in range(instance.dim):
            lo = start_scalar()
            out.append((lo, lo + start_scalar()))
        return tuple(out)

    rows: list[tuple] = []
    for i in range(len(grid_t)):
        row: list = []
        for j in range(len(grid_s)):
            if i == 0 and j == 0:
                row.append(start_payload())
            elif j == 0:
                row.append(step_payload(rows[i - 1][0]))
            else:
                row.append(step_payload(row[j - 1]))
        rows.append(tuple(row))
    return tuple(rows)

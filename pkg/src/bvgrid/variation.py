"""Per-partition variation sums for the four families, single and joint.

Family weighting of a distance term ``d`` over an interval of width ``w``
at 1-based position ``pos`` within the chosen partition:

* wiener(p):     inner ``d**p``; outer ``x**(1/p)`` for p >= 1, none for p < 1
* riesz(p>1):    inner ``d**p / w**(p-1)``; outer ``x**(1/p)``
* waterman:      inner ``lambda[pos,1] * d`` (rows), ``lambda[1,pos] * d``
                 (columns), ``lambda[i,j] * d`` (cells); no outer exponent
* korenblum(p>1): inner ``d / kappa(w)`` (first power of d by default, the
                 ``d**p`` variant is opt-in); outer ``x**(1/p)``

Mixed double sums accumulate with the column index outer and the row index
inner, both ascending, so results are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .errors import ConfigError, InputError, InstanceMismatchError
from .gridfn import GridFunction2D, PartitionPair

FAMILIES = ("wiener", "riesz", "waterman", "korenblum")


@dataclass(frozen=True)
class FamilyConfig:
    """Which variation family and its parameters."""

    family: str
    p: float | None = None
    lambda_rule: str = "harmonic"
    kappa_kind: str = "power"
    kappa_alpha: float | None = None
    korenblum_dp_variant: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ConfigError(f"unknown family: {self.family!r}")
        if self.family == "wiener":
            if self.p is None or self.p <= 0:
                raise ConfigError("wiener requires p > 0")
        elif self.family in ("riesz", "korenblum"):
            if self.p is None or self.p <= 1:
                raise ConfigError(f"{self.family} requires p > 1")
        if self.family == "waterman" and self.lambda_rule != "harmonic":
            raise ConfigError(f"unknown lambda rule: {self.lambda_rule!r}")
        if self.family == "korenblum":
            if self.kappa_kind != "power":
                raise ConfigError(f"unknown kappa rule: {self.kappa_kind!r}")
            alpha = self.kappa_alpha if self.kappa_alpha is not None else 0.5
            if not 0 < alpha < 1:
                raise ConfigError("kappa power exponent must lie in (0,1)")
            object.__setattr__(self, "kappa_alpha", alpha)

    # weights -------------------------------------------------------------

    def lam(self, i: int, j: int) -> float:
        """Waterman weight for the cell at (row pos i, column pos j)."""
        return 1.0 / (i * j)

    def kappa(self, t: float) -> float:
        return t ** self.kappa_alpha

    @property
    def has_outer_root(self) -> bool:
        if self.family == "wiener":
            return self.p >= 1
        return self.family in ("riesz", "korenblum")

    def outer(self, inner: float) -> float:
        return inner ** (1.0 / self.p) if self.has_outer_root else inner

    def inner_1d(self, d: float, width: float, pos: int, axis: str) -> float:
        if self.family == "wiener":
            return d ** self.p
        if self.family == "riesz":
            return d ** self.p / width ** (self.p - 1.0)
        if self.family == "waterman":
            w = self.lam(pos, 1) if axis == "t" else self.lam(1, pos)
            return w * d
        num = d ** self.p if self.korenblum_dp_variant else d
        return num / self.kappa(width)

    def inner_2d(
        self, d: float, wt: float, ws: float, pos_i: int, pos_j: int
    ) -> float:
        if self.family == "wiener":
            return d ** self.p
        if self.family == "riesz":
            return d ** self.p / (wt ** (self.p - 1.0) * ws ** (self.p - 1.0))
        if self.family == "waterman":
            return self.lam(pos_i, pos_j) * d
        num = d ** self.p if self.korenblum_dp_variant else d
        return num / (self.kappa(wt) * self.kappa(ws))

    # JSON ------------------------------------------------------------------

    def to_json(self) -> dict:
        out: dict[str, Any] = {"family": self.family}
        if self.p is not None:
            out["p"] = self.p
        if self.family == "waterman":
            out["lambda"] = self.lambda_rule
        if self.family == "korenblum":
            out["kappa"] = {"kind": self.kappa_kind, "alpha": self.kappa_alpha}
            out["korenblum_dp_variant"] = self.korenblum_dp_variant
        return out

    @classmethod
    def from_json(cls, obj: Any) -> "FamilyConfig":
        if not isinstance(obj, dict) or "family" not in obj:
            raise ConfigError("family config must be an object with 'family'")
        kappa = obj.get("kappa") or {}
        return cls(
            family=obj["family"],
            p=obj.get("p"),
            lambda_rule=obj.get("lambda", "harmonic"),
            kappa_kind=kappa.get("kind", "power"),
            kappa_alpha=kappa.get("alpha"),
            korenblum_dp_variant=bool(obj.get("korenblum_dp_variant", False)),
        )


@dataclass(frozen=True)
class VariationBreakdown:
    row: float
    col: float
    mixed: float
    total: float

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "col": self.col,
            "mixed": self.mixed,
            "total": self.total,
        }


# -- distance terms --------------------------------------------------------


def row_term(f: GridFunction2D, g: Optional[GridFunction2D], a1: int, a2: int) -> float:
    inst = f.instance
    if g is None:
        return inst.dist(f.value(a2, 0), f.value(a1, 0))
    return inst.dist(
        inst.add(f.value(a2, 0), g.value(a1, 0)),
        inst.add(f.value(a1, 0), g.value(a2, 0)),
    )


def col_term(f: GridFunction2D, g: Optional[GridFunction2D], b1: int, b2: int) -> float:
    inst = f.instance
    if g is None:
        return inst.dist(f.value(0, b2), f.value(0, b1))
    return inst.dist(
        inst.add(f.value(0, b2), g.value(0, b1)),
        inst.add(f.value(0, b1), g.value(0, b2)),
    )


def cell_term(
    f: GridFunction2D,
    g: Optional[GridFunction2D],
    a1: int,
    a2: int,
    b1: int,
    b2: int,
) -> float:
    """Vitali-type cell distance: diagonal vs anti-diagonal sums."""
    inst = f.instance
    A = inst.add
    if g is None:
        return inst.dist(
            A(f.value(a2, b2), f.value(a1, b1)),
            A(f.value(a2, b1), f.value(a1, b2)),
        )
    lhs = A(A(A(f.value(a2, b2), f.value(a1, b1)), g.value(a2, b1)), g.value(a1, b2))
    rhs = A(A(A(g.value(a2, b2), g.value(a1, b1)), f.value(a2, b1)), f.value(a1, b2))
    return inst.dist(lhs, rhs)


def _check_compatible(f: GridFunction2D, g: GridFunction2D) -> None:
    if f.instance != g.instance:
        raise InstanceMismatchError("functions use different semigroup instances")
    if f.grid_t.points != g.grid_t.points or f.grid_s.points != g.grid_s.points:
        raise InputError("functions are sampled on different grids")


def _breakdown(
    f: GridFunction2D,
    g: Optional[GridFunction2D],
    P: PartitionPair,
    cfg: FamilyConfig,
) -> VariationBreakdown:
    f.check_partition(P)
    t, s = f.grid_t, f.grid_s

    row_inner = 0.0
    for pos, (a1, a2) in enumerate(zip(P.pi, P.pi[1:]), start=1):
        row_inner += cfg.inner_1d(row_term(f, g, a1, a2), t[a2] - t[a1], pos, "t")

    col_inner = 0.0
    for pos, (b1, b2) in enumerate(zip(P.pi_star, P.pi_star[1:]), start=1):
        col_inner += cfg.inner_1d(col_term(f, g, b1, b2), s[b2] - s[b1], pos, "s")

    mixed_inner = 0.0
    for pj, (b1, b2) in enumerate(zip(P.pi_star, P.pi_star[1:]), start=1):
        ws = s[b2] - s[b1]
        for pi_, (a1, a2) in enumerate(zip(P.pi, P.pi[1:]), start=1):
            mixed_inner += cfg.inner_2d(
                cell_term(f, g, a1, a2, b1, b2), t[a2] - t[a1], ws, pi_, pj
            )

    row = cfg.outer(row_inner)
    col = cfg.outer(col_inner)
    mixed = cfg.outer(mixed_inner)
    return VariationBreakdown(row, col, mixed, row + col + mixed)


def variation_on_partition(
    f: GridFunction2D, P: PartitionPair, cfg: FamilyConfig
) -> VariationBreakdown:
    """Single-function variation sums for a fixed partition pair."""
    return _breakdown(f, None, P, cfg)


def joint_variation_on_partition(
    f: GridFunction2D, g: GridFunction2D, P: PartitionPair, cfg: FamilyConfig
) -> VariationBreakdown:
    """Joint (two-function) variation sums for a fixed partition pair."""
    _check_compatible(f, g)
    return _breakdown(f, g, P, cfg)


def rho_on_partition(
    f: GridFunction2D, g: GridFunction2D, P: PartitionPair, cfg: FamilyConfig
) -> float:
    """Base-point distance plus the joint total on the fixed partition."""
    _check_compatible(f, g)
    base = f.instance.dist(f.value(0, 0), g.value(0, 0))
    return base + _breakdown(f, g, P, cfg).total


def rho(
    f: GridFunction2D,
    g: GridFunction2D,
    cfg: FamilyConfig,
    method: str = "auto",
) -> float:
    """The metric: base-point distance plus the joint-variation supremum."""
    from .partition_search import solve_sup

    _check_compatible(f, g)
    base = f.instance.dist(f.value(0, 0), g.value(0, 0))
    return base + solve_sup(f, g, cfg, method).value

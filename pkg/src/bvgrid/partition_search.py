"""Supremum of variation totals over grid subpartitions.

On a finite grid the supremum is a subset-selection problem: choose index
subsets of each axis (endpoints mandatory) maximizing the family total.
Methods:

* ``brute-force`` -- full cross-product enumeration (oracle, small grids);
* ``jordan-full-grid`` -- wiener(1) only: refinement monotonicity makes the
  full grid optimal, for single and joint variation alike;
* ``branch-and-bound`` -- DFS over row subsets with an admissible bound;
  for a fixed row subset the column choice is solved exactly by dynamic
  programming (scalar DP for additive families, Pareto DP over the
  (column-sum, mixed-sum) pair when an outer 1/p exponent couples them);
* ``greedy`` -- iterative single-point insertion, a lower bound only.

Partitions enumerate in inclusion-vector order (a point absent sorts before
present, leftmost interior point most significant), so the minimal
partition comes first and ties resolve toward coarser pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ConfigError, SizeGuardError
from .gridfn import Grid1D, GridFunction2D, PartitionPair
from .variation import (
    FamilyConfig,
    _check_compatible,
    cell_term,
    col_term,
    joint_variation_on_partition,
    row_term,
    variation_on_partition,
)

MAX_ENUM_POINTS = 22
MAX_BRUTE_POINTS = 12
MAX_BB_POINTS = 14

_NEG = float("-inf")


@dataclass(frozen=True)
class SupResult:
    value: float
    argmax: PartitionPair
    method: str
    optimal: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "argmax": self.argmax.to_json(),
            "method": self.method,
            "optimal": self.optimal,
        }


@dataclass(frozen=True)
class PartialSelection:
    """Include/exclude decisions for a prefix of each axis' interior points."""

    rows: tuple[bool, ...] = ()
    cols: tuple[bool, ...] = ()


def enumerate_partitions(grid: Grid1D) -> list[tuple[int, ...]]:
    """All index subsets containing both endpoints, minimal partition first."""
    n = len(grid)
    if n > MAX_ENUM_POINTS:
        raise SizeGuardError(f"grid of {n} points exceeds enumeration guard")
    out = []
    for mask in itertools.product((0, 1), repeat=n - 2):
        out.append((0, *(k + 1 for k, bit in enumerate(mask) if bit), n - 1))
    return out


class _Tables:
    """Cached distance terms for one (f, g) pair; family-independent."""

    def __init__(self, f: GridFunction2D, g: Optional[GridFunction2D]):
        n, m = f.n, f.m
        self.t = f.grid_t
        self.s = f.grid_s
        self.row_d = {
            (a1, a2): row_term(f, g, a1, a2)
            for a1 in range(n)
            for a2 in range(a1 + 1, n)
        }
        self.col_d = {
            (b1, b2): col_term(f, g, b1, b2)
            for b1 in range(m)
            for b2 in range(b1 + 1, m)
        }
        self.cell_d = {
            (a1, a2, b1, b2): cell_term(f, g, a1, a2, b1, b2)
            for (a1, a2) in self.row_d
            for (b1, b2) in self.col_d
        }
        self.n = n
        self.m = m


def _eval_total(
    tables: _Tables, cfg: FamilyConfig, pi: tuple[int, ...], pis: tuple[int, ...]
) -> float:
    """Same arithmetic and accumulation order as variation_on_partition."""
    t, s = tables.t, tables.s
    row_inner = 0.0
    for pos, (a1, a2) in enumerate(zip(pi, pi[1:]), start=1):
        row_inner += cfg.inner_1d(tables.row_d[(a1, a2)], t[a2] - t[a1], pos, "t")
    col_inner = 0.0
    for pos, (b1, b2) in enumerate(zip(pis, pis[1:]), start=1):
        col_inner += cfg.inner_1d(tables.col_d[(b1, b2)], s[b2] - s[b1], pos, "s")
    mixed_inner = 0.0
    for pj, (b1, b2) in enumerate(zip(pis, pis[1:]), start=1):
        ws = s[b2] - s[b1]
        for pi_, (a1, a2) in enumerate(zip(pi, pi[1:]), start=1):
            mixed_inner += cfg.inner_2d(
                tables.cell_d[(a1, a2, b1, b2)], t[a2] - t[a1], ws, pi_, pj
            )
    return cfg.outer(row_inner) + cfg.outer(col_inner) + cfg.outer(mixed_inner)


def brute_force_sup(
    f: GridFunction2D, g: Optional[GridFunction2D], cfg: FamilyConfig
) -> SupResult:
    """Exact maximum by full enumeration; grids capped at 12 points per axis."""
    if g is not None:
        _check_compatible(f, g)
    if f.n > MAX_BRUTE_POINTS or f.m > MAX_BRUTE_POINTS:
        raise SizeGuardError(
            f"brute force capped at {MAX_BRUTE_POINTS} points per axis"
        )
    tables = _Tables(f, g)
    rows = enumerate_partitions(f.grid_t)
    cols = enumerate_partitions(f.grid_s)
    best = _NEG
    best_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for pi in rows:
        for pis in cols:
            v = _eval_total(tables, cfg, pi, pis)
            if v > best:
                best, best_pair = v, (pi, pis)
    assert best_pair is not None
    return SupResult(best, PartitionPair(*best_pair), "brute-force", True)


# -- bounded longest path ----------------------------------------------------


def _max_path_value(
    n: int, edge: Callable[[int, int], float], decided: tuple[bool, ...] = ()
) -> float:
    """Max total edge weight over 0 -> n-1 paths honouring a decided prefix.

    ``decided[k]`` fixes interior index ``k+1`` in (True) or out (False);
    undecided interiors are free.  Edge weights are nonnegative.
    """
    allowed = [True] * n
    required = [False] * n
    for k, b in enumerate(decided):
        if b:
            required[k + 1] = True
        else:
            allowed[k + 1] = False
    dp = [_NEG] * n
    dp[0] = 0.0
    for i in range(1, n):
        if not allowed[i]:
            continue
        best = _NEG
        for j in range(i - 1, -1, -1):
            if allowed[j] and dp[j] > _NEG:
                v = dp[j] + edge(j, i)
                if v > best:
                    best = v
            if required[j]:
                break
        dp[i] = best
    return dp[n - 1]


def _bound_edges(tables: _Tables, cfg: FamilyConfig):
    """Admissible per-edge bounds (Waterman weights relaxed to lambda_11=1)."""
    t, s = tables.t, tables.s
    waterman = cfg.family == "waterman"

    def r_edge(j: int, i: int) -> float:
        d = tables.row_d[(j, i)]
        return d if waterman else cfg.inner_1d(d, t[i] - t[j], 1, "t")

    def c_edge(j: int, i: int) -> float:
        d = tables.col_d[(j, i)]
        return d if waterman else cfg.inner_1d(d, s[i] - s[j], 1, "s")

    def cell_edge(b1: int, b2: int) -> Callable[[int, int], float]:
        ws = s[b2] - s[b1]

        def e(j: int, i: int) -> float:
            d = tables.cell_d[(j, i, b1, b2)]
            return d if waterman else cfg.inner_2d(d, t[i] - t[j], ws, 1, 1)

        return e

    return r_edge, c_edge, cell_edge


def bb_upper_bound(
    f: GridFunction2D,
    g: Optional[GridFunction2D],
    cfg: FamilyConfig,
    partial: PartialSelection,
) -> float:
    """Upper bound on the total over every completion of ``partial``.

    Rows, columns and the mixed term are bounded independently; the mixed
    bound lets each column interval pick its own best row path, which is a
    relaxation of the shared row partition and therefore admissible.
    """
    if g is not None:
        _check_compatible(f, g)
    n, m = f.n, f.m
    if len(partial.rows) == n - 2 and len(partial.cols) == m - 2:
        pi = (0, *(k + 1 for k, b in enumerate(partial.rows) if b), n - 1)
        pis = (0, *(k + 1 for k, b in enumerate(partial.cols) if b), m - 1)
        P = PartitionPair(pi, pis)
        if g is None:
            return variation_on_partition(f, P, cfg).total
        return joint_variation_on_partition(f, g, P, cfg).total
    tables = _Tables(f, g)
    r_edge, c_edge, cell_edge = _bound_edges(tables, cfg)
    w_ub = {
        (b1, b2): _max_path_value(n, cell_edge(b1, b2), partial.rows)
        for (b1, b2) in tables.col_d
    }
    return (
        cfg.outer(_max_path_value(n, r_edge, partial.rows))
        + cfg.outer(_max_path_value(m, c_edge, partial.cols))
        + cfg.outer(_max_path_value(m, lambda j, i: w_ub[(j, i)], partial.cols))
    )


# -- exact column solve for a fixed row subset -------------------------------


def _inclusion_key(path: tuple[int, ...], size: int) -> tuple[int, ...]:
    chosen = set(path)
    return tuple(1 if k in chosen else 0 for k in range(1, size - 1))


def _pareto_prune(states, size):
    # keep (c, w, path) not dominated in both sums; on full ties keep the
    # inclusion-lex smallest path
    states.sort(key=lambda st: (-st[0], -st[1], _inclusion_key(st[2], size)))
    kept = []
    best_w = _NEG
    prev = None
    for c, w, path in states:
        if prev is not None and c == prev[0] and w == prev[1]:
            continue
        if w > best_w:
            kept.append((c, w, path))
            best_w = w
            prev = (c, w)
    return kept


def _best_columns(
    tables: _Tables, cfg: FamilyConfig, pi: tuple[int, ...]
) -> tuple[int, ...]:
    """Column subset maximizing total for fixed rows; returns the argmax."""
    t, s, m = tables.t, tables.s, tables.m
    row_iv = list(enumerate(zip(pi, pi[1:]), start=1))

    def c_in(b1: int, b2: int, pj: int) -> float:
        return cfg.inner_1d(tables.col_d[(b1, b2)], s[b2] - s[b1], pj, "s")

    def w_in(b1: int, b2: int, pj: int) -> float:
        ws = s[b2] - s[b1]
        acc = 0.0
        for pi_, (a1, a2) in row_iv:
            acc += cfg.inner_2d(
                tables.cell_d[(a1, a2, b1, b2)], t[a2] - t[a1], ws, pi_, pj
            )
        return acc

    positional = cfg.family == "waterman"
    additive = positional or not cfg.has_outer_root or cfg.p == 1

    if additive:
        # dp[(node, pos)] -> (sum, path); pos collapses to 0 when weights
        # are position-free
        dp: dict[tuple[int, int], tuple[float, tuple[int, ...]]] = {
            (0, 0): (0.0, (0,))
        }
        for i in range(1, m):
            for j in range(i):
                for (node, pos), (val, path) in list(dp.items()):
                    if node != j:
                        continue
                    pj = pos + 1 if positional else 1
                    cand = val + c_in(j, i, pj) + w_in(j, i, pj)
                    key = (i, pos + 1 if positional else 0)
                    cur = dp.get(key)
                    if (
                        cur is None
                        or cand > cur[0]
                        or (
                            cand == cur[0]
                            and _inclusion_key(path + (i,), m)
                            < _inclusion_key(cur[1], m)
                        )
                    ):
                        dp[key] = (cand, path + (i,))
        best_val, best_path = _NEG, None
        for (node, _pos), (val, path) in dp.items():
            if node != m - 1:
                continue
            if val > best_val or (
                val == best_val
                and _inclusion_key(path, m) < _inclusion_key(best_path, m)
            ):
                best_val, best_path = val, path
        return best_path

    # outer 1/p couples the column and mixed sums: Pareto DP over the pair
    states: dict[int, list] = {0: [(0.0, 0.0, (0,))]}
    for i in range(1, m):
        cands = []
        for j in range(i):
            for c, w, path in states.get(j, ()):
                cands.append((c + c_in(j, i, 1), w + w_in(j, i, 1), path + (i,)))
        states[i] = _pareto_prune(cands, m)
    best_val, best_path = _NEG, None
    for c, w, path in states[m - 1]:
        val = cfg.outer(c) + cfg.outer(w)
        if val > best_val or (
            val == best_val
            and _inclusion_key(path, m) < _inclusion_key(best_path, m)
        ):
            best_val, best_path = val, path
    return best_path


def _branch_and_bound(
    f: GridFunction2D, g: Optional[GridFunction2D], cfg: FamilyConfig
) -> SupResult:
    n, m = f.n, f.m
    if n > MAX_BB_POINTS or m > MAX_BB_POINTS:
        raise SizeGuardError(
            f"branch-and-bound capped at {MAX_BB_POINTS} points per axis"
        )
    tables = _Tables(f, g)
    r_edge, c_edge, cell_edge = _bound_edges(tables, cfg)
    w_ub = {
        (b1, b2): _max_path_value(n, cell_edge(b1, b2))
        for (b1, b2) in tables.col_d
    }
    cw_bound = cfg.outer(_max_path_value(m, c_edge)) + cfg.outer(
        _max_path_value(m, lambda j, i: w_ub[(j, i)])
    )

    best = _NEG
    best_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    decided: list[bool] = []

    def dfs() -> None:
        nonlocal best, best_pair
        if len(decided) == n - 2:
            pi = (0, *(k + 1 for k, b in enumerate(decided) if b), n - 1)
            pis = _best_columns(tables, cfg, pi)
            val = _eval_total(tables, cfg, pi, pis)
            if val > best:
                best, best_pair = val, (pi, pis)
            return
        bound = cfg.outer(_max_path_value(n, r_edge, tuple(decided))) + cw_bound
        if bound <= best:
            return
        for choice in (False, True):
            decided.append(choice)
            dfs()
            decided.pop()

    dfs()
    assert best_pair is not None
    return SupResult(best, PartitionPair(*best_pair), "branch-and-bound", True)


# -- other methods ------------------------------------------------------------


def _jordan(
    f: GridFunction2D, g: Optional[GridFunction2D], cfg: FamilyConfig
) -> SupResult:
    P = f.full_partition()
    bd = (
        variation_on_partition(f, P, cfg)
        if g is None
        else joint_variation_on_partition(f, g, P, cfg)
    )
    return SupResult(bd.total, P, "jordan-full-grid", True)


def _greedy(
    f: GridFunction2D, g: Optional[GridFunction2D], cfg: FamilyConfig
) -> SupResult:
    def total(pi: tuple[int, ...], pis: tuple[int, ...]) -> float:
        P = PartitionPair(pi, pis)
        bd = (
            variation_on_partition(f, P, cfg)
            if g is None
            else joint_variation_on_partition(f, g, P, cfg)
        )
        return bd.total

    pi: tuple[int, ...] = (0, f.n - 1)
    pis: tuple[int, ...] = (0, f.m - 1)
    best = total(pi, pis)
    while True:
        cand_val, cand = best, None
        for idx in range(1, f.n - 1):
            if idx in pi:
                continue
            new_pi = tuple(sorted(pi + (idx,)))
            v = total(new_pi, pis)
            if v > cand_val:
                cand_val, cand = v, (new_pi, pis)
        for idx in range(1, f.m - 1):
            if idx in pis:
                continue
            new_pis = tuple(sorted(pis + (idx,)))
            v = total(pi, new_pis)
            if v > cand_val:
                cand_val, cand = v, (pi, new_pis)
        if cand is None:
            break
        best, (pi, pis) = cand_val, cand
    return SupResult(best, PartitionPair(pi, pis), "greedy", False)


_METHOD_ALIASES = {
    "auto": "auto",
    "brute": "brute-force",
    "brute-force": "brute-force",
    "bb": "branch-and-bound",
    "branch-and-bound": "branch-and-bound",
    "greedy": "greedy",
    "jordan": "jordan-full-grid",
    "jordan-full-grid": "jordan-full-grid",
}


def solve_sup(
    f: GridFunction2D,
    g: Optional[GridFunction2D],
    cfg: FamilyConfig,
    method: str = "auto",
) -> SupResult:
    """Supremum of (joint) variation totals over grid subpartitions."""
    if g is not None:
        _check_compatible(f, g)
    if method not in _METHOD_ALIASES:
        raise ConfigError(f"unknown method: {method!r}")
    resolved = _METHOD_ALIASES[method]
    is_jordan_family = cfg.family == "wiener" and cfg.p == 1
    if resolved == "auto":
        if is_jordan_family:
            resolved = "jordan-full-grid"
        elif f.n <= MAX_BB_POINTS and f.m <= MAX_BB_POINTS:
            resolved = "branch-and-bound"
        else:
            resolved = "greedy"
    if resolved == "jordan-full-grid":
        if not is_jordan_family:
            raise ConfigError("jordan-full-grid is exact only for wiener p=1")
        return _jordan(f, g, cfg)
    if resolved == "brute-force":
        return brute_force_sup(f, g, cfg)
    if resolved == "branch-and-bound":
        return _branch_and_bound(f, g, cfg)
    return _greedy(f, g, cfg)

"""Seeded property suites behind the ``verify`` command and the CI gate.

Each suite runs a named family of checks over random grid functions and
reports the number of violations plus the worst margin seen.  Margins are
relative to ``max(1, magnitude of the larger side)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gridfn import GeneratorSpec, Grid1D, GridFunction2D, synth_function
from .partition_search import brute_force_sup, solve_sup
from .semigroup import SemigroupInstance, verify_semigroup_laws
from .variation import FamilyConfig, joint_variation_on_partition, variation_on_partition

REL_TOL = 1e-9
ORACLE_TOL = 1e-12

STANDARD_INSTANCES = (
    SemigroupInstance("nonneg-real"),
    SemigroupInstance("real-vector", 3),
    SemigroupInstance("interval"),
    SemigroupInstance("box", 2),
)

STANDARD_CONFIGS = (
    FamilyConfig("wiener", p=0.5),
    FamilyConfig("wiener", p=1),
    FamilyConfig("wiener", p=2),
    FamilyConfig("riesz", p=2),
    FamilyConfig("waterman"),
    FamilyConfig("korenblum", p=2, kappa_alpha=0.5),
)


@dataclass
class Check:
    name: str
    cases: int = 0
    violations: int = 0
    worst: float = 0.0

    def note(self, lhs: float, rhs: float, tol: float = REL_TOL) -> None:
        """Record lhs <= rhs within relative tolerance."""
        self.cases += 1
        margin = (lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
        if margin > self.worst:
            self.worst = margin
        if margin > tol:
            self.violations += 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "violations": self.violations,
            "worst": self.worst,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.violations == 0 for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def random_grid(rng: random.Random, max_points: int = 4) -> Grid1D:
    """A random strictly increasing dyadic grid spanning [0,1]."""
    size = rng.randint(2, max_points)
    interior = sorted(rng.sample(range(1, 64), size - 2))
    return Grid1D((0.0, *(k / 64 for k in interior), 1.0))


def random_function(
    rng: random.Random, grid_t: Grid1D, grid_s: Grid1D, instance: SemigroupInstance
) -> GridFunction2D:
    return synth_function(
        GeneratorSpec.random_walk(0.5), grid_t, grid_s, instance, rng.randrange(2**31)
    )


def _perturb(f: GridFunction2D, rng: random.Random) -> GridFunction2D:
    """Copy of f with one payload nudged; never equal to f."""
    i = rng.randrange(f.n)
    j = rng.randrange(f.m)
    inst = f.instance
    bump = 0.25
    v = f.value(i, j)
    if inst.kind == "nonneg-real":
        nv = v + bump
    elif inst.kind == "real-vector":
        nv = (v[0] + bump, *v[1:])
    elif inst.kind == "interval":
        nv = (v[0], v[1] + bump)
    else:
        nv = ((v[0][0], v[0][1] + bump), *v[1:])
    values = list(map(list, f.values))
    values[i][j] = nv
    return GridFunction2D(f.grid_t, f.grid_s, inst, tuple(map(tuple, values)))


def suite_semigroup(seed: int, count: int) -> SuiteReport:
    checks = []
    for k, inst in enumerate(STANDARD_INSTANCES):
        report = verify_semigroup_laws(inst, count, seed + k)
        label = inst.kind if inst.dim is None else f"{inst.kind}({inst.dim})"
        check = Check(name=f"laws[{label}]")
        for result in report.laws.values():
            check.cases += 1
            if not result.passed:
                check.violations += 1
            if result.worst > check.worst:
                check.worst = result.worst
        checks.append(check)
    return SuiteReport("semigroup", checks)


def suite_axioms(seed: int, count: int) -> SuiteReport:
    """Metric axioms of the rho metric per (family config, instance)."""
    checks = []
    for cfg in STANDARD_CONFIGS:
        for inst in STANDARD_INSTANCES:
            rng = random.Random((seed, cfg.family, cfg.p, inst.kind).__repr__())
            label = f"{_cfg_label(cfg)}/{inst.kind}"
            sym = Check(name=f"symmetry[{label}]")
            idm = Check(name=f"identity[{label}]")
            tri = Check(name=f"triangle[{label}]")
            for _ in range(count):
                gt, gs = random_grid(rng), random_grid(rng)
                f = random_function(rng, gt, gs, inst)
                g = random_function(rng, gt, gs, inst)
                h = random_function(rng, gt, gs, inst)
                rfg = _rho(f, g, cfg)
                sym.note(abs(rfg - _rho(g, f, cfg)), 0.0, tol=0.0)
                idm.note(_rho(f, f, cfg), 0.0, tol=0.0)
                fp = _perturb(f, rng)
                idm.note(0.0 if _rho(f, fp, cfg) > 0 else 1.0, 0.0, tol=0.0)
                tri.note(rfg, _rho(f, h, cfg) + _rho(h, g, cfg))
            checks.extend([sym, idm, tri])
    return SuiteReport("axioms", checks)


def suite_lemmas(seed: int, count: int) -> SuiteReport:
    """Subadditivity and reverse-triangle bounds of the joint variation."""
    checks = []
    for cfg in STANDARD_CONFIGS:
        rng = random.Random((seed, _cfg_label(cfg)).__repr__())
        sub = Check(name=f"joint-subadditive[{_cfg_label(cfg)}]")
        rev = Check(name=f"reverse-triangle[{_cfg_label(cfg)}]")
        per = Check(name=f"per-partition-subadditive[{_cfg_label(cfg)}]")
        for _ in range(count):
            gt, gs = random_grid(rng), random_grid(rng)
            inst = STANDARD_INSTANCES[rng.randrange(len(STANDARD_INSTANCES))]
            f = random_function(rng, gt, gs, inst)
            g = random_function(rng, gt, gs, inst)
            vf = solve_sup(f, None, cfg).value
            vg = solve_sup(g, None, cfg).value
            vfg = solve_sup(f, g, cfg).value
            sub.note(vfg, vf + vg)
            rev.note(abs(vf - vg), vfg)
            P = f.full_partition()
            per.note(
                joint_variation_on_partition(f, g, P, cfg).total,
                variation_on_partition(f, P, cfg).total
                + variation_on_partition(g, P, cfg).total,
            )
        checks.extend([sub, rev, per])
    return SuiteReport("lemmas", checks)


def suite_search_oracle(seed: int, count: int, max_points: int = 6) -> SuiteReport:
    """solve_sup(auto) against exhaustive enumeration, plus the known
    coarse-optimum instance for families with an outer exponent."""
    checks = []
    for cfg in STANDARD_CONFIGS:
        rng = random.Random((seed, _cfg_label(cfg)).__repr__())
        check = Check(name=f"auto-vs-brute[{_cfg_label(cfg)}]")
        for k in range(count):
            gt = random_grid(rng, max_points)
            gs = random_grid(rng, max_points)
            inst = STANDARD_INSTANCES[rng.randrange(len(STANDARD_INSTANCES))]
            f = random_function(rng, gt, gs, inst)
            g = random_function(rng, gt, gs, inst) if k % 2 else None
            auto = solve_sup(f, g, cfg)
            brute = brute_force_sup(f, g, cfg)
            check.note(abs(auto.value - brute.value), 0.0, tol=ORACLE_TOL)
        f = _coarse_optimum_instance()
        auto = solve_sup(f, None, cfg)
        brute = brute_force_sup(f, None, cfg)
        check.note(abs(auto.value - brute.value), 0.0, tol=ORACLE_TOL)
        checks.append(check)
    return SuiteReport("search-oracle", checks)


def _coarse_optimum_instance() -> GridFunction2D:
    # values 0,1,2 along t: for p>1 the coarse partition {0,1} beats the
    # full grid (2 > 2^(1/p) * ... ), exercising non-monotone refinement
    grid_t = Grid1D((0.0, 0.5, 1.0))
    grid_s = Grid1D((0.0, 1.0))
    inst = SemigroupInstance("nonneg-real")
    values = ((0.0, 0.0), (1.0, 1.0), (2.0, 2.0))
    return GridFunction2D(grid_t, grid_s, inst, values)


def _rho(f, g, cfg) -> float:
    base = f.instance.dist(f.value(0, 0), g.value(0, 0))
    return base + solve_sup(f, g, cfg).value


def _cfg_label(cfg: FamilyConfig) -> str:
    if cfg.family == "wiener":
        return f"wiener({cfg.p:g})"
    if cfg.family == "riesz":
        return f"riesz({cfg.p:g})"
    if cfg.family == "waterman":
        return "waterman(harmonic)"
    return f"korenblum(a={cfg.kappa_alpha:g},p={cfg.p:g})"


SUITES = {
    "semigroup": suite_semigroup,
    "axioms": suite_axioms,
    "lemmas": suite_lemmas,
    "search-oracle": suite_search_oracle,
}


def run_suite(name: str, seed: int, count: int) -> SuiteReport:
    from .errors import InputError

    if name not in SUITES:
        raise InputError(f"unknown suite: {name!r} (have {sorted(SUITES)})")
    if count < 1:
        raise InputError("count must be >= 1")
    return SUITES[name](seed, count)

"""Acceptance gate: nine pinned criteria with fixed tolerances and budgets.

Each test prints a single PASS line naming the criterion, so the -v output
doubles as the acceptance checklist.  Tolerances and sample counts are part
of the contract and must not be loosened.
"""

import random
import time

from bvgrid import (
    FamilyConfig,
    GeneratorSpec,
    Grid1D,
    GridFunction2D,
    SemigroupInstance,
    brute_force_sup,
    build_epsilon_net,
    partition_image,
    product_rho_prime,
    rho_on_partition,
    solve_sup,
    synth_function,
    variation_on_partition,
    verify_epsilon_net,
    verify_semigroup_laws,
)
from conftest import ALL_CONFIGS, REAL, scalar_fn, theta_family

INSTANCES = (
    SemigroupInstance("nonneg-real"),
    SemigroupInstance("real-vector", 3),
    SemigroupInstance("interval"),
    SemigroupInstance("box", 2),
)


def _grid(rng: random.Random, size: int) -> Grid1D:
    interior = sorted(rng.sample(range(1, 64), size - 2))
    return Grid1D((0.0, *(k / 64 for k in interior), 1.0))


def _walk(rng, gt, gs, inst):
    return synth_function(
        GeneratorSpec.random_walk(0.5), gt, gs, inst, rng.randrange(2**31)
    )


def _rho(f, g, cfg) -> float:
    base = f.instance.dist(f.value(0, 0), g.value(0, 0))
    return base + solve_sup(f, g, cfg).value


def _report(name: str, elapsed: float) -> None:
    print(f"PASS {name} ({elapsed:.1f}s)")


def test_criterion_1_semigroup_laws():
    """1000 samples per instance satisfy all laws; exact for set-valued
    instances, 1e-12 relative for float-backed ones; under 10 seconds."""
    t0 = time.time()
    for k, inst in enumerate(INSTANCES):
        report = verify_semigroup_laws(inst, 1000, seed=100 + k)
        assert report.all_passed, (inst, report.to_json())
    elapsed = time.time() - t0
    assert elapsed < 10.0
    _report("criterion-1 semigroup-laws", elapsed)


def test_criterion_2_rho_metric_axioms():
    """200 random triples per (config, instance) on 4x4 grids satisfy
    symmetry (exact), identity both ways, and triangle within 1e-9."""
    t0 = time.time()
    for cfg in ALL_CONFIGS:
        for inst in INSTANCES:
            rng = random.Random(f"axioms/{cfg}/{inst}")
            for _ in range(200):
                gt, gs = _grid(rng, 4), _grid(rng, 4)
                f, g, h = (_walk(rng, gt, gs, inst) for _ in range(3))
                rfg = _rho(f, g, cfg)
                assert rfg == _rho(g, f, cfg)
                assert _rho(f, f, cfg) == 0.0
                if f != g:
                    assert rfg > 0.0
                bound = _rho(f, h, cfg) + _rho(h, g, cfg)
                assert rfg <= bound + 1e-9 * max(1.0, rfg, bound)
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report("criterion-2 rho-metric-axioms", elapsed)


def test_criterion_3_joint_variation_bounds():
    """V(f,g) <= V(f)+V(g) and |V(f)-V(g)| <= V(f,g) within 1e-9 relative
    on 500 pairs per family, 4x4 grids."""
    t0 = time.time()
    for cfg in ALL_CONFIGS:
        rng = random.Random(f"lemmas/{cfg}")
        for _ in range(500):
            gt, gs = _grid(rng, 4), _grid(rng, 4)
            inst = INSTANCES[rng.randrange(4)]
            f = _walk(rng, gt, gs, inst)
            g = _walk(rng, gt, gs, inst)
            vf = solve_sup(f, None, cfg).value
            vg = solve_sup(g, None, cfg).value
            vfg = solve_sup(f, g, cfg).value
            scale = 1e-9 * max(1.0, vf + vg, vfg)
            assert vfg <= vf + vg + scale
            assert abs(vf - vg) <= vfg + scale
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report("criterion-3 joint-variation-bounds", elapsed)


def test_criterion_4_search_oracle_equivalence():
    """solve_sup(auto) equals brute force within 1e-12 relative on 100
    instances per family up to 6x6, plus the coarse-optimum instance."""
    t0 = time.time()
    for cfg in ALL_CONFIGS:
        rng = random.Random(f"oracle/{cfg}")
        for k in range(100):
            gt = _grid(rng, rng.randint(2, 6))
            gs = _grid(rng, rng.randint(2, 6))
            inst = INSTANCES[rng.randrange(4)]
            f = _walk(rng, gt, gs, inst)
            g = _walk(rng, gt, gs, inst) if k % 2 else None
            a = solve_sup(f, g, cfg).value
            b = brute_force_sup(f, g, cfg).value
            assert abs(a - b) <= 1e-12 * max(1.0, a, b), (cfg, a, b)
    step = scalar_fn([[0, 0], [1, 1], [2, 2]])
    res = solve_sup(step, None, FamilyConfig("wiener", p=2))
    assert res.value == 2.0
    assert res.argmax.pi == (0, 2)
    elapsed = time.time() - t0
    assert elapsed < 300.0
    _report("criterion-4 search-oracle", elapsed)


def test_criterion_5_group_case_reduction():
    """For real scalars under wiener(1) the distance equals the base gap
    plus the plain variation of the difference; exact to 1e-12, 200 pairs."""
    t0 = time.time()
    cfg = FamilyConfig("wiener", p=1)
    vec1 = SemigroupInstance("real-vector", 1)
    rng = random.Random("group-case")
    for _ in range(200):
        gt, gs = _grid(rng, rng.randint(2, 5)), _grid(rng, rng.randint(2, 5))
        f = _walk(rng, gt, gs, REAL)
        g = _walk(rng, gt, gs, REAL)
        diff = GridFunction2D(
            gt,
            gs,
            vec1,
            tuple(
                tuple((f.value(i, j) - g.value(i, j),) for j in range(f.m))
                for i in range(f.n)
            ),
        )
        lhs = _rho(f, g, cfg)
        rhs = abs(f.value(0, 0) - g.value(0, 0)) + solve_sup(diff, None, cfg).value
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, lhs, rhs)
    elapsed = time.time() - t0
    _report("criterion-5 group-case-reduction", elapsed)


def test_criterion_6_separable_mixed_term_vanishes():
    """Functions of the form a*t + b*s have zero mixed term for every
    family and every partition pair; 100 instances."""
    t0 = time.time()
    rng = random.Random("separable")
    for _ in range(100):
        gt, gs = _grid(rng, rng.randint(2, 4)), _grid(rng, rng.randint(2, 4))
        a = rng.randrange(0, 33) / 8
        b = rng.randrange(0, 33) / 8
        f = synth_function(GeneratorSpec.separable_additive(a, b), gt, gs, REAL)
        from bvgrid import enumerate_partitions
        from bvgrid.gridfn import PartitionPair

        for pi in enumerate_partitions(gt):
            for pis in enumerate_partitions(gs):
                P = PartitionPair(pi, pis)
                for cfg in ALL_CONFIGS:
                    assert variation_on_partition(f, P, cfg).mixed == 0.0
    elapsed = time.time() - t0
    _report("criterion-6 separable-mixed-zero", elapsed)


def test_criterion_7_partition_evaluation_isometry():
    """The tuple map preserves distances: the product metric on images
    equals the per-partition metric, bit-exactly, 200 cases per family."""
    t0 = time.time()
    for cfg in ALL_CONFIGS:
        rng = random.Random(f"isometry/{cfg}")
        for _ in range(200):
            gt, gs = _grid(rng, rng.randint(2, 5)), _grid(rng, rng.randint(2, 5))
            inst = INSTANCES[rng.randrange(4)]
            f = _walk(rng, gt, gs, inst)
            g = _walk(rng, gt, gs, inst)
            pi = tuple(
                sorted({0, f.n - 1, *rng.sample(range(f.n), rng.randint(0, f.n - 1))})
            )
            pis = tuple(
                sorted({0, f.m - 1, *rng.sample(range(f.m), rng.randint(0, f.m - 1))})
            )
            from bvgrid.gridfn import PartitionPair

            P = PartitionPair(pi, pis)
            lhs = product_rho_prime(partition_image(f, P), partition_image(g, P), cfg)
            rhs = rho_on_partition(f, g, P, cfg)
            assert lhs == rhs
    elapsed = time.time() - t0
    _report("criterion-7 isometry", elapsed)


def test_criterion_8_constructive_net():
    """The 101-member scaled-product family has a verified 0.1-net with at
    most 11 centers under wiener(1); under 60 seconds."""
    t0 = time.time()
    fam = theta_family(101)
    cfg = FamilyConfig("wiener", p=1)
    net = build_epsilon_net(fam, 0.1, cfg)
    assert net.certificate.holds
    assert len(net.center_indices) <= 11
    ver = verify_epsilon_net(fam, net.center_indices, 0.1, cfg)
    assert ver.ok, ver.to_json()
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report("criterion-8 constructive-net", elapsed)


def test_criterion_9_convergence_scaling():
    """rho(f + g/u, f) is non-increasing in u and scales as 1/u relative
    to the u=1 baseline, within 1e-9, for u in {1,2,4,8,16}."""
    t0 = time.time()
    cfg = FamilyConfig("wiener", p=1)
    rng = random.Random("convergence")
    for _ in range(20):
        gt, gs = _grid(rng, rng.randint(2, 5)), _grid(rng, rng.randint(2, 5))
        f = _walk(rng, gt, gs, REAL)
        g = _walk(rng, gt, gs, REAL)
        values = []
        for u in (1, 2, 4, 8, 16):
            fu = GridFunction2D(
                gt,
                gs,
                REAL,
                tuple(
                    tuple(f.value(i, j) + g.value(i, j) / u for j in range(f.m))
                    for i in range(f.n)
                ),
            )
            values.append(_rho(fu, f, cfg))
        baseline = values[0]
        for k, u in enumerate((1, 2, 4, 8, 16)):
            if k:
                assert values[k] <= values[k - 1] + 1e-9 * max(1.0, values[k - 1])
            assert abs(values[k] - baseline / u) <= 1e-9 * max(1.0, baseline)
    elapsed = time.time() - t0
    _report("criterion-9 convergence-scaling", elapsed)

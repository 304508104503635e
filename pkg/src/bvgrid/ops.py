"""Command implementations shared by the CLI and the HTTP service.

Each operation takes already-parsed JSON objects, runs the computation,
and returns a Report.  Input validation errors surface as InputError and
size limits as SizeGuardError; callers map those to exit codes or HTTP
status codes.
"""

from __future__ import annotations

from .errors import InputError
from .gridfn import function_from_json
from .partition_search import solve_sup
from .precompactness import (
    FunctionFamily,
    build_epsilon_net,
    verify_epsilon_net,
)
from .report import Report, make_report
from .suites import run_suite
from .variation import FamilyConfig, joint_variation_on_partition, variation_on_partition


def _load_config(obj: dict) -> FamilyConfig:
    if not isinstance(obj, dict):
        raise InputError("family config must be a JSON object")
    return FamilyConfig.from_json(obj)


def run_variation(function_obj: dict, config_obj: dict, method: str = "auto") -> Report:
    f = function_from_json(function_obj)
    cfg = _load_config(config_obj)
    sup = solve_sup(f, None, cfg, method=method)
    breakdown = variation_on_partition(f, sup.argmax, cfg)
    results = {
        "sup": sup.to_json(),
        "breakdown": breakdown.to_json(),
    }
    return make_report(
        "variation",
        {"function": function_obj, "family_config": config_obj},
        results,
        status="computed",
    )


def run_distance(
    function_a_obj: dict, function_b_obj: dict, config_obj: dict, method: str = "auto"
) -> Report:
    f = function_from_json(function_a_obj)
    g = function_from_json(function_b_obj)
    cfg = _load_config(config_obj)
    sup = solve_sup(f, g, cfg, method=method)
    base = f.instance.dist(f.value(0, 0), g.value(0, 0))
    breakdown = joint_variation_on_partition(f, g, sup.argmax, cfg)
    results = {
        "rho": base + sup.value,
        "base_distance": base,
        "sup": sup.to_json(),
        "breakdown": breakdown.to_json(),
    }
    return make_report(
        "distance",
        {
            "function_a": function_a_obj,
            "function_b": function_b_obj,
            "family_config": config_obj,
        },
        results,
        status="computed",
    )


def run_verify(suite: str, seed: int, count: int) -> Report:
    report = run_suite(suite, seed, count)
    results = report.to_json()
    results["seed"] = seed
    results["count"] = count
    return make_report(
        "verify",
        {"suite": suite, "seed": seed, "count": count},
        results,
        status="pass" if report.passed else "fail",
    )


def run_precompact(family_obj: dict, epsilon: float, config_obj: dict) -> Report:
    if not isinstance(epsilon, (int, float)) or not epsilon > 0:
        raise InputError("epsilon must be a positive number")
    family = FunctionFamily.from_json(family_obj)
    cfg = _load_config(config_obj)
    net = build_epsilon_net(family, float(epsilon), cfg)
    if net.certificate.holds:
        verification = verify_epsilon_net(
            family, net.center_indices, float(epsilon), cfg
        )
        status = "pass" if verification.ok else "fail"
        note = None
    else:
        verification = None
        status = "fail"
        note = "no witness found"
    results = {
        "epsilon": float(epsilon),
        "net": net.to_json(),
        "verification": verification.to_json() if verification else None,
    }
    if note:
        results["note"] = note
    return make_report(
        "precompact",
        {"family": family_obj, "epsilon": float(epsilon), "family_config": config_obj},
        results,
        status=status,
    )

"""Shared helpers for the test suite."""

from __future__ import annotations

import pytest

from bvgrid import (
    FamilyConfig,
    FunctionFamily,
    Grid1D,
    GridFunction2D,
    SemigroupInstance,
)

REAL = SemigroupInstance("nonneg-real")


def scalar_fn(values, grid_t=None, grid_s=None) -> GridFunction2D:
    """Build a nonneg-real grid function from a nested list of values."""
    n, m = len(values), len(values[0])
    if grid_t is None:
        grid_t = Grid1D(tuple(i / (n - 1) for i in range(n)))
    if grid_s is None:
        grid_s = Grid1D(tuple(j / (m - 1) for j in range(m)))
    payloads = tuple(tuple(float(v) for v in row) for row in values)
    return GridFunction2D(grid_t, grid_s, REAL, payloads)


def theta_family(count: int = 101) -> FunctionFamily:
    """Scaled product functions theta * (t*s) on the grid {0,1}^2."""
    gt = Grid1D((0.0, 1.0))
    gs = Grid1D((0.0, 1.0))
    members, labels = [], []
    for k in range(count):
        theta = k / (count - 1)
        members.append(
            GridFunction2D(gt, gs, REAL, ((0.0, 0.0), (0.0, theta)))
        )
        labels.append(f"f_{theta:g}")
    return FunctionFamily(tuple(members), tuple(labels))


@pytest.fixture
def wiener1() -> FamilyConfig:
    return FamilyConfig("wiener", p=1)


@pytest.fixture
def wiener2() -> FamilyConfig:
    return FamilyConfig("wiener", p=2)


ALL_CONFIGS = (
    FamilyConfig("wiener", p=0.5),
    FamilyConfig("wiener", p=1),
    FamilyConfig("wiener", p=2),
    FamilyConfig("riesz", p=2),
    FamilyConfig("waterman"),
    FamilyConfig("korenblum", p=2, kappa_alpha=0.5),
)

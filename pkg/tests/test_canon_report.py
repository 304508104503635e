"""Canonical JSON and report determinism."""

import math

import pytest

from bvgrid.canon import canonical_dump_bytes, canonical_dumps
from bvgrid.report import input_digest, make_report


def test_keys_are_sorted_and_stable():
    a = canonical_dumps({"b": 1, "a": 2})
    b = canonical_dumps({"a": 2, "b": 1})
    assert a == b
    assert a.index('"a"') < a.index('"b"')


def test_float_formatting_is_reproducible():
    s1 = canonical_dumps({"x": 0.1 + 0.2})
    s2 = canonical_dumps({"x": 0.30000000000000004})
    assert s1 == s2
    assert "0.30000000000000004" in s1


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        canonical_dumps({"x": math.nan})
    with pytest.raises(ValueError):
        canonical_dumps({"x": math.inf})


def test_dump_bytes_ends_with_newline():
    assert canonical_dump_bytes([1, 2]).endswith(b"\n")


def test_input_digest_ignores_key_order():
    assert input_digest({"a": 1, "b": [1.5]}) == input_digest({"b": [1.5], "a": 1})


def test_report_bytes_are_deterministic():
    r1 = make_report("variation", {"f": {"x": 1}}, {"v": 2.0}, status="computed")
    r2 = make_report("variation", {"f": {"x": 1}}, {"v": 2.0}, status="computed")
    assert r1.dump_bytes() == r2.dump_bytes()
    obj = r1.to_json()
    assert set(obj) == {"command", "tool_version", "inputs", "results", "status"}
    assert len(obj["inputs"]["f"]) == 64

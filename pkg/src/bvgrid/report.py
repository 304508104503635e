"""Deterministic run reports.

Reports carry the tool version, sha256 digests of the canonical form of
each input, and a results object.  Serializing the same report twice gives
byte-identical output.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .canon import canonical_dump_bytes, canonical_dumps

TOOL_VERSION = "0.1.0"


def input_digest(obj) -> str:
    """sha256 of the canonical JSON encoding of a JSON-able object."""
    return hashlib.sha256(canonical_dumps(obj).encode("utf-8")).hexdigest()


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict
    status: str = "ok"
    tool_version: str = TOOL_VERSION
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        body = {
            "command": self.command,
            "tool_version": self.tool_version,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status,
        }
        body.update(self.extra)
        return body

    def dump_bytes(self) -> bytes:
        return canonical_dump_bytes(self.to_json())


def make_report(command: str, inputs: dict, results: dict, status: str = "ok") -> Report:
    digests = {name: input_digest(obj) for name, obj in sorted(inputs.items())}
    return Report(command=command, inputs=digests, results=results, status=status)

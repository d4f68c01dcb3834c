"""JSON wire formats for colourings, chains, and plans.

Plans embed a hash of the graph's serialized form so a plan cannot be
replayed against a different graph by accident. All emitters are
deterministic: same inputs, byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .colouring import Colouring, KempeChain
from .formats import emit_graph
from .graph import Graph
from .planner import RecolouringPlan

SCHEMA_VERSION = 1


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(emit_graph(g, "graph6").encode("ascii")).hexdigest()[:16]


def colouring_to_dict(c: Colouring) -> dict[str, Any]:
    return {"k": c.k, "colours": list(c.colours)}


def colouring_from_dict(data: dict[str, Any]) -> Colouring:
    return Colouring(int(data["k"]), tuple(int(x) for x in data["colours"]))


def chain_to_dict(chain: KempeChain) -> dict[str, Any]:
    return {"a": chain.a, "b": chain.b, "vertices": sorted(chain.vertices)}


def chain_from_dict(data: dict[str, Any]) -> KempeChain:
    return KempeChain(
        int(data["a"]), int(data["b"]), frozenset(int(v) for v in data["vertices"])
    )


def plan_to_dict(g: Graph, plan: RecolouringPlan) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "graph_sha256": graph_digest(g),
        "start": colouring_to_dict(plan.start),
        "target": colouring_to_dict(plan.target),
        "steps": [chain_to_dict(s) for s in plan.steps],
    }


def plan_from_dict(g: Graph, data: dict[str, Any]) -> RecolouringPlan:
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported plan schema {data.get('schema')!r}")
    digest = data.get("graph_sha256")
    if digest != graph_digest(g):
        raise ValueError("plan was produced for a different graph")
    return RecolouringPlan(
        start=colouring_from_dict(data["start"]),
        target=colouring_from_dict(data["target"]),
        steps=tuple(chain_from_dict(s) for s in data["steps"]),
    )


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"

"""Deterministic JSON and DOT serialisation of engine results."""
from __future__ import annotations

import json

from .attacks import AttackKind


def extension_set_dict(result) -> dict:
    return {
        "semantics": str(result.semantics),
        "extensions": [
            {"assumptions": sorted(e.members), "conclusions": sorted(e.conclusions)}
            for e in result.extensions
        ],
    }


def emit_extensions(result) -> str:
    return json.dumps(extension_set_dict(result), sort_keys=True)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def set_label(s) -> str:
    return "{" + ", ".join(sorted(s)) + "}"


def _node_key(s):
    return (len(s), sorted(s))


def emit_dot(graph, name: str = "assumptions") -> str:
    """Render ``(nodes, edges)`` from :func:`attack_graph` as a DOT digraph.

    Reverse attacks are dotted; normal attacks, and attacks that are both
    normal and reverse, are solid.
    """
    nodes, edges = graph
    nodes = sorted(nodes, key=_node_key)
    ids = {s: f"n{i}" for i, s in enumerate(nodes)}
    lines = [f"digraph {name} {{"]
    for s in nodes:
        lines.append(f'  {ids[s]} [label="{set_label(s)}"];')
    for e in sorted(edges, key=lambda e: (_node_key(e.source), _node_key(e.target))):
        style = "dotted" if e.kind is AttackKind.REVERSE else "solid"
        lines.append(f'  {ids[e.source]} -> {ids[e.target]} [style={style}, label="{e.kind.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

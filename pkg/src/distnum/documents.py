"""JSON document schemas for actions and graphs, plus the named fixture registry.

Action documents carry a generating set for the group (0-based image
arrays) and, optionally, a per-generator image array describing how each
generator moves the domain; when the action section is omitted the group
acts naturally on its own points.  Graph documents are a vertex count plus
an edge list.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Mapping

from . import catalog
from .graphs import (
    Graph,
    make_complete,
    make_cycle,
    make_figure2_graphs,
    make_figure4_graph,
    make_figure7_tree,
)
from .perms import (
    DEFAULT_ELEMENT_CAP,
    GroupAction,
    Perm,
    PreconditionError,
    action_from_generator_images,
    enumerate_group,
    tautological_action,
)

__all__ = [
    "DocumentError",
    "parse_action_document",
    "parse_graph_document",
    "action_document",
    "graph_document",
    "fixture_names",
    "build_fixture",
]


class DocumentError(ValueError):
    """An input document is malformed or inconsistent."""


def _require_int(doc: Mapping[str, Any], key: str, minimum: int) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise DocumentError(f"'{key}' must be an integer >= {minimum}")
    return value


def _parse_perm(raw: Any, degree: int, where: str) -> Perm:
    if not isinstance(raw, list) or len(raw) != degree:
        raise DocumentError(f"{where} must be a length-{degree} array of 0-based images")
    try:
        return Perm(raw)
    except PreconditionError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_action_document(doc: Mapping[str, Any], element_cap: int = DEFAULT_ELEMENT_CAP) -> GroupAction:
    if not isinstance(doc, Mapping):
        raise DocumentError("action document must be a JSON object")
    known = {"degree", "generators", "domain_size", "generator_action"}
    unknown = set(doc) - known
    if unknown:
        raise DocumentError(f"unknown action document keys: {sorted(unknown)}")
    degree = _require_int(doc, "degree", 1)
    raw_gens = doc.get("generators")
    if not isinstance(raw_gens, list):
        raise DocumentError("'generators' must be an array of permutations")
    generators = [
        _parse_perm(raw, degree, f"generators[{i}]") for i, raw in enumerate(raw_gens)
    ]
    raw_action = doc.get("generator_action")
    if raw_action is None:
        if "domain_size" in doc and doc["domain_size"] != degree:
            raise DocumentError("without 'generator_action' the action is natural, so domain_size must equal degree")
        group = enumerate_group(degree, generators, element_cap)
        return tautological_action(group)
    domain_size = _require_int(doc, "domain_size", 1)
    if not isinstance(raw_action, list) or len(raw_action) != len(generators):
        raise DocumentError("'generator_action' must hold exactly one image array per generator")
    images = [
        _parse_perm(raw, domain_size, f"generator_action[{i}]")
        for i, raw in enumerate(raw_action)
    ]
    try:
        return action_from_generator_images(degree, generators, domain_size, images, element_cap)
    except PreconditionError as exc:
        raise DocumentError(str(exc)) from None


def parse_graph_document(doc: Mapping[str, Any]) -> Graph:
    if not isinstance(doc, Mapping):
        raise DocumentError("graph document must be a JSON object")
    unknown = set(doc) - {"vertices", "edges"}
    if unknown:
        raise DocumentError(f"unknown graph document keys: {sorted(unknown)}")
    vertices = _require_int(doc, "vertices", 1)
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise DocumentError("'edges' must be an array of [u, v] pairs")
    edges = []
    for i, raw in enumerate(raw_edges):
        if not isinstance(raw, list) or len(raw) != 2 or not all(isinstance(x, int) for x in raw):
            raise DocumentError(f"edges[{i}] must be a pair of vertex indices")
        edges.append((raw[0], raw[1]))
    try:
        return Graph(vertices, edges)
    except PreconditionError as exc:
        raise DocumentError(str(exc)) from None


def action_document(action: GroupAction, natural: bool = False) -> dict[str, Any]:
    """Serialize an action as its generating data (round-trips through parsing)."""
    doc: dict[str, Any] = {
        "degree": action.group.degree,
        "generators": [list(g.image) for g in action.group.generators],
    }
    if not natural:
        doc["domain_size"] = action.domain_size
        doc["generator_action"] = [list(p.image) for p in action.generator_images()]
    return doc


def graph_document(graph: Graph) -> dict[str, Any]:
    return {"vertices": graph.vertex_count, "edges": graph.edge_list()}


def _natural_s4_document() -> dict[str, Any]:
    return action_document(catalog.natural_action(4), natural=True)


_ACTION_FIXTURES: dict[str, Callable[[], GroupAction]] = {
    "trivial": lambda: catalog.trivial_action(catalog.symmetric_group(4), 1),
    "figure3": lambda: catalog.conjugation_action(3),
    "s4-conjugation": lambda: catalog.conjugation_action(4),
    "s5-conjugation": lambda: catalog.conjugation_action(5),
    "figure5": catalog.s4_inverse_pair_action,
    "s4-translation": lambda: catalog.translation_action(catalog.symmetric_group(4)),
}

_GRAPH_FIXTURES: dict[str, Callable[[], Graph]] = {
    **{f"c{n}": (lambda n=n: make_cycle(n)) for n in range(3, 13)},
    **{f"k{n}": (lambda n=n: make_complete(n)) for n in range(2, 7)},
    "figure2-g1": lambda: make_figure2_graphs()[0],
    "figure2-g2": lambda: make_figure2_graphs()[1],
    "figure2-g3": lambda: make_figure2_graphs()[2],
    "figure4": make_figure4_graph,
    "figure7": make_figure7_tree,
}


def fixture_names() -> tuple[str, ...]:
    names = ["natural-s4"]
    names += list(_ACTION_FIXTURES)
    names += list(_GRAPH_FIXTURES)
    return tuple(sorted(names))


def build_fixture(name: str) -> tuple[str, dict[str, Any]]:
    """Return ('action'|'graph', document) for a registered fixture name."""
    if name == "natural-s4":
        return "action", _natural_s4_document()
    if name in _ACTION_FIXTURES:
        return "action", action_document(_ACTION_FIXTURES[name]())
    if name in _GRAPH_FIXTURES:
        return "graph", graph_document(_GRAPH_FIXTURES[name]())
    raise DocumentError(f"unknown fixture '{name}'")


def document_digest(doc: Mapping[str, Any]) -> str:
    import hashlib

    payload = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(payload).hexdigest()

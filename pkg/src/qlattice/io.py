"""JSON wire formats: context files, word literals and weight tables.

A context file describes the commutation graph:

    {"vertices": [{"name": "a", "factor": "Z"},
                  {"name": "v", "factor": {"artin": {"generators": ["s","t"],
                                                     "m": [[1,3],[3,1]]}}}],
     "edges": [["a", "v"]]}

A word literal is an array of syllables: an integer for a Z vertex, a
positive word string or a {"num": ..., "den": ...} fraction for an Artin
vertex, e.g. [["a", 2], ["v", "sts"], ["v", {"num": "s", "den": "t"}]].
"""

from __future__ import annotations

import json

from .factors import ArtinFraction
from .graph import CommutationGraph, NormalWord


class LiteralError(ValueError):
    """Malformed context/word/weight input."""


def graph_from_json(doc):
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise LiteralError("context must be an object with a 'vertices' list")
    vertices = []
    for entry in doc["vertices"]:
        try:
            vertices.append((entry["name"], entry["factor"]))
        except (TypeError, KeyError) as exc:
            raise LiteralError(f"bad vertex entry {entry!r}") from exc
    edges = doc.get("edges", [])
    try:
        return CommutationGraph(vertices, edges)
    except (ValueError, KeyError) as exc:
        raise LiteralError(str(exc)) from exc


def load_graph(path):
    with open(path) as fh:
        return graph_from_json(json.load(fh))


def graph_to_json(graph):
    return {
        "vertices": [
            {"name": v, "factor": graph.ops[v].spec_json()} for v in graph.vertices
        ],
        "edges": [list(e) for e in graph.edges()],
    }


def parse_element(graph, vertex, raw):
    ops = graph.ops.get(vertex)
    if ops is None:
        raise LiteralError(f"unknown vertex {vertex!r}")
    if ops.kind == "Z":
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise LiteralError(f"vertex {vertex!r} takes an integer, got {raw!r}")
        return raw
    if isinstance(raw, str):
        return ops.element(ops.monoid.parse_word(raw))
    if isinstance(raw, dict) and set(raw) <= {"num", "den"}:
        return ops.element(
            ops.monoid.parse_word(raw.get("num", "")),
            ops.monoid.parse_word(raw.get("den", "")),
        )
    raise LiteralError(f"bad Artin element literal {raw!r}")


def parse_word(graph, literal):
    """Word literal -> canonical NormalWord."""
    if isinstance(literal, str):
        literal = json.loads(literal)
    if not isinstance(literal, list):
        raise LiteralError("a word literal is a JSON array of syllables")
    syllables = []
    for item in literal:
        if not (isinstance(item, list) and len(item) == 2):
            raise LiteralError(f"bad syllable {item!r}")
        vertex, raw = item
        element = parse_element(graph, vertex, raw)
        if graph.ops[vertex].is_identity(element):
            raise LiteralError(f"trivial syllable {item!r}")
        syllables.append(graph.syllable(vertex, element))
    return graph.reduce(syllables)


def element_to_json(graph, vertex, element):
    if graph.ops[vertex].kind == "Z":
        return element
    if element.den:
        return {"num": "".join(element.num), "den": "".join(element.den)}
    return "".join(element.num)


def word_to_json(graph, x):
    x = x if isinstance(x, NormalWord) else graph.reduce(x)
    return [[s.vertex, element_to_json(graph, s.vertex, s.element)] for s in x.syllables]


def fraction_element_to_json(element):
    if isinstance(element, ArtinFraction):
        return "".join(element.num)
    return element


def parse_weights(graph, literal):
    """{"label": weight} -> {generator NormalWord: weight}."""
    if isinstance(literal, str):
        literal = json.loads(literal)
    if not isinstance(literal, dict) or not literal:
        raise LiteralError("weights must be a nonempty JSON object")
    labels = graph.generator_labels()
    out = {}
    for label, weight in literal.items():
        if label not in labels:
            raise LiteralError(f"unknown generator label {label!r}")
        if not isinstance(weight, (int, float)) or weight < 0:
            raise LiteralError(f"weight for {label!r} must be nonnegative")
        vertex, element = labels[label]
        out[graph.reduce([graph.syllable(vertex, element)])] = float(weight)
    return out

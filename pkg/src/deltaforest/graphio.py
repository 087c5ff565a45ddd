"""Graph serialization: one JSON schema and DOT text for every tree kind.

The JSON schema is shared by loaded trees, weighted trees, redundancy
trees, and forests::

    {"vertices": [{"id": int, "labels": [int], "weight": int}, ...],
     "edges":    [{"u": int, "v": int, "multiplicity": int, "weight": int}, ...]}

with ``labels``/``weight``/``multiplicity`` present only where the
structure defines them.  DOT output is an undirected ``graph``; node
labels show label sets or weights, edge labels show multiplicities or
weights.
"""
from __future__ import annotations

from .forest import RedundancyForest, RedundancyTree, WeightedTree
from .trees import LoadedTree

_SERIALIZABLE = (LoadedTree, WeightedTree, RedundancyTree, RedundancyForest)


def tree_to_json(t) -> dict:
    """JSON-ready dict for any tree structure (see the module schema)."""
    if not isinstance(t, _SERIALIZABLE):
        raise TypeError(f"cannot serialize {type(t).__name__}")
    return t.to_json()


def _set_text(labels) -> str:
    return "{" + ",".join(str(x) for x in sorted(labels)) + "}"


def tree_to_dot(t) -> str:
    """DOT (undirected graph) text for any tree structure."""
    data = tree_to_json(t)
    lines = ["graph G {"]
    for v in data["vertices"]:
        bits = []
        if "labels" in v:
            bits.append(_set_text(v["labels"]))
        if "weight" in v:
            bits.append(f"w={v['weight']}")
        lines.append(f'  n{v["id"]} [label="{" ".join(bits)}"];')
    for e in data["edges"]:
        tag = ""
        if "multiplicity" in e:
            tag = f' [label="{e["multiplicity"]}"]'
        elif "weight" in e:
            tag = f' [label="w={e["weight"]}"]'
        lines.append(f'  n{e["u"]} -- n{e["v"]}{tag};')
    lines.append("}")
    return "\n".join(lines) + "\n"

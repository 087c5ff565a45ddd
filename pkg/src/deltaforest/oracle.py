"""Independent evaluator by recursive edge cutting.

Cross-validates the forest algorithm.  A proper loaded tree is reduced by
three operations, each justified by an exact identity between the value
of the tree and the values of the two smaller trees an edge cut leaves
behind:

* a multiplicity-1 edge splits the tree into two independent factors,
  each endpoint absorbing a fresh label in place of the lost edge;
* cutting an edge of multiplicity r >= 1 between label sides I1 and I2
  (carrying s1 and s2 edge multiplicity) contributes the binomial
  C(r-1, |I1|-s1-2) and replaces each side's lost edge by a pendant
  two-label vertex of multiplicity |Ii|-si-1;
* stars whose leaves all have weight zero are scored directly by the
  multinomial of the center weight over the edge weights.

Every tree with at least three vertices admits a star cut (an edge cut
producing a star component), so the recursion always bottoms out.
Out-of-range binomial indices mean some side cannot carry a proper tree
and the value is zero.
"""
from __future__ import annotations

from math import comb

from .trees import Edge, LoadedTree, _edge


class NotSingleEdgeError(ValueError):
    """single_edge_cut was applied to an edge of multiplicity > 1."""


class NotSunLikeError(ValueError):
    """sun_like_value needs a star whose non-center vertices weigh zero."""


class StarCutTooSmallError(ValueError):
    """Star cuts need at least three vertices."""


def _vertex_weight(t: LoadedTree, v: int, adj) -> int:
    return len(adj[v]) + len(t.labels[v]) - 3


def _split_vertices(t: LoadedTree, e: Edge) -> tuple[set, set]:
    """Vertex sets of the two components of t minus e; e[0]'s side first."""
    adj = t.adjacency()
    u, v = e
    side = set()
    stack = [u]
    while stack:
        w = stack.pop()
        if w in side:
            continue
        side.add(w)
        for x in adj[w]:
            if not (w == u and x == v) and x not in side:
                stack.append(x)
    return side, set(t.labels) - side


def _relabeled(labels: dict) -> tuple[dict, int]:
    """Map the labels in use onto a contiguous 1..n', preserving order.

    Fresh labels are allocated above the old ambient n, so they stay the
    largest labels after the renaming.
    """
    used = sorted(set().union(*labels.values()))
    mapping = {old: i + 1 for i, old in enumerate(used)}
    relabeled = {v: frozenset(mapping[x] for x in s) for v, s in labels.items()}
    return relabeled, len(used)


def single_edge_cut(t: LoadedTree, e: Edge) -> tuple[LoadedTree, LoadedTree]:
    """Split at a multiplicity-1 edge; each endpoint gains a fresh label.

    Endpoint weights are unchanged, and the absolute value of the input is
    the product of the absolute values of the two outputs.
    """
    e = _edge(*e)
    if t.multiplicity[e] != 1:
        raise NotSingleEdgeError(f"edge {e} has multiplicity {t.multiplicity[e]}")
    sides = _split_vertices(t, e)
    fresh = t.n + 1
    out = []
    for endpoint, verts in zip(e, sides):
        labels = {v: set(t.labels[v]) for v in verts}
        labels[endpoint] = labels[endpoint] | {fresh}
        labels, n_new = _relabeled(labels)
        mult = {
            edge: m for edge, m in t.multiplicity.items() if edge[0] in verts and edge[1] in verts
        }
        out.append(LoadedTree(n_new, labels, mult))
    return out[0], out[1]


def multi_edge_cut(
    t: LoadedTree, e: Edge
) -> tuple[int, LoadedTree | None, LoadedTree | None]:
    """Cut any edge of a proper tree; returns (binomial, side1, side2).

    Each side keeps its vertices and gains a pendant vertex with two fresh
    labels, attached where the cut edge ended, with multiplicity chosen to
    make the side proper.  The value contract is

        value(t) = binomial * value(side1) * value(side2),

    with binomial = C(r-1, |I1|-s1-2) for r the cut edge's multiplicity.
    A degenerate index yields binomial 0 and no side trees: the value of t
    is zero and no proper side trees exist.
    """
    e = _edge(*e)
    r = t.multiplicity[e]
    sides = _split_vertices(t, e)
    label_count = [sum(len(t.labels[v]) for v in verts) for verts in sides]
    inner_mult = [
        sum(m for edge, m in t.multiplicity.items() if edge[0] in verts and edge[1] in verts)
        for verts in sides
    ]
    idx = label_count[0] - inner_mult[0] - 2
    if idx < 0 or idx > r - 1:
        return 0, None, None
    binomial = comb(r - 1, idx)

    out = []
    for endpoint, verts, size, inner in zip(e, sides, label_count, inner_mult):
        pendant = max(t.labels) + 1
        labels = {v: set(t.labels[v]) for v in verts}
        labels[pendant] = {t.n + 1, t.n + 2}
        labels, n_new = _relabeled(labels)
        mult = {
            edge: m for edge, m in t.multiplicity.items() if edge[0] in verts and edge[1] in verts
        }
        mult[_edge(endpoint, pendant)] = size - inner - 1
        out.append(LoadedTree(n_new, labels, mult))
    return binomial, out[0], out[1]


def _is_star(adj) -> bool:
    return len(adj) >= 3 and any(len(nb) == len(adj) - 1 for nb in adj.values())


def find_star_cut(t: LoadedTree) -> Edge:
    """An edge whose cut produces a star component.

    If the tree already is a star any edge works; otherwise strip all
    leaves and pick an edge joining a degree-1 vertex of the stripped tree
    to its stripped neighbor.  The cut-off component is then that vertex
    together with its leaf neighbors.
    """
    adj = t.adjacency()
    if len(adj) < 3:
        raise StarCutTooSmallError(f"need >= 3 vertices, got {len(adj)}")
    if _is_star(adj):
        return t.edges[0]
    leaves = {v for v, nb in adj.items() if len(nb) == 1}
    stripped = {
        v: [w for w in nb if w not in leaves]
        for v, nb in adj.items()
        if v not in leaves
    }
    u = min(v for v, nb in stripped.items() if len(nb) == 1)
    return _edge(u, stripped[u][0])


def sun_like_value(t: LoadedTree) -> int:
    """Multinomial value of a star whose non-center vertices weigh zero.

    C(k; m_1, ..., m_q) for center weight k and edge weights m_i when the
    tree is proper (k equals the edge weight sum), 0 otherwise.
    """
    adj = t.adjacency()
    if len(adj) < 2:
        raise NotSunLikeError("sun-like trees have at least two vertices")
    weights = {v: _vertex_weight(t, v, adj) for v in adj}
    centers = [v for v, nb in adj.items() if len(nb) == len(adj) - 1]
    center = None
    for v in sorted(centers, key=lambda v: (-weights[v], v)):
        if all(weights[w] == 0 for w in adj if w != v):
            center = v
            break
    if center is None:
        raise NotSunLikeError("no center with all other vertices of weight zero")

    k = weights[center]
    edge_weights = [m - 1 for m in t.multiplicity.values()]
    if k != sum(edge_weights):
        return 0
    value = 1
    remaining = k
    for m in edge_weights:
        value *= comb(remaining, m)
        remaining -= m
    return value


def oracle_eval(t: LoadedTree, *, trace: list | None = None) -> int:
    """Signed value of a proper loaded tree by the cut recursion.

    The recursion tracks absolute values; the sign is (-1) to the edge
    weight sum, applied once at the top.
    """
    if not t.is_proper:
        raise ValueError(
            f"oracle_eval needs a proper tree: total multiplicity "
            f"{t.total_multiplicity} != n - 3 = {t.n - 3}"
        )
    edge_weight_sum = sum(m - 1 for m in t.multiplicity.values())
    sign = -1 if edge_weight_sum % 2 else 1
    return sign * _abs_value(t, trace)


def _record(trace, stage, t, binomial=None):
    if trace is not None:
        rec = {"stage": stage, "structure": t.to_json()}
        if binomial is not None:
            rec["binomial"] = list(binomial)
        trace.append(rec)


def _abs_value(t: LoadedTree, trace: list | None) -> int:
    if t.total_multiplicity != t.n - 3:
        return 0
    if not t.multiplicity:
        return 1  # proper and edgeless: exactly three labels

    single = next((e for e in t.edges if t.multiplicity[e] == 1), None)
    if single is not None:
        left, right = single_edge_cut(t, single)
        _record(trace, "single_edge_cut", t, (0, 0))
        return _abs_value(left, trace) * _abs_value(right, trace)

    adj = t.adjacency()
    if len(adj) == 2:
        # one multi-edge cut leaves two sun-like trees
        binomial, left, right = multi_edge_cut(t, t.edges[0])
        _record(trace, "multi_edge_cut", t, _binomial_args(t, t.edges[0]))
        if binomial == 0:
            return 0
        return binomial * sun_like_value(left) * sun_like_value(right)

    heavy_leaf = next(
        (
            v
            for v in t.vertices
            if len(adj[v]) == 1 and _vertex_weight(t, v, adj) > 0
        ),
        None,
    )
    if heavy_leaf is not None:
        e = _edge(heavy_leaf, adj[heavy_leaf][0])
        binomial, left, right = multi_edge_cut(t, e)
        _record(trace, "multi_edge_cut", t, _binomial_args(t, e))
        if binomial == 0:
            return 0
        return binomial * _abs_value(left, trace) * _abs_value(right, trace)

    # all leaves weigh zero from here on
    if _is_star(adj):
        _record(trace, "sun_like_tree", t)
        return sun_like_value(t)

    e = find_star_cut(t)
    binomial, left, right = multi_edge_cut(t, e)
    _record(trace, "star_cut", t, _binomial_args(t, e))
    if binomial == 0:
        return 0
    return binomial * _abs_value(left, trace) * _abs_value(right, trace)


def _binomial_args(t: LoadedTree, e: Edge) -> tuple[int, int]:
    """(top, bottom) of the cut binomial, for trace records."""
    sides = _split_vertices(t, e)
    size = sum(len(t.labels[v]) for v in sides[0])
    inner = sum(
        m
        for edge, m in t.multiplicity.items()
        if edge[0] in sides[0] and edge[1] in sides[0]
    )
    return t.multiplicity[e] - 1, size - inner - 2

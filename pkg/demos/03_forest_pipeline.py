"""The forest algorithm, stage by stage, on a tree worth -32.

A path of five vertices carrying 14 labels with edge multiplicities
5, 3, 1, 2.  Weighting gives vertex weights 1, 4, 1, 1, 0 and edge
weights 4, 2, 0, 1; both sums are 7, so the sign is (-1)^7 = -1.
Subdividing edges and deleting zero-weight vertices leaves two path
components whose binomial products are 1 and 32.
"""
from deltaforest import (
    LoadedTree,
    eval_forest,
    eval_loaded_tree,
    eval_redundancy_tree,
    prune,
    sign_of,
    to_redundancy,
    to_weighted,
)

t = LoadedTree(
    14,
    {0: {1, 2, 3}, 1: {4, 5, 6, 7, 8}, 2: {9, 10}, 3: {11, 12}, 4: {13, 14}},
    {(0, 1): 5, (1, 2): 3, (2, 3): 1, (3, 4): 2},
)

wt = to_weighted(t)
print("vertex weights:", {v: w for v, w in sorted(wt.vertex_weight.items())})
print("edge weights:  ", {e: w for e, w in sorted(wt.edge_weight.items())})
print("weight identity:", sum(wt.vertex_weight.values()), "=", sum(wt.edge_weight.values()))
print("sign:", sign_of(wt))

rt = to_redundancy(wt)
print("\nredundancy tree weights:", {v: w for v, w in sorted(rt.weight.items())})

rf = prune(rt)
print("forest components after deleting zero-weight vertices:")
for tree in rf.trees:
    print("  weights", sorted(tree.weight.values()), "->", eval_redundancy_tree(tree))

print("\nforest value:", eval_forest(rf))
print("signed value: ", eval_loaded_tree(t))

print("\nfull trace of a smaller run (n=9 example):")
from deltaforest import eval_monomial, parse_monomial

trace = []
value = eval_monomial(
    parse_monomial(
        "n=9; d(1,2,3|4,5,6,7,8,9)^3 * d(1,2,3,4,5|6,7,8,9)"
        " * d(1,2,3,4,5,8,9|6,7) * d(1,2,3,4,5,6,7|8,9)"
    ),
    trace=trace,
)
for record in trace:
    binomial = record.get("binomial")
    extra = f"  C({binomial[0]},{binomial[1]})" if binomial else ""
    print(f"  {record['stage']:18s}{extra}")
print("value:", value)

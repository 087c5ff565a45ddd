"""Two evaluators, one answer: differential testing in miniature.

The cut recursion computes the same values as the forest algorithm by a
completely different route: splitting at multiplicity-1 edges, cutting
heavy leaves with a binomial factor, and scoring star-shaped remainders
by multinomials.  Cutting any edge of a proper tree also satisfies an
exact identity

    value(t) = C(r-1, |I1|-s1-2) * value(side1) * value(side2)

which this demo spot-checks on random trees, alongside full agreement of
the two evaluators.
"""
import random

from deltaforest import (
    eval_loaded_tree,
    multi_edge_cut,
    oracle_eval,
    render_monomial,
    tree_to_monomial,
)
from deltaforest.trees import _random_proper_tree

rng = random.Random(8)

print("random proper trees, forest value vs cut-recursion value:")
for _ in range(8):
    t = _random_proper_tree(rng.randint(5, 10), rng)
    forest = eval_loaded_tree(t)
    recursion = oracle_eval(t)
    marker = "ok" if forest == recursion else "MISMATCH"
    print(f"  {render_monomial(tree_to_monomial(t))[:66]:66s} {forest:>6d} {recursion:>6d}  {marker}")

print("\nedge-cut identity on every edge of a random tree:")
t = _random_proper_tree(9, rng)
print(" ", render_monomial(tree_to_monomial(t)))
for e in t.edges:
    binomial, left, right = multi_edge_cut(t, e)
    if binomial == 0:
        rhs = 0
        parts = "binomial 0"
    else:
        lv, rv = eval_loaded_tree(left), eval_loaded_tree(right)
        rhs = binomial * lv * rv
        parts = f"{binomial} * {lv} * {rv}"
    print(f"  cut {e}: value {eval_loaded_tree(t)} = {parts} = {rhs}")

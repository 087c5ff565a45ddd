"""The monomial <-> loaded tree correspondence, on the nine-label example.

The monomial

    d(1,2,3|4,5,6,7,8,9)^3 * d(1,2,3,4,5|6,7,8,9)
      * d(1,2,3,4,5,8,9|6,7) * d(1,2,3,4,5,6,7|8,9)

has no crossing pair, so it corresponds to a loaded tree: pick a pivot
cut, nest the other cuts' parts inside its two sides by containment, and
bridge the two maximal sets.  Each edge recovers its cut by deleting it
and reading off the labels of the two components.
"""
import json

from deltaforest import (
    canonical_form,
    monomial_to_tree,
    parse_monomial,
    tree_to_dot,
    tree_to_json,
    tree_to_monomial,
)

text = (
    "n=9; d(1,2,3|4,5,6,7,8,9)^3 * d(1,2,3,4,5|6,7,8,9)"
    " * d(1,2,3,4,5,8,9|6,7) * d(1,2,3,4,5,6,7|8,9)"
)
m = parse_monomial(text)
t = monomial_to_tree(m)

print("loaded tree as JSON:")
print(json.dumps(tree_to_json(t), indent=2))
print()
print("the same tree as DOT (pipe into `dot -Tpng` to draw it):")
print(tree_to_dot(t))

back = tree_to_monomial(t)
print("tree read back as a monomial:", back == m and "matches the input" or back)

print()
print("the pivot choice does not matter up to relabeling of vertex ids:")
forms = {canonical_form(monomial_to_tree(m, pivot=cut)) for cut in m.factors}
print(f"  {len(m.factors)} possible pivots, {len(forms)} distinct tree(s)")

"""Cuts, crossing, and what classification alone already decides.

A monomial in the divisor generators is indexed by cuts: bipartitions of
{1..n} with both sides of size >= 2.  Before any tree machinery runs,
two cheap checks settle most of the easy cases:

* wrong total degree (!= n-3) forces value 0;
* two crossing factors (all four part intersections nonempty) force 0;
* a square-free monomial of full degree is worth exactly 1.
"""
from deltaforest import classify, crosses, eval_monomial, parse_monomial

examples = [
    "n=5; d(1,2|3,4,5) * d(1,4|2,3,5)",   # crossing pair
    "n=5; d(1,2|3,4,5) * d(1,2,3|4,5)",   # nested pair, square-free
    "n=5; d(1,2|3,4,5)^2",                # same cut squared
    "n=6; d(1,2|3,4,5,6)",                # degree 1 != 3
    "n=3; 1",                             # the empty monomial
]

for text in examples:
    m = parse_monomial(text)
    print(f"{text:42s} -> {classify(m).value:15s} value {eval_monomial(m)}")

print()
a, b = parse_monomial("n=5; d(1,2|3,4,5) * d(1,4|2,3,5)").factors
print(f"crossing test: {a} x {b} -> {crosses(a, b)}")
print("all four intersections of {1,2},{3,4,5} with {1,4},{2,3,5} are nonempty,")
print("so the product vanishes without looking any further.")

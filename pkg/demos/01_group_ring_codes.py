"""
Building a code from a group ring element and checking its parameters.

Run with ``python3 demos/01_group_ring_codes.py``.
"""

from groupcodes import (
    SemidirectParams1,
    code_from_gmatrix,
    dual,
    make_g1,
    min_distance_bz,
    sigma,
    sigma_structured_g1,
)
from groupcodes import bundled

## The group C_9 x| C_6 with y^x = y^2, 54 elements
p = SemidirectParams1(n=9, m=6, k=2)
g = make_g1(p)
print(g, "abelian:", g.is_abelian())

## A bundled coefficient vector over that group
v = bundled.entry("v1").element
print("weight of v:", v.coeffs.weight())

## Its G-matrix, built two ways
G = sigma(v)
assert G == sigma_structured_g1(v, p)
print("G-matrix", G.shape)

## The code and its dual
C = code_from_gmatrix(v)
D = dual(C)
for name, code in [("C(v)", C), ("dual", D)]:
    r = min_distance_bz(code)
    print(f"{name}: [{code.n},{code.k},{r.d}]  ({r.elapsed:.1f}s, {r.work} codewords)")

"""Acceptance suite: one test per criterion, summarised at the end of the run.

Distance budgets follow ``GROUPCODES_BUDGET_SECONDS`` (default 15 minutes per
distance computation).  Run just this file with::

    pytest tests/test_acceptance.py -v
"""

import itertools
import math
import time

import numpy as np
import pytest

from groupcodes import (
    Budget,
    GroupRingElement,
    LinearCode,
    SemidirectParams1,
    SemidirectParams2,
    apply_perm,
    code_from_gmatrix,
    cycle_type,
    decompose,
    dual,
    find_word_of_weight_at_most,
    gr_mul,
    gr_power_map,
    is_unit,
    make_g1,
    make_g2,
    min_distance_bruteforce,
    min_distance_bz,
    rank,
    rowspace_equal,
    sigma,
    sigma_structured_g1,
    sigma_structured_g2,
)
from groupcodes import bundled
from groupcodes.bundled import apply_ops
from groupcodes.cli import verify_code

from conftest import random_invariant_code, random_matrix, random_uniform_perm

BUDGET = Budget.from_env()


def criterion(num, title):
    return pytest.mark.criterion(num, title)


def g1_params(max_order):
    out = []
    for n in range(1, max_order + 1):
        for m in range(1, max_order // n + 1):
            for k in range(1, max(n, 2)):
                if math.gcd(k, n) == 1 and pow(k, m, n) == 1 % n:
                    out.append((n, m, k))
    return out


def g2_params(max_order):
    out = []
    for n1 in range(1, max_order + 1):
        for n2 in range(1, max_order // n1 + 1):
            for m in range(1, max_order // (n1 * n2) + 1):
                for k1 in range(1, max(n1, 2)):
                    if math.gcd(k1, n1) != 1 or pow(k1, m, n1) != 1 % n1:
                        continue
                    for k2 in range(1, max(n2, 2)):
                        if math.gcd(k2, n2) == 1 and pow(k2, m, n2) == 1 % n2:
                            out.append((n1, k1, n2, k2, m))
    return out


def random_groups(rng, count, max_order):
    """``count`` (kind, params) draws, half from each family."""
    p1, p2 = g1_params(max_order), g2_params(max_order)
    out = []
    for i in range(count):
        pool, kind = (p1, "g1") if i % 2 == 0 else (p2, "g2")
        out.append((kind, pool[int(rng.integers(len(pool)))]))
    return out


_GROUPS: dict = {}


def build(kind, params):
    key = (kind, params)
    if key not in _GROUPS:
        _GROUPS[key] = make_g1(SemidirectParams1(*params)) if kind == "g1" else make_g2(SemidirectParams2(*params))
    return _GROUPS[key]


def distance_with_witness(code, claimed, budget=BUDGET, seed=0):
    """BZ within budget, topped up by a randomised search for a witness of
    the claimed weight when BZ leaves the upper bound above it."""
    line = verify_code("x", code, (code.n, code.k, claimed), budget, seed)
    return line


def check_decomposition_laws(code, perm, F, E, distance):
    """Direct sum, invariance and the fixed/even distance laws.  ``distance``
    maps a code to its minimum distance."""
    p, c, f = cycle_type(perm)
    assert F.k + E.k == code.k
    both = F.gen.vstack(E.gen)
    assert rank(both) == code.k
    if code.k:
        assert rowspace_equal(both, code.gen)
    assert apply_perm(F, perm) == F and apply_perm(E, perm) == E
    assert F.k <= c
    if E.k:
        assert distance(E) % 2 == 0
    if F.k:
        assert distance(F) % p == 0


def exact_distance(c):
    if c.k <= 20:
        return min_distance_bruteforce(c).d
    r = min_distance_bz(c, BUDGET)
    assert r.certified
    return r.d


@criterion(1, "structured G-matrix equals generic G-matrix (200 random cases, |G|<=120)")
def test_c01_structure_equivalence(record_property):
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    cases = random_groups(rng, 200, 120)
    for kind, params in cases:
        g = build(kind, params)
        v = GroupRingElement.random(g, rng)
        if kind == "g1":
            s = sigma_structured_g1(v, SemidirectParams1(*params))
        else:
            s = sigma_structured_g2(v, SemidirectParams2(*params))
        assert s == sigma(v), (kind, params, v.coeffs.to_str())
    elapsed = time.perf_counter() - t0
    record_property("detail", f"200 cases, {len({c for c in cases})} distinct groups, {elapsed:.1f}s")
    assert elapsed < 30


@criterion(2, "G-matrix map is a ring homomorphism and respects inversion (500 pairs, |G|<=60)")
def test_c02_homomorphism_and_transpose(record_property):
    rng = np.random.default_rng(77)
    for kind, params in random_groups(rng, 500, 60):
        g = build(kind, params)
        a = GroupRingElement.random(g, rng)
        b = GroupRingElement.random(g, rng)
        assert sigma(gr_mul(a, b)) == sigma(a) @ sigma(b)
        assert sigma(gr_power_map(a, -1)) == sigma(a).T
        if a != b:
            assert sigma(a) != sigma(b)
    record_property("detail", "500 pairs")


@criterion(3, "all 15 bundled vectors give the published code and dual dimensions (<10 s)")
def test_c03_dimensions(record_property):
    t0 = time.perf_counter()
    bad = []
    for e in bundled.entries():
        c = e.code()
        d = dual(c)
        if c.params != e.code_params[:2] or d.params != e.dual_params[:2]:
            bad.append(e.id)
    elapsed = time.perf_counter() - t0
    record_property("detail", f"{elapsed:.1f}s")
    assert not bad
    assert elapsed < 10


@criterion(4, "[54,31,10] and its [54,23,12] dual certified; dual cross-checked by brute force")
def test_c04_first_entry(record_property):
    e = bundled.entry("v1")
    c, d = e.code(), e.dual()
    rc = min_distance_bz(c, BUDGET)
    rd = min_distance_bz(d, BUDGET)
    bf = min_distance_bruteforce(d)
    record_property("detail", f"C d={rc.d} ({rc.elapsed:.1f}s), dual d={rd.d}, brute force {bf.d}")
    assert rc.certified and (c.n, c.k, rc.d) == (54, 31, 10)
    assert rd.certified and (d.n, d.k, rd.d) == (54, 23, 12)
    assert bf.d == 12


SIX_DUALS = [("v2", 24), ("v6", 25), ("v9", 28), ("v11", 32), ("v13", 30), ("v15", 38)]


@criterion(5, "six duals: witness of the claimed weight (certification recorded)")
def test_c05_extended_duals(record_property):
    notes, missing = [], []
    for ident, claimed in SIX_DUALS:
        e = bundled.entry(ident)
        line = distance_with_witness(e.dual(), claimed)
        assert (line.n, line.k) == e.dual_params[:2]
        got = "certified" if line.certified else f"{line.lower}..{line.upper}"
        notes.append(f"{ident}:{claimed} {got}")
        if line.upper != claimed or line.lower > claimed:
            missing.append(ident)
    record_property("detail", ", ".join(notes))
    assert not missing


@criterion(6, "[105,23,33] -> E [105,22,36] (+F dim 1) -> Construction X [108,23,36]")
def test_c06_first_construction_x(record_property):
    v = bundled.thm52_element()
    outer = dual(code_from_gmatrix(v))
    assert outer.params == (105, 23)
    perm = bundled.canonical_automorphism(v.group, 35)
    assert cycle_type(perm) == (35, 3, 0)
    F, E = decompose(outer, perm)
    assert (F.k, E.k) == (1, 22)
    rd, re = min_distance_bz(outer, BUDGET), min_distance_bz(E, BUDGET)
    assert rd.certified and rd.d == 33
    assert re.certified and re.d == 36
    # independent route for both (k = 23 and 22)
    assert min_distance_bruteforce(outer).d == 33
    assert min_distance_bruteforce(E).d == 36
    x = bundled.construction_x_pipeline(v, 35, LinearCode.repetition(3))[2]
    rx = min_distance_bz(x, BUDGET)
    assert x.params == (108, 23)
    assert rx.certified and rx.d == 36
    assert min_distance_bruteforce(x).d == 36
    record_property("detail", f"X certified d={rx.d}; brute force agrees")


@criterion(7, "dual of v13 -> E [105,27] -> Construction X [108,29] with weight-32 witness")
def test_c07_second_construction_x(record_property):
    v = bundled.entry("v13").element
    outer, inner, x = bundled.construction_x_pipeline(v, 35, LinearCode.even_weight(3))
    assert outer.params == (105, 29)
    assert inner.params == (105, 27)
    assert x.params == (108, 29)
    line = distance_with_witness(x, 32)
    record_property("detail", "certified d=32" if line.certified else f"bounds {line.lower}..{line.upper}")
    assert line.upper == 32 and line.lower <= 32


@criterion(8, "fixed/even decomposition laws (50 random cases n<=21 plus the two published ones)")
def test_c08_decomposition_laws(record_property):
    rng = np.random.default_rng(8)
    cases = 0
    ps = [3, 5, 7, 9, 15, 21]
    while cases < 50:
        p = ps[cases % len(ps)]
        c = int(rng.integers(1, 21 // p + 1))
        perm = random_uniform_perm(rng, p, c)
        code = random_invariant_code(rng, perm, int(rng.integers(1, 4)))
        F, E = decompose(code, perm)
        check_decomposition_laws(code, perm, F, E, exact_distance)
        cases += 1
    for v in (bundled.thm52_element(), bundled.entry("v13").element):
        outer = dual(code_from_gmatrix(v))
        perm = bundled.canonical_automorphism(v.group, 35)
        F, E = decompose(outer, perm)
        check_decomposition_laws(outer, perm, F, E, exact_distance)
    record_property("detail", f"{cases} random + 2 published")


@criterion(9, "C(v) = C(uv) for 100 random unit/element pairs (|G|<=40)")
def test_c09_unit_equivalence(record_property):
    rng = np.random.default_rng(9)
    tries = 0
    for kind, params in random_groups(rng, 100, 40):
        g = build(kind, params)
        while True:
            tries += 1
            u = GroupRingElement.random(g, rng)
            if is_unit(u):
                break
        v = GroupRingElement.random(g, rng)
        assert rowspace_equal(code_from_gmatrix(v).gen, code_from_gmatrix(gr_mul(u, v)).gen)
    record_property("detail", f"100 pairs, {tries} unit draws")


@pytest.mark.slow
@criterion(10, "derived-code table: dimensions always, distances where the base is certified")
def test_c10_derived_codes(record_property):
    rows = bundled.table3_rows()
    bases: dict[str, tuple] = {}
    dim_bad, dist_bad, checked, gated = [], [], 0, []
    for row in rows:
        if row.base not in bases:
            c = bundled.base_code(row.base)
            r = min_distance_bz(c, BUDGET)
            bases[row.base] = (c, r)
        c, r = bases[row.base]
        derived = apply_ops(c, row.ops)
        if c.params != row.base_params[:2] or derived.params != row.expected[:2]:
            dim_bad.append((row.base, row.ops))
            continue
        if not (r.certified and r.d == row.base_params[2]):
            gated.append(row.base)
            continue
        rd = min_distance_bz(derived, BUDGET)
        checked += 1
        if not (rd.certified and rd.d == row.expected[2]):
            dist_bad.append((row.base, row.ops, rd.lower, rd.upper))
    skipped = sorted(set(gated))
    record_property(
        "detail",
        f"{len(rows)} rows, {checked} distance-checked, dimension-only for bases {skipped or 'none'}",
    )
    assert not dim_bad, dim_bad
    assert not dist_bad, dist_bad


@criterion(11, "BZ agrees with brute force on 100 random codes (n<=30, k<=14, <60 s)")
def test_c11_oracle_equivalence(record_property):
    rng = np.random.default_rng(11)
    t0 = time.perf_counter()
    done = 0
    while done < 100:
        n = int(rng.integers(2, 31))
        k = int(rng.integers(1, min(14, n) + 1))
        c = LinearCode(random_matrix(rng, k, n))
        if c.k == 0:
            continue
        bz, bf = min_distance_bz(c), min_distance_bruteforce(c)
        assert bz.certified and bz.d == bf.d
        assert c.contains(bz.witness) and c.contains(bf.witness)
        done += 1
    elapsed = time.perf_counter() - t0
    record_property("detail", f"{elapsed:.1f}s")
    assert elapsed < 60


NOT_AT_DESK_SCALE = [
    "full distance certification of high-rate codes with both k and n-k large, e.g. [84,51,12],"
    " [98,60,12], [105,72,10]: witness-only acceptance (bounds contain the claim, witness of the claimed weight)",
    "automorphism group orders: only the lower bound |G| (regular representation) is checked",
    "discovery of new codes by random search: only replay and determinism are checked",
]

# code sides that do not certify within a couple of minutes, with their claimed distance
WITNESS_ONLY = [("v3", 12), ("v5", 12), ("v7", 10), ("v8", 12), ("v10", 10), ("v12", 10), ("v13", 9)]


@criterion(12, "claims outside desk scale are stated and get witness-only acceptance")
def test_c12_out_of_scope_claims(record_property):
    from groupcodes import is_automorphism, regular_permutations

    for ident, claimed in WITNESS_ONLY:
        c = bundled.entry(ident).code()
        w = find_word_of_weight_at_most(c, claimed, Budget(seconds=300))
        assert w is not None and c.contains(w), ident
        # a lighter word would refute the published distance
        assert w.weight() == claimed, (ident, w.weight())
    # automorphism lower bound: every regular permutation preserves the code
    e = bundled.entry("v15")
    assert all(is_automorphism(e.code(), p) for p in regular_permutations(e.group))
    for claim in NOT_AT_DESK_SCALE:
        print("not reproduced at desk scale:", claim)
    record_property("detail", " | ".join(NOT_AT_DESK_SCALE))

import numpy as np
import pytest

from groupcodes import (
    BitMatrix,
    BitVector,
    CodeError,
    GroupRingElement,
    LinearCode,
    Permutation,
    apply_perm,
    code_from_gmatrix,
    construction_x,
    cycle_type,
    decompose,
    dual,
    even_subcode,
    extend,
    fixed_subcode,
    is_automorphism,
    puncture,
    regular_permutations,
    rowspace_equal,
    shorten,
)
from groupcodes import bundled
from groupcodes.gf2linalg import DimensionError

from conftest import (
    brute_min_weight,
    check_decomposition,
    random_invariant_code,
    random_matrix,
    random_uniform_perm,
    span,
)


def params(c):
    return (c.n, c.k, brute_min_weight(c))


def test_code_keeps_rref_and_equality():
    a = LinearCode.from_strings(["110", "011"])
    b = LinearCode.from_strings(["101", "011", "110"])
    assert a == b and hash(a) == hash(b)
    assert a.k == 2 and repr(a) == "LinearCode[3,2]"


def test_identity_gives_full_space():
    e = bundled.entry("v1")
    c = code_from_gmatrix(GroupRingElement.one(e.group))
    assert c.params == (54, 54)


@pytest.mark.parametrize("ident,code_k,dual_k", [("v1", 31, 23), ("v2", 54, 24), ("v3", 48, 33)])
def test_published_dimensions(ident, code_k, dual_k):
    e = bundled.entry(ident)
    assert e.code().k == code_k
    assert e.dual().k == dual_k


def test_dual_basics():
    assert dual(LinearCode.full(4)).k == 0
    rng = np.random.default_rng(5)
    for _ in range(20):
        c = LinearCode(random_matrix(rng, 5, 11))
        d = dual(c)
        assert d.k + c.k == 11
        assert dual(d) == c
        for r in c.gen:
            for s in d.gen:
                assert r.dot(s) == 0


def test_hamming_derivations(hamming):
    assert params(hamming) == (7, 4, 3)
    for pos in range(7):
        assert params(puncture(hamming, pos)) == (6, 4, 2)
    assert params(shorten(hamming, 0)) == (6, 3, 3)
    assert params(extend(hamming)) == (8, 4, 4)


def test_small_derivations():
    assert params(puncture(LinearCode.repetition(3), 0)) == (2, 1, 2)
    assert shorten(LinearCode.full(5), 2).params == (4, 4)
    ev = LinearCode.even_weight(6)
    assert params(extend(ev)) == (7, 5, 2)


def test_derivation_errors():
    with pytest.raises(CodeError):
        shorten(LinearCode.zero(4), 0)
    with pytest.raises(IndexError):
        puncture(LinearCode.full(3), 3)


def test_shorten_against_enumeration():
    rng = np.random.default_rng(2)
    for _ in range(20):
        c = LinearCode(random_matrix(rng, 5, 9))
        pos = int(rng.integers(0, 9))
        want = sorted(
            (w & ((1 << pos) - 1)) | ((w >> (pos + 1)) << pos) for w in span(list(c.gen.data)) if not w >> pos & 1
        )
        assert sorted(span(list(shorten(c, pos).gen.data))) == want


def test_construction_x_toy():
    outer = LinearCode.from_strings(["1100", "0011"])
    inner = LinearCode.from_strings(["1111"])
    aux = LinearCode.from_strings(["11"])
    x = construction_x(outer, inner, aux)
    assert params(x) == (6, 2, 4)


def test_construction_x_errors():
    outer = LinearCode.from_strings(["1100", "0011"])
    with pytest.raises(CodeError):
        construction_x(outer, LinearCode.from_strings(["1000"]), LinearCode.repetition(2))
    with pytest.raises(CodeError):
        construction_x(outer, LinearCode.from_strings(["1111"]), LinearCode.full(2))
    with pytest.raises(DimensionError):
        construction_x(outer, LinearCode.from_strings(["11111"]), LinearCode.repetition(2))


def test_construction_x_structure():
    rng = np.random.default_rng(9)
    for _ in range(10):
        outer = LinearCode(random_matrix(rng, 6, 12))
        inner = LinearCode(BitMatrix(outer.gen.data[:3], 12))
        aux = LinearCode(random_matrix(rng, outer.k - inner.k, 4))
        if aux.k != outer.k - inner.k:
            continue
        x = construction_x(outer, inner, aux)
        assert x.k == outer.k
        for r in inner.gen:
            assert x.contains(BitVector(16, r.bits))
        head = LinearCode(BitMatrix(tuple(r & 0xFFF for r in x.gen.data), 12))
        assert rowspace_equal(head.gen, outer.gen)
        # distance bound of the construction
        bound = min(brute_min_weight(inner), brute_min_weight(outer) + brute_min_weight(aux))
        assert brute_min_weight(x) >= bound


def test_apply_perm_and_automorphisms(hamming):
    ident = Permutation.identity(7)
    assert apply_perm(hamming, ident) == hamming
    rng = np.random.default_rng(4)
    p = Permutation(tuple(int(x) for x in rng.permutation(7)))
    assert apply_perm(hamming, p).weight_distribution() == hamming.weight_distribution()
    assert is_automorphism(hamming, ident)
    assert not is_automorphism(LinearCode.from_strings(["10"]), Permutation((1, 0)))


def test_regular_permutations_are_automorphisms_of_code_and_dual():
    e = bundled.entry("v1")
    c, d = e.code(), e.dual()
    for p in regular_permutations(e.group):
        assert is_automorphism(c, p)
        assert is_automorphism(d, p)


def test_decompose_full_space_3():
    c = LinearCode.full(3)
    p = Permutation.from_cycles(3, [(0, 1, 2)])
    F, E = decompose(c, p)
    assert {w.to_str() for w in F.codewords()} == {"000", "111"}
    assert {w.to_str() for w in E.codewords()} == {"000", "110", "101", "011"}
    assert fixed_subcode(c, Permutation.identity(3)) == c


def test_decompose_requires_automorphism_and_odd_uniform_cycles():
    with pytest.raises(CodeError, match="automorphism"):
        fixed_subcode(LinearCode.from_strings(["100"]), Permutation.from_cycles(3, [(0, 1, 2)]))
    c = LinearCode.full(4)
    with pytest.raises(CodeError, match="even"):
        even_subcode(c, Permutation.from_cycles(4, [(0, 1), (2, 3)]))
    with pytest.raises(CodeError, match="uniform"):
        even_subcode(LinearCode.full(5), Permutation.from_cycles(5, [(0, 1), (2, 3, 4)]))


@pytest.mark.parametrize("seed", range(12))
def test_decomposition_laws_random(seed):
    rng = np.random.default_rng(seed)
    p = int(rng.choice([3, 5, 7]))
    c_cycles = int(rng.integers(1, 21 // p + 1))
    f = int(rng.integers(0, 21 - p * c_cycles + 1)) if seed % 2 else 0
    perm = random_uniform_perm(rng, p, c_cycles, f)
    code = random_invariant_code(rng, perm, int(rng.integers(1, 4)))
    F, E = decompose(code, perm)
    check_decomposition(code, perm, F, E, cycle_type(perm))


def test_thm52_decomposition_dimensions():
    outer, inner, x = bundled.construction_x_pipeline(bundled.thm52_element(), 35, LinearCode.repetition(3))
    assert outer.params == (105, 23)
    assert inner.params == (105, 22)
    assert x.params == (108, 23)
    p = bundled.canonical_automorphism(bundled.thm52_element().group, 35)
    assert cycle_type(p) == (35, 3, 0)
    assert fixed_subcode(outer, p).k == 1


def test_thm53_decomposition_dimensions():
    outer, inner, x = bundled.construction_x_pipeline(bundled.entry("v13").element, 35, LinearCode.even_weight(3))
    assert (outer.k, inner.k, x.params) == (29, 27, (108, 29))

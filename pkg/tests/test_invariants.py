"""Closed-form stratum invariants for function algebras and Borels."""

import pytest

from qstrata import invariants as inv
from qstrata import weyl
from qstrata.errors import BadEllError, BlockHypothesisError, NotFullyAzumayaError
from qstrata.invariants import FINITE, WILD, StratumPair
from qstrata.rootsys import cartan_data, parse_cartan_type


def cd_of(name):
    return cartan_data(parse_cartan_type(name))


def pair(name, ell, word1, word2):
    cd = cd_of(name)
    return StratumPair(weyl.parse_word(cd, word1), weyl.parse_word(cd, word2), ell)


def test_big_cell_invariants():
    si = inv.stratum_invariants(pair("A2", 5, "w0", "w0"))
    assert si.simple_count_exp == 2  # ell^r simples
    assert si.simple_dim_exp == 3  # of dim ell^N
    assert si.block_count_exp == 2  # ell^r blocks
    assert si.simples_per_block_exp == 0
    assert si.is_azumaya
    assert si.rep_type == FINITE
    assert si.frak_S == (1, 2)


def test_identity_cell_invariants():
    si = inv.stratum_invariants(pair("A2", 5, "", ""))
    assert si.simple_count_exp == 2
    assert si.simple_dim_exp == 0
    assert si.block_count_exp == 0  # one block
    assert not si.is_azumaya
    assert si.rep_type == WILD


def test_sl4_pairs():
    for word, S in [("w0*1,2,3", ()), ("w0*1,2,1", (3,))]:
        si = inv.stratum_invariants(pair("A3", 5, word, "w0*1"))
        assert si.frak_S == S
        assert si.s_twist == 2
        assert (si.len1, si.len2) == (3, 5)


def test_bad_ell_rejected():
    with pytest.raises(BadEllError):
        pair("A2", 4, "", "")
    with pytest.raises(BadEllError):
        pair("G2", 3, "", "")


def test_fully_azumaya_examples():
    assert inv.is_fully_azumaya(pair("A2", 5, "w0", "w0"))
    assert not inv.is_fully_azumaya(pair("A2", 5, "", ""))
    assert inv.is_fully_azumaya(pair("A2", 5, "w0*1", "w0"))


def test_azumaya_structure():
    az = inv.azumaya_structure(pair("A2", 3, "w0*1", "w0"))
    assert az.summand_count_exp == 1
    assert az.matrix_size_exp == 3
    assert az.truncated_vars == 1
    az = inv.azumaya_structure(pair("A2", 5, "w0", "w0"))
    assert (az.summand_count_exp, az.truncated_vars) == (2, 0)
    az = inv.azumaya_structure(pair("A3", 5, "w0*1", "w0*2"))
    assert az.truncated_vars == 2
    assert az.summand_count_exp == 1
    with pytest.raises(NotFullyAzumayaError):
        inv.azumaya_structure(pair("A2", 5, "", ""))


def test_rep_type_function_algebra():
    assert inv.rep_type_function_algebra(pair("A2", 5, "w0", "w0")) == FINITE
    assert inv.rep_type_function_algebra(pair("A2", 5, "", "")) == WILD
    # boundary: len1 + len2 = 2N - 2 is wild
    assert inv.rep_type_function_algebra(pair("A2", 5, "w0*1", "w0*1")) == WILD
    # len1 + len2 = 2N - 1 is finite
    assert inv.rep_type_function_algebra(pair("A2", 5, "w0*1", "w0")) == FINITE


def test_rep_type_borel():
    a3 = cd_of("A3")
    assert inv.rep_type_borel(weyl.longest_element(a3)) == FINITE
    assert inv.rep_type_borel(weyl.identity_element(a3)) == WILD
    w5 = weyl.parse_word(a3, "w0*1")  # length N-1 = 5
    assert inv.rep_type_borel(w5) == FINITE
    w4 = weyl.parse_word(a3, "w0*1,2")  # length N-2
    assert inv.rep_type_borel(w4) == WILD


def test_fiber_class_examples():
    fc = inv.fiber_class(pair("A2", 5, "w0", "w0"))
    assert all(c == inv.SEMISIMPLE for c in fc.classes)
    fc = inv.fiber_class(pair("A2", 5, "", ""))
    assert all(c == inv.LOCAL for c in fc.classes)
    fc = inv.fiber_class(pair("A3", 5, "w0*1,2,1", "w0*1"))
    assert fc.classes[2] == inv.SEMISIMPLE
    assert all(c != inv.SEMISIMPLE for c in fc.classes[:2])
    # mixed pattern: one side longest, other side identity gives truncated slots
    fc = inv.fiber_class(pair("A2", 5, "w0", ""))
    assert all(c == inv.TRUNCATED for c in fc.classes)


def test_block_count_examples():
    assert inv.block_count_function_algebra(pair("A2", 5, "w0", "w0")) == 2
    assert inv.block_count_function_algebra(pair("A2", 5, "", "")) == 0
    for name in ["A2", "A3", "B2"]:
        p = pair(name, 5, "w0*1", "w0*1")
        assert inv.block_count_function_algebra(p) == cd_of(name).r - 1


def test_dimension_bookkeeping():
    rec = inv.dimension_bookkeeping(pair("A2", 5, "w0", "w0"))
    assert rec.is_semisimple
    assert rec.semisimple_sum_exp == rec.function_algebra_exp == 8
    rec = inv.dimension_bookkeeping(pair("A2", 5, "", ""))
    assert not rec.is_semisimple
    assert rec.semisimple_sum_exp == 2


def test_parity_invariant_exhaustive_A2():
    cd = cd_of("A2")
    elems = list(weyl.enumerate_group(cd))
    for w1 in elems:
        for w2 in elems:
            si = inv.stratum_invariants(StratumPair(w1, w2, 5))
            assert (si.len1 + si.len2 + si.s_twist) % 2 == 0
            assert si.block_count_exp <= si.simple_count_exp
            if si.simples_per_block_exp is not None:
                assert si.block_count_exp + si.simples_per_block_exp == si.simple_count_exp


def test_block_fields_degrade_without_hypothesis():
    # twist = s1 s2 has order 3 = ell
    si = inv.stratum_invariants(pair("A2", 3, "1", "2,1,2"))
    assert not si.block_hypothesis_met
    assert si.normalizer is None
    assert si.simples_per_block_exp is None
    # hypothesis-free fields survive
    assert si.block_count_exp == len(si.frak_S)


def test_borel_invariants_cases():
    g2 = cd_of("G2")
    bi = inv.borel_invariants(weyl.parse_word(g2, "1,2"), 5)
    assert bi.block_exact_exp == 0  # rigid type: unique block for every w
    a2 = cd_of("A2")
    bi = inv.borel_invariants(weyl.longest_element(a2), 5)
    assert bi.block_exact_exp == 1  # ell^{r - s(w0)} = 5
    bi = inv.borel_invariants(weyl.parse_word(a2, "1"), 5)
    assert bi.block_exact_exp == 0
    assert bi.rep_type == WILD


def test_borel_w0si_cases():
    a3 = cd_of("A3")
    # w0(alpha_2) = -alpha_2: blocks ell^{r-s(w0)} = 5^1
    bi = inv.borel_invariants(weyl.parse_word(a3, "w0*2"), 5)
    assert bi.block_exact_exp == 1 and bi.block_rule == "w0si-fixed"
    # w0(alpha_1) != -alpha_1: blocks ell^{r-s(w0)-1} = 5^0
    bi = inv.borel_invariants(weyl.parse_word(a3, "w0*1"), 5)
    assert bi.block_exact_exp == 0 and bi.block_rule == "w0si-moved"


def test_borel_interval_case():
    a3 = cd_of("A3")
    # s1 s2 s1 is a reflection: s(w) = 1 < l(w) = 3, letter 3 absent, and no
    # exact rule applies, so the honest bounds [0, r - s - d] = [0, 1] remain
    bi = inv.borel_invariants(weyl.parse_word(a3, "1,2,1"), 5)
    assert bi.block_exact_exp is None
    assert (bi.block_lower_exp, bi.block_upper_exp) == (0, 1)
    assert bi.block_rule == "interval"


def test_borel_rigid_type_forces_one_block():
    b2 = cd_of("B2")
    for text in ["1,2,1", "1,2", "w0", ""]:
        bi = inv.borel_invariants(weyl.parse_word(b2, text), 5)
        assert bi.block_exact_exp == 0


def test_borel_simple_counts():
    a2 = cd_of("A2")
    bi = inv.borel_invariants(weyl.longest_element(a2), 5)
    assert bi.simple_count_exp == 1  # ell^{r-s(w0)}
    assert bi.simple_dim_exp == 2  # ell^{(N+s)/2} = ell^2
    assert bi.algebra_dim_exp == 5  # N + r


def test_borel_coprimality_error():
    a2 = cd_of("A2")
    with pytest.raises(BlockHypothesisError):
        inv.borel_invariants(weyl.parse_word(a2, "1,2"), 3)


def test_twist_conventions_exposed():
    p = pair("A3", 5, "1,2", "3")
    assert p.twist == p.w2.inverse() * p.w1
    assert p.twist_alt == p.w2 * p.w1.inverse()
    # the two conventions agree on rank (conjugate elements) but differ as elements
    assert weyl.rank_s(p.twist) == weyl.rank_s(p.twist_alt)


def test_json_dict_exponent_encoding():
    si = inv.stratum_invariants(pair("A2", 5, "w0", "w0"))
    d = si.to_json_dict()
    assert d["simple_count"] == {"base": 5, "exp": 2}
    assert d["block_count"] == {"base": 5, "exp": 2}
    assert d["normalizer"]["order_exp"] == 0
    bi = inv.borel_invariants(weyl.longest_element(cd_of("A2")), 5)
    bd = bi.to_json_dict()
    assert bd["blocks"] == {"base": 5, "exp": 1}

"""Finite-dimensional algebra oracle: radicals, blocks, skew products."""

import numpy as np
import pytest

from qstrata import quiver, skewalg as sk
from qstrata.errors import OracleError


def test_make_field_char_examples():
    assert sk.make_field_char(3, 10) == 13
    assert sk.make_field_char(5, 10) == 11
    assert sk.make_field_char(3, 5) == 7


def test_primitive_root_order():
    for ell, min_dim in [(3, 5), (5, 10), (15, 20)]:
        p = sk.make_field_char(ell, min_dim)
        z = sk.primitive_ell_root(p, ell)
        assert pow(z, ell, p) == 1
        for k in range(1, ell):
            if ell % k == 0 and k < ell:
                assert pow(z, k, p) != 1 or k == ell


def test_unit_axiom_enforced():
    sc = np.zeros((2, 2, 2), dtype=np.int64)
    sc[0, 0, 0] = 1
    sc[0, 1, 1] = 1
    sc[1, 0, 1] = 1
    sc[1, 1, 0] = 1
    sk.FDAlgebra(dim=2, p=7, sc=sc, unit=np.array([1, 0]))  # F7[x]/(x^2 - 1)
    bad = sc.copy()
    bad[1, 0, 1] = 2  # x * 1 = 2x violates the unit axiom
    with pytest.raises(OracleError):
        sk.FDAlgebra(dim=2, p=7, sc=bad, unit=np.array([1, 0]))


def test_nonassociative_rejected():
    # e1*e1 = e1 with nonstandard right column makes (e1 e1) e1 != e1 (e1 e1)
    sc = np.zeros((3, 3, 3), dtype=np.int64)
    for k in range(3):
        sc[0, k, k] = 1
        sc[k, 0, k] = 1
    sc[1, 1, 2] = 1
    sc[1, 2, 0] = 1  # x*y = 1 while x*x = y, y*x = 0: (xx)x = yx = 0, x(xx) = xy = 1
    with pytest.raises(OracleError):
        sk.FDAlgebra(dim=3, p=7, sc=sc, unit=np.array([1, 0, 0]))


def test_radical_examples():
    p = 13
    assert sk.radical(sk.matrix_algebra(2, p)).shape[0] == 0
    trunc = sk.truncated_polynomial_algebra(3, p)
    rad = sk.radical(trunc)
    assert rad.shape[0] == 2
    sq = sk.square_zero_local(2, p)
    assert sk.radical(sq).shape[0] == 2
    with pytest.raises(OracleError):
        sk.radical(sk.truncated_polynomial_algebra(7, 5))  # p <= dim


def test_radical_powers_of_truncated():
    p = 13
    trunc = sk.truncated_polynomial_algebra(3, p)
    rad = sk.radical(trunc)
    prods = np.array([trunc.mult(x, y) for x in rad for y in rad])
    r2, _ = sk.rref(prods, p)
    assert r2.shape[0] == 1  # span{x^2}
    prods3 = np.array([trunc.mult(x, y) for x in r2 for y in rad])
    r3, _ = sk.rref(prods3, p)
    assert r3.shape[0] == 0


def test_central_idempotents_examples():
    p = 13
    assert len(sk.central_idempotents(sk.truncated_polynomial_algebra(5, p))) == 1
    # split product F_p x F_p via fiber algebra at ell=2? use direct sum table
    ga = sk.build_fiber_algebra(3, False, False, p=p)  # group algebra of Z/3
    idems = sk.central_idempotents(ga)
    assert len(idems) == 3
    # the classical formula e_chi = (1/3) sum chi(g^-1) g
    zeta = sk.primitive_ell_root(p, 3)
    inv3 = pow(3, p - 2, p)
    expected = set()
    for c in range(3):
        vec = tuple(
            inv3 * pow(zeta, (-c * g) % 3, p) % p for g in range(3)
        )
        expected.add(vec)
    assert {tuple(int(x) for x in e) for e in idems} == expected
    assert len(sk.central_idempotents(sk.matrix_algebra(2, p))) == 1


def test_block_dimensions_sum():
    p = 13
    ga = sk.build_fiber_algebra(3, False, False, p=p)
    idems = sk.central_idempotents(ga)
    assert sk.block_dimensions(ga, idems) == [1, 1, 1]
    m2 = sk.matrix_algebra(2, p)
    assert sk.block_dimensions(m2, sk.central_idempotents(m2)) == [4]


def test_fiber_algebra_patterns():
    p = 13
    ss = sk.build_fiber_algebra(3, False, False, p=p)
    assert sk.radical(ss).shape[0] == 0
    assert len(sk.central_idempotents(ss)) == 3

    trun = sk.build_fiber_algebra(3, True, False, p=p)
    rad = sk.radical(trun)
    assert rad.shape[0] == 2
    assert len(sk.central_idempotents(trun)) == 1
    # radical powers shrink 2, 1, 0 as for truncated polynomials
    prods = np.array([trun.mult(x, y) for x in rad for y in rad])
    assert sk.rref(prods, p)[0].shape[0] == 1

    trun_sym = sk.build_fiber_algebra(3, False, True, p=p)
    assert sk.radical(trun_sym).shape[0] == 2
    assert len(sk.central_idempotents(trun_sym)) == 1

    loc = sk.build_fiber_algebra(3, True, True, p=p)
    rad = sk.radical(loc)
    assert rad.shape[0] == 2
    prods = np.array([loc.mult(x, y) for x in rad for y in rad])
    assert sk.rref(prods, p)[0].shape[0] == 0  # radical squared is zero
    assert len(sk.central_idempotents(loc)) == 1


def test_tensor_examples():
    p = 31
    ss = sk.build_fiber_algebra(3, False, False, p=p)
    trun = sk.build_fiber_algebra(3, True, False, p=p)
    one = sk.truncated_polynomial_algebra(1, p)  # the field itself
    a = sk.tensor(ss, one)
    assert a.dim == ss.dim
    assert len(sk.central_idempotents(a)) == 3
    assert len(sk.central_idempotents(sk.tensor(ss, trun))) == 3
    assert len(sk.central_idempotents(sk.tensor(ss, ss))) == 9
    with pytest.raises(OracleError):
        sk.tensor(ss, sk.truncated_polynomial_algebra(2, 13))


def test_skew_product_trivial_action_is_group_ring():
    p = sk.make_field_char(3, 27)
    t3 = sk.truncated_polynomial_algebra(3, p)
    triv = sk.AbelianAction(ell=3, mats=(np.eye(3, dtype=np.int64),))
    prod = sk.skew_product(t3, triv)
    assert prod.dim == 9
    # ordinary group ring: blocks multiply (1 block x 3 characters)
    assert len(sk.central_idempotents(prod)) == 3


def test_skew_product_faithful_action_one_block():
    p = sk.make_field_char(3, 27)
    t3 = sk.truncated_polynomial_algebra(3, p)
    zeta = sk.primitive_ell_root(p, 3)
    act = sk.AbelianAction(
        ell=3, mats=(np.diag([pow(zeta, a, p) for a in range(3)]).astype(np.int64),)
    )
    prod = sk.skew_product(t3, act)
    assert prod.dim == 9
    assert len(sk.central_idempotents(prod)) == 1


def test_skew_product_inner_action_splits_like_group_ring():
    p = sk.make_field_char(3, 12)
    m2 = sk.matrix_algebra(2, p)
    z = sk.primitive_ell_root(p, 3)
    zinv = pow(z, p - 2, p)
    mat = np.zeros((4, 4), dtype=np.int64)
    diag = [1, z]
    diag_inv = [1, zinv]
    for i in range(2):
        for j in range(2):
            mat[i * 2 + j, i * 2 + j] = diag[i] * diag_inv[j] % p
    act = sk.AbelianAction(ell=3, mats=(mat,))
    prod = sk.skew_product(m2, act)
    # inner action: S * G = S tensor kG, so 1 * 3 blocks
    assert len(sk.central_idempotents(prod)) == 3


def test_skew_product_embeddings():
    p = sk.make_field_char(3, 27)
    t3 = sk.truncated_polynomial_algebra(3, p)
    zeta = sk.primitive_ell_root(p, 3)
    act = sk.AbelianAction(
        ell=3, mats=(np.diag([pow(zeta, a, p) for a in range(3)]).astype(np.int64),)
    )
    prod = sk.skew_product(t3, act)
    gens = prod.generator_vectors()
    # first block of generators is the embedded S: products match S's table
    for i in range(3):
        for j in range(3):
            got = prod.mult(gens[i], gens[j])
            expect = np.zeros(9, dtype=np.int64)
            for k, c in enumerate(t3.sc[i, j]):
                expect[k * 3] = c
            assert np.array_equal(got, expect)
    # the group generator has multiplicative order 3
    g = gens[3]
    power = g
    for _ in range(2):
        power = prod.mult(power, g)
    assert np.array_equal(power, np.asarray(prod.unit))


def test_action_validation():
    p = 13
    t3 = sk.truncated_polynomial_algebra(3, p)
    bad = np.eye(3, dtype=np.int64)
    bad[1, 1] = 2  # x -> 2x is an automorphism but of order 12, not dividing 3
    bad[2, 2] = 4
    with pytest.raises(OracleError):
        sk.validate_action(t3, sk.AbelianAction(ell=3, mats=(bad,)))
    notaut = np.eye(3, dtype=np.int64)
    notaut[2, 1] = 1  # x -> x + x^2 with x^2 -> x^2 is not multiplicative... check
    with pytest.raises(OracleError):
        sk.validate_action(t3, sk.AbelianAction(ell=3, mats=(notaut,)))


def test_blquiv_trivial_action():
    p = 13
    t3 = sk.truncated_polynomial_algebra(3, p)
    triv = sk.AbelianAction(ell=3, mats=(np.eye(3, dtype=np.int64),))
    rep = sk.blquiv_report(t3, triv)
    assert rep.block_count == 3  # |G| blocks
    assert rep.char_multiplicities == {(0,): 1}
    assert rep.y_order == 1
    assert quiver.connected_components(rep.quiver) == 3  # loops only
    assert all(a == b for a, b, _, _ in rep.quiver.edges)


def test_blquiv_faithful_action():
    p = 13
    t3 = sk.truncated_polynomial_algebra(3, p)
    zeta = sk.primitive_ell_root(p, 3)
    act = sk.AbelianAction(
        ell=3, mats=(np.diag([pow(zeta, a, p) for a in range(3)]).astype(np.int64),)
    )
    rep = sk.blquiv_report(t3, act)
    assert rep.block_count == 1
    assert list(rep.char_multiplicities.values()) == [1]
    assert rep.quiver.vertex_count == 3 and rep.quiver.edge_count == 3
    assert quiver.connected_components(rep.quiver) == 1


def test_blquiv_two_characters():
    p = 13
    sq = sk.square_zero_local(2, p)  # J/J^2 is 2-dimensional
    zeta = sk.primitive_ell_root(p, 3)
    m1 = np.diag([1, zeta, 1]).astype(np.int64)
    m2 = np.diag([1, 1, zeta]).astype(np.int64)
    act = sk.AbelianAction(ell=3, mats=(m1, m2))
    rep = sk.blquiv_report(sq, act)
    assert rep.block_count == 1
    assert rep.char_multiplicities == {(1, 0): 1, (0, 1): 1}
    assert rep.quiver.vertex_count == 9
    assert rep.quiver.edge_count == 18  # two arrows out of each vertex
    assert quiver.connected_components(rep.quiver) == 1


def test_blquiv_requires_local():
    p = 13
    with pytest.raises(OracleError):
        sk.blquiv_report(
            sk.matrix_algebra(2, p),
            sk.AbelianAction(ell=3, mats=(np.eye(4, dtype=np.int64),)),
        )


def test_borel_sl2():
    alg = sk.build_borel_sl2(3)
    assert alg.dim == 9
    assert sk.radical(alg).shape[0] == 6
    assert sk.simple_module_dims(alg) == [1, 1, 1]
    assert len(sk.central_idempotents(alg)) == 1
    alg5 = sk.build_borel_sl2(5)
    assert alg5.dim == 25
    assert sk.simple_module_dims(alg5) == [1] * 5
    assert len(sk.central_idempotents(alg5)) == 1
    with pytest.raises(ValueError):
        sk.build_borel_sl2(4)


def test_borel_sl2_defining_relations():
    """K E = zeta^2 E K, K^ell = 1, E^ell = 0 on the E^a K^b basis."""
    ell = 3
    alg = sk.build_borel_sl2(ell)
    p = alg.p
    zeta = sk.primitive_ell_root(p, ell)
    ng = ell

    def vec(a, b):
        v = np.zeros(ell * ell, dtype=np.int64)
        v[a * ng + b] = 1
        return v

    E, K = vec(1, 0), vec(0, 1)
    lhs = alg.mult(K, E)
    rhs = (pow(zeta, 2, p) * alg.mult(E, K)) % p
    assert np.array_equal(lhs, rhs)
    kpow = K
    for _ in range(ell - 1):
        kpow = alg.mult(kpow, K)
    assert np.array_equal(kpow, np.asarray(alg.unit))
    epow = E
    for _ in range(ell - 1):
        epow = alg.mult(epow, E)
    assert not np.any(epow)


def test_json_roundtrip():
    p = 13
    alg = sk.build_fiber_algebra(3, True, False, p=p)
    text = sk.algebra_to_json(alg)
    back = sk.algebra_from_json(text)
    assert back.dim == alg.dim and back.p == alg.p
    assert np.array_equal(back.sc, alg.sc)
    assert np.array_equal(back.unit, alg.unit)


def test_quantum_plane_local_is_local():
    p = sk.make_field_char(3, 12)
    qp = sk.quantum_plane_local(3, 2, 1, 3, p)
    assert qp.dim == 6
    assert sk.radical(qp).shape[0] == 5

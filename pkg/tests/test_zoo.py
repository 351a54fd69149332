import pytest

from hopfcyc.bialgebroid import check_left_bialgebroid, check_translation_left
from hopfcyc.galois import NotMorphism
from hopfcyc.linalg import ONE, Matrix
from hopfcyc.zoo import (REGISTRY, NotModuleAlgebra, UnknownName, check_triple_translation,
                         crossed_product, example, group_algebra, k_action_on_crossed, phi_functor,
                         sayd_pair, stock, symmetric_group_3, triple_hopf, trivial_hopf)

g = {1: ONE}


def test_crossed_product_dims(z2):
    cp = crossed_product(z2, z2)
    assert cp.algebra.dim == 4
    assert cp.algebra.is_commutative()  # trivial action on commutative pieces
    cp1 = crossed_product(trivial_hopf(), z2)
    assert cp1.algebra.table == z2.algebra.table


def test_crossed_product_rejects_bad_action(z2):
    bad = (Matrix.identity(2), Matrix.from_rows([[1, 0], [0, 2]]))  # g^2 != 1
    with pytest.raises(NotModuleAlgebra):
        crossed_product(z2, z2, bad)


def test_triple_hopf(crossed):
    F, H, cp, th, T, N, Ms = crossed
    assert th.K.dim == 8
    assert check_left_bialgebroid(th.hopf.bialgebroid).ok
    assert check_translation_left(th.hopf).ok
    assert check_triple_translation(th) is None
    for k in range(8):
        assert th.idx(*th.unidx(k)) == k


def test_k_action_on_crossed(crossed):
    F, H, cp, th, T, N, Ms = crossed
    assert T.check().ok
    # s(b) |> (f >| h) = b f >| h
    for b in range(2):
        for f in range(2):
            for h in range(2):
                k = th.idx(b, 0, 0)
                want = cp.pair(F.algebra.mul({b: ONE}, {f: ONE}), {h: ONE})
                assert T.act({k: ONE}, {cp.idx(f, h): ONE}) == want


def test_k_action_needs_commutative_F():
    S3 = symmetric_group_3()
    th = triple_hopf(S3, verify=False)
    cp = crossed_product(S3, trivial_hopf())
    with pytest.raises(NotModuleAlgebra) as exc:
        k_action_on_crossed(th, cp)
    assert exc.value.witness[0] == "F not commutative"


def test_sayd_pairs(crossed):
    F, H, cp, th, T, N, Ms = crossed
    for x in (F.algebra.unit, g):
        M = sayd_pair(th, x, N)
        assert M.ayd_verified and M.stable_verified
        assert M.dim == F.dim * N.dim
    with pytest.raises(ValueError):
        sayd_pair(th, {}, N)


def test_phi_functor(crossed):
    F, H, cp, th, T, N, Ms = crossed
    M1 = sayd_pair(th, F.algebra.unit, N)
    Mg = sayd_pair(th, g, N)
    one = Matrix.identity(N.dim)
    a = phi_functor(th, g, one, M1, Mg, N, N)
    # b (x) n -> b g^-1 (x) n, i.e. multiplication by g on the B leg
    for b in range(2):
        for j in range(N.dim):
            assert a.col(b * N.dim + j) == {(1 - b) * N.dim + j: ONE}
    back = phi_functor(th, g, one, Mg, M1, N, N)
    assert (back @ a).is_identity()
    assert phi_functor(th, F.algebra.unit, one, M1, M1, N, N).is_identity()
    with pytest.raises(NotMorphism):
        phi_functor(th, g, one, M1, M1, N, N)


def test_registry_and_stock():
    assert len(REGISTRY) >= 7
    for name in REGISTRY:
        assert example(name).summary()[0].startswith(name)
    with pytest.raises(UnknownName):
        example("zoo:nope")
    assert stock("group_algebra(Z/3)").dim == 3
    assert stock("diagonal(C^2)").dim == 2
    assert stock("trivial_hopf").dim == 1
    with pytest.raises(UnknownName):
        stock("quantum_group")

import pytest

from hopfcyc.complexes import (ModuleAlgebra, XHopfComplex, _CoringComplex,
                               build_cocyclic_module_algebra, build_cyclic_module_algebra,
                               build_cyclic_module_coring, iterated_delta, phi_identification,
                               regular_module_coring)
from hopfcyc.cyclic import cocyclic_from_cyclic, cyclic_dual, cyclic_homology, same_operators, verify_cocyclic, verify_cyclic
from hopfcyc.linalg import ONE
from hopfcyc.sayd import trivial_sayd
from hopfcyc.zoo import adjoint_lr, example, group_algebra, trivial_module_algebra


@pytest.fixture(scope="module")
def coring():
    return example("zoo:coring-z2").coring_data[0]


@pytest.mark.parametrize("name", ["zoo:trivial", "zoo:z2", "zoo:K2", "zoo:crossed-z2", "zoo:closing"])
def test_module_algebra_duality(name):
    for T, M in example(name).algebra_data:
        assert T.check().ok
        cc = build_cocyclic_module_algebra(T, M, 3)
        cy = build_cyclic_module_algebra(T, M, 3)
        assert verify_cocyclic(cc).ok and verify_cyclic(cy).ok
        assert same_operators(cyclic_dual(cc), cy)
        assert same_operators(cocyclic_from_cyclic(cyclic_dual(cc)), cc)


def test_broken_module_algebra(z2):
    T = trivial_module_algebra(z2.as_left, z2.algebra)
    assert T.check().ok
    # g acting by -1 on everything: g.(1 * 1) = -1 but (g.1)(g.1) = 1
    bad = ModuleAlgebra(T.hopf, T.algebra, (T.action[0], T.action[1].scale(-1)), "bad")
    assert not bad.check().ok


def test_iterated_delta_group(z2):
    h = z2.right_bialgebroid
    assert iterated_delta(h, {1: ONE}, 3) == {(1, 1, 1): ONE}


def test_coring_complex(coring):
    C, M = coring
    assert C.check().ok
    cy = build_cyclic_module_coring(C, M, 4)
    assert verify_cyclic(cy).ok
    assert cyclic_homology(cy).as_list() == [2, 0, 2, 0]


def test_phi_identification(coring):
    C, M = coring
    phis, invs, transported, displayed = phi_identification(C.hopf, M, 4)
    for n, (p, q) in enumerate(zip(phis, invs)):
        assert (p @ q).is_identity() and (q @ p).is_identity(), n
    assert same_operators(transported, displayed)
    assert verify_cyclic(displayed).ok


def test_phi_on_sample(coring):
    C, M = coring
    phis, *_ = phi_identification(C.hopf, M, 1)
    src = _CoringComplex(C, M).space(1)
    dst = XHopfComplex(C.hopf, M).space(1)
    # g (x) g (x) 1  ->  1 (x) 1
    assert phis[1].apply(src.reduce({(1, 1, 0): ONE})) == dst.reduce({(0, 0): ONE})


def test_phi_needs_left_right(z2):
    with pytest.raises(ValueError):
        XHopfComplex(z2.as_right, trivial_sayd(z2.as_left))


def test_phi_group_algebra_z3():
    H = group_algebra(3)
    M = adjoint_lr(H)
    phis, invs, transported, displayed = phi_identification(H.as_right, M, 3)
    assert all((p @ q).is_identity() for p, q in zip(phis, invs))
    assert same_operators(transported, displayed)

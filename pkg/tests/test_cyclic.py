import pytest
from hypothesis import given, settings, strategies as st

from hopfcyc.complexes import build_cocyclic_module_algebra, build_cyclic_module_algebra
from hopfcyc.cyclic import (CocyclicModule, CyclicModule, DegreeTooHigh, NotVerified,
                            cocyclic_from_cyclic, constant_cocyclic, constant_cyclic, cyclic_dual,
                            cyclic_homology, same_operators, verify_cocyclic, verify_cyclic)
from hopfcyc.sayd import trivial_sayd
from hopfcyc.zoo import diagonal, group_algebra, trivial_hopf, trivial_module_algebra


def _hochschild(T, N):
    K = trivial_hopf().as_left
    A = trivial_module_algebra(K, T)
    M = trivial_sayd(K)
    return build_cocyclic_module_algebra(A, M, N), build_cyclic_module_algebra(A, M, N)


def test_constant_modules_verify():
    assert verify_cocyclic(constant_cocyclic(4)).ok
    assert verify_cyclic(constant_cyclic(4)).ok


def test_constant_homology():
    assert cyclic_homology(constant_cyclic(4)).as_list() == [1, 0, 1, 0]
    assert cyclic_homology(constant_cyclic(4, dim=2)).as_list() == [2, 0, 2, 0]


def test_degree_too_high():
    with pytest.raises(DegreeTooHigh):
        cyclic_homology(constant_cyclic(3), up_to=3)


def test_dual_of_constant():
    assert same_operators(cyclic_dual(constant_cocyclic(4)), constant_cyclic(4))
    assert same_operators(cocyclic_from_cyclic(constant_cyclic(4)), constant_cocyclic(4))


def test_corrupted_tau_caught():
    c = constant_cyclic(3)
    tau = list(c.tau)
    tau[2] = tau[2].scale(2)
    bad = CyclicModule(c.dims, c.delta, c.sigma, tau)
    rep = verify_cyclic(bad)
    assert "τ" in rep.first().check and rep.first().witness[0] == 1  # first relation touching τ_2
    assert "τ^{n+1} = Id" in rep.failed()
    with pytest.raises(NotVerified):
        cyclic_homology(bad)


def test_corrupted_coface_caught():
    c = constant_cocyclic(3)
    d = [list(x) for x in c.d]
    d[1][0] = d[1][0].scale(3)
    bad = CocyclicModule(c.dims, d, c.s, c.t)
    failed = verify_cocyclic(bad).failed()
    for rel in ("d_j d_i = d_i d_{j-1}", "s_j d_i", "t d_i = d_{i-1} t", "t d_0 = d_{n+1}"):
        assert rel in failed
    with pytest.raises(NotVerified):
        cyclic_dual(bad)


def test_operator_counts_enforced():
    c = constant_cyclic(2)
    with pytest.raises(ValueError):
        CyclicModule(c.dims, c.delta, c.sigma[:1], c.tau)


@settings(max_examples=6, deadline=None)
@given(st.sampled_from(["diag", "group"]), st.integers(1, 3))
def test_hochschild_of_semisimple_commutative(kind, d):
    T = diagonal(d) if kind == "diag" else group_algebra(d).algebra
    cc, cy = _hochschild(T, 3)
    assert verify_cocyclic(cc).ok and verify_cyclic(cy).ok
    assert same_operators(cyclic_dual(cc), cy)
    assert cyclic_homology(cy).as_list() == [d, 0, d]


def test_round_trip_on_algebra_complex():
    cc, cy = _hochschild(group_algebra(2).algebra, 3)
    back = cocyclic_from_cyclic(cyclic_dual(cc))
    assert same_operators(back, cc)

import pytest

from hopfcyc.algebra import Plain
from hopfcyc.bialgebroid import algebra_endomorphisms
from hopfcyc.linalg import ONE, Matrix
from hopfcyc.sayd import (ComoduleOver, ModuleOver, NotSAYD, canonical_sayd_on_base,
                          check_ayd_right_left, check_stability, coaction_target, make_sayd,
                          trivial_sayd)
from hopfcyc.zoo import adjoint_lr, adjoint_rl, group_algebra, symmetric_group_3

UNITS = [(1, 1), (2, 3), (-1, 1), (1, -5)]


def _char_and_grouplike(H, chi, g):
    """1-dim module-comodule over H.as_left: m <| h = chi(h) m, coaction 1 -> g (x) 1."""
    HL = H.as_left
    acts = tuple(Matrix(1, 1, ({0: ONE * c} if c else {},)) for c in chi)
    r = (Matrix.identity(1),)
    tgt = coaction_target(HL, Plain(1), r)
    co = Matrix(tgt.dim, 1, (tgt.reduce({(g, 0): ONE}),))
    return ModuleOver(HL, Plain(1), acts), ComoduleOver(HL, Plain(1), r, co)


def test_trivial_coefficients(field_hopf, z2):
    for H in (field_hopf, z2):
        for side in (H.as_left, H.as_right):
            s = trivial_sayd(side)
            assert s.ayd_verified and s.stable_verified and s.dim == 1


def test_canonical_on_base_units(K2):
    for u in UNITS:
        s = canonical_sayd_on_base(K2, u)
        assert s.report.ok and check_stability(s)


def test_canonical_rejects_non_unit(K2):
    with pytest.raises(ValueError):
        canonical_sayd_on_base(K2, (0, 1))


def test_swap_theta_is_not_sayd(K2, R2):
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(NotSAYD) as exc:
        canonical_sayd_on_base(K2, (1, 1), theta=swap)
    assert exc.value.witness_for("AYD") is not None


def test_non_identity_endomorphisms_fail(K2, R2):
    bad = [t for t in algebra_endomorphisms(R2) if not t.is_identity()]
    assert len(bad) == 3
    for theta in bad:
        s = canonical_sayd_on_base(K2, (2, 3), theta=theta, strict=False)
        assert not s.ayd_verified
        assert "AYD" in s.report.failed()


@pytest.mark.parametrize("H", [group_algebra(2), group_algebra(3), symmetric_group_3()],
                         ids=lambda H: H.name)
def test_adjoint_lr(H):
    s = adjoint_lr(H)
    assert s.chirality == "LR" and s.ayd_verified and s.stable_verified


@pytest.mark.parametrize("n", [2, 3])
def test_adjoint_rl(n):
    s = adjoint_rl(group_algebra(n))
    assert s.chirality == "RL" and s.ayd_verified and s.stable_verified


def test_zero_coaction_fails_counitality_first(z2):
    s = adjoint_lr(z2)
    broken = ComoduleOver(s.comodule.hopf, s.space, s.comodule.r_action,
                          Matrix.zeros(s.comodule.coaction.rows, s.comodule.coaction.cols))
    with pytest.raises(NotSAYD) as exc:
        make_sayd(s.module, broken)
    assert exc.value.check == "comodule: counitality"
    assert exc.value.witness_for("AYD") is None  # never reached


def test_stability_boundary(z2):
    # chi(g) = -1, sigma = g: AYD holds, stability gives chi(sigma) = -1
    mod, co = _char_and_grouplike(z2, (1, -1), 1)
    assert check_ayd_right_left(z2.as_left, mod, co).ok
    assert not check_stability((mod, co))
    with pytest.raises(NotSAYD) as exc:
        make_sayd(mod, co)
    assert exc.value.check == "stability"
    s = make_sayd(mod, co, strict=False)
    assert s.ayd_verified and not s.stable_verified
    # chi(g) = -1, sigma = 1 is stable
    mod, co = _char_and_grouplike(z2, (1, -1), 0)
    assert make_sayd(mod, co).stable_verified

"""Modules, comodules and stable anti-Yetter-Drinfeld modules over x-Hopf algebras.

Two chiralities:

* ``"RL"``: right module / left comodule over a left x-Hopf algebra K, coaction
  ``M -> K (x)_R M`` balanced by ``t(r) k (x) m = k (x) r.m``.
* ``"LR"``: left module / right comodule over a right x-Hopf algebra B, coaction
  ``M -> M (x)_R B`` balanced by ``m.r (x) b = m (x) b t(r)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .algebra import (BalancedTensor, Bimodule, Plain, Space, Tensor, leaf, leaf_action,
                      outer, tadd)
from .bialgebroid import XHopfLeft, XHopfRight
from .linalg import ONE, Matrix, Vec, vadd
from .report import Report


class NotSAYD(ValueError):
    """The first failing identity, with the full report attached."""

    def __init__(self, report: Report):
        v = report.first()
        super().__init__(f"not SAYD: {v.check} fails at {v.witness}" if v else "not SAYD")
        self.report = report
        self.check = v.check if v else ""
        self.witness = v.witness if v else ()

    def witness_for(self, check: str):
        """Witness of a named identity if it failed too (later checks may also fail)."""
        return next((v.witness for v in self.report.violations if v.check == check), None)


@dataclass(eq=False)
class ModuleOver:
    """Right K-module (left x-Hopf) or left B-module (right x-Hopf).

    ``action[k]`` is the matrix of ``m -> m <| e_k`` (resp. ``e_k |> m``).
    """

    hopf: object
    space: Space
    action: tuple

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def right(self) -> bool:
        return isinstance(self.hopf, XHopfLeft)

    def act(self, m: Mapping, k: Mapping) -> Vec:
        out: Vec = {}
        for i, x in k.items():
            vadd(out, self.action[i].apply(m), x)
        return out

    def matrix(self, k: Mapping) -> Matrix:
        cols = [dict() for _ in range(self.dim)]
        for i, x in k.items():
            for j, c in enumerate(self.action[i].columns):
                vadd(cols[j], c, x)
        return Matrix(self.dim, self.dim, tuple(cols))

    def check(self) -> Report:
        rep = Report("module")
        A = self.hopf.total
        n = self.dim
        rep.record("unital", None if self.matrix(A.unit).is_identity() else ("unit",))

        def assoc():
            for i, j in itertools.product(range(A.dim), repeat=2):
                lhs = self.matrix(A.table[i][j])
                rhs = (self.action[j] @ self.action[i]) if self.right else (self.action[i] @ self.action[j])
                if lhs != rhs:
                    return (i, j)
            return None
        rep.run("associative", assoc)
        if any(m.shape != (n, n) for m in self.action):
            rep.record("shapes", ("action",))
        return rep

    # R-actions induced by the module structure
    def r_left(self) -> tuple:
        """rm: m <| t(r) for K, s(r) |> m for B."""
        h = self.hopf.bialgebroid
        img = h.target if self.right else h.source
        return tuple(self.matrix(img.columns[r]) for r in range(h.base.dim))

    def r_right(self) -> tuple:
        """mr: m <| s(r) for K, t(r) |> m for B."""
        h = self.hopf.bialgebroid
        img = h.source if self.right else h.target
        return tuple(self.matrix(img.columns[r]) for r in range(h.base.dim))


@dataclass(eq=False)
class ComoduleOver:
    """Left K-comodule (``r_action`` = its left R-action) or right B-comodule
    (``r_action`` = its right R-action); ``coaction`` lands in :attr:`target`."""

    hopf: object
    space: Space
    r_action: tuple
    coaction: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def left(self) -> bool:
        return isinstance(self.hopf, XHopfLeft)

    @cached_property
    def target(self) -> BalancedTensor:
        return coaction_target(self.hopf, self.space, self.r_action)

    @cached_property
    def double_target(self) -> BalancedTensor:
        """K (x)_R K (x)_R M, resp. M (x)_R B (x)_R B (left bracketed)."""
        h = self.hopf.bialgebroid
        R = h.base
        if self.left:
            ra = tuple(leaf_action(h.kk, 1, m) for m in h._ops("l", "t"))
            return BalancedTensor(Bimodule(h.kk, right=R, right_action=ra),
                                  Bimodule(self.space, left=R, left_action=self.r_action), R)
        mb = self.target
        pos = len(self.space.leaves)
        ra = tuple(leaf_action(mb, pos, m) for m in h._ops("r", "s"))
        return BalancedTensor(Bimodule(mb, right=R, right_action=ra),
                              Bimodule(Plain(h.dim), left=R, left_action=h._ops("r", "t")), R)

    def rho(self, m: Mapping) -> Tensor:
        """Flat representative of the coaction of m."""
        return self.target.lift(self.coaction.apply(m))

    def split(self, key: tuple):
        """(K index, M class) for a flat key of the target (or (M class, B index))."""
        sp = self.space
        if self.left:
            return key[0], sp.class_of(key[1:])
        return sp.class_of(key[:-1]), key[-1]

    def r_right_induced(self) -> tuple:
        """Left comodule: m r = eps(m(-1) s(r)) . m(0).
        Right comodule: r m = m(0) . eps(s(r) m(1))."""
        h = self.hopf.bialgebroid
        K, R = h.total, h.base
        cols_per_r = []
        for r in range(R.dim):
            sr = h.source.columns[r]
            cols = []
            for j in range(self.dim):
                out: Vec = {}
                for key, x in self.rho({j: ONE}).items():
                    if self.left:
                        k, mv = self.split(key)
                        e = h.eps(K.mul({k: ONE}, sr))
                        vadd(out, _act(self.r_action, e, mv), x)
                    else:
                        mv, b = self.split(key)
                        e = h.eps(K.mul(sr, {b: ONE}))
                        vadd(out, _act(self.r_action, e, mv), x)
                cols.append(out)
            cols_per_r.append(Matrix(self.dim, self.dim, tuple(cols)))
        return tuple(cols_per_r)

    def check(self) -> Report:
        rep = Report("comodule")
        h = self.hopf.bialgebroid
        K, R = h.total, h.base
        n = self.dim
        tgt = self.target
        if self.coaction.shape != (tgt.dim, n):
            rep.record("shapes", (self.coaction.shape, (tgt.dim, n)))
            return rep
        dt = self.double_target
        e = lambda i: {i: ONE}
        nl = len(self.space.leaves)

        def coassoc():
            for j in range(n):
                lhs: Tensor = {}
                rhs: Tensor = {}
                for key, x in self.rho(e(j)).items():
                    if self.left:
                        k, mv = key[0], key[1:]
                        tadd(lhs, outer(h.delta(e(k)), {mv: ONE}), x)
                        tadd(rhs, outer({(k,): ONE}, self.rho(self.space.class_of(mv))), x)
                    else:
                        mv, b = key[:nl], key[nl]
                        tadd(lhs, outer(self.rho(self.space.class_of(mv)), {(b,): ONE}), x)
                        tadd(rhs, outer({mv: ONE}, h.delta(e(b))), x)
                if dt.reduce(lhs) != dt.reduce(rhs):
                    return (j,)
            return None
        rep.run("coassociativity", coassoc)

        def counital():
            for j in range(n):
                out: Vec = {}
                for key, x in self.rho(e(j)).items():
                    if self.left:
                        k, mv = self.split(key)
                        vadd(out, _act(self.r_action, h.eps(e(k)), mv), x)
                    else:
                        mv, b = self.split(key)
                        vadd(out, _act(self.r_action, h.eps(e(b)), mv), x)
                if out != e(j):
                    return (j,)
            return None
        rep.run("counitality", counital)
        if not rep.ok:
            return rep

        induced = self.r_right_induced()

        def linear():
            # left: (r m r')(-1) (x) (r m r')(0) = s(r) m(-1) s(r') (x) m(0)
            # right: (m r)(0) (x) (m r)(1) = m(0) (x) m(1) s(r), and
            #        (r m)(0) (x) (r m)(1) = m(0) (x) s(r) m(1)
            for r, j in itertools.product(range(R.dim), range(n)):
                sr = h.source.columns[r]
                m = e(j)
                if self.left:
                    for r2 in range(R.dim):
                        sr2 = h.source.columns[r2]
                        moved = induced[r2].apply(self.r_action[r].apply(m))
                        lhs = self.coaction.apply(moved)
                        rhs: Tensor = {}
                        for key, x in self.rho(m).items():
                            tadd(rhs, outer(leaf(K.prod(sr, {key[0]: ONE}, sr2)),
                                            {key[1:]: ONE}), x)
                        if tgt.reduce(rhs) != lhs:
                            return ("bimodule", r, r2, j)
                else:
                    lhs = self.coaction.apply(self.r_action[r].apply(m))
                    rhs: Tensor = {}
                    lhs2 = self.coaction.apply(induced[r].apply(m))
                    rhs2: Tensor = {}
                    for key, x in self.rho(m).items():
                        tadd(rhs, outer({key[:nl]: ONE}, leaf(K.mul({key[nl]: ONE}, sr))), x)
                        tadd(rhs2, outer({key[:nl]: ONE}, leaf(K.mul(sr, {key[nl]: ONE}))), x)
                    if tgt.reduce(rhs) != lhs:
                        return ("right", r, j)
                    if tgt.reduce(rhs2) != lhs2:
                        return ("left", r, j)
            return None
        rep.run("R-bimodule map", linear)

        if self.left:
            def abc():
                # m(-1) (x) m(0) r = m(-1) t(r) (x) m(0)
                for r, j in itertools.product(range(R.dim), range(n)):
                    tr = h.target.columns[r]
                    lhs: Tensor = {}
                    rhs: Tensor = {}
                    for key, x in self.rho(e(j)).items():
                        k, mv = self.split(key)
                        tadd(lhs, outer({(k,): ONE}, self.space.lift(induced[r].apply(mv))), x)
                        tadd(rhs, outer(leaf(K.mul({k: ONE}, tr)), {key[1:]: ONE}), x)
                    if tgt.reduce(lhs) != tgt.reduce(rhs):
                        return (r, j)
                return None
            rep.run("coaction t-balanced", abc)
        return rep


def _act(mats: Sequence[Matrix], coeffs: Mapping, v: Mapping) -> Vec:
    out: Vec = {}
    for i, x in coeffs.items():
        vadd(out, mats[i].apply(v), x)
    return out


def coaction_target(hopf, space: Space, r_action: Sequence[Matrix]) -> BalancedTensor:
    h = hopf.bialgebroid
    R = h.base
    if isinstance(hopf, XHopfLeft):
        return BalancedTensor(Bimodule(Plain(h.dim), right=R, right_action=h._ops("l", "t")),
                              Bimodule(space, left=R, left_action=tuple(r_action)), R)
    return BalancedTensor(Bimodule(space, right=R, right_action=tuple(r_action)),
                          Bimodule(Plain(h.dim), left=R, left_action=h._ops("r", "t")), R)


@dataclass(eq=False)
class SAYDModule:
    module: ModuleOver
    comodule: ComoduleOver
    chirality: str  # "RL" or "LR"
    ayd_verified: bool = False
    stable_verified: bool = False
    report: Report | None = None
    name: str = ""

    @property
    def hopf(self):
        return self.module.hopf

    @property
    def space(self) -> Space:
        return self.module.space

    @property
    def dim(self) -> int:
        return self.module.dim


def _structure_checks(rep: Report, module: ModuleOver, comodule: ComoduleOver) -> None:
    rep.extend(module.check(), "module: ")
    rep.extend(comodule.check(), "comodule: ")


def check_ayd_right_left(hopf: XHopfLeft, module: ModuleOver, comodule: ComoduleOver) -> Report:
    """Module/comodule axioms, bimodule match and the right-left AYD identity."""
    rep = Report("AYD right-left")
    _structure_checks(rep, module, comodule)
    if not rep.ok:
        return rep
    h = hopf.bialgebroid
    K, R = h.total, h.base
    n = module.dim
    e = lambda i: {i: ONE}
    induced = comodule.r_right_induced()
    ms, mt = module.r_right(), module.r_left()

    def match():
        for r in range(R.dim):
            if induced[r] != ms[r]:
                return ("mr", r)
            if comodule.r_action[r] != mt[r]:
                return ("rm", r)
        return None
    rep.run("bimodule match", match)
    tgt = comodule.target

    def ayd():
        for j, k in itertools.product(range(n), range(K.dim)):
            lhs = comodule.coaction.apply(module.action[k].apply(e(j)))
            rhs: Tensor = {}
            rho = comodule.rho(e(j))
            for (a, b), x in h.delta(e(k)).items():
                for (c, d), y in hopf.mp(e(b)).items():
                    for key, z in rho.items():
                        p, mv = comodule.split(key)
                        kpart = K.prod(e(d), e(p), e(a))
                        mpart = module.action[c].apply(mv)
                        tadd(rhs, outer(leaf(kpart), module.space.lift(mpart)), x * y * z)
            if tgt.reduce(rhs) != lhs:
                return (j, k)
        return None
    rep.run("AYD", ayd)
    return rep


def check_ayd_left_right(hopf: XHopfRight, module: ModuleOver, comodule: ComoduleOver) -> Report:
    """Mirror of :func:`check_ayd_right_left` for a right x-Hopf algebra."""
    rep = Report("AYD left-right")
    _structure_checks(rep, module, comodule)
    if not rep.ok:
        return rep
    h = hopf.bialgebroid
    B, R = h.total, h.base
    n = module.dim
    e = lambda i: {i: ONE}
    induced = comodule.r_right_induced()  # canonical left R-action
    mt, ms = module.r_right(), module.r_left()

    def match():
        for r in range(R.dim):
            if comodule.r_action[r] != mt[r]:
                return ("mr", r)
            if induced[r] != ms[r]:
                return ("rm", r)
        return None
    rep.run("bimodule match", match)
    tgt = comodule.target

    def ayd():
        # (b |> m)(0) (x) (b |> m)(1) = b(1)+ |> m(0) (x) b(2) m(1) b(1)-
        for j, b in itertools.product(range(n), range(B.dim)):
            lhs = comodule.coaction.apply(module.action[b].apply(e(j)))
            rhs: Tensor = {}
            rho = comodule.rho(e(j))
            for (p, q), x in h.delta(e(b)).items():
                for (c, d), y in hopf.mp(e(p)).items():
                    for key, z in rho.items():
                        mv, m1 = comodule.split(key)
                        mpart = module.action[d].apply(mv)
                        bpart = B.prod(e(q), e(m1), e(c))
                        tadd(rhs, outer(module.space.lift(mpart), leaf(bpart)), x * y * z)
            if tgt.reduce(rhs) != lhs:
                return (j, b)
        return None
    rep.run("AYD", ayd)
    return rep


def stability_matrix(module: ModuleOver, comodule: ComoduleOver) -> Matrix:
    """m -> m(0) <| m(-1)  (resp. m(1) |> m(0))."""
    cols = []
    for j in range(module.dim):
        out: Vec = {}
        for key, x in comodule.rho({j: ONE}).items():
            if comodule.left:
                k, mv = comodule.split(key)
            else:
                mv, k = comodule.split(key)
            vadd(out, module.action[k].apply(mv), x)
        cols.append(out)
    return Matrix(module.dim, module.dim, tuple(cols))


def check_stability(s: SAYDModule | tuple) -> bool:
    module, comodule = (s.module, s.comodule) if isinstance(s, SAYDModule) else s
    return stability_matrix(module, comodule).is_identity()


def make_sayd(module: ModuleOver, comodule: ComoduleOver, name: str = "",
              strict: bool = True) -> SAYDModule:
    """Verify and bundle; raises :class:`NotSAYD` (first failure) when strict."""
    left = isinstance(module.hopf, XHopfLeft)
    rep = (check_ayd_right_left if left else check_ayd_left_right)(module.hopf, module, comodule)
    ayd = rep.ok
    stable = ayd and check_stability((module, comodule))
    if ayd:
        rep.record("stability", None if stable else ("stability",))
    s = SAYDModule(module, comodule, "RL" if left else "LR", ayd, stable, rep, name)
    if strict and not (ayd and stable):
        raise NotSAYD(rep)
    return s


# ---------------------------------------------------------------- examples

def canonical_sayd_on_base(env: XHopfLeft, x: Sequence | Mapping, theta: Matrix | None = None,
                           strict: bool = True) -> SAYDModule:
    """R over R (x) R^op with r <| k = delta(s(r) k) and r -> s(r) sigma (x) 1.

    ``sigma = x (x) x^-1`` and ``delta(s (x) r) = theta(r) s``.
    """
    from .bialgebroid import character_from_theta, unit_inverse
    lb = env.bialgebroid
    R = lb.envelope_of
    K = lb.total
    n = R.dim
    xv = x if isinstance(x, Mapping) else {i: c for i, c in enumerate(x) if c}
    from .linalg import scalar
    xv = {i: scalar(c) for i, c in xv.items()}
    inv = unit_inverse(R, xv)
    if inv is None:
        raise ValueError(f"{x} is not a unit")
    theta = theta if theta is not None else Matrix.identity(n)
    delta = character_from_theta(env, theta)
    sigma = {i * n + j: a * b for i, a in xv.items() for j, b in inv.items()}
    space = Plain(n)
    action = tuple(Matrix(n, n, tuple(delta.delta.apply(K.mul(lb.source.columns[r], {k: ONE}))
                                      for r in range(n)))
                   for k in range(K.dim))
    module = ModuleOver(env, space, action)
    r_action = R.left_regular
    tgt = coaction_target(env, space, r_action)
    co = Matrix(tgt.dim, n, tuple(tgt.reduce(outer(leaf(K.mul(lb.source.columns[r], sigma)),
                                                   leaf(R.unit)))
                                  for r in range(n)))
    comodule = ComoduleOver(env, space, r_action, co)
    return make_sayd(module, comodule, name=f"R({R.name}) x={_fmtv(xv)}", strict=strict)


def _fmtv(v: Mapping) -> str:
    from .linalg import fmt
    return "(" + ",".join(fmt(v.get(i, 0)) for i in range(max(v) + 1 if v else 0)) + ")"


def trivial_sayd(hopf) -> SAYDModule:
    """The ground field with counit action and unit coaction (base must be the field)."""
    h = hopf.bialgebroid
    if h.base.dim != 1:
        raise ValueError("trivial coefficients need base = ground field")
    space = Plain(1)
    action = tuple(Matrix(1, 1, (h.eps({k: ONE}),)) for k in range(h.dim))
    module = ModuleOver(hopf, space, action)
    r_action = (Matrix.identity(1),)
    tgt = coaction_target(hopf, space, r_action)
    if isinstance(hopf, XHopfLeft):
        co = tgt.reduce(outer(leaf(h.total.unit), {(0,): ONE}))
    else:
        co = tgt.reduce(outer({(0,): ONE}, leaf(h.total.unit)))
    comodule = ComoduleOver(hopf, space, r_action, Matrix(tgt.dim, 1, (co,)))
    return make_sayd(module, comodule, name="trivial")

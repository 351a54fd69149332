"""Hopf-cyclic complexes of module algebras and module corings.

Degree-n spaces are quotients of plain tensor products; every operator is
written on flat representatives and descended (a failed descent raises
:class:`NotWellDefined`).  Diagonal actions use the iterated comultiplication
expanded on the last leg, i.e. left-associated bracketing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .algebra import (BalancedTensor, Bimodule, Coring, FDAlgebra, FlatQuotient, NotWellDefined,
                      Plain, Space, Tensor, check_coring, descend, leaf, outer, tadd)
from .bialgebroid import XHopfLeft, XHopfRight
from .cyclic import CocyclicModule, CyclicModule
from .linalg import ONE, Matrix, Vec, vadd
from .report import Report
from .sayd import SAYDModule

e = lambda i: {i: ONE}  # noqa: E731


def _sum_act(mats, coeffs: Mapping, v: Mapping) -> Vec:
    out: Vec = {}
    for i, x in coeffs.items():
        vadd(out, mats[i].apply(v), x)
    return out


def iterated_delta(h, k: Mapping, legs: int) -> Tensor:
    """Flat representative of k(1) (x) ... (x) k(legs), expanding the last leg."""
    acc: Tensor = leaf(k)
    for _ in range(legs - 1):
        nxt: Tensor = {}
        for key, x in acc.items():
            tadd(nxt, outer({key[:-1]: ONE}, h.delta(e(key[-1]))), x)
        acc = nxt
    return acc


def tensor_power_space(dim: int, n: int, right_ops, left_ops, name: str = "") -> FlatQuotient:
    """dim^{(x) n} modulo  x.r (x) y = x (x) r.y  at every joint."""
    joints = [(i, right_ops, i + 1, left_ops) for i in range(n - 1)]
    return FlatQuotient((dim,) * n, joints, name)


def diagonal_action(h, space: Space, factor_action, legs: int, name: str) -> tuple:
    """Matrices of the diagonal action of every basis element of ``h.total``.

    ``factor_action[k]`` is the action matrix of e_k on one factor; the factors
    are the ``legs`` flat leaves of ``space``.
    """
    mats = []
    for k in range(h.dim):
        d = iterated_delta(h, e(k), legs)
        cols = [m.columns for m in factor_action]

        def f(key, d=d, cols=cols):
            out: Tensor = {}
            for ks, x in d.items():
                parts = [leaf(cols[kk][t]) for kk, t in zip(ks, key)]
                tadd(out, outer(*parts), x)
            return out
        mats.append(descend(space, space, f, f"{name} by e{k}"))
    return tuple(mats)


# ---------------------------------------------------------------- module algebras

@dataclass(eq=False)
class ModuleAlgebra:
    """Left K-module algebra; ``action[k]`` is the matrix of a -> e_k |> a."""

    hopf: XHopfLeft
    algebra: FDAlgebra
    action: tuple
    name: str = ""

    def act(self, k: Mapping, a: Mapping) -> Vec:
        return _sum_act(self.action, k, a)

    def eta(self, r: Mapping) -> Vec:
        """The base algebra S inside T: r -> s(r) |> 1."""
        h = self.hopf.bialgebroid
        return self.act(h.s(r), self.algebra.unit)

    @cached_property
    def s_right(self) -> tuple:
        T = self.algebra
        return tuple(T.rmul(self.eta(e(r))) for r in range(self.hopf.base.dim))

    @cached_property
    def s_left(self) -> tuple:
        T = self.algebra
        return tuple(T.lmul(self.eta(e(r))) for r in range(self.hopf.base.dim))

    def check(self) -> Report:
        rep = Report(self.name or "module algebra")
        h = self.hopf.bialgebroid
        K, T, S = h.total, self.algebra, h.base
        n = T.dim
        if len(self.action) != K.dim or any(m.shape != (n, n) for m in self.action):
            rep.record("shapes", ("action",))
            return rep

        def unital():
            return None if _comb(self.action, K.unit, n).is_identity() else ("unit",)
        rep.run("module unital", unital)

        def assoc():
            for i, j in itertools.product(range(K.dim), repeat=2):
                if _comb(self.action, K.table[i][j], n) != self.action[i] @ self.action[j]:
                    return (i, j)
            return None
        rep.run("module associative", assoc)

        def ma1():
            for k in range(K.dim):
                if self.action[k].apply(T.unit) != self.act(h.s(h.eps(e(k))), T.unit):
                    return (k,)
            return None
        rep.run("unit preserved", ma1)

        def ma2():
            for k in range(K.dim):
                d = h.delta(e(k))
                for a, b in itertools.product(range(n), repeat=2):
                    lhs = self.action[k].apply(T.table[a][b])
                    rhs: Vec = {}
                    for (p, q), x in d.items():
                        vadd(rhs, T.mul(self.action[p].apply(e(a)), self.action[q].apply(e(b))), x)
                    if lhs != rhs:
                        return (k, a, b)
            return None
        rep.run("multiplication equivariant", ma2)

        def ma3():
            for r in range(S.dim):
                tr, sr = h.t(e(r)), h.s(e(r))
                for a, b in itertools.product(range(n), repeat=2):
                    if T.mul(self.act(tr, e(a)), e(b)) != T.mul(e(a), self.act(sr, e(b))):
                        return (r, a, b)
            return None
        rep.run("multiplication balanced", ma3)
        return rep


def _comb(mats, coeffs: Mapping, n: int) -> Matrix:
    cols = [dict() for _ in range(n)]
    for i, x in coeffs.items():
        for j, c in enumerate(mats[i].columns):
            vadd(cols[j], c, x)
    return Matrix(n, n, tuple(cols))


class _AlgebraComplex:
    """Spaces M (x)_K T^{(x)_S (n+1)} and representative-level helpers."""

    def __init__(self, T: ModuleAlgebra, M: SAYDModule):
        if M.chirality != "RL":
            raise ValueError("module-algebra complex needs right-left SAYD coefficients")
        self.T, self.M = T, M
        self.h = T.hopf.bialgebroid
        self.nm = len(M.space.leaves)
        self._spaces: dict = {}

    def tensor_space(self, n: int) -> FlatQuotient:
        return tensor_power_space(self.T.algebra.dim, n + 1, self.T.s_right, self.T.s_left)

    def space(self, n: int) -> BalancedTensor:
        if n not in self._spaces:
            X = self.tensor_space(n)
            diag = diagonal_action(self.h, X, self.T.action, n + 1, f"diagonal action on T^{n + 1}")
            K = self.h.total
            self._spaces[n] = BalancedTensor(
                Bimodule(self.M.space, right=K, right_action=self.M.module.action),
                Bimodule(X, left=K, left_action=diag), K, name=f"C{n}")
        return self._spaces[n]

    def coaction_iter(self, mkey: tuple, times: int) -> list:
        """[(k_1..k_times, flat m(0) key, coeff)] with k_1 = m(-times), ..., k_times = m(-1)."""
        sp = self.M.space
        co = self.M.comodule
        acc: list = [((), mkey, ONE)]
        for _ in range(times):
            nxt = []
            for ks, mk, x in acc:
                for key, y in co.rho(sp.class_of(mk)).items():
                    nxt.append((ks + (key[0],), key[1:], x * y))
            acc = nxt
        return acc

    def act_t(self, k: int, t: int) -> Tensor:
        return leaf(self.T.action[k].columns[t])

    def build(self, fn, n_src: int, n_dst: int, name: str) -> Matrix:
        src, dst = self.space(n_src), self.space(n_dst)
        try:
            return descend(src, dst, fn, name)
        except NotWellDefined as exc:
            raise NotWellDefined(name, (n_src,) + tuple(exc.witness)) from None


def build_cocyclic_module_algebra(T: ModuleAlgebra, M: SAYDModule, N: int) -> CocyclicModule:
    """Cocyclic module n -> M (x)_K T^{(x)_S (n+1)} for n <= N.

    d_i inserts 1 in slot i (0 <= i <= n), d_{n+1} appends m(-1) |> 1,
    s_i multiplies slots i and i+1, t_n rotates t_0 to the end acted on by m(-1).
    """
    cx = _AlgebraComplex(T, M)
    Talg = T.algebra
    one = leaf(Talg.unit)
    nm = cx.nm

    def coface(n, i):
        def f(key):
            m, ts = key[:nm], key[nm:]
            if i <= n:
                return outer({m + ts[:i]: ONE}, one, {ts[i:]: ONE})
            out: Tensor = {}
            for ks, m0, x in cx.coaction_iter(m, 1):
                tadd(out, outer({m0 + ts: ONE}, leaf(T.act(e(ks[0]), Talg.unit))), x)
            return out
        return cx.build(f, n, n + 1, f"d_{i}")

    def codeg(n, i):
        def f(key):
            m, ts = key[:nm], key[nm:]
            return outer({m + ts[:i]: ONE}, leaf(Talg.table[ts[i]][ts[i + 1]]), {ts[i + 2:]: ONE})
        return cx.build(f, n, n - 1, f"s_{i}")

    def cyc(n):
        def f(key):
            m, ts = key[:nm], key[nm:]
            out: Tensor = {}
            for ks, m0, x in cx.coaction_iter(m, 1):
                tadd(out, outer({m0 + ts[1:]: ONE}, cx.act_t(ks[0], ts[0])), x)
            return out
        return cx.build(f, n, n, "t")

    dims = [cx.space(n).dim for n in range(N + 1)]
    d = [[coface(n, i) for i in range(n + 2)] for n in range(N)]
    s = [[codeg(n, i) for i in range(n)] for n in range(N + 1)]
    t = [cyc(n) for n in range(N + 1)]
    return CocyclicModule(dims, d, s, t, name=f"C^*({T.name or 'T'}, {M.name or 'M'})")


def build_cyclic_module_algebra(T: ModuleAlgebra, M: SAYDModule, N: int,
                                cx: _AlgebraComplex | None = None) -> CyclicModule:
    """Faces multiply neighbours (the last one wraps with the coaction), degeneracies
    insert 1 after slot i, tau moves t_n to the front."""
    cx = cx or _AlgebraComplex(T, M)
    Talg = T.algebra
    one = leaf(Talg.unit)
    nm = cx.nm

    def face(n, i):
        def f(key):
            m, ts = key[:nm], key[nm:]
            if i < n:
                return outer({m + ts[:i]: ONE}, leaf(Talg.table[ts[i]][ts[i + 1]]), {ts[i + 2:]: ONE})
            out: Tensor = {}
            for ks, m0, x in cx.coaction_iter(m, n):
                parts = [leaf(Talg.mul(e(ts[n]), T.action[ks[0]].columns[ts[0]]))]
                parts += [cx.act_t(ks[j], ts[j]) for j in range(1, n)]
                tadd(out, outer({m0: ONE}, *parts), x)
            return out
        return cx.build(f, n, n - 1, f"delta_{i}")

    def degen(n, i):
        def f(key):
            m, ts = key[:nm], key[nm:]
            return outer({m + ts[:i + 1]: ONE}, one, {ts[i + 1:]: ONE})
        return cx.build(f, n, n + 1, f"sigma_{i}")

    def cyc(n):
        def f(key):
            m, ts = key[:nm], key[nm:]
            out: Tensor = {}
            for ks, m0, x in cx.coaction_iter(m, n):
                parts = [cx.act_t(ks[j], ts[j]) for j in range(n)]
                tadd(out, outer({m0 + (ts[n],): ONE}, *parts), x)
            return out
        return cx.build(f, n, n, "tau")

    dims = [cx.space(n).dim for n in range(N + 1)]
    delta = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    sigma = [[degen(n, i) for i in range(n + 1)] for n in range(N)]
    tau = [cyc(n) for n in range(N + 1)]
    return CyclicModule(dims, delta, sigma, tau, name=f"C_*({T.name or 'T'}, {M.name or 'M'})")


# ---------------------------------------------------------------- module corings

@dataclass(eq=False)
class ModuleCoring:
    """Right B-module coring; ``action[b]`` is the matrix of c -> c <| e_b."""

    hopf: XHopfRight
    coring: Coring
    action: tuple
    name: str = ""

    @property
    def dim(self) -> int:
        return self.coring.carrier.dim

    @cached_property
    def cc_diagonal(self) -> tuple:
        c = self.coring
        return diagonal_action(self.hopf.bialgebroid, c.cc, self.action, 2, "diagonal action on C(x)C")

    def check(self) -> Report:
        rep = Report(self.name or "module coring")
        h = self.hopf.bialgebroid
        B, R = h.total, h.base
        C = self.coring.carrier
        n = self.dim
        if not isinstance(C.space, Plain):
            raise ValueError("module corings need a plain carrier space")
        rep.extend(check_coring(self.coring), "coring: ")
        if len(self.action) != B.dim or any(m.shape != (n, n) for m in self.action):
            rep.record("shapes", ("action",))
            return rep

        def unital():
            return None if _comb(self.action, B.unit, n).is_identity() else ("unit",)
        rep.run("module unital", unital)

        def assoc():
            for i, j in itertools.product(range(B.dim), repeat=2):
                if _comb(self.action, B.table[i][j], n) != self.action[j] @ self.action[i]:
                    return (i, j)
            return None
        rep.run("module associative", assoc)

        def bimod():
            for r in range(R.dim):
                if C.right_action[r] != _comb(self.action, h.s(e(r)), n):
                    return ("right", r)
                if C.left_action[r] != _comb(self.action, h.t(e(r)), n):
                    return ("left", r)
            return None
        rep.run("R-bimodule induced", bimod)
        if not rep.ok:
            return rep
        eps = self.coring.counit

        def mc1():
            for b, c in itertools.product(range(B.dim), range(n)):
                lhs = eps.apply(self.action[b].apply(e(c)))
                rhs = h.eps(B.mul(h.s(eps.apply(e(c))), e(b)))
                if lhs != rhs:
                    return (c, b)
            return None
        rep.run("counit B-linear", mc1)

        def mc2():
            dm = self.coring.comult
            for b in range(B.dim):
                if dm @ self.action[b] != self.cc_diagonal[b] @ dm:
                    return (b,)
            return None
        rep.run("comultiplication B-linear", mc2)
        return rep


class _CoringComplex:
    """Spaces C^{(x)_R (n+1)} (x)_B M."""

    def __init__(self, C: ModuleCoring, M: SAYDModule):
        if M.chirality != "LR":
            raise ValueError("module-coring complex needs left-right SAYD coefficients")
        self.C, self.M = C, M
        self.h = C.hopf.bialgebroid
        self.nm = len(M.space.leaves)
        self._spaces: dict = {}

    def space(self, n: int) -> BalancedTensor:
        if n not in self._spaces:
            car = self.C.coring.carrier
            X = tensor_power_space(car.dim, n + 1, car.right_action, car.left_action)
            diag = diagonal_action(self.h, X, self.C.action, n + 1, f"diagonal action on C^{n + 1}")
            B = self.h.total
            self._spaces[n] = BalancedTensor(
                Bimodule(X, right=B, right_action=diag),
                Bimodule(self.M.space, left=B, left_action=self.M.module.action), B, name=f"C~{n}")
        return self._spaces[n]

    def build(self, fn, n_src: int, n_dst: int, name: str) -> Matrix:
        try:
            return descend(self.space(n_src), self.space(n_dst), fn, name)
        except NotWellDefined as exc:
            raise NotWellDefined(name, (n_src,) + tuple(exc.witness)) from None


def build_cyclic_module_coring(C: ModuleCoring, M: SAYDModule, N: int, verify: bool = True) -> CyclicModule:
    if verify:
        rep = C.check()
        if not rep.ok:
            v = rep.first()
            raise NotWellDefined(v.check, v.witness, "(module coring)")
    cx = _CoringComplex(C, M)
    car = C.coring.carrier
    eps, dm = C.coring.counit, C.coring.comult
    cc = C.coring.cc
    nm = cx.nm
    co = M.comodule

    def face(n, i):
        def f(key):
            cs, m = key[:n + 1], key[n + 1:]
            r = eps.columns[cs[i]]
            if i < n:
                merged = leaf(car.act_left(r, e(cs[i + 1])))
                return outer({cs[:i]: ONE}, merged, {cs[i + 2:] + m: ONE})
            merged = leaf(car.act_right(e(cs[n - 1]), r))
            return outer({cs[:n - 1]: ONE}, merged, {m: ONE})
        return cx.build(f, n, n - 1, f"delta_{i}")

    def degen(n, i):
        def f(key):
            cs, m = key[:n + 1], key[n + 1:]
            return outer({cs[:i]: ONE}, cc.lift(dm.columns[cs[i]]), {cs[i + 1:] + m: ONE})
        return cx.build(f, n, n + 1, f"sigma_{i}")

    def cyc(n):
        def f(key):
            cs, m = key[:n + 1], key[n + 1:]
            out: Tensor = {}
            for k, x in co.rho(M.space.class_of(m)).items():
                m0, b = k[:nm], k[nm]
                tadd(out, outer(leaf(C.action[b].columns[cs[n]]), {cs[:n] + m0: ONE}), x)
            return out
        return cx.build(f, n, n, "tau")

    dims = [cx.space(n).dim for n in range(N + 1)]
    delta = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    sigma = [[degen(n, i) for i in range(n + 1)] for n in range(N)]
    tau = [cyc(n) for n in range(N + 1)]
    return CyclicModule(dims, delta, sigma, tau, name=f"C~_*({C.name or 'C'}, {M.name or 'M'})")


def regular_module_coring(hopf: XHopfRight) -> ModuleCoring:
    """B as a right B-module coring by multiplication."""
    h = hopf.bialgebroid
    return ModuleCoring(hopf, h.coring, h.total.right_regular, name=h.name)


# ---------------------------------------------------------------- phi identification

class XHopfComplex:
    """Spaces B^{(x)_R n} (x)_{R^op} M with the transferred cyclic operators."""

    def __init__(self, hopf: XHopfRight, M: SAYDModule):
        if M.chirality != "LR":
            raise ValueError("needs left-right SAYD coefficients")
        self.hopf, self.M = hopf, M
        self.h = hopf.bialgebroid
        self.nm = len(M.space.leaves)
        self._spaces: dict = {}

    def space(self, n: int) -> Space:
        if n not in self._spaces:
            h = self.h
            R = h.base
            M = self.M
            if n == 0:
                self._spaces[n] = M.space
            else:
                Bn = tensor_power_space(h.dim, n, h._ops("r", "s"), h._ops("r", "t"))
                ra = tuple(_first_leaf(Bn, h.total.rmul(h.t(e(r)))) for r in range(R.dim))
                la = tuple(_comb(M.module.action, h.t(e(r)), M.dim) for r in range(R.dim))
                Rop = R.op()
                self._spaces[n] = BalancedTensor(Bimodule(Bn, right=Rop, right_action=ra),
                                                 Bimodule(M.space, left=Rop, left_action=la), Rop,
                                                 name=f"B^{n}(x)M")
        return self._spaces[n]

    # representative helpers -------------------------------------------------
    def diag(self, bs: tuple, b: Mapping) -> Tensor:
        """(b_1 (x) ... (x) b_k) <| b, diagonal; for k = 0 the unit of R acted on."""
        B = self.h.total
        if not bs:
            return leaf(self.h.eps(B.mul(self.h.s(self.h.base.unit), b)))
        out: Tensor = {}
        for i, x in b.items():
            for ks, y in iterated_delta(self.h, e(i), len(bs)).items():
                tadd(out, outer(*(leaf(B.mul(e(a), e(k))) for a, k in zip(bs, ks))), x * y)
        return out

    def pair(self, head: Tensor, mvec: Mapping, n_dst: int) -> Tensor:
        """Flat tensor of (head (x) m) in degree n_dst; degree 0 folds R into M by t."""
        if n_dst == 0:
            out: Tensor = {}
            M = self.M
            for (r,), x in head.items():
                v = _sum_act(M.module.action, self.h.t(e(r)), mvec)
                tadd(out, M.space.lift(v), x)
            return out
        return outer(head, self.M.space.lift(mvec))


def _first_leaf(space: Space, m: Matrix) -> Matrix:
    from .algebra import leaf_action
    return leaf_action(space, 0, m)


def _keys_split(key: tuple, n: int):
    return key[:n], key[n:]


def phi_identification(hopf: XHopfRight, M: SAYDModule, N: int):
    """The maps phi_n from the regular coring complex to B^{(x)_R n} (x)_{R^op} M.

    Returns ``(phis, phi_invs, transported, displayed)``: phi matrices, their
    displayed inverses, the coring complex conjugated by phi, and the cyclic
    module built directly from the transferred-operator formulas.
    """
    C = regular_module_coring(hopf)
    ccx = _CoringComplex(C, M)
    xc = XHopfComplex(hopf, M)
    h = xc.h
    B = h.total
    M_ = M.module

    phis, invs = [], []
    for n in range(N + 1):
        def f(key, n=n):
            bs, m = key[:n + 1], key[n + 1:]
            mv = M.space.class_of(m)
            out: Tensor = {}
            for (a, b), x in hopf.mp(e(bs[n])).items():
                head = xc.diag(bs[:n], e(a))
                tadd(out, xc.pair(head, M_.action[b].apply(mv), n), x)
            return out
        phis.append(descend(ccx.space(n), xc.space(n), f, f"phi_{n}"))

        def g(key, n=n):
            bs, m = key[:n], key[n:]
            return outer({bs: ONE}, leaf(B.unit), {m: ONE})
        invs.append(descend(xc.space(n), ccx.space(n), g, f"phi_{n}^-1"))

    coring_cx = build_cyclic_module_coring(C, M, N, verify=False)
    conj = lambda A, n_src, n_dst: phis[n_dst] @ A @ invs[n_src]  # noqa: E731
    transported = CyclicModule(
        coring_cx.dims,
        [[conj(A, n, n - 1) for A in coring_cx.delta[n]] for n in range(N + 1)],
        [[conj(A, n, n + 1) for A in coring_cx.sigma[n]] for n in range(N)],
        [conj(coring_cx.tau[n], n, n) for n in range(N + 1)],
        name=f"phi-transport({coring_cx.name})")
    return phis, invs, transported, build_xhopf_cyclic(hopf, M, N, xc)


def build_xhopf_cyclic(hopf: XHopfRight, M: SAYDModule, N: int,
                       xc: XHopfComplex | None = None) -> CyclicModule:
    """Cyclic module on B^{(x)_R n} (x)_{R^op} M from the transferred formulas."""
    xc = xc or XHopfComplex(hopf, M)
    h = xc.h
    B = h.total
    M_ = M.module
    co = M.comodule
    nm = xc.nm

    def build(fn, a, b, name):
        return descend(xc.space(a), xc.space(b), fn, name)

    def mvec_of(key, n):
        return M.space.class_of(key[n:])

    def face(n, i):
        def f(key):
            bs, mv = key[:n], mvec_of(key, n)
            if i < n - 1:
                r = h.eps(e(bs[i]))
                nxt = B.mul(e(bs[i + 1]), h.t(r))
                return xc.pair(outer({bs[:i]: ONE}, leaf(nxt), {bs[i + 2:]: ONE}), mv, n - 1)
            if i == n - 1:
                r = h.eps(e(bs[i]))
                if n == 1:
                    return xc.pair(leaf(r), mv, 0)
                prev = B.mul(e(bs[i - 1]), h.s(r))
                return xc.pair(outer({bs[:i - 1]: ONE}, leaf(prev)), mv, n - 1)
            out: Tensor = {}
            for (a, b), x in hopf.mp(e(bs[n - 1])).items():
                tadd(out, xc.pair(xc.diag(bs[:n - 1], e(a)), M_.action[b].apply(mv), n - 1), x)
            return out
        return build(f, n, n - 1, f"delta_{i}")

    def degen(n, i):
        def f(key):
            bs, mv = key[:n], mvec_of(key, n)
            if i < n:
                return xc.pair(outer({bs[:i]: ONE}, h.delta(e(bs[i])), {bs[i + 1:]: ONE}), mv, n + 1)
            return xc.pair(outer({bs: ONE}, leaf(B.unit)), mv, n + 1)
        return build(f, n, n + 1, f"sigma_{i}")

    def cyc(n):
        def f(key):
            bs, mv = key[:n], mvec_of(key, n)
            if n == 0:
                return M.space.lift(mv)
            out: Tensor = {}
            for k, x in co.rho(mv).items():
                m0, m1 = M.space.class_of(k[:nm]), k[nm]
                for (a, b), y in hopf.mp(e(bs[n - 1])).items():
                    head = xc.diag((m1,) + bs[:n - 1], e(a))
                    tadd(out, xc.pair(head, M_.action[b].apply(m0), n), x * y)
            return out
        return build(f, n, n, "tau")

    dims = [xc.space(n).dim for n in range(N + 1)]
    delta = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    sigma = [[degen(n, i) for i in range(n + 1)] for n in range(N)]
    tau = [cyc(n) for n in range(N + 1)]
    return CyclicModule(dims, delta, sigma, tau, name=f"C_*({hopf.name}, {M.name or 'M'})")

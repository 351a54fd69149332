"""Left and right bialgebroids, the map nu and its inverse, group-likes, characters.

Conventions (all verified numerically by the checks below):

* left bialgebroid K over R: ``r1 . k . r2 = s(r1) t(r2) k``; ``K (x)_R K`` is
  balanced by ``t(r) k (x) k' = k (x) s(r) k'``; the domain of nu,
  ``K (x)_{R^op} K``, by ``k t(r) (x) k' = k (x) t(r) k'``.
* right bialgebroid B over R: ``r . b . r' = b t(r) s(r')``; ``B (x)_R B`` is
  balanced by ``b s(r) (x) b' = b (x) b' t(r)``; the domain of nu by
  ``b t(r) (x) b' = b (x) t(r) b'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import (BalancedTensor, Bimodule, Coring, FDAlgebra, FlatQuotient,
                      NotWellDefined,
                      Plain, Tensor, check_coring, descend, field_algebra, leaf,
                      leaf_action, outer, tadd)
from .linalg import (ONE, ZERO, Matrix, NoSolution, Vec, inverse, scalar, solve,
                     vadd, vscale)
from .report import Report


class NotXHopf(ValueError):
    """nu is not bijective."""

    def __init__(self, msg: str, rank_deficit: int = 0):
        super().__init__(msg)
        self.rank_deficit = rank_deficit


class TranslationViolation(ValueError):
    """A translation-map identity failed for data that passed the axioms."""

    def __init__(self, report: Report):
        super().__init__(f"translation identities failed: {report.failed()}")
        self.report = report


class Unsupported(ValueError):
    pass


def _vec_of(alg_dim: int, v) -> Vec:
    return dict(v) if isinstance(v, Mapping) else {i: scalar(x) for i, x in enumerate(v) if x}


def _columns(m: Matrix) -> list:
    return list(m.columns)


class _Bialgebroid:
    """Shared plumbing: source/target as matrices, comultiplication into ``kk``."""

    total: FDAlgebra
    base: FDAlgebra
    source: Matrix
    target: Matrix
    comult: Matrix
    counit: Matrix

    def s(self, r: Mapping) -> Vec:
        return self.source.apply(r)

    def t(self, r: Mapping) -> Vec:
        return self.target.apply(r)

    def eps(self, k: Mapping) -> Vec:
        return self.counit.apply(k)

    def mul(self, *ks: Mapping) -> Vec:
        return self.total.prod(*ks)

    def delta(self, k: Mapping) -> Tensor:
        """Flat representative of the comultiplication of k."""
        return self.kk.lift(self.comult.apply(k))

    @property
    def dim(self) -> int:
        return self.total.dim

    def _ops(self, side: str, which: str) -> tuple:
        """Per-base-element multiplication matrices, e.g. ('l', 's') = left mult by s(r)."""
        K = self.total
        img = self.source if which == "s" else self.target
        f = K.lmul if side == "l" else K.rmul
        return tuple(f(img.columns[r]) for r in range(self.base.dim))

    def _comult_matrix(self, comult) -> Matrix:
        if isinstance(comult, Matrix):
            return comult
        kk = self.kk
        return Matrix(kk.dim, self.total.dim,
                      tuple(kk.reduce(comult(i)) for i in range(self.total.dim)))


# ---------------------------------------------------------------- left

class LeftBialgebroid(_Bialgebroid):
    def __init__(self, total: FDAlgebra, base: FDAlgebra, source: Matrix, target: Matrix,
                 comult, counit: Matrix, name: str = ""):
        self.total, self.base = total, base
        self.source, self.target, self.counit = source, target, counit
        self.name = name or total.name
        self.comult = self._comult_matrix(comult)

    @cached_property
    def bimodule(self) -> Bimodule:
        return Bimodule(Plain(self.dim), self.base, self._ops("l", "s"),
                        self.base, self._ops("l", "t"), self.name)

    @cached_property
    def kk(self) -> BalancedTensor:
        K = Plain(self.dim)
        return BalancedTensor(Bimodule(K, right=self.base, right_action=self._ops("l", "t")),
                              Bimodule(K, left=self.base, left_action=self._ops("l", "s")),
                              self.base, name="K(x)_R K")

    @cached_property
    def kk_op(self) -> BalancedTensor:
        K = Plain(self.dim)
        Rop = self.base.op()
        return BalancedTensor(Bimodule(K, right=Rop, right_action=self._ops("r", "t")),
                              Bimodule(K, left=Rop, left_action=self._ops("l", "t")),
                              Rop, name="K(x)_Rop K")

    @cached_property
    def coring(self) -> Coring:
        return Coring(self.bimodule, self.base, self.comult, self.counit, self.name)

    def __repr__(self) -> str:
        return f"LeftBialgebroid({self.name}, dim {self.dim} over {self.base.dim})"


def _algebra_map_checks(rep: Report, bg: _Bialgebroid, target_anti: bool) -> None:
    K, R = bg.total, bg.base

    def hom(img: Matrix, anti: bool):
        def f():
            if img.apply(R.unit) != K.unit:
                return ("unit",)
            for i, j in itertools.product(range(R.dim), repeat=2):
                lhs = img.apply(R.table[i][j])
                a, b = img.columns[i], img.columns[j]
                rhs = K.mul(b, a) if anti else K.mul(a, b)
                if lhs != rhs:
                    return (i, j)
            return None
        return f
    rep.run("source algebra map", hom(bg.source, False))
    rep.run("target anti-algebra map", hom(bg.target, target_anti))

    def commute():
        for i, j in itertools.product(range(R.dim), repeat=2):
            a, b = bg.source.columns[i], bg.target.columns[j]
            if K.mul(a, b) != K.mul(b, a):
                return (i, j)
        return None
    rep.run("ranges commute", commute)


def check_left_bialgebroid(lb: LeftBialgebroid) -> Report:
    """Axioms i-iii, the coring axioms and the derived identities a-e."""
    rep = Report(lb.name)
    K, R = lb.total, lb.base
    n, nr = K.dim, R.dim
    _algebra_map_checks(rep, lb, True)
    if not rep.ok:
        return rep
    rep.extend(check_coring(lb.coring), "coring: ")
    kk = lb.kk
    e = lambda i: {i: ONE}
    s, t, eps, mul = lb.s, lb.t, lb.eps, lb.mul
    sb = [lb.source.columns[r] for r in range(nr)]
    tb = [lb.target.columns[r] for r in range(nr)]

    def on_pairs(d: Tensor, f: Callable[[int, int], Tensor]) -> Tensor:
        out: Tensor = {}
        for (a, b), x in d.items():
            tadd(out, f(a, b), x)
        return out

    def ax1():
        for k, r in itertools.product(range(n), range(nr)):
            d = lb.delta(e(k))
            lhs = on_pairs(d, lambda a, b: outer(leaf(mul(e(a), tb[r])), {(b,): ONE}))
            rhs = on_pairs(d, lambda a, b: outer({(a,): ONE}, leaf(mul(e(b), sb[r]))))
            if kk.reduce(lhs) != kk.reduce(rhs):
                return (k, r)
        return None
    rep.run("axiom i", ax1)

    def ax2():
        if lb.comult.apply(K.unit) != kk.reduce(outer(leaf(K.unit), leaf(K.unit))):
            return ("unit",)
        for i, j in itertools.product(range(n), repeat=2):
            lhs = lb.comult.apply(K.table[i][j])
            di, dj = lb.delta(e(i)), lb.delta(e(j))
            acc: Tensor = {}
            for (a, b), x in di.items():
                for (c, d), y in dj.items():
                    tadd(acc, outer(leaf(mul(e(a), e(c))), leaf(mul(e(b), e(d)))), x * y)
            if kk.reduce(acc) != lhs:
                return (i, j)
        return None
    rep.run("axiom ii", ax2)

    def ax3():
        if eps(K.unit) != R.unit:
            return ("unit",)
        for i, j in itertools.product(range(n), repeat=2):
            if eps(K.table[i][j]) != eps(mul(e(i), s(eps(e(j))))):
                return (i, j)
        return None
    rep.run("axiom iii", ax3)
    if not rep.ok:
        return rep

    def da():
        for r in range(nr):
            if eps(sb[r]) != e(r) or eps(tb[r]) != e(r):
                return (r,)
        return None
    rep.run("identity a", da)

    def db():
        for k in range(n):
            d = lb.delta(e(k))
            x1: Vec = {}
            x2: Vec = {}
            for (a, b), c in d.items():
                vadd(x1, mul(s(eps(e(a))), e(b)), c)
                vadd(x2, mul(t(eps(e(b))), e(a)), c)
            if x1 != e(k) or x2 != e(k):
                return (k,)
        return None
    rep.run("identity b", db)

    def dc():
        for i, j in itertools.product(range(n), repeat=2):
            if eps(K.table[i][j]) != eps(mul(e(i), t(eps(e(j))))):
                return (i, j)
        return None
    rep.run("identity c", dc)

    def dd():
        for r in range(nr):
            if lb.comult.apply(sb[r]) != kk.reduce(outer(leaf(sb[r]), leaf(K.unit))):
                return ("s", r)
            if lb.comult.apply(tb[r]) != kk.reduce(outer(leaf(K.unit), leaf(tb[r]))):
                return ("t", r)
        return None
    rep.run("identity d", dd)

    def de():
        for r1, r2, r3, r4 in itertools.product(range(nr), repeat=4):
            for k in range(n):
                lhs = lb.comult.apply(mul(sb[r1], tb[r2], e(k), sb[r3], tb[r4]))
                rhs = on_pairs(lb.delta(e(k)), lambda a, b: outer(
                    leaf(mul(sb[r1], e(a), sb[r3])), leaf(mul(tb[r2], e(b), tb[r4]))))
                if kk.reduce(rhs) != lhs:
                    return (r1, r2, r3, r4, k)
        return None
    rep.run("identity e", de)
    return rep


@dataclass(eq=False)
class XHopfLeft:
    """A left bialgebroid with bijective nu and the translation map k -> k- (x) k+."""

    bialgebroid: LeftBialgebroid
    nu: Matrix
    nu_inv: Matrix
    minus_plus: Matrix

    @property
    def name(self) -> str:
        return self.bialgebroid.name

    @property
    def total(self) -> FDAlgebra:
        return self.bialgebroid.total

    @property
    def base(self) -> FDAlgebra:
        return self.bialgebroid.base

    def mp(self, k: Mapping) -> Tensor:
        """Flat representative of k- (x)_{R^op} k+."""
        return self.bialgebroid.kk_op.lift(self.minus_plus.apply(k))

    @cached_property
    def kk_kop(self) -> FlatQuotient:
        """(K (x)_R K) (x)_{R^op} K."""
        lb = self.bialgebroid
        n = lb.dim
        return FlatQuotient((n, n, n), [(0, lb._ops("l", "t"), 1, lb._ops("l", "s")),
                                        (1, lb._ops("r", "t"), 2, lb._ops("l", "t"))])

    @cached_property
    def kop_k(self) -> FlatQuotient:
        """(K (x)_{R^op} K) (x)_R K."""
        lb = self.bialgebroid
        n = lb.dim
        return FlatQuotient((n, n, n), [(0, lb._ops("r", "t"), 1, lb._ops("l", "t")),
                                        (1, lb._ops("l", "t"), 2, lb._ops("l", "s"))])


def _build_nu_left(lb: LeftBialgebroid) -> Matrix:
    mul = lb.mul

    def f(key):
        a, b = key
        out: Tensor = {}
        for (c, d), x in lb.delta({a: ONE}).items():
            tadd(out, outer({(c,): ONE}, leaf(mul({d: ONE}, {b: ONE}))), x)
        return out
    return descend(lb.kk_op, lb.kk, f, "nu")


def _invert(nu: Matrix, what: str) -> Matrix:
    if nu.rows != nu.cols:
        raise NotXHopf(f"{what}: nu is {nu.rows}x{nu.cols}, not square",
                       abs(nu.rows - nu.cols))
    try:
        return inverse(nu)
    except NoSolution:
        from .linalg import rank
        raise NotXHopf(f"{what}: nu is singular", nu.rows - rank(nu)) from None


def compute_nu_inverse(lb: LeftBialgebroid, verify: bool = True) -> XHopfLeft:
    nu = _build_nu_left(lb)
    nu_inv = _invert(nu, lb.name)
    kk = lb.kk
    mp_cols = tuple(nu_inv.apply(kk.reduce(outer(leaf({k: ONE}), leaf(lb.total.unit))))
                    for k in range(lb.dim))
    x = XHopfLeft(lb, nu, nu_inv, Matrix(lb.kk_op.dim, lb.dim, mp_cols))
    if verify:
        rep = check_translation_left(x)
        if not rep.ok:
            raise TranslationViolation(rep)
    return x


def check_translation_left(x: XHopfLeft) -> Report:
    """The nine identities of the left translation map, plus right K-linearity of nu."""
    lb = x.bialgebroid
    rep = Report(f"{lb.name} translation")
    K, R = lb.total, lb.base
    n = K.dim
    e = lambda i: {i: ONE}
    mul, s, t, eps = lb.mul, lb.s, lb.t, lb.eps
    kk, kko = lb.kk, lb.kk_op
    one = K.unit

    def both_inverse():
        if not (x.nu @ x.nu_inv).is_identity():
            return ("nu nu_inv",)
        if not (x.nu_inv @ x.nu).is_identity():
            return ("nu_inv nu",)
        return None
    rep.run("nu bijective", both_inverse)

    def linear():
        # right K-linearity: nu(x k) = nu(x) k, k acting on the last factor
        for k in range(n):
            A = leaf_action(kko, 1, K.rmul(e(k)))
            B = leaf_action(kk, 1, K.rmul(e(k)))
            if x.nu @ A != B @ x.nu:
                return (k,)
        return None
    rep.run("nu right K-linear", linear)

    def sum_pairs(d: Tensor, f) -> Tensor:
        out: Tensor = {}
        for (a, b), c in d.items():
            tadd(out, f(a, b), c)
        return out

    def i1():
        for k in range(n):
            v = sum_pairs(x.mp(e(k)), lambda a, b: sum_pairs(
                lb.delta(e(a)), lambda c, d: outer({(c,): ONE}, leaf(mul(e(d), e(b))))))
            if kk.reduce(v) != kk.reduce(outer({(k,): ONE}, leaf(one))):
                return (k,)
        return None
    rep.run("lem i", i1)

    def i2():
        for k in range(n):
            v = sum_pairs(lb.delta(e(k)), lambda a, b: sum_pairs(
                x.mp(e(a)), lambda c, d: outer({(c,): ONE}, leaf(mul(e(d), e(b))))))
            if kko.reduce(v) != kko.reduce(outer({(k,): ONE}, leaf(one))):
                return (k,)
        return None
    rep.run("lem ii", i2)

    def i3():
        for i, j in itertools.product(range(n), repeat=2):
            lhs = x.minus_plus.apply(K.table[i][j])
            acc: Tensor = {}
            for (a, b), u in x.mp(e(i)).items():
                for (c, d), w in x.mp(e(j)).items():
                    tadd(acc, outer(leaf(mul(e(a), e(c))), leaf(mul(e(d), e(b)))), u * w)
            if kko.reduce(acc) != lhs:
                return (i, j)
        return None
    rep.run("lem iii", i3)

    rep.record("lem iv", None if x.minus_plus.apply(one) == kko.reduce(outer(leaf(one), leaf(one)))
               else ("unit",))

    V = x.kk_kop

    def i5():
        for k in range(n):
            lhs = sum_pairs(x.mp(e(k)), lambda a, b: outer(lb.delta(e(a)), {(b,): ONE}))
            rhs = sum_pairs(lb.delta(e(k)), lambda a, b: outer({(a,): ONE}, x.mp(e(b))))
            if V.reduce(lhs) != V.reduce(rhs):
                return (k,)
        return None
    rep.run("lem v", i5)

    W = x.kop_k

    def i6():
        for k in range(n):
            mpk = x.mp(e(k))
            lhs = sum_pairs(mpk, lambda a, b: outer({(a,): ONE}, lb.delta(e(b))))
            rhs = sum_pairs(mpk, lambda a, b: sum_pairs(
                x.mp(e(a)), lambda c, d: {(c, b, d): ONE}))
            if W.reduce(lhs) != W.reduce(rhs):
                return (k,)
        return None
    rep.run("lem vi", i6)

    def i7():
        for k in range(n):
            v: Vec = {}
            for (a, b), c in x.mp(e(k)).items():
                vadd(v, mul(e(a), t(eps(e(b)))), c)
            if v != e(k):
                return (k,)
        return None
    rep.run("lem vii", i7)

    def i8():
        for k in range(n):
            v: Vec = {}
            for (a, b), c in x.mp(e(k)).items():
                vadd(v, mul(e(a), e(b)), c)
            if v != s(eps(e(k))):
                return (k,)
        return None
    rep.run("lem viii", i8)

    def i9():
        for k, r in itertools.product(range(n), range(R.dim)):
            tr = lb.target.columns[r]
            mpk = x.mp(e(k))
            lhs = sum_pairs(mpk, lambda a, b: outer({(a,): ONE}, leaf(mul(e(b), tr))))
            rhs = sum_pairs(mpk, lambda a, b: outer(leaf(mul(tr, e(a))), {(b,): ONE}))
            if kko.reduce(lhs) != kko.reduce(rhs):
                return (k, r)
        return None
    rep.run("lem ix", i9)
    return rep


# ---------------------------------------------------------------- right

class RightBialgebroid(_Bialgebroid):
    def __init__(self, total: FDAlgebra, base: FDAlgebra, source: Matrix, target: Matrix,
                 comult, counit: Matrix, name: str = ""):
        self.total, self.base = total, base
        self.source, self.target, self.counit = source, target, counit
        self.name = name or total.name
        self.comult = self._comult_matrix(comult)

    @cached_property
    def bimodule(self) -> Bimodule:
        return Bimodule(Plain(self.dim), self.base, self._ops("r", "t"),
                        self.base, self._ops("r", "s"), self.name)

    @cached_property
    def kk(self) -> BalancedTensor:
        B = Plain(self.dim)
        return BalancedTensor(Bimodule(B, right=self.base, right_action=self._ops("r", "s")),
                              Bimodule(B, left=self.base, left_action=self._ops("r", "t")),
                              self.base, name="B(x)_R B")

    @cached_property
    def kk_op(self) -> BalancedTensor:
        B = Plain(self.dim)
        Rop = self.base.op()
        return BalancedTensor(Bimodule(B, right=Rop, right_action=self._ops("r", "t")),
                              Bimodule(B, left=Rop, left_action=self._ops("l", "t")),
                              Rop, name="B(x)_Rop B")

    @cached_property
    def coring(self) -> Coring:
        return Coring(self.bimodule, self.base, self.comult, self.counit, self.name)

    def __repr__(self) -> str:
        return f"RightBialgebroid({self.name}, dim {self.dim} over {self.base.dim})"


def check_right_bialgebroid(rb: RightBialgebroid) -> Report:
    rep = Report(rb.name)
    B, R = rb.total, rb.base
    n, nr = B.dim, R.dim
    _algebra_map_checks(rep, rb, True)
    if not rep.ok:
        return rep
    rep.extend(check_coring(rb.coring), "coring: ")
    kk = rb.kk
    e = lambda i: {i: ONE}
    s, t, eps, mul = rb.s, rb.t, rb.eps, rb.mul
    sb = [rb.source.columns[r] for r in range(nr)]
    tb = [rb.target.columns[r] for r in range(nr)]

    def on_pairs(d: Tensor, f) -> Tensor:
        out: Tensor = {}
        for (a, b), x in d.items():
            tadd(out, f(a, b), x)
        return out

    def ax1():
        for b, r in itertools.product(range(n), range(nr)):
            d = rb.delta(e(b))
            lhs = on_pairs(d, lambda p, q: outer({(p,): ONE}, leaf(mul(tb[r], e(q)))))
            rhs = on_pairs(d, lambda p, q: outer(leaf(mul(sb[r], e(p))), {(q,): ONE}))
            if kk.reduce(lhs) != kk.reduce(rhs):
                return (b, r)
        return None
    rep.run("axiom i", ax1)

    def ax2():
        if rb.comult.apply(B.unit) != kk.reduce(outer(leaf(B.unit), leaf(B.unit))):
            return ("unit",)
        for i, j in itertools.product(range(n), repeat=2):
            lhs = rb.comult.apply(B.table[i][j])
            acc: Tensor = {}
            for (a, b), x in rb.delta(e(i)).items():
                for (c, d), y in rb.delta(e(j)).items():
                    tadd(acc, outer(leaf(mul(e(a), e(c))), leaf(mul(e(b), e(d)))), x * y)
            if kk.reduce(acc) != lhs:
                return (i, j)
        return None
    rep.run("axiom ii", ax2)

    def ax3():
        if eps(B.unit) != R.unit:
            return ("unit",)
        for i, j in itertools.product(range(n), repeat=2):
            if eps(B.table[i][j]) != eps(mul(s(eps(e(i))), e(j))):
                return (i, j)
        return None
    rep.run("axiom iii", ax3)
    if not rep.ok:
        return rep

    def da():
        for r in range(nr):
            if eps(sb[r]) != e(r) or eps(tb[r]) != e(r):
                return (r,)
        return None
    rep.run("identity a", da)

    def db():
        for b in range(n):
            x1: Vec = {}
            x2: Vec = {}
            for (p, q), c in rb.delta(e(b)).items():
                vadd(x1, mul(e(p), s(eps(e(q)))), c)
                vadd(x2, mul(e(q), t(eps(e(p)))), c)
            if x1 != e(b) or x2 != e(b):
                return (b,)
        return None
    rep.run("identity b", db)

    def dc():
        for i, j in itertools.product(range(n), repeat=2):
            if eps(B.table[i][j]) != eps(mul(t(eps(e(i))), e(j))):
                return (i, j)
        return None
    rep.run("identity c", dc)

    def dd():
        for r in range(nr):
            if rb.comult.apply(sb[r]) != kk.reduce(outer(leaf(B.unit), leaf(sb[r]))):
                return ("s", r)
            if rb.comult.apply(tb[r]) != kk.reduce(outer(leaf(tb[r]), leaf(B.unit))):
                return ("t", r)
        return None
    rep.run("identity d", dd)

    def de():
        for r1, r2, r3, r4 in itertools.product(range(nr), repeat=4):
            for b in range(n):
                lhs = rb.comult.apply(mul(sb[r1], tb[r2], e(b), sb[r3], tb[r4]))
                rhs = on_pairs(rb.delta(e(b)), lambda p, q: outer(
                    leaf(mul(tb[r2], e(p), tb[r4])), leaf(mul(sb[r1], e(q), sb[r3]))))
                if kk.reduce(rhs) != lhs:
                    return (r1, r2, r3, r4, b)
        return None
    rep.run("identity e", de)
    return rep


@dataclass(eq=False)
class XHopfRight:
    """A right bialgebroid with bijective nu; ``minus_plus(b) = nu^-1(1 (x) b)``."""

    bialgebroid: RightBialgebroid
    nu: Matrix
    nu_inv: Matrix
    minus_plus: Matrix

    @property
    def name(self) -> str:
        return self.bialgebroid.name

    @property
    def total(self) -> FDAlgebra:
        return self.bialgebroid.total

    @property
    def base(self) -> FDAlgebra:
        return self.bialgebroid.base

    def mp(self, b: Mapping) -> Tensor:
        return self.bialgebroid.kk_op.lift(self.minus_plus.apply(b))

    @cached_property
    def kop_k(self) -> FlatQuotient:
        """(B (x)_{R^op} B) (x)_R B."""
        rb = self.bialgebroid
        n = rb.dim
        return FlatQuotient((n, n, n), [(0, rb._ops("r", "t"), 1, rb._ops("l", "t")),
                                        (1, rb._ops("r", "s"), 2, rb._ops("r", "t"))])

    @cached_property
    def kk_kop(self) -> FlatQuotient:
        """(B (x)_R B) (x)_{R^op} B."""
        rb = self.bialgebroid
        n = rb.dim
        return FlatQuotient((n, n, n), [(0, rb._ops("r", "s"), 1, rb._ops("r", "t")),
                                        (1, rb._ops("r", "t"), 2, rb._ops("l", "t"))])


def _build_nu_right(rb: RightBialgebroid) -> Matrix:
    mul = rb.mul

    def f(key):
        a, b = key
        out: Tensor = {}
        for (c, d), x in rb.delta({b: ONE}).items():
            tadd(out, outer(leaf(mul({a: ONE}, {c: ONE})), {(d,): ONE}), x)
        return out
    return descend(rb.kk_op, rb.kk, f, "nu")


def compute_nu_inverse_right(rb: RightBialgebroid, verify: bool = True) -> XHopfRight:
    nu = _build_nu_right(rb)
    nu_inv = _invert(nu, rb.name)
    kk = rb.kk
    cols = tuple(nu_inv.apply(kk.reduce(outer(leaf(rb.total.unit), leaf({b: ONE}))))
                 for b in range(rb.dim))
    x = XHopfRight(rb, nu, nu_inv, Matrix(rb.kk_op.dim, rb.dim, cols))
    if verify:
        rep = check_translation_right(x)
        if not rep.ok:
            raise TranslationViolation(rep)
    return x


def check_translation_right(x: XHopfRight) -> Report:
    """Right-handed translation identities (numbered like the left ones)."""
    rb = x.bialgebroid
    rep = Report(f"{rb.name} translation")
    B, R = rb.total, rb.base
    n = B.dim
    e = lambda i: {i: ONE}
    mul, s, t, eps = rb.mul, rb.s, rb.t, rb.eps
    kk, kko = rb.kk, rb.kk_op
    one = B.unit

    def both_inverse():
        if not (x.nu @ x.nu_inv).is_identity():
            return ("nu nu_inv",)
        if not (x.nu_inv @ x.nu).is_identity():
            return ("nu_inv nu",)
        return None
    rep.run("nu bijective", both_inverse)

    def linear():
        for b in range(n):
            A = leaf_action(kko, 0, B.lmul(e(b)))
            C = leaf_action(kk, 0, B.lmul(e(b)))
            if x.nu @ A != C @ x.nu:
                return (b,)
        return None
    rep.run("nu left B-linear", linear)

    def sum_pairs(d: Tensor, f) -> Tensor:
        out: Tensor = {}
        for (a, b), c in d.items():
            tadd(out, f(a, b), c)
        return out

    def i1():
        for b in range(n):
            v = sum_pairs(x.mp(e(b)), lambda p, q: sum_pairs(
                rb.delta(e(q)), lambda c, d: outer(leaf(mul(e(p), e(c))), {(d,): ONE})))
            if kk.reduce(v) != kk.reduce(outer(leaf(one), {(b,): ONE})):
                return (b,)
        return None
    rep.run("right i", i1)

    def i2():
        for b in range(n):
            v = sum_pairs(rb.delta(e(b)), lambda p, q: sum_pairs(
                x.mp(e(q)), lambda c, d: outer(leaf(mul(e(p), e(c))), {(d,): ONE})))
            if kko.reduce(v) != kko.reduce(outer(leaf(one), {(b,): ONE})):
                return (b,)
        return None
    rep.run("right ii", i2)

    def i3():
        for i, j in itertools.product(range(n), repeat=2):
            lhs = x.minus_plus.apply(B.table[i][j])
            acc: Tensor = {}
            for (a, b), u in x.mp(e(i)).items():
                for (c, d), w in x.mp(e(j)).items():
                    tadd(acc, outer(leaf(mul(e(c), e(a))), leaf(mul(e(b), e(d)))), u * w)
            if kko.reduce(acc) != lhs:
                return (i, j)
        return None
    rep.run("right iii", i3)

    rep.record("right iv", None if x.minus_plus.apply(one) == kko.reduce(outer(leaf(one), leaf(one)))
               else ("unit",))

    W = x.kop_k

    def i5():
        for b in range(n):
            lhs = sum_pairs(x.mp(e(b)), lambda p, q: outer({(p,): ONE}, rb.delta(e(q))))
            rhs = sum_pairs(rb.delta(e(b)), lambda p, q: outer(x.mp(e(p)), {(q,): ONE}))
            if W.reduce(lhs) != W.reduce(rhs):
                return (b,)
        return None
    rep.run("right v", i5)

    V = x.kk_kop

    def i6():
        for b in range(n):
            mpb = x.mp(e(b))
            lhs = sum_pairs(mpb, lambda p, q: outer(rb.delta(e(p)), {(q,): ONE}))
            rhs = sum_pairs(mpb, lambda p, q: sum_pairs(
                x.mp(e(q)), lambda c, d: {(c, p, d): ONE}))
            if V.reduce(lhs) != V.reduce(rhs):
                return (b,)
        return None
    rep.run("right vi", i6)

    def i7():
        for b in range(n):
            v: Vec = {}
            for (p, q), c in x.mp(e(b)).items():
                vadd(v, mul(t(eps(e(p))), e(q)), c)
            if v != e(b):
                return (b,)
        return None
    rep.run("right vii", i7)

    def i8():
        for b in range(n):
            v: Vec = {}
            for (p, q), c in x.mp(e(b)).items():
                vadd(v, mul(e(p), e(q)), c)
            if v != s(eps(e(b))):
                return (b,)
        return None
    rep.run("right viii", i8)

    def i9():
        for b, r in itertools.product(range(n), range(R.dim)):
            tr = rb.target.columns[r]
            mpb = x.mp(e(b))
            lhs = sum_pairs(mpb, lambda p, q: outer({(p,): ONE}, leaf(mul(e(q), tr))))
            rhs = sum_pairs(mpb, lambda p, q: outer(leaf(mul(tr, e(p))), {(q,): ONE}))
            if kko.reduce(lhs) != kko.reduce(rhs):
                return (b, r)
        return None
    rep.run("right ix", i9)
    return rep


# ---------------------------------------------------------------- Hopf algebras

@dataclass(eq=False)
class HopfAlgebra:
    """Ordinary Hopf algebra over the ground field.

    ``comult[i]`` is a flat tensor ``{(a, b): c}``; ``antipode`` a matrix.
    """

    algebra: FDAlgebra
    comult: tuple
    counit: tuple  # scalar per basis element
    antipode: Matrix
    name: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def delta(self, h: Mapping) -> Tensor:
        out: Tensor = {}
        for i, x in h.items():
            tadd(out, self.comult[i], x)
        return out

    def eps(self, h: Mapping):
        return sum((self.counit[i] * x for i, x in h.items()), ZERO)

    def S(self, h: Mapping) -> Vec:
        return self.antipode.apply(h)

    def delta2(self, h: Mapping) -> Tensor:
        """(Delta (x) id) Delta."""
        out: Tensor = {}
        for (a, b), x in self.delta(h).items():
            tadd(out, outer(self.comult[a], {(b,): ONE}), x)
        return out

    def check(self) -> Report:
        rep = Report(self.name or "hopf")
        H = self.algebra
        n = H.dim
        e = lambda i: {i: ONE}
        def coassoc():
            for h in range(n):
                rhs: Tensor = {}
                for (a, b), x in self.comult[h].items():
                    tadd(rhs, outer({(a,): ONE}, self.comult[b]), x)
                if self.delta2(e(h)) != rhs:
                    return (h,)
            return None
        rep.run("coassociativity", coassoc)
        def counit():
            for h in range(n):
                l: Vec = {}
                r: Vec = {}
                for (a, b), x in self.comult[h].items():
                    vadd(l, e(b), x * self.counit[a])
                    vadd(r, e(a), x * self.counit[b])
                if l != e(h) or r != e(h):
                    return (h,)
            return None
        rep.run("counitality", counit)
        def mult():
            if self.delta(H.unit) != outer(leaf(H.unit), leaf(H.unit)):
                return ("unit",)
            for i, j in itertools.product(range(n), repeat=2):
                acc: Tensor = {}
                for (a, b), x in self.comult[i].items():
                    for (c, d), y in self.comult[j].items():
                        tadd(acc, outer(leaf(H.mul(e(a), e(c))), leaf(H.mul(e(b), e(d)))), x * y)
                if self.delta(H.table[i][j]) != acc:
                    return (i, j)
                if self.eps(H.table[i][j]) != self.counit[i] * self.counit[j]:
                    return ("eps", i, j)
            return None
        rep.run("multiplicative", mult)
        def antipode():
            for h in range(n):
                l: Vec = {}
                r: Vec = {}
                for (a, b), x in self.comult[h].items():
                    vadd(l, H.mul(self.S(e(a)), e(b)), x)
                    vadd(r, H.mul(e(a), self.S(e(b))), x)
                want = vscale(H.unit, self.counit[h])
                if l != want or r != want:
                    return (h,)
            return None
        rep.run("antipode", antipode)
        return rep

    def _over_field(self, cls):
        C = field_algebra()
        unit = Matrix(self.dim, 1, (dict(self.algebra.unit),))
        return cls(self.algebra, C, unit, unit, lambda i: dict(self.comult[i]),
                   Matrix(1, self.dim, tuple({0: c} if c else {} for c in self.counit)),
                   self.name)

    @cached_property
    def left_bialgebroid(self) -> LeftBialgebroid:
        return self._over_field(LeftBialgebroid)

    @cached_property
    def right_bialgebroid(self) -> RightBialgebroid:
        return self._over_field(RightBialgebroid)

    @cached_property
    def as_left(self) -> XHopfLeft:
        return compute_nu_inverse(self.left_bialgebroid)

    @cached_property
    def as_right(self) -> XHopfRight:
        return compute_nu_inverse_right(self.right_bialgebroid)


# ---------------------------------------------------------------- enveloping

def enveloping_left(R: FDAlgebra, verify: bool = True) -> XHopfLeft:
    """R (x) R^op with s(r) = r(x)1, t(r) = 1(x)r, Delta(r1(x)r2) = (r1(x)1)(x)_R(1(x)r2)."""
    n = R.dim
    K = R.tensor(R.op(), name=f"{R.name}(x){R.name}^op")
    src = Matrix(K.dim, n, tuple({i * n + j: x for j, x in R.unit.items()} for i in range(n)))
    tgt = Matrix(K.dim, n, tuple({i * n + j: x for i, x in R.unit.items()} for j in range(n)))
    eps = Matrix(n, K.dim, tuple(R.mul({i: ONE}, {j: ONE}) for i in range(n) for j in range(n)))

    def comult(k):
        i, j = divmod(k, n)
        return outer(leaf(src.columns[i]), leaf(tgt.columns[j]))
    lb = LeftBialgebroid(K, R, src, tgt, comult, eps, name=f"env({R.name})")
    lb.envelope_of = R
    if verify:
        rep = check_left_bialgebroid(lb)
        if not rep.ok:
            raise ValueError(f"enveloping bialgebroid failed checks: {rep.failed()}")
    return compute_nu_inverse(lb, verify=verify)


def enveloping_right(R: FDAlgebra, verify: bool = True) -> XHopfRight:
    """Right version: Delta(r1(x)r2) = (1(x)r2)(x)_R(r1(x)1), eps(r1(x)r2) = r2 r1."""
    n = R.dim
    B = R.tensor(R.op(), name=f"{R.name}(x){R.name}^op")
    src = Matrix(B.dim, n, tuple({i * n + j: x for j, x in R.unit.items()} for i in range(n)))
    tgt = Matrix(B.dim, n, tuple({i * n + j: x for i, x in R.unit.items()} for j in range(n)))
    eps = Matrix(n, B.dim, tuple(R.mul({j: ONE}, {i: ONE}) for i in range(n) for j in range(n)))

    def comult(k):
        i, j = divmod(k, n)
        return outer(leaf(tgt.columns[j]), leaf(src.columns[i]))
    rb = RightBialgebroid(B, R, src, tgt, comult, eps, name=f"env_r({R.name})")
    rb.envelope_of = R
    if verify:
        rep = check_right_bialgebroid(rb)
        if not rep.ok:
            raise ValueError(f"right enveloping bialgebroid failed checks: {rep.failed()}")
    return compute_nu_inverse_right(rb, verify=verify)


def envelope_nu_inverse_display(x: XHopfLeft) -> Matrix:
    """nu^-1((r1(x)r2)(x)(r3(x)r4)) = (r1(x)1)(x)(r2 r3(x)r4), evaluated on representatives."""
    lb = x.bialgebroid
    R = lb.envelope_of
    n = R.dim

    def f(key):
        a, b = key
        r1, r2 = divmod(a, n)
        r3, r4 = divmod(b, n)
        left = {r1 * n + j: c for j, c in R.unit.items()}
        right = {i * n + r4: c for i, c in R.mul({r2: ONE}, {r3: ONE}).items()}
        return outer(leaf(left), leaf(right))
    return descend(lb.kk, lb.kk_op, f, "nu^-1 display")


def envelope_nu_inverse_display_right(x: XHopfRight) -> Matrix:
    """nu^-1((r1(x)r2)(x)(r3(x)r4)) = (r1 r4 (x) r2)(x)(r3 (x) 1)."""
    rb = x.bialgebroid
    R = rb.envelope_of
    n = R.dim

    def f(key):
        a, b = key
        r1, r2 = divmod(a, n)
        r3, r4 = divmod(b, n)
        left = {i * n + r2: c for i, c in R.mul({r1: ONE}, {r4: ONE}).items()}
        right = {r3 * n + j: c for j, c in R.unit.items()}
        return outer(leaf(left), leaf(right))
    return descend(rb.kk, rb.kk_op, f, "nu^-1 display")


# ---------------------------------------------------------------- group-likes

@dataclass(frozen=True)
class GroupLike:
    element: tuple  # sorted (index, value) pairs

    @staticmethod
    def of(v: Mapping) -> "GroupLike":
        return GroupLike(tuple(sorted((i, scalar(x)) for i, x in v.items() if x)))

    @property
    def vector(self) -> Vec:
        return dict(self.element)


def is_group_like(lb: LeftBialgebroid | RightBialgebroid, v: Mapping) -> bool:
    kk = lb.kk
    return (lb.comult.apply(v) == kk.reduce(outer(leaf(v), leaf(v)))
            and lb.eps(v) == lb.base.unit)


def unit_inverse(R: FDAlgebra, x: Mapping) -> Vec | None:
    """Two-sided inverse of x in R, or None."""
    try:
        y = solve(R.lmul(x), Matrix(R.dim, 1, (dict(R.unit),))).columns[0]
    except NoSolution:
        return None
    return y if R.mul(y, x) == R.unit else None


def find_group_likes(x: XHopfLeft, units: Iterable[Sequence] | None = None) -> set:
    """Group-like elements.

    For an enveloping algebra R(x)R^op: x(x)x^-1 for each supplied unit x
    (default: the unit of R).  Otherwise: rational points on affine lines
    through pairs of basis vectors.
    """
    lb = x.bialgebroid
    R = getattr(lb, "envelope_of", None)
    out = set()
    if R is not None:
        n = R.dim
        for u in (units if units is not None else [R.unit]):
            u = u if isinstance(u, Mapping) else {i: scalar(c) for i, c in enumerate(u) if c}
            inv = unit_inverse(R, u)
            if inv is None:
                raise ValueError(f"{u} is not a unit")
            sigma = {i * n + j: a * b for i, a in u.items() for j, b in inv.items()}
            if is_group_like(lb, sigma):
                out.add(GroupLike.of(sigma))
        return out
    n = lb.dim
    basis = [{i: ONE} for i in range(n)]
    lines = [(b, {}) for b in basis]
    lines += [(basis[i], {i: -ONE, j: ONE}) for i in range(n) for j in range(i + 1, n)]
    for a, d in lines:
        for lam in _line_solutions(lb, a, d):
            v = vadd(dict(a), d, lam) if d else vscale(a, lam)
            if v and is_group_like(lb, v):
                out.add(GroupLike.of(v))
    return out


def _line_solutions(lb, a: Mapping, d: Mapping) -> list:
    """Rational lam with a + lam d group-like (or lam a when d is empty)."""
    kk = lb.kk
    if not d:
        # lam a: Delta(a) lam = lam^2 a(x)a and lam eps(a) = 1
        ea = lb.eps(a)
        cands = set()
        for i, c in ea.items():
            cands.add(lb.base.unit.get(i, ZERO) / c)
        return [c for c in cands if c]
    da, dd = lb.comult.apply(a), lb.comult.apply(d)
    aa = kk.reduce(outer(leaf(a), leaf(a)))
    ad = kk.reduce(outer(leaf(a), leaf(d)))
    dap = kk.reduce(outer(leaf(d), leaf(a)))
    ddd = kk.reduce(outer(leaf(d), leaf(d)))
    c0 = vadd(dict(da), aa, -ONE)
    c1 = vadd(vadd(dict(dd), ad, -ONE), dap, -ONE)
    c2 = vscale(ddd, -ONE)
    keys = set(c0) | set(c1) | set(c2)
    cands = None
    for k in sorted(keys):
        q = (c2.get(k, ZERO), c1.get(k, ZERO), c0.get(k, ZERO))
        roots = _rational_roots(*q)
        if roots is None:
            continue
        cands = roots if cands is None else cands & roots
    return sorted(cands) if cands is not None else [ZERO, ONE]


def _rational_roots(a, b, c):
    """Rational roots of a x^2 + b x + c; None when identically zero."""
    if not a and not b:
        return None if not c else set()
    if not a:
        return {-c / b}
    disc = b * b - 4 * a * c
    if disc < 0:
        return set()
    num, den = int(disc.numerator), int(disc.denominator)
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return set()
    r = scalar(rn) / rd
    return {(-b + r) / (2 * a), (-b - r) / (2 * a)}


def _isqrt_exact(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


# ---------------------------------------------------------------- characters

@dataclass(eq=False)
class Character:
    delta: Matrix  # K -> R
    theta: Matrix | None = None  # R -> R, when K is enveloping

    def __call__(self, k: Mapping) -> Vec:
        return self.delta.apply(k)


def check_character(lb: LeftBialgebroid, ch: Character) -> Report:
    rep = Report("character")
    K, R = lb.total, lb.base
    e = lambda i: {i: ONE}
    d = ch.delta

    def c1():
        for k, r in itertools.product(range(K.dim), range(R.dim)):
            if d.apply(K.mul(e(k), lb.source.columns[r])) != R.mul(d.columns[k], e(r)):
                return (k, r)
        return None
    rep.run("char-1", c1)

    def c2():
        for i, j in itertools.product(range(K.dim), repeat=2):
            if d.apply(K.table[i][j]) != d.apply(K.mul(lb.s(d.columns[i]), e(j))):
                return (i, j)
        return None
    rep.run("char-2", c2)
    rep.record("char-3", None if d.apply(K.unit) == R.unit else ("unit",))
    return rep


def character_from_theta(x: XHopfLeft, theta: Matrix) -> Character:
    """delta(s (x) r) = theta(r) s on R (x) R^op."""
    R = x.bialgebroid.envelope_of
    n = R.dim
    cols = tuple(R.mul(theta.columns[j], {i: ONE}) for i in range(n) for j in range(n))
    return Character(Matrix(n, n * n, cols), theta)


def diagonal_size(R: FDAlgebra) -> int | None:
    """n if R is C^n with its basis of orthogonal idempotents, else None."""
    n = R.dim
    if R.unit != {i: ONE for i in range(n)}:
        return None
    for i, j in itertools.product(range(n), repeat=2):
        if R.table[i][j] != ({i: ONE} if i == j else {}):
            return None
    return n


def cyclic_order(R: FDAlgebra) -> int | None:
    """n if R is the group algebra of Z/n with basis 1, g, ..., g^(n-1)."""
    n = R.dim
    if R.unit != {0: ONE}:
        return None
    for i, j in itertools.product(range(n), repeat=2):
        if R.table[i][j] != {(i + j) % n: ONE}:
            return None
    return n


def algebra_endomorphisms(R: FDAlgebra) -> list:
    """Unital algebra endomorphisms of a supported base (rational points)."""
    n = diagonal_size(R)
    if n is not None:
        out = []
        for f in itertools.product(range(n), repeat=n):
            # theta(a)_i = a_{f(i)}:  theta(e_j) = sum_{i: f(i)=j} e_i
            cols = tuple({i: ONE for i in range(n) if f[i] == j} for j in range(n))
            out.append(Matrix(n, n, cols))
        return out
    n = cyclic_order(R)
    if n is not None:
        return _cyclic_endomorphisms(R, n)
    raise Unsupported(f"cannot enumerate endomorphisms of {R!r}")


def _ramanujan(d: int, k: int) -> int:
    g = gcd(d, k)
    m = d // g
    return _mobius(m) * _phi(d) // _phi(m)


def _mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _cyclic_endomorphisms(R: FDAlgebra, n: int) -> list:
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    idem = {d: {k: scalar(_ramanujan(d, k)) / n for k in range(n) if _ramanujan(d, k)}
            for d in divisors}
    choices = [[(sgn, k) for sgn in (1, -1) for k in range(d)] for d in divisors]
    seen = {}
    for pick in itertools.product(*choices):
        u: Vec = {}
        for d, (sgn, k) in zip(divisors, pick):
            vadd(u, R.mul(idem[d], {k % n: scalar(sgn)}))
        p = dict(R.unit)
        for _ in range(n):
            p = R.mul(p, u)
        if p != R.unit:
            continue
        key = tuple(sorted(u.items()))
        if key in seen:
            continue
        cols = []
        q = dict(R.unit)
        for _ in range(n):
            cols.append(q)
            q = R.mul(q, u)
        seen[key] = Matrix(n, n, tuple(cols))
    return list(seen.values())


def characters_of_enveloping(x: XHopfLeft) -> list:
    R = getattr(x.bialgebroid, "envelope_of", None)
    if R is None:
        raise Unsupported("characters are enumerated only on enveloping algebras")
    out = []
    for theta in algebra_endomorphisms(R):
        ch = character_from_theta(x, theta)
        rep = check_character(x.bialgebroid, ch)
        if not rep.ok:
            raise ValueError(f"theta gave a non-character: {rep.failed()}")
        out.append(ch)
    return out

"""Stock algebras, the crossed-product family, and the named example registry."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping

from .algebra import FDAlgebra, Plain, field_algebra, leaf, make_algebra, outer, tadd
from .bialgebroid import (HopfAlgebra, LeftBialgebroid, XHopfLeft, XHopfRight, check_left_bialgebroid,
                          compute_nu_inverse, enveloping_left, unit_inverse)
from .complexes import ModuleAlgebra, ModuleCoring, regular_module_coring
from .galois import ComoduleAlgebra, NotMorphism, _check_morphism
from .linalg import ONE, Matrix, Vec, vadd
from .sayd import (_fmtv, ComoduleOver, ModuleOver, SAYDModule, canonical_sayd_on_base, coaction_target,
                   make_sayd, trivial_sayd)

e = lambda i: {i: ONE}  # noqa: E731


class UnknownName(KeyError):
    pass


class NotModuleAlgebra(ValueError):
    def __init__(self, witness):
        super().__init__(f"not a module algebra: {witness}")
        self.witness = witness


# ---------------------------------------------------------------- stock

def group_hopf(table, name: str) -> HopfAlgebra:
    """Group algebra from a multiplication table on 0..n-1 (0 the identity)."""
    n = len(table)
    A = make_algebra([[{table[i][j]: 1} for j in range(n)] for i in range(n)], {0: 1}, name)
    inv = [next(j for j in range(n) if table[i][j] == 0) for i in range(n)]
    return HopfAlgebra(A, tuple({(i, i): ONE} for i in range(n)), tuple(ONE for _ in range(n)),
                       Matrix.from_columns(n, [{inv[i]: 1} for i in range(n)]), name)


def group_algebra(n: int) -> HopfAlgebra:
    """C[Z/n]; Z/1 is the ground field."""
    return group_hopf([[(i + j) % n for j in range(n)] for i in range(n)], f"C[Z{n}]" if n > 1 else "C")


def symmetric_group_3() -> HopfAlgebra:
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    return group_hopf(table, "C[S3]")


def diagonal(n: int) -> FDAlgebra:
    """C^n with orthogonal idempotents."""
    return make_algebra([[{i: 1} if i == j else {} for j in range(n)] for i in range(n)],
                        {i: 1 for i in range(n)}, f"R{n}")


def trivial_hopf() -> HopfAlgebra:
    return HopfAlgebra(field_algebra(), ({(0, 0): ONE},), (ONE,), Matrix.identity(1), "C")


# ---------------------------------------------------------------- adjoint SAYDs

def adjoint_lr(H: HopfAlgebra) -> SAYDModule:
    """H over itself: b |> m = b(2) m S(b(1)), coaction Delta."""
    n = H.dim
    A = H.algebra
    acts = []
    for b in range(n):
        cols = []
        for m in range(n):
            out: Vec = {}
            for (p, q), x in H.comult[b].items():
                vadd(out, A.prod(e(q), e(m), H.S(e(p))), x)
            cols.append(out)
        acts.append(Matrix(n, n, tuple(cols)))
    HR = H.as_right
    r = (Matrix.identity(n),)
    tgt = coaction_target(HR, Plain(n), r)
    co = Matrix(tgt.dim, n, tuple(tgt.reduce(H.comult[m]) for m in range(n)))
    return make_sayd(ModuleOver(HR, Plain(n), tuple(acts)), ComoduleOver(HR, Plain(n), r, co),
                     name=f"ad({H.name})")


def adjoint_rl(H: HopfAlgebra) -> SAYDModule:
    """H over itself: m <| h = S(h(1)) m h(2), coaction m -> m(2) (x) m(1)."""
    n = H.dim
    A = H.algebra
    acts = []
    for h in range(n):
        cols = []
        for m in range(n):
            out: Vec = {}
            for (p, q), x in H.comult[h].items():
                vadd(out, A.prod(H.S(e(p)), e(m), e(q)), x)
            cols.append(out)
        acts.append(Matrix(n, n, tuple(cols)))
    HL = H.as_left
    r = (Matrix.identity(n),)
    tgt = coaction_target(HL, Plain(n), r)
    co = Matrix(tgt.dim, n, tuple(tgt.reduce({(q, p): x for (p, q), x in H.comult[m].items()})
                                  for m in range(n)))
    return make_sayd(ModuleOver(HL, Plain(n), tuple(acts)), ComoduleOver(HL, Plain(n), r, co),
                     name=f"ad({H.name})")


def regular_comodule_algebra(H: HopfAlgebra) -> ComoduleAlgebra:
    """H coacting on itself by Delta."""
    HR = H.as_right
    n = H.dim
    tgt = coaction_target(HR, Plain(n), (Matrix.identity(n),))
    co = Matrix(tgt.dim, n, tuple(tgt.reduce(H.comult[m]) for m in range(n)))
    return ComoduleAlgebra(HR, H.algebra, co, name=H.name)


def trivial_module_algebra(K: XHopfLeft, T: FDAlgebra) -> ModuleAlgebra:
    """T over a K whose base is the ground field, acting through the counit."""
    acts = tuple(Matrix.identity(T.dim).scale(K.bialgebroid.eps(e(k)).get(0, 0))
                 for k in range(K.total.dim))
    return ModuleAlgebra(K, T, acts, T.name)


# ---------------------------------------------------------------- crossed products

def check_hopf_module_algebra(H: HopfAlgebra, F: FDAlgebra, action: tuple):
    """First failing witness of h |> (fg) = (h1|>f)(h2|>g), h|>1 = eps(h)1, or None."""
    n = F.dim
    if not Matrix.identity(n) == _comb(action, H.algebra.unit, n):
        return ("unital",)
    for h, k in itertools.product(range(H.dim), repeat=2):
        if _comb(action, H.algebra.table[h][k], n) != action[h] @ action[k]:
            return ("associative", h, k)
    for h in range(H.dim):
        if action[h].apply(F.unit) != {i: H.counit[h] * x for i, x in F.unit.items() if H.counit[h]}:
            return ("unit", h)
        for f, g in itertools.product(range(n), repeat=2):
            acc: Vec = {}
            for (a, b), x in H.comult[h].items():
                vadd(acc, F.mul(action[a].col(f), action[b].col(g)), x)
            if acc != action[h].apply(F.table[f][g]):
                return ("multiplicative", h, f, g)
    return None


def _comb(mats, coeffs: Mapping, n: int) -> Matrix:
    cols = [dict() for _ in range(n)]
    for i, x in coeffs.items():
        for j, c in enumerate(mats[i].columns):
            vadd(cols[j], c, x)
    return Matrix(n, n, tuple(cols))


def trivial_action(H: HopfAlgebra, F: FDAlgebra) -> tuple:
    return tuple(Matrix.identity(F.dim).scale(H.counit[h]) for h in range(H.dim))


@dataclass(eq=False)
class CrossedProduct:
    """F >| H, basis index f * dim H + h."""

    F: HopfAlgebra
    H: HopfAlgebra
    action: tuple
    algebra: FDAlgebra

    def idx(self, f: int, h: int) -> int:
        return f * self.H.dim + h

    def pair(self, fv: Mapping, hv: Mapping) -> Vec:
        return {self.idx(f, h): x * y for f, x in fv.items() for h, y in hv.items()}

    @cached_property
    def comodule_algebra(self) -> ComoduleAlgebra:
        """f >| h -> f >| h(1) (x) h(2)."""
        H = self.H
        HR = H.as_right
        n = self.algebra.dim
        tgt = coaction_target(HR, Plain(n), (Matrix.identity(n),))
        cols = []
        for i in range(n):
            f, h = divmod(i, H.dim)
            cols.append(tgt.reduce({(self.idx(f, a), b): x for (a, b), x in H.comult[h].items()}))
        return ComoduleAlgebra(HR, self.algebra, Matrix(tgt.dim, n, tuple(cols)), name=self.algebra.name)


def crossed_product(F: HopfAlgebra, H: HopfAlgebra, action: tuple | None = None) -> CrossedProduct:
    """(f >| h)(g >| v) = f (h(1) |> g) >| h(2) v."""
    action = action if action is not None else trivial_action(H, F.algebra)
    w = check_hopf_module_algebra(H, F.algebra, action)
    if w is not None:
        raise NotModuleAlgebra(w)
    nF, nH = F.dim, H.dim
    Fa, Ha = F.algebra, H.algebra
    mult = []
    for i in range(nF * nH):
        f, h = divmod(i, nH)
        row = []
        for j in range(nF * nH):
            g, v = divmod(j, nH)
            out: Vec = {}
            for (a, b), x in H.comult[h].items():
                fg = Fa.mul(e(f), action[a].col(g))
                hv = Ha.mul(e(b), e(v))
                for p, y in fg.items():
                    for q, z in hv.items():
                        vadd(out, {p * nH + q: ONE}, x * y * z)
            row.append(out)
        mult.append(row)
    unit = {p * nH + q: x * y for p, x in Fa.unit.items() for q, y in Ha.unit.items()}
    A = make_algebra(mult, unit, f"{F.name}>|{H.name}")
    return CrossedProduct(F, H, action, A)


# ---------------------------------------------------------------- B (x) F (x) B^op

@dataclass(eq=False)
class TripleHopf:
    """K = B (x) F (x) B^op over B = F (as an algebra); index (b1 * nF + f) * nB + b2."""

    F: HopfAlgebra
    hopf: XHopfLeft

    @property
    def B(self) -> FDAlgebra:
        return self.hopf.base

    @property
    def K(self) -> FDAlgebra:
        return self.hopf.total

    def idx(self, b1: int, f: int, b2: int) -> int:
        n = self.F.dim
        return (b1 * n + f) * n + b2

    def unidx(self, k: int) -> tuple:
        n = self.F.dim
        r, b2 = divmod(k, n)
        b1, f = divmod(r, n)
        return b1, f, b2

    def elem(self, b1: Mapping, f: Mapping, b2: Mapping) -> Vec:
        return {self.idx(i, j, k): x * y * z for i, x in b1.items() for j, y in f.items()
                for k, z in b2.items()}


def triple_hopf(F: HopfAlgebra, verify: bool = True) -> TripleHopf:
    """s(b) = b(x)1(x)1, t(b) = 1(x)1(x)b, Delta(b1(x)f(x)b2) = (b1(x)f1(x)1)(x)_B(1(x)f2(x)b2),
    eps(b1(x)f(x)b2) = eps(f) b1 b2."""
    B = F.algebra
    n = B.dim
    K = B.tensor(B).tensor(B.op(), name=f"{B.name}(x){F.name}(x){B.name}^op")
    one = B.unit
    tri = lambda a, b, c: {(i * n + j) * n + k: x * y * z  # noqa: E731
                           for i, x in a.items() for j, y in b.items() for k, z in c.items()}
    src = Matrix(K.dim, n, tuple(tri(e(b), one, one) for b in range(n)))
    tgt = Matrix(K.dim, n, tuple(tri(one, one, e(b)) for b in range(n)))
    eps_cols = []
    for k in range(K.dim):
        r, b2 = divmod(k, n)
        b1, f = divmod(r, n)
        c = F.counit[f]
        eps_cols.append({i: c * x for i, x in B.mul(e(b1), e(b2)).items()} if c else {})
    eps = Matrix(n, K.dim, tuple(eps_cols))

    def comult(k):
        r, b2 = divmod(k, n)
        b1, f = divmod(r, n)
        out: dict = {}
        for (f1, f2), x in F.comult[f].items():
            tadd(out, outer(leaf(tri(e(b1), e(f1), one)), leaf(tri(one, e(f2), e(b2)))), x)
        return out
    lb = LeftBialgebroid(K, B, src, tgt, comult, eps, name=f"{B.name}(x){F.name}(x){B.name}^op")
    if verify:
        rep = check_left_bialgebroid(lb)
        if not rep.ok:
            raise ValueError(f"triple bialgebroid fails {rep.failed()}")
    th = TripleHopf(F, compute_nu_inverse(lb, verify=verify))
    if verify:
        w = check_triple_translation(th)
        if w is not None:
            raise ValueError(f"translation map differs from the closed form at {w}")
    return th


def check_triple_translation(th: TripleHopf):
    """k- (x) k+ = b1(x)f1(x)1 (x) b2(x)S(f2)(x)1 on every basis k."""
    F, B = th.F, th.B
    kk_op = th.hopf.bialgebroid.kk_op
    for k in range(th.K.dim):
        b1, f, b2 = th.unidx(k)
        want: dict = {}
        for (f1, f2), x in F.comult[f].items():
            tadd(want, outer(leaf(th.elem(e(b1), e(f1), B.unit)),
                             leaf(th.elem(e(b2), F.S(e(f2)), B.unit))), x)
        if kk_op.reduce(want) != th.hopf.minus_plus.col(k):
            return (k,)
    return None


def k_action_on_crossed(th: TripleHopf, cp: CrossedProduct, verify: bool = True) -> ModuleAlgebra:
    """(b1(x)f(x)b2) |> (g >| h) = b1 f1 g (h1 |> (S(f2) b2)) >| h2."""
    F, H = th.F, cp.H
    Fa = F.algebra
    if cp.F is not F and cp.F.algebra.table != Fa.table:
        raise ValueError("crossed product and triple use different F")
    for i, j in itertools.product(range(Fa.dim), repeat=2):
        if Fa.table[i][j] != Fa.table[j][i]:
            raise NotModuleAlgebra(("F not commutative", i, j))
    nA = cp.algebra.dim
    acts = []
    for k in range(th.K.dim):
        b1, f, b2 = th.unidx(k)
        cols = []
        for a in range(nA):
            g, h = divmod(a, H.dim)
            out: Vec = {}
            for (f1, f2), x in F.comult[f].items():
                left = Fa.prod(e(b1), e(f1), e(g))
                inner = Fa.mul(F.S(e(f2)), e(b2))
                for (h1, h2), y in H.comult[h].items():
                    fpart = Fa.mul(left, cp.action[h1].apply(inner))
                    vadd(out, cp.pair(fpart, e(h2)), x * y)
            cols.append(out)
        acts.append(Matrix(nA, nA, tuple(cols)))
    ma = ModuleAlgebra(th.hopf, cp.algebra, tuple(acts), cp.algebra.name)
    if verify:
        rep = ma.check()
        if not rep.ok:
            v = rep.first()
            raise NotModuleAlgebra((v.check,) + tuple(v.witness or ()))
    return ma


def sayd_pair(th: TripleHopf, x: Mapping, N: SAYDModule, strict: bool = True) -> SAYDModule:
    """B (x) N with coaction b(x)n -> (bx (x) n(-1) (x) x^-1) (x)_B (1 (x) n(0))
    and action (b(x)n).(b1(x)f(x)b2) = b2 b b1 (x) n.f.  Index b * dim N + j."""
    F, B = th.F, th.B
    if N.chirality != "RL" or N.hopf.total.table != F.algebra.table:
        raise ValueError("N must be a right-left SAYD module over F")
    xinv = unit_inverse(B, x)
    if xinv is None:
        raise ValueError(f"{x} is not a unit")
    nB, nN = B.dim, N.dim
    d = nB * nN
    K = th.K
    acts = []
    for k in range(K.dim):
        b1, f, b2 = th.unidx(k)
        cols = []
        for i in range(d):
            b, j = divmod(i, nN)
            bb = B.prod(e(b2), e(b), e(b1))
            nf = N.module.action[f].col(j)
            cols.append({p * nN + q: u * w for p, u in bb.items() for q, w in nf.items()})
        acts.append(Matrix(d, d, tuple(cols)))
    module = ModuleOver(th.hopf, Plain(d), tuple(acts))
    r_action = module.r_left()
    tgt = coaction_target(th.hopf, Plain(d), r_action)
    co_cols = []
    for i in range(d):
        b, j = divmod(i, nN)
        bx = B.mul(e(b), x)
        out: dict = {}
        for key, c in N.comodule.rho(e(j)).items():
            f, n0 = key[0], key[1]
            kv = th.elem(bx, e(f), xinv)
            for kk, y in kv.items():
                for q, z in B.unit.items():
                    tadd(out, {(kk, q * nN + n0): ONE}, c * y * z)
        co_cols.append(tgt.reduce(out))
    comodule = ComoduleOver(th.hopf, Plain(d), r_action, Matrix(tgt.dim, d, tuple(co_cols)))
    return make_sayd(module, comodule, name=f"B(x){N.name} x={_fmtv(x)}", strict=strict)


def phi_functor(th: TripleHopf, y: Mapping, phi: Matrix, M1: SAYDModule, M2: SAYDModule,
                N1: SAYDModule, N2: SAYDModule) -> Matrix:
    """b (x) n -> b y^-1 (x) phi(n), verified K-linear and K-colinear."""
    _check_morphism(phi, N1, N2)
    B = th.B
    yinv = unit_inverse(B, y)
    if yinv is None:
        raise NotMorphism("y invertible", (dict(y),))
    n1, n2 = N1.dim, N2.dim
    cols = []
    for i in range(B.dim * n1):
        b, j = divmod(i, n1)
        by = B.mul(e(b), yinv)
        cols.append({p * n2 + q: u * w for p, u in by.items() for q, w in phi.col(j).items()})
    out = Matrix(B.dim * n2, B.dim * n1, tuple(cols))
    _check_morphism(out, M1, M2)
    return out


# ---------------------------------------------------------------- registry

@dataclass(eq=False)
class Example:
    """A named corpus datum: whatever structures the suites can exercise."""

    name: str
    instantiates: str
    lefts: list = field(default_factory=list)          # XHopfLeft
    rights: list = field(default_factory=list)         # XHopfRight
    sayds: list = field(default_factory=list)          # SAYDModule
    algebra_data: list = field(default_factory=list)   # (ModuleAlgebra, SAYDModule RL)
    coring_data: list = field(default_factory=list)    # (ModuleCoring, SAYDModule LR)
    galois_data: list = field(default_factory=list)    # (ComoduleAlgebra, XHopfLeft, ModuleAlgebra, [SAYD RL])

    def summary(self) -> list:
        lines = [f"{self.name}: {self.instantiates}"]
        for h in self.lefts:
            lines.append(f"  left x-Hopf {h.name}: dim {h.total.dim} over base of dim {h.base.dim}")
        for h in self.rights:
            lines.append(f"  right x-Hopf {h.name}: dim {h.total.dim} over base of dim {h.base.dim}")
        for s in self.sayds:
            lines.append(f"  SAYD {s.name} ({s.chirality}): dim {s.dim}")
        for T, M in self.algebra_data:
            lines.append(f"  module algebra {T.name} (dim {T.algebra.dim}) with coefficients {M.name}")
        for C, M in self.coring_data:
            lines.append(f"  module coring over {C.hopf.name} (dim {C.dim}) with coefficients {M.name}")
        for ca, K, T, Ms in self.galois_data:
            lines.append(f"  Galois datum {ca.name}: T dim {ca.algebra.dim}, B = {ca.hopf.name}, "
                         f"K = {K.name}, {len(Ms)} coefficient module(s)")
        return lines


def _trivial() -> Example:
    C = trivial_hopf()
    K = C.as_left
    M = trivial_sayd(K)
    T = trivial_module_algebra(K, C.algebra)
    return Example("zoo:trivial", "K = C acting on T = C with M = C",
                   lefts=[K], rights=[C.as_right], sayds=[M], algebra_data=[(T, M)],
                   galois_data=[(regular_comodule_algebra(C), K, T, [M])])


def hopf_example(H: HopfAlgebra, name: str, about: str = "") -> Example:
    """Everything an ordinary Hopf algebra H offers: both x-Hopf views, adjoint SAYDs,
    H as a module algebra over C, the regular module coring, and T = B = H."""
    C = trivial_hopf()
    K = C.as_left
    M = trivial_sayd(K)
    T = trivial_module_algebra(K, H.algebra)
    ad = adjoint_lr(H)
    return Example(name, about or f"Hopf algebra {H.name}: module algebra over C, regular coring, T = B = H",
                   lefts=[H.as_left], rights=[H.as_right], sayds=[ad, adjoint_rl(H), trivial_sayd(H.as_left)],
                   algebra_data=[(T, M)], coring_data=[(regular_module_coring(H.as_right), ad)],
                   galois_data=[(regular_comodule_algebra(H), K, T, [M])])


def algebra_example(R: FDAlgebra, name: str, units=None, about: str = "") -> Example:
    """R (x) R^op acting on R with the canonical SAYD modules on R for the given units."""
    K = enveloping_left(R)
    units = units or [R.unit]
    Ms = [canonical_sayd_on_base(K, x) for x in units]
    n = R.dim
    acts = tuple(Matrix(n, n, tuple(R.mul(R.mul(e(i // n), e(c)), e(i % n)) for c in range(n)))
                 for i in range(n * n))
    T = ModuleAlgebra(K, R, acts, R.name)
    ca = ComoduleAlgebra(trivial_hopf().as_right, R, Matrix.identity(n), name=R.name)
    return Example(name, about or f"enveloping x-Hopf algebra of {R.name} acting on {R.name}",
                   lefts=[K], sayds=Ms, algebra_data=[(T, M) for M in Ms],
                   galois_data=[(ca, K, T, Ms)])


def _group(n: int) -> Example:
    return hopf_example(group_algebra(n), f"zoo:z{n}",
                        f"group algebra of Z/{n}: module algebra over C, regular coring, T = B = H")


def _coring_z2() -> Example:
    H = group_algebra(2)
    ad = adjoint_lr(H)
    return Example("zoo:coring-z2", "regular module coring of C[Z2] with the adjoint SAYD",
                   rights=[H.as_right], sayds=[ad], coring_data=[(regular_module_coring(H.as_right), ad)])


def _k2() -> Example:
    return algebra_example(diagonal(2), "zoo:K2", [(1, 1), (2, 3), (-1, 1), (1, -5)],
                           "enveloping x-Hopf algebra R2 (x) R2^op acting on R2")


def crossed_z2_data(x: Mapping | None = None):
    F = group_algebra(2)
    H = group_algebra(2)
    cp = crossed_product(F, H)
    th = triple_hopf(F)
    T = k_action_on_crossed(th, cp)
    N = adjoint_rl(F)
    Ms = [sayd_pair(th, x or F.algebra.unit, N)]
    return F, H, cp, th, T, N, Ms


def _crossed_z2() -> Example:
    F, H, cp, th, T, N, Ms = crossed_z2_data()
    Ms.append(sayd_pair(th, e(1), N))
    return Example("zoo:crossed-z2", "crossed product C[Z2] >| C[Z2] with K = B (x) F (x) B^op",
                   lefts=[th.hopf, F.as_left], rights=[H.as_right], sayds=[N] + Ms,
                   algebra_data=[(T, Ms[0])],
                   galois_data=[(cp.comodule_algebra, th.hopf, T, Ms)])


def _closing() -> Example:
    """F = B = C, N = C, x = 1 over H = C[Z2]."""
    F = trivial_hopf()
    H = group_algebra(2)
    cp = crossed_product(F, H)
    th = triple_hopf(F)
    T = k_action_on_crossed(th, cp)
    M = sayd_pair(th, F.algebra.unit, trivial_sayd(F.as_left))
    return Example("zoo:closing", "F = B = C, N = C, x = 1: the transferred module is H with adjoint structure",
                   lefts=[th.hopf], rights=[H.as_right], sayds=[M], algebra_data=[(T, M)],
                   galois_data=[(cp.comodule_algebra, th.hopf, T, [M])])


REGISTRY: dict[str, Callable[[], Example]] = {
    "zoo:trivial": _trivial,
    "zoo:z2": lambda: _group(2),
    "zoo:z3": lambda: _group(3),
    "zoo:K2": _k2,
    "zoo:coring-z2": _coring_z2,
    "zoo:crossed-z2": _crossed_z2,
    "zoo:closing": _closing,
}

_cache: dict = {}


def example(name: str) -> Example:
    if name not in REGISTRY:
        raise UnknownName(name)
    if name not in _cache:
        _cache[name] = REGISTRY[name]()
    return _cache[name]


def stock(name: str):
    """Building blocks: ``group_algebra(Z/n)``, ``diagonal(C^n)``, ``trivial_hopf``."""
    import re
    m = re.fullmatch(r"group_algebra\((?:Z/)?(\d+)\)", name)
    if m and int(m.group(1)) >= 1:
        return group_algebra(int(m.group(1)))
    m = re.fullmatch(r"diagonal\((?:C\^)?(\d+)\)", name)
    if m and int(m.group(1)) >= 1:
        return diagonal(int(m.group(1)))
    if name == "trivial_hopf":
        return trivial_hopf()
    raise UnknownName(name)

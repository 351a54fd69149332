"""Finite-dimensional algebras, bimodules and balanced tensor products.

Every tensor product over a base algebra is realised as a quotient of the
plain tensor product.  A :class:`Space` remembers its *flat* factors (the
plain vector spaces it is built from) together with a projection from the
flat tensor product and a section back into it.  Maps given by formulas on
representatives are evaluated on all flat basis tensors and then descended by
:func:`descend`, which refuses maps that do not respect the relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Callable, Mapping, Sequence

from .linalg import (ONE, ZERO, Echelon, Matrix, Subspace, Vec, quotient, scalar,
                     vadd, vscale)
from .report import Report

Tensor = dict  # {tuple of flat indices: Scalar}


class NotAssociative(ValueError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
        self.witness = (i, j, k)


class BadUnit(ValueError):
    def __init__(self, i: int):
        super().__init__(f"unit fails on basis element e{i}")
        self.witness = (i,)


class NotWellDefined(ValueError):
    """A formula on representatives does not descend to the quotient."""

    def __init__(self, name: str, witness: tuple, detail: str = ""):
        super().__init__(f"{name} is not well defined on {witness} {detail}".rstrip())
        self.name = name
        self.witness = witness


# ---------------------------------------------------------------- algebras

class FDAlgebra:
    """Unital algebra given by structure constants ``e_i e_j = table[i][j]``."""

    def __init__(self, table: Sequence[Sequence[Mapping]], unit: Mapping, name: str = ""):
        self.dim = len(table)
        self.table = tuple(tuple({k: scalar(x) for k, x in c.items() if x} for c in row)
                           for row in table)
        self.unit = {k: scalar(x) for k, x in unit.items() if x}
        self.name = name

    def __repr__(self) -> str:
        return f"FDAlgebra({self.name or '?'}, dim={self.dim})"

    # arithmetic -----------------------------------------------------------
    def mul(self, u: Mapping, v: Mapping) -> Vec:
        out: Vec = {}
        t = self.table
        for i, x in u.items():
            row = t[i]
            for j, y in v.items():
                vadd(out, row[j], x * y)
        return out

    def prod(self, *vs: Mapping) -> Vec:
        out = dict(self.unit)
        for v in vs:
            out = self.mul(out, v)
        return out

    def basis(self, i: int) -> Vec:
        return {i: ONE}

    @property
    def one(self) -> Vec:
        return dict(self.unit)

    def lmul(self, u: Mapping) -> Matrix:
        """Matrix of x -> u x."""
        return Matrix(self.dim, self.dim, tuple(self.mul(u, {j: ONE}) for j in range(self.dim)))

    def rmul(self, u: Mapping) -> Matrix:
        """Matrix of x -> x u."""
        return Matrix(self.dim, self.dim, tuple(self.mul({j: ONE}, u) for j in range(self.dim)))

    @cached_property
    def left_regular(self) -> tuple:
        return tuple(self.lmul({i: ONE}) for i in range(self.dim))

    @cached_property
    def right_regular(self) -> tuple:
        return tuple(self.rmul({i: ONE}) for i in range(self.dim))

    # constructions ----------------------------------------------------------
    @cached_property
    def _op(self) -> "FDAlgebra":
        t = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return FDAlgebra(t, self.unit, f"{self.name}^op")

    def op(self) -> "FDAlgebra":
        return self._op

    def tensor(self, other: "FDAlgebra", name: str = "") -> "FDAlgebra":
        """Tensor algebra; basis e_i (x) f_j has index i*other.dim + j."""
        n = other.dim
        table = []
        for i, j in itertools.product(range(self.dim), range(n)):
            row = []
            for k, l in itertools.product(range(self.dim), range(n)):
                row.append(outer_index(self.table[i][k], other.table[j][l], n))
            table.append(row)
        unit = outer_index(self.unit, other.unit, n)
        return FDAlgebra(table, unit, name or f"{self.name}(x){other.name}")

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i))

    def structure_constants(self) -> list:
        return [[[self.table[i][j].get(k, ZERO) for k in range(self.dim)]
                 for j in range(self.dim)] for i in range(self.dim)]

    def verify(self) -> None:
        for i in range(self.dim):
            e = {i: ONE}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise BadUnit(i)
        for i, j in itertools.product(range(self.dim), repeat=2):
            eij = self.table[i][j]
            for k in range(self.dim):
                if self.mul(eij, {k: ONE}) != self.mul({i: ONE}, self.table[j][k]):
                    raise NotAssociative(i, j, k)


def make_algebra(mult, unit, name: str = "") -> FDAlgebra:
    """Validated algebra from dense constants ``mult[i][j][k]`` and a unit vector.

    ``mult`` may also be a nested list of sparse dicts.
    """
    n = len(mult)
    table = []
    for i in range(n):
        if len(mult[i]) != n:
            raise ValueError("structure constants must be dim x dim x dim")
        row = []
        for j in range(n):
            c = mult[i][j]
            if isinstance(c, Mapping):
                row.append(dict(c))
            else:
                if len(c) != n:
                    raise ValueError("structure constants must be dim x dim x dim")
                row.append({k: x for k, x in enumerate(c)})
        table.append(row)
    u = unit if isinstance(unit, Mapping) else dict(enumerate(unit))
    if isinstance(unit, Sequence) and len(unit) != n:
        raise ValueError("unit has wrong length")
    alg = FDAlgebra(table, u, name)
    alg.verify()
    return alg


def outer_index(u: Mapping, v: Mapping, n: int) -> Vec:
    return {i * n + j: x * y for i, x in u.items() for j, y in v.items()}


def field_algebra() -> FDAlgebra:
    return FDAlgebra([[{0: 1}]], {0: 1}, "C")


# ---------------------------------------------------------------- spaces

def flat_index(t: Sequence[int], leaves: Sequence[int]) -> int:
    i = 0
    for x, n in zip(t, leaves):
        i = i * n + x
    return i


def flat_tuple(i: int, leaves: Sequence[int]) -> tuple:
    out = []
    for n in reversed(leaves):
        i, r = divmod(i, n)
        out.append(r)
    return tuple(reversed(out))


def outer(*parts: Mapping) -> Tensor:
    """Tensor product of flat tensors (tuple-keyed dicts)."""
    out: Tensor = {(): ONE}
    for p in parts:
        nxt: Tensor = {}
        for a, x in out.items():
            for b, y in p.items():
                key = a + b
                v = nxt.get(key, ZERO) + x * y
                if v:
                    nxt[key] = v
                else:
                    nxt.pop(key, None)
        out = nxt
    return out


def leaf(v: Mapping) -> Tensor:
    """A vector of a single plain factor as a flat tensor."""
    return {(i,): x for i, x in v.items() if x}


def tadd(acc: Tensor, t: Mapping, c=ONE) -> Tensor:
    return vadd(acc, t, c)


class Space:
    """A quotient of a plain tensor product of ``leaves``."""

    dim: int
    leaves: tuple

    @property
    def flat_dim(self) -> int:
        return prod(self.leaves)

    @property
    def flat_project(self) -> Matrix:
        raise NotImplementedError

    @property
    def flat_embed(self) -> Matrix:
        raise NotImplementedError

    def reduce(self, t: Mapping) -> Vec:
        """Quotient coordinates of a flat tensor."""
        P = self.flat_project
        out: Vec = {}
        for key, x in t.items():
            vadd(out, P.columns[flat_index(key, self.leaves)], x)
        return out

    def lift(self, v: Mapping) -> Tensor:
        """A flat representative of a quotient vector."""
        E = self.flat_embed
        out: Tensor = {}
        for q, x in v.items():
            for i, y in E.columns[q].items():
                key = flat_tuple(i, self.leaves)
                vadd(out, {key: x * y})
        return out

    def basis_lift(self, q: int) -> Tensor:
        return self.lift({q: ONE})

    def class_of(self, key: tuple) -> Vec:
        return self.flat_project.columns[flat_index(key, self.leaves)]

    def flat_keys(self):
        return itertools.product(*(range(n) for n in self.leaves))


class Plain(Space):
    def __init__(self, dim: int, name: str = ""):
        self.dim = dim
        self.leaves = (dim,)
        self.name = name

    @cached_property
    def flat_project(self) -> Matrix:
        return Matrix.identity(self.dim)

    @property
    def flat_embed(self) -> Matrix:
        return self.flat_project

    def reduce(self, t: Mapping) -> Vec:
        out: Vec = {}
        for (i,), x in t.items():
            vadd(out, {i: x})
        return out

    def lift(self, v: Mapping) -> Tensor:
        return leaf(v)

    def __repr__(self) -> str:
        return f"Plain({self.dim})"


@dataclass(eq=False)
class Bimodule:
    """A space with an optional left action of ``left`` and right action of ``right``.

    Actions are stored as one matrix per basis element of the acting algebra.
    """

    space: Space
    left: FDAlgebra | None = None
    left_action: tuple = ()
    right: FDAlgebra | None = None
    right_action: tuple = ()
    name: str = ""

    @property
    def dim(self) -> int:
        return self.space.dim

    def act_left(self, r: Mapping, v: Mapping) -> Vec:
        out: Vec = {}
        for i, x in r.items():
            vadd(out, self.left_action[i].apply(v), x)
        return out

    def act_right(self, v: Mapping, r: Mapping) -> Vec:
        out: Vec = {}
        for i, x in r.items():
            vadd(out, self.right_action[i].apply(v), x)
        return out

    def left_matrix(self, r: Mapping) -> Matrix:
        return _combine(self.left_action, r, self.dim)

    def right_matrix(self, r: Mapping) -> Matrix:
        return _combine(self.right_action, r, self.dim)

    def check(self) -> Report:
        rep = Report(self.name or "bimodule")
        n = self.dim
        for side, alg, acts in (("left", self.left, self.left_action),
                                ("right", self.right, self.right_action)):
            if alg is None:
                continue
            rep.run(f"{side} unital", lambda: None if _combine(acts, alg.unit, n).is_identity() else ())
            def assoc(alg=alg, acts=acts, side=side):
                for i, j in itertools.product(range(alg.dim), repeat=2):
                    prodm = _combine(acts, alg.table[i][j], n)
                    comp = acts[i] @ acts[j] if side == "left" else acts[j] @ acts[i]
                    if prodm != comp:
                        return (i, j)
                return None
            rep.run(f"{side} associative", assoc)
        if self.left is not None and self.right is not None:
            def commute():
                for i, j in itertools.product(range(self.left.dim), range(self.right.dim)):
                    if self.left_action[i] @ self.right_action[j] != self.right_action[j] @ self.left_action[i]:
                        return (i, j)
                return None
            rep.run("actions commute", commute)
        return rep

    @staticmethod
    def regular(alg: FDAlgebra) -> "Bimodule":
        return Bimodule(Plain(alg.dim), alg, alg.left_regular, alg, alg.right_regular, alg.name)


def _combine(mats: Sequence[Matrix], coeffs: Mapping, n: int) -> Matrix:
    cols = [dict() for _ in range(n)]
    for i, x in coeffs.items():
        for j, c in enumerate(mats[i].columns):
            vadd(cols[j], c, x)
    return Matrix(n, n, tuple(cols))


class BalancedTensor(Space):
    """``left (x)_base right``: plain tensor modulo (m.r)(x)n - m(x)(r.n)."""

    def __init__(self, left: Bimodule, right: Bimodule, base: FDAlgebra,
                 relation_basis: Sequence[int] | None = None, name: str = ""):
        if len(left.right_action) != base.dim or len(right.left_action) != base.dim:
            raise ValueError("actions must be indexed by the base basis")
        self.left_factor = left
        self.right_factor = right
        self.base = base
        self.name = name
        self.leaves = left.space.leaves + right.space.leaves
        a, b = left.dim, right.dim
        self.full_dim = a * b
        idx = range(base.dim) if relation_basis is None else relation_basis
        ech = Echelon()
        for r in idx:
            ra, la = left.right_action[r], right.left_action[r]
            for i in range(a):
                ci = ra.columns[i]
                for j in range(b):
                    v: Vec = {}
                    for k, x in ci.items():
                        v[k * b + j] = x
                    for k, x in la.columns[j].items():
                        key = i * b + k
                        y = v.get(key, ZERO) - x
                        if y:
                            v[key] = y
                        else:
                            v.pop(key, None)
                    if v:
                        ech.add(v)
        self.relations = Subspace._from_echelon(ech, a * b)
        self.project, self.embed = quotient(a * b, self.relations)
        self.dim = self.project.rows

    def __repr__(self) -> str:
        return f"BalancedTensor({self.left_factor.dim}x{self.right_factor.dim}/{self.base.name} -> {self.dim})"

    @property
    def space_dim(self) -> int:
        return self.dim

    @cached_property
    def flat_project(self) -> Matrix:
        L, R = self.left_factor.space, self.right_factor.space
        PL, PR = L.flat_project, R.flat_project
        b = self.right_factor.dim
        P = self.project
        cols = []
        cache: dict = {}
        for cl in PL.columns:
            for cr in PR.columns:
                v: Vec = {}
                for i, x in cl.items():
                    for j, y in cr.items():
                        k = i * b + j
                        col = cache.get(k)
                        if col is None:
                            col = cache[k] = P.columns[k]
                        vadd(v, col, x * y)
                cols.append(v)
        return Matrix(self.dim, len(cols), tuple(cols))

    @cached_property
    def flat_embed(self) -> Matrix:
        L, R = self.left_factor.space, self.right_factor.space
        EL, ER = L.flat_embed, R.flat_embed
        b = self.right_factor.dim
        nr = R.flat_dim
        cols = []
        for col in self.embed.columns:
            v: Vec = {}
            for k, x in col.items():
                i, j = divmod(k, b)
                for p, y in EL.columns[i].items():
                    for q, z in ER.columns[j].items():
                        vadd(v, {p * nr + q: x * y * z})
            cols.append(v)
        return Matrix(self.flat_dim, self.dim, tuple(cols))

    # local (two-factor) view ------------------------------------------------
    def local_class(self, i: int, j: int) -> Vec:
        return self.project.columns[i * self.right_factor.dim + j]

    def local_reduce(self, v: Mapping) -> Vec:
        return self.project.apply(v)

    def descend_local(self, A: Matrix, name: str = "map") -> Matrix:
        """Descend an endomorphism of the plain two-factor product."""
        P, E = self.project, self.embed
        PA = P @ A
        D = PA @ E
        diff = PA - D @ P
        if not diff.is_zero():
            i, j = diff.first_difference(Matrix.zeros(*diff.shape))
            raise NotWellDefined(name, divmod(j, self.right_factor.dim))
        return D

    @cached_property
    def bimodule(self) -> Bimodule:
        """Outer actions induced from the factors."""
        L, R = self.left_factor, self.right_factor
        la: tuple = ()
        ra: tuple = ()
        if L.left is not None:
            Ib = Matrix.identity(R.dim)
            la = tuple(self.descend_local(m.kron(Ib), "left action") for m in L.left_action)
        if R.right is not None:
            Ia = Matrix.identity(L.dim)
            ra = tuple(self.descend_local(Ia.kron(m), "right action") for m in R.right_action)
        return Bimodule(self, L.left, la, R.right, ra, self.name)


class FlatQuotient(Space):
    """Plain tensor product of ``leaves`` modulo several balancing families.

    ``joints`` holds ``(i, A, j, B)``: for each base element r the relation
    ``A[r] acting on leaf i  ==  B[r] acting on leaf j``.  Use this when an
    intermediate bracket is not a bimodule and iterated
    :class:`BalancedTensor` construction is unavailable.
    """

    def __init__(self, leaves: Sequence[int], joints: Sequence, name: str = ""):
        self.leaves = tuple(leaves)
        self.name = name
        n = prod(self.leaves)
        ech = Echelon()
        for i, A, j, B in joints:
            for r in range(len(A)):
                ca, cb = A[r].columns, B[r].columns
                for idx in range(n):
                    key = flat_tuple(idx, self.leaves)
                    v: Vec = {}
                    for a, x in ca[key[i]].items():
                        vadd(v, {flat_index(key[:i] + (a,) + key[i + 1:], self.leaves): x})
                    for b, x in cb[key[j]].items():
                        vadd(v, {flat_index(key[:j] + (b,) + key[j + 1:], self.leaves): -x})
                    if v:
                        ech.add(v)
        self.relations = Subspace._from_echelon(ech, n)
        self._project, self._embed = quotient(n, self.relations)
        self.dim = self._project.rows

    @property
    def flat_project(self) -> Matrix:
        return self._project

    @property
    def flat_embed(self) -> Matrix:
        return self._embed

    def __repr__(self) -> str:
        return f"FlatQuotient({self.leaves} -> {self.dim})"


def balanced_tensor(m: Bimodule, n: Bimodule, base: FDAlgebra, name: str = "") -> BalancedTensor:
    if m.right is not None and m.right.dim != base.dim:
        raise ValueError("left factor's right base differs from base")
    if n.left is not None and n.left.dim != base.dim:
        raise ValueError("right factor's left base differs from base")
    return BalancedTensor(m, n, base, name=name)


def tensor_power(t: Bimodule, base: FDAlgebra, n: int) -> Bimodule:
    """Left-associated ``t (x)_base ... (x)_base t`` (n factors) as a bimodule."""
    if n < 1:
        raise ValueError("n >= 1 required")
    acc = t
    for _ in range(n - 1):
        acc = balanced_tensor(acc, t, base).bimodule
    return acc


def plain_tensor(*spaces: Space) -> Space:
    """Tensor product over the ground field (no relations)."""
    k = field_algebra()
    acc = spaces[0]
    for s in spaces[1:]:
        l = Bimodule(acc, right=k, right_action=(Matrix.identity(acc.dim),))
        r = Bimodule(s, left=k, left_action=(Matrix.identity(s.dim),))
        acc = BalancedTensor(l, r, k)
    return acc


def chain(*factors: Space, joints: Sequence) -> BalancedTensor:
    """Left-associated tensor of spaces with a balancing action at each joint.

    ``joints[i] = (base, right_on_last, left_on_next)`` where the first entry is
    the base algebra, the second gives the right action on the last flat leaf
    of the accumulated product (a matrix per base basis element, acting on that
    leaf) and the third the left action on the next factor's coordinates.
    """
    acc: Space = factors[0]
    for f, (base, ra, la) in zip(factors[1:], joints):
        pos = len(acc.leaves) - 1
        if isinstance(acc, Plain):
            ra_acc = tuple(ra)
        else:
            ra_acc = tuple(leaf_action(acc, pos, m) for m in ra)
        acc = BalancedTensor(Bimodule(acc, right=base, right_action=ra_acc),
                             Bimodule(f, left=base, left_action=tuple(la)), base)
    return acc


# ---------------------------------------------------------------- descent

def descend(src: Space, dst: Space, formula: Callable[[tuple], Mapping],
            name: str = "map") -> Matrix:
    """Matrix of the map induced on quotients by a formula on flat basis tensors.

    The formula is evaluated on every flat basis tensor of ``src``; the result
    is accepted only if it is constant on classes (it kills the relations).
    """
    Psrc = src.flat_project
    images = []
    for key in src.flat_keys():
        images.append(dst.reduce(formula(key)))
    cols = []
    for col in src.flat_embed.columns:
        v: Vec = {}
        for i, x in col.items():
            vadd(v, images[i], x)
        cols.append(v)
    D = Matrix(dst.dim, src.dim, tuple(cols))
    for i, img in enumerate(images):
        if D.apply(Psrc.columns[i]) != img:
            raise NotWellDefined(name, flat_tuple(i, src.leaves))
    return D


def leaf_action(space: Space, pos: int, m: Matrix, name: str = "leaf action") -> Matrix:
    """Descend 'apply m to flat leaf pos' to an endomorphism of ``space``."""
    if isinstance(space, Plain):
        return m
    cols = m.columns

    def f(key):
        out: Tensor = {}
        for i, x in cols[key[pos]].items():
            out[key[:pos] + (i,) + key[pos + 1:]] = x
        return out
    return descend(space, space, f, name)


# ---------------------------------------------------------------- corings

@dataclass(eq=False)
class Coring:
    """R-coring on a bimodule ``carrier`` with comultiplication and counit."""

    carrier: Bimodule
    base: FDAlgebra
    comult: Matrix
    counit: Matrix
    name: str = ""

    @cached_property
    def cc(self) -> BalancedTensor:
        return balanced_tensor(self.carrier, self.carrier, self.base)

    @cached_property
    def ccc(self) -> BalancedTensor:
        return balanced_tensor(self.cc.bimodule, self.carrier, self.base)


def check_coring(c: Coring) -> Report:
    rep = Report(c.name or "coring")
    C, R = c.carrier, c.base
    n = C.dim
    if c.comult.shape != (c.cc.dim, n) or c.counit.shape != (R.dim, n):
        rep.record("shapes", (c.comult.shape, c.counit.shape))
        return rep
    ccb = c.cc.bimodule
    Rreg = Bimodule.regular(R)

    def bimod():
        for r in range(R.dim):
            if c.comult @ C.left_action[r] != ccb.left_action[r] @ c.comult:
                return ("left", r)
            if c.comult @ C.right_action[r] != ccb.right_action[r] @ c.comult:
                return ("right", r)
        return None
    rep.run("comult bimodule map", bimod)

    def counit_bimod():
        for r in range(R.dim):
            if c.counit @ C.left_action[r] != Rreg.left_action[r] @ c.counit:
                return ("left", r)
            if c.counit @ C.right_action[r] != Rreg.right_action[r] @ c.counit:
                return ("right", r)
        return None
    rep.run("counit bimodule map", counit_bimod)

    cc, ccc = c.cc, c.ccc
    nl = len(C.space.leaves)

    def coassoc():
        for j in range(n):
            d = cc.lift(c.comult.col(j))
            left: Tensor = {}
            right: Tensor = {}
            for key, x in d.items():
                a, b = key[:nl], key[nl:]
                da = cc.lift(c.comult.apply(C.space.class_of(a)))
                db = cc.lift(c.comult.apply(C.space.class_of(b)))
                tadd(left, outer(da, {b: ONE}), x)
                tadd(right, outer({a: ONE}, db), x)
            if ccc.reduce(left) != ccc.reduce(right):
                return (j,)
        return None
    rep.run("coassociativity", coassoc)

    def counital():
        for j in range(n):
            d = cc.lift(c.comult.col(j))
            left: Vec = {}
            right: Vec = {}
            for key, x in d.items():
                va, vb = C.space.class_of(key[:nl]), C.space.class_of(key[nl:])
                vadd(left, C.act_left(c.counit.apply(va), vb), x)
                vadd(right, C.act_right(va, c.counit.apply(vb)), x)
            if left != {j: ONE}:
                return ("left", j)
            if right != {j: ONE}:
                return ("right", j)
        return None
    rep.run("counitality", counital)
    return rep

"""Acceptance sweep: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed uncaptured) or
``python3 tests/test_acceptance.py`` for the bare list.
"""

import itertools
import time

import pytest
import sympy

from hopfcyc.algebra import BadUnit, Plain, make_algebra
from hopfcyc.bialgebroid import (HopfAlgebra, LeftBialgebroid, algebra_endomorphisms,
                                 check_left_bialgebroid)
from hopfcyc.complexes import build_cocyclic_module_algebra, build_cyclic_module_algebra, phi_identification
from hopfcyc.cyclic import (CocyclicModule, CyclicModule, constant_cocyclic, constant_cyclic, cyclic_dual,
                            cyclic_homology, same_operators, verify_cocyclic, verify_cyclic)
from hopfcyc.galois import ComoduleAlgebra, NotGalois, build_galois, omega, transfer_sayd
from hopfcyc.linalg import ONE, Matrix, fmt
from hopfcyc.sayd import (NotSAYD, canonical_sayd_on_base, check_ayd_left_right, check_stability,
                          coaction_target, trivial_sayd)
from hopfcyc.suites import SUITES, run_example
from hopfcyc.zoo import (REGISTRY, NotModuleAlgebra, adjoint_lr, algebra_example, crossed_product, diagonal,
                         example, group_algebra, k_action_on_crossed, symmetric_group_3, triple_hopf,
                         trivial_hopf, trivial_module_algebra)

R2_UNITS = [(1, 1), (2, 3), (-1, 1), (1, -5)]


def report(n: int, ok: bool, detail: str) -> str:
    return f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.fixture
def say(capsys):
    def emit(line: str):
        with capsys.disabled():
            print("\n" + line)
    return emit


# ---------------------------------------------------------------- 1: axioms + faults

def _first(rep):
    v = rep.first()
    return v.check if v else None


def fault_corpus():
    """(label, intended check, observed first failure)."""
    out = []

    try:
        make_algebra([[{1: 1}, {}], [{}, {}]], {0: 1})
        got = None
    except BadUnit:
        got = "BadUnit"
    out.append(("algebra without a unit", "BadUnit", got))

    Z3 = group_algebra(3)
    bad = HopfAlgebra(Z3.algebra, Z3.comult, Z3.counit, Matrix.identity(3), "Z3 S=id")
    out.append(("Z3 with antipode = id", "antipode", _first(bad.check())))

    comult = list(Z3.comult)
    comult[2] = {(2, 0): ONE, (0, 2): ONE, (0, 0): -ONE}
    bad = HopfAlgebra(Z3.algebra, tuple(comult), Z3.counit, Z3.antipode, "Z3 bad Delta")
    out.append(("Z3 with non-multiplicative Delta", "axiom ii", _first(check_left_bialgebroid(bad.left_bialgebroid))))

    K2 = example("zoo:K2").lefts[0].bialgebroid
    lb = LeftBialgebroid(K2.total, K2.base, K2.source, K2.target, K2.comult, K2.counit.scale(2), "K2 2eps")
    out.append(("K2 with doubled counit", "coring: counitality", _first(check_left_bialgebroid(lb))))

    swap = Matrix.from_rows([[0, 1], [1, 0]])
    try:
        canonical_sayd_on_base(example("zoo:K2").lefts[0], (1, 1), theta=swap)
        got = None
    except NotSAYD as exc:
        got = "AYD" if exc.witness_for("AYD") is not None else exc.check
    out.append(("R2 canonical module with theta = swap", "AYD", got))

    H = group_algebra(2)
    HR = H.as_right
    tgt = coaction_target(HR, Plain(2), (Matrix.identity(2),))
    co = Matrix(tgt.dim, 2, tuple(tgt.reduce({(i, 0): ONE}) for i in range(2)))
    ca = ComoduleAlgebra(HR, H.algebra, co, name="trivial coaction")
    _, Kenv, Tenv, _ = algebra_example(H.algebra, "env").galois_data[0]
    try:
        build_galois(ca, Kenv, Tenv)
        got = None
    except NotGalois as exc:
        got = f"NotGalois deficit {exc.rank_deficit}"
    out.append(("trivial coaction of C[Z2]", "NotGalois deficit 2", got))

    c = constant_cyclic(4)
    tau = list(c.tau)
    tau[2] = tau[2].scale(2)
    rep = verify_cyclic(CyclicModule(c.dims, c.delta, c.sigma, tau))
    out.append(("cyclic module with tau_2 doubled", "τ", "τ" if _first(rep) and "τ" in _first(rep) else _first(rep)))

    cc = constant_cocyclic(3)
    d = [list(x) for x in cc.d]
    d[1][0] = d[1][0].scale(3)
    rep = verify_cocyclic(CocyclicModule(cc.dims, d, cc.s, cc.t))
    out.append(("cocyclic module with d_0 tripled in degree 1", "d_j d_i = d_i d_{j-1}", _first(rep)))

    S3 = symmetric_group_3()
    try:
        k_action_on_crossed(triple_hopf(S3, verify=False), crossed_product(S3, group_algebra(1)))
        got = None
    except NotModuleAlgebra as exc:
        got = exc.witness[0]
    out.append(("crossed product over noncommutative S3", "F not commutative", got))
    return out


def criterion_1(N: int = 4):
    t0 = time.perf_counter()
    failing, bialgebroids, objects = [], 0, 0
    for name in REGISTRY:
        res, _ = run_example(example(name), SUITES, N)
        bialgebroids += len(res["suites"]["bialgebroid"]["objects"])
        objects += sum(len(v["objects"]) for v in res["suites"].values())
        if not res["ok"]:
            failing.append(name)
    faults = fault_corpus()
    wrong = [(label, want, got) for label, want, got in faults if want != got]
    elapsed = time.perf_counter() - t0
    ok = not failing and not wrong and bialgebroids >= 8 and len(faults) >= 5 and elapsed < 60
    detail = (f"{len(REGISTRY)} examples, {bialgebroids} x-Hopf instances, {objects} checked objects, "
              f"{len(faults) - len(wrong)}/{len(faults)} faults caught at the intended check, {elapsed:.1f}s")
    if failing or wrong:
        detail += f"; failing={failing} misfired={wrong}"
    return ok, detail


# ---------------------------------------------------------------- 2: duality

def criterion_2(N: int = 4):
    count, bad = 0, []
    for name in REGISTRY:
        for T, M in example(name).algebra_data:
            cc = build_cocyclic_module_algebra(T, M, N)
            cy = build_cyclic_module_algebra(T, M, N)
            count += 1
            if not same_operators(cyclic_dual(cc), cy):
                bad.append((name, M.name))
    return not bad and count > 0, f"{count} module-algebra data, mismatches {bad}"


# ---------------------------------------------------------------- 3: phi

def criterion_3(N: int = 4):
    C, M = example("zoo:coring-z2").coring_data[0]
    phis, invs, transported, displayed = phi_identification(C.hopf, M, N)
    inv = all((p @ q).is_identity() and (q @ p).is_identity() for p, q in zip(phis, invs))
    same = same_operators(transported, displayed)
    return inv and same, f"n<={N}: two-sided inverses {inv}, transported operators equal displayed {same}"


# ---------------------------------------------------------------- 4: transfer

def criterion_4():
    count, bad = 0, []
    for name in REGISTRY:
        for ca, K, T, Ms in example(name).galois_data:
            ext = build_galois(ca, K, T)
            for M in Ms:
                s = transfer_sayd(ext, M).sayd
                count += 1
                if not (check_ayd_left_right(s.hopf, s.module, s.comodule).ok
                        and check_stability((s.module, s.comodule))):
                    bad.append((name, M.name))
    return not bad and count > 0, f"{count} transferred modules checked independently, failures {bad}"


# ---------------------------------------------------------------- 5: omega

def criterion_5(N: int = 3):
    t0 = time.perf_counter()
    ca, K, T, Ms = example("zoo:crossed-z2").galois_data[0]
    ext = build_galois(ca, K, T)
    results = [omega(ext, M, N, strict=False) for M in Ms]
    ok = all(r.iso and r.chain_map for r in results)
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 120, (f"n<={N}, {len(Ms)} coefficient modules: "
                                  f"{[(r.iso, r.chain_map) for r in results]}, {elapsed:.2f}s")


# ---------------------------------------------------------------- 6: closing remark

GOLDEN_ACTION = ([[1, 0], [0, 1]], [[1, 0], [0, 1]])   # 1 |> -, g |> -
GOLDEN_COACTION = [[1, 0], [0, 0], [0, 0], [0, 1]]      # e0 -> e0(x)e0, e1 -> e1(x)e1


def criterion_6():
    ca, K, T, Ms = example("zoo:closing").galois_data[0]
    ext = build_galois(ca, K, T)
    s = transfer_sayd(ext, Ms[0]).sayd
    acts = tuple(m.to_rows() for m in s.module.action)
    co = s.comodule.coaction.to_rows()
    ad = adjoint_lr(group_algebra(2))
    ok = (acts == GOLDEN_ACTION and co == GOLDEN_COACTION
          and tuple(m.to_rows() for m in ad.module.action) == GOLDEN_ACTION
          and ad.comodule.coaction.to_rows() == GOLDEN_COACTION)
    show = lambda rows: [[fmt(x) for x in r] for r in rows]  # noqa: E731
    return ok, f"action {[show(a) for a in acts]}, coaction rows {show(co)}"


# ---------------------------------------------------------------- 7: homology oracle

def _oracle_operators(table, n):
    """b_n and lambda_n on T^(n+1) straight from structure constants (sympy)."""
    d = len(table)
    src = list(itertools.product(range(d), repeat=n + 1))
    dst = {k: i for i, k in enumerate(itertools.product(range(d), repeat=n))}
    here = {k: i for i, k in enumerate(src)}
    lam = sympy.zeros(len(src), len(src))
    b = sympy.zeros(len(dst), len(src)) if n else None
    for j, t in enumerate(src):
        lam[here[(t[n],) + t[:n]], j] += (-1) ** n
        if not n:
            continue
        for i in range(n + 1):
            if i < n:
                pre, (x, y), post = t[:i], t[i:i + 2], t[i + 2:]
                for p, c in table[x][y].items():
                    b[dst[pre + (p,) + post], j] += (-1) ** i * sympy.Rational(c.numerator, c.denominator)
            else:
                for p, c in table[t[n]][t[0]].items():
                    b[dst[(p,) + t[1:n]], j] += (-1) ** n * sympy.Rational(c.numerator, c.denominator)
    return b, lam


def oracle_connes(table, top: int):
    """HC_n via the quotient complex C_n / (1 - lambda)."""
    ops = [_oracle_operators(table, n) for n in range(top + 2)]
    one_minus = [sympy.eye(l.shape[0]) - l for _, l in ops]
    rk = [m.rank() for m in one_minus]

    def bbar(n):
        if n == 0:
            return 0
        b = ops[n][0]
        return b.row_join(one_minus[n - 1]).rank() - rk[n - 1]
    return [ops[n][1].shape[0] - rk[n] - bbar(n) - bbar(n + 1) for n in range(top + 1)]


def oracle_bicomplex(table, top: int):
    """HC_n as homology of the b / -b' total complex, assembled from scratch."""
    ops = [_oracle_operators(table, n) for n in range(top + 2)]
    dims = [l.shape[0] for _, l in ops]

    def bprime(n):
        b = ops[n][0]
        last = _face_last(table, n)
        return b - (-1) ** n * last

    def norm(n):
        lam = ops[n][1]
        acc, p = sympy.eye(dims[n]), sympy.eye(dims[n])
        for _ in range(n):
            p = lam * p
            acc += p
        return acc

    def tot(n):  # Tot_n -> Tot_{n-1}
        src = [dims[n - p] for p in range(n + 1)]
        dst = [dims[n - 1 - p] for p in range(n)]
        D = sympy.zeros(sum(dst), sum(src))
        so = [sum(src[:p]) for p in range(n + 1)]
        do = [sum(dst[:p]) for p in range(n)]
        for p in range(n + 1):
            q = n - p
            if q >= 1:
                blk = ops[q][0] if p % 2 == 0 else -bprime(q)
                D[do[p]:do[p] + blk.shape[0], so[p]:so[p] + blk.shape[1]] = blk
            if p >= 1:
                blk = (sympy.eye(dims[q]) - ops[q][1]) if p % 2 else norm(q)
                D[do[p - 1]:do[p - 1] + blk.shape[0], so[p]:so[p] + blk.shape[1]] += blk
        return D

    ranks = {m: tot(m).rank() for m in range(1, top + 2)}
    ranks[0] = 0
    return [sum(dims[n - p] for p in range(n + 1)) - ranks[n] - ranks[n + 1] for n in range(top + 1)]


def _face_last(table, n):
    d = len(table)
    src = list(itertools.product(range(d), repeat=n + 1))
    dst = {k: i for i, k in enumerate(itertools.product(range(d), repeat=n))}
    m = sympy.zeros(len(dst), len(src))
    for j, t in enumerate(src):
        for p, c in table[t[n]][t[0]].items():
            m[dst[(p,) + t[1:n]], j] += sympy.Rational(c.numerator, c.denominator)
    return m


def criterion_7(N: int = 4):
    T, M = example("zoo:trivial").algebra_data[0]
    table = T.algebra.table
    connes = oracle_connes(table, 2)
    bic = oracle_bicomplex(table, 2)
    lib = cyclic_homology(build_cyclic_module_algebra(T, M, N)).as_list()[:3]
    ok = connes == bic == lib == [1, 0, 1]
    return ok, f"truncation {N}: oracle quotient complex {connes}, oracle total complex {bic}, library {lib}"


# ---------------------------------------------------------------- 8: boundary of the canonical construction

def criterion_8():
    x = example("zoo:K2").lefts[0]
    R2 = diagonal(2)
    good = []
    for u in R2_UNITS:
        try:
            canonical_sayd_on_base(x, u)
            good.append(True)
        except NotSAYD:
            good.append(False)
    witnesses = []
    for theta in (t for t in algebra_endomorphisms(R2) if not t.is_identity()):
        try:
            canonical_sayd_on_base(x, (2, 3), theta=theta)
            witnesses.append(None)
        except NotSAYD as exc:
            witnesses.append(exc.witness_for("AYD"))
    ok = all(good) and len(witnesses) == 3 and all(w is not None for w in witnesses)
    return ok, f"theta=Id on {len(good)} units: {good}; non-identity endomorphisms AYD witnesses {witnesses}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, say):
    ok, detail = CRITERIA[n - 1]()
    say(report(n, ok, detail))
    assert ok, detail


@pytest.mark.parametrize("T", [group_algebra(2).algebra, group_algebra(3).algebra, diagonal(2)],
                         ids=lambda T: T.name)
def test_oracle_agrees_beyond_trivial(T):
    K = trivial_hopf().as_left
    lib = cyclic_homology(build_cyclic_module_algebra(trivial_module_algebra(K, T), trivial_sayd(K), 3)).as_list()
    assert oracle_connes(T.table, 2) == oracle_bicomplex(T.table, 2) == lib == [T.dim, 0, T.dim]


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        print(report(i, *fn()))

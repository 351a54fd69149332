"""Cyclic and cocyclic modules as degree-indexed operator families.

A cocyclic module stores, for each degree n <= N, the cofaces d[n][i]: C^n -> C^{n+1}
(only for n < N), the codegeneracies s[n][i]: C^n -> C^{n-1} and the cyclic map t[n].
Cyclic modules mirror this with faces, degeneracies and tau.  Matrices act on column
vectors, so ``a @ b`` means "apply b, then a".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import Matrix, rank
from .report import Report


class NotVerified(ValueError):
    """Raised when an operator family fails its relation sweep."""

    def __init__(self, report: Report):
        self.report = report
        super().__init__(f"{report.subject}: first failure {report.first()}")


class DegreeTooHigh(ValueError):
    pass


def _check_shape(m: Matrix, rows: int, cols: int, what: str) -> None:
    if m.shape != (rows, cols):
        raise ValueError(f"{what}: expected {rows}x{cols}, got {m.rows}x{m.cols}")


@dataclass(eq=False)
class CocyclicModule:
    dims: tuple
    d: tuple  # d[n] = (d_0..d_{n+1}) on C^n, n < N
    s: tuple  # s[n] = (s_0..s_{n-1}) on C^n
    t: tuple
    name: str = "cocyclic"

    def __post_init__(self):
        self.dims = tuple(self.dims)
        self.d = tuple(tuple(x) for x in self.d)
        self.s = tuple(tuple(x) for x in self.s)
        self.t = tuple(self.t)
        N = self.max_degree
        if len(self.d) != N or len(self.s) != N + 1 or len(self.t) != N + 1:
            raise ValueError("operator lists do not match max_degree")
        for n in range(N + 1):
            _check_shape(self.t[n], self.dims[n], self.dims[n], f"t in degree {n}")
            if len(self.s[n]) != n:
                raise ValueError(f"degree {n} needs {n} codegeneracies")
            for i, m in enumerate(self.s[n]):
                _check_shape(m, self.dims[n - 1], self.dims[n], f"s_{i} in degree {n}")
            if n < N:
                if len(self.d[n]) != n + 2:
                    raise ValueError(f"degree {n} needs {n + 2} cofaces")
                for i, m in enumerate(self.d[n]):
                    _check_shape(m, self.dims[n + 1], self.dims[n], f"d_{i} in degree {n}")

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def truncate(self, n: int) -> "CocyclicModule":
        return CocyclicModule(self.dims[: n + 1], self.d[:n], self.s[: n + 1], self.t[: n + 1], self.name)


@dataclass(eq=False)
class CyclicModule:
    dims: tuple
    delta: tuple  # delta[n] = (δ_0..δ_n) on C_n, empty for n = 0
    sigma: tuple  # sigma[n] = (σ_0..σ_n) on C_n, n < N
    tau: tuple
    name: str = "cyclic"

    def __post_init__(self):
        self.dims = tuple(self.dims)
        self.delta = tuple(tuple(x) for x in self.delta)
        self.sigma = tuple(tuple(x) for x in self.sigma)
        self.tau = tuple(self.tau)
        N = self.max_degree
        if len(self.sigma) != N or len(self.delta) != N + 1 or len(self.tau) != N + 1:
            raise ValueError("operator lists do not match max_degree")
        for n in range(N + 1):
            _check_shape(self.tau[n], self.dims[n], self.dims[n], f"tau in degree {n}")
            if len(self.delta[n]) != (n + 1 if n else 0):
                raise ValueError(f"degree {n} has the wrong number of faces")
            for i, m in enumerate(self.delta[n]):
                _check_shape(m, self.dims[n - 1], self.dims[n], f"delta_{i} in degree {n}")
            if n < N:
                if len(self.sigma[n]) != n + 1:
                    raise ValueError(f"degree {n} needs {n + 1} degeneracies")
                for i, m in enumerate(self.sigma[n]):
                    _check_shape(m, self.dims[n + 1], self.dims[n], f"sigma_{i} in degree {n}")

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def truncate(self, n: int) -> "CyclicModule":
        return CyclicModule(self.dims[: n + 1], self.delta[: n + 1], self.sigma[:n], self.tau[: n + 1],
                            self.name)

    def b(self, n: int) -> Matrix:
        """Hochschild boundary C_n -> C_{n-1}."""
        return _alt_sum(self.delta[n], self.dims[n - 1], self.dims[n], n + 1)

    def b_prime(self, n: int) -> Matrix:
        return _alt_sum(self.delta[n], self.dims[n - 1], self.dims[n], n)

    def lam(self, n: int) -> Matrix:
        return self.tau[n].scale(-1) if n % 2 else self.tau[n]

    def norm(self, n: int) -> Matrix:
        lam = self.lam(n)
        acc, p = Matrix.identity(self.dims[n]), Matrix.identity(self.dims[n])
        for _ in range(n):
            p = lam @ p
            acc = acc + p
        return acc


def _alt_sum(ops: Sequence[Matrix], rows: int, cols: int, count: int) -> Matrix:
    acc = Matrix.zeros(rows, cols)
    for i in range(count):
        acc = acc + (ops[i] if i % 2 == 0 else -ops[i])
    return acc


def _eq(report: Report, rel: str, degree: int, idx: tuple, lhs: Matrix, rhs: Matrix) -> None:
    report.record(rel, None if lhs == rhs else (degree, idx))


# -- relation sweeps -----------------------------------------------------------------

def verify_cocyclic(c: CocyclicModule) -> Report:
    """Check every cosimplicial and cocyclic relation instance as a matrix identity.

    Violations carry the relation name and the witness ``(degree, indices)`` where
    degree is the source degree of both composites.
    """
    rep = Report(c.name)
    N, d, s, t = c.max_degree, c.d, c.s, c.t
    for n in range(N + 1):
        if n + 2 <= N:
            for j in range(n + 3):
                for i in range(j):
                    _eq(rep, "d_j d_i = d_i d_{j-1}", n, (i, j), d[n + 1][j] @ d[n][i], d[n + 1][i] @ d[n][j - 1])
        for j in range(n - 1):
            for i in range(j + 1):
                _eq(rep, "s_j s_i = s_i s_{j+1}", n, (i, j), s[n - 1][j] @ s[n][i], s[n - 1][i] @ s[n][j + 1])
        if n < N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = s[n + 1][j] @ d[n][i]
                    if i < j:
                        rhs = d[n - 1][i] @ s[n][j - 1]
                    elif i in (j, j + 1):
                        rhs = Matrix.identity(c.dims[n])
                    else:
                        rhs = d[n - 1][i - 1] @ s[n][j]
                    _eq(rep, "s_j d_i", n, (i, j), lhs, rhs)
            for i in range(1, n + 2):
                _eq(rep, "t d_i = d_{i-1} t", n, (i,), t[n + 1] @ d[n][i], d[n][i - 1] @ t[n])
            _eq(rep, "t d_0 = d_{n+1}", n, (0,), t[n + 1] @ d[n][0], d[n][n + 1])
        if n >= 1:
            for i in range(1, n):
                _eq(rep, "t s_i = s_{i-1} t", n, (i,), t[n - 1] @ s[n][i], s[n][i - 1] @ t[n])
            _eq(rep, "t s_0 = s_n t^2", n, (0,), t[n - 1] @ s[n][0], s[n][n - 1] @ t[n] @ t[n])
        rep.record("t^{n+1} = Id", None if t[n].power(n + 1).is_identity() else (n, ()))
    return rep


def verify_cyclic(c: CyclicModule) -> Report:
    rep = Report(c.name)
    N, dl, sg, tau = c.max_degree, c.delta, c.sigma, c.tau
    for n in range(N + 1):
        for j in range(n + 1):
            for i in range(j):
                if n >= 2:
                    _eq(rep, "δ_i δ_j = δ_{j-1} δ_i", n, (i, j), dl[n - 1][i] @ dl[n][j], dl[n - 1][j - 1] @ dl[n][i])
        if n + 1 < N:
            for j in range(n + 1):
                for i in range(j + 1):
                    _eq(rep, "σ_i σ_j = σ_{j+1} σ_i", n, (i, j), sg[n + 1][i] @ sg[n][j], sg[n + 1][j + 1] @ sg[n][i])
        if n < N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = dl[n + 1][i] @ sg[n][j]
                    if i < j:
                        rhs = sg[n - 1][j - 1] @ dl[n][i]
                    elif i in (j, j + 1):
                        rhs = Matrix.identity(c.dims[n])
                    else:
                        rhs = sg[n - 1][j] @ dl[n][i - 1]
                    _eq(rep, "δ_i σ_j", n, (i, j), lhs, rhs)
            for i in range(1, n + 1):
                _eq(rep, "σ_i τ = τ σ_{i-1}", n, (i,), sg[n][i] @ tau[n], tau[n + 1] @ sg[n][i - 1])
            _eq(rep, "σ_0 τ = τ^2 σ_n", n, (0,), sg[n][0] @ tau[n], tau[n + 1] @ tau[n + 1] @ sg[n][n])
        if n >= 1:
            for i in range(1, n + 1):
                _eq(rep, "δ_i τ = τ δ_{i-1}", n, (i,), dl[n][i] @ tau[n], tau[n - 1] @ dl[n][i - 1])
            _eq(rep, "δ_0 τ = δ_n", n, (0,), dl[n][0] @ tau[n], dl[n][n])
        rep.record("τ^{n+1} = Id", None if tau[n].power(n + 1).is_identity() else (n, ()))
    return rep


# -- duality -------------------------------------------------------------------------

def cyclic_dual(c: CocyclicModule, verify: bool = True) -> CyclicModule:
    """Cyclic dual: δ_i = s_i (i<n), δ_n = s_0 t^{-1}, σ_i = d_{i+1}, τ = t^{-1}.

    t^{-1} is taken as t^n in degree n.
    """
    if verify:
        rep = verify_cocyclic(c)
        if rep:
            raise NotVerified(rep)
    N = c.max_degree
    tau = [c.t[n].power(n) if n else c.t[0] for n in range(N + 1)]
    delta = [()]
    for n in range(1, N + 1):
        delta.append(tuple(c.s[n]) + (c.s[n][0] @ tau[n],))
    sigma = [tuple(c.d[n][i + 1] for i in range(n + 1)) for n in range(N)]
    return CyclicModule(c.dims, delta, sigma, tau, name=f"dual({c.name})")


def cocyclic_from_cyclic(c: CyclicModule, verify: bool = True) -> CocyclicModule:
    """Cocyclic dual: d_0 = τσ_n, d_i = σ_{i-1}, s_i = δ_i (i<n), t = τ^{-1}."""
    if verify:
        rep = verify_cyclic(c)
        if rep:
            raise NotVerified(rep)
    N = c.max_degree
    t = [c.tau[n].power(n) if n else c.tau[0] for n in range(N + 1)]
    d = [(c.tau[n + 1] @ c.sigma[n][n],) + tuple(c.sigma[n]) for n in range(N)]
    s = [tuple(c.delta[n][:n]) for n in range(N + 1)]
    return CocyclicModule(c.dims, d, s, t, name=f"codual({c.name})")


def same_operators(a, b) -> bool:
    """Matrix-for-matrix equality of two operator families of the same kind."""
    if type(a) is not type(b) or a.dims != b.dims:
        return False
    if isinstance(a, CocyclicModule):
        return a.d == b.d and a.s == b.s and a.t == b.t
    return a.delta == b.delta and a.sigma == b.sigma and a.tau == b.tau


# -- homology ------------------------------------------------------------------------

@dataclass
class HomologyTable:
    dims: dict = field(default_factory=dict)
    valid_up_to: int = 0

    def __getitem__(self, n: int) -> int:
        return self.dims[n]

    def as_list(self) -> list[int]:
        return [self.dims[n] for n in range(self.valid_up_to + 1)]

    def to_json(self) -> dict:
        return {"HC": {str(n): v for n, v in sorted(self.dims.items())}, "valid_up_to": self.valid_up_to}

    def text(self) -> str:
        rows = [("n", "dim HC_n")] + [(str(n), str(v)) for n, v in sorted(self.dims.items())]
        w = max(len(r[0]) for r in rows)
        return "\n".join(f"{a:>{w}}  {b}" for a, b in rows)


def total_differential(c: CyclicModule, n: int) -> Matrix:
    """Differential Tot_n -> Tot_{n-1} of the b / -b' bicomplex.

    Tot_n = ⊕_{p=0..n} C_{n-p}, column p first.  Even columns carry b, odd columns -b';
    horizontal maps are 1-λ (odd to even) and N (even to odd).
    """
    src = [c.dims[n - p] for p in range(n + 1)]
    dst = [c.dims[n - 1 - p] for p in range(n)]
    src_off = [sum(src[:p]) for p in range(n + 1)]
    dst_off = [sum(dst[:p]) for p in range(n)]
    cols: list[dict] = [dict() for _ in range(sum(src))]

    def place(block: Matrix, p_src: int, p_dst: int):
        for j in range(block.cols):
            col = cols[src_off[p_src] + j]
            for i, v in block.col(j).items():
                k = dst_off[p_dst] + i
                col[k] = col.get(k, 0) + v

    for p in range(n + 1):
        q = n - p
        if q >= 1:
            place(c.b(q) if p % 2 == 0 else -c.b_prime(q), p, p)
        if p >= 1:
            one = Matrix.identity(c.dims[q])
            place(one - c.lam(q) if p % 2 else c.norm(q), p, p - 1)
    return Matrix.from_columns(sum(dst), [{k: v for k, v in col.items() if v} for col in cols])


def cyclic_homology(c: CyclicModule, up_to: int | None = None, verify: bool = True) -> HomologyTable:
    N = c.max_degree
    if up_to is None:
        up_to = N - 1
    if up_to > N - 1 or up_to < 0:
        raise DegreeTooHigh(f"HC_{up_to} needs degree {up_to + 1}, module stops at {N}")
    if verify:
        rep = verify_cyclic(c.truncate(up_to + 1))
        if rep:
            raise NotVerified(rep)
    ranks = {m: rank(total_differential(c, m)) for m in range(1, up_to + 2)}
    ranks[0] = 0
    out = {}
    for n in range(up_to + 1):
        tot = sum(c.dims[n - p] for p in range(n + 1))
        out[n] = tot - ranks[n] - ranks[n + 1]
    return HomologyTable(out, up_to)


def constant_cocyclic(N: int, dim: int = 1) -> CocyclicModule:
    """C^n = k^dim with every operator the identity."""
    one = Matrix.identity(dim)
    return CocyclicModule([dim] * (N + 1), [[one] * (n + 2) for n in range(N)],
                          [[one] * n for n in range(N + 1)], [one] * (N + 1), name="constant")


def constant_cyclic(N: int, dim: int = 1) -> CyclicModule:
    one = Matrix.identity(dim)
    return CyclicModule([dim] * (N + 1), [[one] * (n + 1) if n else [] for n in range(N + 1)],
                        [[one] * (n + 1) for n in range(N)], [one] * (N + 1), name="constant")

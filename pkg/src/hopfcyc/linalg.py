"""Exact rational linear algebra.

Vectors are sparse dicts ``{index: Scalar}``; matrices store their columns as
such dicts.  Everything downstream (balanced tensors, descended maps, homology
ranks) goes through :func:`rref` and the incremental :class:`Echelon`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = None

Vec = dict  # {int: Scalar}


def scalar(x) -> "Scalar":
    """Coerce ints, Fractions, ``"p/q"`` strings and mpq values to a Scalar."""
    if _mpq is None:
        return Fraction(x)
    if isinstance(x, Fraction):
        return _mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    return _mpq(x)


Scalar = type(scalar(0))
ZERO = scalar(0)
ONE = scalar(1)


def fmt(x) -> str:
    """Canonical ``"p/q"`` text (``"p"`` when integral)."""
    x = scalar(x)
    n, d = int(x.numerator), int(x.denominator)
    return str(n) if d == 1 else f"{n}/{d}"


def parse(s) -> "Scalar":
    if isinstance(s, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(s, int):
        return scalar(s)
    if not isinstance(s, str):
        raise TypeError(f"expected 'p/q' string, got {type(s).__name__}")
    num, sep, den = s.strip().partition("/")
    if not sep:
        return scalar(int(num))
    d = int(den)
    if d == 0:
        raise ZeroDivisionError(s)
    return scalar(Fraction(int(num), d))


class NoSolution(ValueError):
    """Raised by :func:`solve` on an inconsistent system."""


# ---------------------------------------------------------------- vectors

def vadd(acc: Vec, v: Mapping, c=ONE) -> Vec:
    """acc += c*v, in place, dropping zeros."""
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vscale(v: Mapping, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vsub(u: Mapping, v: Mapping) -> Vec:
    return vadd(dict(u), v, -ONE)


def clean(v: Mapping) -> Vec:
    return {k: scalar(x) for k, x in v.items() if x}


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True, eq=False)
class Matrix:
    """rows x cols matrix with sparse column storage (treat as immutable)."""

    rows: int
    cols: int
    columns: tuple

    # construction ---------------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, tuple({} for _ in range(cols)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple({i: ONE} for i in range(n)))

    @staticmethod
    def from_rows(rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else (ncols or 0)
        cols = [dict() for _ in range(c)]
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                x = scalar(x)
                if x:
                    cols[j][i] = x
        return Matrix(r, c, tuple(cols))

    @staticmethod
    def from_columns(rows: int, cols: Iterable[Mapping]) -> "Matrix":
        cs = tuple(clean(c) for c in cols)
        for c in cs:
            if any(not 0 <= k < rows for k in c):
                raise IndexError("column entry out of range")
        return Matrix(rows, len(cs), cs)

    @staticmethod
    def from_entries(rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValueError("entries length must be rows*cols")
        return Matrix.from_rows([entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    # views ------------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        out = [ZERO] * (self.rows * self.cols)
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                out[i * self.cols + j] = x
        return tuple(out)

    def to_rows(self) -> list[list]:
        e = self.entries
        return [list(e[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def row_dicts(self) -> list[Vec]:
        rs = [dict() for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                rs[i][j] = x
        return rs

    def col(self, j: int) -> Vec:
        return self.columns[j]

    def __getitem__(self, ij) -> "Scalar":
        i, j = ij
        return self.columns[j].get(i, ZERO)

    # algebra ----------------------------------------------------------------
    def apply(self, v: Mapping) -> Vec:
        out: Vec = {}
        for j, x in v.items():
            if x:
                vadd(out, self.columns[j], x)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix(self.rows, self.cols,
                      tuple(vadd(dict(a), b) for a, b in zip(self.columns, other.columns)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix(self.rows, self.cols,
                      tuple(vsub(a, b) for a, b in zip(self.columns, other.columns)))

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, tuple(vscale(a, c) for a in self.columns))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.row_dicts()))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; index (i, k) -> i*other.rows + k."""
        r2 = other.rows
        cols = []
        for a in self.columns:
            for b in other.columns:
                cols.append({i * r2 + k: x * y for i, x in a.items() for k, y in b.items()})
        return Matrix(self.rows * r2, self.cols * other.cols, tuple(cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix(self.rows, self.cols + other.cols, self.columns + other.columns)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        r = self.rows
        cols = tuple({**a, **{i + r: x for i, x in b.items()}}
                     for a, b in zip(self.columns, other.columns))
        return Matrix(r + other.rows, self.cols, cols)

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = self @ out
        return out

    def _same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # predicates -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self.columns, other.columns))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return not any(self.columns)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            c == {j: ONE} for j, c in enumerate(self.columns))

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def first_difference(self, other: "Matrix"):
        """Index (i, j) of the first entry that differs, or None."""
        self._same(other)
        for j, (a, b) in enumerate(zip(self.columns, other.columns)):
            if a != b:
                d = vsub(a, b)
                return (min(d), j)
        return None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.to_rows())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------- echelon

class Echelon:
    """Incrementally maintained fully reduced row-echelon basis.

    ``rows`` maps pivot column -> row (pivot entry 1, zero in every other
    pivot column).  The canonical RREF is the rows sorted by pivot.
    """

    __slots__ = ("rows", "_by_col")

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict[int, Vec] = {}
        # column -> set of pivots whose row has an entry in that column
        self._by_col: dict[int, set] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: Mapping) -> Vec:
        """Remainder of v modulo the span (zero iff v lies in the span)."""
        w = dict(v)
        for p in [k for k in w if k in self.rows]:
            c = w.get(p)
            if c:
                vadd(w, self.rows[p], -c)
        return w

    def add(self, v: Mapping) -> bool:
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        if inv != 1:
            w = {k: x * inv for k, x in w.items()}
        # clear column p from existing rows
        for q in list(self._by_col.get(p, ())):
            row = self.rows[q]
            c = row.get(p)
            if not c:
                continue
            old = set(row)
            vadd(row, w, -c)
            for k in old - set(row):
                self._by_col[k].discard(q)
            for k in set(row) - old:
                self._by_col.setdefault(k, set()).add(q)
        self.rows[p] = w
        for k in w:
            self._by_col.setdefault(k, set()).add(p)
        return True

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[Vec]:
        return [self.rows[p] for p in self.pivots]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Unique reduced row-echelon form and pivot columns."""
    e = Echelon(m.row_dicts())
    piv = e.pivots
    out = [dict() for _ in range(m.cols)]
    for i, p in enumerate(piv):
        for j, x in e.rows[p].items():
            out[j][i] = x
    return Matrix(m.rows, m.cols, tuple(out)), piv


def rank(m: Matrix) -> int:
    # fewer, longer vectors reduce faster
    vecs = m.columns if m.cols <= m.rows else m.row_dicts()
    return len(Echelon(v for v in vecs if v))


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of Q^ambient_dim with canonical RREF basis."""

    ambient_dim: int
    basis: tuple  # tuple of Vec, pivots strictly increasing
    pivots: tuple

    @staticmethod
    def span(vectors: Iterable[Mapping], ambient_dim: int) -> "Subspace":
        e = Echelon(vectors)
        return Subspace._from_echelon(e, ambient_dim)

    @staticmethod
    def _from_echelon(e: Echelon, ambient_dim: int) -> "Subspace":
        piv = tuple(e.pivots)
        return Subspace(ambient_dim, tuple(e.rows[p] for p in piv), piv)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def reduce(self, v: Mapping) -> Vec:
        w = dict(v)
        for p, row in zip(self.pivots, self.basis):
            c = w.get(p)
            if c:
                vadd(w, row, -c)
        return w

    def basis_matrix(self) -> Matrix:
        """Basis vectors as rows."""
        cols = [dict() for _ in range(self.ambient_dim)]
        for i, row in enumerate(self.basis):
            for j, x in row.items():
                cols[j][i] = x
        return Matrix(self.dim, self.ambient_dim, tuple(cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and all(a == b for a, b in zip(self.basis, other.basis)))

    __hash__ = None


def span(vectors: Iterable[Mapping], ambient_dim: int) -> Subspace:
    return Subspace.span(vectors, ambient_dim)


def kernel(m: Matrix) -> Subspace:
    """Canonical (RREF) basis of the null space of m."""
    r, piv = rref(m)
    rows = r.row_dicts()
    pivset = set(piv)
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: ONE}
        for i, p in enumerate(piv):
            x = rows[i].get(f)
            if x:
                v[p] = -x
        vecs.append(v)
    return Subspace.span(vecs, m.cols)


def image(m: Matrix) -> Subspace:
    return Subspace.span((c for c in m.columns if c), m.rows)


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Particular solution of a x = b with free variables set to 0."""
    if a.rows != b.rows:
        raise ValueError("a.rows must equal b.rows")
    n = a.cols
    aug = a.hstack(b)
    e = Echelon(aug.row_dicts())
    out = [dict() for _ in range(b.cols)]
    for p, row in e.rows.items():
        if p >= n:
            raise NoSolution(f"inconsistent system (pivot in column {p - n} of b)")
        for j, x in row.items():
            if j >= n:
                out[j - n][p] = x
    return Matrix(n, b.cols, tuple(out))


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NoSolution(f"non-square {m.shape} matrix has no two-sided inverse")
    x = solve(m, Matrix.identity(m.rows))
    if not (m @ x).is_identity():
        raise NoSolution("singular matrix")
    return x


def quotient(ambient_dim: int, relations: Subspace) -> tuple[Matrix, Matrix]:
    """Projection onto the RREF complement and its section.

    Quotient coordinates are the non-pivot coordinates of the ambient space;
    a vector is reduced modulo ``relations`` and its free coordinates read off.
    """
    if relations.ambient_dim != ambient_dim:
        raise ValueError("relations live in a different ambient space")
    pivset = set(relations.pivots)
    free = [j for j in range(ambient_dim) if j not in pivset]
    where = {j: q for q, j in enumerate(free)}
    d = len(free)
    row_of = dict(zip(relations.pivots, relations.basis))
    proj_cols = []
    for j in range(ambient_dim):
        if j in where:
            proj_cols.append({where[j]: ONE})
        else:
            # e_j = row_j - (row_j - e_j); row_j is a relation
            row = row_of[j]
            proj_cols.append({where[k]: -x for k, x in row.items() if k != j})
    section = Matrix(ambient_dim, d, tuple({j: ONE} for j in free))
    return Matrix(d, ambient_dim, tuple(proj_cols)), section

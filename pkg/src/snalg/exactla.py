"""Exact scalars and dense linear algebra over Q and prime fields.

Scalars are plain Python values: `Fraction` over the rationals, `int` in
[0, p) over a prime field.  In both representations a scalar is falsy
exactly when it is zero, which the elimination routines rely on.

The workhorses are `DenseMatrix` (rank, nullspace, solve via exact Gaussian
elimination, plus a fraction-free Bareiss rank for cross-checking) and
`SpanBasis` (an incrementally maintained reduced echelon basis of a
subspace, supporting membership, equality, sums and intersection
dimensions).  `min_dependency` finds the first linear dependency in a
vector sequence, the engine behind minimal polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, isqrt
from typing import Iterable, Optional, Sequence

__all__ = [
    "QQ",
    "GF",
    "RationalField",
    "PrimeField",
    "DenseMatrix",
    "SpanBasis",
    "ExtendRequired",
    "min_dependency",
    "rank",
    "nullspace",
    "solve",
    "span_insert",
    "span_contains",
    "span_equal",
    "span_sum_rank",
    "span_intersection_dim",
    "require_invertible_factorial",
]


class RationalField:
    """The field of rationals; scalars are `Fraction` values."""

    characteristic = 0
    name = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def normalize(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def inv(self, x: Fraction) -> Fraction:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / self.normalize(x)

    def scalar_str(self, x: Fraction) -> str:
        x = self.normalize(x)
        return f"{x.numerator}/{x.denominator}"

    def scalar_from_str(self, s: str) -> Fraction:
        return Fraction(s)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")


class PrimeField:
    """The field of integers mod a prime p; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    zero = 0
    one = 1

    def normalize(self, x) -> int:
        if isinstance(x, Fraction):
            return self.normalize(x.numerator) * self.inv(x.denominator % self.p) % self.p
        return int(x) % self.p

    def from_int(self, k: int) -> int:
        return k % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def scalar_str(self, x: int) -> str:
        return str(x % self.p)

    def scalar_from_str(self, s: str) -> int:
        if "/" in s:
            num, den = s.split("/")
            return self.normalize(Fraction(int(num), int(den)))
        return int(s) % self.p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def require_invertible_factorial(field, n: int) -> None:
    """Raise unless n! is invertible in the field."""
    p = field.characteristic
    if p and gcd(factorial(n), p) != 1:
        raise ValueError(f"modulus {p} divides {n}!")


def _axpy(field, dst: list, src: Sequence, c) -> None:
    """dst += c * src, in place."""
    p = field.characteristic
    if p == 0:
        for j, s in enumerate(src):
            if s:
                dst[j] += c * s
    else:
        for j, s in enumerate(src):
            if s:
                dst[j] = (dst[j] + c * s) % p


def _scale(field, row: list, c) -> None:
    p = field.characteristic
    if p == 0:
        for j, x in enumerate(row):
            if x:
                row[j] = x * c
    else:
        for j, x in enumerate(row):
            if x:
                row[j] = x * c % p


def _pivot_weight(x) -> int:
    """Bit size of a rational, for the smallest-pivot heuristic."""
    return x.numerator.bit_length() + x.denominator.bit_length()


class DenseMatrix:
    """A dense matrix over an exact field; rows of scalars."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows: Iterable[Iterable], ncols: Optional[int] = None):
        self.field = field
        self.rows = [[field.normalize(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols disagrees with row length")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit ncols")
            self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "DenseMatrix":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n: int) -> "DenseMatrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def _rref(self, rows: list[list], limit_cols: Optional[int] = None,
              pivot_heuristic: bool = False) -> list[int]:
        """Reduce `rows` in place to reduced row echelon form; return pivot
        columns.  Columns at `limit_cols` and beyond never host pivots (used
        for augmented solves)."""
        field = self.field
        ncols = len(rows[0]) if rows else 0
        stop = ncols if limit_cols is None else limit_cols
        pivots = []
        r = 0
        for col in range(stop):
            if r == len(rows):
                break
            best = -1
            if pivot_heuristic and field.characteristic == 0:
                weight = None
                for i in range(r, len(rows)):
                    x = rows[i][col]
                    if x:
                        wt = _pivot_weight(x)
                        if weight is None or wt < weight:
                            weight, best = wt, i
            else:
                for i in range(r, len(rows)):
                    if rows[i][col]:
                        best = i
                        break
            if best < 0:
                continue
            rows[r], rows[best] = rows[best], rows[r]
            piv = rows[r]
            c = piv[col]
            if c != field.one:
                _scale(field, piv, field.inv(c))
            for i, row in enumerate(rows):
                if i != r and row[col]:
                    _axpy(field, row, piv, -row[col] if field.characteristic == 0
                          else field.p - row[col])
            pivots.append(col)
            r += 1
        return pivots

    def rref(self, pivot_heuristic: bool = False) -> tuple["DenseMatrix", list[int]]:
        rows = [row[:] for row in self.rows]
        pivots = self._rref(rows, pivot_heuristic=pivot_heuristic)
        out = DenseMatrix.zeros(self.field, 0, self.ncols)
        out.rows = rows
        out.nrows = len(rows)
        return out, pivots

    def rank(self, pivot_heuristic: bool = False) -> int:
        rows = [row[:] for row in self.rows]
        return len(self._rref(rows, pivot_heuristic=pivot_heuristic))

    def rank_bareiss(self) -> int:
        """Fraction-free rank for cross-checking; rationals only."""
        if self.field.characteristic != 0:
            raise ValueError("Bareiss backend is for the rational field")
        rows = []
        for row in self.rows:
            den = 1
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
            rows.append([int(x * den) for x in row])
        r = 0
        prev = 1
        for col in range(self.ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][col]), -1)
            if piv < 0:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pv = rows[r][col]
            for i in range(r + 1, len(rows)):
                ri, rr = rows[i], rows[r]
                ci = ri[col]
                for j in range(col, self.ncols):
                    q, rem = divmod(pv * ri[j] - ci * rr[j], prev)
                    assert rem == 0, "Bareiss division not exact"
                    ri[j] = q
            prev = pv
            r += 1
            if r == len(rows):
                break
        return r

    def nullspace(self) -> list[list]:
        """Basis of {x : self·x = 0}."""
        field = self.field
        rows = [row[:] for row in self.rows]
        pivots = self._rref(rows)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [field.zero] * self.ncols
            vec[free] = field.one
            for i, pc in enumerate(pivots):
                x = rows[i][free]
                if x:
                    vec[pc] = field.normalize(-x)
            basis.append(vec)
        return basis

    def solve(self, rhs: Sequence) -> Optional[list]:
        """Some x with self·x = rhs, or None if inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        field = self.field
        rows = [row[:] + [field.normalize(b)] for row, b in zip(self.rows, rhs)]
        if not rows:
            return [] if self.ncols == 0 else [field.zero] * self.ncols
        pivots = self._rref(rows, limit_cols=self.ncols)
        npiv = len(pivots)
        for row in rows[npiv:]:
            if row[self.ncols]:
                return None
        x = [field.zero] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = rows[i][self.ncols]
        return x

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.ncols:
            raise ValueError("vector length mismatch")
        field = self.field
        out = []
        for row in self.rows:
            acc = field.zero
            for a, b in zip(row, x):
                if a and b:
                    acc += a * b
            out.append(field.normalize(acc))
        return out

    def __repr__(self) -> str:
        return f"DenseMatrix({self.field!r}, {self.nrows}x{self.ncols})"


def rank(m: DenseMatrix) -> int:
    return m.rank()


def nullspace(m: DenseMatrix) -> list[list]:
    return m.nullspace()


def solve(m: DenseMatrix, rhs: Sequence) -> Optional[list]:
    return m.solve(rhs)


class SpanBasis:
    """A subspace kept as a reduced echelon basis.

    Stored rows have pivot entry 1, every other row vanishes at that pivot
    column, and rows are ordered by pivot column.  This is the unique
    reduced echelon basis of the span, so equality of subspaces is equality
    of stored rows.
    """

    __slots__ = ("field", "ambient", "_rows", "_pivots")

    def __init__(self, field, ambient: int):
        self.field = field
        self.ambient = ambient
        self._rows: list[list] = []
        self._pivots: list[int] = []

    def rank(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[list]:
        return [row[:] for row in self._rows]

    @property
    def pivots(self) -> list[int]:
        return self._pivots[:]

    def _reduce(self, v: list) -> list:
        field = self.field
        for row, pc in zip(self._rows, self._pivots):
            c = v[pc]
            if c:
                _axpy(field, v, row,
                      -c if field.characteristic == 0 else field.p - c)
        return v

    def insert(self, v: Sequence) -> bool:
        """Add v to the span; True iff the rank grew."""
        if len(v) != self.ambient:
            raise ValueError(f"vector length {len(v)} != ambient {self.ambient}")
        field = self.field
        v = self._reduce([field.normalize(x) for x in v])
        col = next((j for j, x in enumerate(v) if x), -1)
        if col < 0:
            return False
        c = v[col]
        if c != field.one:
            _scale(field, v, field.inv(c))
        for row in self._rows:
            x = row[col]
            if x:
                _axpy(field, row, v,
                      -x if field.characteristic == 0 else field.p - x)
        at = next((i for i, pc in enumerate(self._pivots) if pc > col),
                  len(self._pivots))
        self._rows.insert(at, v)
        self._pivots.insert(at, col)
        return True

    def insert_all(self, vectors: Iterable[Sequence]) -> int:
        """Insert many vectors; return how much the rank grew."""
        return sum(1 for v in vectors if self.insert(v))

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise ValueError(f"vector length {len(v)} != ambient {self.ambient}")
        v = self._reduce([self.field.normalize(x) for x in v])
        return not any(v)

    def residual(self, v: Sequence) -> list:
        """v reduced modulo the span (zero iff contained)."""
        return self._reduce([self.field.normalize(x) for x in v])

    def copy(self) -> "SpanBasis":
        s = SpanBasis(self.field, self.ambient)
        s._rows = [row[:] for row in self._rows]
        s._pivots = self._pivots[:]
        return s

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpanBasis)
            and self.field == other.field
            and self.ambient == other.ambient
            and self._rows == other._rows
        )

    def __hash__(self):
        return NotImplemented

    def __repr__(self) -> str:
        return f"SpanBasis({self.field!r}, ambient={self.ambient}, rank={self.rank()})"


def span_insert(s: SpanBasis, v: Sequence) -> bool:
    return s.insert(v)


def span_contains(s: SpanBasis, v: Sequence) -> bool:
    return s.contains(v)


def span_equal(s: SpanBasis, t: SpanBasis) -> bool:
    if s.field != t.field or s.ambient != t.ambient:
        raise ValueError("spans live in different ambient spaces")
    return s == t


def span_sum_rank(s: SpanBasis, t: SpanBasis) -> int:
    if s.field != t.field or s.ambient != t.ambient:
        raise ValueError("spans live in different ambient spaces")
    u = s.copy()
    for row in t._rows:
        u.insert(row)
    return u.rank()


def span_intersection_dim(s: SpanBasis, t: SpanBasis) -> int:
    return s.rank() + t.rank() - span_sum_rank(s, t)


class ExtendRequired(Exception):
    """Raised by min_dependency when the given vectors are independent."""


def min_dependency(vectors: Sequence[Sequence], field=QQ) -> list:
    """Coefficients (c_0, ..., c_m) of the first linear dependency
    c_0 v_0 + ... + c_m v_m = 0 with c_m = 1 and m minimal.  Raises
    ExtendRequired if the whole sequence is independent."""
    if not vectors:
        raise ValueError("empty vector sequence")
    ambient = len(vectors[0])
    span = SpanBasis(field, ambient)
    history: list[list] = []  # stored rows' coordinates in the inputs
    for m, v in enumerate(vectors):
        v = [field.normalize(x) for x in v]
        coords = [field.zero] * m + [field.one]
        for row, pc, hist in zip(span._rows, span._pivots, history):
            c = v[pc]
            if c:
                neg = -c if field.characteristic == 0 else field.p - c
                _axpy(field, v, row, neg)
                if len(hist) < len(coords):
                    hist += [field.zero] * (len(coords) - len(hist))
                _axpy(field, coords, hist, neg)
        col = next((j for j, x in enumerate(v) if x), -1)
        if col < 0:
            # invariant: sum_j coords[j] v_j = reduced v = 0, coords[m] = 1
            return coords
        inv = field.inv(v[col])
        if inv != field.one:
            _scale(field, v, inv)
            _scale(field, coords, inv)
        at = next((i for i, pc in enumerate(span._pivots) if pc > col),
                  len(span._pivots))
        span._rows.insert(at, v)
        span._pivots.insert(at, col)
        history.insert(at, coords)
    raise ExtendRequired(f"{len(vectors)} vectors are linearly independent")

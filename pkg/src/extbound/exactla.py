"""Exact dense linear algebra over prime fields GF(p) and the rationals.

Entries are plain Python integers (canonical representatives 0..p-1) for a
prime field, and `fractions.Fraction` values for the rationals.  Everything
is exact; nothing in this package ever rounds.  All routines are pure
functions of their inputs and produce canonical (hence bit-stable) output:
row reduction always pivots on the first nonzero entry, kernel and solution
bases follow the free-variable unit/zero convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Scalar = Union[int, Fraction]


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient fields."""


class DimensionMismatchError(ValueError):
    """Matrix or vector shapes are incompatible."""


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; this witness set is exact for all n < 3.3e24
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime 2 <= p < 2**31, or the rationals."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or not (2 <= self.p < 2**31):
                raise ValueError(f"prime field characteristic out of range: {self.p!r}")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.kind == "rationals":
            if self.p is not None:
                raise ValueError("rationals take no characteristic")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @property
    def zero(self) -> Scalar:
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.kind == "prime" else Fraction(1)

    def coerce(self, value: int | str | Fraction) -> Scalar:
        """Normalize an int, Fraction or decimal/fraction string to an element."""
        if self.kind == "prime":
            if isinstance(value, str):
                value = Fraction(value)
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    value = value.numerator
                else:
                    value = value.numerator * pow(value.denominator, -1, self.p)
            return value % self.p
        if isinstance(value, (str, int)):
            return Fraction(value)
        return value

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return pow(a, -1, self.p) if self.kind == "prime" else 1 / a

    def fmt(self, a: Scalar) -> str:
        """Canonical string form, inverse of coerce on strings."""
        return str(a)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; entries in row-major order over a FieldSpec.

    Zero-row and zero-column matrices are legal and behave as expected under
    multiplication and stacking.
    """

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple = dc_field(default=())

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable]) -> "Matrix":
        data = [[field.coerce(x) for x in row] for row in rows]
        ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged rows")
        return cls(field, len(data), ncols, tuple(x for row in data for x in row))

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not cols:
            if nrows is None:
                raise DimensionMismatchError("from_columns needs nrows when empty")
            return cls.zeros(field, nrows, 0)
        n = len(cols[0])
        if nrows is not None and nrows != n:
            raise DimensionMismatchError(f"columns of length {n}, expected {nrows}")
        if n == 0:
            return cls.zeros(field, 0, len(cols))
        return cls.from_rows(field, [[col[i] for col in cols] for i in range(n)])

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"fields differ: {self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        if self.field.kind == "prime":
            p = self.field.p
            for i in range(n):
                base = i * k
                for j in range(m):
                    out.append(sum(a[base + t] * b[t * m + j] for t in range(k)) % p)
        else:
            zero = Fraction(0)
            for i in range(n):
                base = i * k
                for j in range(m):
                    acc = zero
                    for t in range(k):
                        acc += a[base + t] * b[t * m + j]
                    out.append(acc)
        return Matrix(self.field, n, m, tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch in addition")
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      tuple(add(x, y) for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, tuple(neg(x) for x in self.entries))

    def scale(self, c: Scalar) -> "Matrix":
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, tuple(mul(c, x) for x in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def apply(self, vec: Sequence[Scalar]) -> tuple:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length mismatch")
        mul, add = self.field.mul, self.field.add
        out = []
        for i in range(self.rows):
            acc = self.field.zero
            base = i * self.cols
            for t in range(self.cols):
                acc = add(acc, mul(self.entries[base + t], vec[t]))
            out.append(acc)
        return tuple(out)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise DimensionMismatchError("hstack of nothing")
    rows = mats[0].rows
    fld = mats[0].field
    for m in mats:
        if m.rows != rows:
            raise DimensionMismatchError("hstack row mismatch")
        if m.field != fld:
            raise FieldMismatchError("hstack field mismatch")
    out = []
    for i in range(rows):
        for m in mats:
            out.extend(m.row_list(i))
    return Matrix(fld, rows, sum(m.cols for m in mats), tuple(out))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise DimensionMismatchError("vstack of nothing")
    cols = mats[0].cols
    fld = mats[0].field
    out = []
    for m in mats:
        if m.cols != cols:
            raise DimensionMismatchError("vstack column mismatch")
        if m.field != fld:
            raise FieldMismatchError("vstack field mismatch")
        out.extend(m.entries)
    return Matrix(fld, sum(m.rows for m in mats), cols, tuple(out))


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with the pivot column list and the rank.

    Pivoting always takes the first row with a nonzero entry, so the result
    is a deterministic function of the input.
    """
    fld = m.field
    if fld.kind == "prime":
        work, pivots = _rref_rows_prime([m.row_list(i) for i in range(m.rows)],
                                        m.cols, fld.p)
    else:
        work, pivots = _rref_rows_generic([m.row_list(i) for i in range(m.rows)],
                                          m.cols, fld)
    flat = tuple(x for row in work for x in row)
    return RrefResult(Matrix(fld, m.rows, m.cols, flat), tuple(pivots), len(pivots))


def _rref_rows_prime(work: list[list], cols: int, p: int):
    # tight integer loops; entries stay canonical in [0, p)
    pivots: list[int] = []
    nrows = len(work)
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, nrows):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        row_r = work[r]
        inv = pow(row_r[c], -1, p)
        if inv != 1:
            work[r] = row_r = [x * inv % p for x in row_r]
        tail = row_r[c:]
        for i in range(nrows):
            if i != r:
                f = work[i][c]
                if f:
                    row_i = work[i]
                    row_i[c:] = [(x - f * y) % p for x, y in zip(row_i[c:], tail)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def _rref_rows_generic(work: list[list], cols: int, fld: FieldSpec):
    pivots: list[int] = []
    nrows = len(work)
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = fld.inv(work[r][c])
        if inv != fld.one:
            work[r] = [fld.mul(inv, x) for x in work[r]]
        row_r = work[r]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(work[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> list[tuple]:
    """Canonical basis of the right null space.

    Each free column contributes one basis vector with a unit in that free
    position; pivot coordinates are read off the reduced echelon form.
    """
    red, pivots, _ = rref(m)
    fld = m.field
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [fld.zero] * m.cols
        vec[f] = fld.one
        for row_idx, pc in enumerate(pivots):
            vec[pc] = fld.neg(red.entry(row_idx, f))
        basis.append(tuple(vec))
    return basis


def solve(m: Matrix, b: Sequence[Scalar]) -> tuple | None:
    """One particular solution of m x = b, or None when inconsistent.

    Free variables are set to zero, so the solution is canonical.
    """
    if len(b) != m.rows:
        raise DimensionMismatchError(f"rhs length {len(b)} != {m.rows} rows")
    bcol = Matrix(m.field, m.rows, 1, tuple(m.field.coerce(x) for x in b))
    red, pivots, _ = rref(hstack([m, bcol]))
    if pivots and pivots[-1] == m.cols:
        return None
    fld = m.field
    x = [fld.zero] * m.cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = red.entry(row_idx, m.cols)
    return tuple(x)


def column_space_basis(m: Matrix) -> Matrix:
    """Canonical basis of the column space, returned as the columns of a matrix."""
    red, _, rk = rref(m.transpose())
    cols = [red.row_list(i) for i in range(rk)]
    return Matrix.from_columns(m.field, cols, nrows=m.rows)


def express_in_columns(basis: Matrix, targets: Matrix) -> Matrix | None:
    """Solve basis @ X = targets columnwise; None when some column is outside the span."""
    if basis.rows != targets.rows:
        raise DimensionMismatchError("express_in_columns row mismatch")
    red, pivots, _ = rref(hstack([basis, targets]))
    if any(pc >= basis.cols for pc in pivots):
        return None
    fld = basis.field
    out = [[fld.zero] * targets.cols for _ in range(basis.cols)]
    for row_idx, pc in enumerate(pivots):
        for j in range(targets.cols):
            out[pc][j] = red.entry(row_idx, basis.cols + j)
    return Matrix.from_rows(fld, out) if out else Matrix.zeros(fld, 0, targets.cols)


def inverse(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None when singular."""
    if m.rows != m.cols:
        return None
    red, pivots, _ = rref(hstack([m, Matrix.identity(m.field, m.rows)]))
    if pivots[:m.rows] != tuple(range(m.rows)):
        return None
    return Matrix.from_rows(m.field, [red.row_list(i)[m.cols:] for i in range(m.rows)])

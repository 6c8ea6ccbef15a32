"""Exact integer matrices and polynomials.

Python ints are arbitrary precision, so nothing here can overflow or round.
Determinants use Bareiss fraction-free elimination; characteristic
polynomials use Berkowitz's division-free algorithm.  The two share no code,
which is what makes ``charpoly(M)(0) == determinant(M)`` a useful check.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare

LAMBDA = "λ"


class IntMatrix:
    """Dense row-major integer matrix.  Immutable by convention."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(v) for v in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, (v for r in rows for v in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"

    def __str__(self):
        return render_matrix(self)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, (-a for a in self.entries))

    def __matmul__(self, other):
        return matmul(self, other)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, (c * a for a in self.entries))

    @property
    def T(self):
        return transpose(self)

    def total(self) -> int:
        """Sum of all entries, i.e. ``1^T M 1``."""
        return sum(self.entries)


def identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, (int(i == j) for i in range(n) for j in range(n)))


def zeros(rows: int, cols: int = None) -> IntMatrix:
    cols = rows if cols is None else cols
    return IntMatrix(rows, cols, [0] * (rows * cols))


def all_ones(n: int) -> IntMatrix:
    return IntMatrix(n, n, [1] * (n * n))


def outer(u: Sequence[int], v: Sequence[int]) -> IntMatrix:
    return IntMatrix(len(u), len(v), (a * b for a in u for b in v))


def add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a + b


def sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a - b


def scalar_mul(c: int, a: IntMatrix) -> IntMatrix:
    return a.scale(c)


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(a.cols, a.rows, (a[i, j] for j in range(a.cols) for i in range(a.rows)))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(x * y for x, y in zip(r, c)) for c in bcols)
    return IntMatrix(a.rows, b.cols, out)


def matvec(a: IntMatrix, v: Sequence[int]) -> list:
    if a.cols != len(v):
        raise DimensionMismatch(f"cannot multiply {a.shape} by vector of length {len(v)}")
    return [sum(x * y for x, y in zip(a.row(i), v)) for i in range(a.rows)]


def vecmat(v: Sequence[int], a: IntMatrix) -> list:
    if a.rows != len(v):
        raise DimensionMismatch(f"cannot multiply vector of length {len(v)} by {a.shape}")
    out = [0] * a.cols
    for i, x in enumerate(v):
        if x:
            for j, y in enumerate(a.row(i)):
                if y:
                    out[j] += x * y
    return out


def matpow(a: IntMatrix, k: int) -> IntMatrix:
    _square(a)
    result = identity(a.rows)
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def trace(a: IntMatrix) -> int:
    _square(a)
    return sum(a[i, i] for i in range(a.rows))


def is_zero(a: IntMatrix) -> bool:
    return not any(a.entries)


def is_upper_unitriangular(a: IntMatrix) -> bool:
    _square(a)
    n = a.rows
    return all(a[i, i] == 1 for i in range(n)) and all(a[i, j] == 0 for i in range(n) for j in range(i))


def is_nilpotent(a: IntMatrix) -> bool:
    _square(a)
    return is_zero(matpow(a, a.rows))


def submatrix(a: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
    return IntMatrix(len(rows), len(cols), (a[i, j] for i in rows for j in cols))


def permute(a: IntMatrix, perm: Sequence[int]) -> IntMatrix:
    """Simultaneous row/column permutation ``P^T A P``; entry ``(i, j)`` is ``a[perm[i], perm[j]]``."""
    return submatrix(a, perm, perm)


def _square(a: IntMatrix):
    if not a.is_square:
        raise NotSquare(f"matrix is {a.rows}x{a.cols}, not square")


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    _square(a)
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def berkowitz(a: IntMatrix) -> list:
    """Coefficients of ``det(t I - A)``, highest degree first (monic).

    Peels off the leading row/column: with ``A = [[a, R], [C, B]]`` the
    vector for ``A`` is a lower-triangular Toeplitz matrix with first column
    ``1, -a, -RC, -RBC, -RB^2C, ...`` applied to the vector for ``B``.
    Runs from the bottom-right corner upward.
    """
    _square(a)
    n = a.rows
    vec = [1]
    for k in range(n - 1, -1, -1):
        size = n - k
        akk = a[k, k]
        r = [a[k, j] for j in range(k + 1, n)]
        c = [a[i, k] for i in range(k + 1, n)]
        toe = [1, -akk]
        cur = c
        for _ in range(size - 1):
            toe.append(-sum(x * y for x, y in zip(r, cur)))
            cur = [sum(a[i, j] * cur[j - k - 1] for j in range(k + 1, n)) for i in range(k + 1, n)]
        # toe has size+1 entries; vec has size entries
        vec = [sum(toe[i - j] * vec[j] for j in range(min(i + 1, size))) for i in range(size + 1)]
    return vec


def charpoly(a: IntMatrix) -> "IntPolynomial":
    """``det(A - λI)``; the Berkowitz output ``det(λI - A)`` times ``(-1)^n``."""
    n = a.rows
    coeffs = berkowitz(a)
    s = -1 if n % 2 else 1
    return IntPolynomial([s * c for c in reversed(coeffs)])


class IntPolynomial:
    """Integer polynomial in λ; ``coeffs[k]`` multiplies ``λ^k``.  No trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int):
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        return cls([0] * k + [c])

    @classmethod
    def linear_power(cls, shift: int, k: int, lead: int = 1):
        """``lead * (λ + shift)^k`` expanded with binomial coefficients."""
        return cls([lead * comb(k, i) * shift ** (k - i) for i in range(k + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(m))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * x for x in self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return render_poly(self)


def poly_eval(p: IntPolynomial, x: int) -> int:
    return p(x)


def poly_equal(p: IntPolynomial, q: IntPolynomial) -> bool:
    return p == q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p.scale(c)


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render_poly(p: IntPolynomial, var: str = LAMBDA) -> str:
    """Human-readable form, highest degree first, e.g. ``λ² - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + (str(k).translate(_SUPERSCRIPT) if k > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render_matrix(a: IntMatrix) -> str:
    """Rows of space-separated integers, right-aligned per column."""
    if a.rows == 0 or a.cols == 0:
        return ""
    width = max(len(str(v)) for v in a.entries)
    return "\n".join(" ".join(str(v).rjust(width) for v in a.row(i)) for i in range(a.rows))

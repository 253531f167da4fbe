"""Exact rational algebra: polynomials, rational functions and dense matrices.

Scalars are stdlib ``fractions.Fraction`` (ints are accepted and coerced);
floats are rejected so that nothing silently leaves exact arithmetic.
Polynomial coefficient vectors are stored lowest degree first with no
trailing zeros.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence

import numpy as np

Scalar = int | Fraction


def as_scalar(x: Scalar) -> Fraction:
    """Coerce an int or Fraction to Fraction; anything else is an error."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"exact scalar expected (int or Fraction), got {type(x).__name__}")


class Poly:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [as_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear(cls, const: Scalar, slope: Scalar = 1) -> "Poly":
        """slope*x + const."""
        return cls([const, slope])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients, lowest degree first, no trailing zeros."""
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        o = other if isinstance(other, Poly) else Poly.constant(other)
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-x for x in self._c])

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        o = other if isinstance(other, Poly) else Poly.constant(other)
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.constant(other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            s = as_scalar(other)
            return Poly([s * x for x in self._c])
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial power must be a non-negative int")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(self._c) - len(other._c)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        d = other._c
        lead = d[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(d) - 1] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        """Division that must leave no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("polynomial division left a remainder")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self._c[-1]
        if lead == 1:
            return self
        return Poly([x / lead for x in self._c])

    def eval(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = as_scalar(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) by Horner."""
        acc = Poly()
        for c in reversed(self._c):
            acc = acc * inner + Poly.constant(c)
        return acc

    def coeff_strings(self) -> list[str]:
        """Coefficients as exact "p/q" strings, lowest degree first."""
        return [str(c) for c in self._c]

    def pretty(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for d in range(len(self._c) - 1, -1, -1):
            c = self._c[d]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if d == 0:
                body = str(mag)
            else:
                xs = var if d == 1 else f"{var}^{d}"
                body = xs if mag == 1 else f"{mag}{xs}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.pretty()})"


class RationalFn:
    """Reduced ratio of two polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_zero:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        self.num = num
        self.den = den

    def eval(self, x: Scalar) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of rational function at {x}")
        return self.num.eval(x) / d

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn(({self.num.pretty()}) / ({self.den.pretty()}))"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def compose_with_rational(g: Poly, num: Poly, den: Poly) -> Poly:
    """den(x)^deg(g) * g(num(x)/den(x)), expanded exactly.

    This is how eigenvalue products like prod_i (num - lam_i * den) are
    assembled without computing any eigenvalue: take g with the lam_i as
    roots and clear denominators.
    """
    if den.is_zero:
        raise ZeroDivisionError("composition denominator is zero")
    if g.is_zero:
        return Poly()
    k = g.degree
    den_pow = [Poly.constant(1)]
    for _ in range(k):
        den_pow.append(den_pow[-1] * den)
    acc = Poly.constant(g.coeff(k))
    for j in range(k - 1, -1, -1):
        acc = acc * num + g.coeff(j) * den_pow[k - j]
    return acc


def _strip_low_zeros(c: list[int]) -> tuple[int, list[int]]:
    m = 0
    while m < len(c) - 1 and c[m] == 0:
        m += 1
    return m, c[m:]


def _synthetic_div(c: list[int], root: int) -> list[int]:
    # divide lowest-first integer coefficients by (x - root); exact by construction
    out = [0] * (len(c) - 1)
    carry = c[-1]
    for i in range(len(c) - 2, -1, -1):
        out[i] = carry
        carry = c[i] + root * carry
    if carry != 0:
        raise ArithmeticError("synthetic division left a remainder")
    return out


def _int_root_bound(c: list[int]) -> int:
    # Fujiwara-style bound from bit lengths: |root| <= 2 * max_i (|a_{n-i}|/|a_n|)^(1/i),
    # overestimated via 2^(ceil((bits(a_{n-i}) - bits(a_n) + 1)/i)).
    n = len(c) - 1
    lead_bits = abs(c[-1]).bit_length()
    emax = 0
    for i in range(1, n + 1):
        a = c[n - i]
        if a == 0:
            continue
        e = -(-(abs(a).bit_length() - lead_bits + 1) // i)
        emax = max(emax, e)
    if emax > 60:
        raise ArithmeticError("integer root bound is out of range for this polynomial")
    return 2 << emax


def integer_roots(p: Poly) -> tuple[tuple[int, ...], Poly]:
    """All integer roots of p with multiplicity, plus the integer-root-free quotient.

    Returns (roots sorted ascending, quotient) with
    p == quotient * prod(x - root).
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has every integer as a root")
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // _int_gcd(scale, c.denominator)
    ints = [int(c * scale) for c in p.coeffs]
    zero_mult, ints = _strip_low_zeros(ints)
    roots = [0] * zero_mult
    if len(ints) > 1:
        bound = _int_root_bound(ints)
        for k in range(-bound, bound + 1):
            if k == 0 or ints[0] % k != 0:
                continue
            while len(ints) > 1:
                acc = 0
                for c in reversed(ints):
                    acc = acc * k + c
                if acc != 0:
                    break
                ints = _synthetic_div(ints, k)
                roots.append(k)
                if ints[0] == 0:
                    raise ArithmeticError("unexpected zero constant term after division")
    quotient = Poly([Fraction(c, scale) for c in ints])
    return tuple(sorted(roots)), quotient


class Matrix:
    """Dense matrix over exact rationals."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        packed = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix rows")
            packed.append(tuple(as_scalar(x) for x in r))
        self._rows = tuple(packed)
        self.nrows = len(packed)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def ones(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[1] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries: Sequence[Scalar]) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence[Scalar]) -> "Matrix":
        return cls([[x] for x in entries])

    @classmethod
    def row_vector(cls, entries: Sequence[Scalar]) -> "Matrix":
        return cls([list(entries)])

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows: list[list[Fraction]] = []
        for band in grid:
            height = band[0].nrows
            if any(m.nrows != height for m in band):
                raise ValueError("block row heights differ")
            for i in range(height):
                row: list[Fraction] = []
                for m in band:
                    row.extend(m._rows[i])
                rows.append(row)
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix[{body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("matrix shapes differ")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self._rows, other._rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("matrix shapes differ")
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self._rows, other._rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self._rows])

    def __mul__(self, scalar: Scalar) -> "Matrix":
        s = as_scalar(scalar)
        return Matrix([[s * x for x in r] for r in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        cols = list(zip(*other._rows))
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                       for row in self._rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._rows)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def matvec(self, v: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length differs from column count")
        vv = [as_scalar(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, vv)) for row in self._rows)

    def quadratic_form(self, u: Sequence[Scalar]) -> Fraction:
        """u^T M u."""
        uu = [as_scalar(x) for x in u]
        return sum(a * b for a, b in zip(uu, self.matvec(uu)))

    def to_int_rows(self) -> list[list[int]] | None:
        """Integer entries as plain ints, or None if any entry is non-integral."""
        out = []
        for r in self._rows:
            row = []
            for x in r:
                if x.denominator != 1:
                    return None
                row.append(x.numerator)
            out.append(row)
        return out

    def solve(self, b: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Exact solution of M y = b by Gaussian elimination."""
        if not self.is_square:
            raise ValueError("solve requires a square matrix")
        n = self.nrows
        if len(b) != n:
            raise ValueError("right-hand side length differs")
        aug = [list(r) + [as_scalar(b[i])] for i, r in enumerate(self._rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix in exact solve")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return tuple(aug[i][n] for i in range(n))

    def det(self) -> Fraction:
        """Exact determinant by fraction Gaussian elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(r) for r in self._rows]
        sign = 1
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                sign = -sign
            pv = work[col][col]
            det *= pv
            for r in range(col + 1, n):
                if work[r][col]:
                    f = work[r][col] / pv
                    work[r] = [x - f * y for x, y in zip(work[r], work[col])]
        return sign * det


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product a (x) b."""
    rows = []
    for ra in a.rows():
        for rb in b.rows():
            rows.append([x * y for x in ra for y in rb])
    return Matrix(rows)


def _object_identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _faddeev_leverrier_int(rows: list[list[int]], u: Sequence[int] | None):
    # numpy object matmul keeps Python big ints and is the fastest exact route here
    n = len(rows)
    a = np.array(rows, dtype=object)
    m = _object_identity(n)
    coeffs = [1]
    forms = []
    uv = np.array([int(x) for x in u], dtype=object) if u is not None else None
    for k in range(1, n + 1):
        if uv is not None:
            forms.append(int(uv @ (m @ uv)))
        am = a @ m
        tr = 0
        for i in range(n):
            tr += am[i, i]
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("trace not divisible in integer Faddeev-LeVerrier")
        coeffs.append(c)
        m = am
        for i in range(n):
            m[i, i] += c
    if any(m[i, j] != 0 for i in range(n) for j in range(n)):
        raise ArithmeticError("Faddeev-LeVerrier recursion did not terminate at zero")
    return coeffs, forms


def _faddeev_leverrier_frac(rows, u):
    n = len(rows)
    a = [[as_scalar(x) for x in r] for r in rows]
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    coeffs: list[Fraction] = [Fraction(1)]
    forms: list[Fraction] = []
    uv = [as_scalar(x) for x in u] if u is not None else None
    for k in range(1, n + 1):
        if uv is not None:
            mv = [sum(x * y for x, y in zip(row, uv)) for row in m]
            forms.append(sum(x * y for x, y in zip(uv, mv)))
        cols = list(zip(*m))
        am = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        m = am
        for i in range(n):
            m[i][i] += c
    if any(m[i][j] != 0 for i in range(n) for j in range(n)):
        raise ArithmeticError("Faddeev-LeVerrier recursion did not terminate at zero")
    return coeffs, forms


def charpoly_with_adjugate_form(a: Matrix, u: Sequence[Scalar] | None):
    """Characteristic polynomial of a, and u^T adj(xI - a) u if u is given.

    Both come out of one Faddeev-LeVerrier matrix recursion: the auxiliary
    matrices M_k satisfy adj(xI - a) = sum_k M_k x^(n-1-k).
    """
    if not a.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if u is not None and len(u) != a.nrows:
        raise ValueError("vector length differs from matrix size")
    int_rows = a.to_int_rows()
    if int_rows is not None:
        int_u = None
        if u is not None:
            coerced = [as_scalar(x) for x in u]
            if all(x.denominator == 1 for x in coerced):
                int_u = [x.numerator for x in coerced]
        if u is None or int_u is not None:
            coeffs, forms = _faddeev_leverrier_int(int_rows, int_u)
        else:
            coeffs, forms = _faddeev_leverrier_frac(a.rows(), u)
    else:
        coeffs, forms = _faddeev_leverrier_frac(a.rows(), u)
    f = Poly(list(reversed(coeffs)))
    if u is None:
        return f, None
    return f, Poly(list(reversed(forms)))


def charpoly(a: Matrix) -> Poly:
    """det(xI - a), monic, by Faddeev-LeVerrier."""
    f, _ = charpoly_with_adjugate_form(a, None)
    return f


def adjugate_quadratic_form(a: Matrix, u: Sequence[Scalar]) -> Poly:
    """u^T adj(xI - a) u as a polynomial of degree n-1."""
    _, p = charpoly_with_adjugate_form(a, u)
    return p

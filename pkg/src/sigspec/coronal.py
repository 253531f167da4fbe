"""Signed coronals: the rational function mu^T (xI - N)^{-1} mu in reduced form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import (Matrix, Poly, RationalFn, Scalar, charpoly_with_adjugate_form,
                    poly_gcd)


@dataclass(frozen=True)
class CoronalTriple:
    """Reduced coronal num/den plus the factor shared with the charpoly.

    num/den is mu^T (xI - N)^{-1} mu in lowest terms with den monic;
    den * shared is the characteristic polynomial of N. deg num = deg den - 1
    always, because the unreduced numerator has leading coefficient mu^T mu.
    """

    num: Poly
    den: Poly
    shared: Poly

    def __post_init__(self):
        if self.den.is_zero or not self.den.is_monic or not self.shared.is_monic:
            raise ValueError("coronal denominator and shared factor must be monic")
        if self.num.degree != self.den.degree - 1:
            raise ValueError("coronal numerator degree must be deg(den) - 1")

    @property
    def charpoly(self) -> Poly:
        return self.den * self.shared

    @property
    def rational_fn(self) -> RationalFn:
        return RationalFn(self.num, self.den)

    def eval(self, x: Scalar):
        return self.rational_fn.eval(x)


def signed_coronal(n_matrix: Matrix, mu: Sequence[int]) -> CoronalTriple:
    """Coronal of the matrix with respect to a +-1 vector.

    Computes p = mu^T adj(xI - N) mu and f = charpoly(N) in one
    Faddeev-LeVerrier pass, splits off g = gcd(p, f) and returns
    (num, den, shared) = (p/g, f/g, g).
    """
    if not n_matrix.is_square:
        raise ValueError("coronal requires a square matrix")
    if len(mu) != n_matrix.nrows:
        raise ValueError("marking length differs from matrix size")
    if any(int(s) not in (1, -1) for s in mu):
        raise ValueError("coronal vector entries must be +1 or -1")
    f, p = charpoly_with_adjugate_form(n_matrix, [int(s) for s in mu])
    g = poly_gcd(p, f)
    return CoronalTriple(num=p.divexact(g), den=f.divexact(g), shared=g)


def star_coronal_closed_form(n: int, center_mark: int) -> RationalFn:
    """Coronal of a signed star on n+1 vertices with canonical marking.

    ((n+1)x + 2n*center_mark) / (x^2 - n), where center_mark is the product
    of the edge signs at the center. Returned reduced (the n = 1 case
    collapses to a linear denominator).
    """
    if n < 1:
        raise ValueError("star closed form needs at least one leaf")
    if center_mark not in (1, -1):
        raise ValueError("center mark must be +1 or -1")
    num = Poly([2 * n * center_mark, n + 1])
    den = Poly([-n, 0, 1])
    return RationalFn(num, den)


def regular_balanced_coronal(r: int, n: int) -> RationalFn:
    """Coronal n/(x - r) shared by every r-regular mu-signed graph on n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not (0 <= r < n):
        raise ValueError("regular degree must satisfy 0 <= r < n")
    return RationalFn(Poly.constant(n), Poly.linear(-r))

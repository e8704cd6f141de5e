"""Exact real-root isolation and growth-rate extraction.

Roots are isolated with Sturm sequences over exact rationals and carried
around as ``AlgebraicNumber`` values (square-free defining polynomial plus
an isolating interval), so comparisons against the named constants are
exact rather than floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .polynomials import (
    IntPolynomial,
    RationalFunction,
    _frac_divmod,
    _to_frac,
    poly_gcd,
    square_free_part,
)

DEFAULT_EPS = Fraction(1, 10**12)


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    chain = [_to_frac(p), _to_frac(p.derivative())]
    while any(chain[-1]):
        _, r = _frac_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-c for c in r])
    return [c for c in chain if any(c)]


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for coeffs in chain:
        v = _eval(coeffs, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval
    (lo, hi]; ``p`` need not be square-free."""
    sf = square_free_part(p)
    if sf.degree < 1:
        return 0
    chain = sturm_sequence(sf)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: all real roots lie in (-M, M)."""
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs)


class AlgebraicNumber:
    """A real algebraic number: square-free defining polynomial plus an
    isolating rational interval (lo, hi] containing exactly one real root."""

    __slots__ = ("poly", "lo", "hi", "_chain")

    def __init__(self, poly: IntPolynomial, lo: Fraction, hi: Fraction):
        poly = square_free_part(poly)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "lo", Fraction(lo))
        object.__setattr__(self, "hi", Fraction(hi))
        object.__setattr__(self, "_chain", sturm_sequence(poly))
        if self._count(self.lo, self.hi) != 1:
            raise ValueError("interval does not isolate exactly one root")

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicNumber is immutable")

    @classmethod
    def from_rational(cls, q: Fraction) -> "AlgebraicNumber":
        q = Fraction(q)
        poly = IntPolynomial([-q.numerator, q.denominator])
        return cls(poly, q - 1, q)

    def _count(self, lo: Fraction, hi: Fraction) -> int:
        return _sign_variations(self._chain, lo) - _sign_variations(self._chain, hi)

    def refine(self, eps: Fraction) -> None:
        """Shrink the isolating interval to width <= eps (bisection)."""
        lo, hi = self.lo, self.hi
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if self._count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def to_float(self) -> float:
        self.refine(Fraction(1, 10**15))
        return float((self.lo + self.hi) / 2)

    def approx(self, digits: int = 6) -> str:
        self.refine(Fraction(1, 10 ** (digits + 3)))
        mid = (self.lo + self.hi) / 2
        scaled = mid * 10**digits
        q = int(scaled) + (1 if scaled - int(scaled) >= Fraction(1, 2) else 0)
        s = str(q)
        if digits == 0:
            return s
        s = s.rjust(digits + 1, "0")
        return s[:-digits] + "." + s[-digits:]

    def __repr__(self) -> str:
        return "AlgebraicNumber(%s in (%s, %s])" % (self.poly, self.lo, self.hi)

    def __str__(self) -> str:
        return "root of %s in (%s, %s] ~ %s" % (self.poly, self.lo, self.hi, self.approx())

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraicNumber) and compare(self, other) == 0

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        return compare(self, other) <= 0

    def __hash__(self):
        raise TypeError("AlgebraicNumber is unhashable; compare explicitly")


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Exact trichotomy: -1, 0, or +1.

    Equality is decided by a square-free gcd test before any unbounded
    refinement, so the function always terminates.
    """
    g = poly_gcd(a.poly, b.poly)
    while True:
        lo = max(a.lo, b.lo)
        hi = min(a.hi, b.hi)
        if lo < hi and g.degree >= 1 and count_real_roots(g, lo, hi) >= 1:
            # the shared gcd root inside both intervals is each number's root
            return 0
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        width = max(a.hi - a.lo, b.hi - b.lo)
        a.refine(width / 4)
        b.refine(width / 4)


def largest_real_root(p: IntPolynomial, eps: Fraction = DEFAULT_EPS) -> AlgebraicNumber:
    """The greatest real root of ``p``, isolated to width <= eps."""
    if p.degree < 1:
        raise ValueError("polynomial must be nonconstant")
    sf = square_free_part(p)
    chain = sturm_sequence(sf)
    M = root_bound(sf)
    lo, hi = -M, M
    total = _sign_variations(chain, lo) - _sign_variations(chain, hi)
    if total == 0:
        raise ValueError("polynomial has no real root")
    # push lo right while keeping at least one root in (lo, hi]
    while _sign_variations(chain, lo) - _sign_variations(chain, hi) > 1 or hi - lo > eps:
        mid = (lo + hi) / 2
        if _sign_variations(chain, mid) - _sign_variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    root = AlgebraicNumber(sf, lo, hi)
    return root


def smallest_positive_root(p: IntPolynomial) -> AlgebraicNumber:
    """The least real root of ``p`` in (0, inf), if any."""
    sf = square_free_part(p)
    chain = sturm_sequence(sf)
    M = root_bound(sf)
    lo, hi = Fraction(0), M
    if _sign_variations(chain, lo) - _sign_variations(chain, hi) == 0:
        raise ValueError("polynomial has no positive real root")
    while _sign_variations(chain, lo) - _sign_variations(chain, hi) > 1:
        mid = (lo + hi) / 2
        if _sign_variations(chain, lo) - _sign_variations(chain, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return AlgebraicNumber(sf, lo, hi)


def _irreducible_factors(p: IntPolynomial) -> list[IntPolynomial]:
    # sympy is imported lazily: the plain root-isolation paths above must
    # stay importable and fast without it
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x))
    out = []
    for fac, _mult in factors:
        coeffs = [int(c) for c in reversed(sympy.Poly(fac, x).all_coeffs())]
        out.append(IntPolynomial(coeffs).primitive())
    return out


def growth_polynomial(f: RationalFunction) -> IntPolynomial:
    """Reciprocal transform of the denominator factor responsible for the
    least positive singularity of ``f``; its greatest real root is the
    growth rate of the coefficient sequence."""
    den = f.den
    if den.degree < 1:
        raise ValueError("denominator has no positive real root")
    rho = smallest_positive_root(den)
    factors = [g for g in _irreducible_factors(den) if g.degree >= 1]
    # refine until exactly one irreducible factor owns the isolating interval
    while True:
        owners = [
            g for g in factors if count_real_roots(g, rho.lo, rho.hi) >= 1
        ]
        if len(owners) == 1:
            break
        rho.refine((rho.hi - rho.lo) / 4)
    factor = owners[0]
    # the owning factor must appear exactly once (simple singularity)
    if factor.divides(den.exact_div(factor)):
        raise ValueError("least positive singularity is not a simple root")
    return factor.reciprocal().primitive()


# Named constants.  kappa and xi carry their defining polynomials; the
# remaining values are display-only approximations from the literature.
KAPPA_POLY = IntPolynomial([-1, 0, -2, 1])  # x^3 - 2x^2 - 1
XI_POLY = IntPolynomial([-1, -1, -1, 0, -2, 1])  # x^5 - 2x^4 - x^2 - x - 1


@lru_cache(maxsize=None)
def kappa() -> AlgebraicNumber:
    return largest_real_root(KAPPA_POLY)


@lru_cache(maxsize=None)
def xi() -> AlgebraicNumber:
    return largest_real_root(XI_POLY)


LAMBDA_B_APPROX = 2.35698
THETA_B_APPROX = 2.355256
PHI_APPROX = 1.61803398875


def family_roots(
    f: IntPolynomial,
    g: IntPolynomial,
    shift: Callable[[int], int],
    i_range: Iterable[int],
    eps: Fraction = DEFAULT_EPS,
) -> list[AlgebraicNumber]:
    """Largest real roots of h_i = x^shift(i) * f + g over ``i_range``.

    When g is negative just right of f's largest root r, the roots decrease
    strictly toward r from above; that is asserted, and violations raise
    (signalling use outside the intended hypotheses).  g = 0 trivially gives
    r for every i.
    """
    i_list = list(i_range)
    r = largest_real_root(f, eps)
    if g.is_zero():
        return [largest_real_root(f, eps) for _ in i_list]
    roots = [largest_real_root(f * IntPolynomial.monomial(shift(i)) + g, eps) for i in i_list]
    for a, b in zip(roots, roots[1:]):
        if not compare(b, a) < 0:
            raise ValueError("family roots are not strictly decreasing")
    for a in roots:
        if not compare(a, r) > 0:
            raise ValueError("family root does not exceed the base root")
    return roots

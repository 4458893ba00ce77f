"""Truncated power series in z over exact rational polynomials in t, u.

Used for two consistency checks against the enumerated polynomials: the
Eulerian exponential generating function

    (t - e^{(t-1) z}) * sum_n A_n(t) z^n / n!  =  t - 1        (A_0 = 1)

and the root-free square form of the Narayana generating function

    (2/F - 1 - (1+t-2u) z)^2  =  1 - 2(1+t) z + (1-t)^2 z^2

with F = 1 + sum_{n>=1} Nhat_n(t, u) z^n over Dyck paths.  All coefficient
arithmetic is in Fraction, so a pass is an identity of the truncations, not
an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Sequence

from .polynomials import BivariatePolynomial, eulerian, narayana_dyck

DEFAULT_SERIES_ORDER = 8

# One z-coefficient: sparse ((t-degree, u-degree), Fraction) pairs, sorted.
QPoly = tuple[tuple[tuple[int, int], Fraction], ...]


def _qnorm(coeffs: Mapping[tuple[int, int], Fraction]) -> QPoly:
    return tuple((d, Fraction(c)) for d, c in sorted(coeffs.items()) if c != 0)


def _qadd(a: QPoly, b: QPoly) -> QPoly:
    out = dict(a)
    for d, c in b:
        out[d] = out.get(d, Fraction(0)) + c
    return _qnorm(out)


def _qmul(a: QPoly, b: QPoly) -> QPoly:
    out: dict[tuple[int, int], Fraction] = {}
    for (dt1, du1), c1 in a:
        for (dt2, du2), c2 in b:
            d = (dt1 + dt2, du1 + du2)
            out[d] = out.get(d, Fraction(0)) + c1 * c2
    return _qnorm(out)


def _qscale(a: QPoly, s: Fraction) -> QPoly:
    return _qnorm({d: c * s for d, c in a})


def _qfrom(p: BivariatePolynomial | QPoly) -> QPoly:
    if isinstance(p, BivariatePolynomial):
        return _qnorm({(dt, du): Fraction(c) for dt, du, c in p.terms})
    return _qnorm(dict(p))


@dataclass(frozen=True)
class TruncatedSeries:
    """A series in z modulo z^(order+1); coefficients are exact t,u-polynomials."""

    order: int
    coeffs: tuple[QPoly, ...]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(self.order, tuple(_qadd(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        out = [()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = _qadd(out[i + j], _qmul(a, b))
        return TruncatedSeries(self.order, tuple(out))

    def scale(self, s: Fraction) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(_qscale(c, s) for c in self.coeffs))

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a nonzero constant z^0 coefficient."""
        head = self.coeffs[0]
        if len(head) != 1 or head[0][0] != (0, 0):
            raise ValueError("series inversion needs a nonzero constant z^0 coefficient")
        inv0 = 1 / head[0][1]
        out: list[QPoly] = [_qnorm({(0, 0): inv0})]
        for m in range(1, self.order + 1):
            acc: QPoly = ()
            for i in range(1, m + 1):
                if self.coeffs[i]:
                    acc = _qadd(acc, _qmul(self.coeffs[i], out[m - i]))
            out.append(_qscale(acc, -inv0))
        return TruncatedSeries(self.order, tuple(out))

    def _match(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} != {other.order}")


def series(order: int, coeffs: Mapping[int, BivariatePolynomial | QPoly]) -> TruncatedSeries:
    """Build a series from a {z-power: coefficient} map."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if any(not 0 <= i <= order for i in coeffs):
        raise ValueError(f"z-powers must lie in 0..{order}")
    table = [_qfrom(coeffs[i]) if i in coeffs else () for i in range(order + 1)]
    return TruncatedSeries(order, tuple(table))


def first_difference(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    """Smallest z-power where the two series disagree, or None."""
    a._match(b)
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


# -- the two generating-function checks ---------------------------------------

@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of a generating-function comparison through z^order."""

    name: str
    order: int
    first_failure: int | None

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def verify_eulerian_egf(
    order: int = DEFAULT_SERIES_ORDER,
    *,
    replace: Mapping[int, BivariatePolynomial] | None = None,
) -> SeriesCheck:
    """Check (t - e^{(t-1)z}) * sum A_n z^n/n! = t - 1 through z^order.

    `replace` swaps in alternative polynomials for chosen n, so tests can
    confirm a perturbed A_n is caught at exactly that order.
    """
    from .polynomials import ONE

    table: dict[int, BivariatePolynomial] = {0: ONE}
    for n in range(1, order + 1):
        table[n] = eulerian(n, cap=max(order, 10))
    if replace:
        table.update(replace)

    egf = series(order, {n: _qscale(_qfrom(table[n]), Fraction(1, factorial(n))) for n in table})
    exp_part = series(
        order,
        {
            m: _qnorm(
                {(j, 0): Fraction((-1) ** (m - j) * comb(m, j), factorial(m)) for j in range(m + 1)}
            )
            for m in range(order + 1)
        },
    )
    t_const = series(order, {0: _qnorm({(1, 0): Fraction(1)})})
    lhs = (t_const - exp_part) * egf
    rhs = series(order, {0: _qnorm({(1, 0): Fraction(1), (0, 0): Fraction(-1)})})
    return SeriesCheck("eulerian-egf", order, first_difference(lhs, rhs))


def verify_narayana_gf(
    order: int = DEFAULT_SERIES_ORDER,
    *,
    replace: Mapping[int, BivariatePolynomial] | None = None,
) -> SeriesCheck:
    """Check (2/F - 1 - (1+t-2u)z)^2 = 1 - 2(1+t)z + (1-t)^2 z^2 through
    z^order, where F collects the Dyck-path polynomials."""
    from .polynomials import ONE

    table: dict[int, BivariatePolynomial] = {0: ONE}
    for n in range(1, order + 1):
        table[n] = narayana_dyck(n, cap=max(order, 12))
    if replace:
        table.update(replace)

    f_series = series(order, dict(table))
    bracket = (
        f_series.inverse().scale(Fraction(2))
        - series(order, {0: ONE})
        - series(order, {1: _qnorm({(0, 0): Fraction(1), (1, 0): Fraction(1), (0, 1): Fraction(-2)})})
    )
    lhs = bracket * bracket
    rhs = series(
        order,
        {
            0: _qnorm({(0, 0): Fraction(1)}),
            1: _qnorm({(0, 0): Fraction(-2), (1, 0): Fraction(-2)}),
            2: _qnorm({(0, 0): Fraction(1), (1, 0): Fraction(-2), (2, 0): Fraction(1)}),
        },
    )
    return SeriesCheck("narayana-gf", order, first_difference(lhs, rhs))

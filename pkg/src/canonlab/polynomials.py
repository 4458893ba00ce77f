"""Counting polynomials in t (descents) and u (plateaus), exactly.

Everything here is integer arithmetic: polynomials are sparse maps from
(t-degree, u-degree) to arbitrary-precision coefficients, and the one
closed-form count (sulanke_count) runs over rationals before asserting
integrality.

The statistics polynomials come in three layers, tied together by the
product identity C^k_n(t, u) = A_n(t) * N_{n,k}(t, u):

  eulerian(n)            A_n(t), descents over all permutations of [n]
  gen_narayana(n, k)     N_{n,k}(t, u), ascents and plateaus over SYT(k^n)
  canon_poly(n, k)       C^k_n(t, u), descents and plateaus over canon words

canon_poly never touches multiset permutations: it walks the tableaux once,
aggregates each tableau's adjacency profile, and evaluates every voice
against the aggregate, which is what the row-relabeling bijection promises.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .parallel import parallel_map
from .tableaux import (
    DEFAULT_DYCK_CAP,
    DEFAULT_ENUMERATION_CAP,
    asc_set,
    ballot_prefixes,
    enumerate_dyck,
    enumerate_tableaux,
    peak_counts,
    plat_set,
)
from .words import InternalInvariantError, check_permutation, descent_set, enumerate_permutations

DEFAULT_EULERIAN_CAP = 10
CANON_MAX_N = 5
CANON_MAX_K = 4


@dataclass(frozen=True)
class BivariatePolynomial:
    """Sparse polynomial in t and u; terms sorted by (t-degree, u-degree)."""

    terms: tuple[tuple[int, int, int], ...]

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        coeffs = Counter({(dt, du): c for dt, du, c in self.terms})
        for dt, du, c in other.terms:
            coeffs[(dt, du)] += c
        return poly(coeffs)

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        coeffs: Counter = Counter()
        for dt1, du1, c1 in self.terms:
            for dt2, du2, c2 in other.terms:
                coeffs[(dt1 + dt2, du1 + du2)] += c1 * c2
        return poly(coeffs)

    def __rmul__(self, scalar: int) -> "BivariatePolynomial":
        return poly({(dt, du): scalar * c for dt, du, c in self.terms})

    def coefficient(self, dt: int, du: int) -> int:
        for a, b, c in self.terms:
            if (a, b) == (dt, du):
                return c
        return 0

    @property
    def degree_t(self) -> int:
        return max((dt for dt, _, _ in self.terms), default=0)

    @property
    def degree_u(self) -> int:
        return max((du for _, du, _ in self.terms), default=0)

    def at_u1(self) -> tuple[int, ...]:
        """Coefficients of the t-polynomial obtained by setting u = 1, dense
        from degree 0 up."""
        out = [0] * (self.degree_t + 1)
        for dt, _, c in self.terms:
            out[dt] += c
        return tuple(out)

    def evaluate(self, t: int, u: int) -> int:
        return sum(c * t**dt * u**du for dt, du, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for dt, du, c in self.terms:
            factors = []
            if c != 1 or (dt == 0 and du == 0):
                factors.append(str(c))
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            if du:
                factors.append("u" if du == 1 else f"u^{du}")
            rendered.append("*".join(factors))
        return " + ".join(rendered)


def poly(coeffs: Mapping[tuple[int, int], int]) -> BivariatePolynomial:
    """Normalize a degree->coefficient map: drop zeros, sort terms."""
    terms = tuple(
        (dt, du, c) for (dt, du), c in sorted(coeffs.items()) if c != 0
    )
    if any(dt < 0 or du < 0 for dt, du, _ in terms):
        raise ValueError("polynomial degrees must be nonnegative")
    return BivariatePolynomial(terms)


ZERO = poly({})
ONE = poly({(0, 0): 1})

_FACTOR = re.compile(r"^(-?\d+)$|^t(?:\^(\d+))?$|^u(?:\^(\d+))?$")


def parse_polynomial(text: str) -> BivariatePolynomial:
    """Inverse of str(): parse forms like "1 + 4*t + t^2" or "u^2 + t"."""
    body = text.strip()
    if body == "0":
        return ZERO
    coeffs: Counter = Counter()
    for chunk in body.split("+"):
        c, dt, du = 1, 0, 0
        for factor in chunk.strip().split("*"):
            m = _FACTOR.match(factor.strip())
            if not m:
                raise ValueError(f"cannot parse polynomial factor {factor!r}")
            if m.group(1) is not None:
                c *= int(m.group(1))
            elif factor.strip().startswith("t"):
                dt += int(m.group(2) or 1)
            else:
                du += int(m.group(3) or 1)
        coeffs[(dt, du)] += c
    return poly(coeffs)


def polynomial_to_json(p: BivariatePolynomial) -> dict:
    return {"terms": [{"t": dt, "u": du, "c": str(c)} for dt, du, c in p.terms]}


def polynomial_from_json(obj: dict) -> BivariatePolynomial:
    try:
        coeffs = {(term["t"], term["u"]): int(term["c"]) for term in obj["terms"]}
    except (TypeError, KeyError):
        raise ValueError('polynomial JSON needs a "terms" list of {t, u, c}') from None
    return poly(coeffs)


# -- the three statistics polynomials ----------------------------------------

def eulerian(n: int, *, cap: int = DEFAULT_EULERIAN_CAP) -> BivariatePolynomial:
    """A_n(t) by direct enumeration of permutation descents.

    >>> str(eulerian(3))
    '1 + 4*t + t^2'
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"enumeration cap exceeded: n = {n} > {cap}")
    coeffs: Counter = Counter()
    for p in enumerate_permutations(n):
        coeffs[(len(descent_set(p)), 0)] += 1
    return poly(coeffs)


def narayana_dyck(n: int, *, cap: int = DEFAULT_DYCK_CAP) -> BivariatePolynomial:
    """Dyck-path polynomial, t marking high peaks and u low peaks.

    Coincides with gen_narayana(n, 2); kept as an independent code path.
    """
    coeffs: Counter = Counter()
    for path in enumerate_dyck(n, cap=cap):
        high, low = peak_counts(path)
        coeffs[(high, low)] += 1
    return poly(coeffs)


def gen_narayana(n: int, k: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> BivariatePolynomial:
    """N_{n,k}(t, u): ascents and plateaus over the tableaux of shape k^n.

    >>> str(gen_narayana(2, 2))
    'u^2 + t'
    """
    coeffs: Counter = Counter()
    for t in enumerate_tableaux(n, k, cap=cap):
        coeffs[(len(asc_set(t)), len(plat_set(t)))] += 1
    return poly(coeffs)


def sulanke_count(n: int, k: int, h: int) -> int:
    """Closed-form count of shape-k^n tableaux with h ascents.

    Exact rational arithmetic; the result is asserted to be a nonnegative
    integer before it is returned.

    >>> [sulanke_count(3, 2, h) for h in range(3)]
    [1, 3, 1]
    """
    if n < 1 or k < 1:
        raise ValueError("shape parameters must be at least 1")
    if not 0 <= h <= (k - 1) * (n - 1):
        raise ValueError(f"ascent count must lie in 0..{(k - 1) * (n - 1)}: {h}")
    total = Fraction(0)
    for level in range(h + 1):
        product = Fraction(comb(n * k + 1, h - level))
        for i in range(n):
            for j in range(k):
                product *= Fraction(i + j + 1 + level, i + j + 1)
        total += (-1) ** (h - level) * product
    if total.denominator != 1 or total < 0:
        raise InternalInvariantError(f"sulanke_count({n}, {k}, {h}) = {total}")
    return int(total)


# -- canon polynomials via tableau profiles -----------------------------------

Profile = tuple[int, tuple[tuple[tuple[int, int], int], ...]]


def descent_profiles(
    n: int,
    k: int,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    prefix: Sequence[int] = (),
    workers: int = 1,
) -> Counter:
    """Aggregate tableaux by (plateau count, adjacent row-pair multiplicities).

    The profile determines every voice statistic at once: for a voice sigma,
    des_sigma is the profile's total multiplicity of pairs (a, b) with
    sigma[a] > sigma[b].  Profiles of disjoint prefixes merge by addition,
    which is how the worker split stays scheduling-independent.
    """
    if workers > 1 and not prefix:
        depth = min(3, n * k)
        chunks = [(n, k, cap, p) for p in ballot_prefixes(n, k, depth)]
        merged: Counter = Counter()
        for part in parallel_map(_profile_chunk, chunks, workers):
            merged.update(part)
        return merged
    profiles: Counter = Counter()
    for t in enumerate_tableaux(n, k, cap=cap, prefix=prefix):
        pairs: Counter = Counter()
        plat = 0
        for a, b in zip(t.word, t.word[1:]):
            if a == b:
                plat += 1
            else:
                pairs[(a, b)] += 1
        profiles[(plat, tuple(sorted(pairs.items())))] += 1
    return profiles


def _profile_chunk(args: tuple[int, int, int, tuple[int, ...]]) -> Counter:
    n, k, cap, prefix = args
    return descent_profiles(n, k, cap=cap, prefix=prefix)


def _check_canon_bounds(n: int, k: int, max_n: int, max_k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("shape parameters must be at least 1")
    if n > max_n or k > max_k:
        raise ValueError(
            f"feasibility bounds exceeded: need n <= {max_n} and k <= {max_k}, got ({n}, {k})"
        )


def canon_poly_sigma(
    n: int,
    k: int,
    sigma: Sequence[int],
    *,
    max_n: int = CANON_MAX_N,
    max_k: int = CANON_MAX_K,
    profiles: Counter | None = None,
) -> BivariatePolynomial:
    """C^{k,sigma}_n(t, u): descents and plateaus over canon words with voice
    sigma, computed from the tableau profiles."""
    _check_canon_bounds(n, k, max_n, max_k)
    p = check_permutation(sigma, n)
    if profiles is None:
        profiles = descent_profiles(n, k)
    coeffs: Counter = Counter()
    for (plat, pairs), mult in profiles.items():
        des = sum(m for (a, b), m in pairs if p[a - 1] > p[b - 1])
        coeffs[(des, plat)] += mult
    return poly(coeffs)


def canon_poly(
    n: int,
    k: int,
    *,
    max_n: int = CANON_MAX_N,
    max_k: int = CANON_MAX_K,
    workers: int = 1,
) -> BivariatePolynomial:
    """C^k_n(t, u): descents and plateaus over all canon words of {1^k..n^k}.

    >>> str(canon_poly(2, 2))
    'u^2 + t + t*u^2 + t^2'
    """
    _check_canon_bounds(n, k, max_n, max_k)
    profiles = descent_profiles(n, k, workers=workers)
    coeffs: Counter = Counter()
    for p in enumerate_permutations(n):
        for (plat, pairs), mult in profiles.items():
            des = sum(m for (a, b), m in pairs if p[a - 1] > p[b - 1])
            coeffs[(des, plat)] += mult
    return poly(coeffs)

"""Shared oracles and hypothesis strategies.

The brute-force helpers here deliberately avoid the library's own shortcuts:
`multiset_permutations` is a plain sorted-backtracking generator, and
`brute_canon_poly` filters it with the voice test.  Tests compare the fast
paths against these.
"""

from __future__ import annotations

from collections import Counter

import hypothesis.strategies as st

from canonlab.polynomials import BivariatePolynomial, poly
from canonlab.tableaux import RectTableau, tableau_from_word
from canonlab.words import descent_set, is_canon, plateau_set


def multiset_permutations(values):
    """Yield all distinct orderings of `values` in lexicographic order."""
    counts = Counter(values)
    support = sorted(counts)
    total = sum(counts.values())
    word = []

    def extend():
        if len(word) == total:
            yield tuple(word)
            return
        for v in support:
            if counts[v]:
                counts[v] -= 1
                word.append(v)
                yield from extend()
                word.pop()
                counts[v] += 1

    yield from extend()


def canon_words_brute(n, k):
    """All canon words over {1^k, ..., n^k}, by exhaustive filtering."""
    base = [v for v in range(1, n + 1) for _ in range(k)]
    return [w for w in multiset_permutations(base) if is_canon(w, n, k)]


def brute_canon_poly(n, k) -> BivariatePolynomial:
    coeffs = Counter()
    for w in canon_words_brute(n, k):
        coeffs[len(descent_set(w)), len(plateau_set(w))] += 1
    return poly(dict(coeffs))


@st.composite
def tableaux(draw, max_n=4, max_k=3, min_n=1, min_k=1) -> RectTableau:
    """A uniform-ish random rectangular tableau via its ballot word."""
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(min_k, max_k))
    counts = [0] * (n + 1)
    word = []
    for _ in range(n * k):
        valid = [
            r
            for r in range(1, n + 1)
            if counts[r] < k and (r == 1 or counts[r - 1] > counts[r])
        ]
        r = draw(st.sampled_from(valid))
        counts[r] += 1
        word.append(r)
    return tableau_from_word(n, k, tuple(word))

"""Rectangular standard Young tableaux and their statistics.

A tableau of shape k^n (n rows, k columns) holds 1..n*k, increasing along
rows and down columns.  The canonical storage form is the tableau word: its
i-th letter is the row containing the value i.  A word over {1..n} of length
n*k is a tableau word exactly when it uses every letter k times and every
prefix contains at least as many j's as (j+1)'s (the ballot condition).

Descents of a tableau follow the value convention: i is a descent when i+1
sits in a strictly lower row, an ascent when i+1 sits in a strictly higher
row, and a plateau when both share a row.  So tableau descents are ascents
of the tableau word and vice versa.  More generally, a permutation sigma
relabels the rows, giving the sigma-descent set {i : sigma[row(i)] >
sigma[row(i+1)]}; row relabeling by sigma also maps tableaux onto the words
whose k voices all equal sigma (the canon words with voice sigma).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .words import (
    InternalInvariantError,
    check_multiset,
    check_permutation,
    descent_set,
    format_word,
    is_canon,
    plateau_set,
)

DEFAULT_ENUMERATION_CAP = 20
DEFAULT_DYCK_CAP = 12


@dataclass(frozen=True)
class RectTableau:
    """A rectangular standard Young tableau in word form."""

    n: int
    k: int
    word: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.k)

    @property
    def grid(self) -> tuple[tuple[int, ...], ...]:
        return tableau_to_grid(self)

    def __str__(self) -> str:
        return format_word(self.word)


def tableau_from_word(n: int, k: int, word: Sequence[int]) -> RectTableau:
    """Validate a tableau word and wrap it.

    >>> tableau_from_word(2, 2, (1, 2, 1, 2)).grid
    ((1, 3), (2, 4))
    >>> tableau_from_word(2, 2, (1, 2, 2, 1))
    Traceback (most recent call last):
    ...
    ValueError: not a ballot sequence at prefix 3
    """
    if n < 1 or k < 1:
        raise ValueError("shape parameters must be at least 1")
    w = check_multiset(word, n, k)
    counts = [0] * (n + 2)
    for i, r in enumerate(w, 1):
        counts[r] += 1
        if r > 1 and counts[r] > counts[r - 1]:
            raise ValueError(f"not a ballot sequence at prefix {i}")
    return RectTableau(n, k, w)


def tableau_to_grid(t: RectTableau) -> tuple[tuple[int, ...], ...]:
    """Rows of the tableau, each listing its values in increasing order."""
    rows: list[list[int]] = [[] for _ in range(t.n)]
    for i, r in enumerate(t.word, 1):
        rows[r - 1].append(i)
    return tuple(tuple(row) for row in rows)


def tableau_from_grid(rows: Sequence[Sequence[int]]) -> RectTableau:
    """Build a tableau from its grid, validating shape and monotonicity."""
    grid = [tuple(row) for row in rows]
    n = len(grid)
    if n < 1 or len(grid[0]) < 1:
        raise ValueError("grid must be nonempty")
    k = len(grid[0])
    if any(len(row) != k for row in grid):
        raise ValueError("grid rows must all have the same length")
    entries = [x for row in grid for x in row]
    if sorted(entries) != list(range(1, n * k + 1)):
        raise ValueError(f"grid entries must be 1..{n * k} without repeats")
    for i, row in enumerate(grid, 1):
        if any(a >= b for a, b in zip(row, row[1:])):
            raise ValueError(f"grid row {i} is not strictly increasing")
    for j in range(k):
        col = [row[j] for row in grid]
        if any(a >= b for a, b in zip(col, col[1:])):
            raise ValueError(f"grid column {j + 1} is not strictly increasing")
    row_of = {x: i for i, row in enumerate(grid, 1) for x in row}
    try:
        return tableau_from_word(n, k, tuple(row_of[v] for v in range(1, n * k + 1)))
    except ValueError as exc:  # monotone grids always pass the ballot check
        raise InternalInvariantError(f"grid {grid} produced a non-ballot word") from exc


def syt_count(n: int, k: int) -> int:
    """Number of standard Young tableaux of shape k^n, by hook lengths.

    >>> syt_count(5, 3)
    6006
    """
    if n < 1 or k < 1:
        raise ValueError("shape parameters must be at least 1")
    hooks = 1
    for i in range(n):
        for j in range(k):
            hooks *= (n - i) + (k - j) - 1
    count, rem = divmod(factorial(n * k), hooks)
    if rem:
        raise InternalInvariantError(f"hook product does not divide ({n * k})!")
    return count


def enumerate_tableaux(
    n: int,
    k: int,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    prefix: Sequence[int] = (),
) -> Iterator[RectTableau]:
    """All tableaux of shape k^n, in lexicographic order of their words.

    With a prefix, only tableaux whose word starts with it are produced; the
    prefixes of a fixed length partition the full enumeration, so partial
    runs can be distributed and concatenated.
    """
    if n < 1 or k < 1:
        raise ValueError("shape parameters must be at least 1")
    if n * k > cap:
        raise ValueError(f"enumeration cap exceeded: n*k = {n * k} > {cap}")
    counts = [0] * (n + 2)
    start = tuple(prefix)
    for i, r in enumerate(start, 1):
        if not 1 <= r <= n:
            raise ValueError(f"prefix letters must lie in 1..{n}")
        counts[r] += 1
        if counts[r] > k or (r > 1 and counts[r] > counts[r - 1]):
            raise ValueError(f"prefix is not a ballot sequence at position {i}")

    word = list(start)
    total = n * k

    def extend() -> Iterator[RectTableau]:
        if len(word) == total:
            yield RectTableau(n, k, tuple(word))
            return
        for r in range(1, n + 1):
            if counts[r] < k and (r == 1 or counts[r] < counts[r - 1]):
                counts[r] += 1
                word.append(r)
                yield from extend()
                counts[r] -= 1
                word.pop()

    return extend()


def ballot_prefixes(n: int, k: int, depth: int) -> list[tuple[int, ...]]:
    """All valid tableau-word prefixes of the given length, in lex order."""
    if not 0 <= depth <= n * k:
        raise ValueError(f"depth must lie in 0..{n * k}")
    prefixes: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        nxt = []
        for p in prefixes:
            counts = [0] * (n + 2)
            for r in p:
                counts[r] += 1
            for r in range(1, n + 1):
                if counts[r] < k and (r == 1 or counts[r] < counts[r - 1]):
                    nxt.append(p + (r,))
        prefixes = nxt
    return prefixes


# -- statistics ---------------------------------------------------------------

def plat_set(t: RectTableau) -> tuple[int, ...]:
    """Positions i where i and i+1 share a row."""
    return plateau_set(t.word)


def des_set(t: RectTableau) -> tuple[int, ...]:
    """Positions i where i+1 sits in a strictly lower row than i."""
    return tuple(i + 1 for i in range(len(t.word) - 1) if t.word[i] < t.word[i + 1])


def asc_set(t: RectTableau) -> tuple[int, ...]:
    """Positions i where i+1 sits in a strictly higher row than i."""
    return descent_set(t.word)


def des_sigma_set(t: RectTableau, sigma: Sequence[int]) -> tuple[int, ...]:
    """Positions i with sigma[row(i)] > sigma[row(i+1)].

    The identity gives asc_set, the decreasing permutation gives des_set.
    """
    p = check_permutation(sigma, t.n)
    relabeled = tuple(p[r - 1] for r in t.word)
    return descent_set(relabeled)


# -- canon words --------------------------------------------------------------

def tableau_to_canon(t: RectTableau, sigma: Sequence[int]) -> tuple[int, ...]:
    """Relabel rows by sigma, giving the canon word with voice sigma.

    Descents of the result are the sigma-descents of the tableau and its
    plateaus are the tableau's plateaus (both asserted).
    """
    p = check_permutation(sigma, t.n)
    pi = tuple(p[r - 1] for r in t.word)
    if is_canon(pi, t.n, t.k) != p:
        raise InternalInvariantError(f"relabeling {t.word} by {p} is not canon")
    if descent_set(pi) != des_sigma_set(t, p) or plateau_set(pi) != plat_set(t):
        raise InternalInvariantError(f"statistics moved for {t.word} under {p}")
    return pi


def canon_to_tableau(word: Sequence[int], n: int, k: int) -> tuple[tuple[int, ...], RectTableau]:
    """Split a canon word into its voice and its underlying tableau.

    Replacing each letter by its position within the voice turns a canon word
    into a tableau word; this inverts tableau_to_canon.

    >>> canon_to_tableau((3, 5, 3, 2, 5, 2, 1, 4, 1, 4), 5, 2)[1].word
    (1, 2, 1, 3, 2, 3, 4, 5, 4, 5)
    """
    w = check_multiset(word, n, k)
    sigma = is_canon(w, n, k)
    if sigma is None:
        raise ValueError("not a canon word: voices differ")
    slot = {v: i + 1 for i, v in enumerate(sigma)}
    try:
        t = tableau_from_word(n, k, tuple(slot[x] for x in w))
    except ValueError as exc:
        raise InternalInvariantError(f"canon word {w} gave a non-ballot row word") from exc
    return sigma, t


# -- Dyck paths (k = 2) -------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    """A balanced U/D path staying weakly above the axis."""

    steps: str

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def dyck_from_steps(steps: str) -> DyckPath:
    """Validate a step string such as "UUDD"."""
    height = 0
    for i, c in enumerate(steps, 1):
        if c not in "UD":
            raise ValueError(f"steps must be U or D, got {c!r}")
        height += 1 if c == "U" else -1
        if height < 0:
            raise ValueError(f"path dips below the axis at step {i}")
    if height != 0:
        raise ValueError("path does not return to the axis")
    return DyckPath(steps)


def enumerate_dyck(n: int, *, cap: int = DEFAULT_DYCK_CAP) -> Iterator[DyckPath]:
    """All Dyck paths with n U-steps, in lex order with U before D."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"enumeration cap exceeded: n = {n} > {cap}")

    def extend(prefix: str, ups: int, height: int) -> Iterator[DyckPath]:
        if len(prefix) == 2 * n:
            yield DyckPath(prefix)
            return
        if ups < n:
            yield from extend(prefix + "U", ups + 1, height + 1)
        if height > 0:
            yield from extend(prefix + "D", ups, height - 1)

    return extend("", 0, 0)


def peak_counts(path: DyckPath) -> tuple[int, int]:
    """(high, low) peak counts: UD factors peaking above height 1, at height 1.

    >>> peak_counts(dyck_from_steps("UDUD"))
    (0, 2)
    """
    high = low = 0
    height = 0
    for a, b in zip(path.steps, path.steps[1:] + "."):
        height += 1 if a == "U" else -1
        if a == "U" and b == "D":
            if height == 1:
                low += 1
            else:
                high += 1
    return high, low


def syt2_to_dyck(t: RectTableau) -> DyckPath:
    """Two-column tableau to Dyck path: step i is U iff i lies in column 1.

    Ascents become high peaks and plateaus become low peaks (asserted).
    """
    if t.k != 2:
        raise ValueError(f"requires k = 2, got k = {t.k}")
    counts = [0] * (t.n + 1)
    steps = []
    for r in t.word:
        counts[r] += 1
        steps.append("U" if counts[r] == 1 else "D")
    path = DyckPath("".join(steps))
    high, low = peak_counts(path)
    if high != len(asc_set(t)) or low != len(plat_set(t)):
        raise InternalInvariantError(f"peak counts disagree with statistics for {t.word}")
    return path


# -- labeled matchings (k = 2) ------------------------------------------------

@dataclass(frozen=True)
class LabeledMatching:
    """A perfect matching of [2n] with arcs labeled 1..n, listed by left end."""

    n: int
    arcs: tuple[tuple[int, int, int], ...]

    def __str__(self) -> str:
        return " ".join(f"{l}-{r}:{v}" for l, r, v in self.arcs)


def canon2_to_matching(word: Sequence[int], n: int) -> LabeledMatching:
    """Join the two copies of each value of a canon word (k = 2) by an arc.

    The arcs of a canon word never nest, and read left to right they spell
    the voice (both asserted).
    """
    w = check_multiset(word, n, 2)
    sigma = is_canon(w, n, 2)
    if sigma is None:
        raise ValueError("not a canon word: voices differ")
    first: dict[int, int] = {}
    arcs = []
    for i, v in enumerate(w, 1):
        if v in first:
            arcs.append((first[v], i, v))
        else:
            first[v] = i
    arcs.sort()
    rights = [r for _, r, _ in arcs]
    labels = tuple(v for _, _, v in arcs)
    if rights != sorted(rights) or labels != sigma:
        raise InternalInvariantError(f"arcs of canon word {w} nest or misspell the voice")
    return LabeledMatching(n, tuple(arcs))


# -- serialization ------------------------------------------------------------

def format_tableau_grid(t: RectTableau) -> str:
    """Grid form with '/' between rows, e.g. "1 3/2 4"."""
    return "/".join(format_word(row) for row in t.grid)


def parse_tableau_grid(text: str) -> RectTableau:
    rows = []
    for part in text.split("/"):
        try:
            rows.append([int(x) for x in part.split()])
        except ValueError:
            raise ValueError(f"grid rows contain integers only: {part!r}") from None
    return tableau_from_grid(rows)


def parse_tableau_word(text: str) -> RectTableau:
    """Parse a tableau word, inferring the shape from its content."""
    parts = text.split()
    try:
        w = [int(x) for x in parts]
    except ValueError:
        raise ValueError(f"tableau words contain integers only: {text!r}") from None
    if not w:
        raise ValueError("empty tableau word")
    n = max(w)
    if len(w) % n:
        raise ValueError(f"word length {len(w)} is not a multiple of its largest letter {n}")
    return tableau_from_word(n, len(w) // n, w)


def tableau_to_json(t: RectTableau) -> dict:
    return {"n": t.n, "k": t.k, "word": list(t.word)}


def tableau_from_json(obj: dict) -> RectTableau:
    try:
        n, k, word = obj["n"], obj["k"], obj["word"]
    except (TypeError, KeyError):
        raise ValueError('tableau JSON needs keys "n", "k", "word"') from None
    return tableau_from_word(n, k, word)

"""Words, permutations, and descent statistics.

A word is a finite sequence of positive integers; a permutation of [n] is a
word in which each of 1..n appears exactly once.  Positions are 1-indexed
everywhere: the descent set of a word of length m is a subset of [m-1].

A word over the multiset {1^k, ..., n^k} is *canon* if its k voices agree,
where the j-th voice is the subsequence formed by the j-th copies of each
value, read left to right.
"""

from __future__ import annotations

from itertools import permutations as _lex_permutations
from typing import Iterator, Sequence


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed property failed at runtime.

    Raised only for conditions the theory promises can never happen; seeing
    one means a bug in this package, not bad input.
    """


def _check_word(word: Sequence[int]) -> None:
    for x in word:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"words contain positive integers only, got {x!r}")


def descent_set(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i with word[i] > word[i+1], 1-indexed.

    >>> descent_set((3, 5, 3, 2, 5, 2, 1, 4, 1, 4))
    (2, 3, 5, 6, 8)
    >>> descent_set((1, 1, 2))
    ()
    """
    _check_word(word)
    return tuple(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def plateau_set(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i with word[i] == word[i+1], 1-indexed.

    >>> plateau_set((1, 1, 2, 2))
    (1, 3)
    """
    _check_word(word)
    return tuple(i + 1 for i in range(len(word) - 1) if word[i] == word[i + 1])


def check_permutation(perm: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Validate that perm is a permutation of 1..n and return it as a tuple."""
    p = tuple(perm)
    m = n if n is not None else len(p)
    if len(p) != m or sorted(p) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {p}")
    return p


def inversions(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j].

    >>> inversions((3, 1, 2))
    2
    """
    p = check_permutation(perm)
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def enumerate_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of [n] in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return iter(_lex_permutations(range(1, n + 1)))


def reverse_layered(n: int, positions: Sequence[int]) -> tuple[int, ...]:
    """The unique reverse-layered permutation of [n] with the given descent set.

    Positions i_1 < ... < i_d split [n] into consecutive blocks; each block is
    filled with its values in increasing order, largest values first:
    (n-i_1+1)..n, then (n-i_2+1)..(n-i_1), and so on down to 1..(n-i_d).

    >>> reverse_layered(9, (3, 4, 7))
    (7, 8, 9, 6, 3, 4, 5, 1, 2)
    >>> reverse_layered(4, ())
    (1, 2, 3, 4)
    """
    cuts = sorted(set(positions))
    if any(not 1 <= i <= n - 1 for i in cuts):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {positions}")
    bounds = [0, *cuts, n]
    out: list[int] = []
    for lo, hi in zip(bounds, bounds[1:]):
        out.extend(range(n - hi + 1, n - lo + 1))
    result = tuple(out)
    if descent_set(result) != tuple(cuts):
        raise InternalInvariantError(f"reverse_layered({n}, {cuts}) built {result}")
    return result


def transposition_schedule(sigma: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Position pairs whose successive transposition turns sigma into the
    reverse-layered permutation with the same descent set.

    At each step, m is the largest value not yet in place, r is its target
    position, and s is the current position of the value following sigma_r;
    the entries at r and s are then swapped.  Every recorded pair satisfies
    s - r > 1 and carries consecutive values at the moment it is applied, so
    each swap adds exactly one inversion and keeps the descent set.

    >>> transposition_schedule((1, 4, 2, 3, 5))
    ((2, 5), (1, 3), (1, 4), (1, 5))
    >>> transposition_schedule((3, 1, 4, 2))
    ((1, 3), (2, 4))
    """
    p = check_permutation(sigma)
    n = len(p)
    target = reverse_layered(n, descent_set(p))
    where_target = _positions(target)
    cur = list(p)
    schedule: list[tuple[int, int]] = []
    before = descent_set(p)
    for _ in range(n * (n - 1) // 2 + 1):
        if tuple(cur) == target:
            break
        where = _positions(cur)
        m = max(v for v in cur if where[v] != where_target[v])
        r = where_target[m]
        s = where[cur[r - 1] + 1]
        if not s - r > 1:
            raise InternalInvariantError(f"schedule step ({r}, {s}) for {p} is adjacent")
        schedule.append((r, s))
        cur[r - 1], cur[s - 1] = cur[s - 1], cur[r - 1]
        if descent_set(cur) != before:
            raise InternalInvariantError(f"schedule step ({r}, {s}) moved the descent set of {p}")
    else:
        raise InternalInvariantError(f"schedule for {p} did not terminate")
    return tuple(schedule)


def _positions(perm: Sequence[int]) -> dict[int, int]:
    return {v: i + 1 for i, v in enumerate(perm)}


def voice(word: Sequence[int], j: int, n: int, k: int) -> tuple[int, ...]:
    """The j-th voice: the subsequence of j-th copies of each value.

    >>> voice((3, 5, 3, 2, 5, 2, 1, 4, 1, 4), 2, 5, 2)
    (3, 5, 2, 1, 4)
    """
    check_multiset(word, n, k)
    if not 1 <= j <= k:
        raise ValueError(f"voice index must lie in 1..{k}: {j}")
    seen: dict[int, int] = {}
    out: list[int] = []
    for x in word:
        seen[x] = seen.get(x, 0) + 1
        if seen[x] == j:
            out.append(x)
    if len(out) != n:
        raise InternalInvariantError(f"voice {j} of {word} has length {len(out)}")
    return tuple(out)


def check_multiset(word: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    """Validate that word uses each of 1..n exactly k times; return a tuple."""
    w = tuple(word)
    _check_word(w)
    if len(w) != n * k or any(w.count(v) != k for v in range(1, n + 1)):
        raise ValueError(f"wrong multiset: expected each of 1..{n} exactly {k} times")
    return w


def is_canon(word: Sequence[int], n: int, k: int) -> tuple[int, ...] | None:
    """The common voice if all k voices of word coincide, else None.

    >>> is_canon((1, 2, 1, 2), 2, 2)
    (1, 2)
    >>> is_canon((1, 2, 2, 1), 2, 2) is None
    True
    """
    first = voice(word, 1, n, k)
    for j in range(2, k + 1):
        if voice(word, j, n, k) != first:
            return None
    return check_permutation(first, n)


# -- serialization ------------------------------------------------------------

def parse_word(text: str) -> tuple[int, ...]:
    """Parse a whitespace-separated word such as "3 5 3 2"."""
    parts = text.split()
    if not parts:
        raise ValueError("empty word")
    out = []
    for part in parts:
        try:
            x = int(part)
        except ValueError:
            raise ValueError(f"not an integer: {part!r}") from None
        out.append(x)
    _check_word(out)
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def parse_permutation(text: str, n: int | None = None) -> tuple[int, ...]:
    return check_permutation(parse_word(text), n)


def parse_index_set(text: str) -> tuple[int, ...]:
    """Parse a position set such as "{2,4,7}" or "{}"."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"index sets look like {{2,4,7}}: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    try:
        items = sorted(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"index sets contain integers only: {text!r}") from None
    if len(set(items)) != len(items) or items[0] < 1:
        raise ValueError(f"index sets contain distinct positive positions: {text!r}")
    return tuple(items)


def format_index_set(positions: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(positions)) + "}"

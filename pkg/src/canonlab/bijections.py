"""Block-rewriting bijections on rectangular tableaux.

All three families act on the tableau word by permuting letters inside
maximal blocks over a two-letter alphabet.  Because the two letters are
non-adjacent rows (or whole row intervals separated by a buffer), the
ballot condition couples each of them only to letters that stay fixed
through the block, so any such rewrite maps tableaux to tableaux; every
output is revalidated anyway.

f swaps the run pairs of each block: r^a s^b ... -> s^b r^a ....  F does
the same one notch more carefully, reading each block cyclically and
splitting it at every s-to-r corner.  g applies the f rule not to two rows
but to the letter classes X = rows 1..l and Z = rows m+1..n of a simplified
x/y/z word, keeping the relative order inside each class.

Composites follow a permutation sigma: f_sigma and F_sigma walk the
transposition schedule from sigma to its reverse-layered form, and g_S
peels a descent set S one maximum at a time.  phi_sigma chains both, and
satisfies des_sigma(T) = des(phi_sigma(T)) + des(sigma) with plateaus
preserved, des taken with respect to the identity relabeling.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tableaux import RectTableau, des_sigma_set, enumerate_tableaux, plat_set, tableau_from_word
from .words import (
    InternalInvariantError,
    check_permutation,
    descent_set,
    enumerate_permutations,
    transposition_schedule,
)


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal runs of positions (0-based, half-open) over a letter pair."""

    host: tuple[int, ...]
    letters: frozenset
    runs: tuple[tuple[int, int], ...]


def decompose(word: Sequence[int], letters: Iterable) -> BlockDecomposition:
    """Split out the maximal blocks of word over the given letters."""
    host = tuple(word)
    mark = frozenset(letters)
    runs = []
    start = None
    for i, x in enumerate(host):
        if x in mark:
            if start is None:
                start = i
        elif start is not None:
            runs.append((start, i))
            start = None
    if start is not None:
        runs.append((start, len(host)))
    return BlockDecomposition(host, mark, tuple(runs))


def _run_length(seq: Sequence) -> list[tuple[object, int]]:
    runs: list[tuple[object, int]] = []
    for x in seq:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return runs


def _flip(seq: Sequence) -> list:
    """The f rewrite of one block: swap each adjacent pair of letter runs.

    Blocks starting and ending with the same letter are fixed; otherwise the
    run count is even and r^a1 s^b1 ... r^aj s^bj becomes s^b1 r^a1 ...
    (and symmetrically when the block starts with s).
    """
    if seq[0] == seq[-1]:
        return list(seq)
    runs = _run_length(seq)
    out: list = []
    for (l1, c1), (l2, c2) in zip(runs[::2], runs[1::2]):
        out.extend([l2] * c2)
        out.extend([l1] * c1)
    return out


def _rotate(seq: Sequence, r, s) -> list:
    """The F rewrite of one block: split cyclically at s-to-r corners and
    turn each cyclic piece r^a s^b into s^b r^a in place."""
    size = len(seq)
    splits = [i for i in range(size) if seq[i] == s and seq[(i + 1) % size] == r]
    if not splits:
        return list(seq)
    out = list(seq)
    for idx, cut in enumerate(splits):
        positions = []
        p = (cut + 1) % size
        stop = splits[(idx + 1) % len(splits)]
        while True:
            positions.append(p)
            if p == stop:
                break
            p = (p + 1) % size
        piece = [seq[q] for q in positions]
        a = piece.count(r)
        if piece != [r] * a + [s] * (len(piece) - a):
            raise InternalInvariantError(f"cyclic piece {piece} is not r^a s^b")
        rewritten = [s] * (len(piece) - a) + [r] * a
        for q, letter in zip(positions, rewritten):
            out[q] = letter
    return out


def _rebuild(t: RectTableau, word: Sequence[int], what: str) -> RectTableau:
    try:
        return tableau_from_word(t.n, t.k, word)
    except ValueError as exc:
        raise InternalInvariantError(f"{what} broke the ballot condition on {t.word}") from exc


def _check_rows(t: RectTableau, r: int, s: int) -> None:
    if not (1 <= r <= t.n and 1 <= s <= t.n):
        raise ValueError(f"rows must lie in 1..{t.n}: ({r}, {s})")
    if abs(r - s) <= 1:
        raise ValueError(f"rows must be non-adjacent: ({r}, {s})")


def f_rs(t: RectTableau, r: int, s: int) -> RectTableau:
    """Apply the f rewrite to every maximal {r, s}-block.  An involution,
    symmetric in r and s; preserves des_sigma for sigma placing r, s on
    consecutive values, turning des_sigma into des_tau for the swap tau."""
    _check_rows(t, r, s)
    word = list(t.word)
    for lo, hi in decompose(word, (r, s)).runs:
        word[lo:hi] = _flip(word[lo:hi])
    return _rebuild(t, word, f"f_{r}{s}")


def F_rs(t: RectTableau, r: int, s: int) -> RectTableau:
    """Apply the F rewrite to every maximal {r, s}-block.  Inverse of F_sr;
    preserves the full set Des_sigma, not just its size."""
    _check_rows(t, r, s)
    word = list(t.word)
    for lo, hi in decompose(word, (r, s)).runs:
        word[lo:hi] = _rotate(word[lo:hi], r, s)
    return _rebuild(t, word, f"F_{r}{s}")


def simplified_word(t: RectTableau, l: int, m: int) -> str:
    """Letters x, y, z for rows 1..l, l+1..m, m+1..n."""
    if not 0 <= l < m <= t.n:
        raise ValueError(f"cut levels must satisfy 0 <= l < m <= {t.n}: ({l}, {m})")
    return "".join("x" if r <= l else "y" if r <= m else "z" for r in t.word)


def g_lm(t: RectTableau, l: int, m: int) -> RectTableau:
    """Apply the f rewrite to the {x, z}-blocks of the simplified word,
    then refill each letter class with its original subsequence in order.
    An involution; the identity when l = 0 or m = n."""
    simp = list(simplified_word(t, l, m))
    for lo, hi in decompose(simp, "xz").runs:
        simp[lo:hi] = _flip(simp[lo:hi])
    return _refill(t, simp, l, m)


def _refill(t: RectTableau, simp: Sequence[str], l: int, m: int) -> RectTableau:
    streams = {
        "x": iter([r for r in t.word if r <= l]),
        "y": iter([r for r in t.word if l < r <= m]),
        "z": iter([r for r in t.word if r > m]),
    }
    word = [next(streams[c]) for c in simp]
    return _rebuild(t, word, f"g_{l}{m}")


# -- composites along a permutation -------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    """One rewrite in a composite map, with the full words around it."""

    op: str
    params: tuple[int, int]
    before: tuple[int, ...]
    after: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.op}_{self.params[0]}{self.params[1]}"

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "params": list(self.params),
            "before": list(self.before),
            "after": list(self.after),
        }


def _step(op: str, fn, t: RectTableau, a: int, b: int, steps: list[TraceStep]) -> RectTableau:
    u = fn(t, a, b)
    steps.append(TraceStep(op, (a, b), t.word, u.word))
    return u


def f_sigma_trace(t: RectTableau, sigma: Sequence[int]) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    p = check_permutation(sigma, t.n)
    steps: list[TraceStep] = []
    for r, s in transposition_schedule(p):
        t = _step("f", f_rs, t, r, s, steps)
    return t, tuple(steps)


def F_sigma_trace(t: RectTableau, sigma: Sequence[int]) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    p = check_permutation(sigma, t.n)
    steps: list[TraceStep] = []
    for r, s in transposition_schedule(p):
        t = _step("F", F_rs, t, r, s, steps)
    return t, tuple(steps)


def g_chain(n: int, positions: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """The (l, m) pairs g_S applies, largest element of S first.

    >>> g_chain(8, (2, 5, 6))
    ((5, 6), (2, 5), (0, 2))
    """
    cuts = sorted(set(positions))
    if any(not 1 <= i <= n - 1 for i in cuts):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {positions}")
    padded = [0, *cuts]
    return tuple((padded[j - 1], padded[j]) for j in range(len(padded) - 1, 0, -1))


def g_S_trace(t: RectTableau, positions: Sequence[int]) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    steps: list[TraceStep] = []
    for l, m in g_chain(t.n, positions):
        t = _step("g", g_lm, t, l, m, steps)
    return t, tuple(steps)


def phi_sigma_trace(t: RectTableau, sigma: Sequence[int]) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    p = check_permutation(sigma, t.n)
    t, f_steps = f_sigma_trace(t, p)
    t, g_steps = g_S_trace(t, descent_set(p))
    return t, f_steps + g_steps


def f_sigma(t: RectTableau, sigma: Sequence[int]) -> RectTableau:
    """Chain f along the transposition schedule of sigma; carries des_sigma
    to des_lambda for the reverse-layered lambda with Des(lambda) = Des(sigma)."""
    return f_sigma_trace(t, sigma)[0]


def F_sigma(t: RectTableau, sigma: Sequence[int]) -> RectTableau:
    """Chain F along the transposition schedule; carries the set Des_sigma."""
    return F_sigma_trace(t, sigma)[0]


def g_S(t: RectTableau, positions: Sequence[int]) -> RectTableau:
    """Chain g down a descent set; drops des_lambda by one per element, ending
    at the plain descent count over the identity relabeling."""
    return g_S_trace(t, positions)[0]


def phi_sigma(t: RectTableau, sigma: Sequence[int]) -> RectTableau:
    """g_S after f_sigma: des_sigma(t) = des(phi_sigma(t)) + des(sigma), and
    plat(phi_sigma(t)) = plat(t)."""
    return phi_sigma_trace(t, sigma)[0]


def f_rs_trace(t: RectTableau, r: int, s: int) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    steps: list[TraceStep] = []
    return _step("f", f_rs, t, r, s, steps), tuple(steps)


def F_rs_trace(t: RectTableau, r: int, s: int) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    steps: list[TraceStep] = []
    return _step("F", F_rs, t, r, s, steps), tuple(steps)


def g_lm_trace(t: RectTableau, l: int, m: int) -> tuple[RectTableau, tuple[TraceStep, ...]]:
    steps: list[TraceStep] = []
    return _step("g", g_lm, t, l, m, steps), tuple(steps)


def f_sigma_inverse(t: RectTableau, sigma: Sequence[int]) -> RectTableau:
    """Undo f_sigma: replay the schedule backwards (each f step is its own
    inverse)."""
    p = check_permutation(sigma, t.n)
    for r, s in reversed(transposition_schedule(p)):
        t = f_rs(t, r, s)
    return t


def F_sigma_inverse(t: RectTableau, sigma: Sequence[int]) -> RectTableau:
    """Undo F_sigma: replay the schedule backwards with the rows swapped."""
    p = check_permutation(sigma, t.n)
    for r, s in reversed(transposition_schedule(p)):
        t = F_rs(t, s, r)
    return t


# -- diagnostics --------------------------------------------------------------

def find_joint_des_set_counterexample(
    n: int, k: int, *, cap: int = 20
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] | None:
    """Search for sigma, tau with equal descent sets whose joint statistics
    (Des_sigma as a set, Plat) are not equidistributed over SYT(k^n).

    Returns (sigma, tau, witness) where witness is a (descent set, plateau
    set) pair hit a different number of times by the two statistics, or None
    if the grid shows no disagreement.  For k <= 2 none exists; for k >= 3
    small grids already produce witnesses.
    """
    tableaux = list(enumerate_tableaux(n, k, cap=cap))
    by_descents: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in enumerate_permutations(n):
        by_descents.setdefault(descent_set(p), []).append(p)
    for group in by_descents.values():
        profiles = [
            (p, Counter((des_sigma_set(t, p), plat_set(t)) for t in tableaux))
            for p in group
        ]
        for i, (p, cp) in enumerate(profiles):
            for q, cq in profiles[i + 1:]:
                if cp != cq:
                    for pair in cp.keys() | cq.keys():
                        if cp[pair] != cq[pair]:
                            return p, q, pair
    return None

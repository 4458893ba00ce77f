"""Exhaustive verification suites for the counting identities.

Each suite checks one identity on a grid of (n, k) shapes,
always computing the two sides through independent code paths: canon
polynomials come from tableau profiles, their partners from permutation and
tableau enumeration; Sulanke's closed formula is matched against raw ascent
counts; the generating-function suites compare exact truncated series.

A failing instance carries a JSON witness with enough data to replay it by
hand (the shape, the voice, the tableau word, both values).  Reports render
as JSON lines (one instance per line plus a trailer) or as a human summary.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .bijections import (
    F_rs,
    F_sigma,
    F_sigma_inverse,
    f_rs,
    f_sigma,
    f_sigma_inverse,
    g_lm,
    phi_sigma,
)
from .parallel import parallel_map
from .polynomials import (
    DEFAULT_EULERIAN_CAP,
    canon_poly,
    canon_poly_sigma,
    descent_profiles,
    eulerian,
    gen_narayana,
    poly,
    polynomial_to_json,
    sulanke_count,
)
from .series import DEFAULT_SERIES_ORDER, verify_eulerian_egf, verify_narayana_gf
from .tableaux import (
    DEFAULT_ENUMERATION_CAP,
    asc_set,
    des_set,
    des_sigma_set,
    enumerate_tableaux,
    plat_set,
    syt_count,
)
from .words import check_permutation, descent_set, enumerate_permutations, reverse_layered

SUITE_NAMES = (
    "main",
    "per-sigma",
    "bij",
    "lemma-fF",
    "lemma-g",
    "symmetry",
    "ndes",
    "equidist",
    "gf-eulerian",
    "gf-narayana",
)

DEFAULT_MAX_N = 4
DEFAULT_MAX_K = 3


@dataclass(frozen=True)
class InstanceResult:
    params: dict
    ok: bool
    detail: str
    witness: dict | None = None


@dataclass(frozen=True)
class Report:
    suite: str
    instances: tuple[InstanceResult, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.instances)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.instances if not r.ok)

    def json_lines(self) -> list[str]:
        lines = [
            json.dumps(
                {
                    "suite": self.suite,
                    "params": r.params,
                    "ok": r.ok,
                    "detail": r.detail,
                    "witness": r.witness,
                },
                sort_keys=True,
            )
            for r in self.instances
        ]
        lines.append(
            json.dumps(
                {
                    "suite": self.suite,
                    "ok": self.ok,
                    "instances": len(self.instances),
                    "failures": self.failures,
                    "elapsed": round(self.elapsed, 3),
                },
                sort_keys=True,
            )
        )
        return lines

    def summary_lines(self) -> list[str]:
        lines = []
        for r in self.instances:
            args = ", ".join(f"{key}={val}" for key, val in r.params.items())
            status = "pass" if r.ok else "FAIL"
            lines.append(f"  {status} ({args}): {r.detail}")
        verdict = "pass" if self.ok else "FAIL"
        lines.append(
            f"suite {self.suite}: {verdict}, {len(self.instances)} instances, "
            f"{self.failures} failures ({self.elapsed:.1f}s)"
        )
        return lines


def _result(params: dict, ok: bool, detail: str, witness: dict | None = None) -> InstanceResult:
    return InstanceResult(params, ok, detail, witness if not ok else None)


# -- product identities -------------------------------------------------------

def check_main(n: int, k: int) -> InstanceResult:
    """C^k_n(t, u) = A_n(t) * N_{n,k}(t, u)."""
    params = {"n": n, "k": k}
    lhs = canon_poly(n, k, max_n=n, max_k=k)
    rhs = eulerian(n) * gen_narayana(n, k)
    witness = {"lhs": polynomial_to_json(lhs), "rhs": polynomial_to_json(rhs)}
    detail = f"{lhs.evaluate(1, 1)} canon words"
    return _result(params, lhs == rhs, detail, witness)


def check_per_sigma(n: int, k: int) -> InstanceResult:
    """C^{k,sigma}_n(t, u) = t^des(sigma) * N_{n,k}(t, u) for every sigma."""
    params = {"n": n, "k": k}
    profiles = descent_profiles(n, k)
    narayana = gen_narayana(n, k)
    for sigma in enumerate_permutations(n):
        lhs = canon_poly_sigma(n, k, sigma, max_n=n, max_k=k, profiles=profiles)
        rhs = poly({(len(descent_set(sigma)), 0): 1}) * narayana
        if lhs != rhs:
            witness = {
                "sigma": list(sigma),
                "lhs": polynomial_to_json(lhs),
                "rhs": polynomial_to_json(rhs),
            }
            return _result(params, False, f"voice {sigma} disagrees", witness)
    return _result(params, True, f"all {len(list(enumerate_permutations(n)))} voices match")


# -- bijection suites ---------------------------------------------------------

def check_bij_property(n: int, k: int) -> InstanceResult:
    """phi_sigma is injective with des_sigma(T) = des(phi(T)) + des(sigma) and
    plat preserved, for every sigma."""
    params = {"n": n, "k": k}
    tableaux = list(enumerate_tableaux(n, k))
    universe = set(tableaux)
    for sigma in enumerate_permutations(n):
        shift = len(descent_set(sigma))
        images = set()
        for t in tableaux:
            u = phi_sigma(t, sigma)
            ok = (
                u in universe
                and len(des_sigma_set(t, sigma)) == len(asc_set(u)) + shift
                and len(plat_set(t)) == len(plat_set(u))
            )
            if not ok:
                witness = {"sigma": list(sigma), "tableau": list(t.word), "image": list(u.word)}
                return _result(params, False, f"statistics broken for {sigma}", witness)
            images.add(u)
        if len(images) != len(tableaux):
            witness = {"sigma": list(sigma), "images": len(images), "tableaux": len(tableaux)}
            return _result(params, False, f"phi not injective for {sigma}", witness)
    return _result(params, True, f"{len(tableaux)} tableaux, every voice bijective")


def check_lemma_fF(n: int, k: int) -> InstanceResult:
    """Single swaps: f carries (des_sigma, plat) counts to (des_tau, plat),
    F carries the set Des_sigma to Des_tau; f and F invert as promised."""
    params = {"n": n, "k": k}
    tableaux = list(enumerate_tableaux(n, k))
    triples = 0
    for sigma in enumerate_permutations(n):
        where = {v: i + 1 for i, v in enumerate(sigma)}
        for low in range(1, n):
            r, s = where[low], where[low + 1]
            if abs(r - s) <= 1:
                continue
            tau = list(sigma)
            tau[r - 1], tau[s - 1] = low + 1, low
            triples += 1
            for t in tableaux:
                ft, Ft = f_rs(t, r, s), F_rs(t, r, s)
                ok = (
                    len(des_sigma_set(t, sigma)) == len(des_sigma_set(ft, tau))
                    and len(plat_set(t)) == len(plat_set(ft))
                    and des_sigma_set(t, sigma) == des_sigma_set(Ft, tau)
                )
                if not ok:
                    witness = {
                        "sigma": list(sigma),
                        "rows": [r, s],
                        "tableau": list(t.word),
                        "f_image": list(ft.word),
                        "F_image": list(Ft.word),
                    }
                    return _result(params, False, f"swap ({r},{s}) of {sigma} broken", witness)
    for r in range(1, n + 1):
        for s in range(r + 2, n + 1):
            for t in tableaux:
                ok = (
                    f_rs(f_rs(t, r, s), r, s) == t
                    and f_rs(t, r, s) == f_rs(t, s, r)
                    and F_rs(F_rs(t, r, s), s, r) == t
                )
                if not ok:
                    witness = {"rows": [r, s], "tableau": list(t.word)}
                    return _result(params, False, f"involution broken at ({r},{s})", witness)
    return _result(params, True, f"{triples} admissible (sigma, r, s) triples")


def check_lemma_g(n: int, k: int) -> InstanceResult:
    """Peeling the largest descent: des_lambda(T) = des_lambda'(g(T)) + 1 with
    plat preserved, over every nonempty descent set; g is an involution."""
    params = {"n": n, "k": k}
    tableaux = list(enumerate_tableaux(n, k))
    sets = 0
    for size in range(1, n):
        for cut_set in combinations(range(1, n), size):
            m = cut_set[-1]
            low = cut_set[-2] if size > 1 else 0
            lam = reverse_layered(n, cut_set)
            lam_next = reverse_layered(n, cut_set[:-1])
            sets += 1
            for t in tableaux:
                u = g_lm(t, low, m)
                ok = (
                    len(des_sigma_set(t, lam)) == len(des_sigma_set(u, lam_next)) + 1
                    and len(plat_set(t)) == len(plat_set(u))
                )
                if not ok:
                    witness = {
                        "S": list(cut_set),
                        "lambda": list(lam),
                        "tableau": list(t.word),
                        "image": list(u.word),
                    }
                    return _result(params, False, f"peeling {cut_set} broken", witness)
    for low in range(n + 1):
        for m in range(low + 1, n + 1):
            for t in tableaux:
                ok = g_lm(g_lm(t, low, m), low, m) == t
                if ok and (low == 0 or m == n):
                    ok = g_lm(t, low, m) == t
                if not ok:
                    witness = {"l": low, "m": m, "tableau": list(t.word)}
                    return _result(params, False, f"g involution broken at ({low},{m})", witness)
    return _result(params, True, f"{sets} descent sets peeled")


def check_equidistribution(n: int, k: int) -> InstanceResult:
    """Voices with equal descent sets: f-conjugation matches (des, plat)
    counts, F-conjugation matches descent sets, both bijectively."""
    params = {"n": n, "k": k}
    tableaux = list(enumerate_tableaux(n, k))
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for sigma in enumerate_permutations(n):
        classes.setdefault(descent_set(sigma), []).append(sigma)
    pairs = 0
    for group in classes.values():
        for sigma, tau in combinations(group, 2):
            pairs += 1
            images = set()
            for t in tableaux:
                u = f_sigma_inverse(f_sigma(t, sigma), tau)
                v = F_sigma_inverse(F_sigma(t, sigma), tau)
                ok = (
                    len(des_sigma_set(t, sigma)) == len(des_sigma_set(u, tau))
                    and len(plat_set(t)) == len(plat_set(u))
                    and des_sigma_set(t, sigma) == des_sigma_set(v, tau)
                )
                if not ok:
                    witness = {
                        "sigma": list(sigma),
                        "tau": list(tau),
                        "tableau": list(t.word),
                        "f_image": list(u.word),
                        "F_image": list(v.word),
                    }
                    return _result(params, False, f"pair {sigma} / {tau} broken", witness)
                images.add(u)
            if len(images) != len(tableaux):
                witness = {"sigma": list(sigma), "tau": list(tau)}
                return _result(params, False, f"pair {sigma} / {tau} not bijective", witness)
    return _result(params, True, f"{pairs} same-descent-set pairs")


# -- count identities ---------------------------------------------------------

def _dense(coeffs: tuple[int, ...], size: int) -> list[int]:
    return list(coeffs) + [0] * (size - len(coeffs))


def check_symmetry(n: int, k: int) -> InstanceResult:
    """Palindromicity: canon descents about k(n-1)/2, tableau ascents about
    (k-1)(n-1)/2, and invariance of ascent counts under transposing the shape."""
    params = {"n": n, "k": k}
    canon_dist = _dense(canon_poly(n, k, max_n=n, max_k=k).at_u1(), k * (n - 1) + 1)
    narayana_dist = _dense(gen_narayana(n, k).at_u1(), (k - 1) * (n - 1) + 1)
    transpose_dist = _dense(gen_narayana(k, n).at_u1(), (k - 1) * (n - 1) + 1)
    ok = (
        canon_dist == canon_dist[::-1]
        and narayana_dist == narayana_dist[::-1]
        and narayana_dist == transpose_dist
    )
    witness = {
        "canon_descents": canon_dist,
        "tableau_ascents": narayana_dist,
        "transposed_ascents": transpose_dist,
    }
    return _result(params, ok, f"descent profile {canon_dist}", witness)


def check_ndes(n: int, k: int) -> InstanceResult:
    """Sulanke's closed formula against raw ascent counts, and the shift
    des(T) = asc-index + n - 1."""
    params = {"n": n, "k": k}
    asc_counter: Counter = Counter()
    des_counter: Counter = Counter()
    total = 0
    for t in enumerate_tableaux(n, k):
        asc_counter[len(asc_set(t))] += 1
        des_counter[len(des_set(t))] += 1
        total += 1
    top = (k - 1) * (n - 1)
    for h in range(top + 1):
        value = sulanke_count(n, k, h)
        if value != asc_counter.get(h, 0) or value != des_counter.get(h + n - 1, 0):
            witness = {
                "h": h,
                "sulanke": value,
                "asc_count": asc_counter.get(h, 0),
                "des_count": des_counter.get(h + n - 1, 0),
            }
            return _result(params, False, f"h = {h} disagrees", witness)
    if total != syt_count(n, k) or sum(asc_counter.values()) != total:
        witness = {"enumerated": total, "hook_count": syt_count(n, k)}
        return _result(params, False, "enumeration does not match hook count", witness)
    return _result(params, True, f"{total} tableaux, h in 0..{top}")


# -- generating functions -----------------------------------------------------

def check_gf_eulerian(order: int) -> InstanceResult:
    outcome = verify_eulerian_egf(order)
    witness = {"first_failure": outcome.first_failure}
    return _result({"order": order}, outcome.ok, f"EGF identity through z^{order}", witness)


def check_gf_narayana(order: int) -> InstanceResult:
    outcome = verify_narayana_gf(order)
    witness = {"first_failure": outcome.first_failure}
    return _result({"order": order}, outcome.ok, f"GF square identity through z^{order}", witness)


# -- driver -------------------------------------------------------------------

_GRID_SUITES = {
    "main": check_main,
    "per-sigma": check_per_sigma,
    "bij": check_bij_property,
    "lemma-fF": check_lemma_fF,
    "lemma-g": check_lemma_g,
    "symmetry": check_symmetry,
    "ndes": check_ndes,
    "equidist": check_equidistribution,
}

_ORDER_SUITES = {
    "gf-eulerian": check_gf_eulerian,
    "gf-narayana": check_gf_narayana,
}

_NEEDS_VOICES = {"main", "per-sigma", "bij", "lemma-fF", "symmetry", "equidist"}


def suite_grid(
    suite: str,
    *,
    max_n: int | None = None,
    max_k: int | None = None,
    order: int | None = None,
) -> list[dict]:
    """Parameter instances for one suite; refuses cap violations up front."""
    if suite in _ORDER_SUITES:
        return [{"order": order if order is not None else DEFAULT_SERIES_ORDER}]
    if suite not in _GRID_SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    top_n = max_n if max_n is not None else DEFAULT_MAX_N
    top_k = max_k if max_k is not None else DEFAULT_MAX_K
    custom = max_n is not None or max_k is not None
    shapes = [(n, k) for n in range(1, top_n + 1) for k in range(1, top_k + 1)]
    if not custom:
        if suite == "main":
            shapes += [(5, 2), (5, 3), (4, 4)]
        elif suite == "symmetry":
            shapes += [(5, 2), (5, 3)]
        elif suite == "lemma-g":
            shapes = [(n, k) for n in range(1, 6) for k in range(1, 4)]
        elif suite == "ndes":
            shapes = [(n, k) for n in range(1, 17) for k in range(1, 17) if n * k <= 16]
    for n, k in shapes:
        if n * k > DEFAULT_ENUMERATION_CAP:
            raise ValueError(
                f"enumeration cap exceeded for suite {suite}: n*k = {n * k} > {DEFAULT_ENUMERATION_CAP}"
            )
        if suite in _NEEDS_VOICES and n > DEFAULT_EULERIAN_CAP:
            raise ValueError(
                f"enumeration cap exceeded for suite {suite}: n = {n} > {DEFAULT_EULERIAN_CAP}"
            )
    return [{"n": n, "k": k} for n, k in shapes]


def _run_instance(job: tuple[str, dict]) -> InstanceResult:
    suite, params = job
    if suite in _ORDER_SUITES:
        return _ORDER_SUITES[suite](**params)
    return _GRID_SUITES[suite](**params)


def run_suite(
    suite: str,
    *,
    max_n: int | None = None,
    max_k: int | None = None,
    order: int | None = None,
    workers: int = 1,
) -> Report:
    grid = suite_grid(suite, max_n=max_n, max_k=max_k, order=order)
    start = time.perf_counter()
    results = parallel_map(_run_instance, [(suite, params) for params in grid], workers)
    return Report(suite, tuple(results), time.perf_counter() - start)


def run_suites(
    suites: list[str] | None = None,
    *,
    max_n: int | None = None,
    max_k: int | None = None,
    order: int | None = None,
    workers: int = 1,
) -> list[Report]:
    names = list(SUITE_NAMES) if suites is None else suites
    return [
        run_suite(name, max_n=max_n, max_k=max_k, order=order, workers=workers)
        for name in names
    ]

"""Command-line interface.

Subcommands mirror the library layers: `enumerate` and `convert` move
between representations, `stats` reads off descent data, `poly` prints the
counting polynomials, `bij apply` runs the rewriting maps (optionally with
a JSON-lines trace), and `verify` drives the identity suites.

Exit codes: 0 on success (and on all-pass verification), 1 when a
verification suite reports failures, 2 on usage or domain errors.  Words,
permutations, and tableau words read and print as whitespace-separated
integers; grids separate rows with '/'; position sets print as {2,4,7}.
With no input flag, `stats`, `bij apply`, and `convert` read tableau words
from stdin, one per line.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bijections, verify
from .parallel import worker_count
from .polynomials import (
    CANON_MAX_K,
    CANON_MAX_N,
    canon_poly,
    canon_poly_sigma,
    eulerian,
    gen_narayana,
    narayana_dyck,
    polynomial_to_json,
    sulanke_count,
)
from .series import DEFAULT_SERIES_ORDER
from .tableaux import (
    DEFAULT_ENUMERATION_CAP,
    RectTableau,
    asc_set,
    canon_to_tableau,
    canon2_to_matching,
    des_set,
    des_sigma_set,
    enumerate_dyck,
    enumerate_tableaux,
    format_tableau_grid,
    parse_tableau_grid,
    parse_tableau_word,
    plat_set,
    syt2_to_dyck,
    tableau_to_canon,
    tableau_to_json,
)
from .words import (
    descent_set,
    enumerate_permutations,
    format_index_set,
    format_word,
    is_canon,
    parse_index_set,
    parse_permutation,
    parse_word,
    plateau_set,
)


@dataclass(frozen=True)
class Config:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    canon_max_n: int = CANON_MAX_N
    canon_max_k: int = CANON_MAX_K
    series_order: int = DEFAULT_SERIES_ORDER
    workers: int = 1
    output: str = "text"

    @property
    def json(self) -> bool:
        return self.output == "json"


def _emit(line: str) -> None:
    print(line)


# -- input plumbing -----------------------------------------------------------

def _stdin_tableaux() -> list[RectTableau]:
    lines = [line.strip() for line in sys.stdin.read().splitlines()]
    tableaux = [parse_tableau_word(line) for line in lines if line]
    if not tableaux:
        raise ValueError("no tableau words on stdin")
    return tableaux


def _input_tableaux(args) -> tuple[list[RectTableau], str]:
    """Collect tableau input and remember which form it arrived in."""
    if getattr(args, "tableau_word", None):
        return [parse_tableau_word(args.tableau_word)], "word"
    if getattr(args, "tableau_grid", None):
        return [parse_tableau_grid(args.tableau_grid)], "grid"
    return _stdin_tableaux(), "word"


def _render_tableau(t: RectTableau, form: str, cfg: Config) -> str:
    if cfg.json:
        return json.dumps(tableau_to_json(t), sort_keys=True)
    if form == "grid":
        return format_tableau_grid(t)
    return format_word(t.word)


# -- enumerate ----------------------------------------------------------------

def _cmd_enumerate(args) -> int:
    cfg: Config = args.config
    if args.what == "syt":
        for t in enumerate_tableaux(args.n, args.k, cap=args.cap):
            _emit(_render_tableau(t, "grid" if args.grid else "word", cfg))
    elif args.what == "canon":
        if args.n > 10:
            raise ValueError(f"enumeration cap exceeded: n = {args.n} > 10")
        tableaux = list(enumerate_tableaux(args.n, args.k, cap=args.cap))
        words = sorted(
            tableau_to_canon(t, sigma)
            for sigma in enumerate_permutations(args.n)
            for t in tableaux
        )
        for w in words:
            _emit(json.dumps(list(w)) if cfg.json else format_word(w))
    else:
        for path in enumerate_dyck(args.n):
            _emit(json.dumps({"steps": path.steps}) if cfg.json else path.steps)
    return 0


# -- stats --------------------------------------------------------------------

def _word_stats(word: tuple[int, ...], cfg: Config) -> None:
    des, plat = descent_set(word), plateau_set(word)
    voice = None
    counts = {v: word.count(v) for v in set(word)}
    k = next(iter(counts.values()))
    uniform = sorted(counts) == list(range(1, len(counts) + 1)) and all(
        c == k for c in counts.values()
    )
    if cfg.json:
        payload = {"des": list(des), "plat": list(plat)}
        if uniform and k >= 2:
            voice = is_canon(word, len(counts), k)
            payload["voice"] = list(voice) if voice else None
        _emit(json.dumps(payload, sort_keys=True))
        return
    _emit(f"Des: {format_index_set(des)}")
    _emit(f"Plat: {format_index_set(plat)}")
    if uniform and k >= 2:
        voice = is_canon(word, len(counts), k)
        _emit(f"voice: {format_word(voice) if voice else 'none'}")


def _tableau_stats(t: RectTableau, sigma: tuple[int, ...] | None, cfg: Config) -> None:
    if sigma is not None:
        canon = tableau_to_canon(t, sigma)
        if cfg.json:
            payload = {
                "canon": list(canon),
                "des_sigma": list(des_sigma_set(t, sigma)),
                "plat": list(plat_set(t)),
            }
            _emit(json.dumps(payload, sort_keys=True))
            return
        _emit(f"canon: {format_word(canon)}")
        _emit(f"Des_sigma: {format_index_set(des_sigma_set(t, sigma))}")
        _emit(f"Plat: {format_index_set(plat_set(t))}")
        return
    if cfg.json:
        payload = {
            "des": list(des_set(t)),
            "asc": list(asc_set(t)),
            "plat": list(plat_set(t)),
        }
        _emit(json.dumps(payload, sort_keys=True))
        return
    _emit(f"Des: {format_index_set(des_set(t))}")
    _emit(f"Asc: {format_index_set(asc_set(t))}")
    _emit(f"Plat: {format_index_set(plat_set(t))}")


def _cmd_stats(args) -> int:
    cfg: Config = args.config
    if args.word:
        if args.sigma:
            raise ValueError("--sigma applies to tableau input, not --word")
        _word_stats(parse_word(args.word), cfg)
        return 0
    tableaux, _ = _input_tableaux(args)
    sigma = parse_permutation(args.sigma, tableaux[0].n) if args.sigma else None
    for i, t in enumerate(tableaux):
        if i and not cfg.json:
            _emit("")
        _tableau_stats(t, sigma, cfg)
    return 0


# -- poly ---------------------------------------------------------------------

def _print_poly(p, cfg: Config) -> None:
    _emit(json.dumps(polynomial_to_json(p), sort_keys=True) if cfg.json else str(p))


def _cmd_poly(args) -> int:
    cfg: Config = args.config
    if args.which == "eulerian":
        _print_poly(eulerian(args.n), cfg)
    elif args.which == "narayana":
        _print_poly(narayana_dyck(args.n), cfg)
    elif args.which == "gen-narayana":
        _print_poly(gen_narayana(args.n, args.k, cap=cfg.enumeration_cap), cfg)
    elif args.which == "sulanke":
        top = (args.k - 1) * (args.n - 1)
        if args.h is not None:
            values = [sulanke_count(args.n, args.k, args.h)]
        else:
            values = [sulanke_count(args.n, args.k, h) for h in range(top + 1)]
        if cfg.json:
            _emit(json.dumps({"values": [str(v) for v in values]}))
        else:
            _emit(" ".join(str(v) for v in values))
    else:
        max_n = args.n if args.force else cfg.canon_max_n
        max_k = args.k if args.force else cfg.canon_max_k
        if args.sigma:
            sigma = parse_permutation(args.sigma, args.n)
            _print_poly(canon_poly_sigma(args.n, args.k, sigma, max_n=max_n, max_k=max_k), cfg)
        else:
            _print_poly(canon_poly(args.n, args.k, max_n=max_n, max_k=max_k, workers=cfg.workers), cfg)
    return 0


# -- bij ----------------------------------------------------------------------

def _bij_map(args, t: RectTableau):
    name = args.map
    if name in ("f", "F"):
        if bool(args.params) == bool(args.sigma):
            raise ValueError(f"map {name} needs either --params \"r s\" or --sigma")
        if args.params:
            r, s = _two_ints(args.params, "--params")
            step = bijections.f_rs_trace if name == "f" else bijections.F_rs_trace
            return step(t, r, s)
        sigma = parse_permutation(args.sigma, t.n)
        chain = bijections.f_sigma_trace if name == "f" else bijections.F_sigma_trace
        return chain(t, sigma)
    if name == "g":
        if not args.params:
            raise ValueError('map g needs --params "l m"')
        l, m = _two_ints(args.params, "--params")
        return bijections.g_lm_trace(t, l, m)
    if name == "gS":
        if not args.params:
            raise ValueError('map gS needs --params "{i1,i2,...}"')
        return bijections.g_S_trace(t, parse_index_set(args.params))
    if not args.sigma:
        raise ValueError("map phi needs --sigma")
    return bijections.phi_sigma_trace(t, parse_permutation(args.sigma, t.n))


def _two_ints(text: str, flag: str) -> tuple[int, int]:
    parts = text.split()
    if len(parts) != 2:
        raise ValueError(f"{flag} takes two integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"{flag} takes two integers, got {text!r}") from None


def _cmd_bij(args) -> int:
    cfg: Config = args.config
    tableaux, form = _input_tableaux(args)
    for t in tableaux:
        image, steps = _bij_map(args, t)
        if args.trace:
            for step in steps:
                _emit(json.dumps(step.to_json(), sort_keys=True))
        _emit(_render_tableau(image, form, cfg))
    return 0


# -- convert ------------------------------------------------------------------

def _cmd_convert(args) -> int:
    cfg: Config = args.config
    if args.to == "matching":
        if not args.canon:
            raise ValueError('convert matching needs --canon "w1 w2 ..."')
        word = parse_word(args.canon)
        values = set(word)
        if len(word) != 2 * len(values):
            raise ValueError("wrong multiset: expected each value exactly twice")
        matching = canon2_to_matching(word, len(values))
        if cfg.json:
            _emit(json.dumps({"n": matching.n, "arcs": [list(a) for a in matching.arcs]}))
        else:
            _emit(str(matching))
        return 0
    tableaux, _ = _input_tableaux(args)
    for t in tableaux:
        if args.to == "word":
            _emit(json.dumps(tableau_to_json(t), sort_keys=True) if cfg.json else format_word(t.word))
        elif args.to == "grid":
            _emit(json.dumps(tableau_to_json(t), sort_keys=True) if cfg.json else format_tableau_grid(t))
        else:
            path = syt2_to_dyck(t)
            _emit(json.dumps({"steps": path.steps}) if cfg.json else path.steps)
    return 0


# -- verify -------------------------------------------------------------------

def _cmd_verify(args) -> int:
    cfg: Config = args.config
    names = list(verify.SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = verify.run_suites(
        names,
        max_n=args.max_n,
        max_k=args.max_k,
        order=args.order,
        workers=cfg.workers,
    )
    as_json = args.json or cfg.json
    for report in reports:
        for line in report.json_lines() if as_json else report.summary_lines():
            _emit(line)
    return 0 if all(r.ok for r in reports) else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canonlab",
        description="Canon words, rectangular tableaux, and their descent identities.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list tableaux, canon words, or Dyck paths")
    enum.add_argument("what", choices=("syt", "canon", "dyck"))
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--k", type=int, default=2)
    enum.add_argument("--grid", action="store_true", help="print tableaux in grid form")
    enum.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    enum.set_defaults(func=_cmd_enumerate)

    stats = sub.add_parser("stats", help="descent, ascent, and plateau data")
    stats.add_argument("--word", help="a plain word")
    stats.add_argument("--tableau-word", help="a tableau word")
    stats.add_argument("--tableau-grid", help="a tableau grid, rows joined by '/'")
    stats.add_argument("--sigma", help="voice permutation for sigma-descents")
    stats.set_defaults(func=_cmd_stats)

    polyp = sub.add_parser("poly", help="counting polynomials")
    polyp.add_argument(
        "which", choices=("eulerian", "narayana", "gen-narayana", "sulanke", "canon")
    )
    polyp.add_argument("n", type=int)
    polyp.add_argument("k", type=int, nargs="?")
    polyp.add_argument("h", type=int, nargs="?")
    polyp.add_argument("--sigma", help="restrict canon counting to one voice")
    polyp.add_argument("--force", action="store_true", help="lift the canon feasibility bounds")
    polyp.set_defaults(func=_cmd_poly)

    bij = sub.add_parser("bij", help="apply a rewriting map")
    bij_sub = bij.add_subparsers(dest="bij_command", required=True)
    apply_p = bij_sub.add_parser("apply")
    apply_p.add_argument("--map", choices=("f", "F", "g", "gS", "phi"), required=True)
    apply_p.add_argument("--params", help='map parameters: "r s", "l m", or "{i1,...}"')
    apply_p.add_argument("--sigma", help="voice permutation for f, F, phi")
    apply_p.add_argument("--tableau-word")
    apply_p.add_argument("--tableau-grid")
    apply_p.add_argument("--trace", action="store_true", help="emit each step as a JSON line")
    apply_p.set_defaults(func=_cmd_bij)

    conv = sub.add_parser("convert", help="switch representations")
    conv.add_argument("to", choices=("word", "grid", "matching", "dyck"))
    conv.add_argument("--tableau-word")
    conv.add_argument("--tableau-grid")
    conv.add_argument("--canon", help="canon word with two copies per value (for matching)")
    conv.set_defaults(func=_cmd_convert)

    ver = sub.add_parser("verify", help="run identity suites")
    ver.add_argument("--suite", choices=(*verify.SUITE_NAMES, "all"), default="all")
    ver.add_argument("--max-n", type=int, help="grid bound on n (suite default otherwise)")
    ver.add_argument("--max-k", type=int, help="grid bound on k (suite default otherwise)")
    ver.add_argument("--order", type=int, help="series order for the gf suites")
    ver.add_argument("--json", action="store_true", help="JSON-lines report")
    ver.add_argument("--workers", type=int, help="process count (default: CANONLAB_WORKERS or all cores)")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    requested = getattr(args, "workers", None)
    try:
        workers = worker_count(requested) if (requested or args.command == "verify") else 1
        args.config = Config(workers=workers, output=args.format)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

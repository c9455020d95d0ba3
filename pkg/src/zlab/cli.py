"""Command-line front end: ``zlab <group> <command> [options]``.

Exit status: 0 when every check passes, 1 when a check fails, 2 when a search
exhausts its cap.  Usage errors, invalid input and cache problems have their
own codes (64, 65, 66) so scripts can tell them apart.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import modular_search as ms
from . import sl2_group as sg
from . import sl2_repr as sr
from . import zaremba_enum as ze
from .cont_frac import evaluate, expand, format_cf, parse_fraction
from .numtheory import primes_upto, require_prime
from .report import (CacheError, RunCache, cache_key, code_fingerprint, default_cache_path,
                     normalize, report_table)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CAP = 2
EXIT_USAGE = 64
EXIT_INPUT = 65
EXIT_CACHE = 66

DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


@dataclass
class Result:
    rows: list[dict]
    lines: list[str]
    status: int = EXIT_OK
    sort_key: Optional[str] = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# handlers


def _cf_list(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("["):
        t = t.strip("[]")
        head, sep, tail = t.partition(";")
        if sep:
            if head.strip() not in ("", "0"):
                raise ValueError("only expansions of numbers in [0, 1] are supported")
            t = tail
    parts = [s for s in t.replace(" ", ",").split(",") if s]
    cf = tuple(int(s) for s in parts)
    if any(b < 1 for b in cf):
        raise ValueError("partial quotients must be >= 1")
    return cf


def cmd_cf_expand(a) -> Result:
    f = parse_fraction(a.frac)
    cf = expand(f)
    return Result([{"frac": f"{f.numerator}/{f.denominator}", "cf": list(cf)}], [format_cf(cf)])


def cmd_cf_eval(a) -> Result:
    cf = _cf_list(a.cf)
    f = evaluate(cf)
    return Result([{"cf": list(cf), "frac": f"{f.numerator}/{f.denominator}"}],
                  [f"{f.numerator}/{f.denominator}"])


def cmd_zset_enum(a) -> Result:
    z = ze.enumerate_fractions(a.M, a.Q, twin=a.twin, max_members=a.max_members)
    rows = [{"u": f.numerator, "v": f.denominator} for f in z]
    lines = [f"|F_{a.M}({a.Q})| = {len(z)}"] + [f"{r['u']}/{r['v']}" for r in rows]
    return Result(rows, lines)


def cmd_zset_count(a) -> Result:
    n = ze.count_fractions(a.M, a.Q, twin=a.twin)
    return Result([{"M": a.M, "Q": a.Q, "twin": a.twin, "count": n}], [f"|F_{a.M}({a.Q})| = {n}"])


def cmd_zset_dim(a) -> Result:
    if a.hi <= a.lo + 1:
        raise UsageError("--hi must exceed --lo by at least 2")
    Qs = ze.dyadic(a.lo, a.hi)
    est = ze.estimate_dimension(a.M, Qs, twin=a.twin)
    ratios = [c2 / c1 for c1, c2 in zip(est.counts, est.counts[1:])]
    pred = ze.predicted_ratio(est.w_hat)
    rows = [{"Q": q, "count": c, "ratio": (r if r is not None else math.nan)}
            for q, c, r in zip(est.sample_Qs, est.counts, [None] + ratios)]
    lines = [f"M={a.M} w_hat={est.w_hat:.6f} residual={est.residual:.6f} "
             f"predicted_ratio={pred:.6f}" + (" degenerate" if est.degenerate else "")]
    lines += [f"Q={r['Q']} count={r['count']}" for r in rows]
    return Result(rows, lines, extra={"w_hat": est.w_hat, "residual": est.residual})


def _record_line(r: ms.SearchRecord) -> str:
    return (f"p={r.p} M={r.M} q={r.q} a={r.a} cf={format_cf(r.cf)} "
            f"exponent={r.exponent:.6f} nodes={r.nodes_explored}")


def cmd_search_minq(a) -> Result:
    out = ms.search_min_denominator(a.p, a.M, a.cap)
    if out.record is None:
        return Result([], [f"p={a.p} M={a.M}: no record with q <= {out.cap}"], EXIT_CAP)
    r = out.record
    ok = ms.verify_record(r)
    return Result([r.as_dict()], [_record_line(r)] + ([] if ok else ["record FAILED verification"]),
                  EXIT_OK if ok else EXIT_CHECK_FAILED, sort_key="p")


def cmd_search_table(a) -> Result:
    primes = a.primes or [p for p in primes_upto(a.pmax) if p >= a.pmin]
    table = ms.exponent_table(primes, a.M, a.cap)
    recs = table.records
    bad = [r.p for r in recs if not ms.verify_record(r)]
    lines = [_record_line(r) for r in recs]
    if table.max_exponent is not None:
        lines.append(f"max exponent = {table.max_exponent:.6f}")
    if table.missing:
        lines.append("missing: " + " ".join(map(str, table.missing)))
    status = EXIT_CHECK_FAILED if bad else (EXIT_CAP if table.missing else EXIT_OK)
    return Result([r.as_dict() for r in recs], lines, status, sort_key="p",
                  extra={"max_exponent": table.max_exponent, "missing": table.missing})


def cmd_search_power(a) -> Result:
    require_prime(a.p)
    hit = ms.power_intersect_search(a.p, a.M, a.n_max)
    if hit is None:
        return Result([], [f"p={a.p} M={a.M}: A^n misses B for every n <= {a.n_max}"], EXIT_CAP)
    ok = hit.v % a.p == 0 and hit.witness.c == 0
    row = {"p": a.p, "M": a.M, "n": hit.n, "witness": list(hit.witness.entries()),
           "cf": list(hit.concatenated), "u": hit.u, "v": hit.v}
    lines = [f"p={a.p} M={a.M} n={hit.n} witness={hit.witness!r}",
             f"concatenated={format_cf(hit.concatenated)} u/v={hit.u}/{hit.v} "
             f"v mod p = {hit.v % a.p} " + ("OK" if ok else "FAIL")]
    return Result([row], lines, EXIT_OK if ok else EXIT_CHECK_FAILED, sort_key="p")


def cmd_search_bounds(a) -> Result:
    alpha = ms.ALPHA_STAR if a.alpha is None else a.alpha
    ev = ms.evaluate_n_bounds(a.w, alpha)
    row = {"w": ev.w, "alpha": ev.alpha, "n1": ev.n1, "n2": ev.n2,
           "n1_finite": ev.n1_finite, "n2_finite": ev.n2_finite, "alpha_star": ev.alpha_star}
    line = (f"w={ev.w:.6f} alpha={ev.alpha:.6f} n1={ev.n1:.6f} n2={ev.n2:.6f} "
            f"alpha*={ev.alpha_star:.9f}")
    return Result([row], [line])


def cmd_sl2_verify_bgb(a) -> Result:
    rep = sg.verify_double_coset(a.p)
    row = {"p": rep.p, "checked": rep.checked, "max_r": rep.max_r, "bound": rep.bound,
           "bound_violations": rep.bound_violations, "complement_failures": rep.complement_failures}
    line = (f"p={rep.p} checked={rep.checked} max_r={rep.max_r} <= {rep.bound} "
            f"violations={rep.bound_violations} complement_failures={rep.complement_failures} "
            + ("OK" if rep.ok else "FAIL"))
    return Result([row], [line], EXIT_OK if rep.ok else EXIT_CHECK_FAILED, sort_key="p")


def _random_sets(a, rng, k: int):
    require_prime(a.p)
    G = sg.sl2(a.p)
    if not 1 <= a.size <= len(G):
        raise ValueError(f"--size must lie in [1, {len(G)}]")
    return G, [sg.random_subset(G, a.size, rng) for _ in range(k)]


def cmd_sl2_energy(a, rng) -> Result:
    rows, fails = [], 0
    require_prime(a.p)
    G = sg.sl2(a.p)
    for t in range(a.trials):
        sizes = rng.integers(1, a.size + 1, size=3) if a.size else rng.integers(1, len(G) + 1, size=3)
        A, B, C = (sg.random_subset(G, int(s), rng) for s in sizes)
        e = sg.energy(A, B)
        lhs, rhs = sg.ruzsa_triangle(A, B, C)
        ok = e.cauchy_schwarz_holds and lhs <= rhs
        fails += not ok
        rows.append({"trial": t, "size_a": len(A), "size_b": len(B), "size_c": len(C),
                     "energy": e.value, "quotient_size": e.left_quotient_size,
                     "ruzsa_lhs": lhs, "ruzsa_rhs": rhs, "ok": ok})
    line = f"p={a.p} trials={a.trials} violations={fails} " + ("OK" if not fails else "FAIL")
    return Result(rows, [line], EXIT_CHECK_FAILED if fails else EXIT_OK)


def _zaremba_or_random(a, rng):
    if a.size:
        _, (A,) = _random_sets(a, rng, 1)
        return A, f"random |A|={a.size}"
    A = ze.zaremba_matrix_set(a.M, a.p)
    if len(A) == 0:
        raise ValueError(f"the even matrix set of F_{a.M}({a.p - 1}) is empty")
    return A, f"Zaremba M={a.M}"


def cmd_sl2_tripling(a, rng) -> Result:
    A, label = _zaremba_or_random(a, rng)
    K, Kt = sg.tripling(A)
    ok = K >= Kt >= 1
    row = {"p": a.p, "size": len(A), "K": float(K), "K_tilde": float(Kt),
           "K_exact": str(K), "K_tilde_exact": str(Kt)}
    line = f"p={a.p} {label} |A|={len(A)} K={K} ({float(K):.6f}) K~={Kt} ({float(Kt):.6f})"
    return Result([row], [line], EXIT_OK if ok else EXIT_CHECK_FAILED, sort_key="p")


def cmd_sl2_borel(a, rng) -> Result:
    primes = [p for p in primes_upto(a.pmax) if p >= a.p] if a.pmax else [a.p]
    rows, lines, fails = [], [], 0
    for p in primes:
        require_prime(p)
        A = ze.zaremba_matrix_set(a.M, p)
        if len(A) == 0:
            continue
        rep = sg.borel_intersections(A)
        ok = rep.lemma_holds and rep.remark_holds
        fails += not ok
        rows.append({"p": p, "size": rep.size, "K": float(rep.K), "max_intersection": rep.max_intersection,
                     "lemma_bound": rep.lemma_bound, "max_coset": rep.max_coset,
                     "coset_violations": rep.coset_violations, "ok": ok})
        lines.append(f"p={p} |A|={rep.size} K={float(rep.K):.6f} max|A∩B|={rep.max_intersection} "
                     f"bound={rep.lemma_bound:.6f} coset_violations={rep.coset_violations} "
                     + ("OK" if ok else "FAIL"))
    return Result(rows, lines, EXIT_CHECK_FAILED if fails else EXIT_OK, sort_key="p")


def cmd_sl2_helfgott(a, rng) -> Result:
    require_prime(a.p, odd=True)
    if a.p < 5:
        raise ValueError("regular elements need p >= 5")
    G = sg.sl2(a.p)
    regular = G.codes[[sg.ModMat2.from_code(int(c), a.p).is_regular() for c in G.codes]]
    rows, fails = [], 0
    for t in range(a.trials):
        _, (A,) = _random_sets(a, rng, 1)
        g = sg.ModMat2.from_code(int(rng.choice(regular)), a.p)
        rep = sg.helfgott_inequality(A, g)
        fails += not rep.holds
        rows.append({"trial": t, "g": list(g.entries()), "size": rep.size, "conj_hits": rep.conj_hits,
                     "a0_size": len(rep.witness), "min_centr": min(rep.centr_counts, default=0),
                     "ok": rep.holds})
    line = f"p={a.p} |A|={a.size} trials={a.trials} violations={fails} " + ("OK" if not fails else "FAIL")
    return Result(rows, [line], EXIT_CHECK_FAILED if fails else EXIT_OK)


def cmd_sl2_threshold(a, rng) -> Result:
    require_prime(a.p)
    G = sg.sl2(a.p)
    size = a.size or min(len(G), math.ceil(sg.borel_threshold(a.p, a.n)))
    if not 1 <= size <= len(G):
        raise ValueError(f"--size must lie in [1, {len(G)}]")
    A = sg.random_subset(G, size, rng)
    rep = sg.power_borel_threshold(A, a.n)
    w = rep.witness
    row = {"p": a.p, "n": a.n, "size": rep.size, "threshold": rep.threshold,
           "hypothesis": rep.hypothesis, "vacuous": rep.vacuous,
           "witness": list(w.element.entries()) if w else None}
    line = (f"p={a.p} n={a.n} |A|={rep.size} threshold={rep.threshold:.6f} hypothesis={rep.hypothesis} "
            f"witness={w.element!r}" if w else
            f"p={a.p} n={a.n} |A|={rep.size} threshold={rep.threshold:.6f} hypothesis={rep.hypothesis} "
            "witness=none")
    return Result([row], [line + (" OK" if rep.ok else " FAIL")],
                  EXIT_OK if rep.ok else EXIT_CHECK_FAILED, sort_key="p")


def cmd_rep_certify(a) -> Result:
    c = sr.borel_certificates(a.q)
    row = {"q": c.q, "borel_order": c.borel_order, "hs_norm": str(c.hs_norm),
           "op_norm_sq": str(c.norms.op_norm_sq), "rank": c.norms.rank,
           "parseval_lhs": str(c.parseval_lhs), "parseval_two_block": str(c.parseval_two_block),
           "parseval_closed_form": str(c.parseval_closed_form), "wiener": str(c.wiener), "ok": c.ok}
    line = (f"q={c.q} |B|={c.borel_order} hs={c.hs_norm} op^2={c.norms.op_norm_sq} rank={c.norms.rank} "
            f"parseval={c.parseval_lhs}={c.parseval_two_block}={c.parseval_closed_form} "
            f"wiener={c.wiener} " + ("OK" if c.ok else "FAIL"))
    return Result([row], [line], EXIT_OK if c.ok else EXIT_CHECK_FAILED)


def cmd_rep_inventory(a) -> Result:
    inv = sr.dimension_inventory(a.q)
    rows = [{"family": name, "count": n, "dimension": d} for name, n, d in inv.families]
    lines = [f"{name}: {n} x dim {d}" for name, n, d in inv.families]
    lines.append(f"{inv.total} = {inv.group_order} " + ("OK" if inv.ok else "FAIL"))
    return Result(rows, lines, EXIT_OK if inv.ok else EXIT_CHECK_FAILED,
                  extra={"total": inv.total, "group_order": inv.group_order})


def cmd_rep_gap(a, rng) -> Result:
    require_prime(a.q, odd=True)
    G = sg.sl2(a.q)
    if not 1 <= a.size <= len(G):
        raise ValueError(f"--size must lie in [1, {len(G)}]")
    A = sg.random_subset(G, a.size, rng)
    rep = sr.spectral_gap_check(A, a.n)
    row = {"q": rep.q, "size": rep.size, "op_norm": rep.op_norm, "bound": rep.bound,
           "below_bound": rep.below_bound, "n": rep.n, "hypothesis": rep.hypothesis,
           "mixing_lower": rep.mixing_lower, "mixing_positive": rep.mixing_positive,
           "power_is_group": rep.power_is_group}
    line = (f"q={rep.q} |A|={rep.size} ||St||={rep.op_norm:.6f} bound={rep.bound:.6f} "
            f"below={rep.below_bound}")
    if rep.n is not None:
        line += (f" n={rep.n} hypothesis={rep.hypothesis} mixing_lower={rep.mixing_lower:.6g} "
                 f"A^n=G: {rep.power_is_group}")
    return Result([row], [line + (" OK" if rep.ok else " FAIL")],
                  EXIT_OK if rep.ok else EXIT_CHECK_FAILED)


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: usage error: {message}\n")


def _seed(text: str) -> int:
    s = int(text, 0)
    if not 0 <= s < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--cache", default=None, help="JSONL cache path (default: $ZLAB_CACHE)")
    common.add_argument("--no-cache", action="store_true", help="do not append to the cache")
    common.add_argument("--from-cache", action="store_true", help="replay a cached run")

    parser = _Parser(prog="zlab", description="Bounded continued fractions and SL_2(F_p) experiments.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def add(sub, name: str, fn: Callable, randomized: bool = False, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=fn, randomized=randomized)
        return p

    cf = groups.add_parser("cf", help="continued fractions").add_subparsers(dest="cmd", required=True)
    add(cf, "expand", cmd_cf_expand).add_argument("--frac", required=True, help="u/v in lowest terms")
    add(cf, "eval", cmd_cf_eval).add_argument("--cf", required=True, help="e.g. 1,2,2 or [0;1,2,2]")

    z = groups.add_parser("zset", help="the sets F_M(Q)").add_subparsers(dest="cmd", required=True)
    for name, fn in (("enum", cmd_zset_enum), ("count", cmd_zset_count)):
        p = add(z, name, fn)
        p.add_argument("--M", type=_positive, required=True)
        p.add_argument("--Q", type=_positive, required=True)
        p.add_argument("--twin", action="store_true", help="admit fractions bounded only via their twin")
        if name == "enum":
            p.add_argument("--max-members", type=_positive, default=ze.DEFAULT_MAX_MEMBERS)
    p = add(z, "dim", cmd_zset_dim)
    p.add_argument("--M", type=_positive, required=True)
    p.add_argument("--lo", type=int, default=4, help="smallest exponent of the dyadic grid (>= 4)")
    p.add_argument("--hi", type=int, default=14)
    p.add_argument("--twin", action="store_true")

    s = groups.add_parser("search", help="denominators divisible by p").add_subparsers(dest="cmd", required=True)
    p = add(s, "minq", cmd_search_minq)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--M", type=_positive, default=2)
    p.add_argument("--cap", type=_positive, default=None)
    p = add(s, "table", cmd_search_table)
    p.add_argument("--pmin", type=int, default=2)
    p.add_argument("--pmax", type=int, default=100)
    p.add_argument("--primes", type=int, nargs="*", default=None)
    p.add_argument("--M", type=_positive, default=2)
    p.add_argument("--cap", type=_positive, default=None)
    p = add(s, "power", cmd_search_power)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--M", type=_positive, default=2)
    p.add_argument("--n-max", type=_positive, default=8)
    p = add(s, "bounds", cmd_search_bounds)
    p.add_argument("--w", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=None, help="default: the optimal exponent")

    g = groups.add_parser("sl2", help="SL_2(F_p) checks").add_subparsers(dest="cmd", required=True)
    add(g, "verify-bgb", cmd_sl2_verify_bgb).add_argument("--p", type=int, required=True)
    p = add(g, "energy", cmd_sl2_energy, randomized=True)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--size", type=int, default=0, help="max set size (default: |G|)")
    p.add_argument("--trials", type=_positive, default=100)
    for name, fn in (("tripling", cmd_sl2_tripling), ("borel", cmd_sl2_borel)):
        p = add(g, name, fn, randomized=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--M", type=_positive, default=2)
        if name == "tripling":
            p.add_argument("--size", type=int, default=0, help="random set of this size instead")
        else:
            p.add_argument("--pmax", type=int, default=0, help="sweep primes p..pmax")
    p = add(g, "helfgott", cmd_sl2_helfgott, randomized=True)
    p.add_argument("--p", type=int, default=7)
    p.add_argument("--size", type=_positive, default=50)
    p.add_argument("--trials", type=_positive, default=20)
    p = add(g, "threshold", cmd_sl2_threshold, randomized=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--size", type=int, default=0, help="default: the threshold, capped at |G|")

    r = groups.add_parser("rep", help="representation checks").add_subparsers(dest="cmd", required=True)
    add(r, "certify", cmd_rep_certify).add_argument("--q", type=int, required=True)
    add(r, "inventory", cmd_rep_inventory).add_argument("--q", type=int, required=True)
    p = add(r, "gap", cmd_rep_gap, randomized=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--n", type=_positive, default=None)
    return parser


_COMMON = {"format", "seed", "cache", "no_cache", "from_cache", "func", "randomized", "group", "cmd"}


def _params(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _COMMON}


def render(res: Result, args, command: str) -> str:
    if args.format == "text":
        return "".join(f"{ln}\n" for ln in [f"# zlab {command} seed={args.seed}"] + res.lines)
    if args.format == "csv":
        return report_table(res.rows, "csv", sort_key=res.sort_key)
    cols, rows = normalize(res.rows, sort_key=res.sort_key)
    doc = {"command": command, "seed": args.seed, "status": res.status,
           "records": json.loads(report_table(rows, "json", sort_key=None))}
    doc.update(res.extra)
    return json.dumps(doc, ensure_ascii=False, default=str) + "\n"


def _execute(args) -> Result:
    if args.randomized:
        return args.func(args, np.random.default_rng(args.seed))
    return args.func(args)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = f"{args.group} {args.cmd}"
    if args.format == "csv":
        print(f"# seed={args.seed}", file=stderr)
    params = _params(args)
    key = cache_key(command, params, args.seed)
    fingerprint = code_fingerprint()
    try:
        cache = RunCache(args.cache or default_cache_path())
        if args.from_cache:
            entry = cache.lookup(json.dumps([key, args.format]))
            if entry is None:
                raise CacheError(f"no cached run for {command} {params} seed={args.seed} format={args.format}")
            stdout.write(entry["output"])
            status = int(entry["status"])
            if entry.get("fingerprint") != fingerprint:
                fresh = _execute(args)
                if render(fresh, args, command) != entry["output"] or fresh.status != status:
                    print("zlab: divergence: current code produces different results than the cache",
                          file=stderr)
                    return EXIT_CHECK_FAILED
                print("zlab: note: code changed since caching; results unchanged", file=stderr)
            return status
    except CacheError as exc:
        print(f"zlab: cache error: {exc}", file=stderr)
        return EXIT_CACHE

    try:
        res = _execute(args)
    except UsageError as exc:
        print(f"zlab: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except ze.ResourceLimitError as exc:
        print(f"zlab: {exc}", file=stderr)
        return EXIT_CAP
    except (ValueError, ZeroDivisionError, ms.EmptyMatrixSet) as exc:
        print(f"zlab: invalid input: {exc}", file=stderr)
        return EXIT_INPUT
    out = render(res, args, command)
    stdout.write(out)
    if not args.no_cache:
        try:
            cache.append({"key": json.dumps([key, args.format]), "command": command, "params": params,
                          "seed": args.seed, "format": args.format, "fingerprint": fingerprint,
                          "status": res.status, "output": out})
        except OSError as exc:
            print(f"zlab: cache error: {exc}", file=stderr)
            return EXIT_CACHE
    return res.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

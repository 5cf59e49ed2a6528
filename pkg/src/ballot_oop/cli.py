"""``ballot-oop`` command line: verify, count, table, map, cache.

Exit codes: 0 success / all claims confirmed, 1 mismatch or domain
violation of a map, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from . import bijections as BJ, formulas as F, oracle as O, perm as P
from . import recurrences as R, verify as V
from .cache import CountCache, resolve_dir

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- count ----------------------------------------------------------------

def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"{args.statistic} needs {' '.join(missing)}")
    return [getattr(args, x) for x in names]


def _ballot_formula(n, d):
    top = (n - 1) // 2
    if d < 0 or d > top:
        return 0
    if d == 0:
        return 1
    if d == 1:
        return F.b1_formula(n)
    if d == 2:
        return F.b2_formula(n)
    if d == 3 and n >= 4:
        return F.b3_formula(n)
    if n % 2 and d == top:
        return F.b_max_formula(n)
    if n % 2 == 0 and d == n // 2 - 1:
        return F.b_2n_formula(n // 2)
    raise F.DomainError(f"no closed form for b({n},{d}); closed forms cover d <= 3, "
                        "d = (n-1)/2 for odd n, and d = n/2 - 1 for even n")


def _oop_formula(n, d):
    if n % 2 and n >= 5 and d == (n - 1) // 2 - 1 and d > 3:
        return F.p_second_last_formula((n - 1) // 2)
    try:
        return _ballot_formula(n, d)
    except F.DomainError:
        raise F.DomainError(f"no closed form for p({n},{d})") from None


def _bndk_formula(n, d, k):
    if d == 0:
        return int(k == n)
    if d == 1:
        return R.col1_formula(n, k)
    if d == 2:
        return R.col2_formula(n, k)
    raise F.DomainError("column formulas exist for d <= 2 only")


def _f_recurrence(r, n):
    return R.f_recurrence(r, n)


def _eulerian_formula(n, d):
    forms = {1: F.eulerian_e1, 2: F.eulerian_e2, 3: F.eulerian_e3}
    if d == 0:
        return 1
    if d not in forms or n < 1:
        raise F.DomainError("closed forms exist for E(n,d) with n >= 1, d <= 3")
    return forms[d](n)


def _p_rec(n, d):
    if n < 1 or d < 0:
        return 0
    return R.p_recurrence_table(n, d)[n, d]


def _bndk_rec(n, d, k):
    return R.bndk_table(n).get(n, d, k)


def _ballot_rec(n, d):
    return R.bndk_table(n).col_sum(n, d)


# statistic -> (parameter names, {method: function})
STATISTICS = {
    "ballot": (("n", "d"), {
        "formula": _ballot_formula, "recurrence": _ballot_rec, "oracle": O.count_ballot}),
    "oop": (("n", "d"), {
        "formula": _oop_formula, "recurrence": _p_rec, "oracle": O.count_oop}),
    "bndk": (("n", "d", "k"), {
        "formula": _bndk_formula, "recurrence": _bndk_rec, "oracle": O.count_ballot_last}),
    "cycles-m": (("n", "d"), {"formula": F.c_formula, "oracle": O.count_cycles_m}),
    "by-t": (("n", "d", "t"), {"oracle": O.count_by_t}),
    "ud": (("n", "r"), {"formula": lambda n, r: F.ud_polynomial(r, n), "oracle": O.count_ud}),
    "f": (("r", "n"), {
        "formula": F.f_closed, "recurrence": _f_recurrence, "oracle": O.count_f}),
    "eulerian": (("n", "d"), {
        "formula": _eulerian_formula, "recurrence": F.eulerian, "oracle": O.count_descents}),
    "eulerian-catalan": (("n",), {
        "formula": F.eulerian_catalan,
        "oracle": lambda n, **kw: O.count_ballot(2 * n + 1, n, **kw)}),
    "total": (("n",), {
        "formula": F.total_ballot,
        "recurrence": lambda n: sum(R.p_recurrence_table(n, (n - 1) // 2).row(n)),
        "oracle": lambda n, **kw: sum(O.count_ballot(n, d, **kw)
                                      for d in range((n - 1) // 2 + 1))}),
}

AUTO_ORDER = ("formula", "recurrence", "oracle")


def evaluate(statistic, params, method="auto", cache=None, jobs=1, limit=None):
    """Return ``(value, producer)``; raises DomainError/ValueError when no method applies."""
    methods = STATISTICS[statistic][1]
    order = AUTO_ORDER if method == "auto" else (method,)
    if method != "auto" and method not in methods:
        raise F.DomainError(f"{statistic} has no {method} method; "
                            f"available: {', '.join(methods)}")
    errors = []
    for m in order:
        if m not in methods:
            continue
        if m == "oracle":
            if cache is not None:
                hit = cache.lookup(statistic, params)
                if hit is not None:
                    return hit.count, f"cache ({hit.producer})"
            try:
                value = methods[m](*params, jobs=jobs, limit=limit)
            except (F.DomainError, ValueError) as exc:
                errors.append(f"oracle: {exc}")
                continue
            if cache is not None:
                cache.store(statistic, params, value, "oracle")
            return value, "oracle"
        try:
            return methods[m](*params), m
        except (F.DomainError, ValueError) as exc:
            errors.append(f"{m}: {exc}")
    raise F.DomainError("; ".join(errors) or f"no method for {statistic}")


def cmd_count(args) -> int:
    names, _ = STATISTICS[args.statistic]
    params = tuple(_need(args, *names))
    cache = None if args.no_cache else CountCache(resolve_dir(args.cache_dir))
    try:
        value, producer = evaluate(args.statistic, params, args.method, cache,
                                   jobs=args.jobs, limit=args.limit)
    except (F.DomainError, ValueError) as exc:
        raise UsageError(str(exc))
    print(value)
    if args.explain:
        print(f"{args.statistic}{params} via {producer}", file=sys.stderr)
    return EXIT_OK


# -- table ----------------------------------------------------------------

def _markdown(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "|".join(["---"] * len(header)) + "|"]
    out += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
    return "\n".join(out) + "\n"


def cmd_table(args) -> int:
    if args.kind in ("bnd", "pnd"):
        max_n = args.max_n
        if max_n is None:
            raise UsageError(f"table {args.kind} needs --max-n")
        max_d = args.max_d if args.max_d is not None else (max_n - 1) // 2
        if args.kind == "pnd":
            t = R.p_recurrence_table(max_n, max_d).as_count_table()
        else:
            method = args.method if args.method != "auto" else "oracle"
            if method == "oracle":
                try:
                    O.check_n(max_n, args.limit)
                except O.EnumerationLimitError as exc:
                    raise UsageError(f"{exc}; use --method recurrence or table pnd")
                t = O.ballot_table(max_n, max_d, jobs=args.jobs, limit=args.limit)
            else:
                bt = R.bndk_table(max_n)
                t = O.CountTable(("n", "d"), {(n, d): bt.col_sum(n, d)
                                              for n in range(1, max_n + 1)
                                              for d in range(max_d + 1)})
        label = "b(n,d)" if args.kind == "bnd" else "p(n,d)"
        header = [label] + [f"d={d}" for d in range(max_d + 1)]
        rows = [[f"n={n}"] + [t[n, d] for d in range(max_d + 1)] for n in range(1, max_n + 1)]
    else:
        n = args.n
        if n is None:
            raise UsageError("table bndk needs --n")
        if args.method == "oracle":
            t = O.ballot_last_table(n, jobs=args.jobs, limit=args.limit)
            get = lambda d, k: t[n, k, d]  # noqa: E731
        else:
            bt = R.bndk_table(n)
            t = bt.as_count_table(n)
            get = lambda d, k: bt.get(n, d, k)  # noqa: E731
        ds = range((n - 1) // 2 + 1)
        header = [f"b({n},k,d)"] + [f"d={d}" for d in ds] + ["Row Sum:"]
        rows = [[f"k={k}"] + [get(d, k) for d in ds] + [sum(get(d, k) for d in ds)]
                for k in range(1, n + 1)]
        cols = [sum(get(d, k) for k in range(1, n + 1)) for d in ds]
        rows.append(["Col Sum:"] + cols + [sum(cols)])
    if args.format == "csv":
        sys.stdout.write(t.to_csv())
    elif args.format == "json":
        sys.stdout.write(t.to_json() + "\n")
    else:
        sys.stdout.write(_markdown(header, rows))
    return EXIT_OK


# -- map ------------------------------------------------------------------

def _cycles_out(c) -> str:
    """Nontrivial cycles only; fixed points are implied by the size."""
    return "".join("(" + ",".join(map(str, cyc)) + ")" for cyc in c.nontrivial()) or "()"


def _word_out(p, like: str | None = None) -> str:
    spaced = like is not None and not like.strip().isdigit()
    if p.n <= 9 and not spaced:
        return "".join(map(str, p.letters))
    return P.format_word(p.letters, "," if like and "," in like else " ")


MAPS = ("phi-d1", "psi-d1", "phi-max", "psi-max", "reverse", "dyck-split")


def cmd_map(args) -> int:
    text = args.input
    cyclic = args.map in ("psi-d1", "psi-max")
    try:
        if cyclic:
            arg = P.CycleDecomposition.parse(text, args.n)
        else:
            arg = P.Permutation.parse(text)
    except P.PermutationError as exc:
        raise UsageError(str(exc))
    try:
        if args.map == "psi-d1":
            out = _word_out(BJ.psi_d1(arg))
        elif args.map == "psi-max":
            out = _word_out(BJ.psi_max(arg))
        elif args.map == "phi-d1":
            out = _cycles_out(BJ.phi_d1(arg))
        elif args.map == "phi-max":
            out = _cycles_out(BJ.phi_max(arg))
        elif args.map == "reverse":
            out = _word_out(BJ.reversal_map(arg), text)
        else:
            s = BJ.dyck_split(arg)
            out = f"{P.format_word(s.left)} | {P.format_word(s.right)}"
    except BJ.DomainViolation as exc:
        print(f"ballot-oop: {args.map}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(out)
    return EXIT_OK


# -- verify / cache -------------------------------------------------------

def cmd_verify(args) -> int:
    suites = []
    for s in args.suites or ["all"]:
        suites += s.split(",")
    if "all" in suites:
        suites = list(V.SUITES)
    unknown = set(suites) - set(V.SUITES)
    if unknown:
        raise UsageError(f"unknown suites {sorted(unknown)}; choose from {', '.join(V.SUITES)}")
    try:
        rep = V.run(args.max_n, suites, jobs=args.jobs, limit=args.limit)
    except (O.EnumerationLimitError, ValueError) as exc:
        raise UsageError(str(exc))
    out = rep.to_json() if args.format == "json" else rep.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_cache(args) -> int:
    cache = CountCache(resolve_dir(args.cache_dir))
    if args.action == "path":
        print(cache.path)
    elif args.action == "list":
        for e in sorted(cache.entries(), key=lambda e: (e.statistic, str(e.params))):
            print(f"{e.statistic}\t{','.join(map(str, e.params))}\t{e.value}\t{e.producer}")
    else:
        cache.clear()
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ballot-oop", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for enumeration (default: all cores)")
    common.add_argument("--limit", type=int, default=None,
                        help=f"enumeration cap on n (default {O.DEFAULT_LIMIT})")
    common.add_argument("--cache-dir", default=None)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--suites", action="append",
                   help=f"comma-separated subset of: {', '.join(V.SUITES)} (default all)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="print one exact count")
    p.add_argument("statistic", choices=sorted(STATISTICS))
    for name in ("n", "d", "k", "t"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--r", help="binary string")
    p.add_argument("--method", choices=("auto", "formula", "recurrence", "oracle"),
                   default="auto")
    p.add_argument("--explain", action="store_true", help="report the producer on stderr")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="print a count table")
    p.add_argument("kind", choices=("bnd", "bndk", "pnd"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("auto", "recurrence", "oracle"), default="auto")
    p.add_argument("--format", choices=("csv", "json", "markdown"), default="markdown")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("map", parents=[common], help="apply a bijection to one input")
    p.add_argument("map", choices=MAPS)
    p.add_argument("input")
    p.add_argument("--n", type=int, help="size for cycle-notation input")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("cache", parents=[common], help="inspect the count cache")
    p.add_argument("action", choices=("path", "list", "clear"))
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, O.EnumerationLimitError) as exc:
        print(f"ballot-oop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

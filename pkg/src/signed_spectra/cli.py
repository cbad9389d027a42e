"""Command-line front end.

Verbs: analyze, balance, gen, bound, verify, export.  Exit code 0 means
success (CONFIRMED for verify), 2 means a COUNTEREXAMPLE was found (the
report is still emitted), 1 means a usage or input error.  All numeric
output uses 12 fractional digits; progress goes to stderr, results to
stdout.
"""

import argparse
import json
import sys

from .errors import SignedSpectraError
from .extremal import (
    enumerate_bipartite_extrema,
    verify_balance_characterization,
    verify_complete_bipartite_max,
    verify_kds,
    verify_minus_edge,
    verify_monotone_completion,
    verify_shift_monotone,
    verify_tree_extremal,
)
from .graphs import CATALOG_NAMES, catalog_underlying, double_star, gstar
from .sgio import as_bipartite, read_file, to_dot, write_text
from .spectra import gstar_bound, spectral_summary
from .switching import balance_structural, is_balanced

THEOREM_IDS = (
    "thm-3.1",
    "prop-4.1",
    "lem-4.4",
    "thm-4.5",
    "thm-5.2",
    "lem-5.3",
    "lem-5.4",
    "thm-5.6",
    "thm-6.1",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; we reserve that code
        raise _UsageError(message)


def _fmt(x):
    if abs(x) < 5e-13:
        x = 0.0
    return f"{x:.12f}"


def _build_parser():
    parser = _Parser(prog="signed-spectra", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="spectral summary of a signed-graph file")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("balance", help="balance verdict of a signed-graph file")
    p.add_argument("file")

    p = sub.add_parser("gen", help="write a named signed graph to stdout")
    gsub = p.add_subparsers(dest="target", required=True)
    g = gsub.add_parser("gstar")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--s", type=int, required=True)
    g = gsub.add_parser("dstar")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--j", type=int, required=True)
    g = gsub.add_parser("catalog")
    g.add_argument("--name", required=True, choices=CATALOG_NAMES)
    g.add_argument("--h", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)

    p = sub.add_parser("bound", help="closed-form spectral radius bounds")
    bsub = p.add_subparsers(dest="target", required=True)
    b = bsub.add_parser("gstar")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)

    p = sub.add_parser("verify", help="run an exhaustive or property verifier")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=("max", "min"))
    p.add_argument("--extended", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("export", help="export a signed-graph file")
    esub = p.add_subparsers(dest="target", required=True)
    e = esub.add_parser("dot")
    e.add_argument("file")
    return parser


def _require(args, names, theorem):
    values = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise _UsageError(f"verify {theorem} requires --{name}")
        values.append(v)
    return values


def _run_verify(args):
    theorem = args.theorem
    if theorem == "thm-3.1":
        r, s = _require(args, ("r", "s"), theorem)
        return verify_balance_characterization(r, s)
    if theorem == "prop-4.1":
        return verify_shift_monotone()
    if theorem == "lem-4.4":
        r, s, k = _require(args, ("r", "s", "k"), theorem)
        return verify_kds(r, s, k)
    if theorem == "thm-4.5":
        r, s, m = _require(args, ("r", "s", "m"), theorem)
        return verify_tree_extremal(r, s, m)
    if theorem == "thm-5.2":
        r, s = _require(args, ("r", "s"), theorem)
        return verify_complete_bipartite_max(r, s)
    if theorem == "lem-5.3":
        return verify_monotone_completion()
    if theorem == "lem-5.4":
        r, s = _require(args, ("r", "s"), theorem)
        return verify_minus_edge(r, s)
    # thm-5.6 / thm-6.1: whole-order enumeration
    (n,) = _require(args, ("n",), theorem)
    mode = args.mode or ("max" if theorem == "thm-5.6" else "min")
    if n >= 8 and not args.extended:
        raise _UsageError(f"n={n} runs require --extended")
    if n >= 8:
        print(f"extended run: enumerating order {n}", file=sys.stderr, flush=True)
    return enumerate_bipartite_extrema(n, mode=mode.upper())


def _print_report(report, fmt):
    if fmt == "json":
        print(report.to_json())
        return
    print(f"theorem {report.theorem}")
    print("params " + " ".join(f"{k}={v}" for k, v in report.params.items()))
    print(f"search_space {report.search_space}")
    print(f"extremal_value {_fmt(report.extremal_value)}")
    print(f"verdict {report.verdict}")
    print(f"elapsed_seconds {report.elapsed_seconds:.3f}")
    for idx, wit in enumerate(report.witnesses, 1):
        print(f"witness {idx}:")
        sys.stdout.write(wit)


def _print_summary(summary, fmt):
    record = summary.as_record()
    if fmt == "json":
        out = {
            "n": record["n"],
            "rho": round(record["rho"], 12),
            "index": round(record["index"], 12),
            "eigenvalues": [round(v, 12) for v in record["eigenvalues"]],
            "charpoly": [round(v, 12) for v in record["charpoly"]],
        }
        print(json.dumps(out, indent=2))
    elif fmt == "csv":
        print("n,rho,index,eigenvalues,charpoly")
        eig = " ".join(_fmt(v) for v in record["eigenvalues"])
        cp = " ".join(_fmt(v) for v in record["charpoly"])
        print(f"{record['n']},{_fmt(record['rho'])},{_fmt(record['index'])},{eig},{cp}")
    else:
        print(f"n {record['n']}")
        print(f"rho {_fmt(record['rho'])}")
        print(f"index {_fmt(record['index'])}")
        print("eigenvalues " + " ".join(_fmt(v) for v in record["eigenvalues"]))
        print("charpoly " + " ".join(_fmt(v) for v in record["charpoly"]))


def run(argv):
    """Execute one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "analyze":
            _print_summary(spectral_summary(read_file(args.file)), args.format)
            return 0
        if args.verb == "balance":
            graph = read_file(args.file)
            print("BALANCED" if is_balanced(graph) else "UNBALANCED")
            try:
                bip = as_bipartite(graph)
                if bip.is_complete_host():
                    verdict = balance_structural(bip)
                    note = " (degenerate: no negative edges)" if not bip.negative_mask().any() else ""
                    print("structural: " + ("BALANCED" if verdict else "UNBALANCED") + note)
            except SignedSpectraError:
                pass
            return 0
        if args.verb == "gen":
            if args.target == "gstar":
                graph = gstar(args.r, args.s)
            elif args.target == "dstar":
                graph = double_star(args.r, args.s, args.i, args.j)
            else:
                graph = catalog_underlying(args.name, h=args.h, k=args.k, n=args.n)
            sys.stdout.write(write_text(graph))
            return 0
        if args.verb == "bound":
            print(_fmt(gstar_bound(args.r, args.s)))
            return 0
        if args.verb == "export":
            sys.stdout.write(to_dot(read_file(args.file)))
            return 0
        report = _run_verify(args)
        _print_report(report, args.format)
        return 2 if report.verdict == "COUNTEREXAMPLE" else 0
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: no such file", file=sys.stderr)
        return 1
    except SignedSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

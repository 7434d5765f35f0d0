"""Command-line front end: ``shiftpf expand|verify|nspf|schroeder``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

import argparse
import json
import sys

from . import __version__
from .nspf import format_nspf, format_nspf_latex, partition_into_blocks
from .numbers import schroeder
from .render import format_terms, terms_json
from .shifted_pf import sh_easy_v, sh_main_v, sh_p_expansion, sh_powersum
from .suites import SUITES, run_suite

EXPAND_BOUNDS = {"p": 16, "vodd": 16, "vany": 16, "P": 10}
NSPF_BOUND = 8
LIST_BOUND = 5
SCHROEDER_BOUND = 200


class UsageError(Exception):
    pass


def _emit(doc, fmt, text):
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return text


def _bound(n, limit, max_degree, what):
    limit = max(limit, max_degree or 0)
    if not 1 <= n <= limit:
        raise UsageError(f"{what}: n must be in 1..{limit} (raise with --max-degree)")


def _expansion(n, basis):
    if basis == "p":
        return sh_powersum(n).terms
    if basis == "P":
        return sh_p_expansion(n)
    if basis == "vodd":
        return sh_main_v(n)
    return sh_easy_v(n)


def cmd_expand(n, basis, fmt="text", max_degree=None):
    if basis not in EXPAND_BOUNDS:
        raise UsageError(f"unknown basis {basis!r}")
    _bound(n, EXPAND_BOUNDS[basis], max_degree, "expand")
    terms = _expansion(n, basis)
    doc = {
        "command": "expand",
        "version": __version__,
        "n": n,
        "basis": basis,
        "terms": terms_json(terms),
    }
    if fmt == "latex":
        text = rf"\mathrm{{sh}}_{{{n}}} = " + format_terms(terms, basis, latex=True)
    else:
        text = format_terms(terms, basis)
    return doc, _emit(doc, fmt, text), 0


def cmd_verify(suite, max_n=None, fmt="text", max_degree=None):
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        _, default, bound = SUITES[name]
        bound = max(bound, max_degree or 0)
        if max_n is None:
            n = default
        elif suite == "all":
            n = min(max_n, bound)
        else:
            if not 1 <= max_n <= bound:
                raise UsageError(f"suite {name}: --max-n must be in 1..{bound}")
            n = max_n
        checks.extend(run_suite(name, n))
    failures = [c for c in checks if not c.ok]
    doc = {
        "command": "verify",
        "version": __version__,
        "suite": suite,
        "max_n": max_n,
        "passed": not failures,
        "checks": [c.as_dict() for c in checks],
        "first_failure": failures[0].as_dict() if failures else None,
    }
    lines = [
        f"{'PASS' if c.ok else 'FAIL'}  {c.suite:<10} n={c.n:<3} {c.identity}"
        + (f"\n      {c.detail}" if c.detail else "")
        for c in checks
    ]
    lines.append(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    return doc, _emit(doc, fmt, "\n".join(lines)), 1 if failures else 0


def _entry_json(s):
    return [{"value": v, "red": red} for v, red in s]


def cmd_nspf(n, list_blocks=False, fmt="text", max_degree=None):
    _bound(n, NSPF_BOUND, max_degree, "nspf")
    if list_blocks and n > LIST_BOUND:
        raise UsageError(f"nspf: --list-blocks needs n <= {LIST_BOUND}")
    census = partition_into_blocks(n, enumerate_members=list_blocks or None,
                                   bound=max(NSPF_BOUND, max_degree or 0))
    per_label = census.blocks_per_label()
    labels = sorted(per_label, key=lambda lam: (-len(lam), [-p for p in lam]))
    doc = {
        "command": "nspf",
        "version": __version__,
        "n": n,
        "method": census.method,
        "total": census.total,
        "block_count": len(census.blocks),
        "labels": [
            {"partition": list(lam), "blocks": per_label[lam],
             "block_size": next(b.size for b in census.blocks if b.label == lam)}
            for lam in labels
        ],
    }
    lines = [f"NSPFs of length {n}: {census.total} in {len(census.blocks)} blocks ({census.method})"]
    for entry in doc["labels"]:
        lines.append(f"  lambda={entry['partition']}: {entry['blocks']} blocks of size {entry['block_size']}")
    if list_blocks:
        doc["blocks"] = [
            {
                "label": list(b.label),
                "multiplicities": list(b.key.multiplicities),
                "first_colors": [{"value": v, "red": red} for v, red in b.key.first_colors],
                "size": b.size,
                "members": [_entry_json(s) for s in b.members],
            }
            for b in census.blocks
        ]
        fmt_member = format_nspf_latex if fmt == "latex" else format_nspf
        for b in census.blocks:
            members = ", ".join(fmt_member(s) for s in b.members)
            if fmt == "latex":
                lines.append(rf"\{{{members}\}}")
            else:
                lines.append(f"  {{{members}}}  lambda={list(b.label)}")
    return doc, _emit(doc, fmt, "\n".join(lines)), 0


def cmd_schroeder(n, fmt="text", max_degree=None):
    limit = max(SCHROEDER_BOUND, max_degree or 0)
    if not 0 <= n <= limit:
        raise UsageError(f"schroeder: n must be in 0..{limit}")
    values = [schroeder(k) for k in range(n + 1)]
    doc = {"command": "schroeder", "version": __version__, "n": n, "values": values}
    return doc, _emit(doc, fmt, " ".join(map(str, values))), 0


def build_parser():
    parser = argparse.ArgumentParser(prog="shiftpf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "latex")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--max-degree", type=int, default=None,
                       help="raise the default size bound; cost grows quickly")

    p = sub.add_parser("expand", help="expand sh_n in a basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", default="vodd", help="p | P | vodd | vany")
    common(p)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument("--suite", default="all", help=" | ".join(list(SUITES) + ["all"]))
    p.add_argument("--max-n", type=int, default=None)
    common(p, ("text", "json"))

    p = sub.add_parser("nspf", help="census of naive shifted parking function blocks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list-blocks", action="store_true")
    common(p)

    p = sub.add_parser("schroeder", help="large Schroeder numbers r_0..r_n")
    p.add_argument("--n", type=int, required=True)
    common(p, ("text", "json"))
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            _, out, code = cmd_expand(args.n, args.basis, args.format, args.max_degree)
        elif args.command == "verify":
            _, out, code = cmd_verify(args.suite, args.max_n, args.format, args.max_degree)
        elif args.command == "nspf":
            _, out, code = cmd_nspf(args.n, args.list_blocks, args.format, args.max_degree)
        else:
            _, out, code = cmd_schroeder(args.n, args.format, args.max_degree)
    except UsageError as exc:
        print(f"shiftpf: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

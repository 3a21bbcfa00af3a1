"""Command line entry point.

Exit status is 0 when every requested check passes, 1 when a check fails
(the first offending cell is named on stderr) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .cartan import build_cartan_series
from .charmap import lattice_map, thm41_dominant_family
from .errors import QTSystemError
from .tsystem import (
    SystemConfig,
    evolve,
    orbit_to_json,
    relations,
    render_relation,
    verify,
)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return value


def _cell(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a cell 'a,b', got {text!r}") from None
    return a, b


def _add_system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_positive, required=True, help="rank of the first factor A_n")
    p.add_argument("--ell", type=_positive, required=True, help="rank of the second factor A_ell")
    p.add_argument("--quantum", action="store_true", help="work in the quantum torus (default: t = 1)")
    p.add_argument("--unit-boundary", action="store_true", help="set every boundary cell to 1")


def _config(args) -> SystemConfig:
    return SystemConfig(args.n, args.ell, args.quantum, "unit" if args.unit_boundary else "spiral")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtsystem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cartan-inverse", help="coefficients of the inverse quantized Cartan matrix")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--pmax", type=_nonnegative, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("evolve", help="evolve the T-system and dump cell values")
    _add_system_args(p)
    p.add_argument("--u-max", type=int, default=None, help="last time slice (default: one period)")
    p.add_argument("--cells", type=_cell, nargs="+", default=None, metavar="A,B",
                   help="only report these interior cells")
    p.add_argument("--format", choices=("json", "text", "csv"), default="text")

    p = sub.add_parser("verify", help="run the periodicity and Laurent checks over two periods")
    _add_system_args(p)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("relations", help="print the quantum relations over one period")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--unit-boundary", action="store_true")

    p = sub.add_parser("thm41", help="dominant monomials of products of evaluation modules")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--i", type=_nonnegative, default=None)
    p.add_argument("--j", type=_positive, default=None)
    p.add_argument("--m", type=_positive, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("lattice-map", help="module assignment on the lattice with overlap checks")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--corners", action="store_true", help="include the four corner cells")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


# subcommands ------------------------------------------------------------

def cmd_cartan_inverse(args, out) -> int:
    series = build_cartan_series(args.n, args.pmax)
    if args.format == "json":
        json.dump(series.to_nested(), out, indent=2)
        out.write("\n")
    else:
        for a in range(1, args.n + 1):
            for c in range(1, args.n + 1):
                coeffs = [series(a, c, p) for p in range(args.pmax + 1)]
                out.write(f"C~[{a},{c}]: {' '.join(str(x) for x in coeffs)}\n")
    bad = series.product_check()
    if bad:
        a, c, k, v = bad[0]
        print(f"product check failed at entry ({a},{c}), order {k}: {v}", file=sys.stderr)
        return 1
    return 0


def cmd_evolve(args, out) -> int:
    config = _config(args)
    u_max = config.period if args.u_max is None else args.u_max
    if u_max < config.period:
        raise _UsageError(f"--u-max must be at least the period {config.period}")
    cells = None
    if args.cells:
        cells = set(args.cells)
        bad = [c for c in cells if not config.is_interior(*c)]
        if bad:
            raise _UsageError(f"cell {bad[0]} is not an interior cell")
    orbit = evolve(config, u_max, keep_all=True)
    keys = [k for k in orbit.cells() if cells is None or k[:2] in cells]
    if args.format == "json":
        data = orbit_to_json(orbit)
        data["cells"] = [c for c in data["cells"] if (c["a"], c["b"], c["u"]) in set(keys)]
        json.dump(data, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["a", "b", "u", "alpha", "beta", "value"])
        for a, b, u in keys:
            ph = orbit.phases.get((a, b, u))
            writer.writerow([a, b, u, ph.alpha if ph else "", ph.beta if ph else "",
                             orbit.values[(a, b, u)].render()])
    else:
        for a, b, u in keys:
            ph = orbit.phases.get((a, b, u))
            tail = f"  [alpha={ph.alpha}, beta={ph.beta}]" if ph and config.quantum else ""
            out.write(f"T_{{{a},{b}}}({u}) = {orbit.values[(a, b, u)].render()}{tail}\n")
    return 0


def cmd_verify(args, out) -> int:
    config = _config(args)
    orbit, reports = verify(config)
    if args.format == "json":
        json.dump({
            "n": config.n,
            "ell": config.ell,
            "quantum": config.quantum,
            "boundary": config.boundary,
            "period": config.period,
            "u_max": orbit.u_max,
            "checks": [
                {"name": r.name, "checked": r.checked, "passed": r.passed,
                 "first_violation": repr(r.violations[0]) if r.violations else None}
                for r in reports
            ],
        }, out, indent=2)
        out.write("\n")
    else:
        mode = "quantum" if config.quantum else "classical"
        out.write(f"n={config.n} ell={config.ell} {mode} {config.boundary} boundary, "
                  f"period {config.period}, evolved to u={orbit.u_max}\n")
        for r in reports:
            out.write(r.summary() + "\n")
    failed = [r for r in reports if not r.passed]
    if failed:
        print(f"{failed[0].name} failed at {failed[0].violations[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_relations(args, out) -> int:
    config = SystemConfig(args.n, args.ell, True, "unit" if args.unit_boundary else "spiral")
    orbit = evolve(config, config.n + config.ell + config.period, keep_all=True)
    for rel in relations(orbit):
        out.write(render_relation(rel) + "\n")
    return 0


def cmd_thm41(args, out) -> int:
    n, ell = args.n, args.ell
    given = [x is not None for x in (args.i, args.j, args.m)]
    if any(given) and not all(given):
        raise _UsageError("--i, --j and --m must be given together")
    if all(given):
        triples = [(args.i, args.j, args.m)]
    else:
        triples = [(i, j, m) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                   for m in range(1, ell + 1)]
    try:
        families = [thm41_dominant_family(i, j, m, n, ell) for i, j, m in triples]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    status = 0
    records = []
    for fam in families:
        checks = fam.checks(n)
        failed = [name for name, ok in checks.items() if not ok]
        if failed and not status:
            print(f"(i,j,m)=({fam.i},{fam.j},{fam.m}) fails {', '.join(failed)}", file=sys.stderr)
            status = 1
        records.append((fam, checks))
    if args.format == "json":
        json.dump([
            {"i": f.i, "j": f.j, "m": f.m,
             "monomials": [x.to_json() for x in f.monomials],
             "checks": c}
            for f, c in records
        ], out, indent=2)
        out.write("\n")
    else:
        for fam, checks in records:
            ok = "PASS" if all(checks.values()) else "FAIL"
            out.write(f"{ok} (i,j,m)=({fam.i},{fam.j},{fam.m})\n")
            for idx, x in enumerate(fam.monomials, start=1):
                out.write(f"  M_{idx} = {x.render()}\n")
    return status


def cmd_lattice_map(args, out) -> int:
    rep = lattice_map(args.n, args.ell, include_corners=args.corners)
    if args.format == "json":
        json.dump({
            "n": rep.n,
            "ell": rep.ell,
            "overlaps": rep.overlaps,
            "entries": [
                {"cell": list(cell), "cases": cases, "highest": mono.to_json()}
                for cell, cases, mono in rep.entries
            ],
            "failures": [[kind, list(cell), msg] for kind, cell, msg in rep.failures],
        }, out, indent=2)
        out.write("\n")
    else:
        for (k, m, u), cases, mono in rep.entries:
            out.write(f"({k},{m},{u}) cases {','.join(str(c) for c in cases)}: {mono.render()}\n")
        out.write(f"{len(rep.entries)} cells, {rep.overlaps} overlaps, {len(rep.failures)} failures\n")
    if rep.failures:
        kind, cell, msg = rep.failures[0]
        print(f"{kind} check failed at {cell}: {msg}", file=sys.stderr)
        return 1
    return 0


class _UsageError(Exception):
    pass


COMMANDS = {
    "cartan-inverse": cmd_cartan_inverse,
    "evolve": cmd_evolve,
    "verify": cmd_verify,
    "relations": cmd_relations,
    "thm41": cmd_thm41,
    "lattice-map": cmd_lattice_map,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except _UsageError as exc:
        parser.error(str(exc))
    except QTSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

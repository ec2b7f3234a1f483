"""Command-line interface.

    icefock llt --n 2 --r 2 --lambda 3,1
    icefock metaplectic --n 2 --r 2 --lambda 2,1 --mu 0
    icefock verify theorem-a --n 2 --max-size 6
    icefock verify --all

Exit status: 0 when a verification passes (or a computation succeeds),
1 when a verification fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import verify as V
from .coeff_ring import Ring, RingElem, llt_g_spec, validate_g_spec
from .hat_tables import replay
from .heisenberg import llt, metaplectic_sf, super_llt
from .lattice import DELTA, GAMMA, delta_row_element, gamma_row_element
from .partitions import as_partition
from .whittaker import whittaker_Z

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITE_ALIASES = {"hat-table": "paper-tables", "tables": "paper-tables", "whittaker": "whittaker-decomp"}


class UsageError(Exception):
    pass


def parse_partition(text: Optional[str]):
    if text is None or text.strip() in ("", "0", "()", "empty"):
        return ()
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}") from exc
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"{text!r} is not a weakly decreasing list of nonnegative parts")
    return as_partition(parts)


def parse_vector(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",") if p != ""]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def load_g_spec(value: Optional[str], n: int):
    """formal | default | llt | path to a JSON file {residue: RingElem JSON}."""
    if value in (None, "formal"):
        return None
    if value == "default":
        return "default"
    if value == "llt":
        return llt_g_spec(n)
    path = Path(value)
    if not path.exists():
        raise UsageError(f"--g-spec must be formal, default, llt or a JSON file; got {value!r}")
    data = json.loads(path.read_text())
    spec = {int(a) % n: RingElem.from_json(x) for a, x in data.items()}
    try:
        validate_g_spec(spec, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    spec.setdefault(0, Ring(n).monomial(-1, q=2))
    return spec


def specialize(x: RingElem, spec):
    if spec is None:
        return x
    if spec == "default":
        return x.specialize_g()
    return x.specialize_g(spec)


# output --------------------------------------------------------------------------


def elem_payload(x: RingElem, **meta) -> dict:
    out = dict(meta)
    out["value"] = x.to_json()
    out["text"] = repr(x)
    return out


def elem_rows(x: RingElem) -> List[List]:
    rows = [["coeff", "q"] + [f"z{i + 1}" for i in range(x.arity)] + [f"G{a}" for a in range(1, x.n)]]
    for (qe, ze, ge), c in x.sorted_terms():
        rows.append([str(c), qe, *ze, *ge])
    return rows


def report_rows(reports: List[dict]) -> List[List]:
    rows = [["suite", "check", "status", "checked", "failures"]]
    for rep in reports:
        for c in rep["checks"]:
            rows.append([rep["suite"], c["name"], c["status"], c["checked"], c["failures"]])
    return rows


def emit(args, payload, rows: List[List]) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# commands ------------------------------------------------------------------------


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def cmd_llt(args) -> int:
    _need(args, "n", "lambda_")
    r = args.r or 1
    lam, mu = parse_partition(args.lambda_), parse_partition(args.mu)
    if args.g_spec in (None, "combinatorial"):
        x = llt(lam, mu, r, args.n)
    else:
        x = specialize(llt(lam, mu, r, args.n, method="operator", g_spec=None), load_g_spec(args.g_spec, args.n))
    emit(args, elem_payload(x, kind="llt", n=args.n, r=r, **{"lambda": list(lam), "mu": list(mu)}), elem_rows(x))
    return EXIT_OK


def cmd_super_llt(args) -> int:
    _need(args, "n", "lambda_")
    r = args.r or 1
    lam, mu = parse_partition(args.lambda_), parse_partition(args.mu)
    if args.g_spec in (None, "combinatorial"):
        x = super_llt(lam, mu, r, args.n)
    else:
        x = specialize(super_llt(lam, mu, r, args.n, method="operator", g_spec=None), load_g_spec(args.g_spec, args.n))
    emit(args, elem_payload(x, kind="super-llt", n=args.n, r=r, **{"lambda": list(lam), "mu": list(mu)}), elem_rows(x))
    return EXIT_OK


def cmd_metaplectic(args) -> int:
    _need(args, "n", "lambda_")
    r = args.r or 1
    lam, mu = parse_partition(args.lambda_), parse_partition(args.mu)
    x = specialize(metaplectic_sf(lam, mu, r, args.n), load_g_spec(args.g_spec, args.n))
    emit(args, elem_payload(x, kind="metaplectic", n=args.n, r=r, **{"lambda": list(lam), "mu": list(mu)}), elem_rows(x))
    return EXIT_OK


def cmd_transfer_element(args) -> int:
    _need(args, "n", "lambda_")
    flavor = (args.flavor or DELTA).lower()
    lam, mu = parse_partition(args.lambda_), parse_partition(args.mu)
    z = Ring(args.n, 1).z(1)
    if flavor == DELTA:
        x = delta_row_element(z, lam, mu)
    elif flavor == GAMMA:
        x = gamma_row_element(z, lam, mu)
    else:
        raise UsageError("--flavor must be delta or gamma")
    x = specialize(x, load_g_spec(args.g_spec, args.n))
    emit(args, elem_payload(x, kind="transfer-element", flavor=flavor, n=args.n, top=list(lam), bottom=list(mu)),
         elem_rows(x))
    return EXIT_OK


def cmd_whittaker(args) -> int:
    _need(args, "n", "r")
    lam = parse_partition(args.lambda_)
    sigma = parse_vector(args.sigma) or [0] * args.r
    flavor = (args.flavor or DELTA).lower()
    if flavor not in (DELTA, GAMMA):
        raise UsageError("--flavor must be delta or gamma")
    try:
        x = whittaker_Z(lam, sigma, flavor, args.n, args.r, args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    x = specialize(x, load_g_spec(args.g_spec, args.n))
    emit(args, elem_payload(x, kind="whittaker", flavor=flavor, n=args.n, r=args.r, N=args.N, sigma=sigma,
                            **{"lambda": list(lam)}), elem_rows(x))
    return EXIT_OK


def cmd_hat_table(args) -> int:
    ns = [args.n] if args.n else [2, 3]
    rows = [["n", "case", "row", "label", "interior_eps", "interior_delta", "A", "B", "C", "D", "matches_printed"]]
    payload: Dict = {"kind": "hat-table", "tables": []}
    for n in ns:
        reps = replay(n)
        payload["tables"].append({"n": n, "rows": [r.to_json() for r in reps]})
        for r in reps:
            rows.append([n, r.case, r.index + 1, r.label, "".join(r.inner_eps), "".join(r.inner_dlt),
                         *[repr(x) for x in r.computed], r.matches])
    emit(args, payload, rows)
    return EXIT_OK


def _suite_kwargs(name: str, args) -> dict:
    kw: Dict = {}
    if name in ("theorem-a", "heisenberg", "hecke-agree", "hecke-symmetrizer", "llt", "metaplectic",
                "cauchy-llt", "cauchy-metaplectic", "paper-tables", "straightening") and args.n:
        kw["ns"] = (args.n,)
    if name in ("commutation", "whittaker-decomp") and args.n:
        kw["n"] = args.n
    if name in ("llt", "metaplectic") and args.r:
        kw["rs"] = (args.r,)
    if name == "whittaker-decomp":
        if args.r:
            kw["r"] = args.r
        if args.xi is not None:
            kw["xis"] = (parse_partition(args.xi),)
    if name in ("hecke-agree", "hecke-symmetrizer") and args.N:
        kw["Ns"] = (args.N,)
    if args.cap is not None and name in ("cauchy-llt", "cauchy-metaplectic", "commutation"):
        kw["cap"] = args.cap
    if args.max_size is not None:
        if name in ("theorem-a", "llt", "metaplectic", "commutation", "whittaker-decomp"):
            kw["max_size"] = args.max_size
        elif name == "heisenberg":
            kw["max_degree"] = args.max_size
    if name == "straightening" and args.seed is not None:
        kw["seed"] = args.seed
    return kw


def cmd_verify(args) -> int:
    if args.all and args.suite:
        raise UsageError("give a suite name or --all, not both")
    if args.all:
        names = list(V.SUITES)
    elif args.suite:
        name = SUITE_ALIASES.get(args.suite, args.suite)
        if name not in V.SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(V.SUITES))}")
        names = [name]
    else:
        raise UsageError("verify needs a suite name or --all")
    reports = [V.SUITES[name](**_suite_kwargs(name, args)) for name in names]
    for rep in reports:
        rep.pop("seconds", None)  # keep output byte-identical across runs
    payload = reports[0] if len(reports) == 1 else {"suites": reports,
                                                     "status": "pass" if all(r["status"] == "pass" for r in reports) else "fail"}
    emit(args, payload, report_rows(reports))
    return EXIT_OK if all(r["status"] == "pass" for r in reports) else EXIT_FAIL


COMMANDS = {
    "llt": cmd_llt,
    "super-llt": cmd_super_llt,
    "metaplectic": cmd_metaplectic,
    "transfer-element": cmd_transfer_element,
    "whittaker": cmd_whittaker,
    "hat-table": cmd_hat_table,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="cover degree")
    common.add_argument("--r", type=int, help="number of variables / rows")
    common.add_argument("--N", type=int, help="last column index (whittaker) or tensor length (hecke)")
    common.add_argument("--lambda", dest="lambda_", help="partition, comma separated")
    common.add_argument("--mu", help="partition, comma separated; 0 for empty")
    common.add_argument("--xi", help="partition for the whittaker suite")
    common.add_argument("--sigma", help="charges mod n, comma separated")
    common.add_argument("--flavor", help="delta or gamma")
    common.add_argument("--cap", type=int, help="series truncation degree")
    common.add_argument("--max-size", "--range", dest="max_size", type=int, help="largest partition size")
    common.add_argument("--g-spec", help="formal, default, llt or a JSON file")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = _Parser(prog="icefock", description="Metaplectic ice and quantum Fock space computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "verify":
            sp.add_argument("suite", nargs="?")
            sp.add_argument("--all", action="store_true")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    for name in ("n", "r", "N", "cap", "max_size"):
        val = getattr(args, name, None)
        if val is not None and val < (0 if name == "N" else 1):
            print(f"icefock: error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"icefock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    flipenum seq {catalan,wedderburn} --nmax N
    flipenum table {k2,bcolor,k3} --nmax N
    flipenum gf {F_gfe0,G_gfe,L_gen1,M_gen2,S_gen3} --order N
    flipenum verify {tables,identities,systems,oracle,all} --nmax N

Every command takes ``--format {plain,csv,json}`` and ``--out PATH``.
Exit codes: 0 success, 1 failed verification, 2 usage error, 3 integrity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field

from flipenum import recurrences as rec
from flipenum import suites
from flipenum.errors import IntegrityError, UsageError
from flipenum.gf_solvers import EquationId, residual, solve

log = logging.getLogger("flipenum")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTEGRITY = 0, 1, 2, 3

#: largest order ``gf`` accepts without --force, by equation arity
GF_CAPS = {1: 200, 2: 60, 3: 24}


@dataclass
class Result:
    """Tabular command output: named index columns plus one value per entry."""

    kind: str
    params: dict
    columns: list
    entries: list = field(default_factory=list)  # [(index tuple, value)]

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "params": self.params,
            "columns": self.columns,
            "entries": [{"index": list(i), "value": str(v)} for i, v in self.entries],
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Result":
        doc = json.loads(text)
        entries = [(tuple(e["index"]), int(e["value"])) for e in doc["entries"]]
        return cls(doc["kind"], doc["params"], doc["columns"], entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*self.columns, "value"])
        for index, value in self.entries:
            w.writerow([*index, value])
        return buf.getvalue()


def _aligned(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return "".join(" ".join(c.rjust(widths[i]) for i, c in enumerate(r)).rstrip() + "\n" for r in rows)


def render_plain(result: Result) -> str:
    if result.kind in ("catalan", "wedderburn"):
        return "".join(f"{i[0]} {v}\n" for i, v in result.entries)
    if result.kind in ("k2", "bcolor", "k3"):
        nmax = result.params["nmax"]
        values = dict(result.entries)
        second = "l" if result.kind != "bcolor" else "k"
        head = ["n", "c"] if result.kind == "k3" else ["n"]
        rows = [head + [f"{second}={j}" for j in range(nmax + 1)]]
        for n in range(nmax + 1):
            if result.kind == "k3":
                for c in range(n + 1):
                    rows.append([str(n), str(c)] + [str(values[(n, c, l)]) for l in range(n + 1)])
            else:
                rows.append([str(n)] + [str(values[(n, j)]) for j in range(n + 1)])
        return _aligned(rows)
    if result.kind == "gf":
        return "".join(" ".join(map(str, i)) + f" {v}\n" for i, v in result.entries)
    raise AssertionError(result.kind)


# -- commands ---------------------------------------------------------------


def _cap(n: int, cap: int, what: str, force: bool) -> None:
    if n < 0:
        raise UsageError(f"{what} must be >= 0, got {n}")
    if n > cap and not force:
        raise UsageError(f"{what}={n} exceeds the default cap {cap}; pass --force to lift it")


def cmd_seq(kind: str, nmax: int, force: bool = False) -> Result:
    _cap(nmax, rec.DEFAULT_CAPS[kind], "--nmax", force)
    t = rec.table(kind, nmax, force=True)
    return Result(kind, {"nmax": nmax}, ["n"], [((n,), t[n]) for n in range(nmax + 1)])


def cmd_table(kind: str, nmax: int, force: bool = False) -> Result:
    _cap(nmax, rec.DEFAULT_CAPS[kind], "--nmax", force)
    t = rec.table(kind, nmax, force=True)
    if kind == "k3":
        # rows of (n, c) with l varying fastest, as the published table is laid out
        entries = [
            ((n, c, l), t[n, l, c]) for n in range(nmax + 1) for c in range(n + 1) for l in range(n + 1)
        ]
        return Result(kind, {"nmax": nmax}, ["n", "c", "l"], entries)
    second = "k" if kind == "bcolor" else "l"
    entries = [((n, j), t[n, j]) for n in range(nmax + 1) for j in range(n + 1)]
    return Result(kind, {"nmax": nmax}, ["n", second], entries)


def cmd_gf(eq: str, order: int, force: bool = False) -> Result:
    eq = EquationId.parse(eq)
    _cap(order, GF_CAPS[eq.arity], "--order", force)
    s = solve(eq, order)
    r = residual(eq, s)
    if not r.is_zero():
        raise IntegrityError(f"{eq.name} solution has nonzero residual {r!r}")
    entries = [(e[: eq.arity], c) for e, c in s.terms()]
    return Result("gf", {"equation": eq.name, "order": order}, ["x", "y", "z"][: eq.arity], entries)


def cmd_verify(scope: str, nmax: int | None, force: bool = False):
    if nmax is not None and scope == "oracle":
        _cap(nmax, suites.oracle.ENUMERATION_CAPS[1], "--nmax", force)
    return suites.run(scope, nmax)


def _render_checks(checks, fmt: str) -> str:
    records = [c.as_record() for c in checks]
    if fmt == "json":
        return json.dumps({"kind": "verify", "passed": all(c.passed for c in checks), "checks": records}, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "passed", "exponent", "got", "expected"])
        for c in checks:
            idx, got, exp = c.first_failure or ("", "", "")
            if isinstance(idx, tuple):
                idx = " ".join(map(str, idx))
            w.writerow([c.name, "pass" if c.passed else "fail", idx, got, exp])
        return buf.getvalue()
    lines = []
    for c in checks:
        if c.passed:
            lines.append(f"PASS {c.name}")
        else:
            idx, got, exp = c.first_failure
            lines.append(f"FAIL {c.name}: at {idx} got {got} expected {exp}")
    ok = sum(c.passed for c in checks)
    lines.append(f"{ok}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")
    common.add_argument("--force", action="store_true", help="lift the default size caps")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="flipenum", description="Count binary trees up to flip-equivalence.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[common], help="C_n or B_n for n = 0..nmax")
    s.add_argument("kind", choices=("catalan", "wedderburn"))
    s.add_argument("-n", "--nmax", type=int, default=15)

    t = sub.add_parser("table", parents=[common], help="K[n,l], B[n,k] or K[n,l,c] tables")
    t.add_argument("kind", choices=("k2", "bcolor", "k3"))
    t.add_argument("-n", "--nmax", type=int, help="default: 11, 10 and 8 respectively")

    g = sub.add_parser("gf", parents=[common], help="solve a functional equation to a truncation order")
    g.add_argument("equation", choices=[e.name for e in EquationId])
    g.add_argument("--order", type=int, default=10)

    v = sub.add_parser("verify", parents=[common], help="run a cross-validation suite")
    v.add_argument("scope", choices=suites.SCOPES)
    v.add_argument("-n", "--nmax", type=int, help="default depends on the scope")
    return p


_TABLE_DEFAULT = {"k2": 11, "bcolor": 10, "k3": 8}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    status = EXIT_OK
    try:
        if args.command == "verify":
            checks = cmd_verify(args.scope, args.nmax, args.force)
            text = _render_checks(checks, args.format)
            status = EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED
        else:
            if args.command == "seq":
                result = cmd_seq(args.kind, args.nmax, args.force)
            elif args.command == "table":
                nmax = _TABLE_DEFAULT[args.kind] if args.nmax is None else args.nmax
                result = cmd_table(args.kind, nmax, args.force)
            else:
                result = cmd_gf(args.equation, args.order, args.force)
            if args.format == "json":
                text = result.to_json()
            elif args.format == "csv":
                text = result.to_csv()
            else:
                text = render_plain(result)
    except UsageError as exc:
        print(f"flipenum: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"flipenum: integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)
    return status

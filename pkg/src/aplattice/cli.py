"""Command-line surface: published tables, structural checks, and exports.

Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage or bounds error.
All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import complexes, homology, moebius, structure
from .lattice import (
    DEFAULT_MAX_N,
    LatticeBoundError,
    build,
    size_formula,
)
from .moebius import MoebiusMethod
from .numtheory import classical_mobius, is_squarefree, omega
from .structure import LatticeScaleError

TABLE_MAX_N = 30
COMPLEX_EXPORT_MAX_N = 10
HOMOLOGY_EXPORT_MAX_N = 8
COMODERNISM_MAX_N = 8

_METHOD_NAMES = {m.value: m for m in MoebiusMethod}


class UsageError(ValueError):
    """Bad arguments or out-of-bounds request; maps to exit code 2."""


@dataclass
class RunReport:
    command: str
    parameters: dict
    verdicts: list = field(default_factory=list)  # (name, passed, detail)
    tables: dict = field(default_factory=dict)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.verdicts.append((name, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.verdicts)

    def to_text(self) -> str:
        lines = []
        for name, ok, detail in self.verdicts:
            tag = "PASS" if ok else "FAIL"
            lines.append(f"{tag} {name}" + (f": {detail}" if detail else ""))
        for name, payload in sorted(self.tables.items()):
            lines.append(f"[{name}]")
            lines.append(payload.rstrip("\n"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        blob = {
            "command": self.command,
            "parameters": self.parameters,
            "verdicts": [
                {"name": n, "passed": ok, "detail": d} for n, ok, d in self.verdicts
            ],
        }
        if self.tables:
            blob["tables"] = self.tables
        return json.dumps(blob, indent=2, sort_keys=True) + "\n"


def _parse_range(text: str, default: tuple[int, int]) -> tuple[int, int]:
    if text is None:
        return default
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None
    if a > b or a < 0:
        raise UsageError(f"bad range {text!r}")
    return a, b


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}") from None
    else:
        sys.stdout.write(text)


def _warn_forced(what: str) -> None:
    print(
        f"warning: --force lifts the {what} bound; "
        "expect long runtimes and heavy memory use",
        file=sys.stderr,
    )


# ---------------------------------------------------------------------------
# subcommands


def cmd_table(kind: str, n_max: int, out: str | None, force: bool) -> int:
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if n_max > TABLE_MAX_N:
        if not force:
            raise UsageError(f"--n-max {n_max} exceeds bound {TABLE_MAX_N} (use --force)")
        _warn_forced("table size")
    if kind == "p":
        rows = complexes.progression_count_rows(n_max)
    elif kind == "b":
        rows = complexes.chain_count_rows(n_max)
    else:
        rows = [[n, size_formula(n)] for n in range(0, n_max + 1)]
    _emit(complexes.rows_to_tsv(rows), out)
    return 0


def _expected_mobius(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return -1
    return classical_mobius(n - 1)


def cmd_mobius(n: int, method_name: str, as_json: bool, force: bool) -> int:
    max_n = n if force else DEFAULT_MAX_N
    if force and n > DEFAULT_MAX_N:
        _warn_forced("lattice construction")
    if method_name == "all":
        methods = list(MoebiusMethod)
    else:
        methods = [_METHOD_NAMES[method_name]]
    report = RunReport("mobius", {"n": n, "method": method_name})
    values = {}
    for m in methods:
        if m is MoebiusMethod.DEFINITION and n > max_n:
            raise UsageError(
                f"the definition method builds L({n}); bound is {max_n} (use --force)"
            )
        values[m.value] = moebius.mobius_bottom_top(n, m, max_n=max(max_n, n))
    expected = _expected_mobius(n)
    agreed = len(set(values.values())) == 1
    value = next(iter(values.values()))
    if len(methods) > 1:
        report.record(
            "method agreement",
            agreed,
            ", ".join(f"{k}={v}" for k, v in sorted(values.items())),
        )
    report.record(
        f"M({n}) matches the classical mu({max(n - 1, 0)})" if n >= 2 else f"M({n})",
        agreed and value == expected,
        f"value {value}, expected {expected}",
    )
    sys.stdout.write(report.to_json() if as_json else report.to_text())
    return 0 if report.passed else 1


def _check_theorem1(report: RunReport, lo: int, hi: int, force: bool) -> None:
    for n in range(lo, hi + 1):
        expected = _expected_mobius(n)
        values = {}
        for m in MoebiusMethod:
            if m is MoebiusMethod.DEFINITION and n > DEFAULT_MAX_N and not force:
                continue
            values[m.value] = moebius.mobius_bottom_top(n, m, max_n=max(n, DEFAULT_MAX_N))
        ok = len(set(values.values())) == 1 and values["pnk"] == expected
        report.record(
            f"theorem1 n={n}",
            ok,
            ", ".join(f"{k}={v}" for k, v in sorted(values.items()))
            + f"; expected {expected}",
        )


def _check_coatoms(report: RunReport, lo: int, hi: int) -> None:
    for n in range(max(lo, 1), hi + 1):
        lat = build(n)
        built = structure.coatoms(lat)
        top = lat.top_id
        brute = tuple(
            i
            for i in range(len(lat.elements))
            if i != top and lat.leq_ids(i, top) and len(lat.interval(i, top)) == 2
        )
        ok = built == brute
        detail = f"{len(built)} coatoms"
        if n >= 4:
            ok = ok and len(built) == omega(n - 1) + 2
            detail += f", omega(n-1)+2 = {omega(n - 1) + 2}"
        report.record(f"coatoms n={n}", ok, detail)


def _check_comodernistic(report: RunReport, lo: int, hi: int, force: bool) -> None:
    bound = hi if force else COMODERNISM_MAX_N
    if hi > COMODERNISM_MAX_N and not force:
        raise UsageError(
            f"comodernism is exhaustive; bound is {COMODERNISM_MAX_N} (use --force)"
        )
    for n in range(lo, hi + 1):
        result = structure.is_comodernistic(build(n), max_n=bound)
        report.record(
            f"comodernistic n={n}",
            result.holds,
            f"{len(result.witnesses)} intervals witnessed"
            if result.holds
            else f"counterexample interval {result.counterexample}",
        )


def _check_complemented(report: RunReport, lo: int, hi: int) -> None:
    for n in range(max(lo, 2), hi + 1):
        lat = build(n)
        have = structure.is_complemented(lat)
        want = is_squarefree(n - 1)
        ok = have == want
        detail = f"complemented={have}, squarefree(n-1)={want}"
        if not want:
            witness = structure.semicomplement_witness(lat)
            ok = ok and witness is not None
            detail += f", semicomplement witness {witness}"
        report.record(f"complemented n={n}", ok, detail)


def _check_folkman(report: RunReport, lo: int, hi: int) -> None:
    for n in range(max(lo, 4), hi + 1):
        lat = build(n)
        order = homology.reduced_homology(complexes.order_complex(lat))
        cross = homology.reduced_homology(complexes.crosscut_complex(lat))
        ok = order.nonzero() == cross.nonzero()
        report.record(
            f"folkman n={n}",
            ok,
            f"order complex: {order}; cross-cut: {cross}",
        )


def _check_euler(report: RunReport, lo: int, hi: int) -> None:
    for n in range(max(lo, 2), hi + 1):
        chi = complexes.reduced_euler_characteristic(
            complexes.order_complex(build(n))
        )
        alt = moebius.mobius_bottom_top(n, MoebiusMethod.CHAIN_ALTERNATING_SUM)
        mu = moebius.mobius_bottom_top(n, MoebiusMethod.PNK_RECURRENCE)
        report.record(
            f"euler n={n}",
            chi == alt == mu,
            f"face-count chi~ {chi}, alternating chain sum {alt}, M(n) {mu}",
        )


_CHECKS = {
    "theorem1": (_check_theorem1, (0, 12), True),
    "coatoms": (_check_coatoms, (1, 12), False),
    "comodernistic": (_check_comodernistic, (0, 8), True),
    "complemented": (_check_complemented, (2, 12), False),
    "folkman": (_check_folkman, (4, 8), False),
    "euler": (_check_euler, (2, 10), False),
}


def cmd_check(name: str, range_text: str | None, as_json: bool, force: bool) -> int:
    runner, default, takes_force = _CHECKS[name]
    lo, hi = _parse_range(range_text, default)
    if hi > DEFAULT_MAX_N and not force:
        raise UsageError(f"n range exceeds the bound {DEFAULT_MAX_N} (use --force)")
    report = RunReport("check", {"name": name, "range": [lo, hi]})
    if takes_force:
        runner(report, lo, hi, force)
    else:
        runner(report, lo, hi)
    if not report.verdicts:
        raise UsageError(f"range {lo}..{hi} leaves nothing to check for {name!r}")
    sys.stdout.write(report.to_json() if as_json else report.to_text())
    return 0 if report.passed else 1


def cmd_export(kind: str, n: int, out: str | None, force: bool) -> int:
    if kind in ("hasse-dot", "lattice-json"):
        bound = DEFAULT_MAX_N
    elif kind == "complex-json":
        bound = COMPLEX_EXPORT_MAX_N
    else:
        bound = HOMOLOGY_EXPORT_MAX_N
    if n > bound:
        if not force:
            raise UsageError(f"n={n} exceeds the {kind} bound {bound} (use --force)")
        _warn_forced(kind)
    lat = build(n, max_n=max(n, DEFAULT_MAX_N))
    if kind == "hasse-dot":
        _emit(lat.to_dot(), out)
    elif kind == "lattice-json":
        _emit(json.dumps(lat.to_json_dict(), indent=2, sort_keys=True) + "\n", out)
    elif kind == "complex-json":
        _emit(complexes.order_complex(lat).to_json(), out)
    else:
        result = homology.reduced_homology(complexes.order_complex(lat))
        _emit(json.dumps(result.as_dict(), indent=2, sort_keys=True) + "\n", out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 without argparse's traceback noise
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="aplattice",
        description="Explore the lattice of arithmetic progressions in {1,..,n}.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    t = sub.add_parser("table", help="emit a counting table as TSV")
    t.add_argument("kind", choices=["p", "b", "size"])
    t.add_argument("--n-max", type=int, default=11)
    t.add_argument("--out")
    t.add_argument("--force", action="store_true")

    m = sub.add_parser("mobius", help="Moebius value of the whole lattice")
    m.add_argument("n", type=int, nargs="?")
    m.add_argument("--n", type=int, dest="n_flag")
    m.add_argument(
        "--method",
        choices=sorted(_METHOD_NAMES) + ["all"],
        default="all",
    )
    m.add_argument("--json", action="store_true")
    m.add_argument("--force", action="store_true")

    c = sub.add_parser("check", help="verify a structural statement over a range of n")
    c.add_argument("name", choices=sorted(_CHECKS))
    c.add_argument("range", nargs="?", help="N or A..B (default depends on the check)")
    c.add_argument("--n", dest="n_flag", help="alternative spelling of the range")
    c.add_argument("--json", action="store_true")
    c.add_argument("--force", action="store_true")

    e = sub.add_parser("export", help="write a lattice, complex, or homology artifact")
    e.add_argument("kind", choices=["hasse-dot", "lattice-json", "complex-json", "homology-json"])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--out")
    e.add_argument("--force", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand == "table":
            return cmd_table(args.kind, args.n_max, args.out, args.force)
        if args.subcommand == "mobius":
            n = args.n if args.n is not None else args.n_flag
            if n is None or n < 0:
                raise UsageError("mobius needs a nonnegative n")
            return cmd_mobius(n, args.method, args.json, args.force)
        if args.subcommand == "check":
            range_text = args.range if args.range is not None else args.n_flag
            return cmd_check(args.name, range_text, args.json, args.force)
        if args.subcommand == "export":
            if args.n < 0:
                raise UsageError("export needs a nonnegative n")
            return cmd_export(args.kind, args.n, args.out, args.force)
        raise UsageError(f"unknown subcommand {args.subcommand!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LatticeBoundError, LatticeScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

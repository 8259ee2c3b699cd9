"""Command-line front end.

    genbinom binom -n 2 -k 1 --beta 1/2
    genbinom row -n 6 --k-min -3 --k-max 9
    genbinom genfunc -n 2 -t 0.5 --route closed
    genbinom partial-sum -n 4 -t 1
    genbinom ml --beta 1/2 -x 1 -x 2
    genbinom figure 4 --format json
    genbinom verify --suite exact

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import genfunc, partial_sum
from .binomial import binom_beta, binom_half_exact, half_row, is_half, row_via_pascal
from .mittag import ml_values, mittag_leffler, MLQuery
from .policy import AccuracyError, DomainError, SeriesPolicy
from .verify import SUITES, VerifyReport, run_suite

FIGURE_IDS = (1, 2, 3, 4, 5)
FIG2_POINTS = 200
FIG3_POINTS = 251

Cell = int | float | str


class UsageError(Exception):
    """Bad arguments or configuration; exit status 2."""


# -- formatting ------------------------------------------------------------------


def format_float(v: float, precision: int = 12) -> str:
    """Shortest round-trip decimal of ``v`` rounded to ``precision`` significant digits."""
    if math.isnan(v) or math.isinf(v):
        return repr(float(v))
    return repr(float(f"{float(v):.{precision}g}"))


def _cell(v: Any, precision: int) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_float(float(v), precision)
    return str(v)


def _parse_cell(text: str) -> Cell:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_table(header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, precision: int) -> str:
    if fmt == "json":
        recs = [{h: _json_value(v, precision) for h, v in zip(header, row)} for row in rows]
        return json.dumps(recs, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v, precision) for v in row])
    return buf.getvalue()


def _json_value(v: Any, precision: int) -> Any:
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        f = float(v)
        return float(format_float(f, precision)) if math.isfinite(f) else repr(f)
    return v


# -- figure data -----------------------------------------------------------------


@dataclass(frozen=True)
class FigureData:
    figure_id: int
    columns: dict[str, tuple[Cell, ...]]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.figure_id not in FIGURE_IDS:
            raise DomainError(f"figure id must be one of {FIGURE_IDS}, got {self.figure_id}")
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise DomainError("figure columns must all have the same length")

    @property
    def header(self) -> list[str]:
        return list(self.columns)

    @property
    def n_rows(self) -> int:
        return len(next(iter(self.columns.values()))) if self.columns else 0

    def rows(self) -> list[tuple[Cell, ...]]:
        return list(zip(*self.columns.values()))

    def to_csv(self, precision: int = 12) -> str:
        return write_table(self.header, self.rows(), "csv", precision)

    def to_json(self, precision: int = 12) -> str:
        cols = {k: [_json_value(v, precision) for v in vals] for k, vals in self.columns.items()}
        doc = {"figure_id": self.figure_id, "metadata": self.metadata, "columns": cols}
        return json.dumps(doc, indent=2) + "\n"

    def rounded(self, precision: int = 12) -> FigureData:
        """The data as it reads back after printing at ``precision`` digits."""
        cols = {
            k: tuple(_parse_cell(_cell(v, precision)) for v in vals) for k, vals in self.columns.items()
        }
        return FigureData(self.figure_id, cols, dict(self.metadata))

    @classmethod
    def from_csv(cls, figure_id: int, text: str, metadata: dict[str, Any] | None = None) -> FigureData:
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        data: list[list[Cell]] = [[] for _ in header]
        for row in reader:
            if len(row) != len(header):
                raise DomainError("ragged CSV row")
            for i, cell in enumerate(row):
                data[i].append(_parse_cell(cell))
        return cls(figure_id, {h: tuple(col) for h, col in zip(header, data)}, metadata or {})

    @classmethod
    def from_json(cls, text: str) -> FigureData:
        doc = json.loads(text)
        cols = {k: tuple(v) for k, v in doc["columns"].items()}
        return cls(int(doc["figure_id"]), cols, doc.get("metadata", {}))


def _figure1() -> FigureData:
    betas = (Fraction(1, 4), Fraction(1, 2), Fraction(1))
    ns, ks = [], []
    vals: dict[str, list[float]] = {f"beta_{b}": [] for b in betas}
    exact: list[str] = []
    for n in range(11):
        for k in range(-5, 16):
            ns.append(n)
            ks.append(k)
            for b in betas:
                vals[f"beta_{b}"].append(binom_beta(n, k, b))
            exact.append(str(binom_half_exact(n, k)))
    cols: dict[str, tuple[Cell, ...]] = {"n": tuple(ns), "k": tuple(ks)}
    cols.update({k: tuple(v) for k, v in vals.items()})
    cols["exact_1/2"] = tuple(exact)
    meta = {"n": [0, 10], "k": [-5, 15], "beta": [str(b) for b in betas]}
    return FigureData(1, cols, meta)


def _figure2() -> FigureData:
    betas = [Fraction(2 * i, FIG2_POINTS) for i in range(1, FIG2_POINTS + 1)]
    return FigureData(
        2,
        {"beta": tuple(float(b) for b in betas), "binom_8_4": tuple(binom_beta(8, 4, b) for b in betas)},
        {"n": 8, "k": 4, "beta": [0, 2], "points": FIG2_POINTS},
    )


def _figure3() -> FigureData:
    xs = np.linspace(-0.5, 2.0, FIG3_POINTS)
    e = ml_values(0.5, xs)
    e2x = ml_values(0.5, 2 * xs)
    return FigureData(
        3,
        {"x": tuple(map(float, xs)), "E": tuple(map(float, e)), "E_squared": tuple(map(float, e * e)),
         "E_2x": tuple(map(float, e2x))},
        {"beta": "1/2", "x": [-0.5, 2.0], "points": FIG3_POINTS},
    )


def _figure4() -> FigureData:
    ns = tuple(range(51))
    phi = tuple(genfunc.phi_closed(n, 1.0) for n in ns)
    power = tuple(2 ** (n / 2 + 1) for n in ns)
    return FigureData(
        4,
        {"n": ns, "phi_n_1": phi, "power": power, "ratio": tuple(p / q for p, q in zip(phi, power))},
        {"t": 1, "n": [0, 50]},
    )


def _figure5() -> FigureData:
    ns = tuple(range(51))
    bar = tuple(partial_sum.row_sum(n) for n in ns)
    power = tuple(2 ** (n / 2 + 1) for n in ns)
    return FigureData(
        5,
        {"n": ns, "phibar_n_1": bar, "power": power, "ratio": tuple(p / q for p, q in zip(bar, power))},
        {"t": 1, "n": [0, 50]},
    )


_FIGURES = {1: _figure1, 2: _figure2, 3: _figure3, 4: _figure4, 5: _figure5}


def figure_data(figure_id: int) -> FigureData:
    if figure_id not in _FIGURES:
        raise DomainError(f"figure id must be one of {FIGURE_IDS}, got {figure_id}")
    return _FIGURES[figure_id]()


# -- argument parsing --------------------------------------------------------------


def parse_beta(text: str) -> Fraction:
    """``1/2``, ``0.7`` or ``3`` as an exact rational (decimals are taken at face value)."""
    try:
        b = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational or decimal number: {text!r}") from None
    if b <= 0:
        raise argparse.ArgumentTypeError(f"beta must be positive, got {text}")
    return b


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _precision(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must lie in 1..17")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", type=parse_beta, default=Fraction(1, 2), help="order, e.g. 1/2 or 0.7")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=_precision, default=12, help="significant digits")
    common.add_argument("--tol", type=_positive_float, default=None, help="series relative tolerance")

    p = argparse.ArgumentParser(prog="genbinom", description="Generalized binomial coefficients [n k]_beta.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("binom", parents=[common], help="single coefficients or a k range")
    b.add_argument("-n", type=int, required=True)
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("-k", type=int)
    g.add_argument("--k-range", nargs=2, type=int, metavar=("K_MIN", "K_MAX"))

    r = sub.add_parser("row", parents=[common], help="row n for k_min <= k <= k_max")
    r.add_argument("-n", type=int, required=True)
    r.add_argument("--k-min", type=int, default=0)
    r.add_argument("--k-max", type=int, default=None)
    r.add_argument("--pascal", action="store_true", help="build the row by Pascal's rule (beta = 1/2)")

    gf = sub.add_parser("genfunc", parents=[common], help="phi_n(t)")
    gf.add_argument("-n", type=int, required=True)
    gf.add_argument("-t", type=float, action="append", required=True)
    gf.add_argument("--route", choices=genfunc.ROUTES, default=None)

    ps = sub.add_parser("partial-sum", parents=[common], help="phibar_n(t)")
    ps.add_argument("-n", type=int, required=True)
    ps.add_argument("-t", type=str, action="append", required=True, help="rational t gives an exact column")
    ps.add_argument("--route", choices=partial_sum.ROUTES, default="direct")

    ml = sub.add_parser("ml", parents=[common], help="Mittag-Leffler E_beta(x)")
    ml.add_argument("-x", type=float, action="append", required=True)

    f = sub.add_parser("figure", parents=[common], help="data behind figures 1-5")
    f.add_argument("figure_id", type=int)

    v = sub.add_parser("verify", parents=[common], help="run the verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--thresholds", type=str, default=None, help="JSON file mapping check name to threshold")
    return p


# -- commands --------------------------------------------------------------------


def _policy(args: argparse.Namespace) -> SeriesPolicy:
    return SeriesPolicy(rel_tol=args.tol) if args.tol is not None else SeriesPolicy()


def _binom_rows(n: int, ks: range, beta: Fraction) -> list[tuple[Any, ...]]:
    half = is_half(beta)
    return [(n, k, str(binom_half_exact(n, k)) if half else None, binom_beta(n, k, beta)) for k in ks]


def cmd_binom(args: argparse.Namespace) -> str:
    ks = range(args.k, args.k + 1) if args.k is not None else range(args.k_range[0], args.k_range[1] + 1)
    return write_table(["n", "k", "exact", "float"], _binom_rows(args.n, ks, args.beta), args.format, args.precision)


def cmd_row(args: argparse.Namespace) -> str:
    k_max = args.n if args.k_max is None else args.k_max
    if k_max < args.k_min:
        raise UsageError("k-max must not be smaller than k-min")
    if args.pascal:
        if not is_half(args.beta):
            raise UsageError("--pascal builds rows for beta = 1/2 only")
        row = row_via_pascal(args.n, args.k_min, k_max)
        rows = [(args.n, k, str(row[k]), float(row[k])) for k in row.ks]
    elif is_half(args.beta):
        row = half_row(args.n, args.k_min, k_max)
        rows = [(args.n, k, str(row[k]), float(row[k])) for k in row.ks]
    else:
        rows = _binom_rows(args.n, range(args.k_min, k_max + 1), args.beta)
    return write_table(["n", "k", "exact", "float"], rows, args.format, args.precision)


def cmd_genfunc(args: argparse.Namespace) -> str:
    if not is_half(args.beta):
        raise UsageError("generating functions are implemented for beta = 1/2")
    rows = []
    for t in args.t:
        if args.route == "series" or (args.route is None and abs(t) < 0.99):
            out = genfunc.phi_series(args.n, t, _policy(args))
            rows.append((args.n, t, "series", out.value, out.tail_bound))
        else:
            pt = genfunc.phi(args.n, t, args.route)
            rows.append((args.n, t, pt.route, pt.value, None))
    return write_table(["n", "t", "route", "value", "tail_bound"], rows, args.format, args.precision)


def cmd_partial_sum(args: argparse.Namespace) -> str:
    if not is_half(args.beta):
        raise UsageError("partial sums are implemented for beta = 1/2")
    rows = []
    for text in args.t:
        try:
            tq = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"not a number: {text!r}") from None
        exact = partial_sum.phibar_exact(args.n, tq) if args.route == "direct" else None
        value = float(exact) if exact is not None else partial_sum.phibar(args.n, float(tq), args.route).value
        rows.append((args.n, float(tq), args.route, str(exact) if exact is not None else None, value))
    return write_table(["n", "t", "route", "exact", "value"], rows, args.format, args.precision)


def cmd_ml(args: argparse.Namespace) -> str:
    rows = []
    for x in args.x:
        out = mittag_leffler(MLQuery(float(args.beta), x, _policy(args)))
        rows.append((str(args.beta), x, out.value, out.terms_used, out.tail_bound))
    return write_table(["beta", "x", "value", "terms", "tail_bound"], rows, args.format, args.precision)


def cmd_figure(args: argparse.Namespace) -> str:
    if args.figure_id not in FIGURE_IDS:
        raise UsageError(f"figure id must be one of {', '.join(map(str, FIGURE_IDS))}")
    data = figure_data(args.figure_id)
    return data.to_json(args.precision) if args.format == "json" else data.to_csv(args.precision)


def _load_thresholds(path: str | None) -> dict[str, float] | None:
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read thresholds file: {exc}") from None
    if not isinstance(doc, dict) or not all(isinstance(v, (int, float)) for v in doc.values()):
        raise UsageError("thresholds file must map check names to numbers")
    return {str(k): float(v) for k, v in doc.items()}


def report_table(report: VerifyReport, fmt: str, precision: int) -> str:
    header = ["check", "cases", "max_residual", "worst", "threshold", "passed"]
    rows = [(c.name, c.cases, c.max_residual, c.worst, c.threshold, c.passed) for c in report.checks]
    return write_table(header, rows, fmt, precision)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = run_suite(args.suite, _load_thresholds(args.thresholds))
    return report_table(report, args.format, args.precision), 0 if report.passed else 1


_COMMANDS = {
    "binom": cmd_binom,
    "row": cmd_row,
    "genfunc": cmd_genfunc,
    "partial-sum": cmd_partial_sum,
    "ml": cmd_ml,
    "figure": cmd_figure,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on malformed arguments
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = _COMMANDS[args.command](args), 0
    except (UsageError, DomainError, AccuracyError, OverflowError) as exc:
        print(f"genbinom {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

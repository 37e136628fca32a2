"""Command-line frontend.

Subcommands map one-to-one onto the engine entry points:

  dim-secant         projective dimension of sigma_R(X)
  dim-hadamard       dimension of sigma_{r_1}(X) * ... * sigma_{r_m}(X)
  generic-hrank      smallest m with sigma_r(X)^(*m) = P^N
  verify-table       re-run a stored check table, pass/fail per row
  degeneration-demo  exact-rational verification of the scaling family
  binomial-check     Newton-polytope segment test for a support file

Exit codes: 0 when every reported check passes (for dimension queries: the
result is certified, not merely probabilistic), 1 when any check fails, 2 on
usage errors.  Identical inputs produce byte-identical reports; JSON carries
a top-level `schema` field, CSV column order is frozen.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .config import RunConfig
from .degeneration import DEFAULT_NUS, demo_points, limit_check
from .exponent import HadamardSpec, VarietyDescriptor, normalize, read_matrix_csv
from .hadamdim import (
    STATUS_EXPECTED,
    STATUS_FOUND,
    STATUS_INFINITE,
    generic_hrank,
    hadamard_dimension,
)
from .secantdim import STATUS_NONDEFECTIVE, secant_dimension
from .tables import CSV_COLUMNS, run_table
from .tropical import VERDICT_BINOMIAL, Support, classify_support

SCHEMA_VERSION = 1

_INT = re.compile(r"-?\d+")


class DescriptorError(ValueError):
    """Malformed variety descriptor; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"descriptor {text!r}: {message} (at position {pos})")


def _expect(text: str, pos: int, token: str) -> int:
    if not text.startswith(token, pos):
        raise DescriptorError(text, pos, f"expected {token!r}")
    return pos + len(token)


def _int_at(text: str, pos: int) -> tuple[int, int]:
    m = _INT.match(text, pos)
    if not m:
        raise DescriptorError(text, pos, "expected an integer")
    return int(m.group()), m.end()


def _int_list(text: str, pos: int) -> tuple[tuple[int, ...], int]:
    vals = []
    v, pos = _int_at(text, pos)
    vals.append(v)
    while pos < len(text) and text[pos] == ",":
        v, pos = _int_at(text, pos + 1)
        vals.append(v)
    return tuple(vals), pos


def _end(text: str, pos: int) -> None:
    if pos != len(text):
        raise DescriptorError(text, pos, "unexpected trailing text")


def parse_descriptor(text: str) -> VarietyDescriptor:
    """Parse the descriptor grammar.

    veronese:d=<int>,n=<int> | segre:n=<ints> | sv:d=<ints>;n=<ints>
    | rnc:<int> | matrix:<path>
    """
    head, sep, _ = text.partition(":")
    if not sep:
        raise DescriptorError(text, len(text), "expected ':' after the kind")
    pos = len(head) + 1
    if head == "veronese":
        pos = _expect(text, pos, "d=")
        d, pos = _int_at(text, pos)
        pos = _expect(text, pos, ",n=")
        n, pos = _int_at(text, pos)
        _end(text, pos)
        if d < 1 or n < 1:
            raise DescriptorError(text, pos, "d and n must be >= 1")
        return VarietyDescriptor.veronese(d, n)
    if head == "segre":
        pos = _expect(text, pos, "n=")
        dims, pos = _int_list(text, pos)
        _end(text, pos)
        if any(n < 1 for n in dims):
            raise DescriptorError(text, pos, "factor dimensions must be >= 1")
        return VarietyDescriptor.segre(dims)
    if head == "sv":
        pos = _expect(text, pos, "d=")
        degrees, pos = _int_list(text, pos)
        pos = _expect(text, pos, ";n=")
        dims, pos = _int_list(text, pos)
        _end(text, pos)
        if len(degrees) != len(dims):
            raise DescriptorError(text, pos, "d and n must have equal lengths")
        if any(d < 1 for d in degrees) or any(n < 1 for n in dims):
            raise DescriptorError(text, pos, "all entries must be >= 1")
        return VarietyDescriptor.segre_veronese(degrees, dims)
    if head == "rnc":
        deg, pos = _int_at(text, pos)
        _end(text, pos)
        if deg < 1:
            raise DescriptorError(text, pos, "degree must be >= 1")
        return VarietyDescriptor.rnc(deg)
    if head == "matrix":
        path = text[pos:]
        if not path:
            raise DescriptorError(text, pos, "expected a file path")
        return VarietyDescriptor.custom(read_matrix_csv(path), label=text)
    raise DescriptorError(text, 0, f"unknown kind {head!r}")


def _r_vector(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("every r_k must be a positive integer")
    return vals


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated fraction list")


# --- output plumbing ---------------------------------------------------------


def _json_doc(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2) + "\n"


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value))
    return value


def _csv_doc(columns, rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[c]) for c in columns])
    return buf.getvalue()


def _text_doc(payload: dict) -> str:
    width = max(len(k) for k in payload)
    return "".join(f"{k.ljust(width)}  {payload[k]}\n" for k in payload)


def _emit(doc: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)


def _render_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _json_doc(payload)
    if fmt == "csv":
        return _csv_doc(list(payload.keys()), [payload])
    return _text_doc(payload)


def _config_from(args) -> RunConfig:
    return RunConfig(
        prime=args.prime, trials=args.trials, seed=args.seed, max_retries=args.retries
    )


# --- subcommands --------------------------------------------------------------


def _cmd_dim_secant(args) -> int:
    rep = secant_dimension(parse_descriptor(args.descriptor), args.r, _config_from(args))
    _emit(_render_report(rep.to_dict(), args.format or "json"), args.out)
    return 0 if rep.status == STATUS_NONDEFECTIVE else 1


def _cmd_dim_hadamard(args) -> int:
    rep = hadamard_dimension(parse_descriptor(args.descriptor), args.r, _config_from(args))
    _emit(_render_report(rep.to_dict(), args.format or "json"), args.out)
    return 0 if rep.status == STATUS_EXPECTED else 1


def _cmd_generic_hrank(args) -> int:
    rep = generic_hrank(parse_descriptor(args.descriptor), args.r, _config_from(args))
    _emit(_render_report(rep.to_dict(), args.format or "json"), args.out)
    return 0 if rep.status in (STATUS_FOUND, STATUS_INFINITE) else 1


def _cmd_verify_table(args) -> int:
    rows = run_table(args.table, _config_from(args), extended=args.extended)
    dicts = [row.to_dict() for row in rows]
    fmt = args.format or "csv"
    if fmt == "json":
        doc = _json_doc(
            {
                "table": args.table,
                "extended": args.extended,
                "rows": dicts,
                "n_rows": len(dicts),
                "n_pass": sum(d["pass"] for d in dicts),
                "all_pass": all(d["pass"] for d in dicts),
            }
        )
    elif fmt == "csv":
        doc = _csv_doc(CSV_COLUMNS, dicts)
    else:
        lines = [
            "{descriptor}  r=({r})  computed={computed_dim}  "
            "expected={expected_dim}  {outcome}".format(
                outcome="pass" if d["pass"] else "FAIL",
                **{**d, "r": ",".join(map(str, d["r"]))},
            )
            for d in dicts
        ]
        n_pass = sum(d["pass"] for d in dicts)
        lines.append(f"{n_pass}/{len(dicts)} rows pass")
        doc = "\n".join(lines) + "\n"
    _emit(doc, args.out)
    return 0 if all(d["pass"] for d in dicts) else 1


def _cmd_degeneration_demo(args) -> int:
    desc = parse_descriptor(args.descriptor)
    abar = normalize(desc.matrix())
    spec = HadamardSpec(args.r)
    points = demo_points(abar, spec, args.seed, nus=args.nus)
    rep = limit_check(abar, spec, points, args.nus, label=str(desc))
    if (args.format or "text") == "json":
        _emit(_json_doc(rep.to_dict()), args.out)
        return 0 if rep.all_pass else 1
    lines = [
        f"degeneration check: {rep.descriptor}  r={spec}  R={spec.total_points}",
        "",
        f"  {'nu':>8}  {'max |M(nu) - limit|':>22}  {'ratio':>8}",
    ]
    for i, nu in enumerate(rep.nus):
        ratio = f"{float(rep.error_ratios[i - 1]):8.2f}" if i else " " * 8
        lines.append(f"  {str(nu):>8}  {float(rep.max_errors[i]):22.3e}  {ratio}")
    band = f"[{rep.ratio_band[0]}, {rep.ratio_band[1]}]"
    checks = [
        ("first row of M(nu) == all-ones, exactly", rep.row0_exact_ok),
        (f"error ratios within {band}", rep.first_order_ok),
        (f"limit rows span the secant rows (rank {rep.secant_rank})", rep.rowspan_ok),
        ("rank semicontinuity at smallest nu", rep.semicontinuity_ok),
    ]
    label_w = max(len(lbl) for lbl, _ in checks)
    lines += [
        "",
        *(f"  {lbl.ljust(label_w)}  {_pf(ok)}" for lbl, ok in checks),
        f"  product rank {rep.limit_kr_rank} => dimension >= {rep.dim_lower_bound}",
        "",
        json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "all_pass": rep.all_pass,
                "dim_lower_bound": rep.dim_lower_bound,
            },
            sort_keys=True,
        ),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if rep.all_pass else 1


def _pf(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def _read_support(source: str) -> Support:
    if source == "-":
        raw = sys.stdin.read()
    else:
        with open(source) as fh:
            raw = fh.read()
    vectors = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            vectors.append(tuple(int(x) for x in body.replace(",", " ").split()))
        except ValueError:
            raise ValueError(f"{source}:{lineno}: non-integer entry")
    if not vectors:
        raise ValueError(f"{source}: empty support")
    return Support.of(vectors)


def _cmd_binomial_check(args) -> int:
    support = _read_support(args.support)
    verdict = classify_support(support)
    payload = {
        "verdict": verdict,
        "binomial": verdict == VERDICT_BINOMIAL,
        "n_vectors": support.size,
    }
    fmt = args.format or "text"
    if fmt == "json":
        _emit(_json_doc(payload), args.out)
    else:
        _emit(f"{verdict} ({support.size} support vectors)\n", args.out)
    return 0 if verdict == VERDICT_BINOMIAL else 1


# --- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=RunConfig().prime,
                        help="modulus for the rank probes (probable prime > 2^16)")
    common.add_argument("--trials", type=int, default=RunConfig().trials,
                        help="independent point draws per probe")
    common.add_argument("--seed", type=int, default=RunConfig().seed,
                        help="base seed; trial t draws from seed + t")
    common.add_argument("--retries", type=int, default=RunConfig().max_retries,
                        help="extra reseeds when a probe misses its target")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="output format (default: json; verify-table: csv; "
                             "degeneration-demo, binomial-check: text)")
    common.add_argument("--out", metavar="FILE", default=None,
                        help="write the report to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="toricdim",
        description="dimensions of secant varieties and Hadamard products "
                    "of embedded toric varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim-secant", parents=[common],
                       help="projective dimension of sigma_R(X)")
    p.add_argument("descriptor", help="variety descriptor, e.g. veronese:d=4,n=2")
    p.add_argument("--r", type=int, required=True, metavar="R", dest="r",
                   help="secant index R >= 1")
    p.set_defaults(handler=_cmd_dim_secant)

    p = sub.add_parser("dim-hadamard", parents=[common],
                       help="dimension of a Hadamard product of secant varieties")
    p.add_argument("descriptor")
    p.add_argument("--r", type=_r_vector, required=True, metavar="R1,R2,...",
                   help="factor indices, e.g. 2,2,2,2")
    p.set_defaults(handler=_cmd_dim_hadamard)

    p = sub.add_parser("generic-hrank", parents=[common],
                       help="generic Hadamard rank: smallest filling power of sigma_r")
    p.add_argument("descriptor")
    p.add_argument("--r", type=int, required=True, metavar="R",
                   help="inner secant index r")
    p.set_defaults(handler=_cmd_generic_hrank)

    p = sub.add_parser("verify-table", parents=[common],
                       help="re-run a stored check table")
    p.add_argument("table", choices=("veronese", "binary", "experiments"))
    p.add_argument("--extended", action="store_true",
                   help="experiments only: the full (slow) sweep")
    p.set_defaults(handler=_cmd_verify_table)

    p = sub.add_parser("degeneration-demo", parents=[common],
                       help="exact-rational verification of the scaling degeneration")
    p.add_argument("--descriptor", default="rnc:8",
                   help="variety to verify on (default rnc:8)")
    p.add_argument("--r", type=_r_vector, default=(2, 3), metavar="R1,R2,...",
                   help="factor indices (default 2,3)")
    p.add_argument("--nus", type=_fraction_list, default=DEFAULT_NUS,
                   metavar="F1,F2,...",
                   help="strictly decreasing scale values (default 1/10,1/100,1/1000)")
    p.set_defaults(handler=_cmd_degeneration_demo)

    p = sub.add_parser("binomial-check", parents=[common],
                       help="is a polynomial support a binomial segment?")
    p.add_argument("support",
                   help="file of integer exponent vectors, one per line ('-' = stdin)")
    p.set_defaults(handler=_cmd_binomial_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DescriptorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

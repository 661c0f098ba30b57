"""Command-line front end emitting CSV scans of corrected Euler products.

Every subcommand writes the same schema so downstream plotting stays
uniform:

    sigma,t,x,re_value,im_value,re_ref,im_ref,abs_err,rel_err,flags

Values carry 17 significant digits (exact double round-trip), lines end in
LF, and identical invocations produce byte-identical output.  Inapplicable
cells are left empty.  The ``flags`` cell joins markers with ';':
``outside-domain`` and ``on-cut`` qualify a value, ``error:<Type>`` marks a
grid point whose evaluation failed.

Scans may be parallelised by setting EULERPROD_THREADS (default: machine
parallelism); row order and bytes do not depend on the thread count.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .errors import EulerProductError
from .experiments import ScanMode, ScanRow, ScanSpec, error_decay, scan
from .primes import sieve
from .product import ProductVariant, corrected_product, mertens_ratio
from .specfun import BranchSide, e1
from .zetaref import DEFAULT_CONFIG

CSV_HEADER = "sigma,t,x,re_value,im_value,re_ref,im_ref,abs_err,rel_err,flags"

THREADS_ENV_VAR = "EULERPROD_THREADS"

_VARIANTS = {v.value: v for v in ProductVariant}
_CUTS = {"above": BranchSide.FROM_ABOVE, "below": BranchSide.FROM_BELOW}


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return f"{value:.17g}"


def _csv_line(sigma, t, x, value, reference, abs_err, rel_err, flags) -> str:
    cells = [
        _fmt(sigma),
        _fmt(t),
        _fmt(x),
        _fmt(value.real if value is not None else None),
        _fmt(value.imag if value is not None else None),
        _fmt(reference.real if reference is not None else None),
        _fmt(reference.imag if reference is not None else None),
        _fmt(abs_err),
        _fmt(rel_err),
        ";".join(flags),
    ]
    return ",".join(cells)


def _row_line(row: ScanRow) -> str:
    return _csv_line(
        row.sigma, row.t, row.x, row.value, row.reference, row.abs_err, row.rel_err, row.flags
    )


def _eval_flags(ev) -> tuple[str, ...]:
    flags = []
    if ev.outside_domain:
        flags.append("outside-domain")
    if ev.on_cut:
        flags.append("on-cut")
    return tuple(flags)


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None:
        try:
            n = int(raw)
        except ValueError:
            raise EulerProductError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
        if n < 1:
            raise EulerProductError(f"{THREADS_ENV_VAR} must be >= 1, got {n}")
        return n
    return os.cpu_count() or 1


def _add_common(parser: argparse.ArgumentParser, *, variant=True, cut=True) -> None:
    if variant:
        parser.add_argument(
            "--variant",
            choices=sorted(_VARIANTS),
            default=ProductVariant.ZETA.value,
            help="product shape: zeta, inverse-zeta or ratio (zeta(2s)/zeta(s))",
        )
    if cut:
        parser.add_argument(
            "--cut",
            choices=sorted(_CUTS),
            default="above",
            help="side of the branch cut used for on-cut E1 arguments",
        )
    parser.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerprod",
        description=(
            "Evaluate truncated Euler prime products with an exponential-"
            "integral correction and compare them against the zeta function."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the corrected product at one point")
    p.add_argument("--sigma", type=float, required=True, help="real part of s")
    p.add_argument("--t", type=float, default=0.0, help="imaginary part of s")
    p.add_argument("--x", type=int, default=1000, help="truncation limit (primes <= x)")
    _add_common(p)

    p = sub.add_parser("scan-real", help="scan real s between s-min and s-max")
    p.add_argument("--s-min", type=float, required=True)
    p.add_argument("--s-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--x", type=int, default=1000)
    _add_common(p)

    p = sub.add_parser("scan-line", help="scan up the vertical line Re(s) = sigma")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0, help="start of the t range")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--x", type=int, default=1000)
    _add_common(p)

    p = sub.add_parser("mertens", help="ratio of the s = 1 product to e^gamma log x")
    p.add_argument("--x", type=int, default=1000)
    _add_common(p, variant=False, cut=False)

    p = sub.add_parser("decay", help="fit the error-decay exponent across truncations")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, default=5.0, help="imaginary part of s")
    p.add_argument(
        "--x-grid",
        default="1000,10000,100000,1000000",
        help="comma-separated ascending truncation limits",
    )
    _add_common(p)

    p = sub.add_parser("e1", help="evaluate the exponential integral E1 at one point")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    _add_common(p, variant=False)

    return parser


def _run_eval(args) -> list[str]:
    table = sieve(args.x)
    ev = corrected_product(
        complex(args.sigma, args.t),
        table,
        _VARIANTS[args.variant],
        _CUTS[args.cut],
        ref_cfg=DEFAULT_CONFIG,
    )
    rel = ev.abs_error / abs(ev.reference)
    return [
        _csv_line(
            args.sigma, args.t, args.x, ev.value, ev.reference, ev.abs_error, rel,
            _eval_flags(ev),
        )
    ]


def _run_scan_real(args) -> list[str]:
    spec = ScanSpec(
        mode=ScanMode.REAL_AXIS,
        x=args.x,
        step=args.step,
        variant=_VARIANTS[args.variant],
        cut=_CUTS[args.cut],
        s_min=args.s_min,
        s_max=args.s_max,
    )
    rows = scan(spec, sieve(args.x), max_workers=_thread_count())
    return [_row_line(r) for r in rows]


def _run_scan_line(args) -> list[str]:
    spec = ScanSpec(
        mode=ScanMode.VERTICAL_LINE,
        x=args.x,
        step=args.step,
        variant=_VARIANTS[args.variant],
        cut=_CUTS[args.cut],
        sigma=args.sigma,
        t_min=args.t,
        t_max=args.t_max,
    )
    rows = scan(spec, sieve(args.x), max_workers=_thread_count())
    return [_row_line(r) for r in rows]


def _run_mertens(args) -> list[str]:
    ratio = mertens_ratio(sieve(args.x))
    dev = abs(ratio - 1.0)
    return [_csv_line(1.0, 0.0, args.x, complex(ratio), complex(1.0), dev, dev, ())]


def _run_decay(args) -> list[str]:
    try:
        x_grid = [int(part) for part in args.x_grid.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"could not parse --x-grid {args.x_grid!r}") from None
    variant = _VARIANTS[args.variant]
    cut = _CUTS[args.cut]
    s = complex(args.sigma, args.t)
    table = sieve(max(x_grid))
    fit = error_decay(s, x_grid, variant, table=table, cut=cut)
    lines = []
    for x in x_grid:
        ev = corrected_product(s, table.truncate(x), variant, cut, ref_cfg=DEFAULT_CONFIG)
        rel = ev.abs_error / abs(ev.reference)
        lines.append(
            _csv_line(args.sigma, args.t, x, ev.value, ev.reference, ev.abs_error, rel,
                      _eval_flags(ev))
        )
    print(
        f"decay fit: slope={fit.slope:.6f} intercept={fit.intercept:.6f} "
        f"target={0.5 - args.sigma:.6f} points={len(fit.x_grid)}",
        file=sys.stderr,
    )
    return lines


def _run_e1(args) -> list[str]:
    result = e1(complex(args.re, args.im), _CUTS[args.cut])
    flags = ("on-cut",) if result.on_cut else ()
    return [_csv_line(args.re, args.im, None, result.value, None, None, None, flags)]


_RUNNERS = {
    "eval": _run_eval,
    "scan-real": _run_scan_real,
    "scan-line": _run_scan_line,
    "mertens": _run_mertens,
    "decay": _run_decay,
    "e1": _run_e1,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = _RUNNERS[args.command](args)
    except ValueError as exc:
        # Bad flag combinations (empty ranges, unparsable grids) are usage
        # errors; numerical failures exit 1 below.
        print(f"eulerprod: usage error: {exc}", file=sys.stderr)
        return 2
    except EulerProductError as exc:
        print(f"eulerprod: error: {exc}", file=sys.stderr)
        return 1
    text = "\n".join([CSV_HEADER, *lines]) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii", newline="\n") as handle:
            handle.write(text)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""``snzeros`` command line.

Exit codes: 0 success, 2 guard or argument violation, 3 verification
failure, 4 I/O error.  Data goes to stdout or ``--output``; ``--progress``
status lines go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as sio
from .asymptotics import report
from .characters import default_workers, full_table
from .hooks import SizeGuardError
from .sampler import METHODS, SeedSpec, estimate_zero_types
from .verify import SUITES, run_suite
from .zeros import census

EXIT_OK = 0
EXIT_GUARD = 2
EXIT_VERIFY = 3
EXIT_IO = 4


class _Fail(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _n_range(text: str) -> list[int]:
    """``"12"`` or an inclusive range ``"1:12"``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A:B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _progress(args, msg: str) -> None:
    if args.progress:
        print(msg, file=sys.stderr, flush=True)


def _emit(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Fail(EXIT_IO, "io", f"cannot write {args.output}: {exc}") from exc


def _workers(args) -> int:
    return default_workers() if args.workers is None else args.workers


def cmd_census(args) -> int:
    out = []
    for n in args.n:
        _progress(args, f"census N={n}")
        out.append(census(n, with_characters=args.with_characters, workers=_workers(args)))
    dump = sio.dump_census_csv if args.format == "csv" else sio.dump_census_json
    _emit(args, dump(out))
    return EXIT_OK


def cmd_table(args) -> int:
    _progress(args, f"character table N={args.n}")
    _emit(args, sio.dump_table_csv(full_table(args.n, workers=_workers(args))))
    return EXIT_OK


def cmd_predict(args) -> int:
    _emit(args, sio.dump_report_json(report(args.n)))
    return EXIT_OK


def cmd_sample(args) -> int:
    seed = SeedSpec(args.seed, args.stream)
    total = args.samples

    def tick(done):
        _progress(args, f"{done}/{total} pairs")

    est = estimate_zero_types(
        args.n, total, seed, method=args.method, workers=_workers(args), progress=tick
    )
    _emit(args, sio.dump_estimates_json(est))
    return EXIT_OK


def cmd_verify(args) -> int:
    _progress(args, f"verify suite={args.suite} nmax={args.nmax}")
    rep = run_suite(args.suite, args.nmax, args.tmax)
    _emit(args, sio.dump_verify_json(rep))
    if not rep.passed:
        f = rep.failure
        print(f"verify {args.suite}: first failure at (N, t, l) = ({f['n']}, {f['t']}, {f['l']})", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="snzeros", description="Zeros of symmetric group characters.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, workers=True):
        sp.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        sp.add_argument("--progress", action="store_true", help="status lines on stderr")
        if workers:
            sp.add_argument("--workers", type=_positive, default=None,
                            help="worker processes (default $SNZEROS_WORKERS or 1)")

    sp = sub.add_parser("census", help="exact zero-type counts over all pairs")
    sp.add_argument("--n", type=_n_range, required=True, help="N or inclusive range A:B")
    sp.add_argument("--with-characters", action="store_true", help="also count true zeros")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    common(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("table", help="character table as CSV")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("csv",), default="csv")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("predict", help="asymptotic predictors at N")
    sp.add_argument("--n", type=int, required=True)
    common(sp, workers=False)
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("sample", help="Monte Carlo zero-type proportions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=_positive, default=20000, help="number of pairs")
    sp.add_argument("--seed", type=int, default=1, help="64-bit master seed")
    sp.add_argument("--stream", type=int, default=0, help="stream index")
    sp.add_argument("--method", choices=METHODS, default="deferred")
    common(sp)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("verify", help="exhaustive identity suites")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--nmax", type=int, default=24)
    sp.add_argument("--tmax", type=int, default=None)
    common(sp, workers=False)
    sp.set_defaults(func=cmd_verify)
    return p


def _error_object(kind: str, message: str) -> str:
    return json.dumps(
        {"schema_version": sio.SCHEMA_VERSION, "kind": "error", "error": kind, "message": message},
        sort_keys=True,
    ) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        sys.stdout.write(_error_object(exc.kind, str(exc)))
        return exc.code
    except SizeGuardError as exc:
        sys.stdout.write(_error_object("guard", str(exc)))
        return EXIT_GUARD
    except ValueError as exc:
        sys.stdout.write(_error_object("invalid", str(exc)))
        return EXIT_GUARD
    except OSError as exc:
        sys.stdout.write(_error_object("io", str(exc)))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Deterministic JSON/CSV encodings and their parsers.

Conventions shared by every format:

* a ``schema_version`` field (JSON) or corner cell (CSV);
* exact counts are decimal strings, since they outgrow 64 bits;
* partitions are comma-joined parts, ``"3,1"``; the empty partition is ``""``;
* floats are written with ``repr`` so they parse back bit-for-bit, and
  non-finite floats become the strings ``"inf"``, ``"-inf"``, ``"nan"``.

Every ``dump_*`` has a matching ``load_*`` that returns an equal object.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from decimal import Decimal, localcontext
from fractions import Fraction

from .asymptotics import AsymptoticReport
from .characters import CharTable
from .partitions import Partition
from .sampler import SampleEstimate, SeedSpec, TypeEstimates
from .verify import VerifyReport
from .zeros import CONDITION_NAMES, ZeroCensus

__all__ = [
    "SCHEMA_VERSION",
    "FormatError",
    "decimal_ratio",
    "dump_census_csv",
    "dump_census_json",
    "dump_estimates_json",
    "dump_report_json",
    "dump_table_csv",
    "dump_verify_json",
    "load_census_csv",
    "load_census_json",
    "load_estimates_json",
    "load_report_json",
    "load_table_csv",
    "load_verify_json",
    "parse_partition",
    "partition_label",
]

SCHEMA_VERSION = 1
RATIO_DIGITS = 20
CORNER = f"schema_version={SCHEMA_VERSION}"


class FormatError(ValueError):
    """Input does not match the expected schema."""


def partition_label(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(label: str) -> Partition:
    if label == "":
        return ()
    try:
        parts = tuple(int(x) for x in label.split(","))
    except ValueError as exc:
        raise FormatError(f"bad partition label {label!r}") from exc
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise FormatError(f"not a partition: {label!r}")
    return parts


def decimal_ratio(num: int, den: int, digits: int = RATIO_DIGITS) -> str:
    """``num/den`` rounded to ``digits`` significant digits, as a string."""
    if den == 0:
        raise ZeroDivisionError("ratio with zero denominator")
    f = Fraction(num, den)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(f.numerator) / Decimal(f.denominator))


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _loads(text: str, kind: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"expected schema_version {SCHEMA_VERSION}")
    if obj.get("kind") != kind:
        raise FormatError(f"expected kind {kind!r}, got {obj.get('kind')!r}")
    return obj


def _float_out(x: float):
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _float_in(x) -> float:
    return float(x)


def _int_in(x) -> int | None:
    return None if x is None else _big_int(x)


@contextmanager
def _no_digit_limit():
    # p(N) has ~35k digits at N = 1e9, past the interpreter's default cap
    old = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def _big_str(v: int) -> str:
    with _no_digit_limit():
        return str(v)


def _big_int(x) -> int:
    with _no_digit_limit():
        return int(x)


# --------------------------------------------------------------------------
# census

_COUNT_FIELDS = ("total_pairs", "z1", "z2", "z3", "z_poly", "z_total", "unexplained")
_CONDITION_KEYS = CONDITION_NAMES + ("union",)


def _census_obj(c: ZeroCensus) -> dict:
    obj = {"n": c.n, "convention": c.convention}
    for f in _COUNT_FIELDS:
        v = getattr(c, f)
        obj[f] = None if v is None else _big_str(v)
    for f in ("conditions", "conditions_exclusive"):
        d = getattr(c, f)
        obj[f] = None if d is None else {k: str(d[k]) for k in _CONDITION_KEYS}
    props = {}
    for f in ("z1", "z2", "z3", "z_poly", "z_total"):
        v = getattr(c, f)
        if v is not None:
            props[f] = decimal_ratio(v, c.total_pairs)
    obj["proportions"] = props
    return obj


def _census_from(obj: dict) -> ZeroCensus:
    try:
        kwargs = {f: _int_in(obj[f]) for f in _COUNT_FIELDS}
        for f in ("conditions", "conditions_exclusive"):
            d = obj[f]
            kwargs[f] = None if d is None else {k: int(d[k]) for k in _CONDITION_KEYS}
        return ZeroCensus(n=int(obj["n"]), convention=obj["convention"], **kwargs)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed census record: {exc}") from exc


def dump_census_json(censuses: list[ZeroCensus]) -> str:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "census",
        "census": [_census_obj(c) for c in censuses],
    })


def load_census_json(text: str) -> list[ZeroCensus]:
    return [_census_from(o) for o in _loads(text, "census")["census"]]


def _census_columns() -> list[str]:
    cols = ["n", *_COUNT_FIELDS]
    cols += [f"cond_{k}" for k in _CONDITION_KEYS]
    cols += [f"excl_{k}" for k in _CONDITION_KEYS]
    cols += ["convention"]
    return cols


def dump_census_csv(censuses: list[ZeroCensus]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([CORNER, *_census_columns()])
    for c in censuses:
        row = [SCHEMA_VERSION, c.n]
        row += ["" if getattr(c, f) is None else getattr(c, f) for f in _COUNT_FIELDS]
        for d in (c.conditions, c.conditions_exclusive):
            row += [""] * len(_CONDITION_KEYS) if d is None else [d[k] for k in _CONDITION_KEYS]
        row.append(c.convention or "")
        w.writerow(row)
    return buf.getvalue()


def load_census_csv(text: str) -> list[ZeroCensus]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != [CORNER, *_census_columns()]:
        raise FormatError("unexpected census CSV header")
    nk = len(_CONDITION_KEYS)
    out = []
    for row in rows[1:]:
        vals = row[1:]
        n, counts = vals[0], vals[1 : 1 + len(_COUNT_FIELDS)]
        rest = vals[1 + len(_COUNT_FIELDS) :]
        inc, exc, conv = rest[:nk], rest[nk : 2 * nk], rest[2 * nk]

        def cond(cells):
            return None if all(x == "" for x in cells) else dict(zip(_CONDITION_KEYS, map(int, cells)))

        kwargs = {f: (None if v == "" else int(v)) for f, v in zip(_COUNT_FIELDS, counts)}
        out.append(ZeroCensus(
            n=int(n), conditions=cond(inc), conditions_exclusive=cond(exc),
            convention=conv or None, **kwargs,
        ))
    return out


# --------------------------------------------------------------------------
# character tables


def dump_table_csv(table: CharTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([CORNER, *(partition_label(mu) for mu in table.order)])
    for lam, row in zip(table.order, table.values):
        w.writerow([partition_label(lam), *row])
    return buf.getvalue()


def load_table_csv(text: str) -> CharTable:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][0] != CORNER:
        raise FormatError("missing schema_version corner cell")
    order = tuple(parse_partition(x) for x in rows[0][1:])
    if [tuple(parse_partition(r[0])) for r in rows[1:]] != list(order):
        raise FormatError("row labels differ from column labels")
    values = tuple(tuple(int(x) for x in r[1:]) for r in rows[1:])
    n = sum(order[0]) if order else 0
    return CharTable(n=n, order=order, values=values)


# --------------------------------------------------------------------------
# asymptotic reports

_INT_REPORT_FIELDS = {"n", "p_exact"}


def dump_report_json(rep: AsymptoticReport) -> str:
    fields = {}
    for k, v in rep.to_dict().items():
        if k in _INT_REPORT_FIELDS:
            fields[k] = None if v is None else _big_str(v)
        elif isinstance(v, bool):
            fields[k] = v
        else:
            fields[k] = _float_out(v)
    return _dumps({"schema_version": SCHEMA_VERSION, "kind": "predict", "report": fields})


def load_report_json(text: str) -> AsymptoticReport:
    fields = _loads(text, "predict")["report"]
    out = {}
    for k, v in fields.items():
        if k in _INT_REPORT_FIELDS:
            out[k] = _int_in(v)
        elif isinstance(v, bool):
            out[k] = v
        else:
            out[k] = _float_in(v)
    try:
        return AsymptoticReport(**out)
    except TypeError as exc:
        raise FormatError(f"malformed report: {exc}") from exc


# --------------------------------------------------------------------------
# Monte Carlo estimates

_FLAGS = ("type_i", "type_ii", "type_iii", "poly")


def dump_estimates_json(est: TypeEstimates) -> str:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "sample",
        "n": est.n,
        "method": est.method,
        "seed": {"master_seed": str(est.seed.master_seed), "stream_index": str(est.seed.stream_index)},
        "estimates": {
            f: {
                "proportion": getattr(est, f).proportion,
                "stderr": getattr(est, f).stderr,
                "hits": getattr(est, f).hits,
                "n_samples": getattr(est, f).n_samples,
                "n_trials": getattr(est, f).n_trials,
            }
            for f in _FLAGS
        },
    })


def load_estimates_json(text: str) -> TypeEstimates:
    obj = _loads(text, "sample")
    try:
        seed = SeedSpec(int(obj["seed"]["master_seed"]), int(obj["seed"]["stream_index"]))
        ests = [SampleEstimate(**obj["estimates"][f]) for f in _FLAGS]
        return TypeEstimates(int(obj["n"]), seed, obj["method"], *ests)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed estimate file: {exc}") from exc


# --------------------------------------------------------------------------
# verification reports


def dump_verify_json(rep: VerifyReport) -> str:
    return _dumps({"schema_version": SCHEMA_VERSION, "kind": "verify", **rep.as_dict()})


def load_verify_json(text: str) -> VerifyReport:
    obj = _loads(text, "verify")
    obj.pop("schema_version")
    obj.pop("kind")
    try:
        return VerifyReport(**obj)
    except TypeError as exc:
        raise FormatError(f"malformed verify report: {exc}") from exc

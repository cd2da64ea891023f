"""JSON encodings.  Every number is written as a decimal string so that
64-bit JSON consumers cannot corrupt big integers.

series      {"order": N, "coeffs": ["1", ["-1", "2"], ...]}
factors     {"exponents": {"1": "-1", "2": "1/2"}, "max_index": N}
matrix      {"dim": d, "rows": [["p/q", ...], ...]}
orbits      {"orbits": [{"m": 2, "a": 1, "b": 0}, ...]}
            or {"linearizations": [{"period": k, "matrix": <matrix>}, ...]}
"""

from __future__ import annotations

from fractions import Fraction

from .series import TruncatedSeries, as_fraction
from .spectral import OrbitTable, RationalMatrix
from .transforms import OrbitCount
from .zeta import FactorExponents


class MalformedInput(ValueError):
    """JSON that parses but does not match the expected schema."""


def fraction_to_str(x: Fraction) -> str:
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_number(v) -> Fraction:
    """Accept "7", "-3/4", ["-3", "4"], and plain JSON integers."""
    try:
        if isinstance(v, list):
            if len(v) != 2:
                raise MalformedInput(f"rational pair must have two entries, got {v!r}")
            num, den = (int(str(p).strip()) for p in v)
            if den == 0:
                raise MalformedInput("zero denominator")
            return Fraction(num, den)
        if isinstance(v, bool) or isinstance(v, float):
            raise MalformedInput(f"{v!r} is not an exact number")
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v.strip())
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(f"not an exact rational: {v!r}") from None
    raise MalformedInput(f"not an exact rational: {v!r}")


def series_to_json(z: TruncatedSeries) -> dict:
    coeffs = [
        str(c.numerator) if c.denominator == 1 else [str(c.numerator), str(c.denominator)]
        for c in z.coeffs
    ]
    return {"order": z.order, "coeffs": coeffs}


def series_from_json(obj) -> TruncatedSeries:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise MalformedInput('series needs a "coeffs" list')
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise MalformedInput('"coeffs" must be a non-empty list')
    values = [parse_number(c) for c in coeffs]
    order = obj.get("order", len(values) - 1)
    order = _as_int(order, "order")
    if order != len(values) - 1:
        raise MalformedInput(f"order {order} does not match {len(values)} coefficients")
    return TruncatedSeries(tuple(values))


def factors_to_json(f: FactorExponents) -> dict:
    return {
        "exponents": {str(n): fraction_to_str(e) for n, e in f.exponents.items()},
        "max_index": f.max_index,
    }


def factors_from_json(obj) -> FactorExponents:
    if not isinstance(obj, dict) or not isinstance(obj.get("exponents"), dict):
        raise MalformedInput('factor exponents need an "exponents" object')
    exps = {_as_int(k, "factor index"): parse_number(v) for k, v in obj["exponents"].items()}
    max_index = _as_int(obj.get("max_index", max(exps, default=0)), "max_index")
    try:
        return FactorExponents(exps, max_index)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def sequence_to_json(values) -> list:
    return [fraction_to_str(v) for v in values]


def sequence_from_json(obj) -> list:
    if isinstance(obj, dict) and "values" in obj:
        obj = obj["values"]
    if not isinstance(obj, list):
        raise MalformedInput("sequence must be a JSON array")
    return [parse_number(v) for v in obj]


def matrix_to_json(A: RationalMatrix) -> dict:
    return {"dim": A.shape[0], "rows": [[fraction_to_str(x) for x in r] for r in A.rows]}


def matrix_from_json(obj) -> RationalMatrix:
    rows = obj.get("rows") if isinstance(obj, dict) else obj
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput('matrix needs "rows": a list of lists')
    try:
        A = RationalMatrix(tuple(tuple(parse_number(x) for x in r) for r in rows))
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(str(exc)) from None
    if isinstance(obj, dict) and "dim" in obj and _as_int(obj["dim"], "dim") != A.shape[0]:
        raise MalformedInput(f'"dim" {obj["dim"]} does not match {A.shape[0]} rows')
    return A


def orbits_to_json(table: OrbitTable) -> dict:
    return {"orbits": [{"m": o.m, "a": o.a, "b": o.b} for o in table.orbits]}


def orbits_from_json(obj) -> OrbitTable:
    if not isinstance(obj, dict):
        raise MalformedInput("orbit table must be a JSON object")
    try:
        if "orbits" in obj:
            recs = obj["orbits"]
            if not isinstance(recs, list):
                raise MalformedInput('"orbits" must be a list')
            counts = []
            for r in recs:
                if not isinstance(r, dict):
                    raise MalformedInput("each orbit record must be an object")
                counts.append(OrbitCount(
                    _as_int(r.get("m"), "m"), _as_int(r.get("a", 0), "a"), _as_int(r.get("b", 0), "b")
                ))
            return OrbitTable(tuple(counts))
        if "linearizations" in obj:
            items = []
            for r in obj["linearizations"]:
                if not isinstance(r, dict):
                    raise MalformedInput("each linearization must be an object")
                items.append((_as_int(r.get("period"), "period"), matrix_from_json(r.get("matrix"))))
            return OrbitTable.from_linearizations(items)
    except MalformedInput:
        raise
    except (TypeError, KeyError) as exc:
        raise MalformedInput(str(exc)) from None
    raise MalformedInput('orbit table needs "orbits" or "linearizations"')


def _as_int(v, what: str) -> int:
    if isinstance(v, bool):
        raise MalformedInput(f"{what} must be an integer")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip())
        except ValueError:
            pass
    raise MalformedInput(f"{what} must be an integer, got {v!r}")

"""Text and file input: polynomial expressions and JSON matrix files.

The expression grammar accepts sums of signed terms ``[coeff][*]var[^exp]``
where coeff is a rational p or p/q, var is one of t, z, h, and exponents are
integers (``t^-1``, ``z^4``), parenthesized integers, or half-integers
``t^(k/2)``. Whitespace is ignored everywhere. h-series text may end in the
``+ O(h^N)`` marker produced by the renderer.

Matrix files are JSON with rational entries written as strings ("-1",
"1/2") or plain integers; floating point numbers are rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError
from .hseries import HSeries
from .laurent import HalfLaurent, ZPoly
from .mmr import LmoWheelData
from .seifert import SeifertMatrix
from .surgery import FramedLinkMatrix
from .wheels import WheelSeries

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<num>\d+)(?:/(?P<den>\d+))?
        (?:\*(?=[tzh]))?
    )?
    (?:
        (?P<var>[tzh])
        (?:\^
            (?:
                (?P<iexp>-?\d+)
              | \(\s*(?P<pnum>-?\d+)\s*(?:/\s*(?P<pden>\d+)\s*)?\)
            )
        )?
    )?
    """,
    re.VERBOSE,
)

_O_TAIL = re.compile(r"\+O\(h\^(\d+)\)$")


def _scan_terms(text: str):
    """Yield (coeff, var, exponent_numerator, halved) per term.

    ``halved`` marks a parenthesized /2 exponent; errors carry the position
    in the whitespace-stripped text.
    """
    stripped = re.sub(r"\s+", "", text)
    tail = _O_TAIL.search(stripped)
    o_order = None
    if tail:
        o_order = int(tail.group(1)) - 1
        stripped = stripped[: tail.start()]
    if not stripped:
        raise ParseError("empty expression")
    pos = 0
    first = True
    terms = []
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError(f"syntax error at position {pos}: {stripped[pos:pos + 10]!r}")
        if m.group("num") is None and m.group("var") is None:
            raise ParseError(f"syntax error at position {pos}: expected a term")
        if not first and m.group("sign") is None:
            raise ParseError(f"syntax error at position {pos}: expected '+' or '-'")
        coeff = Fraction(int(m.group("num")), int(m.group("den") or 1)) if m.group("num") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        var = m.group("var")
        exp = 1
        halved = False
        if var is not None:
            if m.group("iexp") is not None:
                exp = int(m.group("iexp"))
            elif m.group("pnum") is not None:
                exp = int(m.group("pnum"))
                if m.group("pden") is not None:
                    if m.group("pden") != "2":
                        raise ParseError(
                            f"syntax error at position {pos}: only /2 exponents are supported"
                        )
                    halved = True
        terms.append((coeff, var, exp, halved, pos))
        pos = m.end()
        first = False
    return terms, o_order


def parse_polynomial(text: str) -> Union[HalfLaurent, ZPoly]:
    """Parse an expression in t or z; plain constants parse as Laurent
    polynomials. Mixed variables are rejected."""
    terms, o_order = _scan_terms(text)
    if o_order is not None:
        raise ParseError("O(h^N) marker is only meaningful for h-series")
    variables = {v for _, v, _, _, _ in terms if v is not None}
    if len(variables) > 1:
        raise ParseError(f"mixed variables {sorted(variables)} in one expression")
    if variables == {"z"}:
        return _to_z_poly(terms)
    if variables == {"h"}:
        raise ParseError("h-series text needs an explicit truncation order")
    return _to_half_laurent(terms)


def _to_half_laurent(terms) -> HalfLaurent:
    coeffs: dict[int, Fraction] = {}
    for coeff, var, exp, halved, pos in terms:
        if var is None:
            k = 0
        elif var == "t":
            k = exp if halved else 2 * exp
        else:
            raise ParseError(f"syntax error at position {pos}: expected variable t")
        coeffs[k] = coeffs.get(k, Fraction(0)) + coeff
    return HalfLaurent(coeffs)


def _to_z_poly(terms) -> ZPoly:
    powers: dict[int, Fraction] = {}
    for coeff, var, exp, halved, pos in terms:
        if halved:
            raise ParseError(f"syntax error at position {pos}: z takes integer exponents")
        e = exp if var == "z" else 0
        if e < 0:
            raise ParseError(f"syntax error at position {pos}: negative z exponent")
        powers[e] = powers.get(e, Fraction(0)) + coeff
    powers = {e: c for e, c in powers.items() if c != 0}
    if not powers:
        return ZPoly(0, ())
    s = min(powers)
    if any((e - s) % 2 != 0 for e in powers):
        raise ParseError("z exponents must share one parity")
    kmax = (max(powers) - s) // 2
    return ZPoly(s, [powers.get(s + 2 * k, Fraction(0)) for k in range(kmax + 1)])


def parse_half_laurent(text: str) -> HalfLaurent:
    result = parse_polynomial(text)
    if not isinstance(result, HalfLaurent):
        raise ParseError("expected a polynomial in t")
    return result


def parse_z_poly(text: str) -> ZPoly:
    result = parse_polynomial(text)
    if isinstance(result, HalfLaurent):
        # constants double as z-polynomials; anything else is a t-expression
        if result.is_zero:
            return ZPoly(0, ())
        if result.support == (0,):
            return ZPoly(0, (result.coeff(0),))
        raise ParseError("expected a polynomial in z")
    return result


def parse_h_series(text: str, order: int) -> HSeries:
    """Parse h-polynomial text into a series at the given order; a trailing
    O(h^N) marker must agree with that order."""
    terms, o_order = _scan_terms(text)
    if o_order is not None and o_order != order:
        raise ParseError(f"O(h^{o_order + 1}) marker disagrees with order {order}")
    cs = [Fraction(0)] * (order + 1)
    for coeff, var, exp, halved, pos in terms:
        if var not in (None, "h") or halved:
            raise ParseError(f"syntax error at position {pos}: expected variable h")
        e = exp if var == "h" else 0
        if e < 0:
            raise ParseError(f"syntax error at position {pos}: negative h exponent")
        if e <= order:
            cs[e] += coeff
    return HSeries(cs, order)


def _rational(value, context: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{context}: expected an exact rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{context}: cannot parse rational {value!r}") from None
    raise ParseError(f"{context}: expected an exact rational, got {value!r}")


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None


def _matrix_rows(data, path: str):
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise ParseError(f"{path}: \"matrix\" must be an array of arrays")
    return [[_rational(v, f"{path} matrix entry") for v in row] for row in data]


def read_seifert_file(path: str) -> tuple[SeifertMatrix, int, str | None]:
    """Read a Seifert matrix JSON file: {"matrix": [...], "components"?,
    "name"?}. Returns (matrix, components, name)."""
    data = _load_json(path)
    if not isinstance(data, dict) or "matrix" not in data:
        raise ParseError(f"{path}: expected an object with a \"matrix\" key")
    rows = _matrix_rows(data["matrix"], path)
    components = data.get("components", 1)
    if not isinstance(components, int) or isinstance(components, bool) or components < 1:
        raise ParseError(f"{path}: \"components\" must be a positive integer")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"{path}: \"name\" must be a string")
    try:
        matrix = SeifertMatrix(rows)
    except DomainError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return matrix, components, name


def read_linking_file(path: str) -> FramedLinkMatrix:
    """Read a linking matrix JSON file: {"labels": [...], "surgery": [...],
    "matrix": [...]} with the matrix indexed by the labels order."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    for key in ("labels", "surgery", "matrix"):
        if key not in data:
            raise ParseError(f"{path}: missing \"{key}\" key")
    labels = data["labels"]
    surgery = data["surgery"]
    if not isinstance(labels, list) or any(not isinstance(x, str) for x in labels):
        raise ParseError(f"{path}: \"labels\" must be an array of strings")
    if not isinstance(surgery, list) or any(not isinstance(x, str) for x in surgery):
        raise ParseError(f"{path}: \"surgery\" must be an array of strings")
    rows = _matrix_rows(data["matrix"], path)
    try:
        return FramedLinkMatrix(labels, surgery, rows)
    except DomainError as exc:
        raise ParseError(f"{path}: {exc}") from None


def lmo_data_to_json(data: LmoWheelData) -> str:
    """Serialize wheel data deterministically (indices ascending)."""
    payload = {
        "order": data.order,
        "h1_order": data.h1_order,
        "knot_wheels": {str(k): str(v) for k, v in data.knot_wheels.coefficients.items()},
        "nu_wheels": {str(k): str(v) for k, v in data.nu_wheels.coefficients.items()},
    }
    return json.dumps(payload, indent=2)


def _wheels_from_json(obj, context: str) -> WheelSeries:
    if not isinstance(obj, dict):
        raise ParseError(f"{context}: expected an object of index -> coefficient")
    coeffs = {}
    for k, v in obj.items():
        try:
            idx = int(k)
        except ValueError:
            raise ParseError(f"{context}: bad wheel index {k!r}") from None
        coeffs[idx] = _rational(v, context)
    try:
        return WheelSeries(coeffs)
    except DomainError as exc:
        raise ParseError(f"{context}: {exc}") from None


def read_lmo_file(path: str) -> LmoWheelData:
    """Read wheel data JSON as written by ``lmo_data_to_json``."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    for key in ("order", "h1_order", "knot_wheels", "nu_wheels"):
        if key not in data:
            raise ParseError(f"{path}: missing \"{key}\" key")
    order = data["order"]
    h1 = data["h1_order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ParseError(f"{path}: \"order\" must be a non-negative integer")
    if not isinstance(h1, int) or isinstance(h1, bool) or h1 < 1:
        raise ParseError(f"{path}: \"h1_order\" must be a positive integer")
    knot = _wheels_from_json(data["knot_wheels"], f"{path} knot_wheels")
    nu = _wheels_from_json(data["nu_wheels"], f"{path} nu_wheels")
    try:
        return LmoWheelData(knot, nu, h1, order)
    except DomainError as exc:
        raise ParseError(f"{path}: {exc}") from None

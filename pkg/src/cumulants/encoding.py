"""Wire encodings for scalars and sequences.

JSON form: a rational is the string "p/q" ("p" when q = 1); a polynomial is
``{"symbol": "lambda", "coeffs": ["0", "1", "1"]}`` with coefficients listed
by ascending degree as rational strings.  The same encoding is used by every
service endpoint and CLI command.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import Polynomial, Scalar, _demote, rational_str

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class ScalarParseError(ValueError):
    """Malformed scalar or sequence encoding (as opposed to a semantic error)."""


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ScalarParseError(f"not a rational: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_scalar(obj) -> Scalar:
    """Decode the JSON form of a scalar (also accepts bare ints)."""
    if isinstance(obj, bool):
        raise ScalarParseError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict):
        extra = set(obj) - {"symbol", "coeffs"}
        if extra or "symbol" not in obj or "coeffs" not in obj:
            raise ScalarParseError(f"bad polynomial object keys: {sorted(obj)}")
        symbol = obj["symbol"]
        coeffs = obj["coeffs"]
        if not isinstance(symbol, str) or not isinstance(coeffs, list):
            raise ScalarParseError("polynomial needs a symbol string and coeffs list")
        parsed = []
        for c in coeffs:
            if isinstance(c, str):
                parsed.append(parse_rational(c))
            elif isinstance(c, int) and not isinstance(c, bool):
                parsed.append(Fraction(c))
            else:
                raise ScalarParseError(f"bad polynomial coefficient: {c!r}")
        try:
            return _demote(symbol, parsed)
        except ValueError as exc:
            raise ScalarParseError(str(exc)) from exc
    raise ScalarParseError(f"not a scalar encoding: {obj!r}")


def encode_scalar(x: Scalar):
    """Canonical JSON form: string for rationals, object for polynomials."""
    if isinstance(x, Polynomial):
        return {"symbol": x.symbol, "coeffs": [rational_str(c) for c in x.coeffs]}
    if isinstance(x, (int, Fraction)):
        return rational_str(Fraction(x))
    raise TypeError(f"not a scalar: {x!r}")


def render_scalar(x: Scalar) -> str:
    """Canonical single-token text form (used by the CLI's text output)."""
    if isinstance(x, Polynomial):
        return str(x)
    return rational_str(Fraction(x))


def parse_sequence_text(text: str):
    """Parse a comma-separated list of rationals, e.g. "0,1/2,3"."""
    items = [t for t in text.split(",")]
    if not items or any(not t.strip() for t in items):
        raise ScalarParseError(f"malformed sequence: {text!r}")
    return tuple(parse_rational(t) for t in items)

"""Text rendering and parsing of algebra values.

The text grammar is the one used by the CLI and the API:

* quaternions / octonions: "1 + 2 e1 - 1/2 e3" (signs required between terms,
  whitespace ignored, "e1" and "-e1" for unit coefficients, "0" for zero);
* barred quaternions: "q0 + (q1)|e1 + (q2)|e2 + (q3)|e3", a single-term
  coefficient may drop its parentheses ("e3|e2 - e2|e3");
* left-barred octonions: same as barred quaternions with ")" marking the
  left grouping, e.g. "e2 + 1/2 e3)e1".
"""

import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from hypalg.core.errors import ParseError
from hypalg.services.algebra.complex_value import ComplexValue
from hypalg.services.algebra.octonion import Octonion
from hypalg.services.algebra.quaternion import Quaternion
from hypalg.services.algebra.scalars import format_scalar, to_scalar
from hypalg.services.operators.barred_octonion import LeftBarredOctonion
from hypalg.services.operators.barred_quaternion import BarredQuaternion

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(?:e(\d+))?")
_SLOT = re.compile(r"^e(\d+)$")


def _signed_terms(coefficients: Sequence[Fraction], unit_name) -> List[Tuple[int, str]]:
    terms = []
    for index, value in enumerate(coefficients):
        if not value:
            continue
        sign = -1 if value < 0 else 1
        magnitude = abs(value)
        if index == 0:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = unit_name(index)
        else:
            body = f"{format_scalar(magnitude)} {unit_name(index)}"
        terms.append((sign, body))
    return terms


def _join_terms(terms: Iterable[Tuple[int, str]]) -> str:
    text = ""
    for sign, body in terms:
        if not text:
            text = f"-{body}" if sign < 0 else body
        else:
            text += f" - {body}" if sign < 0 else f" + {body}"
    return text or "0"


def _unit(index: int) -> str:
    return f"e{index}"


def format_linear(coefficients: Sequence[Fraction]) -> str:
    """Render a coefficient vector over 1, e1, e2, ..."""
    return _join_terms(_signed_terms(coefficients, _unit))


def format_quaternion(q: Quaternion) -> str:
    return format_linear(q.coefficients)


def format_octonion(o: Octonion) -> str:
    return format_linear(o.c)


def format_complex(value: ComplexValue) -> str:
    return format_linear((value.re, value.im))


def _coefficient_term(coefficients: Sequence[Fraction], suffix: str) -> Tuple[int, str]:
    terms = _signed_terms(coefficients, _unit)
    if len(terms) == 1:
        sign, body = terms[0]
        return sign, f"{body}{suffix}"
    return 1, f"({_join_terms(terms)}){suffix}"


def format_slots(slots: Sequence[Sequence[Fraction]], marker: str) -> str:
    """Render a slot decomposition such as a barred operator.

    Args:
        slots: coefficient vectors; slot 0 is the plain left factor, slot m
            carries the suffix ``marker + "e" + m``
        marker: "|" for barred quaternions, ")" for left-barred octonions
    """
    terms: List[Tuple[int, str]] = []
    for m, coefficients in enumerate(slots):
        if not any(coefficients):
            continue
        if m == 0:
            inner = _signed_terms(coefficients, _unit)
            if len(inner) == 1:
                terms.append(inner[0])
            else:
                terms.append((1, f"({_join_terms(inner)})"))
        else:
            terms.append(_coefficient_term(coefficients, f"{marker}e{m}"))
    return _join_terms(terms)


def parse_linear(text: str, dimension: int) -> List[Fraction]:
    """Parse "a + b e1 + ..." into a coefficient list of length ``dimension``.

    Raises:
        ParseError: on malformed text or a unit index out of range
    """
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise ParseError("Empty algebra expression")
    coefficients = [Fraction(0)] * dimension
    position = 0
    first = True
    while position < len(compact):
        match = _TERM.match(compact, position)
        sign, number, unit = match.groups()
        if match.end() == position or (number is None and unit is None):
            raise ParseError(f"Cannot parse {text!r} at position {position}")
        if not first and not sign:
            raise ParseError(f"Missing sign between terms in {text!r}")
        value = to_scalar(number) if number is not None else Fraction(1)
        if sign == "-":
            value = -value
        index = int(unit) if unit is not None else 0
        if index >= dimension:
            raise ParseError(f"Unit e{index} out of range in {text!r}")
        coefficients[index] += value
        position = match.end()
        first = False
    return coefficients


def parse_quaternion(text: str) -> Quaternion:
    """Parse quaternion text such as "1 + 2 e1 - 1/2 e3"."""
    return Quaternion.from_coefficients(parse_linear(text, 4))


def parse_octonion(text: str) -> Octonion:
    """Parse octonion text such as "e5 - 3 e7"."""
    return Octonion(tuple(parse_linear(text, 8)))


def _split_top_level(text: str) -> List[str]:
    """Split on + and - that sit outside parentheses, keeping the signs."""
    terms: List[str] = []
    depth = 0
    current = ""
    for char in text:
        # a ")" at depth 0 is the left-barred grouping marker, not a bracket
        if char == "(":
            depth += 1
        elif char == ")" and depth > 0:
            depth -= 1
        if char in "+-" and depth == 0 and current and current[-1] not in "|(":
            terms.append(current)
            current = char
            continue
        current += char
    if depth != 0:
        raise ParseError(f"Unbalanced parentheses in {text!r}")
    if current:
        terms.append(current)
    return terms


def parse_slots(text: str, dimension: int, marker: str, max_slot: int) -> List[List[Fraction]]:
    """Parse a slot decomposition written with ``format_slots``' grammar.

    Returns:
        list: ``max_slot + 1`` coefficient vectors of length ``dimension``
    """
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise ParseError("Empty operator expression")
    slots = [[Fraction(0)] * dimension for _ in range(max_slot + 1)]
    for term in _split_top_level(compact):
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        slot = 0
        split_at = _find_slot_marker(body, marker)
        if split_at is not None:
            slot_match = _SLOT.match(body[split_at + 1:])
            if not slot_match:
                raise ParseError(f"Bad slot in term {term!r}")
            slot = int(slot_match.group(1))
            if not 1 <= slot <= max_slot:
                raise ParseError(f"Slot e{slot} out of range in {term!r}")
            body = body[:split_at]
        coefficients = _parse_factor(body, dimension)
        for k in range(dimension):
            slots[slot][k] += sign * coefficients[k]
    return slots


def parse_barred_quaternion(text: str) -> BarredQuaternion:
    """Parse "e3|e2 - e2|e3" or "(1 + e1) + 2 e2|e1"."""
    return BarredQuaternion.from_slots(
        [Quaternion.from_coefficients(c) for c in parse_slots(text, 4, "|", 3)]
    )


def parse_left_barred_octonion(text: str) -> LeftBarredOctonion:
    """Parse left-barred octonion text such as "e2 + 1/2 e3)e1"."""
    slots = [Octonion(tuple(c)) for c in parse_slots(text, 8, ")", 7)]
    return LeftBarredOctonion(slots[0], tuple(slots[1:]))


def _find_slot_marker(body: str, marker: str):
    depth = 0
    for index, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")" and depth > 0:
            depth -= 1
        elif char == marker and depth == 0:
            return index
    return None


def _parse_factor(body: str, dimension: int) -> List[Fraction]:
    if not body:
        raise ParseError("Missing coefficient")
    paren = body.find("(")
    if paren == -1:
        return parse_linear(body, dimension)
    if not body.endswith(")"):
        raise ParseError(f"Bad parenthesized coefficient {body!r}")
    scale = to_scalar(body[:paren].rstrip("*")) if paren > 0 else Fraction(1)
    inner = parse_linear(body[paren + 1:-1], dimension)
    return [scale * value for value in inner]


def format_matrix_rows(rows: Sequence[Sequence[str]]) -> str:
    """Align a matrix of already-rendered cells into text rows."""
    if not rows:
        return ""
    width = max(len(cell) for row in rows for cell in row)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in rows)

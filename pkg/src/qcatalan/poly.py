"""Dense polynomials in the formal variable q with exact integer coefficients.

A polynomial is stored as a tuple of Python ints, index d holding the
coefficient of q^d.  The trailing coefficient is always nonzero; the zero
polynomial is the empty tuple.  Python's unbounded integers make every
operation exact, which is what the coefficient-sign verdicts elsewhere in
this package rely on.

Text format: terms ``c``, ``q``, ``c*q^d``, ``q^d`` joined by `` + `` and
`` - ``, ascending degree.  JSON format: a list of decimal coefficient
strings, index = degree (strings, so arbitrarily large values survive any
JSON reader).
"""

from __future__ import annotations

import operator
import re
from typing import Iterable, Iterator, Optional


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Poly:
    """Immutable dense polynomial over the integers in q."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [operator.index(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def q_power(cls, m: int) -> "Poly":
        """The monomial q^m."""
        if m < 0:
            raise ValueError(f"exponent must be nonnegative, got {m}")
        return cls((0,) * m + (1,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> "int | float":
        """Degree of the polynomial; minus infinity for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __getitem__(self, degree: int) -> int:
        """Coefficient of q^degree (0 beyond the stored length)."""
        if degree < 0:
            raise IndexError("negative degree")
        return self._coeffs[degree] if degree < len(self._coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return self.to_text()

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-x for x in self._coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] = x
        for i, x in enumerate(b):
            out[i] -= x
        return Poly(out)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        if len(b) > len(a):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(b):
            if x:
                for j, y in enumerate(a):
                    out[i + j] += x * y
        return Poly(out)

    def shift(self, m: int) -> "Poly":
        """Multiply by q^m (index translation; m must be nonnegative)."""
        if m < 0:
            raise ValueError(f"shift must be nonnegative, got {m}")
        if not self._coeffs:
            return self
        return Poly((0,) * m + self._coeffs)

    def is_nonneg(self) -> bool:
        """True iff every coefficient is >= 0."""
        return all(c >= 0 for c in self._coeffs)

    def first_negative(self) -> Optional[tuple[int, int]]:
        """Lowest-degree negative coefficient as (degree, coefficient), or None."""
        for d, c in enumerate(self._coeffs):
            if c < 0:
                return (d, c)
        return None

    def eval_one(self) -> int:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self._coeffs)

    def to_text(self) -> str:
        """Render in the ascending-degree term format."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            body = _term_text(abs(c), d)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json_coeffs(self) -> list[str]:
        """Coefficients as decimal strings, index = degree."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json_coeffs(cls, strings: Iterable[str]) -> "Poly":
        return cls(int(s) for s in strings)


def _term_text(c: int, d: int) -> str:
    if d == 0:
        return str(c)
    q = "q" if d == 1 else f"q^{d}"
    return q if c == 1 else f"{c}*{q}"


_INT = re.compile(r"\d+")


def parse(text: str) -> Poly:
    """Parse the term format emitted by :meth:`Poly.to_text`.

    Accepts flexible whitespace and repeated degrees (coefficients are
    accumulated).  Raises :class:`ParseError` with a position on bad input.
    """
    coeffs: dict[int, int] = {}
    pos = _skip_ws(text, 0)
    if pos == len(text):
        raise ParseError("empty polynomial text", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos = _skip_ws(text, pos + 1)
    while True:
        coeff, degree, pos = _parse_term(text, pos)
        coeffs[degree] = coeffs.get(degree, 0) + sign * coeff
        pos = _skip_ws(text, pos)
        if pos == len(text):
            break
        if text[pos] == "+":
            sign = 1
        elif text[pos] == "-":
            sign = -1
        else:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        pos = _skip_ws(text, pos + 1)
        if pos == len(text):
            raise ParseError("dangling sign", pos)
    if not coeffs:
        return Poly()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return Poly(out)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_term(text: str, pos: int) -> tuple[int, int, int]:
    # term := INT | INT '*' q-part | q-part, with q-part := 'q' ['^' INT]
    m = _INT.match(text, pos)
    if m:
        coeff = int(m.group())
        pos = m.end()
        probe = _skip_ws(text, pos)
        if probe < len(text) and text[probe] == "*":
            pos = _skip_ws(text, probe + 1)
            degree, pos = _parse_q(text, pos)
            return coeff, degree, pos
        return coeff, 0, pos
    if pos < len(text) and text[pos] == "q":
        degree, pos = _parse_q(text, pos)
        return 1, degree, pos
    found = text[pos] if pos < len(text) else "end of input"
    raise ParseError(f"expected a term, found {found!r}", pos)


def _parse_q(text: str, pos: int) -> tuple[int, int]:
    if pos >= len(text) or text[pos] != "q":
        found = text[pos] if pos < len(text) else "end of input"
        raise ParseError(f"expected 'q', found {found!r}", pos)
    pos += 1
    if pos < len(text) and text[pos] == "^":
        m = _INT.match(text, pos + 1)
        if not m:
            raise ParseError("expected an exponent after '^'", pos + 1)
        return int(m.group()), m.end()
    return 1, pos

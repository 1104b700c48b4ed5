"""Exact polynomials in ``q`` with nonnegative integer coefficients.

Coefficients are Python integers, so arithmetic never wraps.  Dense storage:
``coeffs[r]`` is the coefficient of ``q**r``, trailing zeros trimmed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if c < 0:
                raise ValueError(f"negative coefficient {c}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        """Sum of ``q**e`` over the given exponents, with multiplicity."""
        counts: dict[int, int] = {}
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            counts[e] = counts.get(e, 0) + 1
        if not counts:
            return cls()
        dense = [0] * (max(counts) + 1)
        for e, c in counts.items():
            dense[e] = c
        return cls(tuple(dense))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if self.is_zero:
            raise ValueError("zero polynomial has no valuation")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def coeff(self, r: int) -> int:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else 0

    def __add__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(tuple(out))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if self.is_zero or other.is_zero:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, k: int) -> QPolynomial:
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def reverse(self) -> QPolynomial:
        """``q**deg * p(1/q)``."""
        if self.is_zero:
            raise ValueError("cannot reverse the zero polynomial")
        return QPolynomial(self.coeffs[::-1])

    def is_palindromic(self) -> bool:
        if self.is_zero:
            raise ValueError("palindromicity undefined for the zero polynomial")
        return self.coeffs == self.coeffs[::-1]

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    @classmethod
    def from_json(cls, text: str) -> QPolynomial:
        return cls(tuple(json.loads(text)))

    def __str__(self) -> str:
        terms = []
        for r, c in enumerate(self.coeffs):
            if not c:
                continue
            if r == 0:
                terms.append(str(c))
                continue
            var = "q" if r == 1 else f"q^{r}"
            terms.append(var if c == 1 else f"{c}{var}")
        return " + ".join(terms) if terms else "0"

    @classmethod
    def parse(cls, text: str) -> QPolynomial:
        """Inverse of ``str``: accepts ``"1 + 2q + q^3"`` (``2*q`` also fine)."""
        text = text.strip()
        if text == "0":
            return cls()
        term = re.compile(r"^(\d*)\*?(q(?:\^(\d+))?)?$")
        dense: dict[int, int] = {}
        for tok in text.split("+"):
            tok = tok.replace(" ", "")
            m = term.match(tok)
            if not tok or not m or (not m.group(1) and not m.group(2)):
                raise ValueError(f"bad term {tok!r} in {text!r}")
            c = int(m.group(1)) if m.group(1) else 1
            r = 0 if not m.group(2) else int(m.group(3) or 1)
            dense[r] = dense.get(r, 0) + c
        return cls(tuple(dense.get(r, 0) for r in range(max(dense) + 1)))


ONE = QPolynomial((1,))


def q_int(k: int) -> QPolynomial:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    if k < 1:
        raise ValueError(f"q-integer needs k >= 1, got {k}")
    return QPolynomial((1,) * k)


def q_double_factorial(n: int) -> QPolynomial:
    """``[2n-1]_q!! = [1]_q [3]_q ... [2n-1]_q``; degree ``n^2 - n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(2 * i - 1)
    return out


def shift(p: QPolynomial, k: int) -> QPolynomial:
    return p.shift(k)


def reverse(p: QPolynomial) -> QPolynomial:
    return p.reverse()


def is_palindromic(p: QPolynomial) -> bool:
    return p.is_palindromic()

"""Truncated power series with exact rational coefficients.

A series carries a counting convention tag, "egf" or "ogf".  The tag never
changes the arithmetic -- sums and Cauchy products act on raw coefficients --
but mixing tags in one expression is almost always a bug, so it raises.
Counts are read off per convention: n! * [x^n] for an egf, [x^n] for an ogf.

The named atoms cover the generating functions this package needs:

    E            exp(x)                 (labeled sets)
    X            x                      (a single element)
    E_GE1        exp(x) - 1             (nonempty sets)
    E_GE2        exp(x) - 1 - x         (sets of size >= 2)
    GEOMETRIC    1/(1-x)                (unlabeled sets / sequences)
    A_FACTOR     (2 - x - 2 exp(-x)) / (1 - x)
    U_FACTOR_LABELED    ((2-x) exp(x) - 2) / ((1-x) exp(x))
    U_FACTOR_UNLABELED  x / (1-x)

A_FACTOR and U_FACTOR_LABELED are two routes to the same function, the
multiplier that turns the split-graph series into the unbalanced-split-graph
series; computing both and comparing is one of the package's sanity checks.

``derive_labeled_chain`` builds every labeled class series from the bicolored
closed form alone; ``derive_unlabeled_chain`` builds the unlabeled ones from
a supplied base of unlabeled split counts.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import ConventionMismatch, InsufficientBase, NonIntegralResult, NotAUnit

EGF = "egf"
OGF = "ogf"


def decimal(value: int) -> str:
    """Decimal string of an arbitrarily large integer.

    Lifts the interpreter's int-to-str digit cap on demand; chain
    coefficients reach tens of thousands of digits.
    """
    try:
        return str(value)
    except ValueError:
        sys.set_int_max_str_digits(0)
        return str(value)


def parse_decimal(text: str) -> int:
    """Inverse of ``decimal``: parse integers longer than the interpreter cap."""
    try:
        return int(text)
    except ValueError:
        sys.set_int_max_str_digits(0)
        return int(text)


class SeriesName(enum.Enum):
    E = "E"
    X = "X"
    E_GE1 = "E>=1"
    E_GE2 = "E>=2"
    GEOMETRIC = "1/(1-x)"
    A_FACTOR = "A"
    U_FACTOR_LABELED = "U-factor-labeled"
    U_FACTOR_UNLABELED = "U-factor-unlabeled"


@dataclass(frozen=True)
class RationalSeries:
    """Coefficients 0..order of a truncated power series, all exact rationals."""

    coeffs: tuple[Fraction, ...]
    convention: str

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i]

    def counts(self) -> list[int]:
        """Structure counts per size; raises if any is not a whole number."""
        out = []
        for i, c in enumerate(self.coeffs):
            value = c * factorial(i) if self.convention == EGF else c
            if value.denominator != 1:
                raise NonIntegralResult(f"coefficient {i} gives non-integer count {value}")
            out.append(int(value))
        return out

    def truncated(self, order: int) -> "RationalSeries":
        return RationalSeries(self.coeffs[: order + 1], self.convention)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        a, b = _aligned(self, other)
        return RationalSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.convention)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        a, b = _aligned(self, other)
        return RationalSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.convention)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        a, b = _aligned(self, other)
        n = a.order
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j in range(n + 1 - i):
                y = b.coeffs[j]
                if y:
                    out[i + j] += x * y
        return RationalSeries(tuple(out), a.convention)

    def __truediv__(self, other: "RationalSeries") -> "RationalSeries":
        a, b = _aligned(self, other)
        if b.coeffs[0] == 0:
            raise NotAUnit("division requires a nonzero constant term")
        n = a.order
        inv_b0 = 1 / b.coeffs[0]
        out: list[Fraction] = []
        for i in range(n + 1):
            acc = a.coeffs[i]
            for j in range(1, i + 1):
                if b.coeffs[j]:
                    acc -= b.coeffs[j] * out[i - j]
            out.append(acc * inv_b0)
        return RationalSeries(tuple(out), a.convention)

    def scaled(self, q) -> "RationalSeries":
        q = Fraction(q)
        return RationalSeries(tuple(q * c for c in self.coeffs), self.convention)

    def counts_decimal(self) -> list[str]:
        """Counts as decimal strings (they exceed 64-bit range quickly)."""
        return [decimal(v) for v in self.counts()]

    def to_json(self) -> dict:
        return {
            "convention": self.convention,
            "coeffs": [f"{decimal(c.numerator)}/{decimal(c.denominator)}" for c in self.coeffs],
        }


def _aligned(a: RationalSeries, b: RationalSeries) -> tuple[RationalSeries, RationalSeries]:
    if a.convention != b.convention:
        raise ConventionMismatch(f"{a.convention} vs {b.convention}")
    order = min(a.order, b.order)
    return a.truncated(order), b.truncated(order)


def from_fractions(values: Sequence, convention: str) -> RationalSeries:
    return RationalSeries(tuple(Fraction(v) for v in values), convention)


def constant(value, convention: str, order: int) -> RationalSeries:
    return from_fractions([value] + [0] * order, convention)


def monomial(convention: str, order: int) -> RationalSeries:
    """The series x."""
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return RationalSeries(tuple(coeffs), convention)


def convert(s: RationalSeries, to_convention: str) -> RationalSeries:
    """Reinterpret the same counts under the other convention."""
    if s.convention == to_convention:
        return s
    if to_convention == OGF:  # egf -> ogf: multiply by n!
        coeffs = tuple(c * factorial(i) for i, c in enumerate(s.coeffs))
    else:
        coeffs = tuple(c / factorial(i) for i, c in enumerate(s.coeffs))
    return RationalSeries(coeffs, to_convention)


def named(name: SeriesName, convention: str, order: int) -> RationalSeries:
    """The named atomic series, truncated at the given order."""
    if name is SeriesName.E:
        return from_fractions([Fraction(1, factorial(i)) for i in range(order + 1)], convention)
    if name is SeriesName.X:
        return monomial(convention, order)
    if name is SeriesName.E_GE1:
        return named(SeriesName.E, convention, order) - constant(1, convention, order)
    if name is SeriesName.E_GE2:
        return named(SeriesName.E_GE1, convention, order) - monomial(convention, order)
    if name is SeriesName.GEOMETRIC:
        return from_fractions([1] * (order + 1), convention)
    if name is SeriesName.A_FACTOR:
        # 2 - x - 2e^{-x}, then the 1/(1-x) partial-sum factor
        numer = [Fraction(0), Fraction(1)] + [
            Fraction(-2 * (-1) ** i, factorial(i)) for i in range(2, order + 1)
        ]
        numer = from_fractions(numer[: order + 1], convention)
        return numer / (constant(1, convention, order) - monomial(convention, order))
    if name is SeriesName.U_FACTOR_LABELED:
        e = named(SeriesName.E, convention, order)
        one = constant(1, convention, order)
        two_minus_x = constant(2, convention, order) - monomial(convention, order)
        return (two_minus_x * e - constant(2, convention, order)) / ((one - monomial(convention, order)) * e)
    if name is SeriesName.U_FACTOR_UNLABELED:
        return from_fractions([0] + [1] * order, convention)
    raise ValueError(f"unknown series name {name}")


# ---------------------------------------------------------------------------
# Derivation chains
# ---------------------------------------------------------------------------

MAX_CHAIN_ORDER = 400


def _bicolored_count(n: int) -> int:
    # sum over the green subset size; independent evaluation also lives in
    # counting.bicolored_labeled, and the tests compare the two
    return sum(comb(n, k) << (k * (n - k)) for k in range(n + 1))


def derive_labeled_chain(order: int) -> dict[str, RationalSeries]:
    """All labeled class series, derived from the bicolored closed form.

    Returns egf-convention series keyed "BC", "S", "U", "B", "cS", "UK",
    "Uamb":

        S    = (1 - x) BC          U  = A * S          B = S - U
        cS   = BC / E              UK = E_{>=2} * cS   Uamb = x * B

    Every derived coefficient is checked to give a non-negative integer
    count.
    """
    if order > MAX_CHAIN_ORDER:
        raise ValueError(f"chain order capped at {MAX_CHAIN_ORDER}")
    bc = from_fractions(
        [Fraction(_bicolored_count(i), factorial(i)) for i in range(order + 1)], EGF
    )
    one = constant(1, EGF, order)
    x = monomial(EGF, order)
    s = (one - x) * bc
    u = named(SeriesName.A_FACTOR, EGF, order) * s
    b = s - u
    cs = bc / named(SeriesName.E, EGF, order)
    uk = named(SeriesName.E_GE2, EGF, order) * cs
    uamb = x * b
    chain = {"BC": bc, "S": s, "U": u, "B": b, "cS": cs, "UK": uk, "Uamb": uamb}
    for key, ser in chain.items():
        for i, count in enumerate(ser.counts()):  # raises NonIntegralResult if fractional
            if count < 0:
                raise NonIntegralResult(f"{key} count at {i} is negative: {count}")
    return chain


def derive_unlabeled_chain(order: int, base: Sequence[int]) -> dict[str, RationalSeries]:
    """Unlabeled class series from a base of unlabeled split counts s~_0..s~_m.

    Returns ogf-convention series keyed "S", "U", "B", "BC":

        U = x/(1-x) * S        BC = 1/(1-x) * S        B = S - U
    """
    if order >= len(base):
        raise InsufficientBase(f"need {order + 1} base terms, got {len(base)}")
    s = from_fractions(list(base[: order + 1]), OGF)
    u = named(SeriesName.U_FACTOR_UNLABELED, OGF, order) * s
    bc = named(SeriesName.GEOMETRIC, OGF, order) * s
    b = s - u
    chain = {"S": s, "U": u, "B": b, "BC": bc}
    for key, ser in chain.items():
        for i, count in enumerate(ser.counts()):
            if count < 0:
                raise NonIntegralResult(f"{key} count at {i} is negative: {count}")
    return chain

"""Exact arithmetic on a computable fragment of the nonstandard reals.

A value is a finitely supported Laurent polynomial in a fixed positive
infinitesimal ``eps``, with arbitrary-precision rational coefficients:

    sum of  c_k * eps**k   over finitely many integer exponents k.

``eps`` is smaller than every positive rational, so the term with the
*minimal* exponent dominates: ``eps**-1`` is infinite, ``eps**0`` terms are
ordinary rationals, ``eps**2`` is infinitesimal relative to ``eps``.  The
values form an ordered commutative ring (not a field; no division is
defined), and every quantity in this package lives in it.  Floats are
rejected outright.

Two comparisons are provided.  The ordinary total order (``<``, ``<=`` and
friends) is decided by the sign of the difference, i.e. by the sign of the
leading coefficient.  The *qualitative* order :func:`qcompare` is coarser: it
ignores differences that are infinitesimal relative to the operands, so
``1 + eps`` is qualitatively equivalent to ``1`` while ``eps`` still exceeds
``eps/12``.  For values of equal sign the test is division-free: ``x``
qualitatively exceeds ``y`` (both nonnegative) exactly when ``x - y`` is
positive and its leading exponent equals the leading exponent of ``x``.
Opposite-sign operands are ordered by sign, and negative operands reduce to
the nonnegative case through ``x ~> y  iff  -y ~> -x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Iterable, Union

from .errors import InfiniteValue

__all__ = [
    "NSReal",
    "QOrdering",
    "ZERO",
    "ONE",
    "EPS",
    "eps",
    "qcompare",
    "rational",
]

Scalar = Union[int, Fraction]


@unique
class QOrdering(Enum):
    """Outcome of a qualitative comparison."""

    GREATER = "greater"
    EQUIVALENT = "equivalent"
    LESS = "less"

    def flipped(self) -> "QOrdering":
        if self is QOrdering.GREATER:
            return QOrdering.LESS
        if self is QOrdering.LESS:
            return QOrdering.GREATER
        return self


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact arithmetic only, got {type(value).__name__}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


@dataclass(frozen=True, slots=True)
class NSReal:
    """An immutable ring element.

    ``terms`` holds ``(exponent, coefficient)`` pairs sorted by strictly
    increasing exponent with no zero coefficients; the empty tuple is zero.
    Use :meth:`from_terms`, :func:`rational` or :func:`eps` rather than the
    raw constructor, which trusts its argument.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @staticmethod
    def from_terms(pairs: Iterable[tuple[int, Scalar]]) -> "NSReal":
        acc: dict[int, Fraction] = {}
        for exponent, coefficient in pairs:
            if not isinstance(exponent, int) or isinstance(exponent, bool):
                raise TypeError("exponents must be plain ints")
            c = _as_fraction(coefficient)
            acc[exponent] = acc.get(exponent, Fraction(0)) + c
        return NSReal(tuple(sorted((e, c) for e, c in acc.items() if c)))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sign(self) -> int:
        """-1, 0 or +1: the sign of the value, i.e. of its leading coefficient."""
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    def leading(self) -> tuple[int, Fraction] | None:
        """The dominant ``(exponent, coefficient)`` pair, or None for zero."""
        return self.terms[0] if self.terms else None

    def leading_exponent(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def is_infinitesimal(self) -> bool:
        """True when the magnitude is below every positive rational.

        Zero counts as infinitesimal.
        """
        return not self.terms or self.terms[0][0] > 0

    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0] >= 0

    def is_standard(self) -> bool:
        """True for plain rationals (including zero): no ``eps`` dependence."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def standard_part(self) -> Fraction:
        """Collapse infinitesimals: the unique rational at distance
        infinitesimal from the value.  Raises InfiniteValue if the value has
        a term of negative exponent."""
        if not self.is_finite():
            raise InfiniteValue(f"no standard part: leading term {self.terms[0]}")
        for exponent, coefficient in self.terms:
            if exponent == 0:
                return coefficient
        return Fraction(0)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other: object) -> "NSReal | None":
        if isinstance(other, NSReal):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NSReal.from_terms([(0, other)])
        return None

    def __add__(self, other: object) -> "NSReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return NSReal.from_terms(list(self.terms) + list(rhs.terms))

    __radd__ = __add__

    def __neg__(self) -> "NSReal":
        return NSReal(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: object) -> "NSReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "NSReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "NSReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in rhs.terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return NSReal(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "NSReal":
        if not isinstance(power, int) or isinstance(power, bool) or power < 0:
            raise TypeError("only nonnegative integer powers are defined")
        result = ONE
        for _ in range(power):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- total (quantitative) order --------------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def __hash__(self) -> int:
        # Values equal to a plain rational hash like that rational, keeping
        # the eq/hash contract intact when scalars are compared in.
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return hash(self.terms[0][1])
        return hash(self.terms)

    def _compare_sign(self, other: object) -> int | None:
        rhs = self._coerce(other)
        if rhs is None:
            return None
        return (self - rhs).sign()

    def __lt__(self, other: object) -> bool:
        s = self._compare_sign(other)
        if s is None:
            return NotImplemented
        return s < 0

    def __le__(self, other: object) -> bool:
        s = self._compare_sign(other)
        if s is None:
            return NotImplemented
        return s <= 0

    def __gt__(self, other: object) -> bool:
        s = self._compare_sign(other)
        if s is None:
            return NotImplemented
        return s > 0

    def __ge__(self, other: object) -> bool:
        s = self._compare_sign(other)
        if s is None:
            return NotImplemented
        return s >= 0

    def __repr__(self) -> str:
        from .formats import render_nsreal

        return f"NSReal({render_nsreal(self)!r})"


def rational(value: Scalar | str) -> NSReal:
    """Embed a rational (int, Fraction, or a string like ``"5/6"``)."""
    if isinstance(value, str):
        value = Fraction(value)
    return NSReal.from_terms([(0, value)])


def eps(exponent: int = 1) -> NSReal:
    """The basis element ``eps**exponent``; negative exponents are infinite."""
    if not isinstance(exponent, int) or isinstance(exponent, bool):
        raise TypeError("exponent must be a plain int")
    return NSReal(((exponent, Fraction(1)),))


ZERO = NSReal()
ONE = rational(1)
EPS = eps()


def _qcompare_nonnegative(x: NSReal, y: NSReal) -> QOrdering:
    # Both operands >= 0.  Division-free test: x exceeds y exactly when the
    # difference is positive and as large in order of magnitude as x itself.
    diff = x - y
    s = diff.sign()
    if s == 0:
        return QOrdering.EQUIVALENT
    if s > 0:
        if diff.leading_exponent() == x.leading_exponent():
            return QOrdering.GREATER
        return QOrdering.EQUIVALENT
    if diff.leading_exponent() == y.leading_exponent():
        return QOrdering.LESS
    return QOrdering.EQUIVALENT


def qcompare(x: NSReal, y: NSReal) -> QOrdering:
    """Qualitative comparison: strict only when the gap is non-negligible
    relative to the operands.

    For nonnegative operands the gap must be of the same order of magnitude
    as the larger operand; any nonnegative value strictly exceeds any
    negative one; comparisons among negatives mirror the nonnegative case.
    The result refines the total order (GREATER implies ``x > y``) and the
    induced equivalence is exactly "identical leading term, same sign class".
    """
    sx, sy = x.sign(), y.sign()
    if sx >= 0 and sy < 0:
        return QOrdering.GREATER
    if sx < 0 and sy >= 0:
        return QOrdering.LESS
    if sx < 0:
        return qcompare(-y, -x)
    return _qcompare_nonnegative(x, y)

"""Exact multivector arithmetic on top of the sign kernel.

A multivector is a finite formal sum of blades with rational
coefficients, stored sparsely as ``{mask: Fraction}``.  All arithmetic
is exact; there is no float anywhere in this layer.  Values are
immutable and hashable, and two multivectors compare equal exactly
when they have the same generator-square convention and the same
coefficient table.

An :class:`Algebra` pins the convention (``mu`` is the shared square
of the generators, +1 or -1) and acts as the factory:

>>> alg = Algebra(mu=-1)
>>> a = alg.parse("e_{13} + 2 e_2")
>>> b = alg.blade(0b11)  # e_{12}
>>> print(a * b)
2 e_{1} - e_{23}
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from .kernel import blade_product
from .notation import Expression, Factor, format_blade, parse_expression

__all__ = ["Algebra", "Multivector"]

Scalar = Union[int, Fraction]


class Algebra:
    """Context fixing the generator square; factory for multivectors."""

    __slots__ = ("_mu",)

    def __init__(self, mu: int = -1):
        if mu != 1 and mu != -1:
            raise ValueError(f"mu must be +1 or -1, got {mu!r}")
        self._mu = mu

    @property
    def mu(self) -> int:
        return self._mu

    def multivector(self, coeffs: Dict[int, Scalar]) -> "Multivector":
        """Multivector from a {mask: coefficient} table."""
        return Multivector(self, coeffs)

    def blade(self, mask: int, coeff: Scalar = 1) -> "Multivector":
        return Multivector(self, {mask: coeff})

    def scalar(self, value: Scalar) -> "Multivector":
        return Multivector(self, {0: value})

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def parse(self, text: str) -> "Multivector":
        """Evaluate expression text (see :mod:`cltwist.notation`)."""
        return self._evaluate(parse_expression(text))

    def _evaluate(self, expr: Expression) -> "Multivector":
        total = self.zero()
        for term in expr.terms:
            acc = self.scalar(term.sign)
            for factor in term.factors:
                acc = acc * self._factor(factor)
            total = total + acc
        return total

    def _factor(self, factor: Factor) -> "Multivector":
        coeff = factor.coeff if factor.coeff is not None else Fraction(1)
        mask = factor.blade if factor.blade is not None else 0
        return self.blade(mask, coeff)

    def __eq__(self, other):
        return isinstance(other, Algebra) and other._mu == self._mu

    def __hash__(self):
        return hash((Algebra, self._mu))

    def __repr__(self):
        return f"Algebra(mu={self._mu:+d})"


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"coefficients must be int or Fraction, got {value!r}")


class Multivector:
    """Immutable sparse sum of blades with Fraction coefficients."""

    __slots__ = ("_algebra", "_coeffs", "_hash")

    def __init__(self, algebra: Algebra, coeffs: Dict[int, Scalar]):
        table: Dict[int, Fraction] = {}
        for mask, value in coeffs.items():
            if mask < 0 or mask >> 64:
                raise ValueError(f"blade mask {mask} out of range")
            c = _as_fraction(value)
            if c:
                table[mask] = table.get(mask, Fraction(0)) + c
        # canonical: zero coefficients never stored
        table = {m: c for m, c in table.items() if c}
        object.__setattr__(self, "_algebra", algebra)
        object.__setattr__(self, "_coeffs", table)
        object.__setattr__(
            self, "_hash", hash((algebra, frozenset(table.items())))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @property
    def algebra(self) -> Algebra:
        return self._algebra

    @property
    def mu(self) -> int:
        return self._algebra.mu

    def coefficient(self, mask: int) -> Fraction:
        return self._coeffs.get(mask, Fraction(0))

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Pairs (mask, coefficient), ascending by blade index."""
        for mask in sorted(self._coeffs):
            yield mask, self._coeffs[mask]

    def grades(self):
        return sorted({m.bit_count() for m in self._coeffs})

    def grade_part(self, k: int) -> "Multivector":
        """Projection onto grade ``k``."""
        return Multivector(
            self._algebra,
            {m: c for m, c in self._coeffs.items() if m.bit_count() == k},
        )

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def _check_same(self, other: "Multivector"):
        if self._algebra != other._algebra:
            raise ValueError("multivectors from different algebras")

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return (
                self._algebra == other._algebra
                and self._coeffs == other._coeffs
            )
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._algebra.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        out = dict(self._coeffs)
        for mask, c in other._coeffs.items():
            out[mask] = out.get(mask, Fraction(0)) + c
        return Multivector(self._algebra, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Multivector(
            self._algebra, {m: -c for m, c in self._coeffs.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._algebra.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Multivector(
                self._algebra, {m: v * c for m, v in self._coeffs.items()}
            )
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        mu = self._algebra.mu
        out: Dict[int, Fraction] = {}
        for p, cp in self._coeffs.items():
            for q, cq in other._coeffs.items():
                sign, mask = blade_product(p, q, mu)
                out[mask] = out.get(mask, Fraction(0)) + sign * cp * cq
        return Multivector(self._algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)  # scalars commute
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self.__mul__(Fraction(1) / c)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self._algebra.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    # --- rendering --------------------------------------------------------

    def format(self, style: str = "e") -> str:
        """Canonical text; parses back to an equal multivector."""
        if not self._coeffs:
            return "0"
        parts = []
        for mask, coeff in self.terms():
            lead = not parts
            if coeff < 0:
                parts.append("-" if lead else " - ")
                coeff = -coeff
            elif not lead:
                parts.append(" + ")
            blade = format_blade(mask, style) if mask else ""
            if coeff != 1 or not blade:
                parts.append(str(coeff))
                if blade:
                    parts.append(" ")
            parts.append(blade)
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"<Multivector mu={self.mu:+d} {self.format()}>"

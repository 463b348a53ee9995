"""
Prime and extension finite fields, GF(p) and GF(p^e).

Elements are dense little-endian coefficient vectors over GF(p) reduced modulo
the field's monic irreducible modulus. The arithmetic itself is delegated to
``galois``, whose integer representation of an element is exactly
``sum(c_i * p**i)``.
"""

import logging

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import galois

from django.core.exceptions import ValidationError

from utils.identifiers import AbstractIdentifier

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _galois_field(p: int, e: int, modulus: tuple[int, ...]) -> type[galois.FieldArray]:
    if e == 1:
        return galois.GF(p)
    irreducible_poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    logger.debug("Building GF(%d^%d) with modulus %s", p, e, irreducible_poly)
    return galois.GF(p**e, irreducible_poly=irreducible_poly)


@dataclass(frozen=True)
class FieldSpec(AbstractIdentifier):
    """
    A finite field GF(p^e) given by its characteristic, its degree over GF(p)
    and its modulus polynomial (little-endian, monic, irreducible, degree e).

    Two specs are interchangeable iff the three fields are identical.
    """

    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        self.full_clean()

    def clean(self):
        if not galois.is_prime(self.p):
            raise ValidationError(f"The characteristic {self.p} isn't prime")
        if self.e < 1:
            raise ValidationError(f"The extension degree must be positive, got {self.e}")
        if len(self.modulus) != self.e + 1:
            raise ValidationError(
                f"The modulus must have e+1={self.e + 1} coefficients, got {len(self.modulus)}"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValidationError(f"The modulus coefficients must lie in [0, {self.p})")
        if self.modulus[-1] != 1:
            raise ValidationError("The modulus must be monic")
        if self.e > 1:
            poly = galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))
            if not poly.is_irreducible():
                raise ValidationError(f"The modulus {poly} isn't irreducible over GF({self.p})")

    def build_identifier(self) -> str:
        return f"GF({self.p}^{self.e})/{','.join(map(str, self.modulus))}"

    def __str__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def galois_field(self) -> type[galois.FieldArray]:
        """
        Returns
        -------
        type[galois.FieldArray]
            The ``galois`` field class doing the arithmetic of this field.
        """
        return _galois_field(self.p, self.e, self.modulus)

    @property
    def prime_field(self) -> type[galois.FieldArray]:
        return galois.GF(self.p)

    def element(self, value: int | Sequence[int]) -> "FieldElement":
        """
        Builds an element from its integer representation or from its
        little-endian coefficient vector.
        """
        if isinstance(value, int):
            return FieldElement.from_int(self, value)
        return FieldElement(tuple(value), self)

    def zero(self) -> "FieldElement":
        return FieldElement.from_int(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement.from_int(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        """
        Iterates over the whole field in the canonical order.
        """
        for value in range(self.order):
            yield FieldElement.from_int(self, value)


def make_field(p: int, e: int = 1) -> FieldSpec:
    """
    Builds GF(p^e) with the lexicographically smallest monic irreducible
    modulus of degree e over GF(p).

    The choice is deterministic, so the same ``(p, e)`` always gives the same
    modulus and serialized matrices are reproducible bit for bit. For ``e=1``
    the modulus is the placeholder ``x`` and the arithmetic is modulo p.

    Parameters
    ----------
    p: int
        The characteristic, a prime.
    e: int
        The extension degree, at least 1.

    Returns
    -------
    FieldSpec
        The field.
    """
    if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
        raise ValidationError(f"The characteristic {p} isn't prime")
    if not isinstance(e, int) or e < 1:
        raise ValidationError(f"The extension degree must be positive, got {e}")
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    poly = galois.irreducible_poly(p, e, method="min")
    return FieldSpec(p, e, tuple(int(c) for c in reversed(poly.coeffs)))


@dataclass(frozen=True)
class FieldElement:
    """
    An element of a ``FieldSpec`` field as its length-e little-endian
    coefficient vector over GF(p).
    """

    coeffs: tuple[int, ...]
    spec: FieldSpec

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.spec.e:
            raise ValidationError(
                f"An element of {self.spec} has {self.spec.e} coefficients, got {len(coeffs)}"
            )
        if any(not 0 <= c < self.spec.p for c in coeffs):
            raise ValidationError(f"The coefficients must lie in [0, {self.spec.p})")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_int(cls, spec: FieldSpec, value: int) -> "FieldElement":
        if not 0 <= value < spec.order:
            raise ValidationError(f"{value} isn't the integer form of an element of {spec}")
        coeffs = []
        for _ in range(spec.e):
            value, digit = divmod(value, spec.p)
            coeffs.append(digit)
        return cls(tuple(coeffs), spec)

    @property
    def value(self) -> int:
        """
        Returns
        -------
        int
            The integer representation, ``sum(c_i * p**i)``.
        """
        return sum(c * self.spec.p**i for i, c in enumerate(self.coeffs))

    def __int__(self):
        return self.value

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = [
            ("" if c == 1 and i else str(c)) + ("" if i == 0 else "a" if i == 1 else f"a^{i}")
            for i, c in reversed(list(enumerate(self.coeffs)))
            if c
        ]
        return f"{' + '.join(terms) or '0'} in {self.spec}"

    def _lift(self) -> galois.FieldArray:
        return self.spec.galois_field(self.value)

    def _wrap(self, result: galois.FieldArray) -> "FieldElement":
        return FieldElement.from_int(self.spec, int(result))

    def _operand(self, other: "FieldElement") -> galois.FieldArray:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ValidationError(f"Elements of {self.spec} and {other.spec} can't be combined")
        return other._lift()

    def __add__(self, other: "FieldElement") -> "FieldElement":
        operand = self._operand(other)
        if operand is NotImplemented:
            return operand
        return self._wrap(self._lift() + operand)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        operand = self._operand(other)
        if operand is NotImplemented:
            return operand
        return self._wrap(self._lift() - operand)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        operand = self._operand(other)
        if operand is NotImplemented:
            return operand
        return self._wrap(self._lift() * operand)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        operand = self._operand(other)
        if operand is NotImplemented:
            return operand
        return self * other.inverse()

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self._lift())

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        return self._wrap(self._lift() ** exponent)

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError(f"0 has no inverse in {self.spec}")
        return self._wrap(self._lift() ** -1)


def _power_of(p: int, q: int) -> int | None:
    """
    Returns s such that q = p^s, s >= 1, or None.
    """
    s = 0
    while q > 1 and q % p == 0:
        q //= p
        s += 1
    return s if q == 1 and s >= 1 else None


def frobenius(x: FieldElement, q: int) -> FieldElement:
    """
    The q-Frobenius map ``x -> x^q``, with q a power of the characteristic.

    It is an automorphism of the field fixing GF(q) whenever q = p^s with s
    dividing e.
    """
    if _power_of(x.spec.p, q) is None:
        raise ValidationError(f"{q} isn't a power of the characteristic {x.spec.p}")
    return x**q


def as_subfield_vector(x: FieldElement, q: int) -> galois.FieldArray:
    """
    The coordinates of ``x`` over the prime subfield GF(p), a GF(p)-linear
    bijection onto GF(p)^e.

    Only the prime subfield is supported, so ``q`` must be p.
    """
    if q != x.spec.p:
        raise ValidationError(
            f"Only coordinates over the prime subfield GF({x.spec.p}) are supported, got q={q}"
        )
    return x.spec.prime_field(list(x.coeffs))


def element_order_key(x: FieldElement) -> tuple[int, ...]:
    """
    Canonical total order on elements: lexicographic on the big-endian
    coefficient vector. In GF(4) this gives 0 < 1 < a < a+1.
    """
    return tuple(reversed(x.coeffs))

"""Finite-field arithmetic GF(p^m) with a full discrete-log table.

Elements are polynomials over GF(p) of degree < m, reduced modulo a fixed
monic irreducible polynomial.  The modulus is the lexicographically first
monic irreducible (coefficients compared low-degree-first), and the primitive
element is the one with the smallest integer encoding sum(c_i * p^i) whose
multiplicative order is p^m - 1.  Both searches are deterministic so discrete
logs are reproducible across runs.

Exp/log tables for the whole multiplicative group are built at construction
time; the difference-set constructions need every log anyway, and the fields
used here are desk scale (p^m up to ~10^5).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .numutil import factorize, is_prime, prime_power


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_add(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    length = max(len(a), len(b))
    out = []
    for i in range(length):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append((ai + bi) % p)
    return _poly_trim(tuple(out))


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _poly_trim(tuple(a))


def _irreducible(candidate: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(candidate) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        # enumerate monic degree-d divisors by their p^d lower coefficients
        for code in range(p**d):
            div = _divisor_from_code(code, d, p)
            if _poly_mod(candidate, div, p) == ():
                return False
    return True


def _divisor_from_code(code: int, degree: int, p: int) -> tuple[int, ...]:
    coeffs = []
    for _ in range(degree):
        coeffs.append(code % p)
        code //= p
    coeffs.append(1)
    return tuple(coeffs)


@dataclass(frozen=True)
class FieldElement:
    """Element of a FiniteField, as a coefficient vector of length m."""

    field: "FiniteField"
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.field.degree
        p = self.field.characteristic
        c = tuple(x % p for x in self.coeffs)
        if len(c) != m:
            c = tuple((list(c) + [0] * m)[:m])
        object.__setattr__(self, "coeffs", c)

    @property
    def code(self) -> int:
        """Integer encoding sum(c_i * p^i)."""
        p = self.field.characteristic
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.characteristic
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.characteristic
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.characteristic
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        f = self.field
        prod = _poly_mul(_poly_trim(self.coeffs), _poly_trim(other.coeffs), f.characteristic)
        return FieldElement(f, _poly_mod(prod, f.modulus_polynomial, f.characteristic))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        f = self.field
        if self.is_zero():
            if e == 0:
                return f.one
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return f.zero
        e %= f.order - 1
        result = f.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse")
        f = self.field
        return f.exp((-f.discrete_log(self)) % (f.order - 1))

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise ValueError("elements belong to different fields")

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.order}), code={self.code})"


class FiniteField:
    """GF(p^m) with verified irreducible modulus and verified primitive element."""

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"degree must be >= 1, got {m}")
        q = p**m
        if q > 2**31:
            raise ValueError(f"field order {q} too large")
        self.characteristic = p
        self.degree = m
        self.order = q
        self.modulus_polynomial = self._find_modulus()
        self.zero = FieldElement(self, (0,) * m)
        self.one = FieldElement(self, (1,) + (0,) * (m - 1))
        self.primitive_element = self._find_primitive()
        self._build_tables()

    def _find_modulus(self) -> tuple[int, ...]:
        p, m = self.characteristic, self.degree
        for code in range(p**m):
            cand = _divisor_from_code(code, m, p)
            if _irreducible(cand, p):
                return cand
        raise RuntimeError("no irreducible polynomial found (internal bug)")

    def _element_order_ok(self, x: FieldElement, factors: Iterable[int]) -> bool:
        qm1 = self.order - 1
        return all((x ** (qm1 // f)).code != self.one.code for f in factors)

    def _find_primitive(self) -> FieldElement:
        if self.order == 2:
            return self.one
        factors = list(factorize(self.order - 1))
        for code in range(2, self.order):
            x = self.element(code)
            if self._element_order_ok(x, factors):
                return x
        raise RuntimeError("no primitive element found (internal bug)")

    def _build_tables(self) -> None:
        q = self.order
        self._exp: list[FieldElement] = [self.one]
        self._log: dict[int, int] = {self.one.code: 0}
        x = self.one
        for i in range(1, q - 1):
            x = x * self.primitive_element
            self._exp.append(x)
            self._log[x.code] = i
        if len(self._log) != q - 1:
            raise RuntimeError("primitive element does not generate the group (internal bug)")

    def element(self, code: int) -> FieldElement:
        """Element from its integer encoding sum(c_i * p^i)."""
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} outside [0, {self.order})")
        p = self.characteristic
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(code % p)
            code //= p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        return (self.element(c) for c in range(self.order))

    def exp(self, e: int) -> FieldElement:
        return self._exp[e % (self.order - 1)]

    def discrete_log(self, x: FieldElement) -> int:
        """e in [0, q-2] with alpha^e == x.  Rejects x == 0."""
        if x.is_zero():
            raise ValueError("discrete log of 0 is undefined")
        return self._log[x.code]

    def __repr__(self) -> str:
        return f"FiniteField(p={self.characteristic}, m={self.degree})"


@lru_cache(maxsize=None)
def field_create(p: int, m: int) -> FiniteField:
    """GF(p^m); cached because table construction is the expensive part."""
    return FiniteField(p, m)


def field_for_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    return field_create(*pe)


def polynomial_eval(coeffs: Sequence[FieldElement], point: FieldElement) -> FieldElement:
    """Evaluate sum(coeffs[i] * point^i) by Horner's rule.

    coeffs[0] is the constant term; an empty list evaluates to 0.
    """
    field = point.field
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc

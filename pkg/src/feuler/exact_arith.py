"""Exact arithmetic: rationals, dense polynomials in u, rational functions in u,
and elements of cyclotomic rings.

Rationals are :class:`fractions.Fraction`.  Every :class:`URational` is kept in
canonical form (monic denominator, coprime numerator and denominator) so that
equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidInputError, PoleError

Rational = Fraction

_Scalar = (int, Fraction)


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


class UPoly:
    """Dense univariate polynomial over Q; ``coeffs[k]`` is the u^k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "UPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "UPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, _Scalar):
            return self.coeffs == UPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({render_poly(self)!r})"

    def __neg__(self) -> "UPoly":
        return UPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UPoly":
        if isinstance(other, _Scalar):
            other = UPoly([other])
        elif not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UPoly":
        if isinstance(other, _Scalar):
            other = UPoly([other])
        elif not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UPoly":
        return (-self) + other

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, _Scalar):
            if not other:
                return ZERO_POLY
            return UPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        # Multiply over Z after clearing denominators; much faster than Fraction loops.
        da, ia = _integerize(a)
        db, ib = _integerize(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return UPoly._raw(tuple(Fraction(c, den) for c in out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UPoly":
        if k < 0:
            raise InvalidInputError("negative power of a polynomial")
        result, base = ONE_POLY, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return ZERO_POLY, self
        inv_lead = 1 / other.lead
        b = other.coeffs
        q = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c * inv_lead
            q[i - db] = c
            off = i - db
            for j in range(db):
                if b[j]:
                    rem[off + j] -= c * b[j]
            rem[i] = Fraction(0)
        return UPoly(q), UPoly(rem[:db])

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if self.is_zero() or self.lead == 1:
            return self
        return self * (1 / self.lead)

    def eval(self, v):
        """Horner evaluation at ``v`` (any ring element supporting * and +)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def subst_power(self, k: int) -> "UPoly":
        """Return p(u^k)."""
        if k == 1 or len(self.coeffs) <= 1:
            return self
        out = [Fraction(0)] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UPoly._raw(tuple(out))

    def reversed_to(self, d: int) -> "UPoly":
        """Return u^d * p(1/u); requires d >= deg p."""
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return UPoly(reversed(cs))

    def low_order(self) -> int:
        """Multiplicity of u as a factor (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0


def _integerize(cs: Sequence[Fraction]) -> tuple[int, list[int]]:
    den = 1
    for c in cs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return 1, [c.numerator for c in cs]
    return den, [c.numerator * (den // c.denominator) for c in cs]


ZERO_POLY = UPoly()
ONE_POLY = UPoly([1])
U_POLY = UPoly([0, 1])


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero():
        return a.monic()
    if b.degree == 0:
        return ONE_POLY
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        if b.degree == 0:
            return ONE_POLY
        a, b = b, (a % b).monic()
    return a


class URational:
    """Rational function num/den in u over Q, always in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO_POLY, den=ONE_POLY):
        if not isinstance(num, UPoly):
            num = UPoly([num])
        if not isinstance(den, UPoly):
            den = UPoly([den])
        if den.is_zero():
            raise InvalidInputError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: UPoly, den: UPoly) -> "URational":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def u(cls) -> "URational":
        return cls._raw(U_POLY, ONE_POLY)

    @classmethod
    def const(cls, c) -> "URational":
        p = UPoly([c])
        return cls._raw(p, ONE_POLY)

    @classmethod
    def _coerce(cls, x) -> "URational | None":
        if isinstance(x, URational):
            return x
        if isinstance(x, _Scalar):
            return cls.const(x)
        if isinstance(x, UPoly):
            return cls._raw(x, ONE_POLY)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den.is_one() and self.num.degree <= 0:
            return hash(self.num.lead)
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"URational({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def __neg__(self) -> "URational":
        return URational._raw(-self.num, self.den)

    def __add__(self, other) -> "URational":
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            return URational(a + c, b) if not b.is_one() else URational._raw(a + c, b)
        if b.is_one():
            return URational._raw(a * d + c, d)
        if d.is_one():
            return URational._raw(a + c * b, b)
        g = poly_gcd(b, d)
        if g.is_one():
            return URational._raw(a * d + c * b, b * d)
        b1, d1 = b // g, d // g
        t = a * d1 + c * b1
        if t.is_zero():
            return ZERO
        g2 = poly_gcd(t, g)
        if not g2.is_one():
            t, g = t // g2, g // g2
        return URational._raw(t, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other) -> "URational":
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "URational":
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "URational":
        if isinstance(other, _Scalar):
            if not other:
                return ZERO
            return URational._raw(self.num * other, self.den)
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        a, b, c, d = self.num, self.den, o.num, o.den
        g1 = poly_gcd(a, d) if not d.is_one() else ONE_POLY
        g2 = poly_gcd(c, b) if not b.is_one() else ONE_POLY
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        # Quotients of monic polynomials by monic gcds stay monic.
        return URational._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "URational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        lead = self.num.lead
        return URational._raw(self.den * (1 / lead), self.num * (1 / lead))

    def __truediv__(self, other) -> "URational":
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "URational":
        o = URational._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "URational":
        if k < 0:
            return self.inverse() ** (-k)
        return URational._raw(self.num ** k, self.den ** k)

    def eval_at(self, v):
        return urat_eval_at(self, v)

    def subst_power(self, k: int) -> "URational":
        """f(u^k); coprimality and monicity survive the substitution."""
        if k < 1:
            raise InvalidInputError("substitution exponent must be positive")
        return URational._raw(self.num.subst_power(k), self.den.subst_power(k))

    def subst_inv(self) -> "URational":
        return urat_subst_inv(self)


ZERO = URational._raw(ZERO_POLY, ONE_POLY)
ONE = URational._raw(ONE_POLY, ONE_POLY)
U = URational.u()


def urat_normalize(num: UPoly, den: UPoly) -> URational:
    """Canonical form of num/den."""
    return URational(num, den)


def urat_eval_at(f: URational, v):
    """Exact value f(v); ``v`` may be a Fraction, int or any ring element."""
    d = f.den.eval(v)
    if d == 0:
        raise PoleError(v)
    n = f.num.eval(v)
    if isinstance(d, int) and isinstance(n, int):
        return Fraction(n, d)
    return n / d


def urat_subst_inv(f: URational) -> URational:
    """Canonical form of f(1/u)."""
    dn, dd = f.num.degree, f.den.degree
    if f.is_zero():
        return f
    d = max(dn, dd)
    return URational(f.num.reversed_to(d), f.den.reversed_to(d))


def urat_sum(terms: Iterable) -> URational:
    """Sum many rational functions, pooling numerators over shared denominators."""
    pools: dict[UPoly, UPoly] = {}
    for t in terms:
        t = URational._coerce(t)
        if t is None:
            raise TypeError("urat_sum expects rational functions")
        if t.is_zero():
            continue
        pools[t.den] = pools.get(t.den, ZERO_POLY) + t.num
    total = ZERO
    for den, num in pools.items():
        total = total + URational(num, den)
    return total


# ----------------------------------------------------------------------------
# Text rendering

def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: UPoly, var: str = "u") -> str:
    """Render as ``c_k*u^k + ... + c_0`` in descending degree; zero renders as ``0``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = _render_coeff(abs(c))
        term = mag if k == 0 else f"{mag}*{var}" if k == 1 else f"{mag}*{var}^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def render(f: URational) -> str:
    """Canonical text form ``num_poly / den_poly``."""
    return f"{render_poly(f.num)} / {render_poly(f.den)}"


_TERM = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*u(?:\^(\d+))?)?$")


def parse_poly(text: str) -> UPoly:
    toks = text.split()
    if not toks:
        raise InvalidInputError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    sign = 1
    expect_term = True
    for tok in toks:
        if not expect_term:
            if tok not in "+-" or len(tok) != 1:
                raise InvalidInputError(f"expected + or -, got {tok!r}")
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        m = _TERM.match(tok)
        if not m:
            raise InvalidInputError(f"bad term {tok!r}")
        c = Fraction(m.group(1))
        k = 0
        if "*u" in tok:
            k = int(m.group(2)) if m.group(2) else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        expect_term = False
    if expect_term:
        raise InvalidInputError("dangling operator")
    deg = max(coeffs)
    return UPoly([coeffs.get(k, 0) for k in range(deg + 1)])


def parse(text: str) -> URational:
    """Inverse of :func:`render`."""
    try:
        num_s, den_s = text.split(" / ")
    except ValueError:
        raise InvalidInputError(f"expected 'num / den', got {text!r}") from None
    return URational(parse_poly(num_s), parse_poly(den_s))


# ----------------------------------------------------------------------------
# Cyclotomic rings

def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise InvalidInputError("cyclotomic order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _exact_int_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_int_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]  # b is monic
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert not any(a[:db])
    return q


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


class CycloElem:
    """Element sum c_k zeta^k of Q(zeta_m)[...] with coordinates in any field.

    Coordinates are Fractions for character values and URationals for twisted
    Frobenius-Euler numbers; the same class covers both.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: Sequence = ()):
        phi = cyclotomic_poly(order)
        f = len(phi) - 1
        cs = list(coords) + [Fraction(0)] * max(0, f - len(coords))
        for i in range(len(cs) - 1, f - 1, -1):
            c = cs[i]
            if c == 0:
                continue
            for j in range(f):
                if phi[j]:
                    cs[i - f + j] = cs[i - f + j] - c * phi[j]
        self.order = order
        self.coords = tuple(cs[:f])

    @classmethod
    def zeta_power(cls, order: int, k: int) -> "CycloElem":
        return cls(order, [0] * (k % order) + [1])

    @classmethod
    def one(cls, order: int) -> "CycloElem":
        return cls(order, [1])

    @classmethod
    def zero(cls, order: int) -> "CycloElem":
        return cls(order, [])

    def __repr__(self) -> str:
        return f"CycloElem({self.order}, {list(self.coords)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElem):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coords, other.coords)
            )
        if isinstance(other, (int, Fraction, URational)):
            return self == CycloElem(self.order, [other])
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other: "CycloElem") -> None:
        if other.order != self.order:
            raise InvalidInputError(
                f"cyclotomic order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            self._check(other)
            return CycloElem(self.order, [a + b for a, b in zip(self.coords, other.coords)])
        if isinstance(other, (int, Fraction, URational)):
            return self + CycloElem(self.order, [other])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.order, [-c for c in self.coords])

    def __sub__(self, other) -> "CycloElem":
        return self + (-other)

    def __rsub__(self, other) -> "CycloElem":
        return (-self) + other

    def __mul__(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            self._check(other)
            a, b = self.coords, other.coords
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x == 0:
                    continue
                for j, y in enumerate(b):
                    if y == 0:
                        continue
                    out[i + j] = out[i + j] + x * y
            return CycloElem(self.order, out)
        if isinstance(other, (int, Fraction, URational)):
            return CycloElem(self.order, [c * other for c in self.coords])
        return NotImplemented

    def __rmul__(self, other) -> "CycloElem":
        if isinstance(other, (int, Fraction, URational)):
            return CycloElem(self.order, [other * c for c in self.coords])
        return NotImplemented

    def __pow__(self, k: int) -> "CycloElem":
        if k < 0:
            raise InvalidInputError("negative powers of cyclotomic elements unsupported")
        result = CycloElem.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def map(self, fn) -> "CycloElem":
        return CycloElem(self.order, [fn(c) for c in self.coords])

    def rational_part(self):
        """The value as a scalar when it lies in the coefficient field."""
        if any(c != 0 for c in self.coords[1:]):
            raise InvalidInputError("element is not in the base field")
        return self.coords[0]


def cyclo_mul(a: CycloElem, b: CycloElem) -> CycloElem:
    if not (isinstance(a, CycloElem) and isinstance(b, CycloElem)):
        raise InvalidInputError("cyclo_mul expects two cyclotomic elements")
    if a.order != b.order:
        raise InvalidInputError(f"cyclotomic order mismatch: {a.order} vs {b.order}")
    return a * b


# Elements of Q(zeta_m)(u) reuse the same class with URational coordinates.
CycloURational = CycloElem

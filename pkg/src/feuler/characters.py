"""Dirichlet characters with values in cyclotomic rings."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Mapping

from .errors import InvalidInputError
from .exact_arith import CycloElem


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _mult_order(a: int, n: int) -> int:
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def _local_generators(p: int, k: int) -> list[tuple[int, int]]:
    """Generators (g, order) of the cyclic factors of (Z/p^k)^x."""
    q = p**k
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(q - 1, 2), (5, 2 ** (k - 2))]
    phi = q - q // p
    for g in range(2, q):
        if gcd(g, p) == 1 and _mult_order(g, q) == phi:
            return [(g, phi)]
    raise AssertionError("no primitive root found")  # pragma: no cover


class DirichletCharacter:
    """A character modulo ``modulus`` stored as angles in Q/Z.

    ``angles[a]`` is the value's argument as a fraction of a full turn, or
    ``None`` when gcd(a, modulus) > 1.  The cyclotomic order is the least
    common multiple of the angle denominators.
    """

    def __init__(self, modulus: int, angles: Mapping[int, Fraction | None], label: str = ""):
        if modulus < 1:
            raise InvalidInputError("modulus must be positive")
        table: list[Fraction | None] = []
        for a in range(modulus):
            ang = angles.get(a)
            if gcd(a, modulus) == 1:
                if ang is None:
                    raise InvalidInputError(f"missing value at unit residue {a}")
                table.append(Fraction(ang) % 1)
            else:
                table.append(None)
        self.modulus = modulus
        self.angles = tuple(table)
        self.order = lcm(*(a.denominator for a in table if a is not None))
        self.label = label or f"chi_{modulus}[" + ",".join(
            "-" if a is None else str(a) for a in table) + "]"

    @classmethod
    def trivial(cls) -> "DirichletCharacter":
        return cls(1, {0: Fraction(0)}, label="trivial")

    @classmethod
    def from_signs(cls, modulus: int, signs: Mapping[int, int]) -> "DirichletCharacter":
        """A real character given by its +-1 values on the unit residues."""
        angles = {}
        for a, s in signs.items():
            if s not in (1, -1):
                raise InvalidInputError("real characters take values +-1 on units")
            angles[a % modulus] = Fraction(0) if s == 1 else Fraction(1, 2)
        return cls(modulus, angles)

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.label})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, DirichletCharacter)
                and self.modulus == other.modulus and self.angles == other.angles)

    def __hash__(self) -> int:
        return hash((self.modulus, self.angles))

    def exponent(self, a: int) -> int | None:
        """k with chi(a) = zeta_order^k, or None if chi(a) = 0."""
        ang = self.angles[a % self.modulus]
        if ang is None:
            return None
        return int(ang * self.order)

    def __call__(self, a: int) -> CycloElem:
        k = self.exponent(a)
        if k is None:
            return CycloElem.zero(self.order)
        return CycloElem.zeta_power(self.order, k)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def sign(self, a: int) -> int:
        """chi(a) as an integer in {-1, 0, 1}; only for real characters."""
        if not self.is_real:
            raise InvalidInputError(f"{self} is not +-1 valued")
        ang = self.angles[a % self.modulus]
        if ang is None:
            return 0
        return 1 if ang == 0 else -1

    @property
    def is_principal(self) -> bool:
        return all(a is None or a == 0 for a in self.angles)


def dirichlet_characters(modulus: int) -> list[DirichletCharacter]:
    """All characters mod ``modulus``; the principal one comes first."""
    if modulus < 1:
        raise InvalidInputError("modulus must be positive")
    gens: list[tuple[int, int]] = []
    for p, k in sorted(_factor(modulus).items()):
        q = p**k
        rest = modulus // q
        for g, h in _local_generators(p, k):
            # CRT lift: g mod q, 1 mod the cofactor.
            if rest == 1:
                G = g
            else:
                t = (g - 1) * pow(rest, -1, q) % q
                G = (1 + rest * t) % modulus
            gens.append((G, h))
    logs: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(h) for _, h in gens)):
        a = 1 % modulus
        for (g, _), e in zip(gens, exps):
            a = a * pow(g, e, modulus) % modulus
        logs[a] = exps
    if modulus == 1:
        logs = {0: ()}
    out = []
    for js in product(*(range(h) for _, h in gens)):
        angles = {
            a: sum((Fraction(e * j, h) for e, j, (_, h) in zip(exps, js, gens)), Fraction(0))
            for a, exps in logs.items()
        }
        out.append(DirichletCharacter(modulus, angles))
    return out

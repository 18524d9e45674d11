"""Exact integer linear constraints on partial augmentations.

For a candidate torsion unit u of order k, each ordinary or p-Brauer character
chi (p coprime to k) and each residue l mod k yields the eigenvalue
multiplicity

    mu_l(u, chi, p) = (1/k) sum_{d|k} Tr_{Q(z^d)/Q}( chi(u^d) z^(-dl) ),

with z a primitive k-th root of unity, which must be a non-negative integer
bounded by the degree. The d = 1 term is linear in the unknown partial
augmentations; all other terms are fixed by the chosen power profile. This
module turns that statement into integral linear forms, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Cyclotomic, divisors
from .ctbl import BrauerTable, CharacterTable, power_class


@dataclass(frozen=True)
class VariableSpace:
    """Ordered support of the augmentation variables for units of order k."""
    order: int
    classes: tuple[str, ...]


@dataclass(frozen=True)
class CharRef:
    """A character selector: ordinary (p = 0, printed '*') or p-Brauer."""
    id: str
    p: int = 0

    @property
    def token(self) -> str:
        return f"{self.id}*" if self.p == 0 else f"{self.id}@{self.p}"

    @staticmethod
    def parse(token: str) -> "CharRef":
        token = token.strip()
        if token.endswith("*"):
            return CharRef(token[:-1], 0)
        if "@" in token:
            cid, p = token.rsplit("@", 1)
            return CharRef(cid, int(p))
        return CharRef(token, 0)


@dataclass(frozen=True)
class LinearForm:
    """k*mu_l as an integer affine form in the augmentation variables."""
    coeffs: tuple[int, ...]  # aligned with the VariableSpace ordering
    constant: int

    def evaluate(self, point) -> int:
        return sum(c * x for c, x in zip(self.coeffs, point)) + self.constant


@dataclass(frozen=True)
class MuConstraint:
    """0 <= form <= upper and form == 0 (mod modulus of the system)."""
    label: tuple[str, str, int]  # (character id, "*" or str(p), l)
    form: LinearForm
    upper: int


@dataclass(frozen=True)
class ConstraintSystem:
    space: VariableSpace
    modulus: int
    constraints: tuple[MuConstraint, ...]

    # the augmentation-sum equality sum nu_C = 1 is part of every system

    def is_solution(self, point) -> bool:
        if len(point) != len(self.space.classes):
            return False
        if sum(point) != 1:
            return False
        for mc in self.constraints:
            v = mc.form.evaluate(point)
            if v < 0 or v > mc.upper or v % self.modulus != 0:
                return False
        return True


@dataclass(frozen=True)
class PowerProfile:
    """Augmentation maps of the proper powers u^d, one per divisor d > 1 of k."""
    order: int
    entries: dict[int, dict[str, int]]

    def augmentation(self, d: int) -> dict[str, int]:
        return self.entries[d]


class SelectionError(ValueError):
    pass


def allowed_classes(table: CharacterTable, k: int) -> VariableSpace:
    """Classes that can carry a nonzero augmentation for a unit of order k.

    The identity is excluded and a class survives iff the order of its
    elements divides k (for each prime, a strictly larger p-part forces a
    vanishing augmentation).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    names = [c.name for c in table.classes
             if c.element_order > 1 and k % c.element_order == 0]
    names.sort(key=lambda nm: (table.class_named(nm).element_order, nm))
    return VariableSpace(k, tuple(names))


def trivial_profile(table: CharacterTable, class_name: str) -> PowerProfile:
    """Profile of the trivial unit: the group element g in the given class."""
    idx = table.class_index(class_name)
    k = table.classes[idx].element_order
    entries = {}
    for d in divisors(k):
        if d == 1:
            continue
        entries[d] = {table.classes[power_class(table, idx, d)].name: 1}
    return PowerProfile(k, entries)


def _char_values(table: CharacterTable, brauers, ref: CharRef):
    """Value lookup and degree for an ordinary or Brauer character."""
    if ref.p == 0:
        ch = table.character(ref.id)
        return (lambda name: ch.values[table.class_index(name)]), ch.degree
    for bt in brauers:
        if bt.p == ref.p:
            ch = bt.character(ref.id)
            regular = set(bt.regular_classes)

            def lookup(name, _bt=bt, _ch=ch, _reg=regular):
                if name not in _reg:
                    raise SelectionError(
                        f"{ref.token}: class {name} is not {ref.p}-regular")
                return _bt.value(_ch.id, name)

            return lookup, ch.degree
    raise SelectionError(f"no Brauer table for p = {ref.p}")


def mu_form(table: CharacterTable, brauers, ref: CharRef, k: int, l: int,
            profile: PowerProfile) -> LinearForm:
    """The integer form k*mu_l(u, chi, p) for units of order k.

    Coefficient of nu_C: trace over Q(zeta_k) of chi(C) * zeta_k^(-l).
    Constant: the d > 1 terms, with chi(u^d) fixed by the power profile
    (z^d is a primitive (k/d)-th root, so z^(-dl) = zeta_(k/d)^(-l)).
    """
    if ref.p != 0 and gcd(ref.p, k) != 1:
        raise SelectionError(f"{ref.token}: p must be coprime to the order {k}")
    if profile.order != k:
        raise ValueError("profile order mismatch")
    lookup, degree = _char_values(table, brauers, ref)
    space = allowed_classes(table, k)

    coeffs = []
    for name in space.classes:
        val = lookup(name)
        if val.n != k:
            val = val.embed(k)
        if k > 1:
            val = val * Cyclotomic.zeta(k, (-l) % k)
        t = val.trace()
        if t.denominator != 1:
            raise AssertionError(f"non-integral coefficient for {name}")
        coeffs.append(int(t))

    constant = Fraction(0)
    for d in divisors(k):
        if d == 1:
            continue
        m = k // d
        if d == k:
            constant += Fraction(degree)
            continue
        aug = profile.augmentation(d)
        val = Cyclotomic.from_rational(0, 1)
        for name, nu in aug.items():
            if nu:
                val = val + lookup(name).scale(nu)
        if val.n != m:
            if m % val.n != 0:
                raise AssertionError("profile value in wrong field")
            val = val.embed(m)
        if m > 1:
            val = val * Cyclotomic.zeta(m, (-l) % m)
        constant += val.trace()
    if constant.denominator != 1:
        raise AssertionError("non-integral constant term")
    return LinearForm(tuple(coeffs), int(constant))


def build_system(table: CharacterTable, brauers, k: int, profile: PowerProfile,
                 selection: list[CharRef]) -> ConstraintSystem:
    """One constraint triple (>= 0, <= k*degree, == 0 mod k) per (chi, p, l)."""
    if not selection:
        raise SelectionError("empty character selection")
    space = allowed_classes(table, k)
    out = []
    for ref in sorted(selection, key=lambda r: (r.id, r.p)):
        _, degree = _char_values(table, brauers, ref)
        for l in range(k):
            form = mu_form(table, brauers, ref, k, l, profile)
            tag = "*" if ref.p == 0 else str(ref.p)
            out.append(MuConstraint((ref.id, tag, l), form, k * degree))
    return ConstraintSystem(space, k, tuple(out))

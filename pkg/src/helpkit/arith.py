"""Exact rational and cyclotomic arithmetic.

Values of Q(zeta_n) are stored in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1),
i.e. as polynomials in zeta_n reduced modulo the n-th cyclotomic polynomial.
Reduction modulo Phi_n gives a unique normal form, so equality of elements
carried at the same conductor is literal equality of coefficient maps.
No floating point anywhere; coefficients are fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, multiplicity), ...)."""
    if n < 1:
        raise ValueError(f"factorize: n must be >= 1, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """Divisors of n >= 1, ascending."""
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**i for d in divs for i in range(a + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    """Moebius function mu(n)."""
    if n < 1:
        raise ValueError(f"moebius: n must be >= 1, got {n}")
    result = 1
    for _, a in factorize(n):
        if a > 1:
            return 0
        result = -result
    return result


def euler_phi(n: int) -> int:
    """Euler totient phi(n)."""
    if n < 1:
        raise ValueError(f"euler_phi: n must be >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def trace_root(n: int, t: int) -> int:
    """Trace of zeta_n^t from Q(zeta_n) down to Q.

    Equals mu(o) * phi(n) / phi(o) where o = n / gcd(n, t mod n) is the order
    of zeta_n^t (sum of zeta_n^(t*s) over all s coprime to n).
    """
    if n < 1:
        raise ValueError(f"trace_root: n must be >= 1, got {n}")
    from math import gcd

    o = n // gcd(n, t % n)
    return moebius(o) * euler_phi(n) // euler_phi(o)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (den monic). Coefficients ascending."""
    num = list(num)
    dden = len(den) - 1
    if dden < 0 or den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(0, len(num) - dden)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q[i - dden] = c
        for j, dj in enumerate(den):
            num[i - dden + j] -= c * dj
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial Phi_n."""
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial: n must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n):
        if d < n:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("cyclotomic polynomial division not exact")
    return tuple(num)


class Cyclotomic:
    """Element of Q(zeta_n), normalized in the power basis modulo Phi_n.

    `coeffs` maps exponent j (0 <= j < phi(n)) to a nonzero Fraction; the value
    is sum coeffs[j] * zeta_n^j. The conductor n is part of the representation
    and is not automatically minimized; equality across conductors embeds both
    sides into the lcm conductor first.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[int, Fraction], *, _reduced: bool = False):
        if n < 1:
            raise ValueError(f"conductor must be >= 1, got {n}")
        self.n = n
        if _reduced:
            self.coeffs = coeffs
        else:
            self.coeffs = _reduce(n, coeffs)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(r, n: int = 1) -> "Cyclotomic":
        r = Fraction(r)
        return Cyclotomic(n, {0: r} if r else {}, _reduced=True)

    @staticmethod
    def zeta(n: int, j: int = 1) -> "Cyclotomic":
        """zeta_n^j."""
        return Cyclotomic(n, {j % n: Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def _lift(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        from math import lcm

        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(other)
        if self.n == other.n:
            return self, other
        m = lcm(self.n, other.n)
        return self.embed(m), other.embed(m)

    def __add__(self, other) -> "Cyclotomic":
        a, b = self._lift(other)
        coeffs = dict(a.coeffs)
        for j, c in b.coeffs.items():
            s = coeffs.get(j, Fraction(0)) + c
            if s:
                coeffs[j] = s
            else:
                coeffs.pop(j, None)
        return Cyclotomic(a.n, coeffs, _reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {j: -c for j, c in self.coeffs.items()}, _reduced=True)

    def __sub__(self, other) -> "Cyclotomic":
        a, b = self._lift(other)
        return a + (-b)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self._lift(other)
        prod: dict[int, Fraction] = {}
        for i, ci in a.coeffs.items():
            for j, cj in b.coeffs.items():
                k = i + j
                s = prod.get(k, Fraction(0)) + ci * cj
                if s:
                    prod[k] = s
                else:
                    prod.pop(k, None)
        return Cyclotomic(a.n, prod)

    __rmul__ = __mul__

    def scale(self, r) -> "Cyclotomic":
        r = Fraction(r)
        if not r:
            return Cyclotomic(self.n, {}, _reduced=True)
        return Cyclotomic(self.n, {j: c * r for j, c in self.coeffs.items()}, _reduced=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rational() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._lift(other)
        return a.coeffs == b.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Cyc(0)"
        terms = " + ".join(
            f"{c}*z{self.n}^{j}" if j else f"{c}" for j, c in sorted(self.coeffs.items())
        )
        return f"Cyc({terms})"

    # -- field structure ----------------------------------------------------

    def embed(self, m: int) -> "Cyclotomic":
        """Rewrite with conductor m; requires n | m (zeta_n = zeta_m^(m/n))."""
        if m % self.n != 0:
            raise ValueError(f"cannot embed conductor {self.n} into {m}")
        if m == self.n:
            return self
        k = m // self.n
        return Cyclotomic(m, {j * k: c for j, c in self.coeffs.items()})

    def galois(self, s: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^s; s must be coprime to n."""
        from math import gcd

        if gcd(s, self.n) != 1:
            raise ValueError(f"galois: {s} not coprime to conductor {self.n}")
        return Cyclotomic(self.n, {(j * s) % self.n: c for j, c in self.coeffs.items()})

    def conj(self) -> "Cyclotomic":
        """Complex conjugation (zeta -> zeta^-1)."""
        return self.galois(-1 % self.n) if self.n > 1 else self

    def trace(self) -> Fraction:
        """Trace from Q(zeta_n) down to Q, extended Q-linearly from trace_root."""
        return sum(
            (c * trace_root(self.n, j) for j, c in self.coeffs.items()), Fraction(0)
        )

    def canonicalize(self) -> "Cyclotomic":
        """Re-normalize (idempotent; representation is already canonical per conductor)."""
        return Cyclotomic(self.n, dict(self.coeffs))

    def is_rational(self) -> bool:
        return all(j == 0 for j in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def is_integral_rational(self) -> bool:
        return self.is_rational() and self.to_rational().denominator == 1


def _reduce(n: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce a zeta_n-polynomial modulo Phi_n into the power basis."""
    deg = euler_phi(n)
    phi = cyclotomic_polynomial(n)
    # exponents wrap mod n first (zeta_n^n = 1)
    work: dict[int, Fraction] = {}
    for j, c in coeffs.items():
        if not c:
            continue
        k = j % n
        s = work.get(k, Fraction(0)) + c
        if s:
            work[k] = s
        else:
            work.pop(k, None)
    out: dict[int, Fraction] = {}
    while work:
        j = max(work)
        c = work.pop(j)
        if j < deg:
            out[j] = c
            continue
        # zeta^j = -zeta^(j-deg) * (phi[0] + ... + phi[deg-1]*zeta^(deg-1))
        base = j - deg
        for i in range(deg):
            if phi[i]:
                k = base + i
                s = work.get(k, Fraction(0)) - c * phi[i]
                if s:
                    work[k] = s
                else:
                    work.pop(k, None)
    return out


# module-level aliases matching the operation names used elsewhere
def add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def scale(a: Cyclotomic, r) -> Cyclotomic:
    return a.scale(r)


def embed(a: Cyclotomic, m: int) -> Cyclotomic:
    return a.embed(m)


def galois(a: Cyclotomic, s: int) -> Cyclotomic:
    return a.galois(s)


def trace(a: Cyclotomic) -> Fraction:
    return a.trace()


def canonicalize(a: Cyclotomic) -> Cyclotomic:
    return a.canonicalize()

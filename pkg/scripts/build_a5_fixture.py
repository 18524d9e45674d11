#!/usr/bin/env python3
"""Derive and emit the A5 character-table fixture (ordinary only).

The table is reconstructed from the permutation action on 5 points plus the
two-dimensional family on the order-5 classes, then certified by the same
gates as the larger fixture: exact first and second orthogonality, power-map
consistency with cycle types, and integral non-negative eigenvalue
multiplicities for every element in every character.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from helpkit.arith import Cyclotomic, divisors, factorize

GROUP_ORDER = 60
EXPONENT = 30

CLASS_NAMES = ["1a", "2a", "3a", "5a", "5b"]
CLASS_INDEX = {c: i for i, c in enumerate(CLASS_NAMES)}
CLASS_ORDERS = {"1a": 1, "2a": 2, "3a": 3, "5a": 5, "5b": 5}
SIZES = {"1a": 1, "2a": 15, "3a": 20, "5a": 12, "5b": 12}
CYCLE_TYPES = {
    "1a": {1: 5},
    "2a": {1: 1, 2: 2},
    "3a": {1: 2, 3: 1},
    "5a": {5: 1},
    "5b": {5: 1},
}
POWER_MAPS = {
    2: {"1a": "1a", "2a": "1a", "3a": "3a", "5a": "5b", "5b": "5a"},
    3: {"1a": "1a", "2a": "2a", "3a": "1a", "5a": "5b", "5b": "5a"},
    5: {"1a": "1a", "2a": "2a", "3a": "3a", "5a": "1a", "5b": "1a"},
}


def rat(x):
    return Cyclotomic.from_rational(x)


def zeta(n, j=1):
    return Cyclotomic.zeta(n, j)


# (1+sqrt5)/2 = -(zeta5^2 + zeta5^3); its conjugate flavor is -(zeta5 + zeta5^4)
GOLD = -(zeta(5, 2) + zeta(5, 3))
GOLD_BAR = -(zeta(5, 1) + zeta(5, 4))

TABLE = {
    "chi1": {"1a": rat(1), "2a": rat(1), "3a": rat(1), "5a": rat(1), "5b": rat(1)},
    "chi2": {"1a": rat(3), "2a": rat(-1), "3a": rat(0), "5a": GOLD, "5b": GOLD_BAR},
    "chi3": {"1a": rat(3), "2a": rat(-1), "3a": rat(0), "5a": GOLD_BAR, "5b": GOLD},
    "chi4": {"1a": rat(4), "2a": rat(0), "3a": rat(1), "5a": rat(-1), "5b": rat(-1)},
    "chi5": {"1a": rat(5), "2a": rat(1), "3a": rat(-1), "5a": rat(0), "5b": rat(0)},
}
IDS = ["chi1", "chi2", "chi3", "chi4", "chi5"]


def power_class_name(c, d):
    k = CLASS_ORDERS[c]
    d %= k
    if d == 0:
        return "1a"
    for p, a in factorize(d):
        for _ in range(a):
            c = POWER_MAPS[p][c]
    return c


def inner(a, b):
    tot = rat(0)
    for c in CLASS_NAMES:
        tot = tot + (a[c] * b[c].conj()).scale(SIZES[c])
    return tot.to_rational() / GROUP_ORDER


def mu_value(lookup, c, k, l):
    tot = Fraction(0)
    for d in divisors(k):
        m = k // d
        val = lookup(power_class_name(c, d))
        if val.n != m:
            assert m % val.n == 0
            val = val.embed(m)
        if m > 1:
            val = val * zeta(m, (-l) % m)
        tot += val.trace()
    return tot


def cyc_to_json(v):
    if v.is_rational():
        r = v.to_rational()
        return int(r) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    return {"n": v.n, "c": {str(j): (str(c.numerator) if c.denominator == 1
                                     else f"{c.numerator}/{c.denominator}")
                            for j, c in sorted(v.coeffs.items())}}


def main():
    assert sum(SIZES.values()) == GROUP_ORDER
    for c, ct in CYCLE_TYPES.items():
        assert sum(k * v for k, v in ct.items()) == 5
        assert lcm(*ct.keys()) == CLASS_ORDERS[c]
    for p, pm in POWER_MAPS.items():
        for c in CLASS_NAMES:
            m = CLASS_ORDERS[c]
            assert CLASS_ORDERS[pm[c]] == m // gcd(m, p)
            predicted = {}
            for length, cnt in CYCLE_TYPES[c].items():
                g = gcd(length, p)
                predicted[length // g] = predicted.get(length // g, 0) + cnt * g
            assert predicted == CYCLE_TYPES[pm[c]], (p, c)
    # orthogonality
    for i, a in enumerate(IDS):
        for b in IDS[i:]:
            want = 1 if a == b else 0
            assert inner(TABLE[a], TABLE[b]) == want, (a, b)
    for i, c in enumerate(CLASS_NAMES):
        for d in CLASS_NAMES[i:]:
            tot = rat(0)
            for cid in IDS:
                tot = tot + TABLE[cid][c] * TABLE[cid][d].conj()
            want = GROUP_ORDER // SIZES[c] if c == d else 0
            assert tot == want, (c, d)
    # eigenvalue multiplicities of every element in every character
    for c in CLASS_NAMES[1:]:
        k = CLASS_ORDERS[c]
        for cid in IDS:
            for l in range(k):
                mu = mu_value(lambda cl: TABLE[cid][cl], c, k, l)
                assert mu.denominator == 1 and mu % k == 0 and mu >= 0, (c, cid, l)
    print("A5 table validated")

    doc = {
        "group": {"name": "A5", "order": str(GROUP_ORDER), "exponent": EXPONENT},
        "classes": [{"name": c, "order": CLASS_ORDERS[c], "size": str(SIZES[c])}
                    for c in CLASS_NAMES],
        "powerMaps": {str(p): [CLASS_INDEX[POWER_MAPS[p][c]] for c in CLASS_NAMES]
                      for p in sorted(POWER_MAPS)},
        "characters": [{"id": cid,
                        "values": [cyc_to_json(TABLE[cid][c]) for c in CLASS_NAMES]}
                       for cid in IDS],
        "brauer": [],
    }
    out = Path(__file__).resolve().parent.parent / "fixtures" / "a5.json"
    out.write_text(json.dumps(doc, indent=1))
    print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()

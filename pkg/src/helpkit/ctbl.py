"""Character-table data model, fixture parsing and validation.

Tables are ingested from a portable JSON format (see `parse_table`), fully
canonicalized into exact cyclotomic values, and validated against the first
and second orthogonality relations before anything downstream trusts them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import Cyclotomic, factorize, prime_divisors


class ParseError(ValueError):
    """Raised for malformed or structurally inconsistent fixture documents."""


@dataclass(frozen=True)
class ClassInfo:
    name: str
    element_order: int
    size: int


@dataclass(frozen=True)
class Character:
    id: str
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> int:
        return int(self.values[0].to_rational())


@dataclass(frozen=True)
class PrimeGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]  # each edge stored as a sorted pair

    def has_edge(self, p: int, q: int) -> bool:
        return tuple(sorted((p, q))) in self.edges


@dataclass
class CharacterTable:
    group_name: str
    group_order: int
    exponent: int
    classes: tuple[ClassInfo, ...]
    power_maps: dict[int, tuple[int, ...]]
    characters: tuple[Character, ...]
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {c.name: i for i, c in enumerate(self.classes)}

    def class_index(self, name: str) -> int:
        return self._index[name]

    def class_named(self, name: str) -> ClassInfo:
        return self.classes[self._index[name]]

    def character(self, char_id: str) -> Character:
        for ch in self.characters:
            if ch.id == char_id:
                return ch
        raise KeyError(char_id)

    def value(self, char_id: str, class_name: str) -> Cyclotomic:
        return self.character(char_id).values[self._index[class_name]]


@dataclass
class BrauerTable:
    p: int
    regular_classes: tuple[str, ...]
    characters: tuple[Character, ...]
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {c: i for i, c in enumerate(self.regular_classes)}

    def character(self, char_id: str) -> Character:
        for ch in self.characters:
            if ch.id == char_id:
                return ch
        raise KeyError(char_id)

    def value(self, char_id: str, class_name: str) -> Cyclotomic:
        return self.character(char_id).values[self._index[class_name]]


@dataclass
class ValidationReport:
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def _parse_int(x, what: str) -> int:
    if isinstance(x, bool):
        raise ParseError(f"{what}: expected integer, got bool")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            raise ParseError(f"{what}: bad integer string {x!r}") from None
    raise ParseError(f"{what}: expected integer, got {type(x).__name__}")


def _parse_rational(x, what: str) -> Fraction:
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            raise ParseError(f"{what}: bad rational {x!r}") from None
    raise ParseError(f"{what}: expected rational, got {type(x).__name__}")


def _parse_cyc(x, what: str) -> Cyclotomic:
    if isinstance(x, dict):
        if set(x) != {"n", "c"}:
            raise ParseError(f"{what}: cyclotomic object needs keys n, c")
        n = _parse_int(x["n"], f"{what}.n")
        if n < 1:
            raise ParseError(f"{what}: conductor must be positive")
        coeffs = {}
        for j, c in x["c"].items():
            coeffs[_parse_int(j, f"{what}.exponent")] = _parse_rational(c, f"{what}.coeff")
        return Cyclotomic(n, coeffs)
    return Cyclotomic.from_rational(_parse_rational(x, what))


def parse_table(text: str) -> tuple[CharacterTable, list[BrauerTable]]:
    """Parse the JSON fixture format; canonicalizes all values exactly."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from None
    try:
        grp = doc["group"]
        name = grp["name"]
        order = _parse_int(grp["order"], "group.order")
        exponent = _parse_int(grp["exponent"], "group.exponent")
        class_docs = doc["classes"]
        pm_doc = doc["powerMaps"]
        char_docs = doc["characters"]
        brauer_docs = doc.get("brauer", [])
    except (KeyError, TypeError) as e:
        raise ParseError(f"missing or malformed section: {e}") from None

    classes = []
    seen = set()
    for i, cd in enumerate(class_docs):
        cname = cd["name"]
        if cname in seen:
            raise ParseError(f"duplicate class name {cname!r}")
        seen.add(cname)
        classes.append(ClassInfo(cname, _parse_int(cd["order"], "class.order"),
                                 _parse_int(cd["size"], "class.size")))
    if not classes or classes[0].element_order != 1 or classes[0].size != 1:
        raise ParseError("first class must be the identity (order 1, size 1)")
    if sum(c.size for c in classes) != order:
        raise ParseError("class sizes do not sum to the group order")
    if order % exponent != 0:
        raise ParseError("exponent does not divide the group order")
    for c in classes:
        if exponent % c.element_order != 0:
            raise ParseError(f"class {c.name}: element order does not divide exponent")

    power_maps: dict[int, tuple[int, ...]] = {}
    for p_str, lst in pm_doc.items():
        p = _parse_int(p_str, "powerMaps key")
        if len(lst) != len(classes):
            raise ParseError(f"power map for {p}: wrong length")
        idxs = tuple(_parse_int(x, "power map entry") for x in lst)
        for i, j in enumerate(idxs):
            if not 0 <= j < len(classes):
                raise ParseError(f"power map for {p}: index {j} out of range")
            m = classes[i].element_order
            if classes[j].element_order != m // gcd(m, p):
                raise ParseError(
                    f"power map for {p}: class {classes[i].name} maps to "
                    f"{classes[j].name} of wrong order")
        power_maps[p] = idxs
    for p in prime_divisors(exponent):
        if p not in power_maps:
            raise ParseError(f"missing power map for prime {p}")

    def parse_char(cd, class_list, what):
        cid = cd["id"]
        vals = cd["values"]
        if len(vals) != len(class_list):
            raise ParseError(f"{what} {cid}: expected {len(class_list)} values")
        out = []
        for cls, v in zip(class_list, vals):
            cv = _parse_cyc(v, f"{what} {cid} at {cls.name}")
            if cv.n > 1 and cls.element_order % cv.n != 0:
                raise ParseError(
                    f"{what} {cid} at {cls.name}: conductor {cv.n} does not "
                    f"divide the element order {cls.element_order}")
            out.append(cv)
        return Character(cid, tuple(out))

    characters = []
    cids = set()
    for cd in char_docs:
        ch = parse_char(cd, classes, "character")
        if ch.id in cids:
            raise ParseError(f"duplicate character id {ch.id!r}")
        cids.add(ch.id)
        deg = ch.values[0]
        if not deg.is_integral_rational() or deg.to_rational() < 1:
            raise ParseError(f"character {ch.id}: degree must be a positive integer")
        characters.append(ch)
    if len(characters) != len(classes):
        raise ParseError("table is not square (#characters != #classes)")

    table = CharacterTable(name, order, exponent, tuple(classes), power_maps,
                           tuple(characters))

    brauers = []
    for bd in brauer_docs:
        p = _parse_int(bd["p"], "brauer.p")
        regular = [c for c in classes if c.element_order % p != 0]
        bchars = []
        bids = set()
        for cd in bd["characters"]:
            ch = parse_char(cd, regular, f"brauer(p={p}) character")
            if ch.id in bids:
                raise ParseError(f"duplicate Brauer character id {ch.id!r}")
            bids.add(ch.id)
            bchars.append(ch)
        brauers.append(BrauerTable(p, tuple(c.name for c in regular), tuple(bchars)))
    return table, brauers


def validate(table: CharacterTable,
             brauers: tuple[BrauerTable, ...] | list[BrauerTable] = ()) -> ValidationReport:
    """First/second orthogonality, power-map consistency, squareness."""
    failures: list[str] = []
    n = len(table.classes)
    chars = table.characters

    if len(chars) != n:
        failures.append(f"table not square: {len(chars)} characters, {n} classes")

    if sum(c.size for c in table.classes) != table.group_order:
        failures.append("class sizes do not sum to the group order")

    # first orthogonality: sum_C |C| chi_i(C) conj(chi_j(C)) = delta_ij |G|
    for i in range(len(chars)):
        for j in range(i, len(chars)):
            tot = Cyclotomic.from_rational(0)
            for k, cls in enumerate(table.classes):
                tot = tot + (chars[i].values[k] * chars[j].values[k].conj()).scale(cls.size)
            want = table.group_order if i == j else 0
            if tot != want:
                failures.append(
                    f"first orthogonality fails for ({chars[i].id}, {chars[j].id})")

    # second orthogonality: sum_chi chi(C) conj(chi(D)) = delta_CD |C_G(C)|
    for a in range(n):
        for b in range(a, n):
            tot = Cyclotomic.from_rational(0)
            for ch in chars:
                tot = tot + ch.values[a] * ch.values[b].conj()
            want = table.group_order // table.classes[a].size if a == b else 0
            if tot != want:
                failures.append(
                    f"second orthogonality fails for classes "
                    f"({table.classes[a].name}, {table.classes[b].name})")

    # power-map order consistency
    for p, pm in table.power_maps.items():
        for i, cls in enumerate(table.classes):
            tgt = table.classes[pm[i]]
            if tgt.element_order != cls.element_order // gcd(cls.element_order, p):
                failures.append(
                    f"power map {p}: {cls.name} -> {tgt.name} violates order rule")

    # Brauer tables: structural checks only
    for bt in brauers:
        expect = tuple(c.name for c in table.classes if c.element_order % bt.p != 0)
        if bt.regular_classes != expect:
            failures.append(f"brauer p={bt.p}: regular class list mismatch")
        for ch in bt.characters:
            if len(ch.values) != len(bt.regular_classes):
                failures.append(f"brauer p={bt.p} {ch.id}: wrong value count")

    return ValidationReport(failures)


def spectrum(table: CharacterTable) -> set[int]:
    """Set of element orders represented in the table."""
    return {c.element_order for c in table.classes}


def prime_graph(table: CharacterTable) -> PrimeGraph:
    """Vertices: primes dividing |G|; edge p-q iff some element order is divisible by pq."""
    vertices = frozenset(prime_divisors(table.group_order))
    edges = set()
    for c in table.classes:
        ps = prime_divisors(c.element_order)
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                edges.add(tuple(sorted((ps[i], ps[j]))))
    return PrimeGraph(vertices, frozenset(edges))


def power_class(table: CharacterTable, class_idx: int, d: int) -> int:
    """Index of the class of g^d for g in the class with index class_idx."""
    if d < 1:
        raise ValueError("d must be >= 1")
    k = table.classes[class_idx].element_order
    d %= k
    if d == 0:
        return 0
    i = class_idx
    for p, a in factorize(d):
        if p not in table.power_maps:
            raise KeyError(f"missing power map for prime {p}")
        for _ in range(a):
            i = table.power_maps[p][i]
    return i

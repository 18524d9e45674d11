"""Per-order solving pipeline and the prime-graph corollary.

For a candidate order k the solver recursively resolves all proper divisor
orders first. A unit of order k powers to units of every divisor order, so an
excluded divisor order excludes k outright; otherwise each consistent choice
of candidates for the prime-power quotients u^p defines a power profile, the
induced constraint system is enumerated exactly, and the union of solutions
over profiles is classified: a unit is rationally conjugate to a group
element iff its whole power lineage has single-class support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .arith import divisors, prime_divisors
from .constraints import (CharRef, ConstraintSystem, PowerProfile, SelectionError,
                          allowed_classes, build_system)
from .ctbl import BrauerTable, CharacterTable, PrimeGraph, prime_graph, spectrum
from .solver import CapExceeded, Unbounded, enumerate_solutions

EXCLUDED = "excluded"
RATIONALLY_CONJUGATE = "rationally-conjugate"
INDETERMINATE = "indeterminate"


class ProfileExplosion(Exception):
    def __init__(self, k: int, count: int, cap: int):
        super().__init__(f"order {k}: {count} power profiles exceed the cap {cap}")
        self.order = k


@dataclass(frozen=True)
class UnitCandidate:
    """An order-k augmentation tuple with its power-profile lineage."""
    order: int
    augmentations: tuple[tuple[str, int], ...]  # sorted (class, value), zeros dropped
    sub: tuple[tuple[int, "UnitCandidate"], ...]  # (prime, candidate of order k/p)

    @property
    def augmentation_map(self) -> dict[str, int]:
        return dict(self.augmentations)

    def sub_candidate(self, p: int) -> "UnitCandidate":
        for q, cand in self.sub:
            if q == p:
                return cand
        raise KeyError(p)

    def power_augmentations(self, d: int) -> dict[str, int]:
        """Augmentation map of u^d, composed along the prime factorization of d."""
        if self.order % d != 0:
            raise ValueError(f"{d} does not divide the order {self.order}")
        if d == 1:
            return self.augmentation_map
        for p in prime_divisors(d):
            return self.sub_candidate(p).power_augmentations(d // p)
        raise AssertionError

    def single_support_lineage(self) -> bool:
        """Every power u^d (d | k) has exactly one nonzero augmentation."""
        if len(self.augmentations) != 1:
            return False
        return all(cand.single_support_lineage() for _, cand in self.sub)


def identity_candidate(table: CharacterTable) -> UnitCandidate:
    return UnitCandidate(1, ((table.classes[0].name, 1),), ())


@dataclass
class OrderVerdict:
    order: int
    status: str
    candidates: list[UnitCandidate]
    diagnostics: dict = field(default_factory=dict)

    @property
    def solutions(self) -> list[tuple[int, ...]]:
        """Deduplicated augmentation tuples over the order's variable space."""
        return self.diagnostics.get("solutions", [])


@dataclass
class KimmerleReport:
    graph: PrimeGraph
    critical: list[tuple[int, str]]  # (p*q, verdict status)
    holds: bool


def candidate_orders(table: CharacterTable) -> list[tuple[int, bool]]:
    """Divisors k > 1 of the exponent, ascending, flagged with k in spectrum."""
    spec = spectrum(table)
    return [(d, d in spec) for d in divisors(table.exponent) if d > 1]


def power_profiles(k: int, divisor_verdicts: dict[int, OrderVerdict],
                   cap: int = 10**4,
                   identity: UnitCandidate | None = None) -> list:
    """All mutually consistent candidate selections for the u^p, as
    (PowerProfile, {prime: candidate}) pairs."""
    identity = identity or UnitCandidate(1, (("1a", 1),), ())
    primes = prime_divisors(k)
    pools = []
    for p in primes:
        sub = divisor_verdicts[k // p] if k // p > 1 else None
        pools.append([identity] if sub is None else sub.candidates)
    total = 1
    for pool in pools:
        total *= max(1, len(pool))
    if total > cap:
        raise ProfileExplosion(k, total, cap)

    out = []
    for picks in product(*pools):
        chosen = dict(zip(primes, picks))
        entries: dict[int, dict[str, int]] = {}
        consistent = True
        for d in divisors(k):
            if d == 1:
                continue
            maps = []
            for p in primes:
                if d % p == 0:
                    maps.append(chosen[p].power_augmentations(d // p))
            if not maps:
                continue
            if any(m != maps[0] for m in maps[1:]):
                consistent = False
                break
            entries[d] = maps[0]
        if consistent:
            out.append((PowerProfile(k, entries), chosen))
    return out


class HelpEngine:
    """Session object: one table, one selection mode, memoized verdicts."""

    def __init__(self, table: CharacterTable, brauers=(), mode: str = "full",
                 manifest: dict | None = None, solution_cap: int = 10**6,
                 profile_cap: int = 10**4, workers: int = 1):
        self.table = table
        self.brauers = tuple(brauers)
        self.mode = mode
        self.manifest = manifest or {}
        self.solution_cap = solution_cap
        self.profile_cap = profile_cap
        self.workers = workers
        self._verdicts: dict[int, OrderVerdict] = {}

    # -- selection ----------------------------------------------------------

    def selection(self, k: int) -> list[CharRef]:
        if self.mode == "full":
            refs = [CharRef(ch.id, 0) for ch in self.table.characters]
            for bt in self.brauers:
                if gcd(bt.p, k) == 1:
                    refs.extend(CharRef(ch.id, bt.p) for ch in bt.characters)
            return refs
        tokens = self.manifest.get(str(k)) or self.manifest.get(k)
        if tokens is None:
            return [CharRef(ch.id, 0) for ch in self.table.characters]
        refs = []
        for tok in tokens:
            if tok == "ordinary":
                refs.extend(CharRef(ch.id, 0) for ch in self.table.characters)
            else:
                refs.append(CharRef.parse(tok))
        return refs

    # -- main recursion -----------------------------------------------------

    def solve_order(self, k: int) -> OrderVerdict:
        if k < 2:
            raise ValueError("k must be >= 2")
        if k in self._verdicts:
            return self._verdicts[k]

        diagnostics: dict = {"profiles": 0, "per_profile": [], "solutions": []}

        # resolve divisor orders first; any excluded divisor excludes k
        for d in divisors(k):
            if 1 < d < k:
                sub = self.solve_order(d)
                if sub.status == EXCLUDED:
                    diagnostics["excluded_by_divisor"] = d
                    verdict = OrderVerdict(k, EXCLUDED, [], diagnostics)
                    self._verdicts[k] = verdict
                    return verdict

        profiles = power_profiles(
            k, {d: self._verdicts[d] for d in divisors(k) if 1 < d < k},
            cap=self.profile_cap, identity=identity_candidate(self.table))
        diagnostics["profiles"] = len(profiles)

        selection = self.selection(k)
        space = allowed_classes(self.table, k)
        candidates: list[UnitCandidate] = []
        seen_solutions: set[tuple[int, ...]] = set()
        for profile, chosen in profiles:
            system = build_system(self.table, self.brauers, k, profile, selection)
            sols = enumerate_solutions(system, cap=self.solution_cap,
                                       workers=self.workers)
            diagnostics["per_profile"].append(
                {"u^p": {p: dict(c.augmentations) for p, c in chosen.items()},
                 "count": len(sols), "solutions": sols})
            for sol in sols:
                augs = tuple(sorted((name, v) for name, v in
                                    zip(space.classes, sol) if v))
                candidates.append(UnitCandidate(
                    k, augs, tuple(sorted(chosen.items()))))
                seen_solutions.add(sol)
        diagnostics["solutions"] = sorted(seen_solutions)
        diagnostics["variables"] = list(space.classes)

        if not candidates:
            status = EXCLUDED
        elif all(c.single_support_lineage() for c in candidates):
            status = RATIONALLY_CONJUGATE
        else:
            status = INDETERMINATE
        verdict = OrderVerdict(k, status, candidates, diagnostics)
        self._verdicts[k] = verdict
        return verdict

    # -- reports ------------------------------------------------------------

    def kimmerle_check(self) -> KimmerleReport:
        graph = prime_graph(self.table)
        primes = sorted(graph.vertices)
        critical = []
        holds = True
        for i in range(len(primes)):
            for j in range(i + 1, len(primes)):
                p, q = primes[i], primes[j]
                if graph.has_edge(p, q):
                    continue
                if self.table.exponent % (p * q) != 0:
                    continue  # excluded outright: the order cannot divide exp(G)
                verdict = self.solve_order(p * q)
                critical.append((p * q, verdict.status))
                if verdict.status != EXCLUDED:
                    holds = False
        critical.sort()
        return KimmerleReport(graph, critical, holds)

    def spectrum_sweep(self, include_all_divisors: bool = False) -> list[OrderVerdict]:
        """Verdicts for the in-scope orders (spectrum + critical products)."""
        spec = spectrum(self.table)
        orders = sorted(k for k in spec if k > 1)
        graph = prime_graph(self.table)
        primes = sorted(graph.vertices)
        for i in range(len(primes)):
            for j in range(i + 1, len(primes)):
                p, q = primes[i], primes[j]
                if not graph.has_edge(p, q) and self.table.exponent % (p * q) == 0:
                    if p * q not in orders:
                        orders.append(p * q)
        if include_all_divisors:
            orders = [d for d in divisors(self.table.exponent) if d > 1]
        orders.sort()
        return [self.solve_order(k) for k in orders]

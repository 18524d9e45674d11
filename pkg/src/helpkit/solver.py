"""Exact enumeration of the integer solutions of a constraint system.

Bounds: the augmentation-sum equality is substituted out exactly, then small
systems are projected by literal Fourier-Motzkin elimination. Large systems
(hundreds of eigenvalue-multiplicity rows) would blow up under pairwise
elimination, so they are boxed by an equally exact two-step argument: each
multiplicity value is confined to [0, k*degree], and inverting a full-rank
subset of the forms confines the augmentations; interval propagation then
tightens to a fixpoint. Enumeration is a deterministic depth-first scan with
incremental interval pruning, re-verified against the original constraints.
`brute_force` is the independent oracle: a plain box scan with the same
filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd

from .constraints import ConstraintSystem

_FM_ROW_LIMIT = 64
_FM_GROWTH_LIMIT = 5000


class Unbounded(Exception):
    def __init__(self, variable: str):
        super().__init__(f"no finite bound for variable {variable}")
        self.variable = variable


class CapExceeded(Exception):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} solutions")
        self.cap = cap


@dataclass(frozen=True)
class Bounds:
    intervals: tuple[tuple[int, int], ...]

    @property
    def infeasible(self) -> bool:
        return any(lo > hi for lo, hi in self.intervals)

    def box_points(self) -> int:
        total = 1
        for lo, hi in self.intervals:
            if hi < lo:
                return 0
            total *= hi - lo + 1
        return total


def _inequalities(system: ConstraintSystem) -> list[tuple[tuple[int, ...], int]]:
    """All constraints as rows (a, c) meaning a . x + c >= 0."""
    n = len(system.space.classes)
    rows = []
    for mc in system.constraints:
        a = mc.form.coeffs
        rows.append((a, mc.form.constant))
        rows.append((tuple(-x for x in a), mc.upper - mc.form.constant))
    rows.append((tuple(1 for _ in range(n)), -1))    # sum nu >= 1
    rows.append((tuple(-1 for _ in range(n)), 1))    # sum nu <= 1
    return rows


def _normalize(row):
    a, c = row
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    if g > 1 and c % g == 0:
        return (tuple(x // g for x in a), c // g)
    return row


def _dedupe(rows):
    """Keep only the strongest row per direction (a.x + c >= 0: minimal c)."""
    best: dict[tuple[int, ...], int] = {}
    for a, c in rows:
        a, c = _normalize((a, c))
        if a not in best or c < best[a]:
            best[a] = c
    return [(a, c) for a, c in best.items()]


def _eliminate(rows, j):
    """One Fourier-Motzkin step removing coordinate j."""
    pos, neg, rest = [], [], []
    for a, c in rows:
        if a[j] > 0:
            pos.append((a, c))
        elif a[j] < 0:
            neg.append((a, c))
        else:
            rest.append((a, c))
    out = list(rest)
    for ap, cp in pos:
        for an, cn in neg:
            f_p, f_n = -an[j], ap[j]
            a = tuple(f_p * x + f_n * y for x, y in zip(ap, an))
            c = f_p * cp + f_n * cn
            out.append((a, c))
    return _dedupe(out)


def _substitute_sum(rows, n, pivot):
    """Exact substitution x_pivot = 1 - sum of the other coordinates."""
    out = []
    for a, c in rows:
        ap = a[pivot]
        out.append((tuple(x - ap for i, x in enumerate(a) if i != pivot), c + ap))
    return _dedupe(out)


def _fm_interval(rows, tgt, nvars):
    """Project onto coordinate tgt by eliminating all others; None if too big."""
    for j in range(nvars):
        if j != tgt:
            rows = _eliminate(rows, j)
            if len(rows) > _FM_GROWTH_LIMIT:
                return None
    lo, hi = None, None
    for a, c in rows:
        coef = a[tgt]
        if coef == 0:
            if c < 0:
                return (1, 0)  # infeasible
            continue
        bound = Fraction(-c, coef)
        if coef > 0:
            v = ceil(bound)
            lo = v if lo is None else max(lo, v)
        else:
            v = floor(bound)
            hi = v if hi is None else min(hi, v)
    return (lo, hi)


def _propagate(rows, intervals, sweeps=40):
    """Interval tightening to (near) fixpoint; None bounds mean unbounded.

    From a.x + c >= 0: a_j x_j >= -(c + max of the rest over the box).
    """
    n = len(intervals)
    intervals = [list(iv) for iv in intervals]
    for _ in range(sweeps):
        changed = False
        for a, c in rows:
            for j in range(n):
                if a[j] == 0:
                    continue
                rest = Fraction(c)
                ok = True
                for i in range(n):
                    if i == j or a[i] == 0:
                        continue
                    lo, hi = intervals[i]
                    src = hi if a[i] > 0 else lo
                    if src is None:
                        ok = False
                        break
                    rest += a[i] * src
                if not ok:
                    continue
                bound = -rest / Fraction(a[j])
                if a[j] > 0:
                    v = ceil(bound)
                    if intervals[j][0] is None or v > intervals[j][0]:
                        intervals[j][0] = v
                        changed = True
                else:
                    v = floor(bound)
                    if intervals[j][1] is None or v < intervals[j][1]:
                        intervals[j][1] = v
                        changed = True
        if not changed:
            break
    return [tuple(iv) for iv in intervals]


def _invert_bounds(system: ConstraintSystem, nsub, pivot):
    """Box the substituted coordinates by inverting a full-rank subset of forms.

    Each form value a.x + c lies in [0, upper]; Gaussian elimination selects
    independent rows and expresses x exactly in those values.
    """
    rows = []
    for mc in system.constraints:
        a = mc.form.coeffs
        ap = a[pivot]
        sub = tuple(Fraction(x - ap) for i, x in enumerate(a) if i != pivot)
        rows.append((sub, Fraction(mc.form.constant + ap), mc.upper))
    # Gaussian elimination to pick nsub independent rows
    chosen = []
    basis: list[tuple] = []
    for row in rows:
        vec = list(row[0])
        for piv_idx, piv_vec in basis:
            f = vec[piv_idx]
            if f:
                vec = [x - f * y for x, y in zip(vec, piv_vec)]
        nz = next((i for i, x in enumerate(vec) if x), None)
        if nz is None:
            continue
        scale = vec[nz]
        basis.append((nz, [x / scale for x in vec]))
        chosen.append(row)
        if len(chosen) == nsub:
            break
    if len(chosen) < nsub:
        return None
    # solve A x = t - c with t_i in [0, U_i]: invert A exactly
    a_mat = [list(r[0]) for r in chosen]
    inv = _invert(a_mat)
    if inv is None:
        return None
    out = []
    for j in range(nsub):
        lo = Fraction(0)
        hi = Fraction(0)
        for i in range(nsub):
            w = inv[j][i]
            tlo, thi = -chosen[i][1], chosen[i][2] - chosen[i][1]  # t - c range
            if w >= 0:
                lo += w * tlo
                hi += w * thi
            else:
                lo += w * thi
                hi += w * tlo
        out.append((ceil(lo), floor(hi)))
    return out


def _invert(a):
    n = len(a)
    aug = [list(map(Fraction, a[i])) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        sel = next((r for r in range(col, n) if aug[r][col]), None)
        if sel is None:
            return None
        aug[col], aug[sel] = aug[sel], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def fm_bounds(system: ConstraintSystem) -> Bounds:
    """Exact per-variable integer intervals containing every solution."""
    n = len(system.space.classes)
    base = _dedupe(_inequalities(system))
    if n == 1:
        # the augmentation sum pins the single variable; constraints may veto it
        point = (1,)
        return Bounds(((1, 1),) if system.is_solution(point) else ((1, 0),))

    intervals: list[tuple] = []
    for target in range(n):
        pivot = (target + 1) % n
        rows = _substitute_sum(base, n, pivot)
        tgt = target if target < pivot else target - 1
        iv = None
        if len(rows) <= _FM_ROW_LIMIT:
            iv = _fm_interval(rows, tgt, n - 1)
        if iv is None:
            iv = (None, None)
        intervals.append((tgt, pivot, rows, iv))

    # resolve any unbounded coordinates with the inversion + propagation path
    final: list[tuple] = []
    for target, (tgt, pivot, rows, iv) in enumerate(intervals):
        if iv[0] is not None and iv[1] is not None:
            final.append(iv)
            continue
        sub_iv = [(None, None)] * (n - 1)
        inv_box = _invert_bounds(system, n - 1, pivot)
        if inv_box is not None:
            sub_iv = [tuple(b) for b in inv_box]
        sub_iv = _propagate(rows, sub_iv)
        lo, hi = sub_iv[tgt]
        los = [x for x in (lo, iv[0]) if x is not None]
        his = [x for x in (hi, iv[1]) if x is not None]
        if not los or not his:
            raise Unbounded(system.space.classes[target])
        final.append((max(los), min(his)))
    return Bounds(tuple(final))


def _scan(system: ConstraintSystem, bounds: Bounds, lo0: int, hi0: int,
          budget: list[int]) -> list[tuple[int, ...]]:
    """DFS over the box; incremental per-row prefix sums plus suffix intervals."""
    n = len(system.space.classes)
    rows = _dedupe(_inequalities(system))
    ivs = bounds.intervals
    nrows = len(rows)
    # static suffix interval of sum_{i >= depth} a_i x_i over the box
    suf_lo = [[0] * (n + 1) for _ in range(nrows)]
    suf_hi = [[0] * (n + 1) for _ in range(nrows)]
    for r, (a, c) in enumerate(rows):
        for i in range(n - 1, -1, -1):
            lo, hi = ivs[i]
            if a[i] >= 0:
                lo_c, hi_c = a[i] * lo, a[i] * hi
            else:
                lo_c, hi_c = a[i] * hi, a[i] * lo
            suf_lo[r][i] = suf_lo[r][i + 1] + lo_c
            suf_hi[r][i] = suf_hi[r][i + 1] + hi_c

    prefix = [c for _, c in rows]
    out = []
    point = [0] * n

    def rec(depth, running_sum):
        if budget[0] < 0:
            return
        if depth == n:
            if system.is_solution(tuple(point)):
                out.append(tuple(point))
                budget[0] -= 1
            return
        lo, hi = ivs[depth]
        if depth == 0:
            lo, hi = max(lo, lo0), min(hi, hi0)
        if depth == n - 1:
            v = 1 - running_sum
            if lo <= v <= hi:
                point[depth] = v
                saved = [prefix[r] for r in range(nrows)]
                for r, (a, _) in enumerate(rows):
                    prefix[r] += a[depth] * v
                rec(depth + 1, running_sum + v)
                for r in range(nrows):
                    prefix[r] = saved[r]
            return
        for v in range(lo, hi + 1):
            saved = [prefix[r] for r in range(nrows)]
            ok = True
            for r, (a, _) in enumerate(rows):
                prefix[r] += a[depth] * v
                if prefix[r] + suf_hi[r][depth + 1] < 0:
                    ok = False
            if ok:
                point[depth] = v
                rec(depth + 1, running_sum + v)
            for r in range(nrows):
                prefix[r] = saved[r]

    rec(0, 0)
    return out


def enumerate_solutions(system: ConstraintSystem, cap: int = 10**6,
                        workers: int = 1) -> list[tuple[int, ...]]:
    """All integer solutions, sorted lexicographically.

    `workers` only chooses how the top-level range is chunked; the merged,
    sorted output is identical for every worker count.
    """
    bounds = fm_bounds(system)
    if bounds.infeasible:
        return []
    lo, hi = bounds.intervals[0]
    chunks = max(1, min(workers, hi - lo + 1))
    edges = [lo + (hi - lo + 1) * i // chunks for i in range(chunks + 1)]
    budget = [cap]
    found: list[tuple[int, ...]] = []
    for i in range(chunks):
        a, b = edges[i], edges[i + 1] - 1
        if a > b:
            continue
        found.extend(_scan(system, bounds, a, b, budget))
        if budget[0] < 0:
            raise CapExceeded(cap)
    found.sort()
    return found


def brute_force(system: ConstraintSystem, bounds: Bounds) -> list[tuple[int, ...]]:
    """Exhaustive scan of every integer point of the box; testing oracle."""
    if bounds.infeasible:
        return []
    ranges = [range(lo, hi + 1) for lo, hi in bounds.intervals]
    return sorted(p for p in product(*ranges) if system.is_solution(p))

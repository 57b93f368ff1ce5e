"""Exact finite joint distributions and the entropy identities used here.

Probabilities are exact rationals end to end; base-2 logarithms enter only
inside entropy evaluation.  All inequality checks run at absolute tolerance
1e-9 unless stated otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .errors import ValidationError, check_cap
from .reports import BoundReport, lower_report, upper_report

TOL = 1e-9
TUPLE_CAP = 10**7


@dataclass(frozen=True)
class ExactDistribution:
    """A joint distribution over value tuples with exact rational weights."""

    arity: int
    support: tuple[tuple[tuple, Fraction], ...]

    @classmethod
    def from_pairs(cls, arity: int, pairs: Iterable[tuple[Sequence, Fraction | int]]) -> "ExactDistribution":
        """Build from (tuple, weight) pairs; weights are normalized exactly."""
        table: dict[tuple, Fraction] = {}
        for values, w in pairs:
            t = tuple(values)
            if len(t) != arity:
                raise ValidationError(f"tuple {t} has length {len(t)}, expected {arity}")
            w = Fraction(w)
            if w <= 0:
                raise ValidationError(f"weight for {t} must be positive, got {w}")
            if t in table:
                raise ValidationError(f"duplicate tuple {t}")
            table[t] = w
        if not table:
            raise ValidationError("empty support")
        total = sum(table.values())
        support = tuple(sorted((t, w / total) for t, w in table.items()))
        return cls(arity=arity, support=support)

    @classmethod
    def uniform(cls, arity: int, tuples: Iterable[Sequence]) -> "ExactDistribution":
        items = list(tuples)
        return cls.from_pairs(arity, [(t, 1) for t in items])

    def marginal(self, coords: Sequence[int]) -> dict[tuple, Fraction]:
        """Exact marginal over the given coordinate subset (order-normalized)."""
        cs = tuple(sorted(set(coords)))
        if not cs:
            raise ValidationError("coordinate subset must be nonempty")
        if cs[0] < 0 or cs[-1] >= self.arity:
            raise ValidationError(f"coords {cs} outside arity {self.arity}")
        out: dict[tuple, Fraction] = {}
        for values, p in self.support:
            key = tuple(values[i] for i in cs)
            out[key] = out.get(key, Fraction(0)) + p
        return out


def _h(probs: Iterable[Fraction]) -> float:
    total = 0.0
    for p in probs:
        if p == 1:
            continue
        total += float(p) * (math.log2(p.denominator) - math.log2(p.numerator))
    return total


def entropy(dist: ExactDistribution, coords: Sequence[int] | None = None) -> float:
    """H of the marginal on coords (all coordinates when omitted), in bits."""
    if coords is None:
        coords = range(dist.arity)
    return _h(dist.marginal(coords).values())


def conditional_entropy(dist: ExactDistribution, target: Sequence[int], given: Sequence[int]) -> float:
    """H(target | given) via the chain rule H(target+given) - H(given)."""
    tset, gset = set(target), set(given)
    if not tset:
        raise ValidationError("target coordinates must be nonempty")
    if tset & gset:
        raise ValidationError(f"target and given overlap: {sorted(tset & gset)}")
    if not gset:
        return entropy(dist, target)
    return entropy(dist, sorted(tset | gset)) - entropy(dist, sorted(gset))


@dataclass(frozen=True)
class CoverSpec:
    """Index subsets I_1..I_m covering each coordinate at least k times."""

    n: int
    subsets: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValidationError(f"k must be positive, got {self.k}")
        cover = [0] * self.n
        for subset in self.subsets:
            if not subset:
                raise ValidationError("cover subsets must be nonempty")
            for i in subset:
                if not (0 <= i < self.n):
                    raise ValidationError(f"index {i} outside [0, {self.n})")
                cover[i] += 1
        short = [i for i, c in enumerate(cover) if c < self.k]
        if short:
            raise ValidationError(f"coordinates {short} covered fewer than k={self.k} times")

    @classmethod
    def leave_one_out(cls, n: int) -> "CoverSpec":
        subsets = tuple(tuple(j for j in range(n) if j != i) for i in range(n))
        return cls(n=n, subsets=subsets, k=n - 1)


def check_shearer(dist: ExactDistribution, cover: CoverSpec) -> BoundReport:
    """k * H(X_1..X_n) <= sum_j H((X_i)_{i in I_j})."""
    if cover.n != dist.arity:
        raise ValidationError(f"cover is for arity {cover.n}, distribution has {dist.arity}")
    lhs = cover.k * entropy(dist)
    rhs = sum(entropy(dist, subset) for subset in cover.subsets)
    return upper_report(
        "k * H(all)",
        lhs,
        rhs,
        "shearer inequality",
        tol=TOL,
        extra={"k": cover.k, "slack": rhs - lhs},
    )


def ordered_family_distribution(fam) -> ExactDistribution:
    """Uniform member of the family, then uniform ordering of its elements."""
    if len(fam.sets) == 0:
        raise ValidationError("family must be nonempty")
    d = fam.d
    total = len(fam.sets) * math.factorial(d)
    check_cap("ordered tuples", total, TUPLE_CAP)
    tuples = []
    for s in fam.sets:
        tuples.extend(permutations(s))
    return ExactDistribution.uniform(d, tuples)


@dataclass(frozen=True)
class KeyInequalityReport:
    """Per-step conditional support sizes s_k = 2^{H(X_k | X_1..X_{k-1})}."""

    sizes: tuple[float, ...]
    gaps: tuple[float, ...]  # s_k - s_{k+1} - 1 for k = 1..d-1
    ok: bool

    @property
    def d(self) -> int:
        return len(self.sizes)


def check_key_inequality(fam, tol: float = TOL) -> KeyInequalityReport:
    """Verify s_k >= s_{k+1} + 1 for the uniform-ordering distribution of a family."""
    dist = ordered_family_distribution(fam)
    d = fam.d
    sizes = []
    for k in range(1, d + 1):
        h = conditional_entropy(dist, [k - 1], list(range(k - 1)))
        sizes.append(2.0**h)
    gaps = tuple(sizes[k] - sizes[k + 1] - 1.0 for k in range(d - 1))
    ok = all(g >= -tol for g in gaps)
    return KeyInequalityReport(sizes=tuple(sizes), gaps=gaps, ok=ok)


def check_lemma_disjoint_support(
    dist: ExactDistribution,
    d1: Iterable[tuple],
    d2: Iterable[tuple],
    tol: float = TOL,
) -> BoundReport:
    """For (X1, X2, Y) with (Xi, Y) supported in Di and equal laws of X1, X2:
    2^{H(X1)} >= 2^{H(X1|Y)} + 2^{H(X2|Y)}.
    """
    if dist.arity != 3:
        raise ValidationError("expected a joint distribution of (X1, X2, Y)")
    part1, part2 = set(d1), set(d2)
    if part1 & part2:
        raise ValidationError("D1 and D2 must be disjoint")
    xvals = {v for (x1, x2, y), _ in dist.support for v in (x1, x2)}
    yvals = {y for (_, _, y), _ in dist.support}
    missing = {(x, y) for x in xvals for y in yvals} - part1 - part2
    if missing:
        raise ValidationError(f"D1 and D2 do not cover the product of value sets: {sorted(missing)[:4]}")
    for (x1, x2, y), _ in dist.support:
        if (x1, y) not in part1:
            raise ValidationError(f"support point has (X1,Y)=({x1},{y}) outside D1")
        if (x2, y) not in part2:
            raise ValidationError(f"support point has (X2,Y)=({x2},{y}) outside D2")
    law1 = dist.marginal([0])
    law2 = dist.marginal([1])
    if law1 != law2:
        raise ValidationError("X1 and X2 must have identical laws")
    lhs = 2.0 ** entropy(dist, [0])
    rhs = 2.0 ** conditional_entropy(dist, [0], [2]) + 2.0 ** conditional_entropy(dist, [1], [2])
    return lower_report(
        "2^H(X1)",
        lhs,
        rhs,
        "disjoint-support lemma",
        tol=tol,
        extra={"lhs": lhs, "rhs": rhs},
    )


def check_cregular_corollary(
    u_size: int,
    v_size: int,
    bad: Iterable[tuple[int, int]],
    balanced_sets: Sequence[tuple[Iterable[int], Iterable[int], int | Fraction]],
    tol: float = TOL,
) -> BoundReport:
    """2^{H(X)} - 2^{H(X|Y)} >= c for (X, Y) = weighted balanced rectangle,
    then a uniform good pair inside it.

    bad must have a constant number c of bad cells per column; each rectangle
    S x T must contain every bad cell of its columns and have a constant
    bad-count per row.
    """
    bad_set = set(bad)
    for x, y in bad_set:
        if not (0 <= x < u_size and 0 <= y < v_size):
            raise ValidationError(f"bad pair ({x},{y}) outside [0,{u_size}) x [0,{v_size})")
    per_column = [sum(1 for x in range(u_size) if (x, y) in bad_set) for y in range(v_size)]
    c = per_column[0] if per_column else 0
    if any(col != c for col in per_column):
        raise ValidationError(f"bad-cell counts per column are not constant: {per_column}")
    if not balanced_sets:
        raise ValidationError("at least one rectangle is required")

    pairs: list[tuple[tuple[int, int], Fraction]] = []
    weights = [Fraction(w) for _, _, w in balanced_sets]
    if any(w <= 0 for w in weights):
        raise ValidationError("rectangle weights must be positive")
    total_w = sum(weights)
    for (s_raw, t_raw, _), w in zip(balanced_sets, weights):
        s, t = sorted(set(s_raw)), sorted(set(t_raw))
        for y in t:
            outside = [x for x in range(u_size) if (x, y) in bad_set and x not in s]
            if outside:
                raise ValidationError(f"rectangle misses bad cells {[(x, y) for x in outside]}")
        row_bad = [sum(1 for y in t if (x, y) in bad_set) for x in s]
        if row_bad and any(r != row_bad[0] for r in row_bad):
            raise ValidationError(f"rectangle has non-constant bad-count rows: {row_bad}")
        good = [(x, y) for x in s for y in t if (x, y) not in bad_set]
        if not good:
            raise ValidationError("rectangle contains no good pairs")
        share = w / total_w / len(good)
        pairs.extend(((x, y), share) for (x, y) in good)

    merged: dict[tuple[int, int], Fraction] = {}
    for xy, p in pairs:
        merged[xy] = merged.get(xy, Fraction(0)) + p
    dist = ExactDistribution.from_pairs(2, list(merged.items()))
    lhs = 2.0 ** entropy(dist, [0]) - 2.0 ** conditional_entropy(dist, [0], [1])
    return lower_report(
        "2^H(X) - 2^H(X|Y)",
        lhs,
        float(c),
        "c-regular partition corollary",
        tol=tol,
        extra={"c": c},
    )

"""Forbidding systems: good/bad multiset oracles with declared c-vectors.

A system classifies every multiset of size <= d over a finite universe as
good or bad, subject to two axioms: bad multisets stay bad under extension
(and every singleton is good), and every good k-multiset has exactly c_k bad
extensions.  Compatible subsets then yield symmetric tuple families S^(d)
whose unions obey a falling-product shadow bound.

Oracles must be pure functions of the multiset; classification results are
memoized per system instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Hashable, Iterable, Sequence

from .errors import ValidationError, check_cap
from .numkit import CVector, invert_product, product_falling
from .reports import BoundReport, lower_report

UNIVERSE_CAP = 64
DEPTH_CAP = 5

Multiset = tuple  # sorted tuple with repetition, canonical by element order


@dataclass(frozen=True)
class TupleFamily:
    """Duplicate-free family of ordered d-tuples."""

    d: int
    tuples: tuple[tuple, ...]

    @classmethod
    def make(cls, d: int, tuples: Iterable[Sequence]) -> "TupleFamily":
        items = [tuple(t) for t in tuples]
        for t in items:
            if len(t) != d:
                raise ValidationError(f"tuple {t} has length {len(t)}, expected {d}")
        if len(set(items)) != len(items):
            raise ValidationError("duplicate tuples in family")
        return cls(d=d, tuples=tuple(sorted(items)))

    def __len__(self) -> int:
        return len(self.tuples)


class ForbiddingSystem:
    """Good/bad multiset oracle over a finite universe with a declared c-vector."""

    def __init__(self, universe: Iterable[Hashable], d: int,
                 classify_good: Callable[[Multiset], bool],
                 c_vector: CVector | Sequence[int], name: str = "custom"):
        self.universe = tuple(sorted(set(universe)))
        if not self.universe:
            raise ValidationError("universe must be nonempty")
        if d < 1:
            raise ValidationError(f"d must be positive, got {d}")
        self.d = d
        self.c_vector = CVector.coerce(c_vector)
        if len(self.c_vector) != d - 1:
            raise ValidationError(
                f"c-vector has length {len(self.c_vector)}, expected d-1 = {d - 1}"
            )
        self.name = name
        self._classify = classify_good
        self._memo: dict[Multiset, bool] = {}

    def is_good(self, multiset: Sequence) -> bool:
        key = tuple(sorted(multiset))
        if len(key) > self.d:
            raise ValidationError(f"multiset {key} larger than d = {self.d}")
        cached = self._memo.get(key)
        if cached is None:
            cached = self._memo[key] = bool(self._classify(key))
        return cached


def repeats_system(n: int, d: int) -> ForbiddingSystem:
    """Bad = contains a repeated element; the (1, 2, ..., d-1) system."""
    return ForbiddingSystem(
        universe=range(n),
        d=d,
        classify_good=lambda ms: len(set(ms)) == len(ms),
        c_vector=tuple(range(1, d)),
        name="repeats",
    )


def _rank_mod_q(vectors: Sequence[tuple[int, ...]], q: int) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % q), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def qlinear_system(q: int, n: int, d: int) -> ForbiddingSystem:
    """Bad = linearly dependent over F_q; the (q-1, q^2-1, ...) system.

    Universe is F_q^n minus the zero vector; q must be prime.
    """
    if any(q % p == 0 for p in range(2, q)) or q < 2:
        raise ValidationError(f"q must be prime, got {q}")
    check_cap("field size q^n", q**n, 2**16)
    universe = [v for v in product(range(q), repeat=n) if any(v)]
    return ForbiddingSystem(
        universe=universe,
        d=d,
        classify_good=lambda ms: _rank_mod_q(ms, q) == len(ms),
        c_vector=tuple(q**k - 1 for k in range(1, d)),
        name=f"qlinear:{q},{n}",
    )


def system_from_name(name: str, d: int, universe_size: int | None = None) -> ForbiddingSystem:
    """Built-in systems: "repeats" (needs universe_size) or "qlinear:q,n"."""
    if name == "repeats":
        if universe_size is None:
            raise ValidationError("repeats system needs a universe size")
        return repeats_system(universe_size, d)
    if name.startswith("qlinear:"):
        try:
            q, n = (int(x) for x in name.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise ValidationError(f"expected qlinear:q,n, got {name!r}") from exc
        return qlinear_system(q, n, d)
    raise ValidationError(f"unknown system {name!r}")


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    exhaustive: bool
    checked: int
    violation: str | None = None


def _check_multiset(sys: ForbiddingSystem, ms: Multiset) -> str | None:
    k = len(ms)
    if sys.is_good(ms):
        bad_ext = sum(1 for x in sys.universe if not sys.is_good(ms + (x,)))
        expected = sys.c_vector.entries[k - 1]
        if bad_ext != expected:
            return f"good {ms} has {bad_ext} bad extensions, declared c_{k} = {expected}"
    else:
        witness = next((x for x in sys.universe if sys.is_good(ms + (x,))), None)
        if witness is not None:
            return f"bad {ms} has good extension by {witness}"
    return None


def verify_forbidding_axioms(
    sys: ForbiddingSystem,
    mode: str = "auto",
    trials: int = 2000,
    seed: int = 0,
) -> AxiomReport:
    """Check the two axioms over all multisets of size < d (or a random sample).

    Mode "auto" runs exhaustively within the universe/depth caps and falls
    back to a seeded spot-check beyond them; the report carries which one ran.
    """
    if mode not in ("auto", "exhaustive", "spot"):
        raise ValidationError(f"unknown mode {mode!r}")
    small = len(sys.universe) <= UNIVERSE_CAP and sys.d <= DEPTH_CAP
    if mode == "exhaustive" and not small:
        check_cap("universe size", len(sys.universe), UNIVERSE_CAP)
        check_cap("tuple length d", sys.d, DEPTH_CAP)
    exhaustive = mode == "exhaustive" or (mode == "auto" and small)

    checked = 0
    if exhaustive:
        for x in sys.universe:
            checked += 1
            if not sys.is_good((x,)):
                return AxiomReport(False, True, checked, f"singleton ({x},) is bad")
        for k in range(1, sys.d):
            for ms in combinations_with_replacement(sys.universe, k):
                checked += 1
                issue = _check_multiset(sys, ms)
                if issue:
                    return AxiomReport(False, True, checked, issue)
        return AxiomReport(True, True, checked, None)

    rng = random.Random(seed)
    for _ in range(trials):
        checked += 1
        k = rng.randint(1, max(1, sys.d - 1))
        ms = tuple(sorted(rng.choice(sys.universe) for _ in range(k)))
        if k == 1 and not sys.is_good(ms):
            return AxiomReport(False, False, checked, f"singleton {ms} is bad")
        issue = _check_multiset(sys, ms)
        if issue:
            return AxiomReport(False, False, checked, issue)
    return AxiomReport(True, False, checked, None)


@dataclass(frozen=True)
class CompatibilityResult:
    ok: bool
    witness: tuple[Multiset, Hashable] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_compatible(sys: ForbiddingSystem, s: Iterable[Hashable]) -> CompatibilityResult:
    """A set is compatible when bad-extending elements of its good multisets stay inside."""
    inside = tuple(sorted(set(s)))
    unknown = [x for x in inside if x not in set(sys.universe)]
    if unknown:
        raise ValidationError(f"elements {unknown} are not in the universe")
    outside = [x for x in sys.universe if x not in set(inside)]
    for k in range(1, sys.d):
        for ms in combinations_with_replacement(inside, k):
            if not sys.is_good(ms):
                continue
            for x in outside:
                if not sys.is_good(ms + (x,)):
                    return CompatibilityResult(False, witness=(ms, x))
    return CompatibilityResult(True)


def enumerate_sd(sys: ForbiddingSystem, s: Iterable[Hashable]) -> TupleFamily:
    """All ordered d-tuples from a compatible set whose multiset is good.

    The count must match the falling product |S|(|S|-c_1)...(|S|-c_{d-1});
    a mismatch means the declared system is not actually forbidding.
    """
    inside = tuple(sorted(set(s)))
    compat = is_compatible(sys, inside)
    if not compat:
        raise ValidationError(f"set is not compatible; witness {compat.witness}")
    out: list[tuple] = []

    def extend(prefix: tuple) -> None:
        if len(prefix) == sys.d:
            out.append(prefix)
            return
        for x in inside:
            if sys.is_good(tuple(sorted(prefix + (x,)))):
                extend(prefix + (x,))

    extend(())
    expected = product_falling(len(inside), sys.c_vector)
    if len(out) != expected:
        raise ValidationError(
            f"|S^(d)| = {len(out)} but the declared c-vector predicts {expected}; "
            "the classifier does not satisfy the forbidding axioms"
        )
    return TupleFamily.make(sys.d, out)


def tuple_shadow(fam: TupleFamily) -> TupleFamily:
    """Duplicate-free (d-1)-prefixes."""
    if fam.d < 1:
        raise ValidationError("shadow needs d >= 1")
    return TupleFamily.make(fam.d - 1, {t[:-1] for t in fam.tuples})


def check_generalized_kk(
    sys: ForbiddingSystem,
    sets: Sequence[Iterable[Hashable]],
    tol: float = 1e-9,
) -> BoundReport:
    """|shadow(F)| >= t(t-c_1)...(t-c_{d-2}) where |F| = t(t-c_1)...(t-c_{d-1}).

    F is the union of the S_i^(d), which must be mutually disjoint.
    """
    if sys.d < 2:
        raise ValidationError("the shadow bound needs d >= 2")
    families = [enumerate_sd(sys, s) for s in sets]
    merged: set[tuple] = set()
    total = 0
    for fam in families:
        total += len(fam)
        merged |= set(fam.tuples)
        if len(merged) != total:
            raise ValidationError("the S_i^(d) are not mutually disjoint")
    if not merged:
        raise ValidationError(
            "union of tuple families is empty; the bound needs |F| >= 1"
        )
    big = TupleFamily.make(sys.d, merged)
    t = invert_product(len(big), sys.c_vector).t
    bound = product_falling(t, sys.c_vector.drop_last())
    shadow_size = len(tuple_shadow(big))
    return lower_report(
        "tuple shadow size",
        shadow_size,
        bound,
        "generalized kruskal-katona",
        tol=tol,
        extra={"t": t, "family_size": len(big), "c_vector": sys.c_vector.entries},
    )

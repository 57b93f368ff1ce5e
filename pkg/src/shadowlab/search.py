"""Exhaustive and seeded-random search for extremal ratios at desk scale.

States are enumerated in a fixed order (base-4 or per-slot bits), ratios are
compared by exact integer cross-multiplication, and every reported witness
recounts to exactly the reported ratio.  The state space splits into
independent ranges, so scans never share mutable state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Mapping

from .errors import CapacityError, ValidationError
from .hypergraph import ColoredHypergraph

RAINBOW_CAP = 7  # hard cap: 4^binom(n,2) states
MIXED_CAP = 6  # hard cap: 2^(pairs + triples) states

RGB = ("red", "green", "blue")


@dataclass(frozen=True)
class SearchResult:
    problem: str
    best_numerator: int
    best_denominator: int
    witness: ColoredHypergraph | None
    explored: int
    exhaustive: bool
    params: Mapping[str, object]

    @property
    def best_ratio(self) -> float:
        if self.witness is None:
            return float("nan")
        return self.best_numerator / self.best_denominator

    @property
    def best_ratio_exact(self) -> Fraction | None:
        if self.witness is None:
            return None
        return Fraction(self.best_numerator, self.best_denominator)


def _is_canonical(state: tuple[int, ...], slot_perms: list[tuple[int, ...]]) -> bool:
    for sp in slot_perms:
        if tuple(state[i] for i in sp) < state:
            return False
    return True


def search_rainbow_triangle(max_vertices: int, prune: bool = False) -> SearchResult:
    """Exhaustively maximize T^2 / (RGB) over 3-colorings of the pairs of [n].

    Every pair slot takes one of {absent, red, green, blue}.  With pruning,
    states that are not lexicographically minimal under vertex permutations
    are skipped (sound, but the exhaustive flag is cleared).
    """
    n = max_vertices
    if n < 3:
        raise ValidationError(f"need at least 3 vertices, got {n}")
    if n > RAINBOW_CAP:
        raise CapacityError(f"rainbow search is capped at {RAINBOW_CAP} vertices")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    triangles = [
        (index[(a, b)], index[(a, c)], index[(b, c)])
        for a, b, c in combinations(range(n), 3)
    ]
    slot_perms = []
    if prune:
        for perm in permutations(range(n)):
            slot_perms.append(
                tuple(index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs)
            )
    best_num = 0
    best_den = 1
    best_state = None
    explored = 0
    for state in product((0, 1, 2, 3), repeat=len(pairs)):
        explored += 1
        if prune and not _is_canonical(state, slot_perms):
            continue
        r = state.count(1)
        g = state.count(2)
        b = state.count(3)
        if not (r and g and b):
            continue
        t = 0
        for i, j, k in triangles:
            ci = state[i]
            if ci:
                cj = state[j]
                if cj and cj != ci:
                    ck = state[k]
                    if ck and ck != ci and ck != cj:
                        t += 1
        if t == 0:
            continue
        num = t * t
        den = r * g * b
        if num * best_den > best_num * den:
            best_num, best_den, best_state = num, den, state
    witness = None
    if best_state is not None:
        witness = ColoredHypergraph.from_edges(
            n,
            [
                (pairs[i], RGB[c - 1])
                for i, c in enumerate(best_state)
                if c
            ],
        )
    return SearchResult(
        problem="rainbow_triangle",
        best_numerator=best_num,
        best_denominator=best_den,
        witness=witness,
        explored=explored,
        exhaustive=not prune,
        params={"max_vertices": n, "prune": prune},
    )


def search_mixed_4subsets(max_vertices: int) -> SearchResult:
    """Exhaustively maximize J^2 / (N2 N3^2) over mixed 2/3-edge hypergraphs."""
    n = max_vertices
    if n < 4:
        raise ValidationError(f"need at least 4 vertices, got {n}")
    if n > MIXED_CAP:
        raise CapacityError(f"mixed search is capped at {MIXED_CAP} vertices")
    pairs = list(combinations(range(n), 2))
    triples = list(combinations(range(n), 3))
    pair_idx = {p: i for i, p in enumerate(pairs)}
    triple_idx = {t: i for i, t in enumerate(triples)}
    # per 4-subset: the 6 ways to pick {v3, v4}, as (pair, triple, triple) slots
    quad_checks = []
    for quad in combinations(range(n), 4):
        splits = []
        for v3, v4 in combinations(quad, 2):
            v1, v2 = (x for x in quad if x not in (v3, v4))
            splits.append(
                (
                    pair_idx[(v3, v4)],
                    triple_idx[tuple(sorted((v1, v2, v3)))],
                    triple_idx[tuple(sorted((v1, v2, v4)))],
                )
            )
        quad_checks.append(splits)
    best_num = 0
    best_den = 1
    best_bits = None
    explored = 0
    for bits2 in range(1, 1 << len(pairs)):
        n2 = bits2.bit_count()
        for bits3 in range(1, 1 << len(triples)):
            explored += 1
            j = 0
            for splits in quad_checks:
                for p, t1, t2 in splits:
                    if bits2 >> p & 1 and bits3 >> t1 & 1 and bits3 >> t2 & 1:
                        j += 1
                        break
            if j == 0:
                continue
            n3 = bits3.bit_count()
            num = j * j
            den = n2 * n3 * n3
            if num * best_den > best_num * den:
                best_num, best_den, best_bits = num, den, (bits2, bits3)
    witness = None
    if best_bits is not None:
        bits2, bits3 = best_bits
        edges = [(p, "plain") for i, p in enumerate(pairs) if bits2 >> i & 1]
        edges += [(t, "plain") for i, t in enumerate(triples) if bits3 >> i & 1]
        witness = ColoredHypergraph.from_edges(n, edges)
    return SearchResult(
        problem="mixed_4subsets",
        best_numerator=best_num,
        best_denominator=best_den,
        witness=witness,
        explored=explored,
        exhaustive=True,
        params={"max_vertices": n},
    )


PROBE_PROBLEMS = ("rainbow_d", "good6", "mixed4", "covering_delta")


def _probe_ratio(problem: str, h: ColoredHypergraph, d: int, delta: int):
    """(numerator, denominator) of the problem's ratio, or None if undefined."""
    from . import hypergraph as hg

    if problem == "rainbow_d":
        counts = h.color_counts()
        colors = [f"c{i + 1}" for i in range(d)]
        if any(counts.get(c, 0) == 0 for c in colors):
            return None
        t = hg.count_rainbow_cliques(h, d, colors)
        den = 1
        for c in colors:
            den *= counts[c]
        return (t ** (d - 1), den)
    if problem == "good6":
        n_edges = len(h.edges)
        if n_edges == 0:
            return None
        j = hg.count_good_6subsets(h)
        return (j * j, n_edges**3)
    if problem == "mixed4":
        n2 = sum(1 for e in h.edges if len(e.verts) == 2)
        n3 = sum(1 for e in h.edges if len(e.verts) == 3)
        if n2 == 0 or n3 == 0:
            return None
        j = len(hg.good_4subsets_mixed(h))
        return (j * j, n2 * n3 * n3)
    if problem == "covering_delta":
        counts = h.color_counts()
        if any(counts.get(c, 0) == 0 for c in RGB):
            return None
        j = hg.count_color_covering_subsets(h, delta)
        return (j * j, counts["red"] * counts["green"] * counts["blue"])
    raise ValidationError(f"unknown problem {problem!r}")


def _probe_instance(problem: str, rng: random.Random, n: int, d: int, delta: int) -> ColoredHypergraph:
    if problem == "rainbow_d":
        colors = [f"c{i + 1}" for i in range(d)]
        edges = []
        for verts in combinations(range(n), d - 1):
            pick = rng.randrange(d + 1)
            if pick:
                edges.append((verts, colors[pick - 1]))
        return ColoredHypergraph.from_edges(n, edges)
    if problem == "good6":
        edges = [(v, "plain") for v in combinations(range(n), 4) if rng.random() < 0.5]
        return ColoredHypergraph.from_edges(n, edges)
    if problem == "mixed4":
        edges = [(v, "plain") for v in combinations(range(n), 2) if rng.random() < 0.5]
        edges += [(v, "plain") for v in combinations(range(n), 3) if rng.random() < 0.5]
        return ColoredHypergraph.from_edges(n, edges)
    if problem == "covering_delta":
        edges = []
        for verts in combinations(range(n), delta + 2):
            pick = rng.randrange(4)
            if pick:
                edges.append((verts, RGB[pick - 1]))
        return ColoredHypergraph.from_edges(n, edges)
    raise ValidationError(f"unknown problem {problem!r}")


def random_probe(
    problem: str,
    params: Mapping[str, int],
    trials: int,
    seed: int = 0,
) -> SearchResult:
    """Best ratio over seeded-random configurations; deterministic per seed."""
    if problem not in PROBE_PROBLEMS:
        raise ValidationError(f"problem must be one of {PROBE_PROBLEMS}, got {problem!r}")
    if trials < 0:
        raise ValidationError("trials must be nonnegative")
    n = int(params.get("vertices", 8))
    d = int(params.get("d", 3))
    delta = int(params.get("delta", 0))
    if problem == "rainbow_d" and d < 2:
        raise ValidationError(f"rainbow_d needs d >= 2, got {d}")
    if problem == "covering_delta" and delta < 0:
        raise ValidationError(f"covering_delta needs delta >= 0, got {delta}")
    rng = random.Random(seed)
    best_num, best_den = 0, 1
    best: ColoredHypergraph | None = None
    for _ in range(trials):
        h = _probe_instance(problem, rng, n, d, delta)
        ratio = _probe_ratio(problem, h, d, delta)
        if ratio is None:
            continue
        num, den = ratio
        if best is None or num * best_den > best_num * den:
            best_num, best_den, best = num, den, h
    return SearchResult(
        problem=problem,
        best_numerator=best_num,
        best_denominator=best_den,
        witness=best,
        explored=trials,
        exhaustive=False,
        params={"vertices": n, "d": d, "delta": delta, "seed": seed, "trials": trials},
    )

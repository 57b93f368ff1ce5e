"""Colored hypergraphs of possibly mixed uniformity and all counting ops.

Counts are exact big integers; ratios become floats only inside reports.
Graphs are immutable after construction, so every operation here is safe to
call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, ValidationError, check_cap
from .numkit import binom_real, invert_binom
from .reports import BoundReport, ValidationReport, lower_report, upper_report

VERTEX_CAP = 64


@dataclass(frozen=True)
class Edge:
    verts: tuple[int, ...]
    color: str
    weight: int | None = None


@dataclass(frozen=True)
class ColoredHypergraph:
    """Vertices 0..n-1 plus color-labeled hyperedges (mixed sizes allowed)."""

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "ColoredHypergraph":
        """Build from (verts, color) or (verts, color, weight) items; sorts verts."""
        built = []
        for item in edges:
            verts, color = item[0], item[1]
            weight = item[2] if len(item) > 2 else None
            built.append(Edge(tuple(sorted(verts)), str(color), weight))
        return cls(n=n, edges=tuple(built))

    def colors(self) -> tuple[str, ...]:
        return tuple(sorted({e.color for e in self.edges}))

    def color_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for e in self.edges:
            counts[e.color] = counts.get(e.color, 0) + 1
        return counts

    def edge_map(self) -> dict[tuple[int, ...], Edge]:
        return {e.verts: e for e in self.edges}

    def uniformity(self) -> int:
        """Common edge size; raises if edges are absent or of mixed size."""
        sizes = {len(e.verts) for e in self.edges}
        if len(sizes) != 1:
            raise ValidationError(f"expected uniform edges, got sizes {sorted(sizes)}")
        return sizes.pop()


@dataclass(frozen=True)
class SetFamily:
    """A family of d-subsets of [ground_size]."""

    n: int
    d: int
    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, n: int, sets: Iterable[Iterable[int]], d: int | None = None) -> "SetFamily":
        members = sorted(tuple(sorted(s)) for s in sets)
        if d is None:
            if not members:
                raise ValidationError("d is required for an empty family")
            d = len(members[0])
        for s in members:
            if len(s) != d:
                raise ValidationError(f"member {s} has cardinality {len(s)}, expected {d}")
            if len(set(s)) != len(s):
                raise ValidationError(f"member {s} repeats an element")
            if s and (s[0] < 0 or s[-1] >= n):
                raise ValidationError(f"member {s} outside ground set [0, {n})")
        if len(set(members)) != len(members):
            raise ValidationError("duplicate member sets")
        return cls(n=n, d=d, sets=tuple(members))

    def __len__(self) -> int:
        return len(self.sets)


def validate(h: ColoredHypergraph) -> ValidationReport:
    """Check all hypergraph invariants; report violations with edge indices."""
    violations = []
    if h.n < 0:
        violations.append(f"vertex count {h.n} is negative")
    seen: dict[tuple[int, ...], int] = {}
    for i, e in enumerate(h.edges):
        if len(e.verts) == 0:
            violations.append(f"edge {i} is empty")
        if tuple(sorted(e.verts)) != e.verts or len(set(e.verts)) != len(e.verts):
            violations.append(f"edge {i} vertex list {e.verts} is not sorted and duplicate-free")
        for v in e.verts:
            if not (0 <= v < h.n):
                violations.append(f"edge {i} vertex {v} out of range [0, {h.n})")
        if e.weight is not None and (not isinstance(e.weight, int) or e.weight < 0):
            violations.append(f"edge {i} weight {e.weight} is not a nonnegative integer")
        if e.verts in seen:
            violations.append(
                f"edges {seen[e.verts]} and {i} share vertex set {e.verts} (simplicity violation)"
            )
        else:
            seen[e.verts] = i
    return ValidationReport(ok=not violations, violations=tuple(violations))


def _require_valid(h: ColoredHypergraph) -> None:
    report = validate(h)
    if not report.ok:
        raise ValidationError("; ".join(report.violations))


def _facet_colors(h: ColoredHypergraph, size: int) -> dict[tuple[int, ...], str]:
    return {e.verts: e.color for e in h.edges if len(e.verts) == size}


def rainbow_cliques(
    h: ColoredHypergraph, d: int, colors: Sequence[str]
) -> tuple[tuple[int, ...], ...]:
    """All d-subsets whose d facets are edges carrying the d listed colors once each."""
    if d < 2:
        raise ValidationError(f"rainbow cliques need d >= 2, got {d}")
    color_list = list(colors)
    if len(color_list) != d or len(set(color_list)) != d:
        raise ValidationError(f"expected {d} distinct colors, got {color_list}")
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    listed = set(color_list)
    for e in h.edges:
        if e.color in listed and len(e.verts) != d - 1:
            raise ValidationError(
                f"edge {e.verts} with listed color {e.color!r} has {len(e.verts)} vertices, expected {d - 1}"
            )
    lookup = _facet_colors(h, d - 1)
    target = tuple(sorted(color_list))
    by_color: dict[str, list[tuple[int, ...]]] = {c: [] for c in color_list}
    for e in h.edges:
        if e.color in listed:
            by_color[e.color].append(e.verts)
    rarest = min(by_color.values(), key=len)
    found = set()
    for base in rarest:
        base_set = set(base)
        for v in range(h.n):
            if v in base_set:
                continue
            delta = tuple(sorted(base + (v,)))
            if delta in found:
                continue
            facets = combinations(delta, d - 1)
            got = []
            ok = True
            for f in facets:
                c = lookup.get(f)
                if c is None:
                    ok = False
                    break
                got.append(c)
            if ok and tuple(sorted(got)) == target:
                found.add(delta)
    return tuple(sorted(found))


def count_rainbow_cliques(h: ColoredHypergraph, d: int, colors: Sequence[str]) -> int:
    return len(rainbow_cliques(h, d, colors))


@dataclass(frozen=True)
class KappaReport:
    """T^{d-1} / (C_1 ... C_d) plus all proven upper bounds on it."""

    d: int
    colors: tuple[str, ...]
    t_count: int
    color_counts: tuple[int, ...]
    ratio_exact: Fraction
    reports: tuple[BoundReport, ...]

    @property
    def ratio(self) -> float:
        return float(self.ratio_exact)


def kappa_ratio(h: ColoredHypergraph, d: int, colors: Sequence[str] | None = None) -> KappaReport:
    """Compute the clique/edge-count ratio and check it against its upper bounds."""
    if colors is None:
        colors = h.colors()
    color_list = tuple(colors)
    counts = h.color_counts()
    sizes = tuple(counts.get(c, 0) for c in color_list)
    if any(s == 0 for s in sizes):
        missing = [c for c, s in zip(color_list, sizes) if s == 0]
        raise ValidationError(f"every color class must be nonempty; empty: {missing}")
    t = count_rainbow_cliques(h, d, color_list)
    denom = math.prod(sizes)
    ratio = Fraction(t ** (d - 1), denom)
    reports = [
        upper_report(
            "clique ratio",
            ratio,
            Fraction(math.factorial(d - 1) ** d),
            f"shearer ((d-1)!)^d = {math.factorial(d - 1) ** d}",
        )
    ]
    if d >= 3:
        inductive = Fraction(math.prod(i**i for i in range(1, d)), 2)
        reports.append(
            upper_report("clique ratio", ratio, inductive, f"induction (1/2) prod i^i = {inductive}")
        )
    reports.append(
        upper_report("clique ratio", ratio, Fraction(math.factorial(d)), f"joints d! = {math.factorial(d)}")
    )
    if d == 3:
        reports.append(
            upper_report(
                "T^2",
                t * t,
                2 * denom,
                "rainbow triangles T^2 <= 2 C1 C2 C3",
                extra={"T": t, "2*C1*C2*C3": 2 * denom},
            )
        )
    return KappaReport(
        d=d,
        colors=color_list,
        t_count=t,
        color_counts=sizes,
        ratio_exact=ratio,
        reports=tuple(reports),
    )


def shadow(fam: SetFamily) -> SetFamily:
    """All (d-1)-subsets contained in some member."""
    if fam.d < 1:
        raise ValidationError("shadow needs d >= 1")
    out = set()
    for s in fam.sets:
        for f in combinations(s, fam.d - 1):
            out.add(f)
    return SetFamily(n=fam.n, d=fam.d - 1, sets=tuple(sorted(out)))


def check_kruskal_katona(fam: SetFamily, tol: float = 1e-9) -> BoundReport:
    """|shadow| >= binom(t, d-1) where binom(t, d) = |family|, t real >= d."""
    if len(fam) < 1:
        raise ValidationError("family must be nonempty")
    t = invert_binom(len(fam), fam.d).t
    bound = binom_real(t, fam.d - 1)
    shadow_size = len(shadow(fam))
    return lower_report(
        "shadow size",
        shadow_size,
        bound,
        "kruskal-katona (lovasz form)",
        tol=tol,
        extra={"t": t, "family_size": len(fam)},
    )


def _edges_of_size(h: ColoredHypergraph, size: int, what: str) -> set[tuple[int, ...]]:
    for e in h.edges:
        if len(e.verts) != size:
            raise ValidationError(f"{what} requires {size}-uniform edges, got {e.verts}")
    return {e.verts for e in h.edges}


def _pair_partitions(delta: tuple[int, ...]):
    """The 15 partitions of a 6-set into three unordered pairs."""
    a = delta[0]
    rest = delta[1:]
    for b in rest:
        four = [x for x in rest if x != b]
        c = four[0]
        for dd in four[1:]:
            e, f = [x for x in four[1:] if x != dd]
            yield ((a, b), tuple(sorted((c, dd))), tuple(sorted((e, f))))


def good_6subsets(h: ColoredHypergraph) -> tuple[tuple[int, ...], ...]:
    """6-sets admitting three 4-edges inside whose complements partition the set."""
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    edges = sorted(_edges_of_size(h, 4, "good 6-subset counting"))
    candidates = set()
    for e, f in combinations(edges, 2):
        union = set(e) | set(f)
        if len(union) == 6:
            candidates.add(tuple(sorted(union)))
    edge_set = set(edges)
    good = []
    for delta in sorted(candidates):
        dset = set(delta)
        hit = False
        for pairs in _pair_partitions(delta):
            if all(tuple(sorted(dset - set(p))) in edge_set for p in pairs):
                hit = True
                break
        if hit:
            good.append(delta)
    return tuple(good)


def count_good_6subsets(h: ColoredHypergraph) -> int:
    return len(good_6subsets(h))


def good_4subsets_mixed(h: ColoredHypergraph) -> tuple[tuple[int, ...], ...]:
    """4-sets {v1..v4} with 3-edges {v1,v2,v3}, {v1,v2,v4} and 2-edge {v3,v4}."""
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    pairs = set()
    triples = set()
    for e in h.edges:
        if len(e.verts) == 2:
            pairs.add(e.verts)
        elif len(e.verts) == 3:
            triples.add(e.verts)
        else:
            raise ValidationError(f"mixed counting allows only 2- and 3-edges, got {e.verts}")
    good = set()
    for e, f in combinations(sorted(triples), 2):
        shared = set(e) & set(f)
        if len(shared) != 2:
            continue
        v34 = tuple(sorted(set(e) ^ set(f)))
        if v34 in pairs:
            good.add(tuple(sorted(set(e) | set(f))))
    return tuple(sorted(good))


def count_good_4subsets_mixed(h: ColoredHypergraph) -> int:
    return len(good_4subsets_mixed(h))


@dataclass(frozen=True)
class MixedSubsetReport:
    j: int
    n2: int
    n3: int
    ratio_exact: Fraction
    reports: tuple[BoundReport, ...]

    @property
    def ratio(self) -> float:
        return float(self.ratio_exact)


def check_mixed_4subsets(h: ColoredHypergraph) -> MixedSubsetReport:
    """J^2 / (N2 N3^2) against the proven caps 9/2 and 3."""
    good = good_4subsets_mixed(h)
    n2 = sum(1 for e in h.edges if len(e.verts) == 2)
    n3 = sum(1 for e in h.edges if len(e.verts) == 3)
    if n2 == 0 or n3 == 0:
        raise ValidationError("mixed ratio needs N2 >= 1 and N3 >= 1")
    j = len(good)
    ratio = Fraction(j * j, n2 * n3 * n3)
    reports = (
        upper_report("mixed ratio", ratio, Fraction(9, 2), "shearer 9/2"),
        upper_report("mixed ratio", ratio, Fraction(3), "joints 3"),
    )
    return MixedSubsetReport(j=j, n2=n2, n3=n3, ratio_exact=ratio, reports=reports)


COVERING_COLORS = ("red", "green", "blue")


def color_covering_subsets(h: ColoredHypergraph, delta: int) -> tuple[tuple[int, ...], ...]:
    """(delta+3)-sets of a (delta+2)-uniform 3-colored graph containing all colors."""
    if delta < 0:
        raise ValidationError(f"delta must be nonnegative, got {delta}")
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    size = delta + 2
    lookup = {}
    for e in h.edges:
        if len(e.verts) != size:
            raise ValidationError(f"edge {e.verts} has size {len(e.verts)}, expected {size}")
        if e.color not in COVERING_COLORS:
            raise ValidationError(f"edge color {e.color!r} not among {COVERING_COLORS}")
        lookup[e.verts] = e.color
    good = set()
    for verts, _ in lookup.items():
        vset = set(verts)
        for v in range(h.n):
            if v in vset:
                continue
            delta_set = tuple(sorted(verts + (v,)))
            if delta_set in good:
                continue
            present = set()
            for f in combinations(delta_set, size):
                c = lookup.get(f)
                if c is not None:
                    present.add(c)
            if len(present) == 3:
                good.add(delta_set)
    return tuple(sorted(good))


def count_color_covering_subsets(h: ColoredHypergraph, delta: int) -> int:
    return len(color_covering_subsets(h, delta))


@dataclass(frozen=True)
class CoveringReport:
    j: int
    color_counts: tuple[int, int, int]
    ratio_exact: Fraction
    reports: tuple[BoundReport, ...]

    @property
    def ratio(self) -> float:
        return float(self.ratio_exact)


def check_color_covering(h: ColoredHypergraph, delta: int) -> CoveringReport:
    """J^2 / (RGB) against the proven cap 6; the cap 2 is proven only at delta=0."""
    good = color_covering_subsets(h, delta)
    counts = h.color_counts()
    rgb = tuple(counts.get(c, 0) for c in COVERING_COLORS)
    if any(x == 0 for x in rgb):
        raise ValidationError("covering ratio needs a nonempty class of each color")
    j = len(good)
    ratio = Fraction(j * j, rgb[0] * rgb[1] * rgb[2])
    reports = [upper_report("covering ratio", ratio, Fraction(6), "joints 6")]
    if delta == 0:
        reports.append(upper_report("covering ratio", ratio, Fraction(2), "rainbow triangles 2"))
    else:
        reports.append(
            upper_report("covering ratio", ratio, Fraction(2), "conjectured 2", conjecture=True)
        )
    return CoveringReport(j=j, color_counts=rgb, ratio_exact=ratio, reports=tuple(reports))


def count_partial_shadow_targets(h: ColoredHypergraph, r: int, k: int) -> int:
    """Number of r-subsets containing at least r-k edges of an (r-1)-uniform h."""
    if r < 1 or k < 0 or k > r:
        raise ValidationError(f"need r >= 1 and 0 <= k <= r, got r={r}, k={k}")
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    edges = _edges_of_size(h, r - 1, "partial shadow counting")
    needed = r - k
    if needed <= 0:
        return math.comb(h.n, r)
    found = set()
    for e in sorted(edges):
        eset = set(e)
        for v in range(h.n):
            if v in eset:
                continue
            delta = tuple(sorted(e + (v,)))
            if delta in found:
                continue
            inside = sum(1 for f in combinations(delta, r - 1) if f in edges)
            if inside >= needed:
                found.add(delta)
    return len(found)


def check_partial_shadow_bound(h: ColoredHypergraph, r: int, k: int, tol: float = 1e-9) -> BoundReport:
    """e(h) >= binom(x, r-k-1) where binom(x, r-k) = m, x real >= r-k."""
    if not (0 <= k < r):
        raise ValidationError(f"bound check needs 0 <= k < r, got r={r}, k={k}")
    m = count_partial_shadow_targets(h, r, k)
    if m < 1:
        raise ValidationError("no r-subsets meet the threshold (m = 0)")
    x = invert_binom(m, r - k).t
    bound = binom_real(x, r - k - 1)
    return lower_report(
        "edge count",
        len(h.edges),
        bound,
        "partial shadow",
        tol=tol,
        extra={"m": m, "x": x, "r": r, "k": k},
    )


def _weights(h: ColoredHypergraph, size: int) -> dict[tuple[int, ...], int]:
    table = {}
    for e in h.edges:
        if len(e.verts) != size:
            raise ValidationError(f"weighted ops require {size}-uniform edges, got {e.verts}")
        w = 1 if e.weight is None else e.weight
        if not isinstance(w, int) or w < 0:
            raise ValidationError(f"weight of {e.verts} must be a nonnegative integer, got {w}")
        table[e.verts] = w
    return table


@dataclass(frozen=True)
class WeightedSumReport:
    """Sum of geometric-mean weights to the d/(d-1) power, with its cap."""

    d: int
    total_weight: int
    terms: tuple[int, ...]  # nonzero facet-weight products, one per d-subset
    value: float
    report: BoundReport


def weighted_joint_sum(h: ColoredHypergraph, d: int) -> WeightedSumReport:
    """Sum over d-subsets of (geometric mean of facet weights)^{d/(d-1)}.

    The term for a d-subset equals (product of its d facet weights)^{1/(d-1)},
    so each term is an exact integer raised to a fixed real power.
    """
    if d < 2:
        raise ValidationError(f"need d >= 2, got {d}")
    check_cap("vertex count", h.n, VERTEX_CAP)
    check_cap("d-subset count", math.comb(h.n, d), 10**7)
    _require_valid(h)
    table = _weights(h, d - 1)
    total = sum(table.values())
    terms = []
    for delta in combinations(range(h.n), d):
        prod = 1
        for f in combinations(delta, d - 1):
            w = table.get(f, 0)
            if w == 0:
                prod = 0
                break
            prod *= w
        if prod:
            terms.append(prod)
    value = float(sum(p ** (1.0 / (d - 1)) for p in terms))
    bound = (math.factorial(d - 1) ** (1.0 / (d - 1)) / d) * float(total) ** (d / (d - 1))
    report = upper_report(
        "weighted clique sum",
        value,
        bound,
        "geometric-mean weight bound ((d-1)!)^{1/(d-1)}/d * N^{d/(d-1)}",
        extra={"total_weight": total},
    )
    return WeightedSumReport(d=d, total_weight=total, terms=tuple(terms), value=value, report=report)


@dataclass(frozen=True)
class SpectralReport:
    trace2: float
    trace3: float
    total_weight: int
    checks: tuple[BoundReport, ...]

    @property
    def ok(self) -> bool:
        return all(c.satisfied for c in self.checks)


def spectral_trace_check(h: ColoredHypergraph, tol: float = 1e-6) -> SpectralReport:
    """d=3 trace identities for M = entrywise sqrt of the weight matrix.

    tr(M^2) = 2N, tr(M^3) = 6 * sum of w(triangle)^{3/2}, and
    tr(M^2)^3 >= tr(M^3)^2.
    """
    check_cap("vertex count", h.n, VERTEX_CAP)
    _require_valid(h)
    table = _weights(h, 2)
    total = sum(table.values())
    m = np.zeros((h.n, h.n))
    for (i, j), w in table.items():
        m[i, j] = m[j, i] = math.sqrt(w)
    m2 = m @ m
    m3 = m2 @ m
    tr2 = float(np.trace(m2))
    tr3 = float(np.trace(m3))
    sum_w32 = sum(
        math.sqrt(p) for p in weighted_joint_sum(h, 3).terms
    )
    scale = max(1.0, tr2**3)
    checks = (
        upper_report("|tr(M^2) - 2N|", abs(tr2 - 2 * total), tol, "trace identity 2N", tol=0.0),
        upper_report(
            "|tr(M^3) - 6 sum w^{3/2}|", abs(tr3 - 6 * sum_w32), tol, "trace identity 6S", tol=0.0
        ),
        lower_report(
            "tr(M^2)^3 - tr(M^3)^2",
            tr2**3 - tr3**2,
            0.0,
            "trace power inequality",
            tol=tol * scale,
        ),
    )
    return SpectralReport(trace2=tr2, trace3=tr3, total_weight=total, checks=checks)


def color_isomorphic(h1: ColoredHypergraph, h2: ColoredHypergraph) -> bool:
    """True if some vertex bijection plus color bijection maps h1 onto h2.

    Brute force over permutations; intended for small witnesses only.
    """
    from itertools import permutations

    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return False
    if h1.n > 8:
        raise CapacityError("isomorphism check is brute-force, capped at 8 vertices")
    c1, c2 = h1.colors(), h2.colors()
    if len(c1) != len(c2):
        return False
    edges2 = {(e.verts, e.color) for e in h2.edges}
    for vperm in permutations(range(h1.n)):
        for cperm in permutations(c2):
            cmap = dict(zip(c1, cperm))
            mapped = {
                (tuple(sorted(vperm[v] for v in e.verts)), cmap[e.color]) for e in h1.edges
            }
            if mapped == edges2:
                return True
    return False

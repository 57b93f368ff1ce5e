"""Finite-field linear algebra for the q-analog of the shadow bound.

Subspaces of F_q^n are identified with their reduced row-echelon matrices,
which gives a unique hashable representative per subspace.  q is restricted
to primes so field arithmetic is plain mod-q integer arithmetic; the theorem
also holds for prime powers but those would need polynomial field towers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import ValidationError, check_cap
from .numkit import gaussian_binom, invert_gaussian
from .reports import BoundReport, lower_report

FIELD_CAP = 2**16

Matrix = tuple[tuple[int, ...], ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def rref(rows: Iterable[Sequence[int]], q: int) -> Matrix:
    """Reduced row-echelon form over F_q with zero rows dropped."""
    if not is_prime(q):
        raise ValidationError(f"q must be prime, got {q}")
    work = [[x % q for x in row] for row in rows]
    if not work:
        return ()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValidationError("ragged matrix")
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], q - 2, q)
        work[rank] = [(x * inv) % q for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [(a - f * b) % q for a, b in zip(work[i], work[rank])]
        rank += 1
    return tuple(tuple(r) for r in work[:rank])


@dataclass(frozen=True)
class SubspaceFamily:
    """d-dimensional subspaces of F_q^n in canonical echelon form."""

    q: int
    n: int
    d: int
    members: tuple[Matrix, ...]

    @classmethod
    def make(cls, q: int, n: int, d: int, members: Iterable[Iterable[Sequence[int]]]) -> "SubspaceFamily":
        if not is_prime(q):
            raise ValidationError(f"q must be prime, got {q}")
        if not (0 <= d <= n):
            raise ValidationError(f"need 0 <= d <= n, got d={d}, n={n}")
        canon = []
        for m in members:
            mat = tuple(tuple(int(x) % q for x in row) for row in m)
            for row in mat:
                if len(row) != n:
                    raise ValidationError(f"row {row} has length {len(row)}, expected {n}")
            if rref(mat, q) != mat or len(mat) != d:
                raise ValidationError(f"member {mat} is not a rank-{d} reduced echelon matrix")
            canon.append(mat)
        if len(set(canon)) != len(canon):
            raise ValidationError("duplicate subspaces")
        return cls(q=q, n=n, d=d, members=tuple(sorted(canon)))

    def __len__(self) -> int:
        return len(self.members)


def enumerate_subspaces(q: int, n: int, d: int) -> SubspaceFamily:
    """All d-dim subspaces of F_q^n, generated directly in echelon form.

    For each pivot-column choice the free entries (right of the pivot, off
    the other pivot columns) range over F_q independently.
    """
    if not is_prime(q):
        raise ValidationError(f"q must be prime, got {q}")
    if not (0 <= d <= n):
        raise ValidationError(f"need 0 <= d <= n, got d={d}, n={n}")
    check_cap("field size q^n", q**n, FIELD_CAP)
    members = []
    for pivots in combinations(range(n), d):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(d)
            for j in range(n)
            if j > pivots[i] and j not in pivot_set
        ]
        for values in product(range(q), repeat=len(free)):
            mat = [[0] * n for _ in range(d)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, j), v in zip(free, values):
                mat[i][j] = v
            members.append(tuple(tuple(r) for r in mat))
    fam = SubspaceFamily(q=q, n=n, d=d, members=tuple(sorted(members)))
    expected = gaussian_binom(n, d, q)
    if len(fam) != expected:
        raise AssertionError(f"enumerated {len(fam)} subspaces, formula gives {expected}")
    return fam


def _matmul_mod(a: Matrix, b: Matrix, q: int) -> Matrix:
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % q for col in zip(*b)) for row in a
    )


def subspace_points(member: Matrix, q: int, n: int) -> frozenset[tuple[int, ...]]:
    """All q^rank vectors of the row space, including zero."""
    points = set()
    for coeffs in product(range(q), repeat=len(member)):
        v = [0] * n
        for c, row in zip(coeffs, member):
            for i in range(n):
                v[i] = (v[i] + c * row[i]) % q
        points.add(tuple(v))
    return frozenset(points)


def subspace_shadow(fam: SubspaceFamily) -> SubspaceFamily:
    """All (d-1)-dim subspaces contained in some member.

    Hyperplanes of a member are the (d-1)-dim subspaces of its coefficient
    space mapped through the member's rows, so no ambient enumeration is needed.
    """
    if fam.d < 1:
        raise ValidationError("shadow needs d >= 1")
    coeff = enumerate_subspaces(fam.q, fam.d, fam.d - 1)
    out = set()
    for member in fam.members:
        for cmat in coeff.members:
            rows = _matmul_mod(cmat, member, fam.q) if cmat else ()
            out.add(rref(rows, fam.q))
    return SubspaceFamily(q=fam.q, n=fam.n, d=fam.d - 1, members=tuple(sorted(out)))


def check_q_kruskal_katona(fam: SubspaceFamily, tol: float = 1e-9) -> BoundReport:
    """|shadow| >= [t, d-1]_q where [t, d]_q = |family|, t real >= d."""
    if len(fam) < 1:
        raise ValidationError("family must be nonempty")
    t = invert_gaussian(len(fam), fam.d, fam.q).t
    bound = gaussian_binom(t, fam.d - 1, fam.q)
    shadow_size = len(subspace_shadow(fam))
    return lower_report(
        "subspace shadow size",
        shadow_size,
        bound,
        "q-analog kruskal-katona",
        tol=tol,
        extra={"t": t, "family_size": len(fam), "q": fam.q},
    )

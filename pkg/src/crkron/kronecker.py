"""Kronecker coefficients as signed sums of column-row lattice-point counts.

Two routes are implemented.  ``kron_via_cr`` expands the target character
over complete homogeneous pieces and counts whole polytopes; ``kron_via_faces``
groups the expansion into two-term differences, shifts one polytope onto the
other with an entry-moving isomorphism, and counts only the faces where the
cancellation fails.  Both must agree with the character oracle everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence, TypeVar

from .partitions import Composition, Partition, SizeMismatch, partition, sort_desc
from .polytope import (
    ColTight,
    CRSystem,
    DiagZero,
    EntryZero,
    FaceUnion,
    RowTight,
    Tensor3,
    count_points,
)

T = TypeVar("T")


def _map_ordered(fn: Callable[[T], object], items: Sequence[T], threads: int = 1) -> list:
    """Apply ``fn`` preserving order; results are identical for any thread count."""
    if threads and threads > 1 and len(items) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


@dataclass(frozen=True)
class JTTerm:
    """One signed complete-homogeneous term of a determinant expansion."""

    sign: int
    gamma: Composition


@dataclass(frozen=True)
class JTPairTerm:
    """A signed h_rho * [h_(a,b) - h_(a+1,b-1)] summand of the pair expansion."""

    sign: int
    a: int
    b: int
    rho: Composition

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be nonnegative")

    @property
    def tau(self) -> Composition:
        return (self.a, self.b) + self.rho

    @property
    def tau_bar(self) -> Composition:
        return (self.a + 1, self.b - 1) + self.rho


def _parity(sigma: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j]
    )
    return -1 if inversions % 2 else 1


def jt_expansion(nu: Partition) -> tuple[JTTerm, ...]:
    """Full permutation expansion of det(h_{nu_i - i + j}); zero parts stripped.

    Terms with a negative subscript are dropped and equal compositions are
    not merged; callers sort and memoize.
    """
    nu = partition(nu)
    if not nu:
        raise ValueError("empty partition has no determinant expansion")
    return _jt_expansion_cached(nu)


@lru_cache(maxsize=None)
def _jt_expansion_cached(nu: Partition) -> tuple[JTTerm, ...]:
    r = len(nu)
    terms: list[JTTerm] = []
    for sigma in permutations(range(1, r + 1)):
        gamma = [nu[i] - (i + 1) + sigma[i] for i in range(r)]
        if any(g < 0 for g in gamma):
            continue
        terms.append(JTTerm(_parity(sigma), tuple(g for g in gamma if g > 0)))
    return tuple(terms)


def jt_pair_expansion(nu: Partition) -> tuple[JTPairTerm, ...]:
    """Cofactor expansion along the first r-2 columns, leaving 2x2 minors.

    Each surviving branch contributes sign * h_rho * [h_(a,b) - h_(a+1,b-1)];
    branches through a vanishing entry (negative subscript) are pruned.  The
    collected subscripts rho are reported weakly decreasing with zeros
    stripped, matching the reorder freedom of the counted polytopes.
    """
    nu = partition(nu)
    if len(nu) < 2:
        raise ValueError("pair expansion needs at least two rows")
    return _jt_pair_expansion_cached(nu)


@lru_cache(maxsize=None)
def _jt_pair_expansion_cached(nu: Partition) -> tuple[JTPairTerm, ...]:
    r = len(nu)
    terms: list[JTPairTerm] = []

    def expand(rows: tuple[int, ...], col: int, sign: int, picks: tuple[int, ...]) -> None:
        if col == r - 1:
            i1, i2 = rows
            a = nu[i1 - 1] - i1 + (r - 1)
            b = nu[i2 - 1] - i2 + r
            rho = tuple(sorted((x for x in picks if x > 0), reverse=True))
            terms.append(JTPairTerm(sign, a, b, rho))
            return
        for pos, row in enumerate(rows):
            subscript = nu[row - 1] - row + col
            if subscript < 0:
                continue
            expand(
                rows[:pos] + rows[pos + 1 :],
                col + 1,
                sign * (-1) ** pos,
                picks + (subscript,),
            )

    expand(tuple(range(1, r + 1)), 1, 1, ())
    return tuple(terms)


def normalize_triple(
    lam: Partition, mu: Partition, nu: Partition
) -> tuple[Partition, Partition, Partition, bool]:
    """Reorder a triple so the third partition is shortest and the first two
    have nondecreasing lengths; flags the cases that need no polytope work."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) or sum(lam) != sum(nu):
        raise SizeMismatch(f"sizes of {lam}, {mu}, {nu} differ")
    by_length = sorted((lam, mu, nu), key=lambda t: (len(t), t))
    nu2, lam2, mu2 = by_length[0], by_length[1], by_length[2]
    shortcut = len(nu2) <= 1 or len(mu2) > len(lam2) * len(nu2)
    return lam2, mu2, nu2, shortcut


def _shortcut_value(lam: Partition, mu: Partition, nu: Partition) -> int:
    if len(nu) <= 1:
        return 1 if lam == mu else 0
    return 0


@lru_cache(maxsize=None)
def _cr_count_cached(lam: Partition, mu: Partition, key: Partition) -> int:
    return count_points(CRSystem(lam, mu, key))


def cr_count(lam: Partition, mu: Partition, tau: Composition) -> int:
    """#CR(lam, mu; tau), memoized on the sorted composition (reorder-invariant)."""
    key = sort_desc(tau)
    return _cr_count_cached(tuple(lam), tuple(mu), key)


def kron_via_cr(lam: Partition, mu: Partition, nu: Partition, threads: int = 1) -> int:
    """Kronecker coefficient as a signed sum of whole-polytope point counts."""
    lam2, mu2, nu2, shortcut = normalize_triple(lam, mu, nu)
    if shortcut:
        return _shortcut_value(lam2, mu2, nu2)
    terms = jt_expansion(nu2)
    counts = _map_ordered(lambda term: cr_count(lam2, mu2, term.gamma), terms, threads)
    total = sum(term.sign * cnt for term, cnt in zip(terms, counts))
    assert total >= 0, f"negative coefficient {total} for {lam}, {mu}, {nu}"
    return total


def z_matrix(ell: int, p: int, q: int, r: int) -> Tensor3:
    """Entry-moving tensor: +-1 on two adjacent diagonals of level 1 and a +1
    at (ell, ell) of level 2; adding it shifts one unit between level sums
    while preserving all row and column sums."""
    if r < 2:
        raise ValueError(f"requires r >= 2, got r = {r}")
    if not 1 <= ell <= p or ell > q:
        raise ValueError(f"ell = {ell} out of range")
    levels = [[[0] * q for _ in range(p)] for _ in range(r)]
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if i + j == ell:
                levels[0][i - 1][j - 1] = 1
            elif i + j == ell + 1:
                levels[0][i - 1][j - 1] = -1
    levels[1][ell - 1][ell - 1] = 1
    return Tensor3.from_levels(levels)


def phi_ell(tensor: Tensor3, ell: int) -> Tensor3:
    """X + Z_ell; errors out if the shift drives an entry negative."""
    shifted = tensor + z_matrix(ell, *tensor.dims)
    if not shifted.is_nonnegative():
        raise ValueError("shift produced a negative entry")
    return shifted


def face_F_plus(lam: Partition, mu: Partition, tau: Composition, ell: int) -> FaceUnion:
    """Faces of CR(lam, mu; tau) covering the points outside the shift's image."""
    p, q = len(lam), len(mu)
    if not 1 <= ell <= p:
        raise ValueError(f"ell = {ell} out of range [1, {p}]")
    faces: list = []
    if ell >= 2:
        faces.append(DiagZero(ell - 1))
    faces.append(EntryZero(ell))
    if ell >= 2:
        faces.extend(ColTight(ell - 1, t) for t in range(1, p - ell + 1))
        faces.extend(RowTight(ell - 1, s) for s in range(1, q - ell + 1))
    return FaceUnion(tuple(faces))


def face_F_minus(lam: Partition, mu: Partition, tau_bar: Composition, ell: int) -> FaceUnion:
    """Faces of CR(lam, mu; tau_bar) covering the points whose shift leaves CR(tau)."""
    p, q = len(lam), len(mu)
    if not 1 <= ell <= p:
        raise ValueError(f"ell = {ell} out of range [1, {p}]")
    if ell == p and p == q:
        return FaceUnion((DiagZero(p),))
    faces: list = []
    if ell < p or p < q:
        faces.extend(ColTight(ell, t) for t in range(1, p - ell + 2))
    if ell <= p - 1:
        faces.extend(RowTight(ell, s) for s in range(1, q - ell + 2))
    return FaceUnion(tuple(faces))


def face_term_breakdown(
    lam: Partition, mu: Partition, nu: Partition, ell: int = 1, threads: int = 1
) -> list[dict]:
    """Per-term audit of the face formula after normalizing the triple."""
    lam2, mu2, nu2, shortcut = normalize_triple(lam, mu, nu)
    if not 1 <= ell <= len(lam2):
        raise ValueError(f"ell = {ell} out of range [1, {len(lam2)}]")
    if shortcut:
        return []
    terms = jt_pair_expansion(nu2)

    def run(term: JTPairTerm) -> tuple[int, int]:
        assert term.b >= 1, "pair terms from a partition always have b >= 1"
        tau, tau_bar = term.tau, term.tau_bar
        plus = count_points(CRSystem(lam2, mu2, tau), face_F_plus(lam2, mu2, tau, ell))
        minus = count_points(
            CRSystem(lam2, mu2, tau_bar), face_F_minus(lam2, mu2, tau_bar, ell)
        )
        return plus, minus

    counts = _map_ordered(run, terms, threads)
    return [
        {
            "sign": term.sign,
            "tau": list(term.tau),
            "tauBar": list(term.tau_bar),
            "countPlus": plus,
            "countMinus": minus,
        }
        for term, (plus, minus) in zip(terms, counts)
    ]


def kron_via_faces(lam: Partition, mu: Partition, nu: Partition, ell: int = 1, threads: int = 1) -> int:
    """Kronecker coefficient from face counts alone (must match kron_via_cr)."""
    lam2, mu2, nu2, shortcut = normalize_triple(lam, mu, nu)
    if not 1 <= ell <= max(len(lam2), 1):
        raise ValueError(f"ell = {ell} out of range [1, {len(lam2)}]")
    if shortcut:
        return _shortcut_value(lam2, mu2, nu2)
    breakdown = face_term_breakdown(lam, mu, nu, ell, threads)
    total = sum(item["sign"] * (item["countPlus"] - item["countMinus"]) for item in breakdown)
    assert total >= 0, f"negative coefficient {total} for {lam}, {mu}, {nu}"
    return total

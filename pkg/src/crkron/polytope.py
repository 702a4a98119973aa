"""Column-row polytopes: constraints, membership, and exact point counting.

A column-row polytope CR(lam, mu; tau) sits inside the 3-way transportation
polytope T(lam, mu, tau).  Its extra constraints live on two flattenings of
the p x q x r array X: the pr x q vertical stack of the level matrices
(highest level on top) and the p x qr horizontal concatenation.  Both carry
a vanishing staircase and a family of column/row prefix-sum inequalities.

Counting is exhaustive: a depth-first assignment of entries in level-major,
row-major order, pruned by marginal residuals and by each inequality as soon
as its last referenced entry has been assigned.  No floating point anywhere;
rational data uses ``fractions.Fraction``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .partitions import Composition, Partition, SizeMismatch, partition

Number = Union[int, Fraction]


class NotDiagConstant(ValueError):
    """First level of a tensor is not in diagonal-constant triangular form."""


@dataclass(frozen=True)
class Tensor3:
    """p x q x r array stored as a tuple of level matrices, level 1 first."""

    levels: tuple[tuple[tuple[Number, ...], ...], ...]

    def __post_init__(self):
        if not self.levels:
            raise ValueError("tensor needs at least one level")
        p = len(self.levels[0])
        if p == 0:
            raise ValueError("tensor needs at least one row")
        q = len(self.levels[0][0])
        if q == 0:
            raise ValueError("tensor needs at least one column")
        for level in self.levels:
            if len(level) != p or any(len(row) != q for row in level):
                raise ValueError("ragged tensor")

    @staticmethod
    def from_levels(levels: Iterable[Iterable[Iterable[Number]]]) -> "Tensor3":
        return Tensor3(tuple(tuple(tuple(row) for row in level) for level in levels))

    @staticmethod
    def zeros(p: int, q: int, r: int) -> "Tensor3":
        return Tensor3(tuple(tuple((0,) * q for _ in range(p)) for _ in range(r)))

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.levels[0]), len(self.levels[0][0]), len(self.levels)

    def level(self, k: int) -> tuple[tuple[Number, ...], ...]:
        """Level matrix X^{(k)}, 1-based."""
        return self.levels[k - 1]

    def entry(self, i: int, j: int, k: int) -> Number:
        """Entry x_{i,j,k}, all indices 1-based."""
        return self.levels[k - 1][i - 1][j - 1]

    def marginals(self) -> tuple[tuple[Number, ...], tuple[Number, ...], tuple[Number, ...]]:
        """The three 1-marginals (row sums, column sums, level sums)."""
        p, q, r = self.dims
        rows = tuple(sum(self.levels[k][i][j] for j in range(q) for k in range(r)) for i in range(p))
        cols = tuple(sum(self.levels[k][i][j] for i in range(p) for k in range(r)) for j in range(q))
        levs = tuple(sum(self.levels[k][i][j] for i in range(p) for j in range(q)) for k in range(r))
        return rows, cols, levs

    def flatten_col(self) -> tuple[tuple[Number, ...], ...]:
        """pr x q stack of the level matrices with the highest level on top."""
        return tuple(row for level in reversed(self.levels) for row in level)

    def flatten_row(self) -> tuple[tuple[Number, ...], ...]:
        """p x qr concatenation of the level matrices, highest level leftmost."""
        p, q, r = self.dims
        return tuple(
            tuple(self.levels[k][i][j] for k in reversed(range(r)) for j in range(q))
            for i in range(p)
        )

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dims != other.dims:
            raise SizeMismatch(f"dims {self.dims} != {other.dims}")
        return Tensor3(
            tuple(
                tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(la, lb))
                for la, lb in zip(self.levels, other.levels)
            )
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        if self.dims != other.dims:
            raise SizeMismatch(f"dims {self.dims} != {other.dims}")
        return Tensor3(
            tuple(
                tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(la, lb))
                for la, lb in zip(self.levels, other.levels)
            )
        )

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for level in self.levels for row in level for x in row)

    def to_json_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "levels": [[list(row) for row in level] for level in self.levels],
        }


# --- face predicates -------------------------------------------------------


@dataclass(frozen=True)
class DiagZero:
    """Face x_i = 0 (i-th diagonal value of the first level)."""

    index: int


@dataclass(frozen=True)
class EntryZero:
    """Face x^{(2)}_{l,l} = 0."""

    index: int


@dataclass(frozen=True)
class ColTight:
    """Face where the column inequality C(j, t) holds with equality."""

    j: int
    t: int


@dataclass(frozen=True)
class RowTight:
    """Face where the row inequality R(i, s) holds with equality."""

    i: int
    s: int


@dataclass(frozen=True)
class FaceUnion:
    """Union of faces; a point belongs if it lies in any member."""

    faces: tuple


FacePredicate = Union[DiagZero, EntryZero, ColTight, RowTight, FaceUnion]


def face_contains(tensor: Tensor3, face: FacePredicate) -> bool:
    """Whether ``tensor`` lies in the face (tensor assumed in the ambient cone)."""
    if isinstance(face, FaceUnion):
        return any(face_contains(tensor, member) for member in face.faces)
    if isinstance(face, DiagZero):
        return diag_values(tensor)[face.index - 1] == 0
    if isinstance(face, EntryZero):
        return tensor.entry(face.index, face.index, 2) == 0
    if isinstance(face, ColTight):
        return col_ineq_slack(tensor, face.j, face.t) == 0
    if isinstance(face, RowTight):
        return row_ineq_slack(tensor, face.i, face.s) == 0
    raise TypeError(f"not a face predicate: {face!r}")


# --- constraint compilation ------------------------------------------------

# A check is a pair (lhs, rhs) of flat-index tuples meaning
# sum(entries[lhs]) >= sum(entries[rhs]).  Flat index of (i, j, k), 1-based,
# is ((k-1)*p + (i-1))*q + (j-1): level-major, row-major, level 1 first.


def _flat(i: int, j: int, k: int, p: int, q: int) -> int:
    return ((k - 1) * p + (i - 1)) * q + (j - 1)


def _col_cell(row: int, col: int, p: int, q: int, r: int) -> tuple[int, int, int]:
    """Tensor coordinates of cell (row, col) of the pr x q stack."""
    k = r - (row - 1) // p
    i = (row - 1) % p + 1
    return i, col, k


def _row_cell(row: int, col: int, p: int, q: int, r: int) -> tuple[int, int, int]:
    """Tensor coordinates of cell (row, col) of the p x qr concatenation."""
    k = r - (col - 1) // q
    j = (col - 1) % q + 1
    return row, j, k


def _compile_constraints(p: int, q: int, r: int):
    """Vanishing cells and prefix-sum checks for the (p, q, r) column-row cone."""
    vanishing = set()
    for k in range(1, r + 1):
        bound = min(k * p, k * q) + 1
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                if i + j > bound:
                    vanishing.add((i, j, k))

    col_checks = []
    m = min(p * r, q)
    for j in range(1, m):
        for i in range(2, p * r + 1 - j + 1):
            lhs = tuple(
                _flat(*_col_cell(row, j, p, q, r), p, q) for row in range(i, p * r + 1 - j + 1)
            )
            rhs = tuple(
                _flat(*_col_cell(row, j + 1, p, q, r), p, q) for row in range(i - 1, p * r - j + 1)
            )
            col_checks.append(((j, i), lhs, rhs))

    row_checks = []
    m = min(p, q * r)
    for i in range(1, m):
        for j in range(2, q * r + 1 - i + 1):
            lhs = tuple(
                _flat(*_row_cell(i, col, p, q, r), p, q) for col in range(j, q * r + 1 - i + 1)
            )
            rhs = tuple(
                _flat(*_row_cell(i + 1, col, p, q, r), p, q) for col in range(j - 1, q * r - i + 1)
            )
            row_checks.append(((i, j), lhs, rhs))

    return vanishing, tuple(col_checks), tuple(row_checks)


class CRSystem:
    """Full constraint description of CR(lam, mu; tau).

    ``tau`` may contain zero parts: the corresponding levels are kept, with
    every entry forced to 0, so that level indices stay aligned with any
    shifted composition derived from ``tau``.  With ``transport_only`` the
    vanishing cells and inequalities are dropped and the system describes
    the plain transportation polytope T(lam, mu, tau).
    """

    def __init__(
        self,
        lam: Partition,
        mu: Partition,
        tau: Composition,
        transport_only: bool = False,
    ):
        self.lam = partition(lam)
        self.mu = partition(mu)
        self.tau = tuple(int(t) for t in tau)
        if any(t < 0 for t in self.tau):
            raise ValueError(f"negative part in {tau}")
        if sum(self.lam) != sum(self.mu) or sum(self.lam) != sum(self.tau):
            raise SizeMismatch(f"sizes of {lam}, {mu}, {tau} differ")
        if not self.lam or not self.tau:
            raise ValueError("lam, mu, tau must all be nonempty")
        self.p = len(self.lam)
        self.q = len(self.mu)
        self.r = len(self.tau)
        self.transport_only = bool(transport_only)
        vanishing, col_checks, row_checks = _compile_constraints(self.p, self.q, self.r)
        self.vanishing = frozenset(vanishing)
        self.column_inequalities = tuple(label for label, _, _ in col_checks)
        self.row_inequalities = tuple(label for label, _, _ in row_checks)
        self._checks = tuple((lhs, rhs) for _, lhs, rhs in col_checks + row_checks)

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r

    def __repr__(self):
        kind = "T" if self.transport_only else "CR"
        return f"{kind}({self.lam}, {self.mu}; {self.tau})"

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "tau": list(self.tau),
            "dims": [self.p, self.q, self.r],
            "transportOnly": self.transport_only,
            "vanishing": sorted([i, j, k] for (i, j, k) in self.vanishing),
            "columnInequalities": [list(label) for label in self.column_inequalities],
            "rowInequalities": [list(label) for label in self.row_inequalities],
        }


def _flat_entries(tensor: Tensor3) -> list[Number]:
    return [x for level in tensor.levels for row in level for x in row]


def _cone_conditions_hold(tensor: Tensor3) -> bool:
    p, q, r = tensor.dims
    vanishing, col_checks, row_checks = _compile_constraints(p, q, r)
    entries = _flat_entries(tensor)
    if any(entries[_flat(i, j, k, p, q)] != 0 for (i, j, k) in vanishing):
        return False
    for _, lhs, rhs in col_checks + row_checks:
        if sum(entries[t] for t in lhs) < sum(entries[t] for t in rhs):
            return False
    return True


def in_cone(tensor: Tensor3) -> bool:
    """Membership in the column-row cone: all constraints, no marginal ties."""
    return tensor.is_nonnegative() and _cone_conditions_hold(tensor)


def is_member(tensor: Tensor3, system: CRSystem) -> bool:
    """Membership of a (rational or integer) tensor in the system's polytope."""
    if tensor.dims != system.dims:
        raise SizeMismatch(f"tensor dims {tensor.dims} != system dims {system.dims}")
    if not tensor.is_nonnegative():
        return False
    if tensor.marginals() != (system.lam, system.mu, system.tau):
        return False
    if system.transport_only:
        return True
    return _cone_conditions_hold(tensor)


def marginals(tensor: Tensor3):
    return tensor.marginals()


def flatten_col(tensor: Tensor3):
    return tensor.flatten_col()


def flatten_row(tensor: Tensor3):
    return tensor.flatten_row()


# --- exhaustive search -----------------------------------------------------


def _search(system: CRSystem, on_solution: Callable[[list[int]], None]) -> None:
    """Depth-first assignment of all integer points, lexicographic order."""
    p, q, r = system.dims
    total_cells = p * q * r
    forced = [False] * total_cells
    if not system.transport_only:
        for (i, j, k) in system.vanishing:
            forced[_flat(i, j, k, p, q)] = True

    row_of = [0] * total_cells
    col_of = [0] * total_cells
    lev_of = [0] * total_cells
    for k in range(1, r + 1):
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                idx = _flat(i, j, k, p, q)
                row_of[idx], col_of[idx], lev_of[idx] = i - 1, j - 1, k - 1

    free_cells = [idx for idx in range(total_cells) if not forced[idx]]
    order_pos = {idx: pos for pos, idx in enumerate(free_cells)}

    # Units with every cell forced must have zero target.
    unit_last: list[list[tuple[int, int]]] = [[] for _ in range(len(free_cells))]
    for axis, (cells_of, target) in enumerate(
        ((row_of, system.lam), (col_of, system.mu), (lev_of, system.tau))
    ):
        last = {}
        for idx in free_cells:
            last[cells_of[idx]] = idx
        for unit in range(len(target)):
            if unit not in last:
                if target[unit] != 0:
                    return
            else:
                unit_last[order_pos[last[unit]]].append((axis, unit))

    checks_at: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = [
        [] for _ in range(len(free_cells))
    ]
    if not system.transport_only:
        for lhs, rhs in system._checks:
            live = [order_pos[t] for t in lhs + rhs if not forced[t]]
            if live:
                checks_at[max(live)].append((lhs, rhs))

    entries = [0] * total_cells
    row_rem = list(system.lam)
    col_rem = list(system.mu)
    lev_rem = list(system.tau)
    rems = (row_rem, col_rem, lev_rem)
    n_free = len(free_cells)

    def rec(pos: int) -> None:
        if pos == n_free:
            on_solution(entries)
            return
        idx = free_cells[pos]
        i, j, k = row_of[idx], col_of[idx], lev_of[idx]
        ub = min(row_rem[i], col_rem[j], lev_rem[k])
        finals = unit_last[pos]
        if finals:
            need = rems[finals[0][0]][finals[0][1]]
            for axis, unit in finals[1:]:
                if rems[axis][unit] != need:
                    return
            if need > ub:
                return
            values = (need,)
        else:
            values = range(ub + 1)
        for v in values:
            entries[idx] = v
            row_rem[i] -= v
            col_rem[j] -= v
            lev_rem[k] -= v
            ok = True
            for lhs, rhs in checks_at[pos]:
                lo = 0
                for t in lhs:
                    lo += entries[t]
                hi = 0
                for t in rhs:
                    hi += entries[t]
                if lo < hi:
                    ok = False
                    break
            if ok:
                rec(pos + 1)
            row_rem[i] += v
            col_rem[j] += v
            lev_rem[k] += v
        entries[idx] = 0

    rec(0)


def _tensor_from_flat(entries: Sequence[Number], p: int, q: int, r: int) -> Tensor3:
    levels = []
    for k in range(r):
        base = k * p * q
        levels.append(
            tuple(tuple(entries[base + i * q + j] for j in range(q)) for i in range(p))
        )
    return Tensor3(tuple(levels))


def count_points(system: CRSystem, face: FacePredicate | None = None) -> int:
    """Number of integer points of the system (optionally inside a face union)."""
    count = 0
    if face is None:

        def bump(_entries):
            nonlocal count
            count += 1

    else:
        p, q, r = system.dims

        def bump(entries):
            nonlocal count
            if face_contains(_tensor_from_flat(entries, p, q, r), face):
                count += 1

    _search(system, bump)
    return count


def enumerate_points(system: CRSystem) -> tuple[Tensor3, ...]:
    """All integer points, in lexicographic order of the flattened entries."""
    p, q, r = system.dims
    out: list[Tensor3] = []
    _search(system, lambda entries: out.append(_tensor_from_flat(entries, p, q, r)))
    return tuple(out)


def face_hit_counts(system: CRSystem, union: FaceUnion) -> tuple[int, ...]:
    """Diagnostic: per-face point counts over a union (faces may overlap)."""
    p, q, r = system.dims
    hits = [0] * len(union.faces)

    def tally(entries):
        tensor = _tensor_from_flat(entries, p, q, r)
        for pos, member in enumerate(union.faces):
            if face_contains(tensor, member):
                hits[pos] += 1

    _search(system, tally)
    return tuple(hits)


# --- level-1 structure and the named inequalities --------------------------


def diag_values(tensor: Tensor3) -> tuple[Number, ...]:
    """Diagonal values (x_1, ..., x_p) of the first level.

    Requires p <= q and the first level to be constant on diagonals with
    zeros below the antidiagonal, which holds for every member of a
    column-row cone.
    """
    p, q, r = tensor.dims
    if p > q:
        raise NotDiagConstant(f"requires p <= q, got dims {tensor.dims}")
    level1 = tensor.level(1)
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            want = level1[0][i + j - 2] if i + j <= p + 1 else 0
            if level1[i - 1][j - 1] != want:
                raise NotDiagConstant(f"first level breaks diagonal form at ({i}, {j})")
    return tuple(level1[0][d] for d in range(p))


def _col_prefix(tensor: Tensor3, j: int, t: int) -> Number:
    """S^c_{j,t}: first t entries of column j of the reduced stack, bottom up."""
    if t == 0:
        return 0
    p, q, r = tensor.dims
    c, d = divmod(t - 1, p)
    d += 1
    total = sum(tensor.entry(i, j, k + 1) for k in range(1, c + 1) for i in range(1, p + 1))
    total += sum(tensor.entry(i, j, c + 2) for i in range(p + 1 - d, p + 1))
    return total


def _row_prefix(tensor: Tensor3, i: int, s: int) -> Number:
    """S^r_{i,s}: first s entries of row i of the reduced concatenation."""
    if s == 0:
        return 0
    p, q, r = tensor.dims
    e, f = divmod(s - 1, q)
    f += 1
    total = sum(tensor.entry(i, j, k + 1) for k in range(1, e + 1) for j in range(1, q + 1))
    total += sum(tensor.entry(i, j, e + 2) for j in range(q + 1 - f, q + 1))
    return total


def col_ineq_slack(tensor: Tensor3, j: int, t: int) -> Number:
    """Slack of the column inequality C(j, t): x_j + S^c_{j,t-1} - S^c_{j+1,t}."""
    p, q, r = tensor.dims
    if not 1 <= j <= p:
        raise ValueError(f"j = {j} out of range [1, {p}]")
    if j == p and p >= q:
        raise ValueError("C(p, t) is only defined when p < q")
    if not 1 <= t <= p * (r - 1):
        raise ValueError(f"t = {t} out of range [1, {p * (r - 1)}]")
    x = diag_values(tensor)
    return x[j - 1] + _col_prefix(tensor, j, t - 1) - _col_prefix(tensor, j + 1, t)


def row_ineq_slack(tensor: Tensor3, i: int, s: int) -> Number:
    """Slack of the row inequality R(i, s): x_i + S^r_{i,s-1} - S^r_{i+1,s}."""
    p, q, r = tensor.dims
    if not 1 <= i <= p - 1:
        raise ValueError(f"i = {i} out of range [1, {p - 1}]")
    if not 1 <= s <= q * (r - 1):
        raise ValueError(f"s = {s} out of range [1, {q * (r - 1)}]")
    x = diag_values(tensor)
    return x[i - 1] + _row_prefix(tensor, i, s - 1) - _row_prefix(tensor, i + 1, s)


# --- cone dimension, hypercube samples, affine rank ------------------------


def _require_cone_dims(p: int, q: int, r: int) -> None:
    if not (1 <= p <= q <= p * r):
        raise ValueError(f"requires p <= q <= p*r, got ({p}, {q}, {r})")


def cone_dim(p: int, q: int, r: int) -> int:
    """Dimension of the column-row cone: pqr - C(p,2) - C(q,2)."""
    _require_cone_dims(p, q, r)
    return p * q * r - p * (p - 1) // 2 - q * (q - 1) // 2


def polytope_dim_bound(p: int, q: int, r: int) -> int:
    """Upper bound for the dimension of a column-row polytope."""
    if r < 2:
        raise ValueError(f"requires r >= 2, got r = {r}")
    _require_cone_dims(p, q, r)
    return cone_dim(p, q, r) - (p + q + r) + 2


def hypercube_interval(j: int, q: int) -> tuple[Fraction, Fraction]:
    """Open interval I_j, nested so that everything in I_j exceeds I_{j+1}."""
    if not 1 <= j <= q:
        raise ValueError(f"j = {j} out of range [1, {q}]")
    return Fraction(2 * (q - j) + 1, 2 * q + 2), Fraction(2 * (q - j) + 2, 2 * q + 2)


def free_cone_coordinates(p: int, q: int, r: int) -> tuple[tuple, ...]:
    """Free coordinates of the open hypercube inside the (p, q, r) cone.

    ``("diag", d)`` is the d-th diagonal value of level 1; ``(i, j, k)`` is a
    free cell of a higher level.  Every free coordinate ranges over the open
    interval attached to its column (diagonal d uses column d).
    """
    _require_cone_dims(p, q, r)
    coords: list[tuple] = [("diag", d) for d in range(1, p + 1)]
    for k in range(2, r + 1):
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                if i + j - 1 <= k * p:
                    coords.append((i, j, k))
    return tuple(coords)


def build_hypercube_point(p: int, q: int, r: int, picks: dict) -> Tensor3:
    """Assemble a cone point from one value per free hypercube coordinate."""
    levels = [[[Fraction(0)] * q for _ in range(p)] for _ in range(r)]
    for coord in free_cone_coordinates(p, q, r):
        if coord[0] == "diag":
            d = coord[1]
            lo, hi = hypercube_interval(d, q)
            value = Fraction(picks[coord])
            if not lo < value < hi:
                raise ValueError(f"pick for {coord} outside {lo}..{hi}")
            for i in range(1, p + 1):
                j = d + 1 - i
                if 1 <= j <= q:
                    levels[0][i - 1][j - 1] = q * (r - 1) + value
        else:
            i, j, k = coord
            lo, hi = hypercube_interval(j, q)
            value = Fraction(picks[coord])
            if not lo < value < hi:
                raise ValueError(f"pick for {coord} outside {lo}..{hi}")
            levels[k - 1][i - 1][j - 1] = value
    return Tensor3.from_levels(levels)


def hypercube_sample(p: int, q: int, r: int, seed: int) -> Tensor3:
    """Deterministic rational cone point drawn from the open hypercube."""
    rng = random.Random(f"column-row-hypercube:{p}:{q}:{r}:{seed}")
    picks = {}
    for coord in free_cone_coordinates(p, q, r):
        lo, hi = hypercube_interval(coord[1], q)
        picks[coord] = lo + (hi - lo) * Fraction(rng.randrange(1, 256), 256)
    return build_hypercube_point(p, q, r, picks)


def affine_rank(points: Sequence[Tensor3]) -> int:
    """Rank of the difference set of ``points`` under exact elimination."""
    if not points:
        raise ValueError("affine_rank needs at least one point")
    base = _flat_entries(points[0])
    rows = []
    for point in points[1:]:
        if point.dims != points[0].dims:
            raise SizeMismatch("points must share dimensions")
        rows.append([Fraction(x) - Fraction(y) for x, y in zip(_flat_entries(point), base)])
    rank = 0
    cols = len(base)
    pivot_col = 0
    while pivot_col < cols and rank < len(rows):
        pivot = next((ri for ri in range(rank, len(rows)) if rows[ri][pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for ri in range(rank + 1, len(rows)):
            factor = rows[ri][pivot_col] / lead
            if factor:
                rows[ri] = [a - factor * b for a, b in zip(rows[ri], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank

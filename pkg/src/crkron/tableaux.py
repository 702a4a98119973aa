"""Semistandard tableaux, word insertion, RSK, and the tensor-to-tableaux map.

Words follow the bottom-to-top reading conventions throughout: the row word
reads rows from the bottom row up, each left to right; the column word reads
columns left to right, each bottom to top.  A word's direction is part of
each function's contract and never inferred.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import (
    Composition,
    Partition,
    SizeMismatch,
    partition,
)
from .polytope import Tensor3

Word = tuple[int, ...]
Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SkewTableau:
    """Semistandard filling of the skew shape outer/inner.

    ``rows[i]`` holds the entries of row i in the columns inner_i .. outer_i - 1.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer, inner = self.outer, self.inner
        if len(self.rows) != len(outer):
            raise ValueError("one entry row per shape row required")
        pad = inner + (0,) * (len(outer) - len(inner))
        if len(inner) > len(outer) or any(pad[i] > outer[i] for i in range(len(outer))):
            raise ValueError(f"inner shape {inner} not contained in {outer}")
        for i, row in enumerate(self.rows):
            if len(row) != outer[i] - pad[i]:
                raise ValueError(f"row {i} has wrong length")
            if any(x < 1 for x in row):
                raise ValueError("entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} not weakly increasing")
        for i in range(1, len(outer)):
            for j in range(pad[i], outer[i]):
                if pad[i - 1] <= j < outer[i - 1]:
                    if self.rows[i - 1][j - pad[i - 1]] >= self.rows[i][j - pad[i]]:
                        raise ValueError(f"column {j} not strictly increasing")

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def content(self) -> Composition:
        counts = Counter(x for row in self.rows for x in row)
        top = max(counts) if counts else 0
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def row_word(self) -> Word:
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def col_word(self) -> Word:
        pad = self.inner + (0,) * (len(self.outer) - len(self.inner))
        out: list[int] = []
        width = self.outer[0] if self.outer else 0
        for j in range(width):
            for i in reversed(range(len(self.outer))):
                if pad[i] <= j < self.outer[i]:
                    out.append(self.rows[i][j - pad[i]])
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(row) for row in self.rows],
        }


def straight_tableau(rows: Iterable[Iterable[int]]) -> SkewTableau:
    """Build a straight-shape tableau from its entry rows."""
    entry_rows = tuple(tuple(row) for row in rows)
    outer = partition(len(row) for row in entry_rows)
    return SkewTableau(outer, (), entry_rows)


def canonical_tableau(lam: Partition) -> SkewTableau:
    """The unique semistandard tableau of shape and content ``lam``."""
    lam = partition(lam)
    return straight_tableau(tuple((i + 1,) * lam[i] for i in range(len(lam))))


def is_reverse_lattice(word: Iterable[int]) -> bool:
    """True iff every suffix has at least as many i's as (i+1)'s, all i."""
    counts: Counter[int] = Counter()
    for letter in reversed(tuple(word)):
        counts[letter] += 1
        if letter > 1 and counts[letter] > counts[letter - 1]:
            return False
    return True


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion into mutable rows; returns the new box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return r, pos
        x, row[pos] = row[pos], x
        r += 1


def _column_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Column insertion (bump the topmost entry >= x); returns the new box."""
    c = 0
    while True:
        r = 0
        bumped = None
        while r < len(rows) and len(rows[r]) > c:
            if rows[r][c] >= x:
                bumped = rows[r][c]
                rows[r][c] = x
                break
            r += 1
        if bumped is None:
            if r == len(rows):
                rows.append([])
            assert len(rows[r]) == c, "column insertion landed off-shape"
            rows[r].append(x)
            return r, c
        x = bumped
        c += 1


def insertion_tableau(word: Iterable[int]) -> SkewTableau:
    """P(word): row-insert the letters left to right.

    Column-inserting the letters right to left produces the same tableau;
    ``tests`` pin that agreement.
    """
    rows: list[list[int]] = []
    for x in word:
        _row_insert(rows, x)
    return straight_tableau(rows)


def column_insertion_tableau(word: Iterable[int]) -> SkewTableau:
    """P(word) computed by column-inserting the letters right to left."""
    rows: list[list[int]] = []
    for x in reversed(tuple(word)):
        _column_insert(rows, x)
    return straight_tableau(rows)


def two_row_array(matrix: Matrix) -> tuple[Word, Word]:
    """Lexicographic two-row array (u, v) of a nonnegative integer matrix."""
    top: list[int] = []
    bottom: list[int] = []
    for i, row in enumerate(matrix, start=1):
        for j, mult in enumerate(row, start=1):
            if mult < 0:
                raise ValueError("matrix entries must be nonnegative")
            top.extend([i] * mult)
            bottom.extend([j] * mult)
    return tuple(top), tuple(bottom)


def rsk(matrix: Matrix) -> tuple[SkewTableau, SkewTableau]:
    """RSK correspondence: (insertion tableau P, recording tableau Q)."""
    top, bottom = two_row_array(matrix)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for u, v in zip(top, bottom):
        r, _ = _row_insert(p_rows, v)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(u)
    return straight_tableau(p_rows), straight_tableau(q_rows)


def _transpose(matrix: Matrix) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(row) for row in matrix]
    return tuple(zip(*rows)) if rows else ()


def _p_canonical_conditions(matrix: Matrix) -> bool:
    """Inequality form of "the insertion tableau of the matrix is canonical"."""
    b = [list(row) for row in matrix]
    p = len(b)
    q = len(b[0]) if p else 0
    m = min(p, q)
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if i + j > p + 1 and b[i - 1][j - 1] != 0:
                return False
    for j in range(1, m):
        for i in range(2, p + 1 - j + 1):
            lhs = sum(b[k - 1][j - 1] for k in range(i, p + 1 - j + 1))
            rhs = sum(b[k - 1][j] for k in range(i - 1, p - j + 1))
            if lhs < rhs:
                return False
    return True


def main_lemma_conditions(matrix: Matrix) -> tuple[bool, bool]:
    """(P canonical?, Q canonical?) for RSK(matrix), read off linear inequalities.

    Evaluated directly from the two inequality families, never through RSK;
    the recording side is the insertion side of the transpose.
    """
    return _p_canonical_conditions(matrix), _p_canonical_conditions(_transpose(matrix))


# --- the tensor <-> (Q, P, (T, S)) correspondence ---------------------------


@dataclass(frozen=True)
class LRMultitableau:
    """Chain of Littlewood-Richardson skew tableaux filling a nested shape."""

    components: tuple[SkewTableau, ...]

    def __post_init__(self):
        inner: Partition = ()
        for comp in self.components:
            if comp.inner != inner:
                raise ValueError("components do not chain")
            inner = comp.outer
            if not is_reverse_lattice(comp.row_word()):
                raise ValueError("component word is not a reverse lattice word")

    @property
    def shape(self) -> Partition:
        return self.components[-1].outer if self.components else ()

    def type(self) -> Composition:
        return tuple(comp.size for comp in self.components)

    def contents(self) -> tuple[Partition, ...]:
        return tuple(partition(comp.content()) for comp in self.components)

    def to_json_dict(self) -> list:
        return [comp.to_json_dict() for comp in self.components]


def _product_with_recording(tabs: Sequence[SkewTableau]) -> tuple[SkewTableau, LRMultitableau]:
    """Column-insert the column words of ``tabs`` in order, recording new boxes.

    Step k column-inserts the letters of the column word of tabs[k] starting
    from the word's end, and writes the letters of the canonical tableau's
    column word (same order) into the boxes as they appear.
    """
    rows: list[list[int]] = []
    components: list[SkewTableau] = []
    inner: Partition = ()
    for tab in tabs:
        gamma = tab.outer
        letters = tab.col_word()[::-1]
        recording = canonical_tableau(gamma).col_word()[::-1] if gamma else ()
        new_boxes: dict[tuple[int, int], int] = {}
        for v, u in zip(letters, recording):
            box = _column_insert(rows, v)
            new_boxes[box] = u
        outer = partition(len(row) for row in rows)
        pad_inner = inner + (0,) * (len(outer) - len(inner))
        comp_rows = tuple(
            tuple(new_boxes[(i, j)] for j in range(pad_inner[i], outer[i]))
            for i in range(len(outer))
        )
        components.append(SkewTableau(outer, inner, comp_rows))
        inner = outer
    return straight_tableau(rows), LRMultitableau(tuple(components))


def theorem41_map(tensor: Tensor3) -> tuple[SkewTableau, SkewTableau, LRMultitableau, LRMultitableau]:
    """Image (Q, P, T, S) of an integer tensor under the level-RSK bijection.

    Each level matrix maps through RSK to a pair (P_k, Q_k); the P_k are
    multiplied by column insertion with the canonical column words recorded
    into the new boxes, giving (P, S), and the Q_k give (Q, T) the same way.
    """
    _, _, r = tensor.dims
    p_tabs: list[SkewTableau] = []
    q_tabs: list[SkewTableau] = []
    for k in range(1, r + 1):
        pk, qk = rsk(tensor.level(k))
        p_tabs.append(pk)
        q_tabs.append(qk)
    p_tab, s_multi = _product_with_recording(p_tabs)
    q_tab, t_multi = _product_with_recording(q_tabs)
    return q_tab, p_tab, t_multi, s_multi


# --- enumeration: LR skew tableaux, multitableaux, Kostka numbers -----------


@lru_cache(maxsize=None)
def _lr_skew_content_counts(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    """Content -> count over all LR skew tableaux of shape outer/inner.

    Cells are filled in reverse reading order (top row right-to-left, then
    downwards) so the lattice condition can be enforced incrementally.
    """
    pad = inner + (0,) * (len(outer) - len(inner))
    cells = [
        (i, j)
        for i in range(len(outer))
        for j in reversed(range(pad[i], outer[i]))
    ]
    size = len(cells)
    grid: dict[tuple[int, int], int] = {}
    counts: Counter[Partition] = Counter()
    letter_count = [0] * (size + 2)

    def fill(pos: int) -> None:
        if pos == size:
            top = max((v for v in grid.values()), default=0)
            counts[tuple(letter_count[1 : top + 1])] += 1
            return
        i, j = cells[pos]
        hi = size
        right = grid.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = grid.get((i - 1, j)) if i > 0 else None
        lo = (above + 1) if above is not None else 1
        for v in range(lo, hi + 1):
            if v > 1 and letter_count[v] + 1 > letter_count[v - 1]:
                continue
            grid[(i, j)] = v
            letter_count[v] += 1
            fill(pos + 1)
            letter_count[v] -= 1
        grid.pop((i, j), None)

    fill(0)
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def _shapes_between(inner: Partition, bound: Partition, added: int) -> tuple[Partition, ...]:
    """Partitions containing ``inner``, contained in ``bound``, of size +added."""
    out: list[Partition] = []
    pad = inner + (0,) * (len(bound) - len(inner))

    def go(row: int, left: int, prev: int, built: tuple[int, ...]) -> None:
        if row == len(bound):
            if left == 0:
                out.append(partition(built))
            return
        lo = pad[row]
        hi = min(bound[row], prev)
        for value in range(lo, hi + 1):
            if value - pad[row] <= left:
                go(row + 1, left - (value - pad[row]), value, built + (value,))

    go(0, added, bound[0] if bound else 0, ())
    return tuple(out)


@lru_cache(maxsize=None)
def _lr_multitableau_contents(lam: Partition, tau: Composition) -> tuple[tuple[tuple[Partition, ...], int], ...]:
    """Content tuple -> number of LR multitableaux of shape lam and type tau."""
    results: Counter[tuple[Partition, ...]] = Counter()

    def go(step: int, inner: Partition, contents: tuple[Partition, ...], weight: int) -> None:
        if step == len(tau):
            if inner == lam:
                results[contents] += weight
            return
        for outer in _shapes_between(inner, lam, tau[step]):
            for content, cnt in _lr_skew_content_counts(outer, inner):
                go(step + 1, outer, contents + (content,), weight * cnt)

    go(0, (), (), 1)
    return tuple(sorted(results.items()))


def count_lr_pairs(lam: Partition, mu: Partition, tau: Composition) -> int:
    """#LR(lam, mu; tau) by exhaustive enumeration of multitableau pairs."""
    if sum(lam) != sum(mu) or sum(lam) != sum(tau):
        raise SizeMismatch(f"sizes of {lam}, {mu}, {tau} differ")
    left = dict(_lr_multitableau_contents(tuple(lam), tuple(tau)))
    right = dict(_lr_multitableau_contents(tuple(mu), tuple(tau)))
    return sum(cnt * right.get(key, 0) for key, cnt in left.items())


@lru_cache(maxsize=None)
def kostka(gamma: Partition, tau: Composition) -> int:
    """Number of semistandard tableaux of shape ``gamma`` and content ``tau``."""
    if sum(gamma) != sum(tau):
        raise SizeMismatch(f"|{gamma}| != |{tau}|")
    quota = list(tau)
    cells = [(i, j) for i in range(len(gamma)) for j in range(gamma[i])]
    grid: dict[tuple[int, int], int] = {}
    total = 0

    def fill(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = grid[(i, j - 1)]
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        found = 0
        for v in range(lo, len(quota) + 1):
            if quota[v - 1] == 0:
                continue
            quota[v - 1] -= 1
            grid[(i, j)] = v
            found += fill(pos + 1)
            quota[v - 1] += 1
        grid.pop((i, j), None)
        return found

    total = fill(0)
    return total

"""
Smith normal form over the integers.

Entries are Python ints, so intermediate growth never overflows. The pivot
is the nonzero entry of least absolute value in the remaining block, ties
broken by row-major position.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """left @ matrix @ right == diagonal, with left and right unimodular."""
    diagonal: Tuple[Tuple[int, ...], ...]
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]

    @property
    def factors(self) -> Tuple[int, ...]:
        """Nonzero invariant factors, each dividing the next."""
        size = min(len(self.diagonal), len(self.diagonal[0]) if self.diagonal else 0)
        return tuple(self.diagonal[i][i] for i in range(size) if self.diagonal[i][i])

    @property
    def rank(self) -> int:
        return len(self.factors)


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(matrix: Optional[Matrix]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in matrix) if matrix is not None else ()


class SmithReduction:

    def __init__(self, matrix: Sequence[Sequence[int]], track: bool = True):
        self.a: Matrix = [[int(x) for x in row] for row in matrix]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        if any(len(row) != self.cols for row in self.a):
            raise ValueError('Matrix rows have different lengths')
        self.track = track
        self.left = _identity(self.rows) if track else None
        self.right = _identity(self.cols) if track else None

    def _pivot(self, s: int) -> Optional[Tuple[int, int]]:
        best, where = None, None
        for i in range(s, self.rows):
            for j in range(s, self.cols):
                value = abs(self.a[i][j])
                if value and (best is None or value < best):
                    best, where = value, (i, j)
        return where

    def _swap_rows(self, i: int, k: int) -> None:
        self.a[i], self.a[k] = self.a[k], self.a[i]
        if self.track:
            self.left[i], self.left[k] = self.left[k], self.left[i]

    def _swap_cols(self, j: int, k: int) -> None:
        for row in self.a:
            row[j], row[k] = row[k], row[j]
        if self.track:
            for row in self.right:
                row[j], row[k] = row[k], row[j]

    def _add_row(self, target: int, source: int, k: int) -> None:
        """row[target] += k * row[source]"""
        self.a[target] = [x + k * y for x, y in zip(self.a[target], self.a[source])]
        if self.track:
            self.left[target] = [x + k * y for x, y in zip(self.left[target], self.left[source])]

    def _add_col(self, target: int, source: int, k: int) -> None:
        for row in self.a:
            row[target] += k * row[source]
        if self.track:
            for row in self.right:
                row[target] += k * row[source]

    def _negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        if self.track:
            self.left[i] = [-x for x in self.left[i]]

    def reduce(self) -> SmithForm:
        s = 0
        while s < min(self.rows, self.cols):
            where = self._pivot(s)
            if where is None:
                break
            self._swap_rows(s, where[0])
            self._swap_cols(s, where[1])
            pivot = self.a[s][s]
            for i in range(s + 1, self.rows):
                if self.a[i][s]:
                    self._add_row(i, s, -(self.a[i][s] // pivot))
            for j in range(s + 1, self.cols):
                if self.a[s][j]:
                    self._add_col(j, s, -(self.a[s][j] // pivot))
            if any(self.a[i][s] for i in range(s + 1, self.rows)) or any(
                self.a[s][j] for j in range(s + 1, self.cols)
            ):
                # remainders are smaller than the pivot; pick again
                continue
            blocker = next(
                (i for i in range(s + 1, self.rows) for j in range(s + 1, self.cols)
                 if self.a[i][j] % pivot),
                None,
            )
            if blocker is not None:
                self._add_row(s, blocker, 1)
                continue
            if pivot < 0:
                self._negate_row(s)
            s += 1
        return SmithForm(_freeze(self.a), _freeze(self.left), _freeze(self.right))


def smith_normal_form(matrix: Sequence[Sequence[int]], track: bool = True) -> SmithForm:
    return SmithReduction(matrix, track).reduce()


def multiply(first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]) -> Matrix:
    return [
        [sum(a * b for a, b in zip(row, column)) for column in zip(*second)]
        for row in first
    ]

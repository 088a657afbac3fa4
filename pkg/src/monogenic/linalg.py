"""Sparse exact Gauss-Jordan elimination over the rationals.

Rows and vectors are ``{column: value}`` dicts with no stored zeros.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class InconsistentSystem(ValueError):
    pass


class RowReducer:
    """Incrementally maintained reduced row echelon form.

    Columns ``>= ncols`` are treated as right-hand sides: they are carried
    along but never chosen as pivots.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}
        # column -> pivot columns whose rows mention it
        self._occurs: dict[int, set[int]] = {}

    def _index(self, pc: int, row: Mapping[int, Fraction]) -> None:
        for c in row:
            if c != pc:
                self._occurs.setdefault(c, set()).add(pc)

    def _unindex(self, pc: int, row: Mapping[int, Fraction]) -> None:
        for c in row:
            if c != pc:
                s = self._occurs.get(c)
                if s is not None:
                    s.discard(pc)

    def add_row(self, row: Mapping[int, object]) -> int | None:
        """Insert a row; return the new pivot column, or None if dependent."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        for pc in [c for c in row if c in self.pivots]:
            f = row.get(pc)
            if not f:
                continue
            for c, v in self.pivots[pc].items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        candidates = [c for c in row if c < self.ncols]
        if not candidates:
            if row:
                raise InconsistentSystem("row reduces to 0 = nonzero")
            return None
        pc = min(candidates, key=lambda c: (len(self._occurs.get(c, ())), c))
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        for other in list(self._occurs.get(pc, ())):
            orow = self.pivots[other]
            f = orow[pc]
            self._unindex(other, orow)
            for c, v in row.items():
                nv = orow.get(c, 0) - f * v
                if nv:
                    orow[c] = nv
                else:
                    orow.pop(c, None)
            self._index(other, orow)
        self._occurs.pop(pc, None)
        self.pivots[pc] = row
        self._index(pc, row)
        return pc

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> list[dict[int, Fraction]]:
        basis = []
        for f in range(self.ncols):
            if f in self.pivots:
                continue
            vec = {f: Fraction(1)}
            for pc in self._occurs.get(f, ()):
                vec[pc] = -self.pivots[pc][f]
            basis.append(vec)
        return basis

    def solution(self, rhs_col: int) -> dict[int, Fraction]:
        """Unique solution for one right-hand-side column (full column rank)."""
        if self.rank != self.ncols:
            raise InconsistentSystem("system is underdetermined")
        out = {}
        for pc, row in self.pivots.items():
            v = row.get(rhs_col, 0)
            if v:
                out[pc] = v
        return out


def nullspace(rows: Iterable[Mapping[int, object]], ncols: int) -> list[dict[int, Fraction]]:
    red = RowReducer(ncols)
    for row in rows:
        red.add_row(row)
    return red.nullspace()

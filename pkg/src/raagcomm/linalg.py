"""Exact integer matrices: rank and Smith invariants without floating point.

Boundary matrices of cube complexes are sparse with entries in {-1, 0, 1},
so elimination first consumes unit pivots sparsely (each contributes an
invariant factor 1) and only hands the small leftover block to a dense
Smith normal form.
"""

from __future__ import annotations

import heapq
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import ValidationError


class IntegerMatrix:
    """Sparse integer matrix, stored as row dictionaries ``{col: value}``."""

    def __init__(self, rows: int, cols: int, entries: Iterable[Tuple[int, int, int]] = ()):
        if rows < 0 or cols < 0:
            raise ValidationError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self._data: Dict[int, Dict[int, int]] = {}
        for r, c, v in entries:
            self.add(r, c, v)

    def add(self, r: int, c: int, v: int):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ValidationError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"entry {v!r} is not an integer")
        row = self._data.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)
            if not row:
                del self._data[r]

    def __getitem__(self, rc: Tuple[int, int]) -> int:
        r, c = rc
        return self._data.get(r, {}).get(c, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def triplets(self) -> List[Tuple[int, int, int]]:
        return [(r, c, v) for r in sorted(self._data) for c, v in sorted(self._data[r].items())]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, ((r, c, v) for r, row in enumerate(dense) for c, v in enumerate(row) if v))

    def to_dense(self) -> List[List[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, row in self._data.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, ((c, r, v) for r, c, v in self.triplets()))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValidationError(f"cannot multiply {self.shape} by {other.shape}")
        out = IntegerMatrix(self.rows, other.cols)
        for r, row in self._data.items():
            acc: Dict[int, int] = {}
            for k, v in row.items():
                for c, w in other._data.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            for c, v in acc.items():
                if v:
                    out.add(r, c, v)
        return out

    def is_zero(self) -> bool:
        return not self._data

    def row_dicts(self) -> Dict[int, Dict[int, int]]:
        return {r: dict(row) for r, row in self._data.items()}

    def dump(self) -> str:
        """Plain-text triplet form: header ``rows cols nnz``, then ``row col value`` lines."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines += [f"{r} {c} {v}" for r, c, v in self.triplets()]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "IntegerMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValidationError("empty matrix dump")
        try:
            rows, cols, nnz = (int(x) for x in lines[0].split())
            entries = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
        except ValueError as exc:
            raise ValidationError(f"malformed matrix dump: {exc}") from None
        if len(entries) != nnz or any(len(e) != 3 for e in entries):
            raise ValidationError("matrix dump body does not match its header")
        return cls(rows, cols, entries)


def _eliminate_unit_pivots(M: IntegerMatrix) -> Tuple[int, List[List[int]]]:
    """Remove ±1 pivots; return their count and the dense leftover block.

    Pivot rule: the shortest row holding a unit entry, then the shortest
    column among its unit entries, ties broken by index.  Deterministic.
    """
    rows = M.row_dicts()
    cols: Dict[int, set] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    heap = [(len(row), r) for r, row in rows.items()]
    heapq.heapify(heap)
    pivots = 0
    while heap:
        length, r = heapq.heappop(heap)
        row = rows.get(r)
        if row is None or len(row) != length:
            continue
        units = [c for c, v in row.items() if v in (1, -1)]
        if not units:
            continue
        c = min(units, key=lambda c: (len(cols[c]), c))
        v = row[c]
        for r2 in sorted(cols[c] - {r}):
            row2 = rows[r2]
            factor = row2[c] * v
            for cc, vv in row.items():
                nv = row2.get(cc, 0) - factor * vv
                if nv:
                    if cc not in row2:
                        cols[cc].add(r2)
                    row2[cc] = nv
                else:
                    if cc in row2:
                        del row2[cc]
                        cols[cc].discard(r2)
            if row2:
                heapq.heappush(heap, (len(row2), r2))
            else:
                del rows[r2]
        for cc in row:
            cols[cc].discard(r)
        del cols[c]
        del rows[r]
        pivots += 1

    live_rows = sorted(rows)
    live_cols = sorted({c for row in rows.values() for c in row})
    cidx = {c: n for n, c in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for n, r in enumerate(live_rows):
        for c, v in rows[r].items():
            dense[n][cidx[c]] = v
    return pivots, dense


def smith_diagonal(dense: List[List[int]]) -> List[int]:
    """Nonzero Smith invariants d_1 | d_2 | ... of a dense integer matrix."""
    A = [list(row) for row in dense]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for r in range(t, nr):
            for c in range(t, nc):
                if A[r][c] and (best is None or abs(A[r][c]) < abs(A[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        r, c = best
        A[t], A[r] = A[r], A[t]
        for row in A:
            row[t], row[c] = row[c], row[t]
        while True:
            p = A[t][t]
            done = True
            for r in range(t + 1, nr):
                if A[r][t]:
                    q = A[r][t] // p
                    for c in range(t, nc):
                        A[r][c] -= q * A[t][c]
                    if A[r][t]:
                        done = False
            for c in range(t + 1, nc):
                if A[t][c]:
                    q = A[t][c] // p
                    for r in range(t, nr):
                        A[r][c] -= q * A[r][t]
                    if A[t][c]:
                        done = False
            if not done:
                # a remainder is smaller than the pivot; move it into place
                cand = [(abs(A[r][t]), 0, r) for r in range(t, nr) if A[r][t]]
                cand += [(abs(A[t][c]), 1, c) for c in range(t, nc) if A[t][c]]
                _, kind, idx = min(cand)
                if kind == 0:
                    A[t], A[idx] = A[idx], A[t]
                else:
                    for row in A:
                        row[t], row[idx] = row[idx], row[t]
                continue
            bad = next(
                ((r, c) for r in range(t + 1, nr) for c in range(t + 1, nc) if A[r][c] % p),
                None,
            )
            if bad is None:
                break
            for c in range(t, nc):
                A[t][c] += A[bad[0]][c]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_invariants(M: IntegerMatrix) -> List[int]:
    """Nonzero invariant factors of M in divisibility order."""
    pivots, rest = _eliminate_unit_pivots(M)
    return [1] * pivots + smith_diagonal(rest)


def rank(M: IntegerMatrix) -> int:
    """Rank over the rationals, computed with integer row operations only."""
    return len(smith_invariants(M))

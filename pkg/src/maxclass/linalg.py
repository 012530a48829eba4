"""Exact sparse linear algebra over the chosen field.

Rank, kernel bases and membership-in-image solving: the brute-force
oracle behind every cohomology dimension.  Storage is sparse; the
elimination itself runs dense row-major, through the compiled `_gauss`
kernel when available (set MAXCLASS_PURE=1 to force the fallback).
"""
from __future__ import annotations

import os
from fractions import Fraction

from .fields import QQ, Field

if os.environ.get("MAXCLASS_PURE"):
    from . import _gauss_py as _kern
else:
    try:
        from . import _gauss as _kern  # type: ignore[attr-defined]
    except ImportError:
        from . import _gauss_py as _kern

BACKEND = _kern.BACKEND


class DimensionMismatch(ValueError):
    pass


class SparseMatrix:
    """Exact matrix with optional monomial row/column labels."""

    def __init__(self, field: Field, rows: int, cols: int,
                 entries: dict[tuple[int, int], object] | None = None,
                 row_labels=None, col_labels=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in (entries or {}).items() if not field.is_zero(v)}
        self.row_labels = row_labels if row_labels is not None else list(range(rows))
        self.col_labels = col_labels if col_labels is not None else list(range(cols))
        if len(self.row_labels) != rows or len(self.col_labels) != cols:
            raise DimensionMismatch("label lengths do not match the shape")

    @classmethod
    def from_dense(cls, field: Field, dense, row_labels=None, col_labels=None):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {(r, c): dense[r][c] for r in range(rows) for c in range(cols)
                   if not field.is_zero(dense[r][c])}
        return cls(field, rows, cols, entries, row_labels, col_labels)

    def to_dense(self) -> list[list[object]]:
        zero = self.field.zero
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.field, self.cols, self.rows,
                            {(c, r): v for (r, c), v in self.entries.items()},
                            row_labels=self.col_labels, col_labels=self.row_labels)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        f = self.field
        by_row: dict[int, dict[int, object]] = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(r, {})[c] = v
        other_by_row: dict[int, dict[int, object]] = {}
        for (r, c), v in other.entries.items():
            other_by_row.setdefault(r, {})[c] = v
        entries: dict[tuple[int, int], object] = {}
        for r, row in by_row.items():
            acc: dict[int, object] = {}
            for mid, v in row.items():
                for c, w in other_by_row.get(mid, {}).items():
                    acc[c] = f.add(acc.get(c, f.zero), f.mul(v, w))
            for c, v in acc.items():
                if not f.is_zero(v):
                    entries[(r, c)] = v
        return SparseMatrix(f, self.rows, other.cols, entries,
                            row_labels=self.row_labels, col_labels=other.col_labels)

    def apply(self, vec: dict) -> dict:
        """Matrix times a coefficient map keyed by column labels."""
        f = self.field
        col_index = {lbl: c for c, lbl in enumerate(self.col_labels)}
        dense_v = [f.zero] * self.cols
        for lbl, v in vec.items():
            if lbl not in col_index:
                raise DimensionMismatch(f"unknown column label {lbl!r}")
            dense_v[col_index[lbl]] = v
        out: dict = {}
        for (r, c), m in self.entries.items():
            if not f.is_zero(dense_v[c]):
                lbl = self.row_labels[r]
                out[lbl] = f.add(out.get(lbl, f.zero), f.mul(m, dense_v[c]))
        return {lbl: v for lbl, v in out.items() if not f.is_zero(v)}

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} entries, {self.field!r})"


class KernelBasis:
    """Kernel vectors as coefficient maps keyed by column labels, in
    reduced echelon form over the column order."""

    def __init__(self, vectors: list[dict], col_labels):
        self.vectors = vectors
        self.col_labels = col_labels

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _rref_fractions(rows: list[list[Fraction]], ncols: int) -> tuple[int, list[int]]:
    """In-place RREF with rational pivot scaling; first-nonzero pivoting."""
    m = len(rows)
    rank = 0
    pivots: list[int] = []
    for col in range(ncols):
        piv = -1
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
        prow = rows[rank]
        inv = 1 / prow[col]
        for j in range(col, ncols):
            prow[j] *= inv
        for r in range(m):
            if r != rank and rows[r][col]:
                rv = rows[r][col]
                row = rows[r]
                for j in range(col, ncols):
                    row[j] -= rv * prow[j]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return rank, pivots


def _rref(field: Field, dense, ncols: int) -> tuple[int, list[int]]:
    if field.characteristic == 0:
        return _rref_fractions(dense, ncols)
    return _kern.rref_fp(dense, ncols, field.characteristic)


def rank(M: SparseMatrix) -> int:
    """Exact rank."""
    if M.is_zero():
        return 0
    if M.field.characteristic == 0:
        # clear denominators rowwise, then fraction-free integer elimination
        by_row: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in M.entries.items():
            by_row.setdefault(r, {})[c] = v
        dense = []
        for r, row in by_row.items():
            lcm = 1
            for v in row.values():
                d = Fraction(v).denominator
                lcm = lcm * d // _gcd(lcm, d)
            ints = [0] * M.cols
            for c, v in row.items():
                fr = Fraction(v) * lcm
                ints[c] = fr.numerator
            dense.append(ints)
        return _kern.rank_int(dense, M.cols)
    dense = M.to_dense()
    r, _ = _kern.rref_fp(dense, M.cols, M.field.characteristic)
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def kernel_basis(M: SparseMatrix) -> KernelBasis:
    """Basis of the null space, size cols - rank, reduced echelon form."""
    f = M.field
    dense = M.to_dense()
    rk, pivots = _rref(f, dense, M.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(M.cols) if c not in pivot_set]
    vectors = []
    for fc in free_cols:
        vec = {M.col_labels[fc]: f.one}
        for r, pc in enumerate(pivots):
            v = dense[r][fc]
            if not f.is_zero(v):
                vec[M.col_labels[pc]] = f.neg(v)
        vectors.append(vec)
    assert len(vectors) == M.cols - rk
    return KernelBasis(vectors, M.col_labels)


def solve_in_image(M: SparseMatrix, v: dict):
    """Some u with M u = v, or None when v is outside the image."""
    f = M.field
    row_index = {lbl: r for r, lbl in enumerate(M.row_labels)}
    rhs = [f.zero] * M.rows
    for lbl, val in v.items():
        if lbl not in row_index:
            if f.is_zero(val):
                continue
            raise DimensionMismatch(f"unknown row label {lbl!r}")
        rhs[row_index[lbl]] = val
    aug = M.to_dense()
    for r in range(M.rows):
        aug[r] = aug[r] + [rhs[r]]
    rk, pivots = _rref(f, aug, M.cols + 1)
    if M.cols in pivots:
        return None
    u: dict = {}
    for r, pc in enumerate(pivots):
        val = aug[r][M.cols]
        if not f.is_zero(val):
            u[M.col_labels[pc]] = val
    return u

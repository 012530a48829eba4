# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels.

Bareiss rank keeps Python big ints (entries can exceed 64 bits) but runs
the loops at C speed; the F_p reduction uses C integers whenever p^2
fits in int64 and falls back to object arithmetic otherwise.
"""
from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "cython"


def rank_int(list rows, Py_ssize_t ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef list prow, row
    cdef object prev = 1, pval, rv
    for col in range(ncols):
        piv = -1
        for r in range(rank, m):
            if (<list>rows[r])[col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
        prow = <list>rows[rank]
        pval = prow[col]
        for r in range(rank + 1, m):
            row = <list>rows[r]
            rv = row[col]
            if rv != 0:
                for j in range(col + 1, ncols):
                    row[j] = (pval * row[j] - rv * prow[j]) // prev
                row[col] = 0
            elif prev != pval:
                for j in range(col + 1, ncols):
                    row[j] = (pval * row[j]) // prev
        prev = pval
        rank += 1
        if rank == m:
            break
    return rank


def rref_fp(list rows, Py_ssize_t ncols, long p):
    """In-place RREF over F_p; returns (rank, pivot columns)."""
    cdef Py_ssize_t m = len(rows)
    if m == 0 or ncols == 0:
        return 0, []
    if p > 3037000000:  # p*p would overflow int64
        from . import _gauss_py
        return _gauss_py.rref_fp(rows, ncols, p)

    cdef Py_ssize_t rank = 0, col, r, j, piv, i
    cdef long inv, rv, x
    cdef long *data = NULL
    cdef list pivots = []

    data = <long *>PyMem_Malloc(m * ncols * sizeof(long))
    if data == NULL:
        raise MemoryError()
    try:
        for r in range(m):
            row = rows[r]
            for j in range(ncols):
                data[r * ncols + j] = row[j] % p
        for col in range(ncols):
            piv = -1
            for r in range(rank, m):
                if data[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    x = data[piv * ncols + j]
                    data[piv * ncols + j] = data[rank * ncols + j]
                    data[rank * ncols + j] = x
            inv = _inv_mod(data[rank * ncols + col], p)
            for j in range(col, ncols):
                data[rank * ncols + j] = data[rank * ncols + j] * inv % p
            for r in range(m):
                if r == rank:
                    continue
                rv = data[r * ncols + col]
                if rv != 0:
                    for j in range(col, ncols):
                        data[r * ncols + j] = (data[r * ncols + j]
                                               - rv * data[rank * ncols + j]) % p
                        if data[r * ncols + j] < 0:
                            data[r * ncols + j] += p
            pivots.append(col)
            rank += 1
            if rank == m:
                break
        for r in range(m):
            row = rows[r]
            for j in range(ncols):
                row[j] = data[r * ncols + j]
    finally:
        PyMem_Free(data)
    return rank, pivots


cdef long _inv_mod(long a, long p):
    cdef long t = 0, new_t = 1, r = p, new_r = a % p, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t

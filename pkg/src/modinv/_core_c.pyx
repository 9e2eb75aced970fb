# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dense row operations over F_p, compiled edition.

Same contract as ``_core_py``; see that module for the documentation.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


cdef long _inv_mod(long a, long p):
    # extended Euclid; a is nonzero mod p
    cdef long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref(rows, long p):
    """Reduced row echelon form; returns (basis_rows, pivot_columns)."""
    cdef list kept = []
    for row_obj in rows:
        for cell in row_obj:
            if cell:
                kept.append(row_obj)
                break
    cdef Py_ssize_t m = len(kept)
    if m == 0:
        return [], []
    cdef Py_ssize_t n = len(kept[0])
    cdef long *buf = <long *> malloc(m * n * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, pr
    cdef long f, inv
    cdef long *head
    cdef long *cur
    try:
        for i in range(m):
            row = kept[i]
            for j in range(n):
                buf[i * n + j] = row[j] % p
        pivots = []
        r = 0
        for c in range(n):
            pr = -1
            for i in range(r, m):
                if buf[i * n + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(n):
                    f = buf[r * n + j]
                    buf[r * n + j] = buf[pr * n + j]
                    buf[pr * n + j] = f
            head = buf + r * n
            inv = _inv_mod(head[c], p)
            if inv != 1:
                for j in range(n):
                    head[j] = (head[j] * inv) % p
            for i in range(m):
                if i != r:
                    f = buf[i * n + c]
                    if f != 0:
                        cur = buf + i * n
                        for j in range(n):
                            cur[j] = (cur[j] - f * head[j]) % p
                            if cur[j] < 0:
                                cur[j] += p
            pivots.append(c)
            r += 1
            if r == m:
                break
        basis = [[buf[i * n + j] for j in range(n)] for i in range(r)]
        return basis, pivots
    finally:
        free(buf)


def reduce_row(v, basis, pivots, long p):
    """Reduce v against an RREF basis; canonical coset representative."""
    cdef Py_ssize_t n = len(v)
    cdef long *out = <long *> malloc(n * sizeof(long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef long f
    try:
        for j in range(n):
            out[j] = v[j] % p
        for k in range(len(basis)):
            i = pivots[k]
            f = out[i]
            if f != 0:
                row = basis[k]
                for j in range(n):
                    out[j] = (out[j] - f * <long> row[j]) % p
                    if out[j] < 0:
                        out[j] += p
        return [out[j] for j in range(n)]
    finally:
        free(out)


def convolve(a, b, long p):
    """Coefficient convolution mod p."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j
    cdef long ai
    cdef long *bb = <long *> malloc(lb * sizeof(long))
    cdef long *out = <long *> malloc((la + lb - 1) * sizeof(long))
    if bb == NULL or out == NULL:
        free(bb)
        free(out)
        raise MemoryError()
    try:
        for j in range(lb):
            bb[j] = b[j] % p
        for i in range(la + lb - 1):
            out[i] = 0
        for i in range(la):
            ai = a[i] % p
            if ai != 0:
                for j in range(lb):
                    if bb[j] != 0:
                        out[i + j] = (out[i + j] + ai * bb[j]) % p
        return [out[i] for i in range(la + lb - 1)]
    finally:
        free(bb)
        free(out)

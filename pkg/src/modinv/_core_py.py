"""Dense row operations over F_p, pure Python edition.

These three functions are the hot loops of the whole engine: every echelon
form, kernel, ideal slice and polynomial action matrix bottoms out here.
The compiled twin in ``_core_c.pyx`` implements the same contract; the
active backend is chosen in ``_kernels``.

Vectors are plain lists of ints in [0, p).
"""

BACKEND = "python"


def rref(rows, p):
    """Reduced row echelon form of a list of equal-length rows over F_p.

    Returns ``(basis, pivots)`` where ``basis`` holds the nonzero RREF rows
    and ``pivots`` the strictly increasing pivot columns. The input list and
    its rows are left untouched.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return [], []
    n = len(work[0])
    m = len(work)
    pivots = []
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, m):
            if work[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        work[r], work[pr] = work[pr], work[r]
        head = work[r]
        inv = pow(head[c], -1, p)
        if inv != 1:
            head = work[r] = [(x * inv) % p for x in head]
        for i in range(m):
            if i != r:
                f = work[i][c]
                if f:
                    row = work[i]
                    work[i] = [(a - f * b) % p for a, b in zip(row, head)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work[:r], pivots


def reduce_row(v, basis, pivots, p):
    """Reduce ``v`` against an RREF basis: the canonical coset representative.

    The result has a zero in every pivot column, so it is zero exactly when
    ``v`` lies in the row span.
    """
    out = list(v)
    for row, c in zip(basis, pivots):
        f = out[c] % p
        if f:
            out = [(a - f * b) % p for a, b in zip(out, row)]
    if any(x % p for x in out):
        return [x % p for x in out]
    return [0] * len(out)


def convolve(a, b, p):
    """Coefficient convolution mod p: the product of two dense coefficient
    vectors, used for homogeneous polynomial slice arithmetic."""
    la, lb = len(a), len(b)
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out

"""Pure-Python modular kernels: rank, Khatri-Rao, monomial evaluation.

Fallback backend; arithmetic uses Python big ints, so any prime width works.
The compiled backend in _fastkernels.pyx mirrors these signatures exactly and
must return identical values.
"""

from __future__ import annotations


def rank_mod(rows, p: int) -> int:
    """Rank of an integer matrix over F_p (entries reduced internally)."""
    mat = [[x % p for x in row] for row in rows]
    n_rows = len(mat)
    if n_rows == 0:
        return 0
    n_cols = len(mat[0])
    rank = 0
    for c in range(n_cols):
        if rank == n_rows:
            break
        piv = None
        for i in range(rank, n_rows):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = pow(prow[c], -1, p)
        prow[c:] = [(x * inv) % p for x in prow[c:]]
        for i in range(rank + 1, n_rows):
            f = mat[i][c]
            if f:
                row = mat[i]
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], prow[c:])]
        rank += 1
    return rank


def khatri_rao_mod(top, bottom, p: int):
    """Column-wise Kronecker product over F_p, top-index-major row blocks."""
    bot = [[x % p for x in row] for row in bottom]
    out = []
    for trow in top:
        t = [x % p for x in trow]
        for brow in bot:
            out.append([(a * b) % p for a, b in zip(t, brow)])
    return out


def kr_rank_mod(top, bottom, p: int) -> int:
    """rank_mod of the Khatri-Rao product, fused for the compiled backend."""
    return rank_mod(khatri_rao_mod(top, bottom, p), p)


def eval_columns_mod(mat, point, p: int):
    """Evaluate every column monomial of `mat` at `point` over F_p.

    mat[l][h] is the exponent of point[l] in column h; negative exponents are
    allowed (point coordinates must be invertible, i.e. nonzero mod p).
    """
    if not mat:
        return []
    n_cols = len(mat[0])
    acc = [1] * n_cols
    for y, exps in zip(point, mat):
        y %= p
        if y == 0:
            raise ValueError("torus point has a coordinate divisible by the prime")
        cache: dict[int, int] = {}
        for h, e in enumerate(exps):
            v = cache.get(e)
            if v is None:
                v = pow(y, e, p)
                cache[e] = v
            acc[h] = (acc[h] * v) % p
    return acc

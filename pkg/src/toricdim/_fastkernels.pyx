# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels: rank, Khatri-Rao, monomial evaluation.

Mirrors _kernels_py exactly.  Products of 61-bit residues need 122 bits, so
the inner loops multiply through `unsigned __int128`; primes up to 2^62 are
supported (the elimination update adds two residues below 2^62 into a u64).
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline u64 mulmod(u64 a, u64 b, u64 p) nogil:
    return <u64>((<u128>a * <u128>b) % <u128>p)


cdef u64 powmod(u64 base, u64 e, u64 p) nogil:
    cdef u64 result = 1 % p
    base = base % p
    while e:
        if e & 1:
            result = mulmod(result, base, p)
        base = mulmod(base, base, p)
        e >>= 1
    return result


cdef int _rank_buffer(u64* m, Py_ssize_t n_rows, Py_ssize_t n_cols, u64 p) nogil:
    cdef Py_ssize_t rank = 0, c, i, j, piv
    cdef u64 inv, f, a, tmp
    for c in range(n_cols):
        if rank == n_rows:
            break
        piv = -1
        for i in range(rank, n_rows):
            if m[i * n_cols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            # entries left of c in rows >= rank are already zero
            for j in range(c, n_cols):
                tmp = m[rank * n_cols + j]
                m[rank * n_cols + j] = m[piv * n_cols + j]
                m[piv * n_cols + j] = tmp
        inv = powmod(m[rank * n_cols + c], p - 2, p)
        for j in range(c, n_cols):
            m[rank * n_cols + j] = mulmod(m[rank * n_cols + j], inv, p)
        for i in range(rank + 1, n_rows):
            f = m[i * n_cols + c]
            if f != 0:
                for j in range(c, n_cols):
                    a = m[i * n_cols + j] + p - mulmod(f, m[rank * n_cols + j], p)
                    if a >= p:
                        a -= p
                    m[i * n_cols + j] = a
        rank += 1
    return <int>rank


cdef u64* _to_buffer(rows, Py_ssize_t n_rows, Py_ssize_t n_cols, u64 p) except NULL:
    cdef u64* buf = <u64*>malloc(n_rows * n_cols * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i = 0, j
    try:
        for row in rows:
            j = 0
            for x in row:
                buf[i * n_cols + j] = <u64>(x % p)
                j += 1
            i += 1
    except Exception:
        free(buf)
        raise
    return buf


def rank_mod(rows, p):
    """Rank of an integer matrix over F_p (entries reduced internally)."""
    cdef Py_ssize_t n_rows = len(rows)
    if n_rows == 0:
        return 0
    cdef Py_ssize_t n_cols = len(rows[0])
    cdef u64 pp = p
    cdef u64* buf = _to_buffer(rows, n_rows, n_cols, pp)
    cdef int rank
    try:
        with nogil:
            rank = _rank_buffer(buf, n_rows, n_cols, pp)
    finally:
        free(buf)
    return rank


def khatri_rao_mod(top, bottom, p):
    """Column-wise Kronecker product over F_p, top-index-major row blocks."""
    cdef Py_ssize_t nt = len(top)
    cdef Py_ssize_t nb = len(bottom)
    if nt == 0 or nb == 0:
        return []
    cdef Py_ssize_t n_cols = len(top[0])
    cdef u64 pp = p
    cdef u64* tb = _to_buffer(top, nt, n_cols, pp)
    cdef u64* bb
    cdef Py_ssize_t i, k, h
    try:
        bb = _to_buffer(bottom, nb, n_cols, pp)
    except BaseException:
        free(tb)
        raise
    out = []
    try:
        for i in range(nt):
            for k in range(nb):
                out.append([
                    mulmod(tb[i * n_cols + h], bb[k * n_cols + h], pp)
                    for h in range(n_cols)
                ])
    finally:
        free(tb)
        free(bb)
    return out


def kr_rank_mod(top, bottom, p):
    """rank_mod of the Khatri-Rao product without materializing Python rows."""
    cdef Py_ssize_t nt = len(top)
    cdef Py_ssize_t nb = len(bottom)
    if nt == 0 or nb == 0:
        return 0
    cdef Py_ssize_t n_cols = len(top[0])
    cdef u64 pp = p
    cdef u64* tb = _to_buffer(top, nt, n_cols, pp)
    cdef u64* bb
    cdef u64* kb
    cdef Py_ssize_t i, k, h
    cdef int rank
    try:
        bb = _to_buffer(bottom, nb, n_cols, pp)
    except BaseException:
        free(tb)
        raise
    kb = <u64*>malloc(nt * nb * n_cols * sizeof(u64))
    if kb == NULL:
        free(tb)
        free(bb)
        raise MemoryError()
    try:
        with nogil:
            for i in range(nt):
                for k in range(nb):
                    for h in range(n_cols):
                        kb[(i * nb + k) * n_cols + h] = mulmod(
                            tb[i * n_cols + h], bb[k * n_cols + h], pp)
            rank = _rank_buffer(kb, nt * nb, n_cols, pp)
    finally:
        free(tb)
        free(bb)
        free(kb)
    return rank


def eval_columns_mod(mat, point, p):
    """Evaluate every column monomial of `mat` at `point` over F_p.

    mat[l][h] is the exponent of point[l] in column h; negative exponents are
    allowed (point coordinates must be invertible, i.e. nonzero mod p).
    """
    cdef Py_ssize_t n_rows = len(mat)
    if n_rows == 0:
        return []
    cdef Py_ssize_t n_cols = len(mat[0])
    cdef u64 pp = p
    cdef i64* exps = <i64*>malloc(n_rows * n_cols * sizeof(i64))
    if exps == NULL:
        raise MemoryError()
    cdef u64* ys = <u64*>malloc(n_rows * sizeof(u64))
    if ys == NULL:
        free(exps)
        raise MemoryError()
    cdef u64* acc = <u64*>malloc(n_cols * sizeof(u64))
    if acc == NULL:
        free(exps)
        free(ys)
        raise MemoryError()
    cdef Py_ssize_t i = 0, j, h
    cdef u64 y, inv_y, base
    cdef i64 e
    try:
        for row in mat:
            j = 0
            for x in row:
                exps[i * n_cols + j] = <i64>x
                j += 1
            i += 1
        i = 0
        for coord in point:
            if i == n_rows:
                break
            y = <u64>(coord % p)
            if y == 0:
                raise ValueError(
                    "torus point has a coordinate divisible by the prime")
            ys[i] = y
            i += 1
        with nogil:
            for h in range(n_cols):
                acc[h] = 1 % pp
            for i in range(n_rows):
                y = ys[i]
                inv_y = powmod(y, pp - 2, pp)
                for h in range(n_cols):
                    e = exps[i * n_cols + h]
                    if e >= 0:
                        base = powmod(y, <u64>e, pp)
                    else:
                        base = powmod(inv_y, <u64>(-e), pp)
                    acc[h] = mulmod(acc[h], base, pp)
        return [acc[h] for h in range(n_cols)]
    finally:
        free(exps)
        free(ys)
        free(acc)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 kernels. Raise OverflowError when a value leaves int64;
the dispatcher in ``kernels`` then reruns the pure-Python version."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int fits_i64(i128 v) {
        return v >= (i128)INT64_MIN && v <= (i128)INT64_MAX;
    }
    """
    ctypedef long long i128
    int fits_i64(i128 v) nogil


cdef int64_t* _to_c(object rows, Py_ssize_t nrows, Py_ssize_t ncols, int64_t limit=0) except NULL:
    cdef int64_t* buf = <int64_t*> malloc(max(nrows * ncols, 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                buf[i * ncols + j] = <int64_t> row[j]
                if limit and (buf[i * ncols + j] > limit or buf[i * ncols + j] < -limit):
                    raise OverflowError("entry too large for int64 kernel")
    except OverflowError:
        free(buf)
        raise
    return buf


cdef list _from_c(int64_t* buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    return [[buf[i * ncols + j] for j in range(ncols)] for i in range(nrows)]


# keeps every i128 partial sum of a matmul row far from overflow
cdef int64_t MATMUL_LIMIT = (<int64_t> 1) << 40


def gauss_jordan(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef int64_t* a = _to_c(rows, nrows, ncols)
    cdef int64_t* tmp
    cdef int64_t prev = 1, piv, f
    cdef i128 v
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef int overflow = 0
    pivots = []
    tmp = <int64_t*> malloc(max(ncols, 1) * sizeof(int64_t))
    try:
        for c in range(ncols):
            if r == nrows:
                break
            p = r
            while p < nrows and a[p * ncols + c] == 0:
                p += 1
            if p == nrows:
                continue
            if p != r:
                for j in range(ncols):
                    tmp[j] = a[p * ncols + j]
                    a[p * ncols + j] = a[r * ncols + j]
                    a[r * ncols + j] = tmp[j]
            piv = a[r * ncols + c]
            with nogil:
                for i in range(nrows):
                    if i == r:
                        continue
                    f = a[i * ncols + c]
                    for j in range(ncols):
                        v = (<i128> piv) * a[i * ncols + j] - (<i128> f) * a[r * ncols + j]
                        v = v / prev
                        if not fits_i64(v):
                            overflow = 1
                            break
                        a[i * ncols + j] = <int64_t> v
                    if overflow:
                        break
            if overflow:
                raise OverflowError("int64 overflow in gauss_jordan")
            prev = piv
            pivots.append(c)
            r += 1
        if pivots and prev < 0:
            for i in range(nrows * ncols):
                a[i] = -a[i]
        return _from_c(a, nrows, ncols), pivots
    finally:
        free(a)
        free(tmp)


def matmul(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(b)
    cdef Py_ssize_t k = len(b[0]) if m else 0
    cdef int64_t* ca = _to_c(a, n, m, MATMUL_LIMIT)
    cdef int64_t* cb
    cdef int64_t* out
    cdef i128 acc
    cdef Py_ssize_t i, j, l
    cdef int overflow = 0
    try:
        cb = _to_c(b, m, k, MATMUL_LIMIT)
    except OverflowError:
        free(ca)
        raise
    out = <int64_t*> malloc(max(n * k, 1) * sizeof(int64_t))
    try:
        with nogil:
            for i in range(n):
                for j in range(k):
                    acc = 0
                    for l in range(m):
                        acc = acc + (<i128> ca[i * m + l]) * cb[l * k + j]
                    if not fits_i64(acc):
                        overflow = 1
                        break
                    out[i * k + j] = <int64_t> acc
                if overflow:
                    break
        if overflow:
            raise OverflowError("int64 overflow in matmul")
        return _from_c(out, n, k)
    finally:
        free(ca)
        free(cb)
        free(out)

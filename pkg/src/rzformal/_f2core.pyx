# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled F2 row reduction on integer bitmask rows.

Same four functions as ``_f2pure``, same output for the same input.
Rows are packed into 64-bit words for the elimination loops and
unpacked back to Python ints on the way out.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

_from_bytes = int.from_bytes


cdef uint64_t* _pack(object rows, Py_ssize_t nrows, Py_ssize_t nwords) except? NULL:
    cdef Py_ssize_t nbytes = nwords * 8
    cdef uint64_t* data
    cdef Py_ssize_t i
    cdef bytes b
    cdef const char* p
    data = <uint64_t*> malloc(nrows * nbytes)
    if data == NULL:
        raise MemoryError()
    for i in range(nrows):
        b = rows[i].to_bytes(nbytes, "little")
        p = b
        memcpy(data + i * nwords, p, nbytes)
    return data


cdef object _unpack(uint64_t* row, Py_ssize_t nwords):
    return _from_bytes(PyBytes_FromStringAndSize(<char*> row, nwords * 8), "little")


cdef void _xor_row(uint64_t* dst, uint64_t* src, Py_ssize_t nwords) noexcept nogil:
    cdef Py_ssize_t k
    for k in range(nwords):
        dst[k] ^= src[k]


cdef Py_ssize_t _eliminate(uint64_t* M, Py_ssize_t nrows, Py_ssize_t nwords,
                           Py_ssize_t ncols, bint full, Py_ssize_t* pivots) noexcept nogil:
    """Column sweep, in place. Returns the rank.

    With ``full`` set, rows 0..rank-1 end up as the canonical RREF with
    ascending pivot columns (recorded in ``pivots`` when non-NULL).
    """
    cdef Py_ssize_t r = 0, c, w, i, k, piv
    cdef uint64_t bit, tmp
    for c in range(ncols):
        if r == nrows:
            break
        w = c >> 6
        bit = (<uint64_t>1) << (c & 63)
        piv = -1
        for i in range(r, nrows):
            if M[i * nwords + w] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(nwords):
                tmp = M[r * nwords + k]
                M[r * nwords + k] = M[piv * nwords + k]
                M[piv * nwords + k] = tmp
        if full:
            for i in range(nrows):
                if i != r and (M[i * nwords + w] & bit):
                    _xor_row(M + i * nwords, M + r * nwords, nwords)
        else:
            for i in range(r + 1, nrows):
                if M[i * nwords + w] & bit:
                    _xor_row(M + i * nwords, M + r * nwords, nwords)
        if pivots != NULL:
            pivots[r] = c
        r += 1
    return r


def rank(rows, ncols):
    """Rank over F2. ``ncols`` is accepted for interface parity."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nwords = (ncols + 63) >> 6
    cdef uint64_t* M
    cdef Py_ssize_t r
    if nrows == 0 or nwords == 0:
        return 0
    M = _pack(rows, nrows, nwords)
    r = _eliminate(M, nrows, nwords, ncols, False, NULL)
    free(M)
    return r


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns (echelon rows, pivot columns), both ordered by ascending
    pivot column. The output is the canonical RREF of the row space.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nwords = (ncols + 63) >> 6
    cdef uint64_t* M
    cdef Py_ssize_t* piv
    cdef Py_ssize_t r, i
    if nrows == 0 or nwords == 0:
        return [], []
    M = _pack(rows, nrows, nwords)
    piv = <Py_ssize_t*> malloc(nrows * sizeof(Py_ssize_t))
    if piv == NULL:
        free(M)
        raise MemoryError()
    r = _eliminate(M, nrows, nwords, ncols, True, piv)
    ech = [_unpack(M + i * nwords, nwords) for i in range(r)]
    pivots = [piv[i] for i in range(r)]
    free(M)
    free(piv)
    return ech, pivots


def kernel_basis(rows, ncols):
    """Basis of the right kernel, one vector per free column, ascending."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nwords = (ncols + 63) >> 6
    cdef uint64_t* M = NULL
    cdef Py_ssize_t* piv = NULL
    cdef char* is_pivot = NULL
    cdef Py_ssize_t r = 0, i, c, w
    cdef uint64_t bit
    if ncols == 0:
        return []
    if nrows > 0:
        M = _pack(rows, nrows, nwords)
        piv = <Py_ssize_t*> malloc(nrows * sizeof(Py_ssize_t))
        if piv == NULL:
            free(M)
            raise MemoryError()
        r = _eliminate(M, nrows, nwords, ncols, True, piv)
    is_pivot = <char*> malloc(ncols)
    if is_pivot == NULL:
        free(M)
        free(piv)
        raise MemoryError()
    for c in range(ncols):
        is_pivot[c] = 0
    for i in range(r):
        is_pivot[piv[i]] = 1
    basis = []
    for c in range(ncols):
        if is_pivot[c]:
            continue
        w = c >> 6
        bit = (<uint64_t>1) << (c & 63)
        # Python-object shifts: column indices can exceed the C word size
        v = (<object>1) << c
        for i in range(r):
            if M[i * nwords + w] & bit:
                v |= (<object>1) << piv[i]
        basis.append(v)
    free(M)
    free(piv)
    free(is_pivot)
    return basis


def reduce_batch(vecs, ech, pivots):
    """Canonical remainders of ``vecs`` modulo an RREF row space."""
    cdef Py_ssize_t nech = len(ech)
    cdef Py_ssize_t nvec = len(vecs)
    cdef Py_ssize_t maxbits = 1, i, j, w
    cdef uint64_t bit
    cdef uint64_t* E = NULL
    cdef uint64_t* v = NULL
    cdef Py_ssize_t* piv = NULL
    if nech == 0 or nvec == 0:
        return list(vecs)
    for x in ech:
        if x.bit_length() > maxbits:
            maxbits = x.bit_length()
    for x in vecs:
        if x.bit_length() > maxbits:
            maxbits = x.bit_length()
    cdef Py_ssize_t nwords = (maxbits + 63) >> 6
    E = _pack(ech, nech, nwords)
    piv = <Py_ssize_t*> malloc(nech * sizeof(Py_ssize_t))
    v = <uint64_t*> malloc(nwords * 8)
    if piv == NULL or v == NULL:
        free(E)
        free(piv)
        free(v)
        raise MemoryError()
    for i in range(nech):
        piv[i] = pivots[i]
    out = []
    cdef bytes b
    cdef const char* p
    cdef Py_ssize_t nbytes = nwords * 8
    for i in range(nvec):
        b = vecs[i].to_bytes(nbytes, "little")
        p = b
        memcpy(v, p, nbytes)
        for j in range(nech):
            w = piv[j] >> 6
            bit = (<uint64_t>1) << (piv[j] & 63)
            if v[w] & bit:
                _xor_row(v, E + j * nwords, nwords)
        out.append(_unpack(v, nwords))
    free(E)
    free(piv)
    free(v)
    return out

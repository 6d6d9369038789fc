# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW normal-ordering kernel; algorithmic twin of _kernel_py."""

from fractions import Fraction

cdef object _ONE = Fraction(1)


cdef dict _accumulate(dict out, tuple word, dict ca, dict cb):
    cdef dict slot
    cdef object ea, eb, va, vb, cur, e
    slot = <dict>out.get(word)
    if slot is None:
        slot = {}
        out[word] = slot
    for ea, va in ca.items():
        for eb, vb in cb.items():
            e = ea + eb
            cur = slot.get(e)
            if cur is None:
                slot[e] = va * vb
            else:
                cur = cur + va * vb
                if cur:
                    slot[e] = cur
                else:
                    del slot[e]
    if not slot:
        del out[word]
    return out


cdef class PbwKernel:
    """Normal-ordering engine for one algebra and one bracket weight."""

    cdef public int dim
    cdef public bint deform
    cdef dict _rows
    cdef dict _insert_memo

    def __init__(self, dim, bracket_rows, deform=True):
        cdef int z_exp
        self.dim = dim
        self.deform = deform
        z_exp = 1 if deform else 0
        self._rows = {}
        for pair, row in bracket_rows.items():
            if row:
                self._rows[pair] = tuple((k, {z_exp: c}) for k, c in row)
        self._insert_memo = {}

    cpdef dict insert(self, int letter, tuple word):
        """Normal form of e_letter * word for a sorted word."""
        cdef tuple key = (letter, word)
        cdef dict out
        cdef object found, row
        cdef tuple rest, w, w2
        cdef dict coeff, coeff2
        cdef int b, k
        found = self._insert_memo.get(key)
        if found is not None:
            return <dict>found
        if (not word) or letter <= <int>word[0]:
            out = {(letter,) + word: {0: _ONE}}
            self._insert_memo[key] = out
            return out
        b = <int>word[0]
        rest = word[1:]
        out = {}
        for w, coeff in self.insert(letter, rest).items():
            for w2, coeff2 in self.insert(b, w).items():
                _accumulate(out, w2, coeff, coeff2)
        row = self._rows.get((letter, b))
        if row is not None:
            for k, zc in <tuple>row:
                for w, coeff in self.insert(k, rest).items():
                    _accumulate(out, w, coeff, <dict>zc)
        self._insert_memo[key] = out
        return out

    cpdef dict word_mul(self, tuple u, tuple v):
        """Normal form of the product of a word u and a sorted word v."""
        cdef Py_ssize_t t
        cdef bint sorted_u = True
        for t in range(len(u) - 1):
            if <int>u[t] > <int>u[t + 1]:
                sorted_u = False
                break
        if sorted_u and ((not u) or (not v) or <int>u[len(u) - 1] <= <int>v[0]):
            return {u + v: {0: _ONE}}  # concatenation already sorted
        cdef dict result = {v: {0: _ONE}}
        cdef dict nxt, coeff, coeff2
        cdef tuple w, w2
        cdef Py_ssize_t idx
        for idx in range(len(u) - 1, -1, -1):
            nxt = {}
            for w, coeff in result.items():
                for w2, coeff2 in self.insert(<int>u[idx], w).items():
                    _accumulate(nxt, w2, coeff, coeff2)
            result = nxt
        return result

    cpdef dict normal_order(self, tuple word):
        """Normal form of an arbitrary word."""
        return self.word_mul(word, ())

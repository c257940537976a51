# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel for reversible word simulation.

One packed machine word per basis state; gates are pre-lowered to a small
opcode set (conditional XOR, conditional wire swap, controlled 32-entry
table lookup).  The GIL is released, so callers may shard the word array
across threads.
"""

from libc.stdint cimport int64_t, uint8_t, uint64_t

BACKEND = "compiled"

OP_XORIF = 0
OP_SWAPIF = 1
OP_PERM5IF = 2


def run_words(const uint8_t[::1] op,
              const uint64_t[::1] cmask,
              const uint64_t[::1] amask,
              const uint64_t[::1] bmask,
              const int64_t[::1] tref,
              const uint64_t[::1] tables,
              uint64_t[::1] words):
    """Apply the compiled gate program to every word in-place."""
    cdef Py_ssize_t n_gates = op.shape[0]
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t i, g
    cdef uint64_t w, cm, am, bm, packed, idx
    cdef uint8_t o
    with nogil:
        for i in range(n_words):
            w = words[i]
            for g in range(n_gates):
                cm = cmask[g]
                if (w & cm) != cm:
                    continue
                o = op[g]
                if o == 0:  # XORIF
                    w ^= amask[g]
                elif o == 1:  # SWAPIF
                    am = amask[g]
                    bm = bmask[g]
                    if ((w & am) != 0) != ((w & bm) != 0):
                        w ^= am | bm
                else:  # PERM5IF
                    packed = bmask[g]
                    idx = (((w >> (packed & 63)) & 1) << 4) \
                        | (((w >> ((packed >> 6) & 63)) & 1) << 3) \
                        | (((w >> ((packed >> 12) & 63)) & 1) << 2) \
                        | (((w >> ((packed >> 18) & 63)) & 1) << 1) \
                        | ((w >> ((packed >> 24) & 63)) & 1)
                    w = (w & ~amask[g]) | tables[tref[g] + <int64_t>idx]
            words[i] = w

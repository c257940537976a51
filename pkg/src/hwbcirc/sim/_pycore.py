"""Pure numpy implementation of the reversible word kernel.

Mirrors the compiled extension in ``_core.pyx``; selected at import time when
the extension is unavailable (see ``hwbcirc.sim.reversible``).
"""
from __future__ import annotations

import numpy as np

OP_XORIF = 0
OP_SWAPIF = 1
OP_PERM5IF = 2

_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)
_POSMASK = np.uint64(63)

BACKEND = "python"


def run_words(op, cmask, amask, bmask, tref, tables, words):
    """Apply the compiled gate program to every word in-place."""
    for g in range(op.shape[0]):
        cm = cmask[g]
        has_ctrl = bool(cm)
        if has_ctrl:
            sel = (words & cm) == cm
        o = op[g]
        if o == OP_XORIF:
            if has_ctrl:
                words[sel] ^= amask[g]
            else:
                words ^= amask[g]
        elif o == OP_SWAPIF:
            am = amask[g]
            bm = bmask[g]
            differ = ((words & am) != 0) != ((words & bm) != 0)
            if has_ctrl:
                differ &= sel
            words[differ] ^= am | bm
        else:  # OP_PERM5IF
            packed = bmask[g]
            sub = words[sel] if has_ctrl else words
            idx = ((sub >> (packed & _POSMASK)) & np.uint64(1)) << np.uint64(4)
            for j in range(1, 5):
                pos = (packed >> np.uint64(6 * j)) & _POSMASK
                idx |= ((sub >> pos) & np.uint64(1)) << np.uint64(4 - j)
            block = tables[tref[g]: tref[g] + 32]
            sub = (sub & (amask[g] ^ _FULL)) | block[idx]
            if has_ctrl:
                words[sel] = sub
            else:
                words[:] = sub

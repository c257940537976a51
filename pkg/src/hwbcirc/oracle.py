"""Ground truth for the hidden weighted bit function.

hwb cyclically shifts an n-bit string by its Hamming weight W.  Two shift
conventions exist and are mutual inverses:

* ``right`` (the default): the bit on position i moves to (i + W) mod n.
* ``left``: the string x1..xn becomes x2..xn x1, applied W times.

Basis-index convention, used consistently by the simulators and the quantum
synthesizer: the first bit x1 (qubit 0) is the most significant bit of the
basis index.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation

MAX_TABLE_BITS = 24
MAX_MATRIX_BITS = 14


@dataclass(frozen=True)
class HwbSpec:
    n: int
    direction: str = "right"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.direction not in ("right", "left"):
            raise ValueError(f"unknown direction {self.direction!r}")


def hwb_apply(spec: HwbSpec, x: str) -> str:
    """Cyclically shift x by its Hamming weight in spec.direction."""
    n = spec.n
    if len(x) != n or any(c not in "01" for c in x):
        raise ValueError(f"expected a {n}-bit string, got {x!r}")
    w = x.count("1") % n
    if spec.direction == "right":
        # output position i holds the input bit from position i-w
        return "".join(x[(i - w) % n] for i in range(n))
    return "".join(x[(i + w) % n] for i in range(n))


def truth_table(spec: HwbSpec) -> list[str]:
    """All 2^n outputs, indexed by the basis index of the input (x1 = MSB)."""
    if spec.n > MAX_TABLE_BITS:
        raise ValueError(f"n={spec.n} too large for a full truth table")
    return [hwb_apply(spec, format(v, f"0{spec.n}b")) for v in range(2 ** spec.n)]


def basis_index(x: str) -> int:
    """Basis index of a bit string; the first character is the MSB."""
    return int(x, 2) if x else 0


def hwb_permutation(spec: HwbSpec) -> Permutation:
    """hwb as a permutation of the 2^n basis indices."""
    if spec.n > MAX_MATRIX_BITS:
        raise ValueError(f"n={spec.n} too large for a dense basis permutation")
    image = [0] * (2 ** spec.n)
    for v in range(2 ** spec.n):
        x = format(v, f"0{spec.n}b")
        image[v] = basis_index(hwb_apply(spec, x))
    return Permutation(image)


def paper_order_inputs(n: int) -> list[str]:
    """Input enumeration used by the two-row truth table layout: the first
    bit toggles fastest (x1 is the least significant counting bit)."""
    out = []
    for v in range(2 ** n):
        out.append("".join("1" if (v >> j) & 1 else "0" for j in range(n)))
    return out


def format_truth_table(spec: HwbSpec) -> str:
    """Two-row layout: inputs on the first row, hwb outputs on the second."""
    xs = paper_order_inputs(spec.n)
    ys = [hwb_apply(spec, x) for x in xs]
    head = "x      " + " ".join(xs)
    body = "hwb(x) " + " ".join(ys)
    return head + "\n" + body

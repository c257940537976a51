"""Permutations on {0..k-1} with cycle construction, composition and relabeling.

Composition convention used throughout the package: products are read left to
right, i.e. ``a.then(b)`` is the permutation "apply a first, then b".  All
displayed cycle identities in this code base are stated (and tested) under
this convention.
"""
from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """A bijection on {0..size-1}, stored as the image tuple."""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image!r}")
        object.__setattr__(self, "image", image)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(size)))

    @classmethod
    def from_cycle(cls, cycle: Iterable[int], size: int) -> "Permutation":
        """Permutation moving cycle[j] to cycle[(j+1) % t], fixing the rest.

        In wire terms: the bit residing on wire cycle[j] moves to wire
        cycle[j+1].
        """
        cycle = tuple(cycle)
        if len(set(cycle)) != len(cycle):
            raise ValueError(f"cycle has duplicate entries: {cycle!r}")
        image = list(range(size))
        for j, src in enumerate(cycle):
            if not 0 <= src < size:
                raise ValueError(f"cycle entry {src} out of range for size {size}")
            image[src] = cycle[(j + 1) % len(cycle)]
        return cls(image)

    # -- basic protocol ----------------------------------------------------

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __len__(self) -> int:
        return len(self.image)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation.identity({len(self.image)})"
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation[{body} on {len(self.image)}]"

    # -- algebra -----------------------------------------------------------

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: apply self first, then other."""
        if len(other.image) != len(self.image):
            raise ValueError("size mismatch in composition")
        return Permutation(tuple(other.image[v] for v in self.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Permutation(inv)

    def relabel(self, theta: "Permutation") -> "Permutation":
        """Relabel points through theta: if self maps a to b, the result maps
        theta(a) to theta(b).

        Equivalently theta^{-1} * self * theta in the left-to-right product;
        relabeling is a group automorphism, which is what the branching
        program recoding relies on.
        """
        if len(theta.image) != len(self.image):
            raise ValueError("size mismatch in relabeling")
        image = [0] * len(self.image)
        for a, b in enumerate(self.image):
            image[theta.image[a]] = theta.image[b]
        return Permutation(image)

    def power(self, k: int) -> "Permutation":
        result = Permutation.identity(len(self.image))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result.then(base)
        return result

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity():
            p = p.then(self)
            k += 1
        return k


def conjugator_to_canonical(sigma: Permutation) -> Permutation:
    """For a 5-cycle sigma, the relabeling theta with
    canonical_5_cycle().relabel(theta) == sigma.

    theta maps point j to the j-th element of sigma written as a cycle
    starting at 0.
    """
    if len(sigma.image) != 5:
        raise ValueError("expected a permutation of 5 points")
    cycs = sigma.cycles()
    if len(cycs) != 1 or len(cycs[0]) != 5:
        raise ValueError(f"not a 5-cycle: {sigma!r}")
    chain = [0]
    j = sigma.image[0]
    while j != 0:
        chain.append(j)
        j = sigma.image[j]
    return Permutation(chain)


def canonical_5_cycle() -> Permutation:
    return Permutation.from_cycle((0, 1, 2, 3, 4), 5)

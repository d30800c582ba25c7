"""Permutations of {0, ..., degree-1} stored as immutable image tuples.

Composition convention: (p * q) applies p first, then q.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import GroupInputError


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise GroupInputError("permutation degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise GroupInputError(f"images {self.images!r} are not a bijection of 0..{n - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles, one_based: bool = False) -> "Permutation":
        """Build a permutation from disjoint cycles given as point sequences."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [int(x) - 1 if one_based else int(x) for x in cycle]
            for x in pts:
                if not 0 <= x < degree:
                    raise GroupInputError(f"cycle point {x + 1 if one_based else x} out of range for degree {degree}")
                if x in seen:
                    raise GroupInputError(f"cycles are not disjoint at point {x + 1 if one_based else x}")
                seen.add(x)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return Permutation(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise GroupInputError("cannot compose permutations of different degrees")
        o = other.images
        return Permutation(tuple(o[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        cycs = self.cycles()
        return lcm(*(len(c) for c in cycs)) if cycs else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, sorted by start."""
        out = []
        seen: set[int] = set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

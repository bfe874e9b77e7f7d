"""Basis permutations of Z[Q] that extend to ring automorphisms.

A permutation ``p`` of the basis extends additively to ``Z[Q]``; the extension
is multiplicative iff it is on basis pairs, by bilinearity. Only automorphisms
that permute the basis are found here; other ring automorphisms, if a ring has
them, are out of reach of this enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .quandle import ENUMERATION_LIMIT, Quandle, quandle_automorphisms
from .ring import RingElement, multiply


@dataclass(frozen=True, order=True)
class BasisPermutation:
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(self.n)):
            raise ValueError(f"{images} is not a permutation of 0..{self.n - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def of(cls, images) -> BasisPermutation:
        return cls(len(images), tuple(images))

    @classmethod
    def identity(cls, n: int) -> BasisPermutation:
        return cls(n, tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: BasisPermutation) -> BasisPermutation:
        """``self`` after ``other``."""
        return BasisPermutation(self.n, tuple(self.images[other.images[i]] for i in range(self.n)))

    def inverse(self) -> BasisPermutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return BasisPermutation(self.n, tuple(inv))

    def apply(self, a: RingElement) -> RingElement:
        """The additive extension ``sum c_i x_i -> sum c_i x_{p(i)}``."""
        out = [0] * self.n
        for i, c in enumerate(a.coeffs):
            out[self.images[i]] += c
        return RingElement(self.n, tuple(out))


def extends_to_ring_automorphism(q: Quandle, p: BasisPermutation) -> bool:
    if p.n != q.n:
        raise ValueError(f"permutation of {p.n} letters used with a quandle of order {q.n}")
    basis = [RingElement.basis(q.n, i) for i in range(q.n)]
    for i, j in itertools.product(range(q.n), repeat=2):
        if p.apply(multiply(q, basis[i], basis[j])) != multiply(q, p.apply(basis[i]), p.apply(basis[j])):
            return False
    return True


def enumerate_ring_automorphisms(q: Quandle) -> list[BasisPermutation]:
    """Basis-permutation ring automorphisms in lexicographic order of images."""
    if q.n > ENUMERATION_LIMIT:
        raise ValueError(f"refusing to enumerate {q.n}! permutations (limit n <= {ENUMERATION_LIMIT})")
    return [
        p
        for p in (BasisPermutation(q.n, images) for images in itertools.permutations(range(q.n)))
        if extends_to_ring_automorphism(q, p)
    ]


def is_group(perms: Iterable[BasisPermutation]) -> bool:
    """Closed under composition and inverses (and nonempty)."""
    s = set(perms)
    if not s:
        return False
    return all(a.inverse() in s for a in s) and all(a.compose(b) in s for a in s for b in s)


@dataclass(frozen=True)
class AutomorphismComparison:
    n: int
    all_permutations: int
    ring_automorphisms: tuple[tuple[int, ...], ...]
    quandle_automorphisms: tuple[tuple[int, ...], ...]
    only_ring: tuple[tuple[int, ...], ...]
    only_quandle: tuple[tuple[int, ...], ...]
    closed_under_composition: bool

    @property
    def equal(self) -> bool:
        return not self.only_ring and not self.only_quandle

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "unconstrained_permutations": self.all_permutations,
            "ring_automorphisms": {
                "count": len(self.ring_automorphisms),
                "closed_under_composition": self.closed_under_composition,
                "images": [list(p) for p in self.ring_automorphisms],
            },
            "quandle_automorphisms": {
                "count": len(self.quandle_automorphisms),
                "images": [list(p) for p in self.quandle_automorphisms],
            },
            "equal": self.equal,
            "symmetric_difference": {
                "only_ring": [list(p) for p in self.only_ring],
                "only_quandle": [list(p) for p in self.only_quandle],
            },
        }


def compare_with_quandle_automorphisms(q: Quandle) -> AutomorphismComparison:
    ring = enumerate_ring_automorphisms(q)
    ring_set = {p.images for p in ring}
    quandle_set = quandle_automorphisms(q)
    return AutomorphismComparison(
        n=q.n,
        all_permutations=math.factorial(q.n),
        ring_automorphisms=tuple(sorted(ring_set)),
        quandle_automorphisms=tuple(sorted(quandle_set)),
        only_ring=tuple(sorted(ring_set - quandle_set)),
        only_quandle=tuple(sorted(quandle_set - ring_set)),
        closed_under_composition=is_group(ring),
    )

"""Elements of the integral quandle ring Z[Q].

An element is a dense vector of Python ints, one coefficient per quandle element.
Multiplication is the bilinear extension of the quandle operation, so the ring
is in general neither associative nor unital.

Summing the coefficient equations of ``a * a = a`` gives ``s**2 = s`` for the
coefficient sum ``s`` (the augmentation is multiplicative), so every idempotent
has augmentation 0 or 1. The idempotent system pins it to 1, which rules out 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .quandle import Quandle


@dataclass(frozen=True)
class RingElement:
    quandle_order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.quandle_order:
            raise ValueError(f"expected {self.quandle_order} coefficients, got {len(coeffs)}")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise TypeError("coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> RingElement:
        return cls(len(coeffs), tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls, n: int) -> RingElement:
        return cls(n, (0,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> RingElement:
        if not 0 <= i < n:
            raise ValueError(f"basis index {i} out of range for order {n}")
        return cls(n, tuple(int(k == i) for k in range(n)))

    def augmentation(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: RingElement) -> RingElement:
        return add(self, other)

    def __neg__(self) -> RingElement:
        return RingElement(self.quandle_order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: RingElement) -> RingElement:
        return add(self, -other)

    def to_dict(self) -> dict:
        return {"n": self.quandle_order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> RingElement:
        return cls(int(data["n"]), tuple(int(c) for c in data["coeffs"]))

    @classmethod
    def from_json(cls, text: str) -> RingElement:
        return cls.from_dict(json.loads(text))


def _check_order(n: int, *elements: RingElement):
    for e in elements:
        if e.quandle_order != n:
            raise ValueError(f"order mismatch: element of Z[Q_{e.quandle_order}] used with order {n}")


def add(a: RingElement, b: RingElement) -> RingElement:
    _check_order(a.quandle_order, b)
    return RingElement(a.quandle_order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def multiply(q: Quandle, a: RingElement, b: RingElement) -> RingElement:
    _check_order(q.n, a, b)
    out = [0] * q.n
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        row = q.table[i]
        for j, bj in enumerate(b.coeffs):
            if bj:
                out[row[j]] += ai * bj
    return RingElement(q.n, tuple(out))


def is_idempotent(q: Quandle, a: RingElement) -> bool:
    return multiply(q, a, a) == a


def length(a: RingElement) -> int:
    """Number of nonzero coefficients."""
    return sum(1 for c in a.coeffs if c)


def trivial_idempotents(n: int) -> list[RingElement]:
    """The basis elements ``x_0 .. x_{n-1}``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [RingElement.basis(n, i) for i in range(n)]

"""Partitions fitting in an m x n box and the lattice Y^{m,n}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .lattice import DEFAULT_MAX_SIZE, FiniteLattice, LatticeError, _guard


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the zero partition."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    def __str__(self):
        if not self.parts:
            return "(0)"
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def cells(self) -> frozenset:
        return frozenset((i, j) for i, p in enumerate(self.parts) for j in range(p))

    def __le__(self, other):
        return all(self[i] <= other[i] for i in range(max(len(self), len(other))))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()")
        return cls(tuple(int(x) for x in body.split(",") if x.strip()))


def partition_meet(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return Partition(tuple(min(a[i], b[i]) for i in range(n)))


def partition_join(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return Partition(tuple(max(a[i], b[i]) for i in range(n)))


def partitions_in_box(m: int, n: int) -> list:
    """All partitions with at most ``m`` parts, each at most ``n``."""
    if m < 1 or n < 1:
        raise ValueError("box dimensions must be positive")
    out = []

    def rec(prefix, cap):
        out.append(Partition(tuple(prefix)))
        if len(prefix) == m:
            return
        for p in range(1, cap + 1):
            rec(prefix + [p], p)
    rec([], n)
    return sorted(out, key=lambda p: (p.size, p.parts))


class YoungLattice(FiniteLattice):
    """Y^{m,n}: partitions in the box ordered by containment of diagrams."""

    def __init__(self, m: int, n: int, max_size: int | None = DEFAULT_MAX_SIZE):
        if m < 1 or n < 1:
            raise ValueError("box dimensions must be positive")
        self.m, self.n = m, n
        self.max_size = max_size

    @property
    def size(self):
        return math.comb(self.m + self.n, self.m)

    def elements(self):
        _guard(self.size, self.max_size, f"Y^{{{self.m},{self.n}}}")
        return self._elements

    @cached_property
    def _elements(self):
        return tuple(partitions_in_box(self.m, self.n))

    def contains(self, x):
        return isinstance(x, Partition) and len(x) <= self.m and x[0] <= self.n

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise LatticeError(f"{x} does not fit in the {self.m}x{self.n} box")

    def leq(self, a, b):
        self._check(a, b)
        return a <= b

    def meet(self, a, b):
        self._check(a, b)
        return partition_meet(a, b)

    def join(self, a, b):
        self._check(a, b)
        return partition_join(a, b)

    @property
    def bottom(self):
        return Partition()

    @property
    def top(self):
        return Partition((self.n,) * self.m)

    def lower_covers(self, x):
        """Remove one corner cell."""
        p = x.parts
        return [Partition(p[:i] + (p[i] - 1,) + p[i + 1:])
                for i in range(len(p)) if i == len(p) - 1 or p[i] > p[i + 1]]

    def label(self, x):
        return str(x)

    def __repr__(self):
        return f"YoungLattice({self.m}, {self.n})"


def young_box_lattice(m: int, n: int, max_size: int | None = DEFAULT_MAX_SIZE) -> YoungLattice:
    return YoungLattice(m, n, max_size=max_size)


def young_box_size(m: int, n: int) -> int:
    return math.comb(m + n, m)

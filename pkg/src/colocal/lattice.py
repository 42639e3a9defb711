"""Finite posets and lattices.

Lattices come in a few concrete flavours sharing one small interface
(``leq``, ``meet``, ``join``, ``lower_covers``, ``label``):

* :class:`TableLattice` -- explicit order matrix with meet/join tables,
* :class:`DownsetLattice` -- down-sets of a poset as bitmasks,
* :class:`ProductLattice` -- factored Cartesian product, size known exactly
  without materializing,
* ``colocal.young.YoungLattice`` -- partitions in a box.

Isomorphism of distributive lattices is decided through their posets of
join-irreducibles.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_SIZE = 100_000


class LatticeError(ValueError):
    pass


class PosetError(LatticeError):
    pass


class SizeGuardError(LatticeError):
    pass


class NotDistributiveError(LatticeError):
    pass


def _guard(size: int, max_size: int | None, what: str = "lattice"):
    if max_size is not None and size > max_size:
        raise SizeGuardError(f"{what} of size {size} exceeds the guard {max_size}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


# ---------------------------------------------------------------------------
# posets


class FinitePoset:
    """A finite partial order on ``items`` given by a boolean ``leq`` matrix.

    ``leq[i, j]`` is true iff ``items[i] <= items[j]``.  With ``close=True``
    the reflexive-transitive closure of ``leq`` is taken first.
    """

    def __init__(self, items: Sequence, leq, names: Sequence[str] | None = None,
                 check: bool = True, close: bool = False):
        self.items = tuple(items)
        n = len(self.items)
        m = np.array(leq, dtype=bool).reshape(n, n) if n else np.zeros((0, 0), dtype=bool)
        if close:
            m = _closure(m)
        self.leq = m
        self.leq.setflags(write=False)
        self.names = tuple(names) if names is not None else tuple(str(x) for x in self.items)
        if check:
            self._check()

    def _check(self):
        m = self.leq
        n = len(self.items)
        if not m.diagonal().all():
            raise PosetError("order is not reflexive")
        off = m & m.T & ~np.eye(n, dtype=bool)
        if off.any():
            i, j = map(int, np.argwhere(off)[0])
            raise PosetError(f"order is not antisymmetric: {self.names[i]} vs {self.names[j]}")
        if n and ((m.astype(np.int32) @ m.astype(np.int32) > 0) & ~m).any():
            raise PosetError("order is not transitive")

    @classmethod
    def from_relations(cls, items: Sequence, pairs: Iterable[tuple], names=None):
        """Poset generated by ``(lower, upper)`` pairs of items."""
        items = tuple(items)
        idx = {x: i for i, x in enumerate(items)}
        m = np.eye(len(items), dtype=bool)
        for a, b in pairs:
            m[idx[a], idx[b]] = True
        return cls(items, m, names=names, close=True)

    def __len__(self):
        return len(self.items)

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self.cover_pairs)} covers)"

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.items)}

    @cached_property
    def cover_pairs(self) -> tuple:
        """Index pairs ``(i, j)`` with ``i`` covered by ``j``."""
        m = self.leq
        n = len(self)
        strict = m & ~np.eye(n, dtype=bool)
        s = strict.astype(np.int32)
        between = (s @ s) > 0
        cov = strict & ~between
        return tuple(sorted((int(i), int(j)) for i, j in np.argwhere(cov)))

    @cached_property
    def down_masks(self) -> tuple:
        return tuple(sum(1 << i for i in np.nonzero(self.leq[:, j])[0]) for j in range(len(self)))

    @cached_property
    def up_masks(self) -> tuple:
        return tuple(sum(1 << j for j in np.nonzero(self.leq[i, :])[0]) for i in range(len(self)))

    def linear_extension(self) -> list:
        below = self.leq.sum(axis=0)
        return sorted(range(len(self)), key=lambda i: (int(below[i]), i))

    def components(self) -> list:
        """Connected components of the comparability graph, as sorted index lists."""
        n = len(self)
        comp = self.leq | self.leq.T
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = True
            q = deque([s])
            part = []
            while q:
                i = q.popleft()
                part.append(i)
                for j in np.nonzero(comp[i])[0]:
                    if not seen[j]:
                        seen[j] = True
                        q.append(int(j))
            out.append(sorted(part))
        return out

    def subposet(self, indices: Sequence[int]) -> "FinitePoset":
        idx = list(indices)
        return FinitePoset([self.items[i] for i in idx], self.leq[np.ix_(idx, idx)],
                           names=[self.names[i] for i in idx], check=False)

    def count_downsets(self, limit: int | None = None) -> int:
        """Number of down-sets; stops early once ``limit`` is exceeded."""
        count = 0
        for _ in self.iter_downsets():
            count += 1
            if limit is not None and count > limit:
                break
        return count

    def iter_downsets(self):
        """Yield all down-sets as bitmasks over the item indices.

        Down-sets of the prefixes of a linear extension are built one element
        at a time: ``D | {x}`` is a down-set iff everything strictly below
        ``x`` is already in ``D``.
        """
        order = self.linear_extension()
        below = [self.down_masks[x] & ~(1 << x) for x in order]

        def rec(k, mask):
            if k == len(order):
                yield mask
                return
            yield from rec(k + 1, mask)
            if below[k] & ~mask == 0:
                yield from rec(k + 1, mask | (1 << order[k]))
        yield from rec(0, 0)

    def to_dict(self) -> dict:
        return {"labels": list(self.names),
                "covers": [[self.names[i], self.names[j]] for i, j in self.cover_pairs]}

    def is_isomorphic(self, other: "FinitePoset") -> bool:
        return self.isomorphism(other) is not None

    def isomorphism(self, other: "FinitePoset") -> dict | None:
        """An order isomorphism ``index -> index`` or None."""
        return poset_isomorphism(self, other)


def _closure(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    n = len(m)
    np.fill_diagonal(m, True)
    for k in range(n):
        m |= np.outer(m[:, k], m[k, :])
    return m


def chain_poset(n: int) -> FinitePoset:
    return FinitePoset(range(n), np.triu(np.ones((n, n), dtype=bool)))


def antichain_poset(n: int) -> FinitePoset:
    return FinitePoset(range(n), np.eye(n, dtype=bool))


def grid_poset(m: int, n: int) -> FinitePoset:
    """Product order on ``{0..m-1} x {0..n-1}``."""
    items = [(i, j) for i in range(m) for j in range(n)]
    leq = [[a[0] <= b[0] and a[1] <= b[1] for b in items] for a in items]
    return FinitePoset(items, leq, names=[f"{i},{j}" for i, j in items])


def disjoint_union(posets: Sequence[FinitePoset]) -> FinitePoset:
    items, names, blocks = [], [], []
    for k, p in enumerate(posets):
        items += [(k, x) for x in p.items]
        names += list(p.names)
        blocks.append(p.leq)
    n = len(items)
    m = np.zeros((n, n), dtype=bool)
    off = 0
    for b in blocks:
        s = len(b)
        m[off:off + s, off:off + s] = b
        off += s
    return FinitePoset(items, m, names=names, check=False)


# ---------------------------------------------------------------------------
# poset isomorphism


def _signatures(p: FinitePoset) -> list:
    below = p.leq.sum(axis=0)
    above = p.leq.sum(axis=1)
    lower_cov = [0] * len(p)
    upper_cov = [0] * len(p)
    for i, j in p.cover_pairs:
        upper_cov[i] += 1
        lower_cov[j] += 1
    return [(int(below[i]), int(above[i]), lower_cov[i], upper_cov[i]) for i in range(len(p))]


def _component_iso(p: FinitePoset, cp: list, q: FinitePoset, cq: list, sp, sq) -> dict | None:
    if len(cp) != len(cq):
        return None
    if sorted(sp[i] for i in cp) != sorted(sq[i] for i in cq):
        return None
    # visit order: breadth first over comparability, starting from a rarest signature
    freq: dict = {}
    for i in cp:
        freq[sp[i]] = freq.get(sp[i], 0) + 1
    start = min(cp, key=lambda i: (freq[sp[i]], sp[i], i))
    comp = p.leq | p.leq.T
    order, seen = [], {start}
    dq = deque([start])
    while dq:
        i = dq.popleft()
        order.append(i)
        for j in sorted(cp, key=lambda j: (freq[sp[j]], j)):
            if j not in seen and comp[i, j]:
                seen.add(j)
                dq.append(j)
    pl, ql = p.leq, q.leq
    mapping: dict = {}
    used: set = set()

    def extend(k):
        if k == len(order):
            return True
        x = order[k]
        for y in cq:
            if y in used or sq[y] != sp[x]:
                continue
            if all(pl[x, a] == ql[y, b] and pl[a, x] == ql[b, y] for a, b in mapping.items()):
                mapping[x] = y
                used.add(y)
                if extend(k + 1):
                    return True
                del mapping[x]
                used.discard(y)
        return False

    return dict(mapping) if extend(0) else None


def poset_isomorphism(p: FinitePoset, q: FinitePoset) -> dict | None:
    """Order isomorphism between finite posets, as an index mapping.

    Components are matched greedily (isomorphism is an equivalence, so a
    greedy match never blocks a solution); inside a component candidates
    are filtered by (below, above, lower covers, upper covers) counts and
    extended by backtracking, ties broken by index.
    """
    if len(p) != len(q):
        return None
    sp, sq = _signatures(p), _signatures(q)
    if sorted(sp) != sorted(sq):
        return None
    comps_q = q.components()
    free = list(range(len(comps_q)))
    result: dict = {}
    for cp in sorted(p.components(), key=lambda c: (-len(c), c)):
        for k in list(free):
            iso = _component_iso(p, cp, q, comps_q[k], sp, sq)
            if iso is not None:
                result.update(iso)
                free.remove(k)
                break
        else:
            return None
    return result


# ---------------------------------------------------------------------------
# lattices


class FiniteLattice:
    """Common interface.  Subclasses define ``size``, ``elements``, ``leq``,
    ``meet``, ``join``, ``lower_covers``, ``contains`` and ``label``."""

    max_size: int = DEFAULT_MAX_SIZE
    factored = False

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.elements())

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements())}

    def label(self, x) -> str:
        return str(x)

    def contains(self, x) -> bool:
        return x in self.index

    def upper_covers(self, x) -> list:
        return [y for y in self.elements() if x in self.lower_covers(y)]

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size})"


class TableLattice(FiniteLattice):
    """Lattice from an explicit order matrix; meet/join tables are derived.

    Raises :class:`LatticeError` if some pair lacks a meet or a join.
    """

    def __init__(self, elements: Sequence, leq, labels: Sequence[str] | None = None):
        self._elements = tuple(elements)
        self.poset = FinitePoset(self._elements, leq, names=labels)
        self.leq_matrix = self.poset.leq
        self.meet_table = _bound_table(self.leq_matrix, lower=True)
        self.join_table = _bound_table(self.leq_matrix, lower=False)
        self._labels = self.poset.names

    @classmethod
    def from_covers(cls, elements: Sequence, covers: Iterable[tuple], labels=None):
        p = FinitePoset.from_relations(elements, covers)
        return cls(p.items, p.leq, labels=labels)

    @property
    def size(self):
        return len(self._elements)

    def elements(self):
        return self._elements

    def _i(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise LatticeError(f"{x!r} is not an element of the lattice") from None

    def leq(self, a, b):
        return bool(self.leq_matrix[self._i(a), self._i(b)])

    def meet(self, a, b):
        return self._elements[self.meet_table[self._i(a), self._i(b)]]

    def join(self, a, b):
        return self._elements[self.join_table[self._i(a), self._i(b)]]

    def label(self, x):
        return self._labels[self._i(x)]

    @cached_property
    def _lower(self):
        out = {j: [] for j in range(self.size)}
        for i, j in self.poset.cover_pairs:
            out[j].append(self._elements[i])
        return out

    def lower_covers(self, x):
        return list(self._lower[self._i(x)])

    @property
    def bottom(self):
        return self._elements[int(np.argmin(self.leq_matrix.sum(axis=0)))]

    @property
    def top(self):
        return self._elements[int(np.argmax(self.leq_matrix.sum(axis=0)))]


def _bound_table(leq: np.ndarray, lower: bool) -> np.ndarray:
    n = len(leq)
    m = leq if lower else leq.T  # m[x, a]: x is a lower (resp. upper) bound of a
    depth = m.sum(axis=0)  # size of the down-set (resp. up-set)
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        bounds = m[:, a][:, None] & m  # bounds[x, b]: x bounds both a and b
        score = np.where(bounds, depth[:, None], -1)
        best = score.argmax(axis=0)
        if (score.max(axis=0) < 0).any():
            raise LatticeError("some pair has no common bound")
        # best must lie above (resp. below) every common bound
        ok = ~bounds | m[:, best]
        if not ok.all():
            b = int(np.nonzero(~ok.all(axis=0))[0][0])
            raise LatticeError(f"elements {a} and {b} have no {'meet' if lower else 'join'}")
        table[a] = best
    return table


class DownsetLattice(FiniteLattice):
    """Down-sets of a finite poset under inclusion; elements are int bitmasks."""

    def __init__(self, poset: FinitePoset, max_size: int | None = DEFAULT_MAX_SIZE):
        self.poset = poset
        masks = []
        for d in poset.iter_downsets():
            masks.append(d)
            _guard(len(masks), max_size, "down-set lattice")
        masks.sort(key=lambda x: (_popcount(x), x))
        self._elements = tuple(masks)
        self._members = frozenset(masks)
        self.full = (1 << len(poset)) - 1

    @property
    def size(self):
        return len(self._elements)

    def elements(self):
        return self._elements

    def contains(self, x):
        return x in self._members

    def _check(self, *xs):
        for x in xs:
            if x not in self._members:
                raise LatticeError(f"{x!r} is not a down-set of the poset")

    def leq(self, a, b):
        self._check(a, b)
        return a & ~b == 0

    def meet(self, a, b):
        self._check(a, b)
        return a & b

    def join(self, a, b):
        self._check(a, b)
        return a | b

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.full

    def maximal(self, x) -> list:
        up = self.poset.up_masks
        return [i for i in _bits(x) if up[i] & x == 1 << i]

    def lower_covers(self, x):
        return [x & ~(1 << i) for i in self.maximal(x)]

    def members(self, x) -> list:
        return [self.poset.items[i] for i in _bits(x)]

    def label(self, x):
        return "{" + ", ".join(self.poset.names[i] for i in self.maximal(x)) + "}"


class ProductLattice(FiniteLattice):
    """Factored Cartesian product; elements are tuples, operations componentwise."""

    factored = True

    def __init__(self, factors: Sequence[FiniteLattice], max_size: int | None = DEFAULT_MAX_SIZE):
        self.factors = tuple(factors)
        self.max_size = max_size

    @property
    def size(self) -> int:
        return math.prod(f.size for f in self.factors)

    def elements(self):
        _guard(self.size, self.max_size)
        return self._materialized

    @cached_property
    def _materialized(self):
        return tuple(itertools.product(*(f.elements() for f in self.factors)))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(c) for f, c in zip(self.factors, x)))

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise LatticeError(f"{x!r} is not an element of the product")

    def leq(self, a, b):
        self._check(a, b)
        return all(f.leq(x, y) for f, x, y in zip(self.factors, a, b))

    def meet(self, a, b):
        self._check(a, b)
        return tuple(f.meet(x, y) for f, x, y in zip(self.factors, a, b))

    def join(self, a, b):
        self._check(a, b)
        return tuple(f.join(x, y) for f, x, y in zip(self.factors, a, b))

    @property
    def bottom(self):
        return tuple(f.bottom for f in self.factors)

    @property
    def top(self):
        return tuple(f.top for f in self.factors)

    def lower_covers(self, x):
        out = []
        for k, (f, c) in enumerate(zip(self.factors, x)):
            for d in f.lower_covers(c):
                out.append(x[:k] + (d,) + x[k + 1:])
        return out

    def label(self, x):
        if not self.factors:
            return "()"
        return "×".join(f.label(c) for f, c in zip(self.factors, x))


# ---------------------------------------------------------------------------
# module-level operations


def downset_lattice(p: FinitePoset, max_size: int | None = DEFAULT_MAX_SIZE) -> DownsetLattice:
    return DownsetLattice(p, max_size=max_size)


def meet(L: FiniteLattice, a, b):
    if not L.contains(a) or not L.contains(b):
        raise LatticeError("element not in lattice")
    return L.meet(a, b)


def join(L: FiniteLattice, a, b):
    if not L.contains(a) or not L.contains(b):
        raise LatticeError("element not in lattice")
    return L.join(a, b)


def product(factors: Sequence[FiniteLattice], max_size: int | None = DEFAULT_MAX_SIZE) -> ProductLattice:
    return ProductLattice(factors, max_size=max_size)


def chain(n: int) -> TableLattice:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return TableLattice(range(n), np.triu(np.ones((n, n), dtype=bool)))


def boolean_lattice(k: int) -> DownsetLattice:
    return DownsetLattice(antichain_poset(k))


def diamond_m3() -> TableLattice:
    return TableLattice.from_covers("0abc1", [("0", "a"), ("0", "b"), ("0", "c"),
                                              ("a", "1"), ("b", "1"), ("c", "1")])


def pentagon_n5() -> TableLattice:
    return TableLattice.from_covers("0abc1", [("0", "a"), ("a", "b"), ("b", "1"),
                                              ("0", "c"), ("c", "1")])


def tables(L: FiniteLattice, max_size: int | None = 1000):
    """Index-based meet and join tables of a materialized lattice."""
    if isinstance(L, TableLattice):
        return L.meet_table, L.join_table
    _guard(L.size, max_size)
    els = L.elements()
    idx = L.index
    n = len(els)
    M = np.empty((n, n), dtype=np.int64)
    J = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(els):
        for j in range(i, n):
            b = els[j]
            M[i, j] = M[j, i] = idx[L.meet(a, b)]
            J[i, j] = J[j, i] = idx[L.join(a, b)]
    return M, J


def is_distributive(L: FiniteLattice, max_size: int | None = 1000):
    """``(True, None)`` or ``(False, (a, b, c))`` with ``(a v b) ^ c != (a ^ c) v (b ^ c)``."""
    M, J = tables(L, max_size)
    els = L.elements()
    for c in range(len(els)):
        lhs = M[J, c]
        rhs = J[M[:, c][:, None], M[:, c][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = map(int, bad[0])
            return False, (els[a], els[b], els[c])
    return True, None


def is_frame(L: FiniteLattice, max_size: int | None = 128, exhaustive: bool = False) -> bool:
    """Check ``a ^ (V B) = V (a ^ b)`` for every ``a`` and every ``B`` with
    ``|B| <= 3`` plus ``B = L``.  For finite lattices larger joins fold into
    these by associativity.  ``exhaustive`` tries every subset (needs ``|L| <= 12``).
    """
    M, J = tables(L, max_size)
    n = len(M)
    if n == 0:
        return True
    bot = L.index[L.bottom]
    top = L.index[L.top]
    r = np.arange(n)
    if exhaustive:
        if n > 12:
            raise SizeGuardError("exhaustive frame check is limited to 12 elements")
        for a in range(n):
            for mask in range(1 << n):
                B = [i for i in range(n) if mask >> i & 1]
                jb = reduce(lambda x, y: J[x, y], B, bot)
                rhs = reduce(lambda x, y: J[x, M[a, y]], B, bot)
                if M[a, jb] != rhs:
                    return False
        return True
    for a in range(n):
        if M[a, bot] != bot:
            return False
        ma = M[a]
        # |B| = 2
        if (ma[J] != J[ma[:, None], ma[None, :]]).any():
            return False
        # |B| = 3
        jbcd = J[J[:, :, None], r[None, None, :]]
        lhs = ma[jbcd]
        rhs = J[J[ma[:, None], ma[None, :]][:, :, None], ma[None, None, :]]
        if (lhs != rhs).any():
            return False
        # B = all elements
        if M[a, top] != reduce(lambda x, y: J[x, y], ma, bot):
            return False
    return True


def _lift(L: ProductLattice, k: int, x):
    b = list(L.bottom)
    b[k] = x
    return tuple(b)


def join_irreducibles(L: FiniteLattice, max_size: int | None = DEFAULT_MAX_SIZE) -> FinitePoset:
    """Poset of elements with exactly one lower cover.

    Raises :class:`NotDistributiveError` unless ``L`` is distributive, which
    is tested exactly: the map ``x -> {j <= x}`` is an order embedding into
    the down-sets of the join-irreducibles, so ``L`` is distributive iff it
    has as many elements as there are down-sets.
    """
    if isinstance(L, ProductLattice):
        parts = [join_irreducibles(f, max_size) for f in L.factors]
        items, names = [], []
        for k, p in enumerate(parts):
            items += [_lift(L, k, x) for x in p.items]
            names += [L.label(_lift(L, k, x)) for x in p.items]
        P = disjoint_union(parts)
        return FinitePoset(items, P.leq, names=names, check=False)
    _guard(L.size, max_size)
    jis = [x for x in L.elements() if len(L.lower_covers(x)) == 1]
    leq = [[L.leq(a, b) for b in jis] for a in jis]
    P = FinitePoset(jis, leq, names=[L.label(x) for x in jis])
    if P.count_downsets(limit=L.size) != L.size:
        raise NotDistributiveError(f"{L!r} is not distributive")
    return P


def is_distributive_birkhoff(L: FiniteLattice, max_size: int | None = DEFAULT_MAX_SIZE) -> bool:
    try:
        join_irreducibles(L, max_size)
    except NotDistributiveError:
        return False
    return True


class LatticeIsomorphism:
    """Isomorphism between distributive lattices induced by a bijection of
    join-irreducibles: ``x`` maps to the join of the images of ``{j <= x}``."""

    def __init__(self, source: FiniteLattice, target: FiniteLattice, ji_map: dict):
        self.source = source
        self.target = target
        self.ji_map = ji_map

    def __call__(self, x):
        y = self.target.bottom
        for j, fj in self.ji_map.items():
            if self.source.leq(j, x):
                y = self.target.join(y, fj)
        return y

    def as_dict(self, max_size: int | None = 10_000) -> dict:
        _guard(self.source.size, max_size)
        return {x: self(x) for x in self.source.elements()}

    def verify(self, max_size: int | None = 2_000) -> bool:
        """Bijective and order preserving in both directions (quadratic)."""
        f = self.as_dict(max_size)
        if len(set(f.values())) != self.source.size or self.target.size != self.source.size:
            return False
        els = list(f)
        return all(self.source.leq(a, b) == self.target.leq(f[a], f[b]) for a in els for b in els)

    def to_dict(self) -> dict:
        return {self.source.label(j): self.target.label(k)
                for j, k in sorted(self.ji_map.items(), key=lambda kv: self.source.label(kv[0]))}


class ElementIsomorphism(LatticeIsomorphism):
    def __init__(self, source, target, mapping: dict):
        super().__init__(source, target, {})
        self.mapping = mapping

    def __call__(self, x):
        return self.mapping[x]

    def to_dict(self):
        return {self.source.label(a): self.target.label(b) for a, b in self.mapping.items()}


def are_isomorphic(L1: FiniteLattice, L2: FiniteLattice,
                   max_size: int | None = DEFAULT_MAX_SIZE) -> LatticeIsomorphism | None:
    """A witness isomorphism or None.

    Distributive inputs are compared through their join-irreducibles
    (factor by factor for products); otherwise materialized lattices of
    size at most ``max_size`` are compared as posets directly.
    """
    if L1.size != L2.size:
        return None
    try:
        P1 = join_irreducibles(L1, max_size)
        d1 = True
    except NotDistributiveError:
        d1 = False
    try:
        P2 = join_irreducibles(L2, max_size)
        d2 = True
    except NotDistributiveError:
        d2 = False
    if d1 != d2:
        return None
    if d1:
        iso = poset_isomorphism(P1, P2)
        if iso is None:
            return None
        return LatticeIsomorphism(L1, L2, {P1.items[i]: P2.items[j] for i, j in iso.items()})
    _guard(L1.size, max_size)
    e1, e2 = L1.elements(), L2.elements()
    Q1 = FinitePoset(e1, [[L1.leq(a, b) for b in e1] for a in e1], check=False)
    Q2 = FinitePoset(e2, [[L2.leq(a, b) for b in e2] for a in e2], check=False)
    iso = poset_isomorphism(Q1, Q2)
    if iso is None:
        return None
    return ElementIsomorphism(L1, L2, {e1[i]: e2[j] for i, j in iso.items()})


# ---------------------------------------------------------------------------
# Hasse diagrams


def hasse_edges(L: FiniteLattice, max_size: int | None = DEFAULT_MAX_SIZE) -> list:
    """Cover pairs ``(lower, upper)``."""
    _guard(L.size, max_size)
    return [(y, x) for x in L.elements() for y in L.lower_covers(x)]


def heights(L: FiniteLattice, max_size: int | None = DEFAULT_MAX_SIZE) -> dict:
    _guard(L.size, max_size)
    h: dict = {}
    for x in sorted(L.elements(), key=lambda x: L.index[x]):
        stack = [x]
        while stack:
            y = stack[-1]
            if y in h:
                stack.pop()
                continue
            lc = L.lower_covers(y)
            todo = [z for z in lc if z not in h]
            if todo:
                stack.extend(todo)
            else:
                h[y] = 1 + max((h[z] for z in lc), default=-1)
                stack.pop()
    return h


def to_dot(L: FiniteLattice, name: str = "L", max_size: int | None = DEFAULT_MAX_SIZE) -> str:
    """Graphviz digraph of the Hasse diagram, edges from lower to upper covers,
    one rank per height, labels sorted."""
    h = heights(L, max_size)
    lab = {x: L.label(x) for x in L.elements()}
    out = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    levels: dict = {}
    for x, k in h.items():
        levels.setdefault(k, []).append(lab[x])
    for k in sorted(levels):
        nodes = " ".join(f'"{s}";' for s in sorted(levels[k]))
        out.append(f"  {{ rank=same; {nodes} }}")
    edges = sorted((lab[a], lab[b]) for a, b in hasse_edges(L, max_size))
    out += [f'  "{a}" -> "{b}";' for a, b in edges]
    out.append("}")
    return "\n".join(out) + "\n"

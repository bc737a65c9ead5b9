"""Finite groups stored as Cayley tables.

Elements are integer indices ``0..n-1`` into the table; index 0 is always the
identity.  Element sets (subgroups, cyclicizers, centralizers) are plain
``frozenset`` objects of indices.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "NotLatinSquare",
    "NotAssociative",
    "NoIdentityAtZero",
    "NoInverse",
    "GroupSizeError",
    "NotASubgroup",
    "OrderBoundExceeded",
    "FiniteGroup",
    "make_group",
    "load_group_json",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "elementary_abelian_2",
    "dicyclic_group",
    "direct_product",
    "subgroup_generated",
    "is_cyclic_subset",
    "pair_generates_cyclic",
    "cyclicizer_of",
    "cyclicizer_of_group",
    "centralizer",
    "center",
    "is_abelian",
    "is_cyclic_group",
    "order_two_and_three_sets",
    "groups_isomorphic",
    "brute_force_isomorphic",
]

ISOMORPHISM_ORDER_BOUND = 24


class GroupError(ValueError):
    """Base class for invalid group data."""


class NotLatinSquare(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentityAtZero(GroupError):
    pass


class NoInverse(GroupError):
    pass


class GroupSizeError(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class OrderBoundExceeded(GroupError):
    pass


class FiniteGroup:
    """A validated finite group.

    Build instances through :func:`make_group` (or one of the family
    constructors); the constructor itself does not validate.
    """

    def __init__(self, table: np.ndarray, names: Sequence[str]):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        self.table = table
        self.names = tuple(names)
        self.order = len(self.names)
        self.identity = 0
        # tuple rows are much faster than numpy scalar indexing in tight loops
        self._rows = tuple(tuple(row) for row in table.tolist())
        self._index = {name: i for i, name in enumerate(self.names)}

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, x: int, y: int) -> int:
        return self._rows[x][y]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self._rows)

    def inverse(self, x: int) -> int:
        return self._inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        result = 0
        for _ in range(k):
            result = self._rows[result][x]
        return result

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        orders = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self._rows[y][x]
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, x: int) -> int:
        return self._orders[x]

    @property
    def element_orders(self) -> tuple[int, ...]:
        return self._orders

    def order_profile(self) -> dict[int, int]:
        """Map each element order to the number of elements having it."""
        return dict(sorted(Counter(self._orders).items()))

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def name_of(self, x: int) -> str:
        return self.names[x]

    def to_json(self) -> dict:
        return {"order": self.order, "names": list(self.names), "table": self.table.tolist()}


def make_group(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    Raises the first applicable error among :class:`NoIdentityAtZero`,
    :class:`NotLatinSquare`, :class:`NotAssociative` and :class:`NoInverse`,
    naming the offending entries.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupError(f"table must be a non-empty square array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GroupError("table entries must be integers")
    n = arr.shape[0]
    if names is None:
        names = [str(i) for i in range(n)]
    if len(names) != n:
        raise GroupError(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        raise GroupError("element names must be distinct")

    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = bad[0]
        raise NotLatinSquare(f"entry ({i}, {j}) = {arr[i, j]} is out of range 0..{n - 1}")

    ident = np.arange(n)
    for i in range(n):
        if arr[0, i] != i:
            raise NoIdentityAtZero(f"table[0][{i}] = {arr[0, i]}, expected {i}")
        if arr[i, 0] != i:
            raise NoIdentityAtZero(f"table[{i}][0] = {arr[i, 0]}, expected {i}")

    for i in range(n):
        row = np.sort(arr[i])
        if not np.array_equal(row, ident):
            j = _first_repeat(arr[i])
            raise NotLatinSquare(f"row {i} repeats element {arr[i, j]} (column {j})")
        col = np.sort(arr[:, i])
        if not np.array_equal(col, ident):
            j = _first_repeat(arr[:, i])
            raise NotLatinSquare(f"column {i} repeats element {arr[j, i]} (row {j})")

    # left[i,j,k] = (ij)k, right[i,j,k] = i(jk)
    left = arr[arr, :]
    right = arr[:, arr]
    bad = np.argwhere(left != right)
    if len(bad):
        i, j, k = bad[0]
        raise NotAssociative(
            f"({names[i]}*{names[j]})*{names[k]} = {names[left[i, j, k]]} but "
            f"{names[i]}*({names[j]}*{names[k]}) = {names[right[i, j, k]]}"
        )

    for i in range(n):
        j = int(np.flatnonzero(arr[i] == 0)[0])
        if arr[j, i] != 0:
            raise NoInverse(f"{names[i]} has right inverse {names[j]} that is not a left inverse")

    return FiniteGroup(arr, names)


def _first_repeat(values: np.ndarray) -> int:
    seen = set()
    for j, v in enumerate(values.tolist()):
        if v in seen:
            return j
        seen.add(v)
    return 0


def load_group_json(path: str | Path) -> FiniteGroup:
    """Read ``{"order": n, "names": [...], "table": [[...], ...]}`` from disk."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "table" not in data:
        raise GroupError("JSON group must be an object with a 'table' field")
    table = data["table"]
    if "order" in data and data["order"] != len(table):
        raise GroupError(f"declared order {data['order']} but table has {len(table)} rows")
    return make_group(table, data.get("names"))


# -- standard families -------------------------------------------------------


def _from_elements(elements: Sequence, op, names: Sequence[str]) -> FiniteGroup:
    """Tabulate a group given its elements (identity first) and a product."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return make_group(table, names)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSizeError("cyclic group order must be positive")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return make_group(table, [str(i) for i in range(n)])


def _power_name(base: str, k: int) -> str:
    if k == 0:
        return ""
    return base if k == 1 else f"{base}^{k}"


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group with ``order`` elements (so ``dihedral_group(8)`` is D8).

    Elements are ``s^a r^i``, stored at index ``a*m + i`` where ``m = order/2``.
    """
    if order < 2 or order % 2:
        raise GroupSizeError(f"dihedral group order must be even and >= 2, got {order}")
    m = order // 2
    elements = [(a, i) for a in (0, 1) for i in range(m)]

    def op(x, y):
        (a, i), (b, j) = x, y
        # r^i s = s r^-i
        return ((a + b) % 2, ((-i if b else i) + j) % m)

    names = []
    for a, i in elements:
        name = ("s" if a else "") + _power_name("r", i)
        names.append(name or "e")
    return _from_elements(elements, op, names)


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, x = [], start
        while x not in seen:
            seen.add(x)
            cycle.append(x + 1)
            x = perm[x]
        cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) or "()"


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    # composition: (p*q)(x) = p(q(x))
    def op(p, q):
        return tuple(p[q[x]] for x in range(len(p)))

    return _from_elements(perms, op, [_cycle_name(p) for p in perms])


def _parity(perm: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]) % 2


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupSizeError(f"symmetric_group supports 1 <= n <= 5, got {n}")
    return _perm_group(list(itertools.permutations(range(n))))


def alternating_group(n: int) -> FiniteGroup:
    """Alternating group on ``n`` letters (order ``n!/2``)."""
    if not 1 <= n <= 5:
        raise GroupSizeError(f"alternating_group supports 1 <= n <= 5, got {n}")
    return _perm_group([p for p in itertools.permutations(range(n)) if _parity(p) == 0])


def elementary_abelian_2(k: int) -> FiniteGroup:
    """The group Z2^k; element names are bit strings."""
    if k < 0 or k > 10:
        raise GroupSizeError(f"elementary_abelian_2 supports 0 <= k <= 10, got {k}")
    n = 1 << k
    idx = np.arange(n)
    table = idx[:, None] ^ idx[None, :]
    names = [format(i, f"0{k}b") if k else "e" for i in range(n)]
    return make_group(table, names)


def dicyclic_group(order: int) -> FiniteGroup:
    """Dicyclic group of the given order (a multiple of 4); order 8 gives Q8.

    Presentation ``<a, b | a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1>`` with
    ``order = 4m``.  Elements ``a^i b^j`` live at index ``j*2m + i``.
    """
    if order < 4 or order % 4:
        raise GroupSizeError(f"dicyclic group order must be a positive multiple of 4, got {order}")
    m = order // 4
    n2 = 2 * m
    elements = [(j, i) for j in (0, 1) for i in range(n2)]

    def op(x, y):
        (j, i), (l, k) = x, y
        if j == 0:
            return (l, (i + k) % n2)
        # a^i b a^k b^l = a^(i-k) b^(1+l)
        if l == 0:
            return (1, (i - k) % n2)
        return (0, (i - k + m) % n2)

    names = [(_power_name("a", i) + ("b" if j else "")) or "e" for j, i in elements]
    return _from_elements(elements, op, names)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """External direct product; ``(x, y)`` sits at index ``x*|h| + y``."""
    ng, nh = g.order, h.order
    gt, ht = g.table, h.table
    # table[(x1,y1),(x2,y2)] = gt[x1,x2]*nh + ht[y1,y2]
    table = (gt[:, None, :, None] * nh + ht[None, :, None, :]).reshape(ng * nh, ng * nh)
    names = [f"({a},{b})" for a in g.names for b in h.names]
    return make_group(table, names)


# -- subgroups and cyclicizers ----------------------------------------------


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Closure of ``gens`` under multiplication (inverses come for free in a finite group)."""
    gens = list(dict.fromkeys(gens))
    elements = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = group.mul(x, g)
            if y not in elements:
                elements.add(y)
                queue.append(y)
    return frozenset(elements)


def _check_closed(group: FiniteGroup, subset: frozenset[int]) -> None:
    if 0 not in subset:
        raise NotASubgroup("subset does not contain the identity")
    for x in subset:
        for y in subset:
            if group.mul(x, y) not in subset:
                raise NotASubgroup(
                    f"{group.names[x]}*{group.names[y]} = {group.names[group.mul(x, y)]} leaves the subset"
                )


def is_cyclic_subset(group: FiniteGroup, subset: Iterable[int]) -> bool:
    """True iff the subgroup ``subset`` has an element whose order is ``|subset|``."""
    subset = frozenset(subset)
    _check_closed(group, subset)
    size = len(subset)
    return any(group.element_order(z) == size for z in subset)


def pair_generates_cyclic(group: FiniteGroup, x: int, y: int) -> bool:
    h = subgroup_generated(group, (x, y))
    size = len(h)
    return any(group.element_order(z) == size for z in h)


def cyclicizer_of(group: FiniteGroup, x: int) -> frozenset[int]:
    """All ``y`` with ``<x, y>`` cyclic.  Not a subgroup in general."""
    return frozenset(y for y in range(group.order) if pair_generates_cyclic(group, x, y))


def cyclicizer_of_group(group: FiniteGroup) -> frozenset[int]:
    result = frozenset(range(group.order))
    for x in range(group.order):
        result &= cyclicizer_of(group, x)
    return result


def centralizer(group: FiniteGroup, x: int) -> frozenset[int]:
    return frozenset(y for y in range(group.order) if group.mul(x, y) == group.mul(y, x))


def center(group: FiniteGroup) -> frozenset[int]:
    t = group.table
    commutes = (t == t.T).all(axis=0)
    return frozenset(np.flatnonzero(commutes).tolist())


def is_abelian(group: FiniteGroup) -> bool:
    return bool((group.table == group.table.T).all())


def is_cyclic_group(group: FiniteGroup) -> bool:
    return max(group.element_orders) == group.order


def order_two_and_three_sets(group: FiniteGroup) -> tuple[frozenset[int], frozenset[int]]:
    orders = group.element_orders
    twos = frozenset(x for x, k in enumerate(orders) if k == 2)
    threes = frozenset(x for x, k in enumerate(orders) if k == 3)
    return twos, threes


# -- isomorphism -------------------------------------------------------------


def _generating_words(group: FiniteGroup) -> tuple[list[int], list[tuple[int, int]]]:
    """Pick generators and a spanning tree expressing every element.

    Returns ``(gens, tree)`` where ``tree[x] = (parent, k)`` means
    ``x = parent * gens[k]``; ``tree[0]`` is ``(-1, -1)``.
    Generators are chosen greedily by descending element order, which keeps
    the generating set small.
    """
    gens: list[int] = []
    span = frozenset([0])
    for x in sorted(range(group.order), key=lambda z: (-group.element_order(z), z)):
        if x not in span:
            gens.append(x)
            span = subgroup_generated(group, gens)
            if len(span) == group.order:
                break
    tree: list[tuple[int, int]] = [(-1, -1)] * group.order
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for k, g in enumerate(gens):
            y = group.mul(x, g)
            if y not in seen:
                seen.add(y)
                tree[y] = (x, k)
                queue.append(y)
    return gens, tree


def _bfs_order(group: FiniteGroup, tree: list[tuple[int, int]]) -> list[int]:
    depth = {0: 0}

    def d(x):
        if x not in depth:
            depth[x] = d(tree[x][0]) + 1
        return depth[x]

    return sorted(range(group.order), key=lambda x: (d(x), x))


def groups_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Decide ``g ≅ h`` by backtracking over images of a generating set."""
    if max(g.order, h.order) > ISOMORPHISM_ORDER_BOUND:
        raise OrderBoundExceeded(
            f"isomorphism search is limited to order <= {ISOMORPHISM_ORDER_BOUND}"
        )
    if g.order != h.order or g.order_profile() != h.order_profile():
        return False
    if is_abelian(g) != is_abelian(h):
        return False
    n = g.order
    gens, tree = _generating_words(g)
    order = _bfs_order(g, tree)
    candidates = [
        [y for y in range(n) if h.element_order(y) == g.element_order(x)] for x in gens
    ]

    def extend(images: list[int]) -> bool:
        if len(images) < len(gens):
            for y in candidates[len(images)]:
                if y not in images and extend(images + [y]):
                    return True
            return False
        phi = [0] * n
        for x in order[1:]:
            parent, k = tree[x]
            phi[x] = h.mul(phi[parent], images[k])
        if len(set(phi)) != n:
            return False
        return all(
            phi[g.mul(a, b)] == h.mul(phi[a], phi[b]) for a in range(n) for b in range(n)
        )

    return extend([])


def brute_force_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Try every identity-fixing bijection.  Only for tiny orders (n <= 8)."""
    if g.order != h.order:
        return False
    n = g.order
    if n > 8:
        raise OrderBoundExceeded("brute-force isomorphism is limited to order <= 8")
    gt, ht = g.table, h.table
    for rest in itertools.permutations(range(1, n)):
        phi = np.array((0,) + rest)
        if np.array_equal(phi[gt], ht[phi[:, None], phi[None, :]]):
            return True
    return False

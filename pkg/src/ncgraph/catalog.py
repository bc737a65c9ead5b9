"""Named small groups: every group of order 1..15 plus Z2^4, D16 and D20."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    FiniteGroup,
    alternating_group,
    cyclic_group,
    cyclicizer_of_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian_2,
    is_abelian,
    is_cyclic_group,
    symmetric_group,
)
from .noncyclic import is_acceptable

__all__ = [
    "CatalogEntry",
    "UnknownGroup",
    "standard_catalog",
    "noncyclic_catalog",
    "get_group",
    "compute_tags",
]


class UnknownGroup(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: FiniteGroup
    tags: frozenset[str]

    @property
    def order(self) -> int:
        return self.group.order


def _is_elementary_abelian_2(group: FiniteGroup) -> bool:
    return group.order > 1 and all(k <= 2 for k in group.element_orders)


def compute_tags(group: FiniteGroup) -> frozenset[str]:
    tags = set()
    if is_abelian(group):
        tags.add("abelian")
    if is_cyclic_group(group):
        tags.add("cyclic")
    if _is_elementary_abelian_2(group):
        tags.add("elementary_abelian_2")
    if is_acceptable(group):
        tags.add("acceptable")
    if len(cyclicizer_of_group(group)) == 1:
        tags.add("trivial_cyclicizer")
    if group.order % 2 == 1:
        tags.add("odd_order")
    return frozenset(tags)


def _constructions():
    """(name, builder, family tags) in catalog order."""
    z = cyclic_group
    out = []
    for n in range(1, 16):
        out.append((f"Z{n}", lambda n=n: z(n), ()))
        if n == 4:
            out.append(("Z2^2", lambda: elementary_abelian_2(2), ()))
        elif n == 6:
            out.append(("S3", lambda: symmetric_group(3), ("dihedral",)))
        elif n == 8:
            out += [
                ("Z4xZ2", lambda: direct_product(z(4), z(2)), ()),
                ("Z2^3", lambda: elementary_abelian_2(3), ()),
                ("D8", lambda: dihedral_group(8), ("dihedral",)),
                ("Q8", lambda: dicyclic_group(8), ("dicyclic",)),
            ]
        elif n == 9:
            out.append(("Z3xZ3", lambda: direct_product(z(3), z(3)), ()))
        elif n == 10:
            out.append(("D10", lambda: dihedral_group(10), ("dihedral",)))
        elif n == 12:
            out += [
                ("Z6xZ2", lambda: direct_product(z(6), z(2)), ()),
                ("D12", lambda: dihedral_group(12), ("dihedral",)),
                ("A4", lambda: alternating_group(4), ()),
                ("Dic3", lambda: dicyclic_group(12), ("dicyclic",)),
            ]
        elif n == 14:
            out.append(("D14", lambda: dihedral_group(14), ("dihedral",)))
    out += [
        ("Z2^4", lambda: elementary_abelian_2(4), ()),
        ("D16", lambda: dihedral_group(16), ("dihedral",)),
        ("D20", lambda: dihedral_group(20), ("dihedral",)),
    ]
    return out


@lru_cache(maxsize=1)
def standard_catalog() -> tuple[CatalogEntry, ...]:
    entries = []
    for name, build, family in _constructions():
        group = build()
        entries.append(CatalogEntry(name, group, compute_tags(group) | set(family)))
    return tuple(entries)


def noncyclic_catalog() -> tuple[CatalogEntry, ...]:
    return tuple(e for e in standard_catalog() if "cyclic" not in e.tags)


_ALIASES = {
    "Z2XZ2": "Z2^2",
    "V4": "Z2^2",
    "Z2XZ4": "Z4xZ2",
    "Z2XZ2XZ2": "Z2^3",
    "Z2XZ6": "Z6xZ2",
    "D6": "S3",
    "Z3^2": "Z3xZ3",
    "Q12": "Dic3",
}


def get_group(name: str) -> CatalogEntry:
    """Look up a catalog entry by name (case-insensitive, a few aliases accepted)."""
    key = name.strip().replace(" ", "")
    key = _ALIASES.get(key.upper(), key)
    for entry in standard_catalog():
        if entry.name.upper() == key.upper():
            return entry
    raise UnknownGroup(name)

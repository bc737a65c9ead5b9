# %% [markdown]
# # Groups as Cayley tables
#
# Every group is a validated Cayley table with the identity at index 0.
# This script builds a few groups, looks at element orders, and computes
# cyclicizers.

# %%
from ncgraph.groups import (
    cyclicizer_of,
    cyclicizer_of_group,
    center,
    dicyclic_group,
    dihedral_group,
    groups_isomorphic,
    make_group,
    NotLatinSquare,
    symmetric_group,
)

d8 = dihedral_group(8)
print("D8 elements:", d8.names)
print("order profile:", d8.order_profile())

# %% [markdown]
# The cyclicizer of x collects every y such that <x, y> is cyclic.
# For a rotation of D8 it is the rotation subgroup; for a reflection
# it is just {e, s}.

# %%
for name in ("r", "s"):
    x = d8.index_of(name)
    print(f"Cyc({name}) =", sorted(d8.names[y] for y in cyclicizer_of(d8, x)))
print("Cyc(D8) =", sorted(d8.names[y] for y in cyclicizer_of_group(d8)))
print("Z(D8)   =", sorted(d8.names[y] for y in center(d8)))

q8 = dicyclic_group(8)
print("Cyc(Q8) =", sorted(q8.names[y] for y in cyclicizer_of_group(q8)))

# %% [markdown]
# Isomorphism testing backtracks over images of a small generating set.

# %%
print("S3 ≅ D6:", groups_isomorphic(symmetric_group(3), dihedral_group(6)))
print("D8 ≅ Q8:", groups_isomorphic(d8, q8))

# %% [markdown]
# Bad tables are rejected with a message naming the offending entry.

# %%
try:
    make_group([[0, 1], [1, 1]], ["e", "a"])
except NotLatinSquare as exc:
    print("rejected:", exc)

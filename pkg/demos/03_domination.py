# %% [markdown]
# # Domination numbers
#
# The exact solver is a branch and bound; for small graphs it is checked
# against exhaustive search.

# %%
from ncgraph.catalog import noncyclic_catalog
from ncgraph.domination import brute_force_gamma, domination_number
from ncgraph.noncyclic import build_noncyclic_graph, noncyclic_complement

print(f"{'group':6} {'n':>3} {'|Cyc|':>5} {'γ':>3} {'γ̄':>3} {'n-(γ+γ̄)':>9}")
for entry in noncyclic_catalog():
    ncg = build_noncyclic_graph(entry.group)
    co = noncyclic_complement(ncg)
    g, gbar = domination_number(ncg.graph), domination_number(co.graph)
    if co.graph.vertex_count <= 18:
        assert gbar.gamma == brute_force_gamma(co.graph)
    print(f"{entry.name:6} {entry.order:3} {len(ncg.cyc):5} {g.gamma:3} {gbar.gamma:3} {entry.order - g.gamma - gbar.gamma:9}")

# %% [markdown]
# Witnesses come back as vertex indices; map them to element names.

# %%
from ncgraph.catalog import get_group

ncg = noncyclic_complement(build_noncyclic_graph(get_group("D8").group))
result = domination_number(ncg.graph)
print("D8 complement:", result.to_dict(ncg.labels))

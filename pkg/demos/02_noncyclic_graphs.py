# %% [markdown]
# # Non-cyclic graphs and their complements
#
# Vertices are the elements outside Cyc(G); x and y are joined when
# <x, y> is not cyclic.

# %%
from ncgraph.catalog import get_group, noncyclic_catalog
from ncgraph.graphs import components
from ncgraph.noncyclic import build_noncyclic_graph, noncyclic_complement

for name in ("Z2^2", "S3", "D8", "D10", "Z3xZ3", "A4"):
    ncg = build_noncyclic_graph(get_group(name).group)
    co = noncyclic_complement(ncg)
    shape = " ∪ ".join(str(c) for c in components(co.graph))
    print(f"{name:6} |V| = {ncg.graph.vertex_count:2}  diam = {ncg.graph.diameter()}  complement = {shape}")

# %% [markdown]
# Graphs export to DOT (for graphviz) or JSON with element names as labels.

# %%
ncg = build_noncyclic_graph(get_group("S3").group)
print(noncyclic_complement(ncg).graph.to_dot(ncg.labels, name="S3 complement"))

# %% [markdown]
# A quick table over the whole non-cyclic catalog.

# %%
for entry in noncyclic_catalog():
    ncg = build_noncyclic_graph(entry.group)
    g = ncg.graph
    print(f"{entry.name:6} n={entry.order:2} |Cyc|={len(ncg.cyc)} edges={g.edge_count():3} "
          f"min deg={g.min_degree():2} max deg={g.max_degree():2}")

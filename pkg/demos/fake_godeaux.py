# %% [markdown]
# # A fake Godeaux surface with K^2 = 1
#
# PSL(2,7) acting on two curves, branched as (3,3,7) and (2,4,7).  The
# quotient has three cyclic quotient singularities 1/7, 2/7, 2/7 and is not
# known to be minimal.  We rebuild it from the generating vectors, check the
# singularities and compute its first homology.

# %%
from prodquot import catalogue
from prodquot.baskets import Basket
from prodquot.genvec import find_surfaces, format_vector
from prodquot.homology import h1
from prodquot.surface import basket_of_vectors, make_record

G = catalogue().get("PSL(2,7)")
basket = Basket.parse("1/7, 2/7^2")
print(G.name, "order", G.order)

# %% [markdown]
# Up to Hurwitz moves and automorphisms there is a single pair.

# %%
pairs = find_surfaces(basket, (7, 3, 3), (7, 4, 2), G)
print(len(pairs), "class")
v1, v2 = pairs[0]
print("S1 =", format_vector(G, v1))
print("S2 =", format_vector(G, v2))

# %%
print("singularities:", basket_of_vectors(G, v1, v2))
rec = make_record(G, basket, v1, v2)
print(f"K^2 = {rec.k2}, e = {rec.euler}, genera {rec.g1}, {rec.g2}, minimality {rec.minimality.value}")

# %% [markdown]
# H1 comes from the fundamental group: a Reidemeister-Schreier presentation
# of an index-168 subgroup of T(3,3,7) x T(2,4,7), with the stabilizer
# elements killed.

# %%
print("H1 =", h1(v1, v2, G))

# %% [markdown]
# # Curves with a PSL(2,7) action branched over four points of order 7
#
# Hurwitz moves on a generating vector correspond to moving branch points
# around each other.  Counting orbits sorts the curves into families.

# %%
from prodquot import catalogue
from prodquot.genvec import find_curves, format_vector, hurwitz_orbit

G = catalogue().get("PSL(2,7)")
print("(7,7,7):", len(find_curves(G, (7, 7, 7))), "classes")
four = find_curves(G, (7, 7, 7, 7))
print("(7,7,7,7):", len(four), "classes")

# %% [markdown]
# PSL(2,7) has two conjugacy classes of elements of order 7.  Keep the
# classes whose entries all lie in the class of (1824375).

# %%
cls = {int(x) for x in G.conjugates(G.index("(1824375)"))}
inside = [v for v in four if all(x in cls for x in v)]
for v in inside:
    orbit = hurwitz_orbit(G, v, filtered=False)
    repeated = sum(1 for w in orbit if len(set(w)) < len(w))
    print(format_vector(G, v), "orbit", len(orbit), "repeated entries", repeated)


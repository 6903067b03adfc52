# The abelian normal subgroup with quotient of order 48, and covers shared across sizes.

from mincover import antiprism_structure, prism_structure
from mincover.covers import coincidence_report

# %% Prisms with n = 4m
for m in (1, 2, 3):
    st = prism_structure(4 * m)
    print(f"prism({4 * m}): |Mon| = {st.group_order}, |H| = {st.subgroup_order} = {m}^3, "
          f"quotient {st.quotient_order}, coset orders {st.coset_orders}, (abc)^{3 * m} central: {st.central_ok}")

# %% Antiprisms with n = 3m
for m in (1, 2, 3):
    st = antiprism_structure(3 * m)
    print(f"antiprism({3 * m}): |Mon| = {st.group_order}, |K| = {st.subgroup_order} = {m}^4, "
          f"quotient {st.quotient_order}, ok: {st.ok}")

# %% Different prisms, same cover
for family, n in (("prism", 5), ("prism", 6), ("antiprism", 4), ("antiprism", 5)):
    rep = coincidence_report(family, n)
    orders = {s: r.group_order for s, r in rep.matches.items() if r is not None}
    print(f"{family} sizes {rep.sizes}: orders {orders}, same cover: {rep.ok}")

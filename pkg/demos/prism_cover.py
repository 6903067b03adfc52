# The minimal regular cover of the pentagonal prism, step by step.

from mincover import closed_form, cover_f_vector, euler_genus, monodromy_group, prism
from mincover.covers import minimal_cover_presentation, verify_minimal_cover
from mincover.flags import f_vector
from mincover.monodromy import schlafli_type, string_condition

# %% Flags of the 5-prism
fs = prism(5)
print("flags:", fs.flag_count)
print("vertices, edges, faces:", tuple(f_vector(fs)))

# %% The monodromy group acts on those flags
M = monodromy_group(fs)
print("order of Mon:", M.order)
print("type of the cover:", schlafli_type(M))
print("string C-group:", string_condition(M))

# %% A presentation: [20, 3] plus one extra relator
P = minimal_cover_presentation("prism", 5)
print("relators:", P.relators)
match = verify_minimal_cover(fs, "prism", 5, M=M)
print("presented order:", match.presented_order, "|", match.reason)

# %% The cover as a surface
chi, orientable, genus = euler_genus(M, P)
print("cells of the cover:", tuple(cover_f_vector(M)))
print(f"chi = {chi}, orientable = {orientable}, genus = {genus}")
print("closed form:", closed_form("prism", 5))

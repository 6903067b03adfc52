# Three ways to write down generators of a flag stabilizer, checked on the 8-prism.

from mincover import monodromy_group, prism, prism_family, reduction_checks, verify_generates_stabilizer
from mincover.stabilizers import family_base_flag, lollipop_generators, schreier_generators, spanning_tree

fs = prism(8)
M = monodromy_group(fs)
base = family_base_flag(fs)
print("stabilizer order:", M.order // fs.flag_count)

# %% One word per edge left out of a spanning tree
for strategy in ("bfs", "dfs", "prism_stems"):
    tree = spanning_tree(fs, base, strategy)
    words = schreier_generators(fs, tree)
    v = verify_generates_stabilizer(fs, words, base, M)
    print(f"{strategy:12} {len(words)} words, generated order {v.generated_order}")

# %% One lollipop per face and per vertex
lolli = lollipop_generators(fs, spanning_tree(fs, base))
v = verify_generates_stabilizer(fs, [w for _, w in lolli], base, M)
print("lollipops:", len(lolli), "words, generated order", v.generated_order)

# %% The explicit family and the identities that shrink it
fam = prism_family(8)
for name, word in fam.words.items():
    print(f"  {name:5} {word}")
print("family generates:", verify_generates_stabilizer(fs, fam.words, base, M).ok)
rep = reduction_checks(fs, "prism")
for name, ok in rep.checks.items():
    print(f"  {'ok ' if ok else 'BAD'} {name}")
print("h_8 is trivial:", rep.h_n_trivial)
print("direction split of the rotations:", rep.rotation_steps)

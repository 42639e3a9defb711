"""
String modules over a loop with a square-zero relation
=======================================================

"""

from colocal import enumerate_strings, is_submodule, parse_quiver_spec, string_module

qa = parse_quiver_spec("""
vertices: 1 2
arrow b: 1 -> 2
arrow al: 2 -> 2
relation al al
""")

strings = enumerate_strings(qa)
for w in strings:
    M = string_module(qa, w)
    print(f"{str(w):14s} socle {M.socle_vertices}  top {M.top_vertices}")

# every string module here has a simple socle
print(all(len(string_module(qa, w).socle) == 1 for w in strings))

# submodule pairs, decided from the words alone
pairs = [(str(u), str(w)) for u in strings for w in strings if u != w and is_submodule(qa, u, w)]
print(len(pairs), pairs[:5])

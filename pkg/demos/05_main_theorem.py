"""
The subcategory lattice two ways
================================

"""

from colocal import (brute_force_lattice, parse_quiver_spec, structural_lattice,
                     verify_main_theorem)

quivers = {
    "A2": "vertices: 1 2\narrow a: 1 -> 2\n",
    "sink pair": "vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\n",
    "loop square": "vertices: 1 2\narrow b: 1 -> 2\narrow al: 2 -> 2\nrelation al al\n",
    "two paths": ("vertices: 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 5\n"
                  "arrow c: 3 -> 4\narrow d: 4 -> 5\n"),
}

for name, text in quivers.items():
    qa = parse_quiver_spec(text)
    res = verify_main_theorem(qa)
    factors = " x ".join(f"Y^{{{m},{n}}}" for m, n in res.factors)
    print(f"{name:12s} {res.brute_force_size:5d} = {factors}")

# the same object, built from submodule data and from the box factors
qa = parse_quiver_spec(quivers["loop square"])
B, S = brute_force_lattice(qa), structural_lattice(qa)
print(B.size, S.size, S.top)
print(B.label(B.top))

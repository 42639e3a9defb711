"""
Tau sets, and where the simple-successor case slips through
==========================================================

"""

from colocal import parse_quiver_spec, verify_tau_equivalences

# a 2-cycle whose return path vanishes
qa = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation b a\n")
rep = verify_tau_equivalences(qa)
for t in rep.sets:
    print(f"S={t.simple} S'={t.successor}: tau {sorted(t.tau)}  tau' {sorted(t.tau_prime)}  "
          f"tau'' {sorted(t.tau_double_prime)}")

# the simple module S' itself has socle and top S', so S' lands in tau''
print(rep.violations)

# without a way back to S, the three sets coincide
chain = parse_quiver_spec("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n")
print(verify_tau_equivalences(chain).passed)

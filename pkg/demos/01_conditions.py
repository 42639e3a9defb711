"""
Reading a quiver and checking the colocal conditions
=====================================================

"""

from colocal import (analyze, check_C1, check_C2, check_C3, is_colocal_by_conditions,
                     is_colocal_type_structural, parse_quiver_spec)

# two arrows into a sink, no relations
sink_pair = parse_quiver_spec("""
vertices: 1 2 3
arrow a: 1 -> 3
arrow b: 2 -> 3
""")
print(analyze(sink_pair).to_text())

# the Kronecker quiver is admissible but has two parallel arrows
kronecker = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n")
for check in (check_C1, check_C2):
    rep = check(kronecker)
    print(check.__name__, bool(rep), rep.witnesses[:1])

# C3 only makes sense once C1 holds
print(bool(check_C1(sink_pair)) and bool(check_C3(sink_pair)))

# the Ext-quiver route and the structural route must agree
for qa in (sink_pair, kronecker):
    print(is_colocal_by_conditions(qa), bool(is_colocal_type_structural(qa)))

"""
Betti tables from lcm lattices
==============================

"""

from synorres import (RationalField, betti_from_intervals, build_lcm_lattice,
                      ideal_example62, open_interval)
from synorres.chains import all_homology_ranks

field = RationalField()

# the six-generator ideal whose top interval is a sphere plus a point
spec = ideal_example62()
L = build_lcm_lattice(list(spec.generators), spec.variables)
print(f"lattice of {spec.name}: {L.n} elements")
print("atoms:", ", ".join(L.format_label(a) for a in L.atoms))
print()

table = betti_from_intervals(L, field)
print(table.text())
print()
print("t:", table.t_sequence())
print("a:", table.a_sequence())
print()

# every Betti number is the reduced homology of an open interval; the
# top one comes from (1, abcdef)
inside = open_interval(L, L.bottom, L.top)
ranks = all_homology_ranks(inside, field)
print("open interval below the top:",
      {d: r for d, r in sorted(ranks.items()) if r})
print("so the top contributes to columns 2 and 5,")
print("matching rows 4 and 1 of the table above.")

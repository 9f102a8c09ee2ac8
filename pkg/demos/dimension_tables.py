"""Dimensions of framed diagram and framed graph spaces, orders 0..4.

Builds each graded piece from scratch: enumerate canonical basis elements,
generate four-term relations, take the quotient. Order 5 works the same way
but takes about a minute; pass --max 5 to the CLI for it.
"""

from framedchords import dimension, report
from framedchords.dimensions import freeness_sum

SPACES = ("A", "M", "CoM", "G", "H", "CoH", "PCoH")
N = 4

rows = {s: [dimension(s, n) for n in range(N + 1)] for s in SPACES}
for s in SPACES:
    print(f"{s:>5}: " + " ".join(f"{d:3d}" for d in rows[s]))

r = report("M", 4)
print(f"\nM at order 4: {r.basis_size} diagrams, {r.relations_distinct} distinct relations, "
      f"rank {r.rank}, dimension {r.dimension}")

# M is free over A with basis the white diagrams, so the series factor.
for n in range(N + 1):
    print(f"n={n}: sum_k dim A^k dim CoM^(n-k) = {freeness_sum(rows['A'], rows['CoM'], n)}"
          f"  vs dim M^n = {rows['M'][n]}")

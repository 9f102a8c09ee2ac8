"""Rewriting a mixed diagram as black-times-white products.

Each step applies one four-term relation to move an oriented endpoint past a
disorienting one; the complexity printed on each step line strictly drops.
The result equals the input modulo relations.
"""

from framedchords import LinComb, parse_diagram, parse_graph, reduce_diagram, reduce_graph
from framedchords.dimensions import quotient

d = parse_diagram("1 2 1 2;01")
trace = reduce_diagram(d)
print("input", d.code)
print(trace.to_text())
print("difference vanishes in the quotient:",
      quotient("M", 2).is_zero(LinComb.basis(d) - trace.output))

# three mutually crossing chords, one disorienting, already branch a lot
big = parse_diagram("1 2 3 1 2 3;010")
bt = reduce_diagram(big)
print(f"\ninput {big.code}: {len(bt.steps)} steps, {len(bt.factors)} products, "
      f"sound: {quotient('M', 3).is_zero(LinComb.basis(big) - bt.output)}")

g = parse_graph("3;011;1-2,1-3")
gt = reduce_graph(g)
print("\ninput", g.code)
print(gt.to_text())
print("difference vanishes in the quotient:",
      quotient("H", 3).is_zero(LinComb.basis(g) - gt.output))

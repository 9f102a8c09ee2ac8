"""The signed deletion-contraction rule and why its order matters.

The rule ch(G) = ch(G - e) - (-1)^(f(u)+f(v)) ch(G / e), with the merged
vertex white if either end was white, gives different answers on the path
black - black - white depending on which edge goes first. Two variants are
order independent and vanish on the framed four-term relations.
"""

from framedchords import (BLACK_MERGE, LITERAL, PRODUCT_SIGN, chromatic_on_lincomb, framed_chromatic,
                          framed_chromatic_ordered, parse_graph, relation_set)

path = parse_graph("3;001;1-2,2-3")
print("path", path.code)
print("  black-black edge first:", framed_chromatic_ordered(path, (0, 1)))
print("  black-white edge first:", framed_chromatic_ordered(path, (1, 0)))

for rule in (LITERAL, PRODUCT_SIGN, BLACK_MERGE):
    bad = sum(1 for n in range(2, 5) for v in relation_set("H", n).vectors
              if chromatic_on_lincomb(v, rule))
    k2 = framed_chromatic(parse_graph("2;01;1-2"), rule)
    print(f"{rule.name:>13}: black-white edge -> {k2};  4T vectors (n<=4) not killed: {bad}")

# On black graphs every rule is the classical chromatic polynomial.
print("\nK3:", framed_chromatic(parse_graph("3;000;1-2,1-3,2-3")))

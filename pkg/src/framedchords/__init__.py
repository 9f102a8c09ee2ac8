"""Framed chord diagrams and framed graphs modulo four-term relations.

Exact enumeration, relation generation, quotient dimensions, Hopf and
comodule structure maps, the intersection graph, the framed chromatic
polynomial and the black-by-white reduction.
"""

from .chromatic import (BLACK_MERGE, LITERAL, PRODUCT_SIGN, RULES, BivarPoly, SkeinRule,
                        chromatic_on_lincomb, classical_chromatic_oracle, framed_chromatic,
                        framed_chromatic_ordered, poly_coproduct, poly_eval, poly_mul)
from .diagrams import (EMPTY_DIAGRAM, DiagramFormatError, FramedChordDiagram, canonicalize,
                       enumerate_diagrams, parse_diagram, remove_chords, subdiagram)
from .dimensions import (PUBLISHED_TABLES, DimensionReport, consistency_suite, dim_covariants,
                         dim_primitives_CoH, dim_space, dimension, report)
from .graphs import (EMPTY_GRAPH, FramedGraph, FramedMultigraph, GraphBoundError, GraphFormatError,
                     canonical_graph, contract_edge, delete_edge, disjoint_union, enumerate_graphs,
                     induced_subgraph, parse_graph)
from .hopf import (D_M, Delta, Pr, WeightSystem, antipode_H, convolution_weight, counit,
                   counit_weight, delta_comodule, delta_prime_M, m_A, m_G, m_H, m_M, m_tensor,
                   multiply, unit, weight_from_discoloration, weight_from_graph_map)
from .intersection import I_lincomb, intersection_graph
from .lincomb import LinComb
from .linalg import (Quotient, SparseExactMatrix, image_dim, in_span, multi_prime_rank, quotient_dim,
                     rank_exact, rank_mod_p)
from .reduction import (ReductionTrace, complexity_diagram, complexity_graph, reduce_diagram,
                        reduce_graph, remoteness)
from .relations import RelationSet, fourT_diagram_relations, fourT_graph_relations, relation_set

__version__ = "0.1.0"

"""Property suites behind ``framedchords verify``.

Each suite returns a list of :class:`CheckResult`, one per property, with
the number of instances checked and, on failure, the first witness.
Comparisons that only hold modulo relations are made on quotient normal
forms, leg by leg for tensor terms.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable

from .chromatic import (LITERAL, BivarPoly, _rule, chromatic_on_lincomb, classical_chromatic_oracle,
                        framed_chromatic, framed_chromatic_ordered, poly_coproduct, poly_eval, poly_mul)
from .diagrams import FramedChordDiagram, chord_subsets, enumerate_diagrams
from .dimensions import CheckResult, consistency_suite, quotient
from .graphs import complement_vertices, disjoint_union, enumerate_graphs, induced_subgraph
from .hopf import (D_M, Delta, antipode_H, counit, delta_comodule, delta_prime_M, flatten3,
                   m_tensor, multiply, tensor_map, unit)
from .intersection import I_lincomb, I_tensor, intersection_graph
from .lincomb import LinComb, as_lincomb, key_code, lincomb_sum
from .reduction import ComplexityError, is_black_white_split, reduce_diagram, reduce_graph
from .relations import relation_set

SUITE_NAMES = ("comodule", "hopf-module", "delta-prime", "chromatic-4t",
               "intersection-squares", "antipode", "reduction", "consistency")


def _order(x) -> int:
    return x.order if isinstance(x, FramedChordDiagram) else x.n


def _short(v) -> str:
    if isinstance(v, LinComb):
        text = v.to_text().replace("\t", " ").replace("\n", " ; ")
        return text or "0"
    return str(v)


def _property(name: str, items: Iterable, check: Callable) -> CheckResult:
    """``check(item)`` returns None when the property holds, else a witness."""
    count = 0
    for item in items:
        count += 1
        witness = check(item)
        if witness is not None:
            return CheckResult(name, False, f"after {count} instances: {witness}")
    return CheckResult(name, True, f"{count} instances")


def _basis(space: str, n: int):
    if space in ("A", "M"):
        return enumerate_diagrams(n, space == "M")
    return enumerate_graphs(n, space == "H")


def _upto(space: str, max_n: int):
    for n in range(max_n + 1):
        yield from _basis(space, n)


# -- quotient comparisons ------------------------------------------------

class _NF:
    """Memoised quotient normal forms of single basis elements."""

    def __init__(self):
        self.cache: dict = {}

    def __call__(self, space: str, x) -> LinComb:
        key = (space, x)
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = quotient(space, _order(x)).normal_form(LinComb.basis(x))
        return hit

    def single(self, space: str, v: LinComb) -> LinComb:
        return v.apply(lambda x: self(space, x))

    def pair(self, left: str, right: str, v: LinComb) -> LinComb:
        return v.apply(lambda kk: self(left, kk[0]).tensor(self(right, kk[1])))


def _diff_witness(label, lhs: LinComb, rhs: LinComb):
    if lhs == rhs:
        return None
    return f"{label}: lhs = {_short(lhs)} | rhs = {_short(rhs)}"


# -- comodule ------------------------------------------------------------

def _coaction(space: str, prime: bool):
    if prime:
        return delta_prime_M
    return lambda x: delta_comodule(space, x)


def _comodule_checks(space: str, max_n: int, prime: bool = False) -> list:
    alg = "A" if space == "M" else "G"
    delta = _coaction(space, prime)
    tag = f"{'delta-prime ' if prime else ''}{space}"

    def coassoc(x):
        d = delta(x)
        lhs = flatten3(tensor_map(d, left=lambda a: Delta(alg, a)))
        rhs = flatten3(tensor_map(d, right=delta))
        return _diff_witness(x.code, lhs, rhs)

    def counit_axiom(x):
        d = delta(x)
        lhs = lincomb_sum(LinComb.basis(b, c * counit(alg, a)) for (a, b), c in d.items())
        return _diff_witness(x.code, lhs, LinComb.basis(x))

    return [
        _property(f"{tag} coassociativity n<={max_n}", _upto(space, max_n), coassoc),
        _property(f"{tag} counit n<={max_n}", _upto(space, max_n), counit_axiom),
    ]


def suite_comodule(max_n: int = 4, seed: int = 0) -> list:
    return _comodule_checks("M", max_n) + _comodule_checks("H", max_n)


# -- Hopf module compatibility ---------------------------------------------

def _compat_pairs(space: str, max_n: int, samples: int, sample_max: int, rng: random.Random):
    alg = "A" if space == "M" else "G"
    for i in range(max_n + 1):
        for c in _basis(alg, i):
            for j in range(max_n + 1):
                for d in _basis(space, j):
                    yield c, d
    total = sample_max + min(sample_max, 2)
    for _ in range(samples):
        i = rng.randint(0, sample_max)
        j = rng.randint(0, min(sample_max, total - i))
        yield rng.choice(_basis(alg, i)), rng.choice(_basis(space, j))


def _compat_check(space: str, delta, nf: _NF):
    alg = "A" if space == "M" else "G"

    def check(pair):
        c, d = pair
        lhs = delta(multiply(space, c, d))
        rhs = m_tensor(space, c, delta(d))
        if space == "M":
            # products depend on the cut points only up to relations
            lhs, rhs = nf.pair(alg, space, lhs), nf.pair(alg, space, rhs)
        return _diff_witness(f"c={c.code} d={d.code}", lhs, rhs)
    return check


def suite_hopf_module(max_n: int = 2, seed: int = 0, samples: int = 500, sample_max: int = 3) -> list:
    """delta(c d) = m_tensor(c, delta(d)): exhaustive for orders <= max_n, then
    ``samples`` random pairs with orders <= sample_max (total <= sample_max + 2)."""
    nf = _NF()
    out = []
    for space in ("M", "H"):
        rng = random.Random(seed)
        pairs = _compat_pairs(space, max_n, samples, sample_max, rng)
        out.append(_property(f"compatibility {space}", pairs,
                             _compat_check(space, _coaction(space, False), nf)))
    return out


# -- second coaction and discoloration ---------------------------------------

def suite_delta_prime(max_n: int = 4, seed: int = 0, samples: int = 500, sample_max: int = 3) -> list:
    out = _comodule_checks("M", max_n, prime=True)
    nf = _NF()
    rng = random.Random(seed)
    pairs = _compat_pairs("M", 2, samples, sample_max, rng)
    out.append(_property("delta-prime compatibility M", pairs,
                         _compat_check("M", delta_prime_M, nf)))

    def discoloured(item):
        n, v = item
        img = D_M(v)
        if quotient("A", n).is_zero(img):
            return None
        return f"relation {_short(v)} maps to {_short(img)}"
    rel_items = ((n, v) for n in range(2, max_n + 1) for v in relation_set("M", n).vectors)
    out.append(_property(f"D_M maps framed relations into unframed span n<={max_n}",
                         rel_items, discoloured))
    return out


# -- chromatic -----------------------------------------------------------

def _poly_pair_dict(a: BivarPoly, b: BivarPoly, into: dict, coeff=1):
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            into[(m1, m2)] = into.get((m1, m2), 0) + c1 * c2 * coeff


def suite_chromatic(max_n: int = 5, seed: int = 0, orders: int = 100, oracle_max: int = 7,
                    pairs: int = 200, rule=LITERAL) -> list:
    rule = _rule(rule)
    tag = "" if rule is LITERAL else f" [{rule.name}]"
    out = []

    def vanishes(item):
        n, v = item
        p = chromatic_on_lincomb(v, rule)
        return None if not p else f"relation {_short(v)} gives {p}"
    rel_items = ((n, v) for n in range(2, max_n + 1) for v in relation_set("H", n).vectors)
    out.append(_property(f"ch vanishes on graph 4T n<={max_n}{tag}", rel_items, vanishes))

    rng = random.Random(seed)

    def order_free(g):
        p = framed_chromatic(g, rule)
        for _ in range(orders):
            pr = list(range(len(g.edges)))
            rng.shuffle(pr)
            q = framed_chromatic_ordered(g, pr, rule)
            if q != p:
                return f"{g.code} order {pr}: {q} != {p}"
        return None
    out.append(_property(f"ch edge-order independence n<={max_n}{tag}",
                         _upto("H", max_n), order_free))

    def classical(g):
        p = framed_chromatic(g, rule)
        for k in range(g.n + 2):
            if poly_eval(p, x=k) != classical_chromatic_oracle(g, k):
                return f"{g.code} k={k}: {poly_eval(p, x=k)} != {classical_chromatic_oracle(g, k)}"
        return None
    out.append(_property(f"ch classical restriction n<={oracle_max}{tag}",
                         _upto("G", oracle_max), classical))

    def degree(g):
        p = framed_chromatic(g, rule)
        if g.n and p.total_degree() != g.n:
            return f"{g.code}: degree {p.total_degree()}"
        if p.coefficient(g.n - g.n_white, g.n_white) != 1:
            return f"{g.code}: leading coefficient in {p}"
        return None
    out.append(_property(f"ch degree and leading term n<={max_n}{tag}", _upto("H", max_n), degree))

    def coproduct(g):
        lhs: dict = {}
        for sub in chord_subsets(range(g.n)):
            _poly_pair_dict(framed_chromatic(induced_subgraph(g, sub), rule),
                            framed_chromatic(induced_subgraph(g, complement_vertices(g, sub)), rule), lhs)
        lhs = {k: c for k, c in lhs.items() if c}
        rhs = poly_coproduct(framed_chromatic(g, rule))
        return None if lhs == rhs else f"{g.code}: (ch x ch) Delta differs from Delta ch"
    out.append(_property(f"ch coproduct compatibility n<={max_n}{tag}", _upto("H", max_n), coproduct))

    prng = random.Random(seed + 1)

    def sample_pairs():
        for _ in range(pairs):
            i = prng.randint(0, max_n)
            j = prng.randint(0, max_n - i)
            yield prng.choice(_basis("H", i)), prng.choice(_basis("H", j))

    def multiplicative(pair):
        g1, g2 = pair
        lhs = framed_chromatic(disjoint_union(g1, g2), rule)
        rhs = poly_mul(framed_chromatic(g1, rule), framed_chromatic(g2, rule))
        return None if lhs == rhs else f"{g1.code} + {g2.code}: {lhs} != {rhs}"
    out.append(_property(f"ch multiplicative on {pairs} random unions{tag}", sample_pairs(), multiplicative))
    return out


# -- intersection graphs ---------------------------------------------------

def suite_intersection(max_n: int = 3, seed: int = 0, rel_max: int = 4) -> list:
    out = []

    def product_square(pair):
        c, d = pair
        lhs = I_lincomb(multiply("M", c, d))
        rhs = multiply("H", intersection_graph(c), intersection_graph(d))
        return _diff_witness(f"c={c.code} d={d.code}", lhs, rhs)
    products = ((c, d) for i in range(max_n + 1) for c in _basis("A", i)
                for j in range(max_n + 1 - i) for d in _basis("M", j))
    out.append(_property(f"I o m_M = m_H o (I x I) n<={max_n}", products, product_square))

    def coaction_square(d):
        return _diff_witness(d.code, I_tensor(delta_comodule("M", d)),
                             delta_comodule("H", intersection_graph(d)))
    out.append(_property(f"(I x I) o delta_M = delta_H o I n<={max_n}", _upto("M", max_n), coaction_square))

    def coproduct_square(d):
        return _diff_witness(d.code, I_tensor(Delta("M", d)), Delta("H", intersection_graph(d)))
    out.append(_property(f"(I x I) o Delta_M = Delta_H o I n<={max_n}", _upto("M", max_n), coproduct_square))

    def colours(d):
        g = intersection_graph(d)
        if g.is_black != d.is_black or g.is_white != d.is_white:
            return f"{d.code} -> {g.code}"
        return None
    out.append(_property(f"I preserves black and white n<={max_n}", _upto("M", max_n), colours))

    def into_span(item):
        n, v = item
        img = I_lincomb(v)
        return None if quotient("H", n).is_zero(img) else f"relation {_short(v)} maps to {_short(img)}"
    rel_items = ((n, v) for n in range(2, rel_max + 1) for v in relation_set("M", n).vectors)
    out.append(_property(f"I maps framed relations into graph span n<={rel_max}", rel_items, into_span))
    return out


# -- antipode --------------------------------------------------------------

def suite_antipode(max_n: int = 4, seed: int = 0) -> list:
    def identity(g):
        lhs = lincomb_sum(multiply("H", antipode_H(a), b) * c for (a, b), c in Delta("H", g).items())
        rhs = unit("H", counit("H", as_lincomb(g)))
        return _diff_witness(g.code, lhs, rhs)
    return [_property(f"m o (S x id) o Delta = unit o counit n<={max_n}", _upto("H", max_n), identity)]


# -- reduction -------------------------------------------------------------

def _reduction_check(space: str, reducer, traces: list | None):
    def check(x):
        try:
            trace = reducer(x)
        except ComplexityError as exc:
            return f"{x.code}: {exc}"
        if traces is not None:
            traces.append((x, trace))
        if any(not s.after < s.before for s in trace.steps):
            return f"{x.code}: complexity did not drop"
        bad = [k for k in trace.factors if not is_black_white_split(k)]
        if bad:
            return f"{x.code}: factor {key_code(bad[0])} is not black|white"
        diff = LinComb.basis(x) - trace.output
        if not quotient(space, _order(x)).is_zero(diff):
            return f"{x.code}: input - output = {_short(diff)} not in relation span"
        return None
    return check


def suite_reduction(max_n: int = 4, seed: int = 0, traces: list | None = None) -> list:
    return [
        _property(f"diagram reduction sound n<={max_n}", _upto("M", max_n),
                  _reduction_check("M", reduce_diagram, traces)),
        _property(f"graph reduction sound n<={max_n}", _upto("H", max_n),
                  _reduction_check("H", reduce_graph, traces)),
    ]


def suite_consistency(max_n: int = 5, seed: int = 0) -> list:
    return consistency_suite(max_n)


SUITES = {
    "comodule": (suite_comodule, 4),
    "hopf-module": (suite_hopf_module, 2),
    "delta-prime": (suite_delta_prime, 4),
    "chromatic-4t": (suite_chromatic, 5),
    "intersection-squares": (suite_intersection, 3),
    "antipode": (suite_antipode, 4),
    "reduction": (suite_reduction, 4),
    "consistency": (suite_consistency, 5),
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0, **kw) -> list:
    try:
        fn, default = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}") from None
    return fn(default if max_n is None else max_n, seed, **kw)

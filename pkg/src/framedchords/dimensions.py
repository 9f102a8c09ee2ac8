"""Dimensions of graded pieces of A, M, Co_M, G, H, Co_H and PCo_H."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb

from .graphs import induced_subgraph, complement_vertices
from .diagrams import chord_subsets
from .linalg import (DEFAULT_PRIMES, Echelon, Quotient, SparseExactMatrix, image_dim,
                     multi_prime_rank, rank_exact)
from .lincomb import LinComb
from .relations import chain_equality_count, relation_set

MAX_ORDER = 5
EXACT_UP_TO = 4

# values printed in the two published tables, n = 1..5
PUBLISHED_TABLES = {
    "M": (2, 5, 12, 30, 73),
    "CoM": (1, 2, 5, 12, 29),
    "H": (2, 5, 11, 26, 58),
    "CoH": (1, 2, 4, 9, 19),
    "PCoH": (1, 1, 2, 4, 8),
}
PUBLISHED_M5_BASIS = 3112
PUBLISHED_M5_RELATIONS = 20017


class OrderBoundError(ValueError):
    pass


@dataclass
class DimensionReport:
    space: str
    order: int
    basis_size: int
    relations_generated: int
    relations_distinct: int
    rank: int
    dimension: int
    primes: tuple = ()
    exact: bool = True
    extra: dict = field(default_factory=dict)

    def record(self) -> str:
        d = asdict(self)
        d["primes"] = ",".join(map(str, self.primes)) or "-"
        extra = d.pop("extra")
        parts = [f"{k}={v}" for k, v in d.items()]
        parts += [f"{k}={v}" for k, v in sorted(extra.items())]
        return " ".join(parts)


def _check(n, bound):
    if n < 0 or n > bound:
        raise OrderBoundError(f"order {n} outside 0..{bound}")


@lru_cache(maxsize=None)
def quotient(space: str, n: int) -> Quotient:
    """Exact quotient of the order-n basis of ``space`` by its 4T relations."""
    rs = relation_set(space, n)
    return Quotient(rs.basis, rs.vectors)


@lru_cache(maxsize=None)
def dim_space(space: str, n: int, exact: bool | None = None,
              primes: tuple = DEFAULT_PRIMES, bound: int = MAX_ORDER) -> DimensionReport:
    """dim of the order-n piece of A, M, G or H.

    Exact elimination by default up to order 4; above that, three primes
    must agree (``exact=True`` forces the rational path).
    """
    _check(n, bound)
    if exact is None:
        exact = n <= EXACT_UP_TO
    rs = relation_set(space, n)
    m = SparseExactMatrix.from_vectors(rs.vectors, rs.basis)
    if exact:
        rank, used = rank_exact(m), ()
    else:
        rank, used = multi_prime_rank(m, primes)
    extra = {}
    if space in ("A", "M"):
        extra = {f"type_{k}": v for k, v in rs.type_counts.items()}
        extra["chain_equalities"] = chain_equality_count(rs)
    return DimensionReport(space, n, len(rs.basis), rs.generated, len(rs.vectors), rank,
                           len(rs.basis) - rank, tuple(used), exact, extra)


def white_basis(space: str, n: int) -> list:
    return [k for k in relation_set(space, n).basis if k.is_white]


@lru_cache(maxsize=None)
def dim_covariants(space: str, n: int, exact: bool | None = None,
                   primes: tuple = DEFAULT_PRIMES, bound: int = MAX_ORDER) -> DimensionReport:
    """dim Co^n: the image of the white elements in the quotient."""
    if space not in ("M", "H"):
        raise ValueError("covariants are defined for M and H")
    _check(n, bound)
    if exact is None:
        exact = n <= EXACT_UP_TO
    rs = relation_set(space, n)
    whites = [LinComb.basis(k) for k in rs.basis if k.is_white]
    dim = image_dim(whites, rs, exact=exact, primes=primes)
    return DimensionReport("Co" + space, n, len(whites), rs.generated, len(rs.vectors),
                           len(whites) - dim, dim, () if exact else tuple(primes), exact)


def _reduced_coproduct_rows(g, n):
    """Reduced coproduct of white graph g, in quotient normal forms of each leg."""
    out: dict = {}
    for sub in chord_subsets(range(n)):
        if 0 < len(sub) < n:
            left = quotient("H", len(sub)).normal_form(LinComb.basis(induced_subgraph(g, sub)))
            right = quotient("H", n - len(sub)).normal_form(
                LinComb.basis(induced_subgraph(g, complement_vertices(g, sub))))
            for kl, cl in left.items():
                for kr, cr in right.items():
                    out[(kl, kr)] = out.get((kl, kr), 0) + cl * cr
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def dim_primitives_CoH(n: int, bound: int = MAX_ORDER) -> DimensionReport:
    """dim of the primitive part of Co_H in degree n.

    Equals rank(white graphs in H^n) - rank(their reduced coproducts in
    the quotient coordinates of H^k (x) H^(n-k)); the kernel of the second
    map contains the kernel of the first because the coproduct is well
    defined on H.
    """
    _check(n, bound)
    if n == 0:
        return DimensionReport("PCoH", 0, 1, 0, 0, 1, 0)
    whites = white_basis("H", n)
    qn = quotient("H", n)
    ech_q = Echelon(len(qn.basis))
    for g in whites:
        ech_q.add(qn.echelon.normal_form(qn._row(LinComb.basis(g))))
    rows = [_reduced_coproduct_rows(g, n) for g in whites]
    cols = {k: i for i, k in enumerate(sorted({k for r in rows for k in r},
                                                 key=lambda kk: (kk[0].n, kk[0], kk[1])))}
    ech_rd = Echelon(len(cols))
    for r in rows:
        ech_rd.add({cols[k]: c for k, c in r.items()})
    dim = ech_q.rank - ech_rd.rank
    return DimensionReport("PCoH", n, len(whites), 0, 0, ech_rd.rank, dim,
                           extra={"dim_CoH": ech_q.rank})


def dimension(space: str, n: int, **kw) -> int:
    """Dispatch on space names A, M, G, H, CoM, CoH, PCoH."""
    if n == 0:
        return 0 if space == "PCoH" else 1
    if space in ("A", "M", "G", "H"):
        return dim_space(space, n, **kw).dimension
    if space in ("CoM", "CoH"):
        return dim_covariants(space[2:], n, **kw).dimension
    if space == "PCoH":
        return dim_primitives_CoH(n).dimension
    raise ValueError(f"unknown space {space!r}")


def report(space: str, n: int, **kw) -> DimensionReport:
    if space in ("A", "M", "G", "H"):
        return dim_space(space, n, **kw)
    if space in ("CoM", "CoH"):
        if n == 0:
            return DimensionReport(space, 0, 1, 0, 0, 0, 1)
        return dim_covariants(space[2:], n, **kw)
    if space == "PCoH":
        return dim_primitives_CoH(n)
    raise ValueError(f"unknown space {space!r}")


def free_commutative_dims(generator_dims, max_n: int) -> list:
    """Graded dims of the polynomial algebra on generators of the given
    degrees (``generator_dims[k-1]`` generators in degree k)."""
    series = [1] + [0] * max_n
    for k, p in enumerate(generator_dims, start=1):
        if k > max_n:
            break
        # multiply by (1 - t^k)^(-p) = sum_j C(p + j - 1, j) t^(k j)
        new = [0] * (max_n + 1)
        for i, a in enumerate(series):
            if not a:
                continue
            j = 0
            while i + k * j <= max_n:
                new[i + k * j] += a * comb(p + j - 1, j)
                j += 1
        series = new
    return series


def freeness_sum(alg_dims, co_dims, n: int) -> int:
    """sum_k dim Alg^k * dim Co^(n-k), both lists indexed from degree 0."""
    return sum(alg_dims[k] * co_dims[n - k] for k in range(n + 1))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def consistency_suite(max_n: int = MAX_ORDER) -> list:
    """Freeness identities for M over A and H over G, and the
    polynomial-algebra identity between Co_H and its primitives."""
    results = []
    rng = range(max_n + 1)
    A = [dimension("A", n) for n in rng]
    M = [dimension("M", n) for n in rng]
    CoM = [dimension("CoM", n) for n in rng]
    G = [dimension("G", n) for n in rng]
    H = [dimension("H", n) for n in rng]
    CoH = [dimension("CoH", n) for n in rng]
    PCoH = [dimension("PCoH", n) for n in rng]
    for n in rng:
        s = freeness_sum(A, CoM, n)
        results.append(CheckResult(f"freeness M n={n}", s == M[n], f"sum={s} dim M={M[n]}"))
    for n in rng:
        s = freeness_sum(G, CoH, n)
        results.append(CheckResult(f"freeness H n={n}", s == H[n], f"sum={s} dim H={H[n]}"))
    poly = free_commutative_dims(PCoH[1:], max_n)
    for n in rng:
        results.append(CheckResult(f"polynomial CoH n={n}", poly[n] == CoH[n],
                                   f"generated={poly[n]} dim CoH={CoH[n]}"))
    return results

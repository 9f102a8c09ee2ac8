"""Exact sparse linear algebra over the rationals and over prime fields.

Rows are dicts ``column -> coefficient``. Column indices come from the
position of a basis key in a fixed basis order.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .lincomb import LinComb, key_code

# three largest primes below 2**30
DEFAULT_PRIMES = (1073741789, 1073741783, 1073741741)


class BadPrimeError(ValueError):
    pass


class RankDisagreement(RuntimeError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_primes(count: int, rng: random.Random, bits: int = 30) -> tuple:
    out: list = []
    while len(out) < count:
        c = rng.randrange(2 ** (bits - 1), 2 ** bits) | 1
        if is_prime(c) and c not in out:
            out.append(c)
    return tuple(out)


@dataclass
class SparseExactMatrix:
    """Rows of ``{col: Fraction}``; ``col_keys[j]`` names column j."""

    rows: list
    ncols: int
    col_keys: tuple = field(default=())

    def __post_init__(self):
        clean = []
        for row in self.rows:
            r = {}
            for c, x in sorted(row.items()):
                if not 0 <= c < self.ncols:
                    raise IndexError(f"column {c} outside 0..{self.ncols - 1}")
                x = Fraction(x)
                if x:
                    r[c] = x
            clean.append(r)
        self.rows = clean

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_vectors(cls, vectors: Sequence[LinComb], basis: Sequence) -> "SparseExactMatrix":
        index = {k: i for i, k in enumerate(basis)}
        rows = []
        for v in vectors:
            try:
                rows.append({index[k]: c for k, c in v.items()})
            except KeyError as exc:
                raise KeyError(f"vector term {key_code(exc.args[0])} not in basis") from None
        return cls(rows, len(basis), tuple(basis))

    @classmethod
    def identity(cls, n: int) -> "SparseExactMatrix":
        return cls([{i: 1} for i in range(n)], n)

    def to_triplets(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        for i, row in enumerate(self.rows, start=1):
            for j, x in row.items():
                lines.append(f"{i} {j + 1} {x.numerator}/{x.denominator}")
        lines.append("0 0 0")
        return "\n".join(lines) + "\n"

    def index_text(self) -> str:
        return "".join(f"{j + 1}\t{key_code(k)}\n" for j, k in enumerate(self.col_keys))

    @classmethod
    def from_triplets(cls, text: str, col_keys: tuple = ()) -> "SparseExactMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nrows, ncols = (int(x) for x in lines[0].split())
        rows: list = [dict() for _ in range(nrows)]
        for ln in lines[1:]:
            i, j, x = ln.split()
            if (i, j) == ("0", "0"):
                break
            rows[int(i) - 1][int(j) - 1] = Fraction(x)
        return cls(rows, ncols, tuple(col_keys))


def parse_index(text: str, parse_key) -> tuple:
    keys = []
    for ln in text.splitlines():
        if ln.strip():
            _, code = ln.split("\t", 1)
            keys.append(parse_key(code))
    return tuple(keys)


# -- echelon forms --------------------------------------------------------

class Echelon:
    """Incremental row echelon form over the rationals.

    Pivot rows are stored as primitive integer rows with distinct leading
    columns. :meth:`normal_form` reduces fraction-free with a running
    denominator, so it is still an exact linear projection whose kernel is
    the row span.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: dict) -> tuple:
        r = _integer_row({c: Fraction(x) for c, x in row.items() if x}, keep_scale=True)
        r, den = r
        heap = [c for c in r if c in self.pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            f = r.get(c)
            if not f:
                continue
            pr = self.pivots[c]
            a = pr[c]
            g = gcd(a, f)
            a, f = a // g, f // g
            if a != 1:
                r = {j: a * x for j, x in r.items()}
                den *= a
            for j, x in pr.items():
                y = r.get(j, 0) - f * x
                if y:
                    if j not in r and j in self.pivots:
                        heapq.heappush(heap, j)
                    r[j] = y
                else:
                    r.pop(j, None)
            cont = den
            for x in r.values():
                cont = gcd(cont, x)
                if cont == 1:
                    break
            if cont > 1:
                r = {j: x // cont for j, x in r.items()}
                den //= cont
        return r, den

    def normal_form(self, row: dict) -> dict:
        r, den = self._reduce(row)
        return {c: Fraction(x, den) for c, x in r.items()}

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        r, _ = self._reduce(row)
        if not r:
            return False
        lead = min(r)
        if r[lead] < 0:
            r = {j: -x for j, x in r.items()}
        g = 0
        for x in r.values():
            g = gcd(g, x)
        self.pivots[lead] = {j: x // g for j, x in sorted(r.items())}
        return True


class EchelonModP:
    """Incremental echelon form over GF(p)."""

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def convert(self, row: dict) -> dict:
        p = self.p
        out = {}
        for c, x in row.items():
            x = Fraction(x)
            if x.denominator % p == 0:
                raise BadPrimeError(f"prime {p} divides denominator {x.denominator}")
            v = x.numerator * pow(x.denominator, -1, p) % p
            if v:
                out[c] = v
        return out

    def add(self, row: dict, converted: bool = False) -> bool:
        p = self.p
        r = dict(row) if converted else self.convert(row)
        piv = self.pivots
        while r:
            c = min(r)
            pr = piv.get(c)
            if pr is None:
                inv = pow(r[c], -1, p)
                piv[c] = {j: x * inv % p for j, x in r.items()}
                return True
            f = r[c]
            for j, x in pr.items():
                y = (r.get(j, 0) - f * x) % p
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        return False


def _integer_row(row: dict, keep_scale: bool = False):
    """Clear denominators and content. With ``keep_scale`` also return ``den``
    such that ``row == result / den``."""
    den = 1
    for x in row.values():
        den = den * x.denominator // gcd(den, x.denominator)
    r = {c: int(x * den) for c, x in row.items() if x}
    g = 0
    for x in r.values():
        g = gcd(g, x)
    if g > 1:
        r = {c: x // g for c, x in r.items()}
    if not keep_scale:
        return r
    # row = r * g / den
    g = g or 1
    q = gcd(g, den)
    g, den = g // q, den // q
    if g != 1:
        r = {c: x * g for c, x in r.items()}
    return r, den


def rank_exact(m: SparseExactMatrix) -> int:
    """Rank over Q by fraction-free integer elimination with content removal."""
    pivots: dict = {}
    for row in m.rows:
        r = _integer_row(row)
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                pivots[c] = r
                break
            a, b = pr[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * x for j, x in r.items()}
            for j, x in pr.items():
                y = new.get(j, 0) - b * x
                if y:
                    new[j] = y
                else:
                    new.pop(j, None)
            cont = 0
            for x in new.values():
                cont = gcd(cont, x)
                if cont == 1:
                    break
            r = {j: x // cont for j, x in new.items()} if cont > 1 else new
    return len(pivots)


def rank_mod_p(m: SparseExactMatrix, p: int) -> int:
    ech = EchelonModP(m.ncols, p)
    for row in m.rows:
        ech.add(row)
    return ech.rank


def multi_prime_rank(m: SparseExactMatrix, primes: Sequence[int] = DEFAULT_PRIMES,
                     rng: random.Random | None = None, max_rounds: int = 5) -> tuple:
    """Rank via several primes; returns ``(rank, primes_used)``.

    If the primes disagree a fresh set is drawn (seeded by ``rng``) and the
    largest rank seen is kept, since a rank mod p never exceeds the rank
    over Q.
    """
    rng = rng or random.Random(0)
    primes = tuple(primes)
    used: list = []
    best = -1
    for _ in range(max_rounds):
        ranks = []
        for p in primes:
            try:
                ranks.append(rank_mod_p(m, p))
            except BadPrimeError:
                ranks.append(-1)
        used.extend(primes)
        best = max(best, *ranks)
        if len(set(ranks)) == 1 and ranks[0] >= 0:
            return ranks[0], tuple(used)
        primes = random_primes(len(primes), rng)
    raise RankDisagreement(f"no prime agreement after {max_rounds} rounds; best rank {best}")


# -- quotient helpers -------------------------------------------------------

def _as_matrix(relations, basis=None) -> SparseExactMatrix:
    if isinstance(relations, SparseExactMatrix):
        return relations
    return SparseExactMatrix.from_vectors(relations.vectors, relations.basis)


def quotient_dim(basis_size: int, relations, exact: bool = True,
                 primes: Sequence[int] = DEFAULT_PRIMES) -> int:
    m = _as_matrix(relations)
    if m.ncols != basis_size:
        raise ValueError("relations are not indexed by a basis of this size")
    rank = rank_exact(m) if exact else multi_prime_rank(m, primes)[0]
    return basis_size - rank


def in_span(v: LinComb, relations) -> bool:
    """Exact rational span membership."""
    if not v:
        return True
    return Quotient(relations.basis, relations.vectors).is_zero(v)


def image_dim(vectors: Sequence[LinComb], relations, exact: bool = True,
              primes: Sequence[int] = DEFAULT_PRIMES) -> int:
    """rank(relations + vectors) - rank(relations)."""
    basis = relations.basis
    m_rel = SparseExactMatrix.from_vectors(relations.vectors, basis)
    m_vec = SparseExactMatrix.from_vectors(vectors, basis)
    if exact:
        ech = Echelon(len(basis))
        for row in m_rel.rows:
            ech.add(row)
        return sum(ech.add(row) for row in m_vec.rows)
    counts = set()
    for p in primes:
        ech = EchelonModP(len(basis), p)
        for row in m_rel.rows:
            ech.add(row)
        counts.add(sum(ech.add(row) for row in m_vec.rows))
    if len(counts) != 1:
        raise RankDisagreement(f"image dimension differs across primes: {sorted(counts)}")
    return counts.pop()


class Quotient:
    """Span of a basis modulo relation vectors, with exact normal forms.

    ``normal_form`` sends a LinComb to its reduced representative, which is
    supported on non-pivot basis elements; two combinations are equal in
    the quotient iff their normal forms coincide.
    """

    def __init__(self, basis: Sequence, vectors: Sequence[LinComb]):
        self.basis = tuple(basis)
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.echelon = Echelon(len(self.basis))
        for v in vectors:
            self.echelon.add(self._row(v))

    def _row(self, v: LinComb) -> dict:
        try:
            return {self.index[k]: c for k, c in v.items()}
        except KeyError as exc:
            raise KeyError(f"{key_code(exc.args[0])} is not in this quotient's basis") from None

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def dim(self) -> int:
        return len(self.basis) - self.echelon.rank

    def normal_form(self, v: LinComb) -> LinComb:
        nf = self.echelon.normal_form(self._row(v))
        return LinComb({self.basis[j]: x for j, x in nf.items()})

    def is_zero(self, v: LinComb) -> bool:
        return not self.echelon.normal_form(self._row(v))

    def free_keys(self) -> tuple:
        """Basis elements whose classes form a basis of the quotient."""
        return tuple(k for i, k in enumerate(self.basis) if i not in self.echelon.pivots)

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from framedchords.lincomb import LinComb
from framedchords.linalg import (DEFAULT_PRIMES, BadPrimeError, Echelon, Quotient, SparseExactMatrix,
                                 image_dim, in_span, is_prime, multi_prime_rank, quotient_dim,
                                 random_primes, rank_exact, rank_mod_p)
from framedchords.relations import relation_set

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = []
    for _ in range(r):
        row = draw(st.dictionaries(st.integers(0, c - 1), small, max_size=c))
        rows.append(row)
    return SparseExactMatrix(rows, c)


def dense(m):
    return sympy.Matrix([[m.rows[i].get(j, 0) for j in range(m.ncols)] for i in range(m.nrows)])


def test_primes():
    assert all(is_prime(p) for p in DEFAULT_PRIMES)
    assert all(p < 2 ** 30 for p in DEFAULT_PRIMES)
    assert not is_prime(2 ** 30 - 1)
    ps = random_primes(3, random.Random(1))
    assert len(set(ps)) == 3 and all(is_prime(p) and p.bit_length() == 30 for p in ps)


def test_identity_rank():
    m = SparseExactMatrix.identity(3)
    assert rank_mod_p(m, DEFAULT_PRIMES[0]) == 3
    assert rank_exact(m) == 3


def test_doubled_row():
    m = SparseExactMatrix([{0: 1, 2: 3}, {0: 2, 2: 6}], 3)
    assert rank_mod_p(m, 7) == 1
    assert rank_exact(m) == 1


def test_zero_matrix():
    assert rank_exact(SparseExactMatrix([{}, {}], 4)) == 0


def test_hilbert_matrix():
    rows = [{j: Fraction(1, i + j + 1) for j in range(4)} for i in range(4)]
    assert rank_exact(SparseExactMatrix(rows, 4)) == 4


def test_bad_prime():
    m = SparseExactMatrix([{0: Fraction(1, 7)}], 1)
    with pytest.raises(BadPrimeError):
        rank_mod_p(m, 7)


def test_no_explicit_zeros_and_sorted_columns():
    m = SparseExactMatrix([{3: 1, 0: 0, 1: 2}], 4)
    assert list(m.rows[0]) == [1, 3]


@given(matrices())
def test_rank_matches_sympy(m):
    r = dense(m).rank() if m.nrows else 0
    assert rank_exact(m) == r
    assert rank_mod_p(m, DEFAULT_PRIMES[0]) == r
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    assert ech.rank == r


@given(matrices(), st.dictionaries(st.integers(0, 6), small, max_size=4))
def test_monotone_and_span(m, extra):
    extra = {c: x for c, x in extra.items() if c < m.ncols}
    base = m.ncols - rank_exact(m)
    more = SparseExactMatrix(m.rows + [extra], m.ncols)
    assert m.ncols - rank_exact(more) <= base
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    member = not ech.normal_form(extra)
    assert member == (rank_exact(more) == rank_exact(m))


@given(matrices(), st.dictionaries(st.integers(0, 6), small, max_size=4),
       st.dictionaries(st.integers(0, 6), small, max_size=4))
def test_normal_form_is_linear(m, a, b):
    a = {c: x for c, x in a.items() if c < m.ncols}
    b = {c: x for c, x in b.items() if c < m.ncols}
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    s = dict(a)
    for c, x in b.items():
        s[c] = s.get(c, 0) + 3 * x
    na, nb, ns = ech.normal_form(a), ech.normal_form(b), ech.normal_form(s)
    combined = dict(na)
    for c, x in nb.items():
        combined[c] = combined.get(c, 0) + 3 * x
    assert {c: x for c, x in combined.items() if x} == ns


def test_order_four_framed_relation_rank():
    rs = relation_set("M", 4)
    m = rs.matrix()
    assert rank_mod_p(m, DEFAULT_PRIMES[1]) == len(rs.basis) - 30


def test_order_three_exact_rank():
    rs = relation_set("M", 3)
    assert rank_exact(rs.matrix()) == len(rs.basis) - 12


def test_quotient_dim_examples():
    rs = relation_set("H", 4)
    assert quotient_dim(len(rs.basis), rs) == 26
    empty = relation_set("M", 1)
    assert quotient_dim(len(empty.basis), empty) == len(empty.basis)


def test_in_span_examples():
    rs = relation_set("M", 3)
    assert all(in_span(v, rs) for v in rs.vectors[:20])
    assert in_span(LinComb(), rs)
    one = relation_set("M", 1)
    assert not in_span(LinComb.basis(one.basis[0]), one)


def test_image_dim_examples():
    rs = relation_set("M", 4)
    whites = [LinComb.basis(k) for k in rs.basis if k.is_white]
    assert image_dim(whites, rs) == 12
    assert image_dim(rs.vectors[:10], rs) == 0


def test_multi_prime_agrees_with_exact():
    rs = relation_set("H", 4)
    m = rs.matrix()
    rank, used = multi_prime_rank(m)
    assert rank == rank_exact(m)
    assert used == DEFAULT_PRIMES


def test_multi_prime_recovers_from_bad_prime():
    m = SparseExactMatrix([{0: 3, 1: 1}, {0: 1, 1: 2}], 2)  # det 5
    rank, used = multi_prime_rank(m, primes=(5, 7, 11), rng=random.Random(0))
    assert rank == 2
    assert len(used) > 3


def test_triplet_round_trip(tmp_path):
    rs = relation_set("M", 2)
    path, index = rs.export(tmp_path / "m2.txt")
    text = path.read_text()
    assert text.splitlines()[0] == f"{len(rs.vectors)} {len(rs.basis)}"
    assert text.rstrip().endswith("0 0 0")
    m = SparseExactMatrix.from_triplets(text)
    assert m.rows == rs.matrix().rows
    lines = index.read_text().splitlines()
    assert lines[0] == f"1\t{rs.basis[0].code}"


def test_quotient_normal_form():
    rs = relation_set("M", 2)
    q = Quotient(rs.basis, rs.vectors)
    assert q.dim == 5
    for v in rs.vectors:
        assert q.is_zero(v)
    free = q.free_keys()
    assert len(free) == 5
    for k in free:
        assert q.normal_form(LinComb.basis(k)) == LinComb.basis(k)

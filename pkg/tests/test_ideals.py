"""Ideal arithmetic, annihilators, quotients, and the packed caches."""

import random

import pytest

from cyclicideals import (Ideal, annihilator, cyclic, ideal_from_generators,
                          ideal_intersect, ideal_product, ideal_sum, is_simple,
                          maximal_ideal, min_generators, module_times_ideal,
                          parse_element, quotient_algebra, unit_ideal,
                          zero_ideal)
from cyclicideals import gf
from cyclicideals.ideals import packed_cyclic_table
from conftest import CHAIN5, SQUARE_ZERO_N2, build


def span_of(alg, *texts):
    """Subspace spanned by parsed elements, as an Ideal (checked closed)."""
    vecs = [parse_element(alg, t).coeffs for t in texts]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, vecs))


# ---------------------------------------------------------------------------
# construction and closure


def test_cyclic_pair_n3(pair_n3):
    x, y = pair_n3.gens
    assert cyclic(pair_n3, x) == span_of(pair_n3, "x", "x^2")
    assert cyclic(pair_n3, x + y) == span_of(pair_n3, "x+y", "x^2", "y^2")


def test_ideal_from_generators_unit_short_circuit(pair_n3):
    one = pair_n3.unit()
    assert ideal_from_generators(pair_n3, [one + pair_n3.gens[0]]) == unit_ideal(pair_n3)
    assert ideal_from_generators(pair_n3, []) == zero_ideal(pair_n3)


def test_non_ideal_subspace_rejected(pair_n3):
    # span{x} is not closed: x*x = x^2 falls outside
    with pytest.raises(ValueError, match="not closed"):
        span_of(pair_n3, "x")
    with pytest.raises(ValueError, match="unit coordinate"):
        span_of(pair_n3, "1 + x")


def test_lattice_operations(pair_n3):
    x, y = pair_n3.gens
    rx, ry = cyclic(pair_n3, x), cyclic(pair_n3, y)
    m = maximal_ideal(pair_n3)
    assert ideal_sum(rx, ry) == m
    assert ideal_product(rx, ry) == zero_ideal(pair_n3)  # x*y is a relation
    assert ideal_intersect(rx, ry) == zero_ideal(pair_n3)
    socle = span_of(pair_n3, "x^2", "y^2")
    assert ideal_intersect(rx, socle) == span_of(pair_n3, "x^2")
    assert ideal_product(m, m) == socle
    assert ideal_product(socle, m) == zero_ideal(pair_n3)
    assert rx <= m and not m <= rx


def test_module_times_ideal(pair_n3):
    m = maximal_ideal(pair_n3)
    assert module_times_ideal(pair_n3, m) == span_of(pair_n3, "x^2", "y^2")
    assert module_times_ideal(pair_n3, zero_ideal(pair_n3)).is_zero()


# ---------------------------------------------------------------------------
# annihilators


def test_annihilator_diagonal_exact(pair_n3):
    x, y = pair_n3.gens
    assert annihilator(pair_n3, x + y) == span_of(pair_n3, "x^2", "y^2")


def test_annihilator_of_generator(pair_n3):
    x, y = pair_n3.gens
    assert annihilator(pair_n3, x) == span_of(pair_n3, "y", "x^2", "y^2")


def test_annihilator_of_ideal(pair_n3):
    # Ann(M) is the socle
    assert annihilator(pair_n3, maximal_ideal(pair_n3)) == span_of(pair_n3, "x^2", "y^2")
    assert annihilator(pair_n3, zero_ideal(pair_n3)) == unit_ideal(pair_n3)


def test_annihilator_is_maximal_exhaustive():
    """Brute-force cross-check: Ann(z) contains exactly the killers of z."""
    alg = build("field 2 / vars x y / rel x^3 / rel y^2 / rel x*y")
    all_vectors = [alg.element(gf.unpack_vec(m, alg.dim))
                   for m in range(1 << alg.dim)]
    rng = random.Random(3)
    for _ in range(20):
        z = all_vectors[rng.randrange(len(all_vectors))]
        ann = annihilator(alg, z)
        for v in all_vectors:
            assert ann.contains(v) == (v * z).is_zero()


# ---------------------------------------------------------------------------
# generator counts and simplicity


def test_min_generators(pair_n3):
    assert min_generators(pair_n3, maximal_ideal(pair_n3)) == 2
    assert min_generators(pair_n3, cyclic(pair_n3, pair_n3.gens[0])) == 1
    assert min_generators(pair_n3, zero_ideal(pair_n3)) == 0
    chain = build(CHAIN5)
    assert min_generators(chain, maximal_ideal(chain)) == 1


def test_is_simple(pair_n3):
    assert is_simple(pair_n3, span_of(pair_n3, "x^2"))
    assert is_simple(pair_n3, span_of(pair_n3, "x^2 + y^2"))
    assert not is_simple(pair_n3, cyclic(pair_n3, pair_n3.gens[0]))
    assert not is_simple(pair_n3, zero_ideal(pair_n3))
    two_axes = build(SQUARE_ZERO_N2)
    assert is_simple(two_axes, cyclic(two_axes, two_axes.gens[0]))


# ---------------------------------------------------------------------------
# quotient algebras


def test_quotient_dims_and_pir(pair_n3):
    x, y = pair_n3.gens
    q = quotient_algebra(pair_n3, annihilator(pair_n3, x))
    assert q.target.dim == 2  # classes of 1 and x
    assert min_generators(q.target, maximal_ideal(q.target)) == 1

    q2 = quotient_algebra(pair_n3, annihilator(pair_n3, x + y))
    assert q2.target.dim == 3
    assert min_generators(q2.target, maximal_ideal(q2.target)) == 2


def test_quotient_map_is_a_ring_map(pair_n3):
    q = quotient_algebra(pair_n3, span_of(pair_n3, "x^2", "y^2"))
    rng = random.Random(5)
    for _ in range(40):
        a = pair_n3.element([rng.randrange(2) for _ in range(pair_n3.dim)])
        b = pair_n3.element([rng.randrange(2) for _ in range(pair_n3.dim)])
        assert q.project(a * b) == q.project(a) * q.project(b)
        assert q.project(a + b) == q.project(a) + q.project(b)


def test_quotient_section_roundtrip(pair_n3):
    q = quotient_algebra(pair_n3, cyclic(pair_n3, pair_n3.gens[1]))
    for k in range(q.target.dim):
        e = q.target.basis_element(k)
        assert q.project(q.lift(e)) == e


def test_quotient_rejects_improper(pair_n3):
    with pytest.raises(ValueError, match="not proper"):
        quotient_algebra(pair_n3, unit_ideal(pair_n3))


# ---------------------------------------------------------------------------
# packed cyclic table


def test_packed_cyclic_table_matches_cyclic(pair_n3):
    table = packed_cyclic_table(pair_n3)
    assert len(table) == 1 << (pair_n3.dim - 1)
    for vec, rows in table.items():
        if vec == 0:
            assert rows == ()
            continue
        z = pair_n3.element(gf.unpack_vec(vec, pair_n3.dim))
        expected = tuple(gf.pack_vec(r) for r in cyclic(pair_n3, z).rows)
        assert rows == expected


def test_packed_cyclic_table_guard():
    wide = build("field 2 / vars x / truncate 23")  # dim M = 22
    with pytest.raises(ValueError, match="infeasible"):
        packed_cyclic_table(wide)

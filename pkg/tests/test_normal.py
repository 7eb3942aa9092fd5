"""Tests for normal bases, their structure tables, and cross-product sums."""

import pytest
from hypothesis import given, settings, strategies as st

from charfield2 import field as gf, normal
from charfield2.errors import DomainError, NotNormalError

F4 = gf.FieldCtx(0b111)
F16 = gf.FieldCtx(0b10011)
F64 = gf.FieldCtx(0b1000011)  # 1+x+x^6
NB2 = normal.build_normal_basis(F4, 0b10)        # alpha = x
NB4 = normal.build_normal_basis(F16, 0b1000)     # alpha = x^3
NB6 = normal.build_normal_basis(F64, 0b111000)   # alpha = x^3+x^4+x^5


def test_rotl_cycles_bits():
    assert normal.rotl(0b0001, 1, 4) == 0b0010
    assert normal.rotl(0b1000, 1, 4) == 0b0001
    assert normal.rotl(0b1001, 2, 4) == 0b0110
    assert normal.rotl(0b1001, 0, 4) == 0b1001
    assert normal.rotl(0b1001, 4, 4) == 0b1001
    assert normal.rotl(0b1001, -1, 4) == normal.rotl(0b1001, 3, 4)


def test_conjugates_are_frobenius_orbit():
    orbit = normal.conjugates(F16, 0b1000)
    assert len(orbit) == 4
    assert orbit[0] == 0b1000
    for i in range(3):
        assert orbit[i + 1] == gf.square(F16, orbit[i])
    # one more squaring wraps around
    assert gf.square(F16, orbit[-1]) == orbit[0]


def test_is_normal_element_known_cases():
    assert not normal.is_normal_element(F16, 0)
    assert not normal.is_normal_element(F16, 1)       # orbit {1} cannot span
    assert not normal.is_normal_element(F16, 0b10)    # x is not normal here
    assert normal.is_normal_element(F16, 0b1000)      # x^3 is
    assert normal.is_normal_element(F4, 0b10)
    count = sum(normal.is_normal_element(F16, a) for a in range(16))
    assert count == 8  # brute census of F_16


def test_build_rejects_non_normal():
    with pytest.raises(NotNormalError):
        normal.build_normal_basis(F16, 0b10)


def test_coordinate_round_trip():
    for nb in (NB2, NB4, NB6):
        for p in range(min(1 << nb.n, 256)):
            assert nb.to_poly(nb.to_normal(p)) == p
        assert nb.to_normal(nb.alpha) == 1
        assert nb.one() == nb.to_normal(1)
        assert nb.to_poly(nb.one()) == 1
    with pytest.raises(DomainError):
        NB4.to_poly(16)


def test_one_is_all_ones_vector():
    """The identity decomposes as the sum of all conjugates in a normal basis."""
    for nb in (NB2, NB4, NB6):
        assert nb.one() == (1 << nb.n) - 1


def test_table_rows_reconstruct_products():
    for nb in (NB2, NB4, NB6):
        for i in range(nb.n):
            lhs = gf.poly_mul_mod(nb.field, nb.alpha, nb.conj[i])
            assert nb.to_poly(nb.table[i]) == lhs


def test_weight_and_density_accounting():
    assert NB2.weight == 3 and NB2.density == 6
    assert NB4.weight == 7 and NB4.density == 28
    assert NB6.weight == 11 and NB6.density == 66
    for nb in (NB2, NB4, NB6):
        assert nb.weight == sum(bin(r).count("1") for r in nb.table)
        assert nb.density == nb.n * nb.weight


def test_frobenius_shift_matches_field_frobenius():
    for nb in (NB2, NB4, NB6):
        for p in range(min(1 << nb.n, 128)):
            v = nb.to_normal(p)
            assert nb.to_poly(normal.frobenius_shift(nb.n, v)) == gf.square(nb.field, p)
            assert normal.frobenius_shift(nb.n, v, nb.n) == v


def test_alpha_mul_matches_field_product():
    for nb in (NB2, NB4, NB6):
        for p in range(min(1 << nb.n, 128)):
            v = nb.to_normal(p)
            expected = gf.poly_mul_mod(nb.field, nb.alpha, p)
            assert nb.to_poly(normal.alpha_mul(nb, v)) == expected


@given(st.integers(min_value=0, max_value=63), st.integers(min_value=0, max_value=63))
def test_normal_mul_matches_field_product(u, v):
    pu, pv = NB6.to_poly(u), NB6.to_poly(v)
    expected = gf.poly_mul_mod(F64, pu, pv)
    assert NB6.to_poly(normal.normal_mul(NB6, u, v)) == expected


def test_mul_rows_shift_structure():
    """Entry (i, j) of table k equals entry ((j-i) mod n, (k-i) mod n) of the base table."""
    for nb in (NB2, NB4, NB6):
        n = nb.n
        for k in range(n):
            rows = nb.mul_rows[k]
            for i in range(n):
                for j in range(n):
                    expect = (nb.table[(j - i) % n] >> ((k - i) % n)) & 1
                    assert (rows[i] >> j) & 1 == expect


def test_cross_product_sum_small_values():
    f2 = gf.FieldCtx(0b11)
    nb1 = normal.build_normal_basis(f2, 1)
    assert normal.cross_product_sum(nb1) == 1
    assert normal.cross_product_sum(NB2) == 5
    assert normal.cross_product_sum(NB4) == 25
    assert normal.cross_product_sum(NB6) == 101


def test_cross_product_sum_accepts_raw_table():
    assert normal.cross_product_sum(NB4.table, NB4.n) == 25


def test_per_ell_cross_sums_total():
    total = sum(normal.per_ell_cross_sum(NB6.table, 6, ell) for ell in range(6))
    assert total == 101


def test_search_normal_elements_ascending_and_limited():
    found = normal.search_normal_elements(F4)
    assert found == sorted(found)
    assert 0b10 in found
    first = normal.search_normal_elements(F16, limit=3)
    assert len(first) == 3
    assert first == normal.search_normal_elements(F16)[:3]
    assert all(normal.is_normal_element(F16, a) for a in first)


def test_search_primitive_filter():
    prim = normal.search_normal_elements(F16, require_primitive=True)
    assert prim
    assert all(gf.is_primitive(F16, a) for a in prim)
    assert all(normal.is_normal_element(F16, a) for a in prim)
    assert set(prim) <= set(normal.search_normal_elements(F16))


def test_search_workers_agree_with_serial():
    f = gf.FieldCtx(0b10000000011011)  # degree 13 keeps the parallel path honest
    serial = normal.search_normal_elements(f, limit=8)
    parallel = normal.search_normal_elements(f, limit=8, workers=2)
    assert serial == parallel

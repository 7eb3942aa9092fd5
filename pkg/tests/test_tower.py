"""Tests for the two-step tower predicates and their constructive witnesses."""

import json

import pytest

from charfield2 import extbasis as xb, field as gf, normal, tower
from charfield2.errors import DomainError, UnsupportedDegreeError
from charfield2.fixtures import get_fixture

NB2 = get_fixture(2).basis()
NB4 = get_fixture(4).basis()
NB6 = get_fixture(6).basis()


def test_v3_known_values():
    assert tower.v3(1) == 0
    assert tower.v3(3) == 1
    assert tower.v3(21) == 1
    assert tower.v3(273) == 1   # 3 * 7 * 13
    assert tower.v3(9) == 2
    assert tower.v3(54) == 3
    with pytest.raises(DomainError):
        tower.v3(0)
    with pytest.raises(DomainError):
        tower.v3(-3)


def test_biquadratic_parity_rule():
    assert tower.biquadratic_possible(1)
    assert not tower.biquadratic_possible(2)
    assert tower.biquadratic_possible(3)
    assert not tower.biquadratic_possible(8)
    with pytest.raises(DomainError):
        tower.biquadratic_possible(0)


def _oracle_trace(big, a):
    return gf.trace(big, a)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_biquadratic_matches_big_field_trace(n):
    """Second quadratic step exists iff the embedded generator has trace 1 in F_2^(2n)."""
    from charfield2 import bitpoly, tables
    ctx = gf.FieldCtx(bitpoly.min_irreducible(n))
    alpha = normal.search_normal_elements(ctx, limit=1)[0]
    nb = normal.build_normal_basis(ctx, alpha)
    emb = tables.build_embedding(xb.build_as2(nb))
    b_img = emb.gen_images["b"]
    assert tower.biquadratic_possible(n) == (gf.trace(emb.big, b_img) == 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_kummer_over_as2_matches_sextic_builder(n):
    from charfield2 import bitpoly
    ctx = gf.FieldCtx(bitpoly.min_irreducible(n))
    alpha = normal.search_normal_elements(ctx, limit=1)[0]
    nb = normal.build_normal_basis(ctx, alpha)
    verdict = tower.kummer_over_as2_possible(xb.build_as2(nb))
    try:
        xb.build_ka6(nb)
        built = True
    except Exception:
        built = False
    assert verdict == built


def test_kind_guards():
    with pytest.raises(DomainError):
        tower.kummer_over_as2_possible(xb.build_kummer3(NB2))
    with pytest.raises(DomainError):
        tower.as2_over_k3_possible(xb.build_as2(NB2))


def test_as2_over_k3_is_never_possible():
    for nb in (NB2, NB6):
        k3 = xb.build_kummer3(nb)
        assert tower.as2_over_k3_possible(k3) is False
        # constructive reason: the generator's trace is 0, so a preimage exists
        beta = xb.generator_element(k3, "b")
        assert tower.ext_trace(k3, beta) == xb.zero(k3)
        gamma = tower.artin_schreier_preimage(k3, beta)
        assert gamma is not None
        assert tower.ext_trace(k3, gamma) in (xb.zero(k3), xb.identity(k3))
        recovered = xb.ExtElem(tuple(u ^ v for u, v in
                                     zip(xb.square(k3, gamma).blocks, gamma.blocks)))
        assert recovered == beta


def test_bicubic_known_values_and_refusals():
    assert tower.bicubic_possible(2)          # v3(21) = 1
    assert tower.bicubic_possible(4)          # v3(273) = 1
    assert tower.bicubic_possible(2, NB2)
    with pytest.raises(UnsupportedDegreeError):
        tower.bicubic_possible(3)             # 3 does not divide 7
    with pytest.raises(UnsupportedDegreeError):
        tower.bicubic_possible(1)
    with pytest.raises(DomainError):
        tower.bicubic_possible(4, NB2)        # degree mismatch
    nb22 = get_fixture(22).basis()            # non-primitive generator: refused
    with pytest.raises(DomainError, match="primitive"):
        tower.bicubic_possible(22, nb22)


def test_bicubic_valuation_property_small_even_degrees():
    for n in range(2, 21, 2):
        q = ((1 << (3 * n)) - 1) // ((1 << n) - 1)
        assert tower.bicubic_possible(n) == (tower.v3(q) == 1)
        assert tower.bicubic_possible(n)  # holds throughout this range


def test_ext_trace_values():
    for ctx in (xb.build_as2(NB2), xb.build_kummer3(NB2), xb.build_asw4(NB2)):
        assert tower.ext_trace(ctx, xb.zero(ctx)) == xb.zero(ctx)
        # m is even here, so the identity sums to zero over its orbit
        assert tower.ext_trace(ctx, xb.identity(ctx)) == xb.zero(ctx)


def test_ext_trace_and_preimage_leave_tally_alone():
    ctx = xb.build_kummer3(NB2)
    ctx.counter.reset()
    beta = xb.generator_element(ctx, "b")
    tower.ext_trace(ctx, beta)
    tower.artin_schreier_preimage(ctx, beta)
    assert ctx.counter.as_tuple() == (0, 0, 0)


def test_preimage_none_when_trace_one():
    ctx = xb.build_as2(get_fixture(1).basis())  # m = 2
    b = xb.quad_generator(ctx)
    assert tower.ext_trace(ctx, b) == xb.identity(ctx)
    assert tower.artin_schreier_preimage(ctx, b) is None


def test_tower_report_fields_and_json():
    rep = tower.build_tower_report(NB2)
    assert rep.base_n == 2
    assert rep.as2_over_as2 is False          # n even
    assert rep.k3_over_as2 is True            # the sextic tower exists at n = 2
    assert rep.as2_over_k3 is False
    assert rep.k3_over_k3 is True             # v3(21) = 1
    assert set(rep.witnesses) == {"as2_over_as2", "k3_over_as2",
                                  "as2_over_k3", "k3_over_k3"}
    data = json.loads(rep.to_json())
    assert data["base_n"] == 2
    assert data["k3_over_k3"] is True
    assert "v3(21) = 1" in data["witnesses"]["k3_over_k3"]


def test_tower_report_without_cubic_step():
    rep = tower.build_tower_report(NB4)       # generator is a cube: no cubic step
    assert rep.k3_over_k3 is None
    assert "no cubic step" in rep.witnesses["k3_over_k3"]
    rep1 = tower.build_tower_report(get_fixture(1).basis())
    assert rep1.as2_over_as2 is True          # n = 1 is odd
    assert rep1.k3_over_k3 is None            # 3 does not divide 2^1 - 1


def test_tower_report_witness_verifies():
    rep = tower.build_tower_report(NB6)
    k3 = xb.build_kummer3(NB6)
    hexpart = rep.witnesses["as2_over_k3"].split(": ")[-1]
    gamma = xb.ext_parse(k3, hexpart)
    beta = xb.generator_element(k3, "b")
    lhs = xb.ExtElem(tuple(u ^ v for u, v in
                           zip(xb.square(k3, gamma).blocks, gamma.blocks)))
    assert lhs == beta

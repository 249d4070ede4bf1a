"""Central elements, the characteristic identity, and spectral characters."""

from __future__ import annotations

import random

import pytest

from redouble.braidings import flip, standard_hecke
from redouble.doubles import make_double
from redouble.heckerep import partitions
from redouble.invariants import (
    SpectralCharacter,
    characteristic_residual,
    elementary_symmetric,
    power_sum,
    spectral_char_trl,
    trace_action_operator,
    verify_cayley_hamilton,
    verify_character_consistency,
    verify_spectrum,
    verify_spectrum_operator,
)
from redouble.ncengine import Gen, NCElement, re_presentation
from redouble.scalars import ONE, Scalar


def q_power(k):
    return Scalar.power(k, "q")


def laurent(coeffs):
    return Scalar.laurent(coeffs, "q")


def test_power_sum_degree_one_values():
    b1 = standard_hecke(1)
    assert power_sum(b1, "m", 1) == \
        NCElement.word((Gen("m", 1, 1),), q_power(-1))
    b2 = standard_hecke(2)
    expected = NCElement.word((Gen("m", 1, 1),), q_power(-1)) + \
        NCElement.word((Gen("m", 2, 2),), q_power(-3))
    assert power_sum(b2, "m", 1) == expected


def test_elementary_one_is_the_weighted_trace():
    for n in (1, 2, 3):
        b = standard_hecke(n)
        assert elementary_symmetric(b, "m", 1) == power_sum(b, "m", 1)


def test_elementary_above_dimension_vanishes():
    b = standard_hecke(2)
    assert elementary_symmetric(b, "m", 3).is_zero()


def test_power_sums_are_central():
    b = standard_hecke(2)
    pres = re_presentation(b, "m")
    for k in (1, 2):
        p = power_sum(b, "m", k)
        for g in pres.generators:
            ge = NCElement.generator(g)
            assert pres.reduces_to_zero(p * ge - ge * p)


def test_elementary_two_is_central():
    b = standard_hecke(2)
    pres = re_presentation(b, "m")
    e2 = elementary_symmetric(b, "m", 2)
    for g in pres.generators:
        ge = NCElement.generator(g)
        assert pres.reduces_to_zero(e2 * ge - ge * e2)


def test_characteristic_identity_is_exact_at_dimension_one():
    # q^-1 m times m cancels m*m before any ideal reduction.
    b = standard_hecke(1)
    assert characteristic_residual(b, "m").is_zero()


def test_cayley_hamilton_exact():
    report = verify_cayley_hamilton(standard_hecke(2), mode="EXACT")
    assert report.passed
    assert len(report.checks) == 1


def test_cayley_hamilton_sampled():
    rng = random.Random(20240811)
    report = verify_cayley_hamilton(standard_hecke(3), mode="SAMPLED",
                                    rng=rng, samples=3)
    assert report.passed
    assert len(report.checks) == 3


def test_cayley_hamilton_needs_rng_in_sampled_mode():
    with pytest.raises(ValueError):
        verify_cayley_hamilton(standard_hecke(2), mode="SAMPLED")


def test_trace_character_closed_forms():
    b = standard_hecke(2)
    assert spectral_char_trl((1,), b) == laurent({-1: 1, -5: 1})
    assert spectral_char_trl((2,), b) == laurent({-1: 1, -7: 1})
    assert spectral_char_trl((1, 1), b) == laurent({-3: 1, -5: 1})


def test_trace_character_rejects_too_many_parts():
    with pytest.raises(ValueError):
        spectral_char_trl((1, 1, 1), standard_hecke(2))
    with pytest.raises(ValueError):
        SpectralCharacter((1, 1, 1), standard_hecke(2))


def test_trace_character_classical_limit_is_the_dimension():
    for n in (2, 3):
        b = standard_hecke(n)
        for shape in ((), (1,), (2, 1)):
            assert spectral_char_trl(shape, b).evaluate(1) == n


def test_eigenvalue_character_values():
    b = standard_hecke(2)
    char = SpectralCharacter((1,), b)
    assert char.mu == [q_power(-4), ONE]
    assert char.mu_hat == [laurent({-1: 1, -3: 1}), ONE - ONE]
    empty = SpectralCharacter((), b)
    assert empty.mu == [q_power(-2), ONE]
    assert spectral_char_trl((), b) == b.trace_form().dimension_value()


def test_eigenvalue_shift_link():
    b = standard_hecke(3)
    q = b.q
    v = q - q.inverse()
    char = SpectralCharacter((2, 1), b)
    for m, mh in zip(char.mu, char.mu_hat):
        assert m == ONE - v * mh


def test_elementary_values_match_factorized_expansion():
    # Coefficients of prod_i (x - mu_i) against the combination formula.
    for n in (2, 3):
        b = standard_hecke(n)
        q = b.q
        for size in (1, 2, 3):
            for shape in partitions(size, n):
                char = SpectralCharacter(shape, b)
                poly = [ONE]
                for m in char.mu:
                    lower = [c * (-m) for c in poly]
                    poly = [ONE - ONE] + poly
                    for i, c in enumerate(lower):
                        poly[i] = poly[i] + c
                for k in range(1, n + 1):
                    assert poly[n - k] == (-ONE) ** k * q ** k * char.elementary(k)


def test_character_consistency_reports_pass():
    for n in (2, 3):
        report = verify_character_consistency(standard_hecke(n), max_boxes=4)
        assert report.passed
        assert len(report.checks) == 3 * sum(
            len(partitions(k, n)) for k in range(1, 5))


def test_interpolation_weights_need_a_variable_parameter():
    char = SpectralCharacter((1,), flip(2))
    with pytest.raises(ValueError):
        char.weights()


def test_spectrum_operator_route_full_grid():
    for n in (1, 2, 3):
        b = standard_hecke(n)
        for size in (1, 2, 3):
            for shape in partitions(size, n):
                report = verify_spectrum_operator(shape, b)
                assert report.passed, (n, shape)


def test_action_route_matches_operator_route():
    b = standard_hecke(2)
    d = make_double(b, "left")
    trl = power_sum(b, "l", 1)
    from redouble.doubles import action_operator
    for k in (1, 2):
        assert action_operator(d, trl, k) == trace_action_operator(b, k)


def test_spectrum_action_route_trace():
    b = standard_hecke(2)
    d = make_double(b, "left")
    for size in (1, 2, 3):
        for shape in partitions(size, 2):
            report = verify_spectrum("TRL", shape, b, double=d)
            assert report.passed, shape
            assert report.config["chi"] == spectral_char_trl(shape, b).text()


def test_spectrum_action_route_elementary_two():
    b = standard_hecke(2)
    d = make_double(b, "left")
    for size in (2, 3):
        for shape in partitions(size, 2):
            report = verify_spectrum("E2", shape, b, double=d)
            assert report.passed, shape


def test_spectrum_action_route_power_sums():
    b = standard_hecke(2)
    d = make_double(b, "left")
    assert verify_spectrum("PK", (1,), b, k=2, double=d).passed
    for shape in partitions(2, 2):
        assert verify_spectrum("PK", shape, b, k=2, double=d).passed


def test_spectrum_rejects_unknown_element():
    b = standard_hecke(2)
    with pytest.raises(ValueError):
        verify_spectrum("DET", (1,), b)
    with pytest.raises(ValueError):
        verify_spectrum("PK", (1,), b)

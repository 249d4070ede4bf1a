"""Permutation rules, normal ordering, counit actions, matrix copies."""

from __future__ import annotations

import random

import pytest

from redouble.braidings import TensorOperator, flip, standard_hecke
from redouble.doubles import (
    DoubleError,
    QuantumDouble,
    action_operator,
    make_double,
    matrix_copy,
    monomial_matrix,
)
from redouble.heckerep import jucys_murphy_inverse
from redouble.ncengine import Gen, MatrixOverAlgebra, NCElement, matrix_generators
from redouble.scalars import ONE, ZERO, Scalar, nu

ALL_KINDS = ("left", "left_shifted", "adjoint", "adjoint_shifted",
             "derivative", "vector")


def q_scalar():
    return Scalar.var("q")


def test_rank_one_rule_is_a_simple_scaling():
    b = standard_hecke(1)
    d = make_double(b, "left")
    ga = Gen("l", 1, 1)
    gb = Gen("m", 1, 1)
    img = d.rule.table[(ga, gb)]
    q = q_scalar()
    assert img == NCElement.word((gb, ga), q ** -2)


def test_invariant_field_action_on_generators():
    # Matrix form of the generator action: (X1 . R) acting gives R^-1 . M1.
    b = standard_hecke(2)
    d = make_double(b, "left")
    l1 = MatrixOverAlgebra.generator_matrix("l", 2, 2, 1)
    m1 = MatrixOverAlgebra.generator_matrix("m", 2, 2, 1)
    acted = d.act_matrix(l1.rmul_op(b.op), m1)
    assert acted == m1.lmul_op(b.inv)


def test_shifted_invariant_field_action_on_generators():
    b = standard_hecke(2)
    d = make_double(b, "left_shifted")
    f1 = MatrixOverAlgebra.generator_matrix("l", 2, 2, 1)
    m1 = MatrixOverAlgebra.generator_matrix("m", 2, 2, 1)
    acted = d.act_matrix(f1.rmul_op(b.op), m1)
    assert acted == m1


def test_shifted_adjoint_action_on_generators():
    b = standard_hecke(2)
    d = make_double(b, "adjoint_shifted")
    f1 = MatrixOverAlgebra.generator_matrix("l", 2, 2, 1)
    m1 = MatrixOverAlgebra.generator_matrix("m", 2, 2, 1)
    acted = d.act_matrix(f1.rmul_op(b.op), m1)
    assert acted == m1 - m1.lmul_op(b.inv).rmul_op(b.op)


def test_vector_action_on_generators():
    b = standard_hecke(2)
    d = make_double(b, "vector")
    l1 = MatrixOverAlgebra.generator_matrix("l", 2, 2, 1)
    x1 = MatrixOverAlgebra.generator_vector("x", 2, 2, 1)
    acted = d.act_matrix(l1.rmul_op(b.op), x1)
    assert acted == x1.lmul_op(b.inv)


def test_derivative_action_on_conjugated_copy():
    # One derivative applied to the slot-2 copy peels off R^-1.
    b = standard_hecke(2)
    d = make_double(b, "derivative")
    d1 = MatrixOverAlgebra.generator_matrix("d", 2, 2, 1)
    m2 = matrix_copy(b, "m", 2, "OVER")
    acted = d.act_matrix(d1, m2)
    assert acted == MatrixOverAlgebra.from_operator(b.inv)


def test_action_on_unit_is_the_counit():
    b = standard_hecke(2)
    one = NCElement.constant(ONE)
    for kind in ALL_KINDS:
        d = make_double(b, kind)
        for g in matrix_generators(d.a_tag, 2):
            a = NCElement.generator(g)
            expect = NCElement.constant(d.eps_a[g])
            assert d.act(a, one) == expect, kind


def test_normal_order_keeps_mixed_degree_for_homogeneous_rules():
    b = standard_hecke(2)
    d = make_double(b, "left")
    word = NCElement.word((Gen("l", 1, 2), Gen("m", 2, 1), Gen("m", 1, 1)))
    ordered = d.normal_order(word)
    for w in ordered.terms:
        assert sum(1 for g in w if g.tag == "l") == 1
        assert sum(1 for g in w if g.tag == "m") == 2
        bw, aw = d.split_word(w)
        assert len(bw) == 2 and len(aw) == 1
    pure = NCElement.word((Gen("m", 1, 2), Gen("m", 2, 2)))
    assert d.normal_order(pure) == pure


def test_representation_property_randomized():
    b = standard_hecke(2)
    rng = random.Random(19)
    for kind in ALL_KINDS:
        d = make_double(b, kind)
        a_gens = matrix_generators(d.a_tag, 2)
        b_gens = sorted(d.b_pres.generators)
        for _ in range(4):
            a1 = NCElement.generator(rng.choice(a_gens))
            a2 = NCElement.generator(rng.choice(a_gens))
            bw = tuple(rng.choice(b_gens) for _ in range(rng.randint(1, 2)))
            bb = NCElement.word(bw)
            lhs = d.act(a1 * a2, bb)
            rhs = d.act(a1, d.act(a2, bb))
            diff = d.b_pres.normal_form(lhs - rhs)
            assert diff.is_zero(), kind


def test_rule_preserves_both_ideals():
    b = standard_hecke(2)
    for kind in ALL_KINDS:
        d = make_double(b, kind)
        for rel in d.a_pres.relations:
            for g in sorted(d.b_pres.generators):
                mixed = rel * NCElement.generator(g)
                assert d.binormal_form(mixed).is_zero(), kind
        for rel in d.b_pres.relations:
            for g in matrix_generators(d.a_tag, 2):
                mixed = NCElement.generator(g) * rel
                assert d.binormal_form(mixed).is_zero(), kind


def test_rule_preserves_vector_quotients():
    b = standard_hecke(2)
    for quotient in ("symmetric", "skew"):
        d = make_double(b, "vector", b_quotient=quotient)
        for rel in d.b_pres.relations:
            for g in matrix_generators("l", 2):
                mixed = NCElement.generator(g) * rel
                assert d.binormal_form(mixed).is_zero(), quotient


def test_unit_shift_translates_between_left_kinds():
    # Substituting X = I - nu * F into the homogeneous rule lands in the
    # shifted double's ideal, entry by entry.
    b = standard_hecke(2)
    d = make_double(b, "left_shifted")
    ident = MatrixOverAlgebra.identity(2, 2)
    f1 = MatrixOverAlgebra.generator_matrix(d.a_tag, 2, 2, 1)
    m1 = MatrixOverAlgebra.generator_matrix(d.b_tag, 2, 2, 1)
    x1 = ident - f1.scale(nu())
    expr = x1.lmul_op(b.op).rmul_op(b.op) * m1 - \
        (m1 * x1.lmul_op(b.op)).rmul_op(b.inv)
    for v in expr.entries.values():
        assert d.binormal_form(v).is_zero()


def test_product_of_coordinates_and_derivatives_satisfies_shifted_rule():
    # F := M.D entrywise obeys the shifted invariant-field rule inside the
    # derivative double.
    b = standard_hecke(2)
    d = make_double(b, "derivative")
    m1 = MatrixOverAlgebra.generator_matrix("m", 2, 2, 1)
    d1 = MatrixOverAlgebra.generator_matrix("d", 2, 2, 1)
    f1 = m1 * d1
    expr = f1.lmul_op(b.op).rmul_op(b.op) * m1 - \
        (m1 * f1.lmul_op(b.op)).rmul_op(b.inv) - m1.lmul_op(b.op)
    for v in expr.entries.values():
        assert d.binormal_form(v).is_zero()


def test_under_copy_acts_as_inverse_jucys_murphy():
    b = standard_hecke(2)
    d = make_double(b, "left")
    # Degree 1: slot-2 under copy on two slots.
    l2u = matrix_copy(b, "l", 2, "UNDER")
    m1 = MatrixOverAlgebra.generator_matrix("m", 2, 2, 1)
    j2inv = jucys_murphy_inverse(b, 2)[1]
    assert d.act_matrix(l2u, m1) == m1.lmul_op(j2inv)
    # Degree 2: slot-3 under copy against the two-factor monomial.
    l3u = matrix_copy(b, "l", 3, "UNDER")
    mon = monomial_matrix(b, "m", 2, arity=3)
    j3inv = jucys_murphy_inverse(b, 3)[2]
    assert d.act_matrix(l3u, mon) == mon.lmul_op(j3inv)


def test_under_copy_acts_on_tensor_columns_too():
    b = standard_hecke(2)
    d = make_double(b, "vector")
    l2u = matrix_copy(b, "l", 2, "UNDER")
    x1 = MatrixOverAlgebra.generator_vector("x", 2, 2, 1)
    j2inv = jucys_murphy_inverse(b, 2)[1]
    assert d.act_matrix(l2u, x1) == x1.lmul_op(j2inv)
    l3u = matrix_copy(b, "l", 3, "UNDER")
    col = MatrixOverAlgebra.generator_vector("x", 2, 3, 1) * \
        MatrixOverAlgebra.generator_vector("x", 2, 2, 1)
    j3inv = jucys_murphy_inverse(b, 3)[2]
    assert d.act_matrix(l3u, col) == col.lmul_op(j3inv)


def test_action_operator_of_weighted_trace():
    from redouble.braidings import rtrace_form
    b = standard_hecke(2)
    d = make_double(b, "left")
    form = rtrace_form(b)
    l = MatrixOverAlgebra.generator_matrix("l", 2, 1, 1)
    trl = l.trace_all(form.weights)
    for k in (1, 2):
        op = action_operator(d, trl, k)
        expected = jucys_murphy_inverse(b, k + 1, k + 1)[k].rtrace(
            k + 1, form.weights)
        assert op == expected
    assert action_operator(d, NCElement.constant(ONE), 1) == \
        TensorOperator.identity(2, 1)


def test_classical_limit_of_shifted_rule_is_commutator_form():
    # Over the unbraided flip the reordering rule becomes: move f past m at
    # the cost of one substitution term delta(row_b, col_f) m(row_f, col_b).
    p = flip(2)
    d = make_double(p, "left_shifted")
    for (gf, gm), img in d.rule.table.items():
        expect = {(gm, gf): ONE}
        if gm.row == gf.col:
            key = (Gen("m", gf.row, gm.col),)
            expect[key] = expect.get(key, ZERO) + ONE
        expect = {k: v for k, v in expect.items() if not v.is_zero()}
        assert img.terms == expect


def test_classical_derivative_action_is_kronecker():
    p = flip(2)
    d = make_double(p, "derivative")
    for gd in matrix_generators("d", 2):
        for gm in matrix_generators("m", 2):
            got = d.act(NCElement.generator(gd), NCElement.generator(gm))
            want = ONE if (gd.row == gm.col and gd.col == gm.row) else ZERO
            assert got == NCElement.constant(want)


def test_sampled_equality_path():
    b = standard_hecke(2)
    d = make_double(b, "left")
    rng = random.Random(23)
    rel = d.a_pres.relations[0]
    g = NCElement.generator(Gen("m", 1, 1))
    assert d.equals(rel * g, NCElement.zero(), mode="SAMPLED", rng=rng)
    assert not d.equals(g, NCElement.zero(), mode="SAMPLED", rng=rng)


def test_degree_overflow_guard():
    b = standard_hecke(2)
    d = make_double(b, "left")
    d.max_word = 3
    word = NCElement.word((Gen("l", 1, 1),) * 2 + (Gen("m", 1, 1),) * 2)
    with pytest.raises(DoubleError):
        d.normal_order(word)


def test_unknown_kind_rejected():
    with pytest.raises(DoubleError):
        make_double(standard_hecke(2), "sideways")

"""Adjoint fields on the coordinate algebra and fixed-level quotients.

In the mixed double built on the inhomogeneous adjoint rule, every
field-side generator commutes with every weighted trace power of the
coordinate matrix, hence annihilates those traces under the regular
action.  Pinning the first N trace powers to constants therefore gives
quotient coordinate algebras that still carry the field action; they
play the role of function rings on fixed conjugation orbits.  An orbit
level is generic when no weighted eigenvalue equals q^2 times another.

The commutation claim is checked two ways: generator-by-generator
bi-normal forms, and the matrix identity behind it,

    R Lhat_1 R M_1^k - M_1^k R Lhat_1 R = R M_1^k - M_1^k R,

whose weighted partial trace in the second slot collapses to the
commutator of Lhat with the traced power.
"""

from __future__ import annotations

import itertools

from .anchors import anchor
from .braidings import Braiding
from .doubles import QuantumDouble, make_double
from .invariants import power_sum
from .ncengine import (MatrixOverAlgebra, NCElement, QuadraticPresentation,
                       matrix_generators, re_presentation)
from .reports import VerificationReport
from .scalars import Scalar, random_parameter_values


def _trace_commutes(double: QuantumDouble, trace: NCElement) -> tuple:
    for g in double.a_pres.generators:
        x = NCElement.generator(g)
        residual = double.binormal_form(x * trace - trace * x)
        if not residual.is_zero():
            return False, f"field {g} does not commute: {residual!r}"
    return True, None


def _trace_annihilated(double: QuantumDouble, trace: NCElement) -> tuple:
    for g in double.a_pres.generators:
        image = double.act(NCElement.generator(g), trace)
        if not double.b_pres.reduces_to_zero(image):
            return False, f"field {g} acts by {image!r}"
    return True, None


def _proof_identity_matrix(double: QuantumDouble, k: int
                           ) -> MatrixOverAlgebra:
    """Difference of both sides of the slot-wise commutation identity."""
    b = double.braiding
    r = b.at(1, 2)
    l1 = MatrixOverAlgebra.generator_matrix(double.a_tag, b.dim, 2, 1)
    mk = MatrixOverAlgebra.generator_matrix(double.b_tag, b.dim, 2, 1)
    for _ in range(k - 1):
        mk = mk * MatrixOverAlgebra.generator_matrix(
            double.b_tag, b.dim, 2, 1)
    sandwiched = l1.lmul_op(r).rmul_op(r)
    return (sandwiched * mk - mk * sandwiched) \
        - (mk.lmul_op(r) - mk.rmul_op(r))


def _entries_reduce(double: QuantumDouble, diff: MatrixOverAlgebra,
                    cast) -> tuple:
    for key in sorted(diff.entries):
        row, col = key
        residual = double.binormal_form(cast(diff.entry(row, col)))
        if not residual.is_zero():
            return False, f"entry {row}->{col}: {residual!r}"
    return True, None


def verify_adjoint_invariance(braiding: Braiding, k: int,
                              mode: str = "EXACT", rng=None,
                              samples: int = 3) -> VerificationReport:
    """Traced powers of the coordinate matrix are invariants of the fields.

    Three independent checks per parameter point: the commutator of each
    field generator with the traced k-th power is zero in the double, the
    regular action of each field generator kills the traced power, and
    the slot-wise matrix identity underlying both.
    """
    if k < 1:
        raise ValueError("trace power must be positive")
    report = VerificationReport(
        "adjoint", {"n": braiding.dim, "k": k, "mode": mode,
                    "kind": "adjoint_shifted"})
    double = make_double(braiding, "adjoint_shifted")
    trace = power_sum(braiding, double.b_tag, k)
    diff = _proof_identity_matrix(double, k)
    if mode == "EXACT":
        points = [("", double, lambda x: x)]
    elif mode == "SAMPLED":
        if rng is None:
            raise ValueError("SAMPLED mode needs an rng")
        points = []
        for value in random_parameter_values(rng, max(samples, 3)):
            def cast(x, v=value):
                return x.map_coeffs(lambda s: s.with_value(v))
            points.append((f"@{value}", double.substituted(value), cast))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for suffix, dbl, cast in points:
        tr = cast(trace)
        ok, witness = _trace_commutes(dbl, tr)
        report.add(f"commutation{suffix}", anchor("adjoint-commutation"),
                   ok, witness)
        ok, witness = _trace_annihilated(dbl, tr)
        report.add(f"annihilation{suffix}", anchor("adjoint-annihilation"),
                   ok, witness)
        ok, witness = _entries_reduce(dbl, diff, cast)
        report.add(f"matrix-identity{suffix}",
                   anchor("adjoint-proof-identity"), ok, witness)
    return report


# ---------------------------------------------------------------------------
# Orbit quotients


def orbit_quotient(braiding: Braiding, alphas, tag: str = "m"
                   ) -> QuadraticPresentation:
    """Coordinate algebra with the first N traced powers pinned.

    Adjoins the inhomogeneous relations  trace((weighted M)^k) = alpha_k
    for k = 1..N to the reflection-equation presentation; reduction runs
    in the filtered regime, so trace occurrences rewrite to constants.
    """
    n = braiding.dim
    alphas = list(alphas)
    if len(alphas) != n:
        raise ValueError("need one level constant per matrix size")
    relations = list(re_presentation(braiding, tag).relations)
    for k, alpha in enumerate(alphas, start=1):
        relations.append(power_sum(braiding, tag, k)
                         - NCElement.constant(alpha))
    return QuadraticPresentation(matrix_generators(tag, n), relations,
                                 name=f"orbit({tag}, dim={n})")


def verify_orbit_descent(braiding: Braiding, alphas, degree: int = 1
                         ) -> VerificationReport:
    """The field action is well defined on the pinned quotient.

    Checks that each trace power reduces to its level constant, and that
    every field generator maps the pinned ideal into itself: acting on
    (trace power - constant) times any word of length <= degree, on
    either side, lands back in the ideal.
    """
    n = braiding.dim
    report = VerificationReport(
        "orbits", {"n": n, "alphas": [a.text() for a in alphas],
                   "degree": degree,
                   "genericity_pairs": "all ordered pairs including i=j"})
    double = make_double(braiding, "adjoint_shifted")
    quotient = orbit_quotient(braiding, alphas, double.b_tag)
    ok = True
    witness = None
    for k, alpha in enumerate(alphas, start=1):
        reduced = quotient.normal_form(power_sum(braiding, double.b_tag, k))
        if reduced != NCElement.constant(alpha):
            ok = False
            witness = f"trace power {k} reduces to {reduced!r}"
            break
    report.add("pinned-reduction", anchor("orbit-quotient"), ok, witness)
    words = [NCElement.word(w) for d in range(degree + 1)
             for w in itertools.product(quotient.generators, repeat=d)]
    ok = True
    witness = None
    for k, alpha in enumerate(alphas, start=1):
        pinned = power_sum(braiding, double.b_tag, k) \
            - NCElement.constant(alpha)
        for g in double.a_pres.generators:
            field = NCElement.generator(g)
            for w in words:
                for product in (pinned * w, w * pinned):
                    image = double.act(field, product)
                    if not quotient.reduces_to_zero(image):
                        ok = False
                        witness = f"field {g} escapes the ideal at power {k}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("action-descends", anchor("orbit-descent"), ok, witness)
    return report


def genericity(mu_values, q: Scalar) -> bool:
    """No weighted eigenvalue equals q^2 times another (ordered pairs).

    The quantifier runs over all ordered pairs including i = j; for a
    symbolic q the diagonal pairs are vacuous, while at a numeric root
    of q^2 = 1 they fail.
    """
    shifted = q * q
    for mi in mu_values:
        for mj in mu_values:
            if mi == shifted * mj:
                return False
    return True

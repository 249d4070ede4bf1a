"""Central elements of reflection-equation algebras and their spectra.

The weighted-trace power sums Tr_R(X^k) and the braided elementary
symmetric polynomials e_k = Tr_R(1..k)(A^(k) X_1 X_over(2) ... X_over(k))
are central in the quotient algebra; the generating matrix satisfies the
characteristic identity

    X^N - q e_1 X^(N-1) + q^2 e_2 X^(N-2) + ... + (-q)^N e_N I = 0,

whose entries this module materializes and reduces.  On the irreducible
module labeled by a partition, every central element acts by a scalar;
those scalars are packaged in SpectralCharacter, derived from the
eigenvalue values mu_i = q^(-2(lam_i + N - i)).  Two verification routes
confirm the scalars: a pure operator route (the partial weighted trace of
the inverse Jucys-Murphy element, restricted to a tableau projector) and
an action route (the operator extracted from the element acting inside
the invariant-fields double).
"""

from __future__ import annotations

import itertools

from .anchors import anchor
from .braidings import Braiding, TensorOperator
from .doubles import QuantumDouble, action_operator, make_double, monomial_matrix
from .heckerep import (
    content_sum_power,
    hecke_integer,
    jucys_murphy_inverse,
    partitions,
    skew_symmetrizer,
    standard_tableaux,
    young_idempotent,
)
from .ncengine import (
    MatrixOverAlgebra,
    NCElement,
    QuadraticPresentation,
    re_presentation,
)
from .reports import VerificationReport
from .scalars import ONE, ZERO, Scalar, random_parameter_values


# ---------------------------------------------------------------------------
# Central elements


def power_sum(braiding: Braiding, tag: str, k: int) -> NCElement:
    """Weighted trace of the k-th power of the generating matrix."""
    assert k >= 1
    x = MatrixOverAlgebra.generator_matrix(tag, braiding.dim, 1, 1)
    p = x
    for _ in range(k - 1):
        p = p * x
    return p.trace_all(braiding.trace_form().weights)


def elementary_symmetric(braiding: Braiding, tag: str, k: int) -> NCElement:
    """Full weighted trace of A^(k) times the product of the matrix copies.

    Degree-k element, central in the quotient; k = 1 is the weighted trace
    itself, and every k above the dimension gives 0 (the skew-symmetrizer
    vanishes there).
    """
    assert k >= 1
    mon = monomial_matrix(braiding, tag, k)
    return mon.lmul_op(skew_symmetrizer(braiding, k)).trace_all(
        braiding.trace_form().weights)


def characteristic_residual(braiding: Braiding, tag: str) -> MatrixOverAlgebra:
    """Matrix of the characteristic identity, zero modulo the ideal.

    sum over k = 0..N of (-q)^k e_k X^(N-k), with e_0 = 1; the coefficient
    elements multiply from the left.
    """
    n = braiding.dim
    q = braiding.q
    x = MatrixOverAlgebra.generator_matrix(tag, n, 1, 1)
    powers = [MatrixOverAlgebra.identity(n, 1)]
    for _ in range(n):
        powers.append(powers[-1] * x)
    acc = powers[n]
    for k in range(1, n + 1):
        ek = elementary_symmetric(braiding, tag, k)
        term = powers[n - k].map_entries(lambda v, e=ek: e * v)
        acc = acc + term.scale((-q) ** k)
    return acc


def _entries_vanish(res: MatrixOverAlgebra,
                    pres: QuadraticPresentation) -> tuple:
    for key in sorted(res.entries):
        nf = pres.normal_form(res.entries[key])
        if not nf.is_zero():
            r, c = key
            return False, f"entry {r}->{c}: {nf!r}"
    return True, None


def verify_cayley_hamilton(braiding: Braiding, tag: str = "l",
                           mode: str = "EXACT", rng=None,
                           samples: int = 3) -> VerificationReport:
    """Reduce every entry of the characteristic identity to zero.

    EXACT reduces over the symbolic field; SAMPLED substitutes random
    rational parameter values into the entries and the relations and
    reduces in the evaluated presentation, one check per sample point.
    """
    report = VerificationReport(
        "cayley-hamilton", {"n": braiding.dim, "mode": mode})
    res = characteristic_residual(braiding, tag)
    pres = re_presentation(braiding, tag)
    if mode == "EXACT":
        ok, witness = _entries_vanish(res, pres)
        report.add("entries-vanish", anchor("cayley-hamilton"), ok, witness)
        return report
    if mode != "SAMPLED":
        raise ValueError(f"unknown mode {mode!r}")
    if rng is None:
        raise ValueError("SAMPLED mode needs an rng")
    for value in random_parameter_values(rng, max(samples, 3)):
        sub = pres.substituted(value)
        img = res.map_entries(
            lambda v: v.map_coeffs(lambda s: s.with_value(value)))
        ok, witness = _entries_vanish(img, sub)
        report.add(f"entries-vanish@{value}", anchor("cayley-hamilton"),
                   ok, witness)
    return report


# ---------------------------------------------------------------------------
# Spectral characters


def spectral_char_trl(shape: tuple, braiding: Braiding) -> Scalar:
    """Scalar by which the weighted trace acts on the module of a partition.

    The weighted trace of the identity, minus nu/q^(2N) times the sum of
    q^(-2c) over the boxes of the diagram.
    """
    n = braiding.dim
    if len([p for p in shape if p]) > n:
        raise ValueError("partition has more parts than the matrix size")
    q = braiding.q
    v = q - q.inverse()
    boxes = content_sum_power(shape, q)
    return braiding.trace_form().dimension_value() - v * q ** (-2 * n) * boxes


class SpectralCharacter:
    """Values of the central family on one irreducible module.

    Everything derives from the eigenvalue values
    mu_i = q^(-2(lam_i + N - i)) of the zero-padded partition: the shifted
    eigenvalues solve mu = 1 - (q - q^-1) mu_hat, the elementary values
    satisfy q^k e_k = e_k(mu_1, ..., mu_N), the interpolation weights are
    d_i = q^-1 prod_{j != i} (mu_i - q^-2 mu_j) / (mu_i - mu_j), and the
    power values are sum_i mu_i^k d_i.  The exponents lam_i + N - i are
    strictly decreasing, so the mu_i stay distinct whenever the braiding
    parameter is a genuine variable.
    """

    __slots__ = ("shape", "braiding", "mu", "mu_hat", "_weights")

    def __init__(self, shape: tuple, braiding: Braiding):
        n = braiding.dim
        if len([p for p in shape if p]) > n:
            raise ValueError("partition has more parts than the matrix size")
        q = braiding.q
        lam = tuple(shape) + (0,) * (n - len(shape))
        self.shape = tuple(shape)
        self.braiding = braiding
        self.mu = [q ** (-2 * (lam[i] + n - i - 1)) for i in range(n)]
        self.mu_hat = [q ** (-(lam[i] + n - i - 1)) *
                       hecke_integer(braiding, lam[i] + n - i - 1)
                       for i in range(n)]
        self._weights = None

    def elementary(self, k: int) -> Scalar:
        """Value of e_k: the elementary symmetric function of mu over q^k."""
        total = ZERO
        for comb in itertools.combinations(self.mu, k):
            prod = ONE
            for m in comb:
                prod = prod * m
            total = total + prod
        return self.braiding.q ** (-k) * total

    def weights(self) -> list:
        """Interpolation weights d_i entering the power-sum expansion."""
        if self._weights is None:
            q = self.braiding.q
            if q.is_constant():
                raise ValueError("interpolation weights need a variable parameter")
            out = []
            for i, mi in enumerate(self.mu):
                w = q.inverse()
                for j, mj in enumerate(self.mu):
                    if j != i:
                        w = w * (mi - q ** (-2) * mj) / (mi - mj)
                out.append(w)
            self._weights = out
        return self._weights

    def power(self, k: int) -> Scalar:
        """Value of the k-th power sum: sum of mu_i^k d_i."""
        total = ZERO
        for mi, di in zip(self.mu, self.weights()):
            total = total + mi ** k * di
        return total


# ---------------------------------------------------------------------------
# Spectrum verification


def trace_action_operator(braiding: Braiding, k: int) -> TensorOperator:
    """Operator of the weighted trace on degree-k monomials, closed form.

    The partial weighted trace over slot k+1 of the inverse Jucys-Murphy
    element J_(k+1)^-1.
    """
    jinv = jucys_murphy_inverse(braiding, k + 1)[k]
    return braiding.trace_form().partial(jinv, k + 1)


def _shape_label(shape: tuple) -> str:
    return ",".join(str(p) for p in shape)


def _projector_checks(report: VerificationReport, op: TensorOperator,
                      chi: Scalar, shape: tuple, braiding: Braiding,
                      check_anchor: str) -> None:
    for i, t in enumerate(standard_tableaux(shape), start=1):
        proj = young_idempotent(braiding, t)
        lhs = op * proj
        rhs = proj.scale(chi)
        ok = lhs == rhs
        witness = None if ok else f"residual rank {(lhs - rhs).rank()}"
        report.add(f"tableau-{i}", check_anchor, ok, witness)


def verify_spectrum_operator(shape: tuple, braiding: Braiding) -> VerificationReport:
    """Closed-form route: the trace operator restricted to each projector.

    Checks trace_action_operator(k) * P = chi * P for every standard
    tableau of the shape, with chi from the content formula.
    """
    k = sum(shape)
    chi = spectral_char_trl(shape, braiding)
    report = VerificationReport("spectrum", {
        "route": "operator", "lambda": _shape_label(shape),
        "n": braiding.dim, "chi": chi.text()})
    op = trace_action_operator(braiding, k)
    _projector_checks(report, op, chi, shape, braiding,
                      anchor("spectrum-operator"))
    return report


def verify_spectrum(element: str, shape: tuple, braiding: Braiding,
                    k: int | None = None,
                    double: QuantumDouble | None = None) -> VerificationReport:
    """Action route: a central element acting inside the double.

    element TRL is the weighted trace with the content-formula scalar;
    E2 is the second elementary symmetric polynomial with the eigenvalue
    compatibility scalar; PK is the k-th power sum with the
    interpolation-weight scalar.  The element acts on monomials of degree
    equal to the partition size; every standard tableau projector must be
    an eigenprojector.  Failures are recorded, not raised: E2 and PK
    probe a conjecture.
    """
    size = sum(shape)
    if double is None:
        double = make_double(braiding, "left")
    char = SpectralCharacter(shape, braiding)
    if element == "TRL":
        a = power_sum(braiding, double.a_tag, 1)
        chi = spectral_char_trl(shape, braiding)
        check_anchor = anchor("spectrum-action-route")
    elif element == "E2":
        a = elementary_symmetric(braiding, double.a_tag, 2)
        chi = char.elementary(2)
        check_anchor = anchor("conjecture-e2")
    elif element == "PK":
        if k is None:
            raise ValueError("PK needs the power index k")
        a = power_sum(braiding, double.a_tag, k)
        chi = char.power(k)
        check_anchor = anchor("conjecture-pk")
    else:
        raise ValueError(f"unknown element {element!r}")
    config = {"route": "action", "element": element,
              "lambda": _shape_label(shape), "n": braiding.dim,
              "chi": chi.text()}
    if k is not None:
        config["k"] = k
    report = VerificationReport("spectrum", config)
    op = action_operator(double, a, size)
    _projector_checks(report, op, chi, shape, braiding, check_anchor)
    return report


def verify_character_consistency(braiding: Braiding,
                                 max_boxes: int = 4) -> VerificationReport:
    """Scalar identities every partition's character values must satisfy.

    For each partition with at most N parts and at most max_boxes boxes:
    the content-formula trace value equals q^-1 sum mu_i (the k = 1 case
    of the elementary compatibility), the shifted eigenvalues satisfy the
    linear link, and the interpolation weights reproduce the trace value
    as the first power sum.
    """
    report = VerificationReport(
        "conjecture", {"max_boxes": max_boxes, "n": braiding.dim})
    q = braiding.q
    v = q - q.inverse()
    for size in range(1, max_boxes + 1):
        for shape in partitions(size, braiding.dim):
            label = _shape_label(shape)
            char = SpectralCharacter(shape, braiding)
            trl = spectral_char_trl(shape, braiding)
            e1 = char.elementary(1)
            report.add(f"e1-{label}", anchor("character-e1-consistency"),
                       e1 == trl,
                       None if e1 == trl else f"{e1.text()} vs {trl.text()}")
            link = all(m == ONE - v * mh
                       for m, mh in zip(char.mu, char.mu_hat))
            report.add(f"shift-link-{label}", anchor("character-mu-shift"),
                       link, None if link else "linear shift link broken")
            p1 = char.power(1)
            report.add(f"p1-{label}", anchor("character-power-weights"),
                       p1 == trl,
                       None if p1 == trl else f"{p1.text()} vs {trl.text()}")
    return report

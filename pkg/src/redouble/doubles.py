"""Two-algebra doubles glued by permutation rules, with counit actions.

A double holds two one-sided presentations A and B plus a rule table sigma
mapping each adjacent pair (a-letter, b-letter) to its reordered form, a
linear combination of words b'·a', b', a' and constants.  The table is not
typed in by hand: it is extracted from the defining matrix relation of each
kind by solving the linear system the relation imposes on generator pairs.
Mixed words are canonicalized by moving every b-letter left of every
a-letter (leftmost pair first), then reducing the two blocks by their own
ideals; the counit of A turns ordering into an action of A on B.

Kinds, each named by the role the A-side plays on the B-side:
  left              invariant fields, homogeneous form
  left_shifted      invariant fields, inhomogeneous (unit-shifted) form
  adjoint           adjoint fields, homogeneous form
  adjoint_shifted   adjoint fields, inhomogeneous form
  derivative        partial derivatives on the quadratic algebra
  derivative_shifted        derivatives on the unit-shifted quadratic algebra
  derivative_shifted_unit   same, in shifted-derivative letters (involutive
                            braidings only; the counit becomes h^-1 * delta)
  vector            invariant fields on the tensor algebra of V
"""

from __future__ import annotations

import itertools

from .braidings import Braiding, TensorOperator
from .linalg import Triangular, invert_table, vec_add_scaled
from .ncengine import (
    Gen,
    MatrixOverAlgebra,
    NCElement,
    QuadraticPresentation,
    free_presentation,
    matrix_generators,
    re_presentation,
    skew_vector_presentation,
    symmetric_vector_presentation,
    vector_generators,
)
from .scalars import ONE, ZERO, Scalar, random_parameter_values


class DoubleError(Exception):
    pass


class PermutationRule:
    """Finite reordering table on generator pairs.

    Every image must lie in span{b·a, b, a, 1}: reordering one pair yields
    at most one letter of each side again.
    """

    __slots__ = ("a_tag", "b_tag", "table")

    def __init__(self, a_tag: str, b_tag: str, table: dict):
        self.a_tag = a_tag
        self.b_tag = b_tag
        self.table = table
        for (ga, gb), img in table.items():
            if ga.tag != a_tag or gb.tag != b_tag:
                raise DoubleError("rule key tags do not match the double")
            for w in img.terms:
                if len(w) > 2:
                    raise DoubleError("rule image outside the pair span")
                if len(w) == 2 and not (w[0].tag == b_tag and w[1].tag == a_tag):
                    raise DoubleError("rule image term is not reordered")


class QuantumDouble:
    """Presentations A and B glued along a permutation rule."""

    def __init__(self, braiding: Braiding, kind: str,
                 a_pres: QuadraticPresentation, b_pres: QuadraticPresentation,
                 rule: PermutationRule, eps_a: dict,
                 max_word: int = 24):
        self.braiding = braiding
        self.kind = kind
        self.a_pres = a_pres
        self.b_pres = b_pres
        self.rule = rule
        self.a_tag = rule.a_tag
        self.b_tag = rule.b_tag
        self.eps_a = eps_a
        self.max_word = max_word
        self._order_cache: dict = {}
        self._sub_cache: dict = {}
        for rel in a_pres.relations:
            if not self.counit(rel).is_zero():
                raise DoubleError("counit does not annihilate the A-relations")

    # -- counit ------------------------------------------------------------

    def counit(self, a: NCElement) -> Scalar:
        """Multiplicative extension of eps_a to A-elements."""
        total = ZERO
        for w, c in a.terms.items():
            val = c
            for g in w:
                if g.tag != self.a_tag:
                    raise DoubleError("counit applies to A-elements only")
                val = val * self.eps_a[g]
                if val.is_zero():
                    break
            total = total + val
        return total

    # -- normal ordering -----------------------------------------------------

    def _order_word(self, w: tuple) -> dict:
        cached = self._order_cache.get(w)
        if cached is not None:
            return cached
        if len(w) > self.max_word:
            raise DoubleError("degree-overflow during normal ordering")
        hit = None
        for i in range(len(w) - 1):
            if w[i].tag == self.a_tag and w[i + 1].tag == self.b_tag:
                hit = i
                break
        if hit is None:
            out = {w: ONE}
        else:
            img = self.rule.table[(w[hit], w[hit + 1])]
            out: dict = {}
            head, tail = w[:hit], w[hit + 2:]
            for iw, c in img.terms.items():
                for ww, cc in self._order_word(head + iw + tail).items():
                    cur = out.get(ww)
                    s = c * cc if cur is None else cur + c * cc
                    if s.is_zero():
                        out.pop(ww, None)
                    else:
                        out[ww] = s
        self._order_cache[w] = out
        return out

    def normal_order(self, x: NCElement) -> NCElement:
        """Move every B-letter left of every A-letter, leftmost pair first."""
        out: dict = {}
        for w, c in x.terms.items():
            vec_add_scaled(out, self._order_word(w), c)
        return NCElement(out)

    def split_word(self, w: tuple) -> tuple:
        """Split an ordered word into its B-block and A-block."""
        cut = len(w)
        for i, g in enumerate(w):
            if g.tag == self.a_tag:
                cut = i
                break
            if g.tag != self.b_tag:
                raise DoubleError(f"foreign letter {g!r} in the double")
        for g in w[cut:]:
            if g.tag != self.a_tag:
                raise DoubleError("word is not normal-ordered")
        return w[:cut], w[cut:]

    def binormal_form(self, x: NCElement) -> NCElement:
        """Normal order, then reduce the B-block and A-block by their ideals."""
        ordered = self.normal_order(x)
        out: dict = {}
        for w, c in ordered.terms.items():
            bw, aw = self.split_word(w)
            nfb = self.b_pres.normal_form(NCElement.word(bw))
            nfa = self.a_pres.normal_form(NCElement.word(aw))
            for wb, cb in nfb.terms.items():
                for wa, ca in nfa.terms.items():
                    key = wb + wa
                    s = c * cb * ca
                    cur = out.get(key)
                    s = s if cur is None else cur + s
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        return NCElement(out)

    def equals(self, x: NCElement, y: NCElement, mode: str = "EXACT",
               rng=None, samples: int = 3) -> bool:
        diff = x - y
        if diff.is_zero():
            return True
        if mode == "EXACT":
            return self.binormal_form(diff).is_zero()
        if mode != "SAMPLED":
            raise ValueError(f"unknown mode {mode!r}")
        if rng is None:
            raise ValueError("SAMPLED mode needs an rng")
        for value in random_parameter_values(rng, max(samples, 3)):
            sub = self.substituted(value)
            img = diff.map_coeffs(lambda s: s.with_value(value))
            if not sub.binormal_form(img).is_zero():
                return False
        return True

    def substituted(self, value) -> "QuantumDouble":
        cached = self._sub_cache.get(value)
        if cached is None:
            table = {k: v.map_coeffs(lambda s: s.with_value(value))
                     for k, v in self.rule.table.items()}
            eps = {g: s.with_value(value) for g, s in self.eps_a.items()}
            cached = QuantumDouble(
                self.braiding, self.kind,
                self.a_pres.substituted(value), self.b_pres.substituted(value),
                PermutationRule(self.a_tag, self.b_tag, table), eps,
                self.max_word)
            self._sub_cache[value] = cached
        return cached

    # -- action ------------------------------------------------------------

    def act(self, a: NCElement, b: NCElement) -> NCElement:
        """Action of A on B: order a·b, then cap the A-block with the counit."""
        for w in a.terms:
            if any(g.tag != self.a_tag for g in w):
                raise DoubleError("left action argument must be an A-element")
        return self.act_mixed(a, b)

    def act_mixed(self, x: NCElement, b: NCElement) -> NCElement:
        """Regular action of any double element on a B-element.

        Multiplies, normal-orders, and caps the trailing A-block with the
        counit; B-letters of x survive as left multiplication.
        """
        for w in b.terms:
            if any(g.tag != self.b_tag for g in w):
                raise DoubleError("action target must be a B-element")
        ordered = self.normal_order(x * b)
        out: dict = {}
        for w, c in ordered.terms.items():
            bw, aw = self.split_word(w)
            val = c
            for g in aw:
                val = val * self.eps_a[g]
                if val.is_zero():
                    break
            if val.is_zero():
                continue
            cur = out.get(bw)
            s = val if cur is None else cur + val
            if s.is_zero():
                out.pop(bw, None)
            else:
                out[bw] = s
        return NCElement(out)

    def act_matrix(self, amoa: MatrixOverAlgebra,
                   bmoa: MatrixOverAlgebra) -> MatrixOverAlgebra:
        """Entrywise action product: out[I,K] = sum_J act(a[I,J], b[J,K])."""
        if amoa.col_arity != bmoa.row_arity:
            raise ValueError("matrix shape mismatch")
        by_mid: dict = {}
        for (j, k), v in bmoa.entries.items():
            by_mid.setdefault(j, []).append((k, v))
        out: dict = {}
        for (i, j), av in amoa.entries.items():
            for k, bv in by_mid.get(j, ()):
                p = self.act(av, bv)
                if p.is_zero():
                    continue
                key = (i, k)
                cur = out.get(key)
                out[key] = p if cur is None else cur + p
        return MatrixOverAlgebra(amoa.dim, amoa.row_arity, bmoa.col_arity,
                                 {k: v for k, v in out.items() if not v.is_zero()})


# ---------------------------------------------------------------------------
# Rule extraction and the double factory


def _index_space(dim: int, arity: int):
    return list(itertools.product(range(1, dim + 1), repeat=arity))


def _extract_rule(lhs: MatrixOverAlgebra, rhs: MatrixOverAlgebra,
                  a_gens: list, b_gens: list,
                  a_tag: str, b_tag: str) -> PermutationRule:
    """Solve the matrix relation LHS = RHS for the pair images.

    The left side must be strictly bilinear in (a-letter, b-letter) words;
    inverting its coefficient table expresses each pair as the matching
    combination of right-side entries.
    """
    pairs = [(ga, gb) for ga in a_gens for gb in b_gens]
    pidx = {p: i for i, p in enumerate(pairs)}
    positions = [(r, c)
                 for r in _index_space(lhs.dim, lhs.row_arity)
                 for c in _index_space(lhs.dim, lhs.col_arity)]
    if len(positions) != len(pairs):
        raise DoubleError("relation shape does not match the pair count")
    rows = {}
    for i, (r, c) in enumerate(positions):
        row = {}
        for w, coeff in lhs.entry(r, c).terms.items():
            if len(w) != 2 or w[0].tag != a_tag or w[1].tag != b_tag:
                raise DoubleError("left side of the relation is not bilinear")
            row[pidx[(w[0], w[1])]] = coeff
        rows[i] = row
    try:
        inv = invert_table(rows, list(range(len(pairs))))
    except ArithmeticError as exc:
        raise DoubleError("relation does not determine the rule") from exc
    table = {}
    for p, i in pidx.items():
        img = NCElement.zero()
        for r_i, coeff in inv.get(i, {}).items():
            e = rhs.entry(*positions[r_i])
            if not e.is_zero():
                img = img + e.scale(coeff)
        table[p] = img
    return PermutationRule(a_tag, b_tag, table)


def make_double(braiding: Braiding, kind: str, a_tag: str = "",
                b_tag: str = "", h: Scalar | None = None,
                b_quotient: str = "free") -> QuantumDouble:
    """Build one of the named doubles over the given braiding."""
    dim = braiding.dim
    r = braiding.op
    rinv = braiding.inv

    def mat(tag):
        return MatrixOverAlgebra.generator_matrix(tag, dim, 2, 1)

    if kind in ("left", "left_shifted", "adjoint", "adjoint_shifted"):
        a_tag = a_tag or "l"
        b_tag = b_tag or "m"
        x1 = mat(a_tag)
        m1 = mat(b_tag)
        lhs = x1.lmul_op(r).rmul_op(r) * m1
        shifted = kind.endswith("_shifted")
        if kind == "left":
            rhs = (m1 * x1.lmul_op(r)).rmul_op(rinv)
        elif kind == "left_shifted":
            rhs = (m1 * x1.lmul_op(r)).rmul_op(rinv) + m1.lmul_op(r)
        elif kind == "adjoint":
            rhs = (m1 * x1.lmul_op(r)).rmul_op(r)
        else:
            rhs = (m1 * x1.lmul_op(r)).rmul_op(r) + m1.lmul_op(r) - m1.rmul_op(r)
        a_pres = re_presentation(braiding, a_tag,
                                 shift=(ONE if shifted else None))
        b_pres = re_presentation(braiding, b_tag)
        eps = {g: (ZERO if shifted else (ONE if g.row == g.col else ZERO))
               for g in matrix_generators(a_tag, dim)}
        rule = _extract_rule(lhs, rhs, matrix_generators(a_tag, dim),
                             matrix_generators(b_tag, dim), a_tag, b_tag)
        return QuantumDouble(braiding, kind, a_pres, b_pres, rule, eps)

    if kind == "derivative":
        a_tag = a_tag or "d"
        b_tag = b_tag or "m"
        d1 = mat(a_tag)
        m1 = mat(b_tag)
        lhs = (d1.rmul_op(r) * m1).rmul_op(r)
        rhs = (m1.lmul_op(r).rmul_op(rinv)) * d1 + \
            MatrixOverAlgebra.from_operator(r)
        a_pres = re_presentation(braiding, a_tag, use_inverse=True)
        b_pres = re_presentation(braiding, b_tag)
        eps = {g: ZERO for g in matrix_generators(a_tag, dim)}
        rule = _extract_rule(lhs, rhs, matrix_generators(a_tag, dim),
                             matrix_generators(b_tag, dim), a_tag, b_tag)
        return QuantumDouble(braiding, kind, a_pres, b_pres, rule, eps)

    if kind in ("derivative_shifted", "derivative_shifted_unit"):
        if h is None or h.is_zero():
            raise DoubleError(f"kind {kind!r} needs a nonzero shift scalar")
        a_tag = a_tag or "d"
        b_tag = b_tag or "n"
        d1 = mat(a_tag)
        n1 = mat(b_tag)
        lhs = (d1.rmul_op(r) * n1).rmul_op(r)
        if kind == "derivative_shifted":
            rhs = (n1.lmul_op(r).rmul_op(rinv)) * d1 + \
                MatrixOverAlgebra.from_operator(r) + d1.rmul_op(r).scale(h)
            eps = {g: ZERO for g in matrix_generators(a_tag, dim)}
        else:
            if braiding.op != braiding.inv:
                raise DoubleError("unit-shifted derivatives need an involutive braiding")
            rhs = (n1.lmul_op(r).rmul_op(r)) * d1 + d1.rmul_op(r).scale(h)
            hinv = h.inverse()
            eps = {g: (hinv if g.row == g.col else ZERO)
                   for g in matrix_generators(a_tag, dim)}
        a_pres = re_presentation(braiding, a_tag, use_inverse=True)
        b_pres = re_presentation(braiding, b_tag, shift=h)
        rule = _extract_rule(lhs, rhs, matrix_generators(a_tag, dim),
                             matrix_generators(b_tag, dim), a_tag, b_tag)
        return QuantumDouble(braiding, kind, a_pres, b_pres, rule, eps)

    if kind == "vector":
        a_tag = a_tag or "l"
        b_tag = b_tag or "x"
        l1 = mat(a_tag)
        x1 = MatrixOverAlgebra.generator_vector(b_tag, dim, 2, 1)
        lhs = (l1.lmul_op(r).rmul_op(r)) * x1
        rhs = x1 * MatrixOverAlgebra.generator_matrix(a_tag, dim, 1, 1)
        a_pres = re_presentation(braiding, a_tag)
        if b_quotient == "free":
            b_pres = free_presentation(vector_generators(b_tag, dim),
                                       name=f"free({b_tag}, dim={dim})")
        elif b_quotient == "symmetric":
            b_pres = symmetric_vector_presentation(braiding, b_tag)
        elif b_quotient == "skew":
            b_pres = skew_vector_presentation(braiding, b_tag)
        else:
            raise DoubleError(f"unknown vector quotient {b_quotient!r}")
        eps = {g: (ONE if g.row == g.col else ZERO)
               for g in matrix_generators(a_tag, dim)}
        rule = _extract_rule(lhs, rhs, matrix_generators(a_tag, dim),
                             vector_generators(b_tag, dim), a_tag, b_tag)
        return QuantumDouble(braiding, kind, a_pres, b_pres, rule, eps)

    raise DoubleError(f"unknown double kind {kind!r}")


# ---------------------------------------------------------------------------
# Matrix copies and slotwise action operators


def conjugated_copy(braiding: Braiding, moa: MatrixOverAlgebra, k: int,
                    variant: str = "OVER") -> MatrixOverAlgebra:
    """Slot-1 matrix conjugated up to slot k by the braiding chain.

    OVER conjugates by the braiding, UNDER by its inverse:
    X_over(k) = R_(k-1) X_over(k-1) R_(k-1)^-1 and the mirrored recursion.
    """
    arity = moa.row_arity
    if not 1 <= k <= arity:
        raise ValueError("target slot outside the arity range")
    out = moa
    for i in range(2, k + 1):
        fwd = braiding.at(i - 1, arity)
        bwd = braiding.inv_at(i - 1, arity)
        if variant == "OVER":
            out = out.lmul_op(fwd).rmul_op(bwd)
        elif variant == "UNDER":
            out = out.lmul_op(bwd).rmul_op(fwd)
        else:
            raise ValueError(f"unknown copy variant {variant!r}")
    return out


def matrix_copy(braiding: Braiding, tag: str, k: int, variant: str = "OVER",
                arity: int | None = None) -> MatrixOverAlgebra:
    """Conjugated copy of the generating matrix sitting at slot k."""
    if arity is None:
        arity = k
    base = MatrixOverAlgebra.generator_matrix(tag, braiding.dim, arity, 1)
    return conjugated_copy(braiding, base, k, variant)


def monomial_matrix(braiding: Braiding, tag: str, k: int,
                    arity: int | None = None) -> MatrixOverAlgebra:
    """Product X_1 X_over(2) ... X_over(k) of the first k matrix copies."""
    if arity is None:
        arity = k
    out = MatrixOverAlgebra.identity(braiding.dim, arity)
    for i in range(1, k + 1):
        out = out * matrix_copy(braiding, tag, i, "OVER", arity)
    return out


def action_operator(double: QuantumDouble, a: NCElement,
                    k: int) -> TensorOperator:
    """Slotwise operator form of acting by a on degree-k matrix monomials.

    Solves act(a, monomial entries) = O * (monomial entries) for the scalar
    operator O on k tensor slots; raises DoubleError when the system is
    inconsistent (the element does not act slotwise) or the monomial
    entries are linearly dependent.
    """
    mon = monomial_matrix(double.braiding, double.b_tag, k)
    idx = _index_space(double.braiding.dim, k)
    nf_rows = {}
    for kk in idx:
        row: dict = {}
        for j in idx:
            e = double.b_pres.normal_form(mon.entry(kk, j))
            for w, c in e.terms.items():
                row[(j, w)] = c
        nf_rows[kk] = row

    def sortkey(key):
        return (0, key[1]) if key[0] == "#" else (1, key)

    tri = Triangular(sortkey)
    for pos, kk in enumerate(idx):
        row = dict(nf_rows[kk])
        row[("#", pos)] = ONE
        pivot = tri.insert(row)
        if pivot is None or pivot[0] == "#":
            raise DoubleError("monomial entries are linearly dependent")
    entries: dict = {}
    for i in idx:
        target: dict = {}
        for j in idx:
            acted = double.act(a, mon.entry(i, j))
            e = double.b_pres.normal_form(acted)
            for w, c in e.terms.items():
                key = (j, w)
                cur = target.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    target.pop(key, None)
                else:
                    target[key] = s
        rem = tri.reduce(target)
        coeffs = {}
        for key, c in rem.items():
            if key[0] != "#":
                raise DoubleError("action is not slotwise on these monomials")
            coeffs[idx[key[1]]] = -c
        for kk, c in coeffs.items():
            if not c.is_zero():
                entries[(i, kk)] = c
    return TensorOperator(double.braiding.dim, k, _nest(entries))


def _nest(flat: dict) -> dict:
    rows: dict = {}
    for (r, c), v in flat.items():
        rows.setdefault(r, {})[c] = v
    return rows

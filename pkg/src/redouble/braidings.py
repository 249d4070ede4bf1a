"""Hecke symmetries on V^k and the compatible weighted trace.

A braiding here is an invertible operator R on V (x) V satisfying the braid
relation R1 R2 R1 = R2 R1 R2 on V^3 together with the quadratic condition
R^2 = I + (q - q^-1) R.  The flip is the q = 1 case.  Operators on tensor
powers are stored sparsely as {row multi-index: {col multi-index: Scalar}}
with 1-based index tuples; columns hold images of basis vectors, so
(R X R^-1) composes left to right as matrix multiplication.

The weighted trace uses the diagonal form C = diag(q^(1-2i)); the braided
copies X over/under a slot are R-conjugates and the defining property is
that the weighted partial trace of either copy in the last slot collapses
to the plain weighted trace times the identity.
"""

from __future__ import annotations

import itertools

from .linalg import Triangular, vec_add_scaled
from .scalars import ONE, Scalar, qint


class TensorOperator:
    """Sparse exact operator on the arity-fold tensor power of Q(q)^dim."""

    __slots__ = ("dim", "arity", "rows")

    def __init__(self, dim: int, arity: int, rows: dict | None = None):
        self.dim = dim
        self.arity = arity
        self.rows = rows if rows is not None else {}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, dim: int, arity: int) -> "TensorOperator":
        rows = {}
        for idx in itertools.product(range(1, dim + 1), repeat=arity):
            rows[idx] = {idx: ONE}
        return cls(dim, arity, rows)

    @classmethod
    def from_entries(cls, dim: int, arity: int, entries: dict) -> "TensorOperator":
        """entries: {(row_tuple, col_tuple): Scalar}, zeros skipped."""
        rows: dict = {}
        for (r, c), v in entries.items():
            if not v.is_zero():
                rows.setdefault(r, {})[c] = v
        return cls(dim, arity, rows)

    def entry(self, r, c) -> Scalar:
        v = self.rows.get(r, {}).get(c)
        return v if v is not None else ONE - ONE

    def clone_rows(self) -> dict:
        return {r: dict(cs) for r, cs in self.rows.items()}

    # -- ring operations ------------------------------------------------------

    def _check(self, other):
        if self.dim != other.dim or self.arity != other.arity:
            raise ValueError("operator shape mismatch")

    def __add__(self, other):
        self._check(other)
        rows = self.clone_rows()
        for r, cs in other.rows.items():
            tgt = rows.setdefault(r, {})
            vec_add_scaled(tgt, cs, ONE)
            if not tgt:
                del rows[r]
        return TensorOperator(self.dim, self.arity, rows)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, coeff: Scalar) -> "TensorOperator":
        if coeff.is_zero():
            return TensorOperator(self.dim, self.arity, {})
        return TensorOperator(self.dim, self.arity,
                              {r: {c: coeff * v for c, v in cs.items()}
                               for r, cs in self.rows.items()})

    def __mul__(self, other):
        """Composition self . other (apply other first)."""
        self._check(other)
        rows: dict = {}
        orows = other.rows
        for r, cs in self.rows.items():
            acc: dict = {}
            for k, v in cs.items():
                mid = orows.get(k)
                if mid:
                    for c, w in mid.items():
                        cur = acc.get(c)
                        p = v * w
                        if cur is None:
                            if not p.is_zero():
                                acc[c] = p
                        else:
                            s = cur + p
                            if s.is_zero():
                                del acc[c]
                            else:
                                acc[c] = s
            if acc:
                rows[r] = acc
        return TensorOperator(self.dim, self.arity, rows)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.dim, self.arity) == (other.dim, other.arity) and self.rows == other.rows

    def is_zero(self) -> bool:
        return not self.rows

    def __pow__(self, k: int):
        out = TensorOperator.identity(self.dim, self.arity)
        for _ in range(k):
            out = out * self
        return out

    # -- tensor-structure operations -------------------------------------------

    def embed(self, arity: int, start: int) -> "TensorOperator":
        """Lift to a larger tensor power, acting on slots start..start+self.arity-1."""
        a = self.arity
        if start < 1 or start + a - 1 > arity:
            raise ValueError("embedding slots out of range")
        rows: dict = {}
        outer = arity - a
        for ext in itertools.product(range(1, self.dim + 1), repeat=outer):
            pre, post = ext[: start - 1], ext[start - 1:]
            for r, cs in self.rows.items():
                rr = pre + r + post
                rows[rr] = {pre + c + post: v for c, v in cs.items()}
        return TensorOperator(self.dim, arity, rows)

    def rtrace(self, slot: int, weights: list) -> "TensorOperator":
        """Weighted partial trace over one slot; weights[i-1] pairs with index i."""
        if not 1 <= slot <= self.arity:
            raise ValueError("slot out of range")
        s = slot - 1
        rows: dict = {}
        for r, cs in self.rows.items():
            b = r[s]
            w = weights[b - 1]
            rr = r[:s] + r[s + 1:]
            for c, v in cs.items():
                if c[s] != b:
                    continue
                cc = c[:s] + c[s + 1:]
                tgt = rows.setdefault(rr, {})
                cur = tgt.get(cc)
                p = w * v
                if cur is None:
                    if not p.is_zero():
                        tgt[cc] = p
                else:
                    t = cur + p
                    if t.is_zero():
                        del tgt[cc]
                    else:
                        tgt[cc] = t
            if rr in rows and not rows[rr]:
                del rows[rr]
        return TensorOperator(self.dim, self.arity - 1, rows)

    def scalar(self) -> Scalar:
        """The single entry of an arity-0 operator."""
        if self.arity != 0:
            raise ValueError("not fully traced")
        return self.rows.get((), {}).get((), ONE - ONE)

    # -- linear-algebra views ----------------------------------------------------

    def as_vectors(self):
        for r, cs in self.rows.items():
            yield {c: v for c, v in cs.items()}

    def rank(self) -> int:
        tri = Triangular()
        for v in self.as_vectors():
            tri.insert(v)
        return len(tri)

    def evaluate_at(self, value) -> "TensorOperator":
        rows: dict = {}
        for r, cs in self.rows.items():
            out = {}
            for c, v in cs.items():
                w = v.with_value(value)
                if not w.is_zero():
                    out[c] = w
            if out:
                rows[r] = out
        return TensorOperator(self.dim, self.arity, rows)

    def __repr__(self):
        return f"TensorOperator(dim={self.dim}, arity={self.arity}, nnz={sum(len(c) for c in self.rows.values())})"


class BraidingError(ValueError):
    """Raised when a claimed braiding fails its defining identities."""


class Braiding:
    """Hecke symmetry: braid relation plus R^2 = I + (q - q^-1) R.

    q is a Scalar in the braiding's coefficient field; for an involutive
    symmetry (the flip) q = 1 and the quadratic condition is R^2 = I.
    The inverse R - (q - q^-1) I comes for free from the quadratic relation.
    """

    def __init__(self, dim: int, q: Scalar, op: TensorOperator, name: str):
        self.dim = dim
        self.q = q
        self.param = q.param
        self.op = op
        self.name = name
        nu = q - q.inverse()
        self.nu = nu
        self.inv = op - TensorOperator.identity(dim, 2).scale(nu)
        self._verify()
        self._trace_form = None

    def _verify(self):
        dim = self.dim
        ident2 = TensorOperator.identity(dim, 2)
        if (self.op * self.inv) != ident2:
            raise BraidingError(f"{self.name}: inverse from quadratic relation failed")
        hecke = self.op * self.op - ident2 - self.op.scale(self.nu)
        if not hecke.is_zero():
            raise BraidingError(f"{self.name}: quadratic Hecke condition failed")
        r1 = self.op.embed(3, 1)
        r2 = self.op.embed(3, 2)
        if (r1 * r2 * r1) != (r2 * r1 * r2):
            raise BraidingError(f"{self.name}: braid relation failed")

    def at(self, i: int, arity: int) -> TensorOperator:
        """R acting in slots (i, i+1) of the arity-fold tensor power."""
        return self.op.embed(arity, i)

    def inv_at(self, i: int, arity: int) -> TensorOperator:
        return self.inv.embed(arity, i)

    def identity(self, arity: int) -> TensorOperator:
        return TensorOperator.identity(self.dim, arity)

    def trace_form(self) -> "RTraceForm":
        if self._trace_form is None:
            self._trace_form = rtrace_form(self)
        return self._trace_form

    def __repr__(self):
        return f"Braiding({self.name}, dim={self.dim})"


def standard_hecke(dim: int, param: str = "q") -> Braiding:
    """The standard deformation of the flip on Q(q)^dim.

    Basis vectors x_i, images of x_i (x) x_j:
      i = j -> q * x_i (x) x_i
      i < j -> x_j (x) x_i
      i > j -> x_j (x) x_i + (q - q^-1) x_i (x) x_j
    """
    q = Scalar.var(param)
    nu_ = q - q.inverse()
    entries = {}
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            if i == j:
                entries[((i, i), (i, i))] = q
            elif i < j:
                entries[((j, i), (i, j))] = ONE
            else:
                entries[((j, i), (i, j))] = ONE
                entries[((i, j), (i, j))] = nu_
    op = TensorOperator.from_entries(dim, 2, entries)
    return Braiding(dim, q, op, f"standard_hecke({dim})")


def flip(dim: int, param: str = "q") -> Braiding:
    """The plain permutation of tensor factors; involutive (q = 1)."""
    entries = {}
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            entries[((j, i), (i, j))] = ONE
    op = TensorOperator.from_entries(dim, 2, entries)
    return Braiding(dim, Scalar.from_int(1, param), op, f"flip({dim})")


class RTraceForm:
    """Weighted trace data for a braiding: C = diag(q^(1-2i))."""

    def __init__(self, braiding: Braiding, weights: list):
        self.braiding = braiding
        self.weights = weights

    def trace(self, op: TensorOperator) -> Scalar:
        """Full weighted trace over every slot."""
        cur = op
        for slot in range(op.arity, 0, -1):
            cur = cur.rtrace(slot, self.weights)
        return cur.scalar()

    def partial(self, op: TensorOperator, slot: int) -> TensorOperator:
        return op.rtrace(slot, self.weights)

    def dimension_value(self) -> Scalar:
        """Weighted trace of the identity on V: N_q / q^N."""
        total = ONE - ONE
        for w in self.weights:
            total = total + w
        return total


def rtrace_form(braiding: Braiding) -> RTraceForm:
    """Build and verify the weighted trace form for a braiding.

    Verifies, over the full matrix-unit basis of End(V), that the weighted
    partial trace in slot 2 of both conjugated copies R X1 R^-1 and
    R^-1 X1 R equals the weighted trace of X times the identity, and that
    the identity traces to N_q / q^N.
    """
    dim = braiding.dim
    q = braiding.q
    weights = [q ** (1 - 2 * i) for i in range(1, dim + 1)]
    form = RTraceForm(braiding, weights)

    if q.is_constant():
        expected_dim = Scalar.from_int(dim, braiding.param)  # N_q at q = 1
    else:
        expected_dim = qint(dim, braiding.param) * q ** (-dim)
    if form.dimension_value() != expected_dim:
        raise BraidingError("weighted trace of identity is not N_q/q^N")

    ident1 = TensorOperator.identity(dim, 1)
    for a in range(1, dim + 1):
        for b in range(1, dim + 1):
            x = TensorOperator.from_entries(dim, 1, {((a,), (b,)): ONE})
            x1 = x.embed(2, 1)
            over = braiding.op * x1 * braiding.inv
            under = braiding.inv * x1 * braiding.op
            target = ident1.scale(form.trace(x))
            if form.partial(over, 2) != target or form.partial(under, 2) != target:
                raise BraidingError("weighted trace form fails the copy-collapse property")
    return form

"""Sparse exact linear algebra over Scalar coefficients.

Vectors are dicts {key: Scalar} with no stored zeros; keys can be anything
hashable (index tuples, words).  Reduction picks the largest key under a
caller-supplied sort key as the leading entry, so the same machinery serves
operator rank computations and graded-lexicographic ideal reduction.
"""

from __future__ import annotations

from .scalars import Scalar


def vec_add_scaled(target: dict, src: dict, coeff: Scalar) -> None:
    """target += coeff * src, dropping entries that cancel to zero."""
    if coeff.is_zero():
        return
    for k, v in src.items():
        cur = target.get(k)
        if cur is None:
            target[k] = coeff * v
        else:
            s = cur + coeff * v
            if s.is_zero():
                del target[k]
            else:
                target[k] = s


def vec_scale(vec: dict, coeff: Scalar) -> dict:
    return {k: coeff * v for k, v in vec.items()}


class Triangular:
    """Growable triangular basis with unit leading coefficients.

    Rows are kept leading-reduced (each row's keys other than its pivot are
    strictly smaller), which makes remainders unique without full
    inter-reduction.
    """

    def __init__(self, sortkey=None):
        self.sortkey = sortkey if sortkey is not None else (lambda k: k)
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Unique remainder of vec modulo the current row span (vec consumed)."""
        pivots = self.pivots
        sortkey = self.sortkey
        while True:
            hit = None
            hk = None
            for k in vec:
                if k in pivots:
                    sk = sortkey(k)
                    if hk is None or sk > hk:
                        hk = sk
                        hit = k
            if hit is None:
                return vec
            coeff = vec.pop(hit)
            vec_add_scaled(vec, pivots[hit], -coeff)
            if hit in vec:  # pivot row has unit lead, so this cannot happen
                raise AssertionError("reduction failed to clear pivot key")

    def insert(self, vec: dict):
        """Reduce vec and adjoin it if independent; returns its pivot or None."""
        vec = self.reduce(dict(vec))
        if not vec:
            return None
        lead = max(vec, key=self.sortkey)
        inv = vec[lead].inverse()
        row = {k: inv * v for k, v in vec.items()}
        del row[lead]
        self.pivots[lead] = row
        return lead

    def row(self, pivot) -> dict:
        out = dict(self.pivots[pivot])
        from .scalars import ONE
        out[pivot] = ONE
        return out


def rank(rows, sortkey=None) -> int:
    tri = Triangular(sortkey)
    for r in rows:
        tri.insert(r)
    return len(tri)


def invert_table(rows: dict, keys: list) -> dict:
    """Inverse of the square matrix rows[r][c] over the given key list.

    Returns inv with inv[r][c] such that sum_k rows[r][k] * inv[k][c] = delta.
    Raises ArithmeticError when the matrix is singular.  Gauss-Jordan with
    the invariant that stored pivot rows never contain pivot columns.
    """
    from .scalars import ONE

    pos = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    pivot_of_col: dict = {}
    for r in keys:
        row = {pos[c]: v for c, v in rows.get(r, {}).items() if not v.is_zero()}
        row[pos[r] + n] = ONE
        while True:
            hit = None
            for c in row:
                if c < n and c in pivot_of_col:
                    hit = c
                    break
            if hit is None:
                break
            coeff = row.pop(hit)
            vec_add_scaled(row, pivot_of_col[hit], -coeff)
        lead = min((k for k in row if k < n), default=None)
        if lead is None:
            raise ArithmeticError("singular matrix")
        inv = row.pop(lead).inverse()
        newrow = {k: inv * v for k, v in row.items()}
        for other in pivot_of_col.values():
            if lead in other:
                coeff = other.pop(lead)
                vec_add_scaled(other, newrow, -coeff)
        pivot_of_col[lead] = newrow
    out = {}
    for c, row in pivot_of_col.items():
        rkey = keys[c]
        out[rkey] = {keys[k - n]: v for k, v in row.items() if not v.is_zero()}
    return out

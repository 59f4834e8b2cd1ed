"""Spectral verification in the regular representation of TL_k(n).

Elements of the finite algebra become exact-rational matrices of left
multiplication on the diagram basis (dimension Catalan(k), loop factor
specialized to q + 1/q).  Annihilation by the predicted spectrum is the
divisibility check prod_s (M - s I) = 0, which needs no diagonalizability
assumption; commutation is checked pairwise and exactly.

Two distinct rational values of q guard against accidental eigenvalue
collisions at a non-generic point: a disagreement between the two runs is
flagged for review rather than failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import qint
from . import tl_diagram as tl
from .algebra import AlgebraElement, FINITE
from .shapes import tl_paths

__all__ = [
    "RegRepMatrix",
    "regular_matrix",
    "annihilator_check",
    "commute_check",
    "predicted_m_spectrum",
    "repcheck_report",
]


@dataclass
class RegRepMatrix:
    """Left-multiplication matrix on the canonical diagram basis."""

    k: int
    q_val: Fraction
    basis: tuple
    entries: tuple  # tuple of row tuples, entries[i][j] = coefficient

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RegRepMatrix) and self.k == other.k
                and self.q_val == other.q_val and self.entries == other.entries)

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in row) for row in self.entries)

    def matmul(self, other: "RegRepMatrix") -> "RegRepMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        cols = list(zip(*other.entries))
        rows = []
        for i in range(n):
            ri = self.entries[i]
            rows.append(tuple(
                sum(ri[t] * cols[j][t] for t in range(n) if ri[t]) for j in range(n)))
        return RegRepMatrix(self.k, self.q_val, self.basis, tuple(rows))

    def add_scalar(self, s: Fraction) -> "RegRepMatrix":
        rows = []
        for i, row in enumerate(self.entries):
            rows.append(tuple(e + s if i == j else e for j, e in enumerate(row)))
        return RegRepMatrix(self.k, self.q_val, self.basis, tuple(rows))

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(self.dim))


def regular_matrix(elem: AlgebraElement, q_val: Fraction) -> RegRepMatrix:
    """Matrix of left multiplication by a finite element at rational q."""
    if elem.ring != FINITE:
        raise ValueError("the regular representation is defined for the finite ring")
    q_val = Fraction(q_val)
    if q_val in (0, 1, -1):
        raise ValueError("q must avoid 0 and +-1 (n would degenerate)")
    n_val = q_val + 1 / q_val
    basis = tl.enumerate_diagrams(elem.k)
    index = {d: j for j, d in enumerate(basis)}
    dim = len(basis)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for j, b in enumerate(basis):
        for d, coeff in elem.support.items():
            prod, loops = tl.compose(d, b)
            value = coeff.specialize(q_val, n_val=n_val) * n_val ** loops
            rows[index[prod]][j] += value
    return RegRepMatrix(elem.k, q_val, basis, tuple(tuple(r) for r in rows))


def annihilator_check(mat: RegRepMatrix, predicted) -> bool:
    """True iff prod over distinct predicted s of (M - s I) vanishes."""
    values = sorted(set(Fraction(s) for s in predicted))
    product = None
    for s in values:
        factor = mat.add_scalar(-s)
        product = factor if product is None else product.matmul(factor)
    return product.is_zero() if product is not None else mat.dim == 0


def commute_check(mats) -> bool:
    mats = list(mats)
    for a in mats:
        for b in mats:
            if a.dim != b.dim:
                raise ValueError("dimension mismatch")
    for i, a in enumerate(mats):
        for b in mats[i + 1:]:
            ab = a.matmul(b)
            ba = b.matmul(a)
            if ab.entries != ba.entries:
                return False
    return True


def predicted_m_spectrum(i: int, k: int, q_val: Fraction) -> list[Fraction]:
    """Predicted eigenvalues of psi(m_i) on the mu = empty branching graph.

    0 when some path has p^(i) != p^(i-2), and +-[j+1] at q_val for every
    label j = p^(i-1) occurring in a path with p^(i) = p^(i-2) (m = 0 for
    the empty mu, so no q^{-m} factor survives specialization).
    """
    q_val = Fraction(q_val)
    values = set()
    for p in tl_paths(0, k):
        if p.steps[i] == p.steps[i - 2]:
            bracket = qint(p.steps[i - 1] + 1).specialize(q_val)
            values.add(bracket)
            values.add(-bracket)
        else:
            values.add(Fraction(0))
    return sorted(values)


def repcheck_report(k: int, q_val: Fraction, indices=None) -> dict:
    """JSON-ready report: annihilation and commutation for psi(m_i)."""
    from .algebra import psi_finite

    q_val = Fraction(q_val)
    indices = list(indices) if indices else list(range(2, k + 1))
    mats = {}
    results = {}
    for i in indices:
        elem = psi_finite(i, k)
        mat = regular_matrix(elem, q_val)
        mats[i] = mat
        predicted = predicted_m_spectrum(i, k, q_val)
        results[i] = {
            "predicted_spectrum": [str(s) for s in predicted],
            "annihilated": annihilator_check(mat, predicted),
        }
    commuting = commute_check(list(mats.values()))
    dim = tl.catalan(k)
    return {
        "schema": 1,
        "k": k,
        "q": str(q_val),
        "matrix_dim": dim,
        "checks": results,
        "annihilated": all(r["annihilated"] for r in results.values()),
        "commuting": commuting,
    }

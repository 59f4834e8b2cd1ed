"""Symbolic eigenvalues of the commuting family on the branching graphs.

The single source of truth is the content formula: X^{eps_i} acts on the
basis vector of a standard tableau T by q^{2 c(T(i))}, where c is the
diagonal number col - row of the box containing i.  Everything else is
derived from it by exact Laurent arithmetic:

* the eigenvalue of M_i = (q - q^-1) m_i on a two-row path, obtained by
  assembling the defining X combination from the contents along the path
  (the m_i eigenvalue is the exact quotient by q - q^-1, and the
  exactness of that division is itself a correctness check);
* the central-element constants on the Hecke side (q^{2 sum c}) and the
  two-row side (the bracketed sum with a formal q - q^-1 denominator).

The published closed form for the two-row eigenvalue disagrees with its
own derivation in sign bookkeeping and in a q^{-m} factor;
:func:`reconcile` reports the derived value next to both printed variants
without deciding between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import IntLaurent, qint, exact_divide
from .shapes import (
    Partition, SkewShape, StandardTableau, TLPath,
    content, two_row_from_path_data,
)
from .algebra import ScalarPair

__all__ = [
    "x_eigenvalue",
    "jm_m_eigenvalue",
    "jm_eigenvalue",
    "EigenReport",
    "reconcile",
    "kappa_hecke_constant",
    "kappa_tl_constant",
    "content_sum_identity_holds",
    "path_contents",
]

_Q = IntLaurent.q_power
_Q_MINUS_QINV = IntLaurent({1: 1, -1: -1})


def x_eigenvalue(t: StandardTableau, i: int) -> IntLaurent:
    """q^{2 c(T(i))}: the X^{eps_i} eigenvalue on v_T."""
    if not 1 <= i <= t.size():
        raise IndexError(f"index {i} out of range for a tableau with {t.size()} boxes")
    return _Q(2 * content(t.box_of(i)))


def path_contents(p: TLPath, m: int) -> list[int]:
    """Contents c(T(1)), ..., c(T(k)) of the two-row tableau over mu."""
    mu = two_row_from_path_data(p.start, m)
    lam = [mu.row(1), mu.row(2)]
    out = []
    for a, b in zip(p.steps, p.steps[1:]):
        row = 1 if b == a + 1 else 2
        lam[row - 1] += 1
        out.append(content((row, lam[row - 1])))
    return out


def jm_m_eigenvalue(p: TLPath, i: int, m: int) -> IntLaurent:
    """Eigenvalue of M_i = (q - q^-1) m_i on the path vector v_p.

    For i = 1 this is q^{-1} q^{-2 c(T(1))}; for i >= 2 it is
    q^{i-2}(q^{-2 c(T(i))} - q^{-2} q^{-2 c(T(i-1))}).
    """
    if not 1 <= i <= p.length():
        raise IndexError(f"index {i} out of range for a path of length {p.length()}")
    contents = path_contents(p, m)
    if i == 1:
        return _Q(-1 - 2 * contents[0])
    ci, cim1 = contents[i - 1], contents[i - 2]
    return _Q(i - 2) * (_Q(-2 * ci) - _Q(-2 - 2 * cim1))


def jm_eigenvalue(p: TLPath, i: int, m: int):
    """Eigenvalue of m_i on v_p: exact quotient of the M_i value.

    Integral for i >= 2; for i = 1 the quotient is formal and the value is
    returned as a ScalarPair (numerator, q - q^-1).
    """
    numerator = jm_m_eigenvalue(p, i, m)
    if i == 1:
        return ScalarPair(numerator, _Q_MINUS_QINV)
    return exact_divide(numerator, _Q_MINUS_QINV)


def predicted_m_eigenvalue(p: TLPath, i: int, m: int) -> IntLaurent:
    """The structural form: 0 unless p^(i) = p^(i-2), else the signed
    bracket +-q^{-m}[p^(i-1)+1] (times q - q^-1), sign + for an up-down
    pair and - for a down-up pair."""
    if i < 2:
        raise IndexError("the structural form applies for i >= 2")
    if p.steps[i] != p.steps[i - 2]:
        return IntLaurent.zero()
    up_then_down = p.steps[i - 1] == p.steps[i - 2] + 1
    value = _Q(-m) * qint(p.steps[i - 1] + 1) * _Q_MINUS_QINV
    return value if up_then_down else -value


@dataclass(frozen=True)
class EigenReport:
    """Derived eigenvalue next to the printed closed forms."""

    path: TLPath
    i: int
    m: int
    derived: IntLaurent
    theorem_plus: IntLaurent
    theorem_minus: IntLaurent
    proof_form: IntLaurent
    match_flags: dict = field(compare=False)

    def to_json(self):
        return {
            "path": list(self.path.steps),
            "i": self.i,
            "m": self.m,
            "derived": self.derived.to_json(),
            "theorem_statement_plus": self.theorem_plus.to_json(),
            "theorem_statement_minus": self.theorem_minus.to_json(),
            "proof_form": self.proof_form.to_json(),
            "match_flags": dict(self.match_flags),
        }


def reconcile(p: TLPath, i: int, m: int) -> EigenReport:
    """Compare the derived m_i eigenvalue with both printed readings.

    The statement reads +-[p^(i-1)+1] according to whether
    p^(i-1) +- 1 = p^(i-2) = p^(i); the proof derives the opposite signs
    with an extra q^{-m}.  All three are reported; only the derived value
    is asserted anywhere else.
    """
    if i < 2:
        raise IndexError("reconciliation applies for i >= 2")
    derived_m = jm_m_eigenvalue(p, i, m)
    derived = exact_divide(derived_m, _Q_MINUS_QINV)
    zero = IntLaurent.zero()
    if p.steps[i] != p.steps[i - 2]:
        theorem_plus = theorem_minus = proof = zero
    else:
        bracket = qint(p.steps[i - 1] + 1)
        down_then_up = p.steps[i - 1] + 1 == p.steps[i - 2]
        # Statement: sign read off the case label p^(i-1) +- 1 = p^(i-2).
        theorem_plus = bracket if down_then_up else -bracket
        theorem_minus = -theorem_plus
        # Proof: -q^{-m}[a-b+1] in the up-down case, + in the down-up case.
        proof = _Q(-m) * bracket
        if not down_then_up:
            proof = -proof
    flags = {
        "theorem_plus_matches": derived == theorem_plus,
        "theorem_minus_matches": derived == theorem_minus,
        "proof_form_matches": derived == proof,
        "magnitude_matches": derived in (proof, -proof),
        "structural_form_matches": derived_m == predicted_m_eigenvalue(p, i, m),
    }
    return EigenReport(p, i, m, derived, theorem_plus, theorem_minus, proof, flags)


def kappa_hecke_constant(shape: SkewShape) -> IntLaurent:
    """q^{2 sum of contents} over the skew shape's boxes."""
    return _Q(2 * sum(content(b) for b in shape.boxes()))


def kappa_tl_constant(lam: Partition, mu: Partition, k: int) -> ScalarPair:
    """The central constant on the two-row side, as (numerator, q - q^-1).

    numerator = [k] q^{-(mu1+mu2)-(mu1-mu2)-1}
                + (q - q^-1) q^{-(mu1+mu2)} ([l1-l2+2] + [l1-l2+4] + ...
                                            + [mu1-mu2+k]).

    The exponent -(mu1+mu2)-(mu1-mu2)-1 on the bracket term is forced by
    the per-path summation over the family's eigenvalues (and by the
    worked numerical example behind the identity); the printed closed
    form carries +1 there, which already fails for the single-box shape.
    """
    if lam.nrows() > 2 or mu.nrows() > 2:
        raise ValueError("two-row shapes only")
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if lam.size() - mu.size() != k:
        raise ValueError(f"|lambda/mu| = {lam.size() - mu.size()} != k = {k}")
    m = mu.size()
    p0 = mu.row(1) - mu.row(2)
    pk = lam.row(1) - lam.row(2)
    numerator = qint(k) * _Q(-m - p0 - 1)
    bracket_sum = IntLaurent.zero()
    j = pk + 2
    while j <= p0 + k:
        bracket_sum = bracket_sum + qint(j)
        j += 2
    numerator = numerator + _Q_MINUS_QINV * _Q(-m) * bracket_sum
    return ScalarPair(numerator, _Q_MINUS_QINV)


def content_sum_identity_holds(lam: Partition, mu: Partition) -> bool:
    """The summation identity behind the two-row central constant:

    q^{l1+l2-2} sum_b q^{-2c(b)}
      = sum_{i=mu2}^{l2-1} [l1+l2-2i](q-q^-1) + [k] q^{mu2-mu1-1},

    with the -1 exponent that the worked numerical case fixes (the
    printed line says +1, which fails already for a single box).
    """
    shape = SkewShape(lam, mu)
    k = shape.size()
    lhs = IntLaurent.zero()
    for b in shape.boxes():
        lhs = lhs + _Q(-2 * content(b))
    lhs = _Q(lam.row(1) + lam.row(2) - 2) * lhs
    rhs = qint(k) * _Q(mu.row(2) - mu.row(1) - 1)
    for i in range(mu.row(2), lam.row(2)):
        rhs = rhs + qint(lam.row(1) + lam.row(2) - 2 * i) * _Q_MINUS_QINV
    return lhs == rhs

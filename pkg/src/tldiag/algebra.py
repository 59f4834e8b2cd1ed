"""Linear algebra over diagrams and the commuting Jucys-Murphy family.

Elements are finite formal sums diagram -> scalar, over the finite or the
affine diagram algebra.  Products expand bilinearly; each removed middle
loop multiplies by the loop parameter n (contractible) or x_d (winding
class d).  In the finite algebra n is the Laurent polynomial q + q^-1 by
default, with an opaque-symbol mode for the generic one-parameter algebra.

The family M_i = (q - q^-1) m_i is built in three independent ways:

* ``jm_definition`` -- from the X^{-eps_i} words,
* ``jm_recursion``  -- from the two-term recursion in e_{i-1} with the
  pole-loop constant x,
* ``jm_closed_form`` -- from the closed-form coefficients on the diagram
  classes d_gamma and their pole-wrapped companions d_gamma^*.

Two evaluation styles are provided for the affine X symbols and everything
derived from them.  The ``pole`` style takes X^{-eps_1} to be the single
diagram whose first strand winds once around the pole; it is the style in
which the diagram-class expansions hold verbatim, with x = x_1.  The
``word`` style takes X^{-eps_1} = tau T_{k-1} ... T_1 with tau the
rotation diagram; it is the style in which the braid relations hold on
the nose, so the X's (and hence the M_i) commute exactly and tau^k equals
the product of all X^{-eps_i}.  The two styles agree after the finite
specialization.  Each verified identity is checked in the style where it
holds exactly; see the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Literal

from .scalars import IntLaurent, ParamScalar, qint, exact_divide, NonDivisibleError
from . import tl_diagram as tl
from . import affine_diagram as aff
from .tl_diagram import TLDiagram
from .affine_diagram import AffineDiagram

__all__ = [
    "FINITE",
    "AFFINE",
    "AlgebraElement",
    "finite_element",
    "affine_element",
    "evaluate",
    "evaluate_product",
    "x_element",
    "jm_definition",
    "jm_recursion",
    "closed_form_coeff",
    "jm_closed_form",
    "psi_finite",
    "psi_image",
    "central_K",
    "commutator",
    "d_gamma_element",
    "d_gamma_star_element",
    "murphy_class",
    "star_compositions",
    "ScalarPair",
]

FINITE = "finite"
AFFINE = "affine"

Style = Literal["pole", "word"]

_Q = IntLaurent.q_power
_one = ParamScalar.one()


def _n_value(opaque_n: bool) -> ParamScalar:
    if opaque_n:
        return ParamScalar.n_symbol()
    return ParamScalar.from_laurent(IntLaurent({1: 1, -1: 1}))


class AlgebraElement:
    """A finite formal sum of diagrams with ParamScalar coefficients."""

    __slots__ = ("ring", "k", "support", "opaque_n", "_hash")

    def __init__(self, ring: str, k: int, support=None, opaque_n: bool = False):
        if ring not in (FINITE, AFFINE):
            raise ValueError(f"unknown ring {ring!r}")
        clean = {}
        if support:
            for d, c in support.items():
                if isinstance(c, IntLaurent):
                    c = ParamScalar.from_laurent(c)
                if not c.is_zero():
                    if d.k != k:
                        raise ValueError("diagram size does not match element k")
                    clean[d] = c
        self.ring = ring
        self.k = k
        self.support = clean
        self.opaque_n = opaque_n
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(ring: str, k: int, opaque_n: bool = False) -> "AlgebraElement":
        return AlgebraElement(ring, k, {}, opaque_n)

    @staticmethod
    def unit(ring: str, k: int, opaque_n: bool = False) -> "AlgebraElement":
        d = tl.identity(k) if ring == FINITE else aff.affine_identity(k)
        return AlgebraElement(ring, k, {d: _one}, opaque_n)

    def scalar(self, c) -> "AlgebraElement":
        """c times the identity of this element's ring."""
        if isinstance(c, (int, IntLaurent)):
            c = _coerce(c)
        d = tl.identity(self.k) if self.ring == FINITE else aff.affine_identity(self.k)
        return AlgebraElement(self.ring, self.k, {d: c}, self.opaque_n)

    # -- ring operations --------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.ring != other.ring or self.k != other.k:
            raise ValueError("ring or size mismatch")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.support)
        for d, c in other.support.items():
            s = out.get(d)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
        return AlgebraElement(self.ring, self.k, out, self.opaque_n)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.ring, self.k,
                              {d: -c for d, c in self.support.items()}, self.opaque_n)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = _coerce(c)
        return AlgebraElement(self.ring, self.k,
                              {d: coeff * c for d, coeff in self.support.items()},
                              self.opaque_n)

    def __mul__(self, other):
        if isinstance(other, (int, IntLaurent, ParamScalar)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        n_scalar = _n_value(self.opaque_n)
        out: dict = {}
        for d1, c1 in self.support.items():
            for d2, c2 in other.support.items():
                if self.ring == FINITE:
                    d, loops = tl.compose(d1, d2)
                    c = c1 * c2
                    for _ in range(loops):
                        c = c * n_scalar
                else:
                    d, profile = aff.compose_affine(d1, d2)
                    c = c1 * c2
                    for _ in range(profile.contractible):
                        c = c * n_scalar
                    for w in profile.winding:
                        c = c * ParamScalar.x(w)
                s = out.get(d)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(d, None)
                else:
                    out[d] = s
        return AlgebraElement(self.ring, self.k, out, self.opaque_n)

    def __rmul__(self, other):
        if isinstance(other, (int, IntLaurent, ParamScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers are not defined for elements")
        result = AlgebraElement.unit(self.ring, self.k, self.opaque_n)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.support

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.ring == other.ring
                and self.k == other.k and self.support == other.support)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.k,
                               frozenset(self.support.items())))
        return self._hash

    # -- queries ----------------------------------------------------------

    def coefficient(self, d) -> ParamScalar:
        return self.support.get(d, ParamScalar.zero())

    def max_winding_class(self) -> int:
        return max((c.max_x_degree() for c in self.support.values()), default=0)

    def sorted_support(self):
        return sorted(self.support.items(), key=lambda item: item[0].edges)

    def __str__(self) -> str:
        from .render import render_element
        return render_element(self)

    def __repr__(self) -> str:
        return f"<AlgebraElement {self.ring} k={self.k} terms={len(self.support)}>"

    def to_json(self):
        return [
            {"diagram": d.to_json(), "coefficient": c.to_json()}
            for d, c in self.sorted_support()
        ]


def _coerce(c) -> ParamScalar:
    if isinstance(c, ParamScalar):
        return c
    if isinstance(c, IntLaurent):
        return ParamScalar.from_laurent(c)
    if isinstance(c, int):
        return ParamScalar.from_laurent(IntLaurent.from_int(c))
    raise TypeError(f"cannot coerce {c!r} to a scalar")


def finite_element(k: int, d: TLDiagram, coeff=1, opaque_n: bool = False) -> AlgebraElement:
    return AlgebraElement(FINITE, k, {d: _coerce(coeff)}, opaque_n)


def affine_element(k: int, d: AffineDiagram, coeff=1) -> AlgebraElement:
    return AlgebraElement(AFFINE, k, {d: _coerce(coeff)})


# ---------------------------------------------------------------------------
# Generator evaluation


def _gen_e_element(i: int, k: int, ring: str, opaque_n: bool) -> AlgebraElement:
    if ring == FINITE:
        return finite_element(k, tl.e_diagram(i, k), 1, opaque_n)
    return affine_element(k, aff.gen_e(i, k))


def _t_element(i: int, k: int, ring: str, opaque_n: bool, inverse: bool,
               convention: str = "q_minus_e") -> AlgebraElement:
    """T_i = q - e_i and T_i^{-1} = q^{-1} - e_i (or the alternative map)."""
    e = _gen_e_element(i, k, ring, opaque_n)
    unit = AlgebraElement.unit(ring, k, opaque_n)
    if convention == "q_minus_e":
        qpow = _Q(-1) if inverse else _Q(1)
        return unit.scale(qpow) - e
    if convention == "e_minus_qinv":
        # Alternative surjection T_i -> e_i - q^{-1}; inverse is e_i - q.
        qpow = _Q(1) if inverse else _Q(-1)
        return e - unit.scale(qpow)
    raise ValueError(f"unknown T convention {convention!r}")


@lru_cache(maxsize=None)
def x_element(i: int, k: int, inverse: bool, style: Style = "pole") -> AlgebraElement:
    """The element X^{eps_i} (or X^{-eps_i}) in the affine algebra.

    pole style: X^{-eps_1} is the wound-identity diagram; X^{-eps_i} is its
    conjugate T_{i-1}^{-1} ... T_1^{-1} X^{-eps_1} T_1^{-1} ... T_{i-1}^{-1}.
    word style: X^{-eps_1} = tau T_{k-1} ... T_1 with tau the rotation.
    """
    if not 1 <= i <= k:
        raise ValueError(f"X index {i} out of range for k={k}")
    if style == "pole":
        base = affine_element(k, aff.wound_identity(k, 1 if inverse is False else -1))
        # X^{eps_1} winds +1; X^{-eps_1} winds -1.
    elif style == "word":
        tau = affine_element(k, aff.gen_tau(k))
        tau_inv = affine_element(k, aff.gen_tau_inv(k))
        if inverse:
            base = tau
            for j in range(k - 1, 0, -1):
                base = base * _t_element(j, k, AFFINE, False, inverse=False)
        else:
            base = AlgebraElement.unit(AFFINE, k)
            for j in range(1, k):
                base = base * _t_element(j, k, AFFINE, False, inverse=True)
            base = base * tau_inv
    else:
        raise ValueError(f"unknown style {style!r}")
    elem = base
    for j in range(1, i):
        t = _t_element(j, k, AFFINE, False, inverse=inverse)
        elem = t * elem * t
    return elem


_ATOM_KINDS = {"e", "tau", "tau_inv", "T", "T_inv", "X", "X_inv", "scalar"}


def evaluate(word: Iterable, k: int, ring: str, *, style: Style = "pole",
             opaque_n: bool = False, t_convention: str = "q_minus_e") -> AlgebraElement:
    """Evaluate a product of generator symbols.

    ``word`` is a sequence of atoms ``('e', i)``, ``('tau',)``,
    ``('tau_inv',)``, ``('T', i)``, ``('T_inv', i)``, ``('X', i)``,
    ``('X_inv', i)``, or ``('scalar', c)``.  X and tau require the affine
    ring except that X^{eps_1} maps to 1 in the finite ring (and general
    X^{eps_i} to its conjugate by the T images).
    """
    result = AlgebraElement.unit(ring, k, opaque_n)
    for atom in word:
        kind = atom[0]
        if kind not in _ATOM_KINDS:
            raise ValueError(f"unknown atom {atom!r}")
        if kind == "scalar":
            result = result.scale(_coerce(atom[1]))
            continue
        if kind == "e":
            i = atom[1]
            if ring == FINITE and not 1 <= i <= k - 1:
                raise ValueError(f"e_{i} out of range in the finite ring")
            result = result * _gen_e_element(i, k, ring, opaque_n)
            continue
        if kind in ("tau", "tau_inv"):
            if ring != AFFINE:
                raise ValueError("tau requires the affine ring")
            d = aff.gen_tau(k) if kind == "tau" else aff.gen_tau_inv(k)
            result = result * affine_element(k, d)
            continue
        if kind in ("T", "T_inv"):
            result = result * _t_element(atom[1], k, ring, opaque_n,
                                         inverse=(kind == "T_inv"),
                                         convention=t_convention)
            continue
        # X atoms
        i = atom[1]
        inverse = kind == "X_inv"
        if ring == AFFINE:
            result = result * x_element(i, k, inverse, style)
        else:
            # psi: X^{eps_1} -> 1, so X^{eps_i} -> T-conjugates of 1.
            if not 1 <= i <= k:
                raise ValueError(f"X index {i} out of range for k={k}")
            elem = AlgebraElement.unit(FINITE, k, opaque_n)
            for j in range(1, i):
                t = _t_element(j, k, FINITE, opaque_n, inverse=inverse,
                               convention=t_convention)
                elem = t * elem * t
            result = result * elem
    return result


def evaluate_product(atoms, k: int, ring: str, **kw) -> AlgebraElement:
    return evaluate(atoms, k, ring, **kw)


# ---------------------------------------------------------------------------
# The Jucys-Murphy family M_i = (q - q^-1) m_i


@lru_cache(maxsize=None)
def jm_definition(i: int, k: int, style: Style = "pole") -> AlgebraElement:
    """M_i from the defining X words: M_1 = q^-1 X^{-eps_1},
    M_i = q^{i-2}(X^{-eps_i} - q^-2 X^{-eps_{i-1}})."""
    if not 1 <= i <= k:
        raise ValueError(f"index {i} out of range for k={k}")
    if i == 1:
        return x_element(1, k, True, style).scale(_Q(-1))
    xi = x_element(i, k, True, style)
    xim1 = x_element(i - 1, k, True, style)
    return (xi - xim1.scale(_Q(-2))).scale(_Q(i - 2))


@lru_cache(maxsize=None)
def jm_recursion(i: int, k: int, style: Style = "pole") -> AlgebraElement:
    """M_i from the cleared recursion

    M_i = q^{i-2} x e_{i-1} - (e_{i-1} M_{i-1} + M_{i-1} e_{i-1})
          - sum_{l=1}^{i-2} ([i-l] - [i-l-2]) M_l e_{i-1},

    where x is the pole-loop constant: the scalar with
    e_1 X^{-eps_1} e_1 = x e_1, computed in the chosen style rather than
    assumed.  In the pole style x = x_1 on the nose.
    """
    if not 1 <= i <= k:
        raise ValueError(f"index {i} out of range for k={k}")
    if i == 1:
        return jm_definition(1, k, style)
    x = _pole_loop_constant(k, style)
    e = _gen_e_element(i - 1, k, AFFINE, False)
    prev = jm_recursion(i - 1, k, style)
    out = e.scale(x * _Q(i - 2)) - (e * prev + prev * e)
    for ell in range(1, i - 1):
        coeff = qint(i - ell) - qint(i - ell - 2)
        out = out - (jm_recursion(ell, k, style) * e).scale(coeff)
    return out


@lru_cache(maxsize=None)
def _pole_loop_constant(k: int, style: Style) -> ParamScalar:
    """The scalar x with e_1 X^{-eps_1} e_1 = x e_1 (must be scalar)."""
    e1 = _gen_e_element(1, k, AFFINE, False)
    sandwich = e1 * x_element(1, k, True, style) * e1
    target = aff.gen_e(1, k)
    if set(sandwich.support) != {target}:
        raise ArithmeticError(
            f"e_1 X^(-eps_1) e_1 is not scalar * e_1 in style {style!r}: "
            f"{sorted(map(str, sandwich.support))}")
    return sandwich.support[target]


@lru_cache(maxsize=None)
def _block_products(a: int, r: int, k: int) -> frozenset:
    """Distinct diagrams from products of e_a, ..., e_{a+r-2}, each once.

    These are the full-cycle diagrams on the interval block {a..a+r-1}
    that actually occur in the commuting family.  There are 2^{r-2} of
    them (one choice per adjacent generator pair); for r <= 4 this is
    every diagram with that block as its cycle type, from r = 5 on it is
    a proper subclass.  All such products are loop-free.
    """
    from itertools import permutations

    if r == 1:
        return frozenset({tl.identity(k)})
    out = set()
    for perm in permutations(range(a, a + r - 1)):
        d = tl.e_diagram(perm[0], k)
        for j in perm[1:]:
            d, loops = tl.compose(d, tl.e_diagram(j, k))
            assert loops == 0
        out.add(d)
    return frozenset(out)


@lru_cache(maxsize=None)
def murphy_class(gamma: tuple[int, ...], k: int) -> tuple[TLDiagram, ...]:
    """The diagrams of cycle type gamma carrying the family's expansion.

    Blockwise products of distinct cup generators, extended by straight
    strands on the trailing 1s.  Equals the full cycle-type class
    d_gamma(gamma, k) whenever every part is at most 4; for larger parts
    it is the proper subclass that the word and recursion constructions
    actually produce (2^{r-2} diagrams per part of size r).
    """
    padded = tl.pad_composition(gamma, k)
    current = [tl.identity(k)]
    pos = 1
    for part in padded:
        if part > 1:
            new = []
            for d in current:
                for b in _block_products(pos, part, k):
                    prod, loops = tl.compose(d, b)
                    assert loops == 0
                    new.append(prod)
            current = new
        pos += part
    return tuple(sorted(set(current), key=lambda d: d.edges))


def star_compositions(i: int) -> list[tuple[int, ...]]:
    """Compositions of i of the shape 1^{b_1} r_1 ... 1^{b_l} r_l, r_l > 1."""
    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    return [g for g in compositions(i) if g and g[-1] > 1]


def _parse_star_shape(gamma: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Split gamma into (b_1, ..., b_l) and (r_1, ..., r_l)."""
    bs, rs = [], []
    run = 0
    for part in gamma:
        if part == 1:
            run += 1
        else:
            bs.append(run)
            rs.append(part)
            run = 0
    if run:
        raise ValueError(f"{gamma}: trailing 1s (r_l must be > 1)")
    if not rs:
        raise ValueError(f"{gamma}: no part > 1")
    return bs, rs


def closed_form_coeff(i: int, gamma) -> tuple[ParamScalar, ParamScalar]:
    """Coefficients of d_gamma and d_gamma^* in M_i.

    nonstar = (-1)^{|g|-l(g)-1} q^{b_1} x prod_{j>1}([b_j+2]-[b_j])
    star    = (-1)^{|g|-l(g)}   q^{-1} ([b_1+1]-[b_1-1]) prod_{j>1}([b_j+2]-[b_j])

    with l(g) = l + b_1 + ... + b_l and the convention [-1] = 0.
    """
    gamma = tuple(int(g) for g in gamma)
    if sum(gamma) != i:
        raise ValueError(f"composition {gamma} does not sum to {i}")
    if i < 2:
        raise ValueError("closed form applies for i >= 2")
    bs, rs = _parse_star_shape(gamma)
    ell_g = len(rs) + sum(bs)
    tail = IntLaurent.one()
    for b in bs[1:]:
        tail = tail * (qint(b + 2) - qint(b))
    sign = -1 if (i - ell_g - 1) % 2 else 1
    nonstar = ParamScalar.x(1) * (_Q(bs[0], sign) * tail)
    star_lau = _Q(-1, -sign) * (qint(bs[0] + 1) - qint(bs[0] - 1)) * tail
    return nonstar, ParamScalar.from_laurent(star_lau)


def d_gamma_element(gamma, k: int, restricted: bool = True) -> AlgebraElement:
    """The class sum d_gamma as an affine element (windings zero).

    With ``restricted`` (the default) the sum runs over the Murphy class;
    otherwise over every diagram of the given cycle type.
    """
    members = murphy_class(tuple(gamma), k) if restricted else tl.d_gamma(gamma, k)
    out = AlgebraElement.zero(AFFINE, k)
    for d in members:
        out = out + affine_element(k, aff.embed_finite(d))
    return out


def d_gamma_star_element(gamma, k: int, restricted: bool = True) -> AlgebraElement:
    """The pole-wrapped companion d_gamma^* (sum of star_wrap images)."""
    members = murphy_class(tuple(gamma), k) if restricted else tl.d_gamma(gamma, k)
    out = AlgebraElement.zero(AFFINE, k)
    for d in members:
        for wrapped in aff.star_wrap(d):
            out = out + affine_element(k, wrapped)
    return out


@lru_cache(maxsize=None)
def jm_closed_form(i: int, k: int) -> AlgebraElement:
    """M_i as the closed-form sum over diagram classes (pole style)."""
    if not 2 <= i <= k:
        raise ValueError(f"closed form needs 2 <= i <= k, got i={i}, k={k}")
    out = AlgebraElement.zero(AFFINE, k)
    for gamma in star_compositions(i):
        nonstar, star = closed_form_coeff(i, gamma)
        out = out + d_gamma_element(gamma, k).scale(nonstar)
        out = out + d_gamma_star_element(gamma, k).scale(star)
    return out


class ScalarPair(tuple):
    """A formal quotient (numerator, denominator) of scalars."""

    def __new__(cls, num, den):
        return super().__new__(cls, (num, den))

    @property
    def numerator(self):
        return self[0]

    @property
    def denominator(self):
        return self[1]


_Q_MINUS_QINV = IntLaurent({1: 1, -1: -1})


def psi_finite(i: int, k: int, opaque_n: bool = False):
    """m_i in the finite Temperley-Lieb algebra.

    For i >= 2 this is the integral element
    sum_gamma (-1)^{|g|-l(g)-1} [b_1+1] prod_{j>1}([b_j+2]-[b_j]) d_gamma;
    it must agree with the exact division by (q - q^-1) of the specialized
    affine M_i, and that agreement is asserted.  For i = 1 the element is
    the non-integral scalar q^-1/(q - q^-1), returned as a ScalarPair.
    """
    if i == 1:
        return ScalarPair(_Q(-1), _Q_MINUS_QINV)
    if not 2 <= i <= k:
        raise ValueError(f"index {i} out of range for k={k}")
    out = AlgebraElement.zero(FINITE, k, opaque_n)
    for gamma in star_compositions(i):
        bs, rs = _parse_star_shape(gamma)
        ell_g = len(rs) + sum(bs)
        coeff = qint(bs[0] + 1)
        for b in bs[1:]:
            coeff = coeff * (qint(b + 2) - qint(b))
        if (i - ell_g - 1) % 2:
            coeff = -coeff
        for d in murphy_class(gamma, k):
            out = out + finite_element(k, d, coeff, opaque_n)
    if not opaque_n:
        other = psi_image(jm_definition(i, k, "pole"))
        try:
            other = AlgebraElement(FINITE, k, {
                d: c.divide_laurent(_Q_MINUS_QINV) for d, c in other.support.items()})
        except NonDivisibleError as exc:
            raise NonDivisibleError(
                f"specialized M_{i} is not divisible by q - q^-1") from exc
        if other != out:
            raise ArithmeticError(
                f"psi(m_{i}) mismatch between the closed form and the "
                f"specialized definition at k={k}")
    return out


def psi_image(elem: AlgebraElement) -> AlgebraElement:
    """The finite specialization: erase windings, x_d -> [2], n stays.

    Defined on elements whose underlying matchings are planar (true for
    every pole-style M_i).  This realizes X^{eps_1} -> 1: the wound
    identity maps to the identity diagram.
    """
    if elem.ring == FINITE:
        return elem
    two = IntLaurent({1: 1, -1: 1})
    out = AlgebraElement.zero(FINITE, elem.k)
    for d, c in elem.support.items():
        subs = {cls: two for cls in c.parameters_used()}
        coeff = c.substitute_params(subs)
        out = out + finite_element(elem.k, d.underlying_finite(), coeff)
    return out


@lru_cache(maxsize=None)
def central_K(k: int, style: Style = "word") -> AlgebraElement:
    """K = M_k + [2] M_{k-1} + ... + [k] M_1 (central in the word style)."""
    if k < 1:
        raise ValueError("k must be positive")
    out = AlgebraElement.zero(AFFINE, k)
    for j in range(1, k + 1):
        out = out + jm_definition(j, k, style).scale(qint(k - j + 1))
    return out


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a

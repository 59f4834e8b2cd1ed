"""Exact coefficient arithmetic for the diagram algebras.

Everything here is integer-exact: Laurent polynomials in a single variable
``q`` with arbitrary-precision integer coefficients, quantum integers
``[k] = (q^k - q^-k)/(q - q^-1)``, and polynomials in the formal loop
parameters ``x_1, x_2, ...`` (one per winding class of a non-contractible
loop) with Laurent-polynomial coefficients.  An optional opaque symbol ``n``
is available for computations in the generic one-parameter Temperley-Lieb
algebra; in all Jucys-Murphy work ``n`` is fixed to ``q + q^-1``.

No floating point appears anywhere; rational specializations use
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "IntLaurent",
    "ParamScalar",
    "NPoly",
    "qint",
    "exact_divide",
    "to_n_basis",
    "specialize",
    "NonDivisibleError",
    "UnassignedParameterError",
]


class NonDivisibleError(ArithmeticError):
    """Raised when an exact Laurent quotient does not exist."""


class UnassignedParameterError(ValueError):
    """Raised when a specialization is missing a value for a parameter."""


class IntLaurent:
    """A Laurent polynomial in q with integer coefficients.

    Stored as a mapping ``exponent -> coefficient`` with no zero
    coefficients (canonical form).  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "IntLaurent":
        return _ZERO

    @staticmethod
    def one() -> "IntLaurent":
        return _ONE

    @staticmethod
    def q_power(e: int, coeff: int = 1) -> "IntLaurent":
        return IntLaurent({e: coeff})

    @staticmethod
    def from_int(c: int) -> "IntLaurent":
        return IntLaurent({0: c})

    # -- basic queries ------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntLaurent") -> "IntLaurent":
        if not isinstance(other, IntLaurent):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = IntLaurent.__new__(IntLaurent)
        res._terms = out
        res._hash = None
        return res

    def __neg__(self) -> "IntLaurent":
        res = IntLaurent.__new__(IntLaurent)
        res._terms = {e: -c for e, c in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other: "IntLaurent") -> "IntLaurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            res = IntLaurent.__new__(IntLaurent)
            res._terms = {e: c * other for e, c in self._terms.items()}
            res._hash = None
            return res
        if not isinstance(other, IntLaurent):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = IntLaurent.__new__(IntLaurent)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntLaurent":
        if n < 0:
            inv = exact_divide(_ONE, self)
            return inv ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, IntLaurent) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation and rendering ---------------------------------------

    def specialize(self, q_val: Fraction) -> Fraction:
        """Evaluate exactly at a nonzero rational q."""
        q_val = Fraction(q_val)
        if q_val == 0:
            raise ValueError("cannot specialize at q = 0")
        return sum((c * q_val ** e for e, c in self._terms.items()), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntLaurent({self._terms!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items(), reverse=True)}


_ZERO = IntLaurent()
_ONE = IntLaurent({0: 1})


def qint(k: int) -> IntLaurent:
    """The quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.

    Defined for k >= -1 only, with [0] = [-1] = 0.  The extension to
    k = -1 is the local convention used in the closed-form coefficients.
    """
    if k < -1:
        raise ValueError(f"[k] is only defined for k >= -1, got {k}")
    if k <= 0:
        return _ZERO
    return IntLaurent({k - 1 - 2 * j: 1 for j in range(k)})


def qbracket_curly(k: int) -> IntLaurent:
    """The symmetric sum {k} = q^k + q^-k (with {0} = 2)."""
    if k == 0:
        return IntLaurent({0: 2})
    return IntLaurent({k: 1, -k: 1})


def exact_divide(a: IntLaurent, b: IntLaurent) -> IntLaurent:
    """Exact quotient in Z[q, q^-1]; raises NonDivisibleError otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return _ZERO
    # Shift both operands to ordinary polynomials and long-divide over Q.
    va, vb = a.valuation(), b.valuation()
    da, db = a.degree() - va, b.degree() - vb
    if da < db:
        raise NonDivisibleError(f"({a}) is not divisible by ({b})")
    num = [Fraction(a._terms.get(va + i, 0)) for i in range(da + 1)]
    den = [Fraction(b._terms.get(vb + i, 0)) for i in range(db + 1)]
    quot = [Fraction(0)] * (da - db + 1)
    for i in range(da - db, -1, -1):
        coeff = num[db + i] / den[db]
        quot[i] = coeff
        if coeff:
            for j in range(db + 1):
                num[i + j] -= coeff * den[j]
    if any(num):
        raise NonDivisibleError(f"({a}) is not divisible by ({b})")
    out = {}
    for i, c in enumerate(quot):
        if c:
            if c.denominator != 1:
                raise NonDivisibleError(
                    f"({a}) / ({b}) has non-integer coefficients")
            out[va - vb + i] = int(c)
    return IntLaurent(out)


class NPoly:
    """An ordinary integer polynomial in n, coefficient list by power."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, NPoly) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def evaluate_laurent(self, n_val: IntLaurent) -> IntLaurent:
        """Substitute a Laurent polynomial for n."""
        result = _ZERO
        power = _ONE
        for c in self.coefficients:
            if c:
                result = result + power * c
            power = power * n_val
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for e in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "n" if e == 1 else f"n^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"NPoly({list(self.coefficients)!r})"


def to_n_basis(k: int) -> NPoly:
    """Write [k] as an integer polynomial in n = q + q^-1.

    Follows the two triangular transitions: [k] is a sum of the symmetric
    monomials {m} = q^m + q^-m, and each {m} is a ±binomial combination of
    the powers n^j = (q + q^-1)^j.  Both transitions are unitriangular, so
    the coefficients stay integral; this is asserted along the way.
    """
    if k < 1:
        raise ValueError(f"to_n_basis requires k >= 1, got {k}")
    # [k] in the {m} basis: [k] = {k-1} + {k-3} + ..., odd tail is {0}/2.
    curly = {}
    m = k - 1
    while m > 0:
        curly[m] = curly.get(m, 0) + 1
        m -= 2
    half_const = Fraction(1, 2) if (k - 1) % 2 == 0 and k % 2 == 1 else None
    # {m} in the n^j basis by downward elimination: {m} = n^m - sum of
    # binomial multiples of lower {j}; cache the expansions.
    curly_in_n: dict[int, list[int]] = {0: [2]}

    def expand_curly(m: int) -> list[int]:
        if m in curly_in_n:
            return curly_in_n[m]
        # n^m = sum_j C(m, j) q^{m-2j} = sum over {m-2j} pairs
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        from math import comb

        correction: dict[int, Fraction] = {}
        for j in range(1, m // 2 + 1):
            low = m - 2 * j
            c = comb(m, j)
            if low == 0:
                correction[0] = correction.get(0, Fraction(0)) + Fraction(c, 2)
            else:
                correction[low] = correction.get(low, Fraction(0)) + Fraction(c)
        result = [Fraction(c) for c in coeffs]
        for low, mult in correction.items():
            sub = expand_curly(low)
            for i, s in enumerate(sub):
                result[i] -= mult * s
        out = []
        for c in result:
            assert c.denominator == 1, "curly-to-n transition must be integral"
            out.append(int(c))
        curly_in_n[m] = out
        return out

    total = [Fraction(0)] * k
    for m2, mult in curly.items():
        for i, c in enumerate(expand_curly(m2)):
            total[i] += mult * c
    if half_const is not None:
        for i, c in enumerate(expand_curly(0)):
            total[i] += half_const * c
    coeffs = []
    for c in total:
        assert c.denominator == 1, "[k] in the n basis must be integral"
        coeffs.append(int(c))
    poly = NPoly(coeffs)
    assert poly.evaluate_laurent(IntLaurent({1: 1, -1: 1})) == qint(k)
    return poly


class ParamScalar:
    """A polynomial in the loop parameters with IntLaurent coefficients.

    A monomial is a finite multiset of generators encoded as a sorted tuple
    of integers: ``d >= 1`` stands for one factor of the winding-class
    parameter ``x_d`` (``x_d = x_{-d}``, loops are unoriented), and ``0``
    stands for one factor of the opaque loop symbol ``n`` (used only in the
    generic finite algebra).  The empty tuple is the parameter-free part.
    No stored coefficient is zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], IntLaurent] | None = None):
        clean = {}
        if terms:
            for deg, coeff in terms.items():
                if not coeff.is_zero():
                    clean[tuple(sorted(deg))] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "ParamScalar":
        return _P_ZERO

    @staticmethod
    def one() -> "ParamScalar":
        return _P_ONE

    @staticmethod
    def from_laurent(c: IntLaurent) -> "ParamScalar":
        return ParamScalar({(): c})

    @staticmethod
    def x(d: int) -> "ParamScalar":
        if d < 1:
            raise ValueError("winding classes are positive integers")
        return ParamScalar({(d,): _ONE})

    @staticmethod
    def n_symbol() -> "ParamScalar":
        return ParamScalar({(0,): _ONE})

    # -- queries --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], IntLaurent]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_part(self) -> IntLaurent:
        return self._terms.get((), _ZERO)

    def parameters_used(self) -> set[int]:
        return {d for deg in self._terms for d in deg}

    def max_x_degree(self) -> int:
        """Largest winding class appearing (0 if none)."""
        classes = [d for deg in self._terms for d in deg if d >= 1]
        return max(classes, default=0)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "ParamScalar") -> "ParamScalar":
        if not isinstance(other, ParamScalar):
            return NotImplemented
        out = dict(self._terms)
        for deg, c in other._terms.items():
            s = out.get(deg, _ZERO) + c
            if s.is_zero():
                out.pop(deg, None)
            else:
                out[deg] = s
        res = ParamScalar.__new__(ParamScalar)
        res._terms = out
        res._hash = None
        return res

    def __neg__(self) -> "ParamScalar":
        res = ParamScalar.__new__(ParamScalar)
        res._terms = {deg: -c for deg, c in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other: "ParamScalar") -> "ParamScalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = ParamScalar.from_laurent(IntLaurent.from_int(other))
        elif isinstance(other, IntLaurent):
            other = ParamScalar.from_laurent(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        out: dict[tuple[int, ...], IntLaurent] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                deg = tuple(sorted(d1 + d2))
                s = out.get(deg, _ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(deg, None)
                else:
                    out[deg] = s
        res = ParamScalar.__new__(ParamScalar)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamScalar) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def divide_laurent(self, b: IntLaurent) -> "ParamScalar":
        """Divide every coefficient exactly by b."""
        return ParamScalar({deg: exact_divide(c, b) for deg, c in self._terms.items()})

    def substitute_params(self, values: Mapping[int, IntLaurent]) -> "ParamScalar":
        """Replace parameters by Laurent values (e.g. x_1 -> [2])."""
        out = _P_ZERO
        for deg, coeff in self._terms.items():
            factor = coeff
            for d in deg:
                if d not in values:
                    raise UnassignedParameterError(
                        f"no value assigned for parameter {'n' if d == 0 else f'x{d}'}")
                factor = factor * values[d]
            out = out + ParamScalar.from_laurent(factor)
        return out

    # -- evaluation and rendering ---------------------------------------

    def specialize(self, q_val: Fraction,
                   x_vals: Mapping[int, Fraction] | None = None,
                   n_val: Fraction | None = None) -> Fraction:
        """Exact rational evaluation; all occurring parameters need values."""
        q_val = Fraction(q_val)
        if q_val == 0:
            raise ValueError("cannot specialize at q = 0")
        x_vals = x_vals or {}
        total = Fraction(0)
        for deg, coeff in self._terms.items():
            factor = coeff.specialize(q_val)
            for d in deg:
                if d == 0:
                    if n_val is None:
                        raise UnassignedParameterError("no value assigned for n")
                    factor *= Fraction(n_val)
                else:
                    if d not in x_vals:
                        raise UnassignedParameterError(
                            f"no value assigned for x{d}")
                    factor *= Fraction(x_vals[d])
            total += factor
        return total

    def _monomial_str(self, deg: tuple[int, ...]) -> str:
        syms = []
        for d in deg:
            syms.append("n" if d == 0 else f"x{d}")
        return "*".join(syms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for deg in sorted(self._terms):
            coeff = self._terms[deg]
            cs = str(coeff)
            if not deg:
                parts.append(cs)
                continue
            mono = self._monomial_str(deg)
            if coeff == _ONE:
                parts.append(mono)
            elif coeff == -_ONE:
                parts.append(f"-{mono}")
            elif len(coeff._terms) == 1:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self) -> str:
        return f"ParamScalar({{{', '.join(f'{d}: {c!r}' for d, c in self._terms.items())}}})"

    def to_json(self):
        return [
            {"params": list(deg), "coeff": coeff.to_json()}
            for deg, coeff in sorted(self._terms.items())
        ]


_P_ZERO = ParamScalar()
_P_ONE = ParamScalar({(): _ONE})


def specialize(a: ParamScalar | IntLaurent, q_val: Fraction,
               x_vals: Mapping[int, Fraction] | None = None,
               n_val: Fraction | None = None) -> Fraction:
    """Exact rational evaluation of a scalar at q and parameter values."""
    if isinstance(a, IntLaurent):
        return a.specialize(Fraction(q_val))
    return a.specialize(Fraction(q_val), x_vals, n_val)

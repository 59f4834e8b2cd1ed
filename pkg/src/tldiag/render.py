"""Canonical text rendering of algebra elements.

Elements whose support splits into whole diagram classes d_gamma (and, in
the affine algebra, their pole-wrapped companions dstar_gamma) with one
coefficient per class are rendered in the compact class notation, e.g.
``[2]*d(1,2) - d(3)``.  Anything else falls back to the explicit
edge-list form.  Coefficients equal to a quantum integer up to sign and a
power of q are printed in bracket notation.
"""

from __future__ import annotations

from .scalars import IntLaurent, ParamScalar, qint
from . import tl_diagram as tl
from . import affine_diagram as aff

__all__ = ["render_element", "render_scalar"]


def _laurent_pretty(c: IntLaurent) -> str:
    """Try [m], -[m], q^a*[m]; fall back to the canonical expansion."""
    if c.is_zero():
        return "0"
    for sign, signed in ((1, c), (-1, -c)):
        terms = signed.terms
        if all(v > 0 for v in terms.values()):
            top, bot = signed.degree(), signed.valuation()
            shift = (top + bot) // 2
            if (top + bot) % 2 == 0:
                m = top - shift + 1
                try:
                    if signed == IntLaurent.q_power(shift) * qint(m):
                        qpart = "q" if shift == 1 else f"q^{shift}"
                        if m == 1:
                            body = "1" if shift == 0 else qpart
                        elif shift == 0:
                            body = f"[{m}]"
                        else:
                            body = f"{qpart}*[{m}]"
                        return body if sign > 0 else f"-{body}"
                except ValueError:
                    pass
    return str(c)


def _signed_factor(lau: IntLaurent) -> tuple[str, str]:
    """(sign, body) with body the rendering of |lau|, parenthesized if composite."""
    pretty = _laurent_pretty(lau)
    if pretty.startswith("-"):
        sign, body = "-", _laurent_pretty(-lau)
    else:
        sign, body = "+", pretty
    if " " in body:
        body = f"({body})"
    return sign, body


def render_scalar(c: ParamScalar) -> str:
    parts = []
    for deg, lau in sorted(c.terms.items()):
        if deg:
            mono = "*".join("n" if d == 0 else f"x{d}" for d in deg)
            sign, body = _signed_factor(lau)
            text = mono if body == "1" else f"{body}*{mono}"
            parts.append((sign, text))
        else:
            pretty = _laurent_pretty(lau)
            if pretty.startswith("-"):
                parts.append(("-", _laurent_pretty(-lau)))
            else:
                parts.append(("+", pretty))
    if not parts:
        return "0"
    sign, text = parts[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def _class_decomposition(elem):
    """Map each support diagram to a (kind, gamma) class, or None."""
    from .algebra import murphy_class

    k = elem.k
    classes = {}
    for gamma_sum in _candidate_gammas(elem):
        members = murphy_class(gamma_sum, k)
        for d in members:
            classes[aff.embed_finite(d) if elem.ring == "affine" else d] = ("d", gamma_sum)
        if elem.ring == "affine":
            for d in members:
                for wrapped in aff.star_wrap(d):
                    classes.setdefault(wrapped, ("dstar", gamma_sum))
    grouped: dict = {}
    for d, coeff in elem.support.items():
        cls = classes.get(d)
        if cls is None:
            return None
        grouped.setdefault(cls, {})[d] = coeff
    out = {}
    for cls, members in grouped.items():
        kind, gamma = cls
        full = murphy_class(gamma, elem.k)
        expected = len(full) if kind == "d" else sum(len(aff.star_wrap(d)) for d in full)
        coeffs = set(members.values())
        if len(members) != expected or len(coeffs) != 1:
            return None
        out[cls] = coeffs.pop()
    return out


def _candidate_gammas(elem):
    """Interval cycle types present in the element's underlying matchings."""
    seen = set()
    for d in elem.support:
        try:
            fin = d.underlying_finite() if elem.ring == "affine" else d
        except ValueError:
            continue
        comp = tl.as_interval_composition(tl.cycle_type(fin))
        if comp is not None:
            seen.add(comp)
    return sorted(seen)


def _gamma_sort_key(cls):
    kind, gamma = cls
    return (tuple(reversed(gamma)), 0 if kind == "d" else 1)


def _coeff_times(coeff: ParamScalar, name: str) -> tuple[str, str]:
    """(sign, text) for coeff * name with the sign factored out if possible."""
    terms = coeff.terms
    if len(terms) == 1:
        ((deg, lau),) = terms.items()
        negated = all(v < 0 for v in lau.terms.values())
        if negated:
            coeff = -coeff
        pretty = render_scalar(coeff)
        if " " in pretty:
            pretty = f"({pretty})"
        sign = "-" if negated else "+"
        return sign, name if pretty == "1" else f"{pretty}*{name}"
    return "+", f"({render_scalar(coeff)})*{name}"


def render_element(elem) -> str:
    if not elem.support:
        return "0"
    grouped = _class_decomposition(elem)
    if grouped is not None:
        parts = []
        for cls in sorted(grouped, key=_gamma_sort_key):
            kind, gamma = cls
            trimmed = list(gamma)
            while len(trimmed) > 1 and trimmed[-1] == 1:
                trimmed.pop()
            name = ("d" if kind == "d" else "dstar") + "(" + ",".join(map(str, trimmed)) + ")"
            parts.append(_coeff_times(grouped[cls], name))
    else:
        parts = [_coeff_times(coeff, f"[{d}]") for d, coeff in elem.sorted_support()]
    sign, text = parts[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out

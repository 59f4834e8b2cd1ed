"""Machine checks for every identity the library asserts.

Each check returns a record ``{"name", "ok", "detail"}``; suites are
deterministic lists of records.  The CLI's ``verify`` subcommand and the
acceptance tests both drive these.

Two evaluation styles are involved (see :mod:`tldiag.algebra`): the
diagram-class expansions and eigenvalue formulas are exact in the pole
style, the braid-derived relations (commutation, the tau^k identity,
centrality) are exact in the word style.  Every check names its style.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import IntLaurent, ParamScalar, qint, exact_divide, to_n_basis
from . import tl_diagram as tl
from . import affine_diagram as aff
from . import algebra as alg
from . import spectra
from . import repcheck as rc
from .shapes import Partition, SkewShape, standard_tableaux, tl_paths, tl_level_vertices, hecke_level_vertices

_Q = IntLaurent.q_power
_X1 = ParamScalar.x(1)
_QMQ = IntLaurent({1: 1, -1: -1})

SUITES = ("expansion", "relations", "commute", "spectra", "repcheck", "combinatorics")


def _record(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def display_data(i: int):
    """Frozen coefficient tables for the displayed expansions of M_1..M_5.

    Entries are (gamma, nonstar, star) with the machine-verified value of
    the one coefficient whose printed form disagrees with both the
    closed-form theorem and the finite specialization (gamma = (2, 3):
    x [2], not q x [2]).
    """
    two = qint(2)
    tables = {
        2: [((2,), _X1, -_Q(-1))],
        3: [((1, 2), _X1 * _Q(1), -_Q(-1) * two),
            ((3,), -_X1, _Q(-1))],
        4: [((1, 1, 2), _X1 * _Q(2), -_Q(-1) * (qint(3) - qint(1))),
            ((2, 2), -_X1 * two, _Q(-1) * two),
            ((1, 3), -_X1 * _Q(1), _Q(-1) * two),
            ((4,), _X1, -_Q(-1))],
        5: [((1, 1, 1, 2), _X1 * _Q(3), -_Q(-1) * (qint(4) - qint(2))),
            ((1, 1, 3), -_X1 * _Q(2), _Q(-1) * (qint(3) - qint(1))),
            ((1, 4), _X1 * _Q(1), -_Q(-1) * two),
            ((1, 2, 2), -_X1 * _Q(1) * two, _Q(-1) * two * two),
            ((2, 3), _X1 * two, -_Q(-1) * two),
            ((2, 1, 2), -_X1 * (qint(3) - qint(1)), _Q(-1) * (qint(3) - qint(1))),
            ((3, 2), _X1 * two, -_Q(-1) * two),
            ((5,), -_X1, _Q(-1))],
    }
    return tables[i]


def displayed_m_element(i: int, k: int) -> alg.AlgebraElement:
    """The displayed expansion of M_i as an element on k dots."""
    if i == 1:
        return alg.affine_element(k, aff.wound_identity(k)).scale(_Q(-1))
    out = alg.AlgebraElement.zero(alg.AFFINE, k)
    for gamma, nonstar, star in display_data(i):
        out = out + alg.d_gamma_element(gamma, k).scale(nonstar)
        out = out + alg.d_gamma_star_element(gamma, k).scale(star)
    return out


def displayed_finite_m(i: int, k: int) -> alg.AlgebraElement:
    """The displayed finite m_i (integral for i >= 2)."""
    tables = {
        2: [((2,), qint(1))],
        3: [((1, 2), qint(2)), ((3,), -qint(1))],
        4: [((1, 1, 2), qint(3)), ((2, 2), -qint(2)),
            ((1, 3), -qint(2)), ((4,), qint(1))],
        5: [((1, 1, 1, 2), qint(4)), ((1, 1, 3), -qint(3)),
            ((1, 4), qint(2)), ((1, 2, 2), -qint(2) * qint(2)),
            ((2, 3), qint(2)), ((2, 1, 2), -(qint(3) - qint(1))),
            ((3, 2), qint(2)), ((5,), -qint(1))],
    }
    out = alg.AlgebraElement.zero(alg.FINITE, k)
    for gamma, coeff in tables[i]:
        for d in alg.murphy_class(gamma, k):
            out = out + alg.finite_element(k, d, coeff)
    return out


# ---------------------------------------------------------------------------
# Suites


def suite_expansion(kmax: int = 7) -> list[dict]:
    records = []
    # Displayed affine expansions, i = 1..5, at k = i and k = 5.
    for i in range(1, 6):
        for k in {max(i, 2), 5}:
            if k > kmax or i > k:
                continue
            got = alg.jm_definition(i, k, "pole")
            want = displayed_m_element(i, k)
            records.append(_record(
                f"display/affine M_{i} at k={k} (pole)", got == want))
    # Displayed finite expansions.
    pair = alg.psi_finite(1, 5)
    records.append(_record(
        "display/finite m_1 formal pair",
        pair.numerator == _Q(-1) and pair.denominator == _QMQ))
    for i in range(2, 6):
        for k in {i, 5}:
            if k > kmax:
                continue
            got = alg.psi_finite(i, k)
            records.append(_record(
                f"display/finite m_{i} at k={k}", got == displayed_finite_m(i, k)))
    # Three-way equality.
    for k in range(2, kmax + 1):
        ok = True
        for i in range(2, k + 1):
            a = alg.jm_definition(i, k, "pole")
            if a != alg.jm_recursion(i, k, "pole") or a != alg.jm_closed_form(i, k):
                ok = False
                break
        records.append(_record(f"three-way M_i equality, k={k} (pole)", ok))
    # Integrality: coefficients in Z[q,q^-1][x_1], no higher winding class.
    ok = True
    for k in range(2, min(kmax, 6) + 1):
        for i in range(1, k + 1):
            elem = alg.jm_definition(i, k, "pole")
            if elem.max_winding_class() > 1:
                ok = False
    records.append(_record("no winding class above x_1 in any M_i", ok))
    return records


def suite_relations(kmax: int = 7) -> list[dict]:
    records = []
    for k in range(3, kmax + 1):
        ok_sq = ok_braid = ok_comm = ok_conj = True
        n = ParamScalar.from_laurent(IntLaurent({1: 1, -1: 1}))
        for i in range(k):
            e = alg.affine_element(k, aff.gen_e(i, k))
            if e * e != e.scale(n):
                ok_sq = False
            for j in range(k):
                ej = alg.affine_element(k, aff.gen_e(j, k))
                dist = min((i - j) % k, (j - i) % k)
                if dist == 1 and (e * ej * e != e):
                    ok_braid = False
                if dist > 1 and (e * ej != ej * e):
                    ok_comm = False
        tau = alg.affine_element(k, aff.gen_tau(k))
        tau_inv = alg.affine_element(k, aff.gen_tau_inv(k))
        for i in range(k):
            e = alg.affine_element(k, aff.gen_e(i, k))
            if tau * e * tau_inv != alg.affine_element(k, aff.gen_e((i + 1) % k, k)):
                ok_conj = False
        records.append(_record(f"e_i^2 = n e_i, k={k}", ok_sq))
        records.append(_record(f"e_i e_(i+-1) e_i = e_i, k={k}", ok_braid))
        records.append(_record(f"e_i e_j = e_j e_i (|i-j|>1 mod k), k={k}", ok_comm))
        records.append(_record(f"tau e_i tau^-1 = e_(i+1 mod k), k={k}", ok_conj))
        lhs = tau * tau * alg.affine_element(k, aff.gen_e(k - 1, k))
        rhs = alg.AlgebraElement.unit(alg.AFFINE, k)
        for i in range(1, k):
            rhs = rhs * alg.affine_element(k, aff.gen_e(i, k))
        records.append(_record(f"tau^2 e_(k-1) = e_1...e_(k-1), k={k}", lhs == rhs))
    # Kernel words.
    one = alg.AlgebraElement.unit(alg.FINITE, 3)
    t1 = alg.evaluate([("T", 1)], 3, alg.FINITE)
    t2 = alg.evaluate([("T", 2)], 3, alg.FINITE)
    w = (one.scale(_Q(3)) - t1.scale(_Q(2)) - t2.scale(_Q(2))
         + (t1 * t2).scale(_Q(1)) + (t2 * t1).scale(_Q(1)) - t1 * t2 * t1)
    records.append(_record("kernel word vanishes under T -> q - e", w.is_zero()))
    t1a = alg.evaluate([("T", 1)], 3, alg.FINITE, t_convention="e_minus_qinv")
    t2a = alg.evaluate([("T", 2)], 3, alg.FINITE, t_convention="e_minus_qinv")
    w2 = (one.scale(_Q(-3)) + t1a.scale(_Q(-2)) + t2a.scale(_Q(-2))
          + (t1a * t2a).scale(_Q(-1)) + (t2a * t1a).scale(_Q(-1)) + t2a * t1a * t2a)
    records.append(_record(
        "alternative kernel word vanishes under T -> e - q^-1", w2.is_zero()))
    # Hecke quadratic relation.
    t = alg.evaluate([("T", 1), ("T", 1)], 2, alg.FINITE)
    rel = alg.evaluate([("T", 1)], 2, alg.FINITE).scale(_QMQ) + alg.AlgebraElement.unit(alg.FINITE, 2)
    records.append(_record("T_i^2 = (q - q^-1) T_i + 1", t == rel))
    # tau^k identity (word style).
    for k in range(2, min(kmax, 6) + 1):
        prod = alg.AlgebraElement.unit(alg.AFFINE, k)
        for i in range(1, k + 1):
            prod = prod * alg.x_element(i, k, True, "word")
        tau_k = alg.affine_element(k, aff.gen_tau(k)) ** k
        records.append(_record(f"tau^k = prod of X^(-eps_i) words, k={k}", prod == tau_k))
    return records


def suite_commute(kmax: int = 6) -> list[dict]:
    records = []
    for k in range(2, kmax + 1):
        ms = [alg.jm_definition(i, k, "word") for i in range(1, k + 1)]
        ok = True
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if not alg.commutator(ms[i], ms[j]).is_zero():
                    ok = False
        records.append(_record(f"[M_i, M_j] = 0 (word style), k={k}", ok))
    for style in ("pole", "word"):
        ok = True
        for k in range(2, min(kmax, 6) + 1):
            for i in range(1, k + 1):
                lhs = alg.x_element(i, k, True, style)
                rhs = alg.AlgebraElement.zero(alg.AFFINE, k)
                for l in range(i):
                    rhs = rhs + alg.jm_definition(i - l, k, style).scale(_Q(-l))
                if lhs != rhs.scale(_Q(-(i - 2))):
                    ok = False
        records.append(_record(f"X^(-eps_i) telescoping (eqvforms a), {style} style", ok))
    ok = True
    for k in range(2, min(kmax, 6) + 1):
        kk = alg.central_K(k, "word")
        total = alg.AlgebraElement.zero(alg.AFFINE, k)
        for i in range(1, k + 1):
            total = total + alg.x_element(i, k, True, "word")
        if kk.scale(_Q(-(k - 2))) != total:
            ok = False
    records.append(_record("q^-(k-2) K = sum of X^(-eps_i) (eqvforms b)", ok))
    for k in range(2, min(kmax, 5) + 1):
        kk = alg.central_K(k, "word")
        tau = alg.affine_element(k, aff.gen_tau(k))
        ok = alg.commutator(kk, tau).is_zero()
        for i in range(k):
            e = alg.affine_element(k, aff.gen_e(i, k))
            ok = ok and alg.commutator(kk, e).is_zero()
        records.append(_record(f"central K commutes with all e_i and tau, k={k}", ok))
    return records


def suite_spectra(kmax: int = 6) -> list[dict]:
    records = []
    ok_zero = ok_form = True
    for k in range(2, kmax + 1):
        for p0 in range(0, 5):
            for p in tl_paths(p0, k):
                for i in range(2, k + 1):
                    m = p0 + 2
                    derived = spectra.jm_m_eigenvalue(p, i, m)
                    if (p.steps[i] != p.steps[i - 2]) != derived.is_zero():
                        ok_zero = False
                    if derived != spectra.predicted_m_eigenvalue(p, i, m):
                        ok_form = False
    records.append(_record("m_i eigenvalue zero iff p^(i) != p^(i-2)", ok_zero))
    records.append(_record("m_i eigenvalue = signed q^-m [p^(i-1)+1]", ok_form))
    # Reconciliation never fails; the discrepancy flags are informational.
    sample = tl_paths(0, 4)
    reports = [spectra.reconcile(p, i, 2) for p in sample for i in range(2, 5)]
    records.append(_record(
        "reconciliation reports computed",
        all(r.match_flags["structural_form_matches"] for r in reports),
        detail="theorem-literal matches on "
               f"{sum(r.match_flags['theorem_plus_matches'] for r in reports)}"
               f"/{len(reports)} cases (mismatch is expected and documented)"))
    # Summation identity.
    ok = True
    for lam1 in range(0, 15):
        for lam2 in range(0, lam1 + 1):
            if lam1 + lam2 > 14:
                continue
            lam = Partition((lam1, lam2))
            for mu1 in range(0, lam1 + 1):
                for mu2 in range(0, min(mu1, lam2) + 1):
                    mu = Partition((mu1, mu2))
                    if lam.contains(mu) and not spectra.content_sum_identity_holds(lam, mu):
                        ok = False
    records.append(_record("content summation identity, |lambda| <= 14", ok))
    # kappa identities.
    ok = True
    for lam1 in range(0, 8):
        for lam2 in range(0, lam1 + 1):
            lam = Partition((lam1, lam2))
            for mu1 in range(0, lam1 + 1):
                for mu2 in range(0, min(mu1, lam2) + 1):
                    mu = Partition((mu1, mu2))
                    if not lam.contains(mu):
                        continue
                    k = lam.size() - mu.size()
                    if k == 0 or k > min(kmax, 6):
                        continue
                    kappa = spectra.kappa_tl_constant(lam, mu, k)
                    for p in tl_paths(mu1 - mu2, k):
                        if p.end != lam1 - lam2:
                            continue
                        total = IntLaurent.zero()
                        for j in range(1, k + 1):
                            total = total + qint(k - j + 1) * spectra.jm_m_eigenvalue(p, j, mu.size())
                        if total != kappa.numerator:
                            ok = False
    records.append(_record("kappa_tl equals the per-path eigenvalue sum", ok))
    ok = True
    shapes = [
        SkewShape(Partition((3, 2, 1)), Partition(())),
        SkewShape(Partition((3, 2, 1)), Partition((1,))),
        SkewShape(Partition((4, 2, 2, 1)), Partition((2, 1))),
        SkewShape(Partition((4, 3)), Partition((2,))),
    ]
    for shape in shapes:
        if shape.size() > 7:
            continue
        kap = spectra.kappa_hecke_constant(shape)
        for t in standard_tableaux(shape):
            prod = IntLaurent.one()
            for i in range(1, shape.size() + 1):
                prod = prod * spectra.x_eigenvalue(t, i)
            if prod != kap:
                ok = False
    records.append(_record("kappa_hecke tableau independence", ok))
    return records


def suite_repcheck(kmax: int = 5) -> list[dict]:
    records = []
    for k in range(2, min(kmax, 5) + 1):
        for q_val in (Fraction(2), Fraction(5, 3)):
            report = rc.repcheck_report(k, q_val)
            records.append(_record(
                f"annihilation and commutation of psi(m_i), k={k}, q={q_val}",
                report["annihilated"] and report["commuting"],
                detail=f"dim={report['matrix_dim']}"))
    return records


def suite_combinatorics(kmax: int = 8) -> list[dict]:
    records = []
    sizes = [len(tl.enumerate_diagrams(k)) for k in range(1, 7)]
    records.append(_record(
        "enumerate(k) sizes are 1,2,5,14,42,132",
        sizes == [1, 2, 5, 14, 42, 132], detail=str(sizes)))
    ok = True
    for k in range(1, 31):
        poly = to_n_basis(k)
        if poly.evaluate_laurent(IntLaurent({1: 1, -1: 1})) != qint(k):
            ok = False
    records.append(_record("to_n_basis(k) integral and re-evaluates to [k], k <= 30", ok))
    # Branching recursion on the Hecke graph.
    ok = True
    for mu_parts in ((), (1,), (2, 1)):
        for nrows in (2, 3):
            counts: dict = {}
            mu = Partition(mu_parts)
            for level in range(0, 6):
                for shape in hecke_level_vertices(mu_parts, level, nrows):
                    if shape.outer.size() - mu.size() > 8:
                        continue
                    n_tab = len(standard_tableaux(shape))
                    counts[(level, shape.outer.parts)] = n_tab
                    if level >= 1:
                        total = 0
                        for prev in hecke_level_vertices(mu_parts, level - 1, nrows):
                            diff = shape.outer.size() - prev.outer.size()
                            if diff == 1 and shape.outer.contains(prev.outer):
                                total += counts[(level - 1, prev.outer.parts)]
                        if total != n_tab:
                            ok = False
    records.append(_record("branching recursion for tableau counts", ok))
    # Path/tableau bijection on two rows.
    ok_counts = ok_bij = True
    for p0 in range(0, 4):
        for k in range(1, min(kmax, 8) + 1):
            m = p0 + 2
            try:
                from .shapes import two_row_from_path_data, path_to_tableau, tableau_to_path
                mu = two_row_from_path_data(p0, m)
            except ValueError:
                continue
            paths = tl_paths(p0, k)
            for label in tl_level_vertices(p0, k):
                ends = [p for p in paths if p.end == label]
                lam = Partition((mu.row(1) + (k + label - p0) // 2,
                                 mu.row(2) + (k - label + p0) // 2))
                n_tab = len(standard_tableaux(SkewShape(lam, mu)))
                if len(ends) != n_tab:
                    ok_counts = False
            for p in paths:
                if tableau_to_path(path_to_tableau(p, m)) != p:
                    ok_bij = False
    records.append(_record("two-row path counts match tableau counts", ok_counts))
    records.append(_record("path <-> tableau round trip", ok_bij))
    ok = True
    for p0 in range(0, 4):
        for k in range(0, 11):
            expect = sorted(v for v in range(p0 + k, p0 - k - 1, -2) if v >= 0)
            if sorted(tl_level_vertices(p0, k)) != expect:
                ok = False
    records.append(_record("two-row level vertex sets, k <= 10", ok))
    return records


def run_suites(names, kmax: int = 5) -> dict:
    """Run the requested suites; deterministic record order."""
    chosen = list(SUITES) if "all" in names else [n for n in SUITES if n in names]
    results = []
    for name in chosen:
        fn = globals()[f"suite_{name}"]
        for record in fn(kmax):
            record["suite"] = name
            results.append(record)
    failed = [r for r in results if not r["ok"]]
    return {
        "schema": 1,
        "kmax": kmax,
        "suites": chosen,
        "checks": results,
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "first_failure": failed[0] if failed else None,
        "ok": not failed,
    }

"""Self-verification suites: every identity the engine is built on, run as
exact checks with minimal counterexample reporting.

Each suite function returns a list of failure strings (empty means pass);
suite inputs default to the catalog but accept substitutes so that tests
can inject corrupted data as negative controls.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .charclasses import chi_y_log_coefficients
from .fibrations import (
    CATALOG,
    FAMILIES,
    closed_form_q,
    derived_q,
    fiber_integrand,
    p_polynomial,
    p_table_reference,
    pushforward_class,
)
from .genseries import BaseSpec, chi_q, chi_series, euler_series_e8
from .poly import Poly
from .pushforward import BundleSpec, derivative_pushforward_d5, pushforward
from .series import WSeries, mono_from_dict


def first_mismatch(a, b):
    """Smallest (weight, y-degree) where two series differ, with both values."""
    for k in range(0, min(a.wmax, b.wmax) + 1):
        for q in range(0, min(a.qmax, b.qmax) + 1):
            ca, cb = a.coeff(k, q), b.coeff(k, q)
            if ca != cb:
                return (k, q, ca, cb)
    return None


def check_derived_vs_closed(families=FAMILIES, wmax=6, qmax=7, specs=None):
    """Pushforward route against the closed-form expansion, coefficient
    by coefficient."""
    specs = specs or CATALOG
    failures = []
    for fam in families:
        derived = derived_q(specs[fam], wmax, qmax)
        closed = closed_form_q(fam, wmax, qmax)
        if derived != closed:
            k, q, ca, cb = first_mismatch(derived, closed)
            failures.append(
                "%s: first mismatch at weight %d, y^%d: derived %s vs closed %s"
                % (fam, k, q, ca.to_text(), cb.to_text())
            )
    return failures


def check_p_table(families=FAMILIES, nmax=6):
    """y-expansion against the tabulated polynomials, plus the structural
    rows: P_0 = 1 - U, P_n(1) = 0, and the expected U-degrees."""
    failures = []
    one_minus_u = 1 - Poly.x()
    for fam in families:
        s = {"D5": 2, "E6": 3, "E7": 4, "E8": 6}[fam]
        for n in range(0, nmax + 1):
            got = p_polynomial(fam, n)
            want = p_table_reference(fam, n)
            if got != want:
                failures.append(
                    "%s: P_%d = %s, table says %s"
                    % (fam, n, got.to_text(), want.to_text())
                )
                continue
            if got.evaluate(1) != 0:
                failures.append("%s: P_%d(1) = %s != 0" % (fam, n, got.evaluate(1)))
            if got.degree() != s * n + 1:
                failures.append(
                    "%s: P_%d has U-degree %d, expected %d"
                    % (fam, n, got.degree(), s * n + 1)
                )
        if p_polynomial(fam, 0) != one_minus_u:
            failures.append("%s: P_0 != 1 - U" % fam)
    return failures


def _random_h_series(rng, wmax, qmax, nterms=12):
    terms = {}
    for _ in range(nterms):
        he = rng.randrange(0, wmax + 1)
        le = rng.randrange(0, wmax + 1 - he)
        q = rng.randrange(0, qmax + 1)
        mono = mono_from_dict({"H": he, "L": le})
        coeff = Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
        terms[(mono, q)] = terms.get((mono, q), Fraction(0)) + coeff
    return WSeries(wmax, qmax, terms)


def check_d5_derivative_oracle(wmax=6, qmax=7, nrandom=50, seed=20230517):
    """Segre substitution against the derivative formula, on the D5
    integrand and on random series in H, L, y (input weight wmax, so both
    routes produce output exact to weight wmax - 3)."""
    failures = []
    wmax = max(wmax, 3)
    bundle = CATALOG["D5"].bundle
    D = fiber_integrand(CATALOG["D5"], wmax, qmax)
    via_segre = pushforward(D, bundle)
    via_deriv = derivative_pushforward_d5(D, bundle)
    if via_segre != via_deriv:
        k, q, ca, cb = first_mismatch(via_segre, via_deriv)
        failures.append(
            "D5 integrand: mismatch at weight %d, y^%d: %s vs %s"
            % (k, q, ca.to_text(), cb.to_text())
        )
    rng = random.Random(seed)
    for i in range(nrandom):
        s = _random_h_series(rng, wmax, qmax)
        if pushforward(s, bundle) != derivative_pushforward_d5(s, bundle):
            failures.append("random series #%d: routes disagree" % i)
    return failures


def check_hadamard_identity(max_abs_root=3, max_d=4, order=6):
    """sum_i f(l_i t) - d*a_0 == f (.) (-tC'/C) for integer root tuples.

    Left side from explicit power sums, right side from exact series
    division of the polynomial C; both sides as exact y-fractions per
    t-order.
    """
    acoeffs = chi_y_log_coefficients(order)
    failures = []
    root_range = range(-max_abs_root, max_abs_root + 1)
    for d in range(1, max_d + 1):
        for roots in product(root_range, repeat=d):
            # C = prod (1 - l t) as a Fraction list
            C = [Fraction(1)] + [Fraction(0)] * order
            for lam in roots:
                C = [
                    C[k] - (lam * C[k - 1] if k else Fraction(0))
                    for k in range(order + 1)
                ]
            # -tC'/C by term-by-term division
            minus_tCp = [-k * C[k] for k in range(order + 1)]
            ps = [Fraction(0)] * (order + 1)
            for k in range(1, order + 1):
                acc = minus_tCp[k]
                for i in range(1, k + 1):
                    acc -= C[i] * ps[k - i]
                ps[k] = acc
            for k in range(1, order + 1):
                direct = sum(Fraction(lam) ** k for lam in roots)
                lhs = acoeffs[k - 1].scale(direct)
                rhs = acoeffs[k - 1].scale(ps[k])
                if lhs != rhs:
                    failures.append(
                        "roots %s, order %d: %r vs %r" % (roots, k, lhs, rhs)
                    )
    return failures


def check_euler_e8(dmax=4):
    """Alternating y-sums of the E8 chi series against the Euler series."""
    failures = []
    qmax = dmax + 2
    chi = chi_series("E8", dmax, qmax)
    euler = euler_series_e8(dmax, qmax)
    for d in range(1, dmax + 1):
        alt = WSeries.zero(dmax, qmax)
        for q in range(0, qmax + 1):
            alt = alt + chi.coeff(d, q) * Fraction((-1) ** q)
        if alt != euler.weight_component(d):
            failures.append("weight %d alternating sum != Euler coefficient" % d)
    base = BaseSpec.projective_space(2, 3)
    total = sum(
        chi_q("E8", base, q) * Fraction((-1) ** q) for q in range(0, 4)
    )
    if total != -540:
        failures.append("E8 over (P^2, O(3)): alternating sum %s != -540" % total)
    return failures


def _sample_bases(max_dim=3):
    out = []
    for d in range(1, max_dim + 1):
        for n in (1, 2, d + 1):
            out.append((d, n, BaseSpec.projective_space(d, n)))
    return out


def _chi_values(fam, base):
    return [chi_q(fam, base, q) for q in range(0, base.dim + 2)]


def check_serre_duality(families=FAMILIES, max_dim=3):
    """chi_q = (-1)^(d+1) chi_(d+1-q) over the sample bases, plus the
    anticanonical (Calabi-Yau) value of chi_0.

    With L anticanonical the total space has trivial canonical class, so
    chi_0 = 1 + (-1)^(dim Y): zero for odd-dimensional Y (e.g. threefolds
    over P^2) and 2 for even-dimensional Y (K3 over P^1, fourfolds over
    P^3).
    """
    failures = []
    for fam in families:
        for d, n, base in _sample_bases(max_dim):
            vals = _chi_values(fam, base)
            dimY = d + 1
            for q in range(0, dimY + 1):
                if vals[q] != Fraction((-1) ** dimY) * vals[dimY - q]:
                    failures.append(
                        "%s over (P^%d, O(%d)): chi_%d=%s vs dual chi_%d=%s"
                        % (fam, d, n, q, vals[q], dimY - q, vals[dimY - q])
                    )
            if n == d + 1 and vals[0] != 1 + (-1) ** dimY:
                failures.append(
                    "%s over (P^%d, anticanonical): chi_0 = %s != %d"
                    % (fam, d, vals[0], 1 + (-1) ** dimY)
                )
    return failures


def check_integrality(families=FAMILIES, max_dim=3):
    failures = []
    for fam in families:
        for d, n, base in _sample_bases(max_dim):
            for q, v in enumerate(_chi_values(fam, base)):
                if v.denominator != 1:
                    failures.append(
                        "%s over (P^%d, O(%d)): chi_%d = %s is not an integer"
                        % (fam, d, n, q, v)
                    )
    return failures


def check_route_consistency(families=FAMILIES, max_dim=4):
    """Generating-series classes against sum P_(q-i) H_i(B), exactly."""
    failures = []
    for fam in families:
        for d in range(0, max_dim + 1):
            qmax = d + 2
            chi = chi_series(fam, d, qmax)
            for q in range(0, d + 2):
                lhs = chi.coeff(d, q)
                rhs = pushforward_class(fam, q, d, qmax).weight_component(d)
                if lhs != rhs:
                    failures.append(
                        "%s, d=%d, q=%d: series class %s vs pushforward class %s"
                        % (fam, d, q, lhs.to_text(), rhs.to_text())
                    )
    return failures


SUITES = (
    ("derived-vs-closed", "pushforward Q equals closed-form Q"),
    ("p-table", "y-expansion matches the P_n table"),
    ("d5-derivative-oracle", "Segre route equals derivative route"),
    ("hadamard-identity", "log-coefficient Hadamard identity"),
    ("euler-crosscheck", "E8 alternating sums match the Euler series"),
    ("serre-duality", "chi_q symmetry and anticanonical vanishing"),
    ("integrality", "chi_q values are integers over sample bases"),
    ("route-consistency", "series route equals class route"),
)


def run_suites(families="all", wmax=6, qmax=7):
    """Run all suites; returns (ok, [(name, failures)] in suite order)."""
    fams = FAMILIES if families == "all" else (families,)
    results = [
        ("derived-vs-closed", check_derived_vs_closed(fams, wmax, qmax)),
        ("p-table", check_p_table(fams, nmax=min(6, qmax))),
        ("d5-derivative-oracle", check_d5_derivative_oracle(wmax, qmax, nrandom=10)),
        ("hadamard-identity", check_hadamard_identity()),
        ("euler-crosscheck", check_euler_e8()),
        ("serre-duality", check_serre_duality(fams)),
        ("integrality", check_integrality(fams)),
        ("route-consistency", check_route_consistency(fams, max_dim=min(4, wmax))),
    ]
    ok = all(not fails for _name, fails in results)
    return ok, results

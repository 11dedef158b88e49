"""The fibration catalog (D5/E6/E7/E8) and the genus-factor machinery.

Each family lives in a projective bundle P(E) over the base, cut out as a
(complete-intersection) subvariety whose relative data is fully captured
by two root lists: the Chern roots of F = pi^* E (x) O(1) and of the
normal bundle N.  The pushed-forward chi_y class of the fibration Y then
factors as Q * H_y(B), where Q is the pushforward of the fiberwise
integrand

    D = prod_{l in F-roots} (1 + y e^{-l}) l/(1 - e^{-l})
      * prod_{m in N-roots} (1 - e^{-m}) / (1 + y e^{-m})
      * (1 + y)^{-1}.

For the catalog families Q also has a closed form in U = exp(-L); its y^n
coefficients are genuine polynomials P_n(U), tabulated exactly here.

E7 note: its natural ambient space is a weighted P_{1,1,2} bundle; we use
the complete-intersection model in an honest P^3-bundle instead (twists
(0,1,2,2), relations of classes 2H+2L and 2H+4L).  The model is accepted
because its derived Q matches the closed form exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charclasses import (
    RootForm,
    hirzebruch_class,
    lambda_y_factor,
    lambda_y_inverse,
    todd_factor,
)
from .poly import Poly
from .pushforward import BundleSpec, pushforward
from .series import WSeries

FAMILIES = ("D5", "E6", "E7", "E8")

DEFAULT_WMAX = 6
DEFAULT_QMAX = 7


@dataclass(frozen=True)
class FibrationSpec:
    """Relative data of a fibration inside P(E).

    f_roots must equal {H + m L : m in bundle.exps} (checked); n_roots are
    the normal-bundle roots, each with positive H-coefficient so that its
    top Chern factor survives the fiber integral.  Catalog entries have
    fiber dimension exactly 1; custom specs may have any fiber dimension
    >= 0 (n_roots may be empty: Y = P(E) itself).
    """

    name: str
    bundle: BundleSpec
    n_roots: tuple
    f_roots: tuple = None
    family: str = None  # catalog key when this spec has a closed form

    def __post_init__(self):
        expected = tuple(RootForm(1, m) for m in self.bundle.exps)
        if self.f_roots is None:
            object.__setattr__(self, "f_roots", expected)
        elif sorted((r.a, r.b) for r in self.f_roots) != sorted(
            (r.a, r.b) for r in expected
        ):
            raise ValueError(
                "f_roots must be {H + m*L} for the bundle exponents %s"
                % (self.bundle.exps,)
            )
        for r in self.n_roots:
            if r.a <= 0:
                raise ValueError("normal-bundle roots need a positive H part")
        if self.fiber_dim < 0:
            raise ValueError("more normal roots than fiber directions")

    @property
    def fiber_dim(self):
        return len(self.f_roots) - 1 - len(self.n_roots)


def _catalog_entry(family, exps, n_roots):
    spec = FibrationSpec(
        name=family,
        bundle=BundleSpec(exps),
        n_roots=tuple(RootForm(a, b) for a, b in n_roots),
        family=family,
    )
    assert spec.fiber_dim == 1
    return spec


CATALOG = {
    "D5": _catalog_entry("D5", (0, 1, 1, 1), ((2, 2), (2, 2))),
    "E6": _catalog_entry("E6", (0, 1, 1), ((3, 3),)),
    "E7": _catalog_entry("E7", (0, 1, 2, 2), ((2, 2), (2, 4))),
    "E8": _catalog_entry("E8", (0, 2, 3), ((3, 6),)),
}


def catalog_spec(family):
    try:
        return CATALOG[family]
    except KeyError:
        raise KeyError("unknown family %r (expected one of %s)" % (family, FAMILIES))


# ---------------------------------------------------------------------------
# integrand and derived genus factor


def fiber_integrand(spec, wmax, qmax):
    """The class D whose pushforward is the genus factor Q."""
    if wmax < len(spec.n_roots):
        raise ValueError(
            "wmax=%d below the integrand's minimal weight %d"
            % (wmax, len(spec.n_roots))
        )
    alternating = [Fraction((-1) ** m) for m in range(qmax + 1)]
    D = WSeries.from_y_poly(alternating, wmax, qmax)  # 1/(1+y)
    for root in spec.f_roots:
        D = D * lambda_y_factor(root, -1, wmax, qmax)
        D = D * todd_factor(root, wmax, qmax)
    for root in spec.n_roots:
        one_minus_exp = 1 - (root.series(wmax, qmax) * -1).exp()
        D = D * one_minus_exp
        D = D * lambda_y_inverse(root, -1, wmax, qmax)
    return D


def derived_q(spec, wmax=DEFAULT_WMAX, qmax=DEFAULT_QMAX):
    """Genus factor by pushing the integrand down the projective bundle."""
    if isinstance(spec, str):
        spec = catalog_spec(spec)
    r = spec.bundle.rank
    D = fiber_integrand(spec, wmax + r - 1, qmax)
    return pushforward(D, spec.bundle, out_wmax=wmax)


# ---------------------------------------------------------------------------
# closed forms

# Q = lead - y + (y+1) * numer(y, U) / (1 + y U^s) [ - U (y+1)^2/(1+y U^s)^2 ],
# numer encoded as {(y-degree, U-degree): integer}.
_CLOSED = {
    "D5": {"lead": 4, "s": 2, "numer": {(1, 1): 1, (0, 0): -3}, "extra": True},
    "E6": {"lead": 3, "s": 3, "numer": {(1, 2): 1, (0, 1): -1, (0, 0): -2}},
    "E7": {"lead": 2, "s": 4, "numer": {(1, 3): 1, (0, 1): -1, (0, 0): -1}},
    "E8": {"lead": 1, "s": 6, "numer": {(1, 5): 1, (0, 1): -1}},
}

_CLOSED_TEXT = {
    "D5": "4 - y + (y+1)*(y*U - 3)/(y*U^2 + 1) - U*(y+1)^2/(y*U^2 + 1)^2",
    "E6": "3 - y + (y+1)*(y*U^2 - U - 2)/(y*U^3 + 1)",
    "E7": "2 - y + (y+1)*(y*U^3 - U - 1)/(y*U^4 + 1)",
    "E8": "1 - y + (y+1)*(y*U^5 - U)/(y*U^6 + 1)",
}


def closed_form_text(family):
    """The unexpanded genus-factor expression, with U = exp(-L)."""
    if family not in _CLOSED_TEXT:
        raise KeyError("unknown family %r" % (family,))
    return _CLOSED_TEXT[family]


def closed_form_q(family, wmax=DEFAULT_WMAX, qmax=DEFAULT_QMAX):
    """Expand the closed-form genus factor with U = exp(-L), exactly."""
    data = _CLOSED.get(family)
    if data is None:
        raise KeyError("unknown family %r" % (family,))
    y = WSeries.y(wmax, qmax)
    U = (-WSeries.var("L", wmax, qmax)).exp()
    numer = WSeries.zero(wmax, qmax)
    for (yd, ud), coeff in data["numer"].items():
        numer = numer + y**yd * U**ud * coeff
    denom_inv = (y * U ** data["s"] + 1).inverse()
    Q = data["lead"] - y + (y + 1) * numer * denom_inv
    if data.get("extra"):
        Q = Q - U * (y + 1) ** 2 * denom_inv**2
    return Q


# ---------------------------------------------------------------------------
# y-expansion of the closed forms: the P_n(U) polynomials


def _q_y_expansion(family, nmax):
    """[P_0..P_nmax] as exact U-polynomials, via the geometric y-expansion."""
    data = _CLOSED.get(family)
    if data is None:
        raise KeyError("unknown family %r" % (family,))
    s = data["s"]

    def ymul(a, b):
        out = [Poly() for _ in range(nmax + 1)]
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j in range(0, nmax + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + ai * b[j]
        return out

    inv = [Poly.monomial(Fraction((-1) ** m), s * m) for m in range(nmax + 1)]
    numer = [Poly() for _ in range(nmax + 1)]
    for (yd, ud), coeff in data["numer"].items():
        if yd <= nmax:
            numer[yd] = numer[yd] + Poly.monomial(Fraction(coeff), ud)
    y_plus_1 = [Poly.one(), Poly.one()] + [Poly() for _ in range(nmax - 1)]
    y_plus_1 = y_plus_1[: nmax + 1]
    out = ymul(ymul(y_plus_1, numer), inv)
    out[0] = out[0] + data["lead"]
    if nmax >= 1:
        out[1] = out[1] - 1
    if data.get("extra"):
        sq = ymul(y_plus_1, y_plus_1)
        extra = ymul(ymul(sq, inv), inv)
        for n in range(nmax + 1):
            out[n] = out[n] - Poly.x() * extra[n]
    return out


def p_polynomial(family, n):
    """y^n coefficient of the genus factor as an exact polynomial in U."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _q_y_expansion(family, n)[n]


_P1_TABLE = {
    "D5": Poly((-4, -1, 3, 2)),
    "E6": Poly((-3, -1, 1, 2, 1)),
    "E7": Poly((-2, -1, 0, 1, 1, 1)),
    "E8": Poly((-1, -1, 0, 0, 0, 1, 0, 1)),
}


def p_table_reference(family, n):
    """Tabulated closed form of P_n: P_0, P_1, and the factored P_n, n > 1."""
    if family not in _CLOSED:
        raise KeyError("unknown family %r" % (family,))
    if n < 0:
        raise ValueError("n must be >= 0")
    U = Poly.x()
    if n == 0:
        return 1 - U
    if n == 1:
        return _P1_TABLE[family]
    tail = (-(U ** _CLOSED[family]["s"])) ** (n - 2)
    if family == "D5":
        # anomalous rational root at (n-2)/(n+1)
        return -U * ((n + 1) * U - (n - 2)) * (U - 1) * (U + 1) ** 2 * tail
    if family == "E6":
        return -(U**2) * (U**3 - 1) * (U + 1) ** 2 * tail
    if family == "E7":
        return -(U**3) * (U**4 - 1) * (U**2 + U + 1) * tail
    return -(U**5) * (U**6 - 1) * (U**2 + 1) * tail


# ---------------------------------------------------------------------------
# pushed-forward classes, y-degree by y-degree


def pushforward_class(family_or_spec, q, d, qmax=None):
    """sum_{i<=q} P_{q-i}(U) * H_i(B): the y^q part of Q * H_y(B), to weight d.

    H_i(B) is the y^i slice of the full chi_y class of a d-dimensional
    base; the result is a y-free mixed-weight series in L and c1..c_d.
    """
    from .charclasses import hirzebruch_class

    if q < 0:
        raise ValueError("q must be >= 0")
    if qmax is None:
        qmax = max(q, d + 2)
    if isinstance(family_or_spec, str):
        Q = closed_form_q(family_or_spec, d, qmax)
    else:
        Q = derived_q(family_or_spec, d, qmax)
    base = hirzebruch_class(d, qmax)  # already truncated at (d, qmax)
    out = WSeries.zero(d, qmax)
    for i in range(0, q + 1):
        out = out + Q.y_slice(q - i) * base.y_slice(i)
    return out

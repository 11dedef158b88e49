"""The generating series chi(t, y) and numeric chi_q over concrete bases.

chi(t, y) is assembled so that integrating its (t^k, y^q) coefficient over
a base of dimension k gives chi_q of the fibration: take the genus factor
with U = exp(-L) (t-degree is weight, so no substitution is needed),
reweight it by (1+y)-powers, and multiply by the exponential of the
absorbed Hadamard product of the chi_y log-coefficients with the power
sums of the formal base Chern classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .charclasses import chi_y_log_coefficients, hadamard_apply, power_sum_series
from .fibrations import closed_form_q, derived_q, pushforward_class
from .series import WSeries, mono_from_dict, mono_weight


class MissingIntersectionError(ValueError):
    """A queried weight-d monomial has no entry in the base's table."""


class VerificationError(AssertionError):
    """A cross-route check requested in verify mode failed."""


@dataclass(frozen=True)
class BaseSpec:
    """A base variety: dimension plus (for numeric work) an intersection table.

    Table mode maps every relevant weight-``dim`` monomial in L, c1..c_dim
    to its intersection number; a missing monomial is an error, never an
    implicit zero.  Symbolic mode carries only the dimension.
    """

    dim: int
    mode: str = "symbolic"
    table: dict = field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        if self.mode not in ("symbolic", "table"):
            raise ValueError("mode must be 'symbolic' or 'table'")
        if self.mode == "table":
            if self.table is None:
                raise ValueError("table mode needs an intersection table")
            clean = {}
            for mono, value in self.table.items():
                if isinstance(mono, dict):
                    mono = mono_from_dict(mono)
                if mono_weight(mono) != self.dim:
                    raise ValueError(
                        "table monomial %r has weight != %d" % (mono, self.dim)
                    )
                clean[mono] = (
                    value if isinstance(value, Fraction) else Fraction(value)
                )
            object.__setattr__(self, "table", clean)

    @classmethod
    def projective_space(cls, d, n):
        """P^d with L = O(n): c_i -> C(d+1, i) h^i, L -> n h, int h^d = 1."""
        if d < 0:
            raise ValueError("dimension must be >= 0")
        table = {}
        vars_weights = [("L", 1)] + [("c%d" % i, i) for i in range(1, d + 1)]
        for exps in _weighted_exponents(vars_weights, d):
            value = Fraction(1)
            mono = {}
            for (name, w), e in zip(vars_weights, exps):
                if not e:
                    continue
                mono[name] = e
                if name == "L":
                    value *= Fraction(n) ** e
                else:
                    value *= Fraction(comb(d + 1, w)) ** e
            table[mono_from_dict(mono)] = value
        return cls(dim=d, mode="table", table=table)


def _weighted_exponents(vars_weights, total):
    """All exponent tuples with sum(e_i * w_i) == total."""
    if not vars_weights:
        if total == 0:
            yield ()
        return
    (name, w), rest = vars_weights[0], vars_weights[1:]
    for e in range(0, total // w + 1):
        for tail in _weighted_exponents(rest, total - e * w):
            yield (e,) + tail


# ---------------------------------------------------------------------------


def chi_series(family_or_spec, tmax, qmax=None):
    """chi(t, y) to weight tmax (t-degree equals weight throughout).

    The y-degree bound defaults to tmax + 2: over a base of dimension k the
    fibration has dimension k + 1, so every retained coefficient beyond
    y^(k+1) is exactly zero.
    """
    if tmax < 0:
        raise ValueError("tmax must be >= 0")
    if qmax is None:
        qmax = tmax + 2
    if isinstance(family_or_spec, str):
        Qt = closed_form_q(family_or_spec, tmax, qmax)
    else:
        Qt = derived_q(family_or_spec, tmax, qmax)
    Qt = Qt.reweight_by_one_plus_y()
    if tmax == 0:
        return Qt
    acoeffs = chi_y_log_coefficients(tmax)
    psums = power_sum_series(tmax, qmax=qmax)
    expo = hadamard_apply(acoeffs, psums, absorb=True).exp()
    return Qt * expo


def integrate(cls, base):
    """Pair a y-free weight-``base.dim`` class with the intersection table."""
    if base.mode != "table":
        raise ValueError("integration needs a table-mode base")
    if cls.is_zero():
        return Fraction(0)
    total = Fraction(0)
    for (mono, q), coeff in cls.terms.items():
        if q != 0:
            raise ValueError("cannot integrate a class with y-content")
        if mono_weight(mono) != base.dim:
            raise ValueError(
                "class is not weight-homogeneous of weight %d" % base.dim
            )
        value = base.table.get(mono)
        if value is None:
            raise MissingIntersectionError(
                "no intersection number for monomial %s"
                % (dict(mono) if mono else "1",)
            )
        total += coeff * value
    return total


def chi_q(family_or_spec, base, q, verify=False):
    """chi_q of the family over ``base``, as an exact rational.

    With ``verify`` set, the same number is recomputed along the
    class-by-class route (sum of P_{q-i} H_i(B)) and integrality is
    asserted; a mismatch raises :class:`VerificationError`.
    """
    d = base.dim
    if not (0 <= q <= d + 1):
        raise ValueError(
            "q=%d out of range: the fibration has dimension %d" % (q, d + 1)
        )
    qmax = d + 2
    cls = chi_series(family_or_spec, d, qmax).coeff(d, q)
    value = integrate(cls, base)
    if verify:
        other = pushforward_class(family_or_spec, q, d, qmax).weight_component(d)
        check = integrate(other, base)
        if check != value:
            raise VerificationError(
                "route mismatch for q=%d: %s (series) vs %s (classes)"
                % (q, value, check)
            )
        if value.denominator != 1:
            raise VerificationError("chi_%d = %s is not an integer" % (q, value))
    return value


def euler_series_e8(dmax, qmax=0):
    """12Lt/(1+6Lt) * (1 + c1 t + c2 t^2 + ...), the E8 Euler-characteristic
    generating series; the weight-d coefficient integrates to e(Y) over a
    base of dimension d."""
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    L = WSeries.var("L", dmax, qmax)
    chern_total = WSeries.const(1, dmax, qmax)
    for i in range(1, dmax + 1):
        chern_total = chern_total + WSeries.var("c%d" % i, dmax, qmax)
    return 12 * L * (6 * L + 1).inverse() * chern_total

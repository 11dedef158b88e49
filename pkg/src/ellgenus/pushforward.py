"""Pushforward along pi: P(E) -> B for E a direct sum of powers of one
line bundle.

Conventions: P(E) is the bundle of lines, H = c1(O(1)) with O(1) the dual
of the tautological subbundle, so pi_* sends H^(r-1+j) to the Segre class
s_j(E) and kills lower H-powers.  For E = sum_j L^(m_j) the total Segre
class is prod_j (1 + m_j L)^{-1}.

A second, independent route for the rank-4 bundle (0,1,1,1) is kept as an
oracle: strip the H^0..H^2 part, divide by H, apply (1/2) d^2/dH^2 and
evaluate at H = -L.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import TruncationDeficitError, WSeries, mono_from_dict


class UnsupportedOracleError(ValueError):
    """The derivative-formula oracle only covers the (0,1,1,1) bundle."""


@dataclass(frozen=True)
class BundleSpec:
    """E = O(m_1 L) + ... + O(m_r L); order of the exponents is irrelevant."""

    exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(m) for m in self.exps))
        if len(self.exps) < 1:
            raise ValueError("bundle needs rank >= 1")

    @property
    def rank(self):
        return len(self.exps)


def segre_series(bundle, wmax, qmax=0):
    """s_0..s_wmax with sum_k s_k = prod_j (1 + m_j L)^{-1}; s_0 = 1."""
    L = WSeries.var("L", wmax, qmax)
    total = WSeries.const(1, wmax, qmax)
    for m in bundle.exps:
        if m:
            total = total * (L * m + 1).inverse()
    return [total.weight_component(k) for k in range(0, wmax + 1)]


def pushforward(series, bundle, out_wmax=None):
    """Replace H^(r-1+j) by s_j(E), dropping H^i for i < r-1.

    The result is exact to ``series.wmax - (rank - 1)``; asking for more
    raises :class:`TruncationDeficitError` rather than silently truncating
    wrong.
    """
    r = bundle.rank
    supported = series.wmax - (r - 1)
    if out_wmax is None:
        out_wmax = supported
    if out_wmax > supported or supported < 0:
        raise TruncationDeficitError(
            "pushforward to weight %d needs input weight %d, have %d"
            % (out_wmax, out_wmax + r - 1, series.wmax)
        )
    qmax = series.qmax
    segre = segre_series(bundle, out_wmax, qmax)
    out = WSeries.zero(out_wmax, qmax)
    for e, part in series.coefficients_of("H").items():
        j = e - (r - 1)
        if j < 0 or j > out_wmax:
            continue
        out = out + part.truncate(out_wmax, qmax) * segre[j]
    return out


_D5_BUNDLE = BundleSpec((0, 1, 1, 1))


def derivative_pushforward_d5(series, bundle=_D5_BUNDLE):
    """The displayed derivative instance of pi_* for the (0,1,1,1) bundle.

    (1/2) d^2/dH^2 [ (D - (a0 + a1 H + a2 H^2)) / H ] at H = -L, where the
    a_i are the low H-coefficients of D.  Exact to series.wmax - 3.
    """
    if sorted(bundle.exps) != [0, 1, 1, 1]:
        raise UnsupportedOracleError(
            "derivative oracle only supports the (0,1,1,1) bundle"
        )
    if series.wmax < 3:
        raise TruncationDeficitError("need input weight >= 3")
    qmax = series.qmax
    out_wmax = series.wmax - 3
    # (D - a0 - a1 H - a2 H^2) / H, assembled directly from H-coefficients
    shifted = {}
    for (m, q), c in series.terms.items():
        d = dict(m)
        e = d.get("H", 0)
        if e < 3:
            continue
        d["H"] = e - 1
        shifted[(mono_from_dict(d), q)] = c
    quotient = WSeries(series.wmax, qmax, shifted)
    second = quotient.diff_h().diff_h() * Fraction(1, 2)
    minus_L = -WSeries.var("L", series.wmax, qmax)
    return second.substitute("H", minus_L).truncate(out_wmax, qmax)

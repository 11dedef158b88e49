"""Exact weight-truncated multivariate series with a polynomial y-direction.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``);
nothing in this module ever touches floating point.  The variable alphabet
is fixed: the hyperplane class ``H`` and the line-bundle class ``L`` (both
of weight 1) together with formal Chern classes ``c1, c2, ...`` (``ci`` of
weight ``i``).  Every series is truncated at a weight bound ``wmax`` and a
y-degree bound ``qmax``; y itself carries weight 0.

The weight grading doubles as the t-grading of all generating series in
this package: the coefficient of ``t^k`` is the weight-k homogeneous
component, so no t variable is stored.  Substituting ``t -> t*(1+y)``
therefore becomes :meth:`WSeries.reweight_by_one_plus_y`.

Monomials are canonical tuples of ``(variable, exponent)`` pairs with
positive exponents, ordered L < H < c1 < c2 < ...; the empty tuple is the
constant monomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class TruncationMismatchError(ValueError):
    """Two series with different (wmax, qmax) were combined."""


class NotAUnitError(ValueError):
    """Inverse of a series whose constant (weight-0, y^0) term is zero."""


class TruncationDeficitError(ValueError):
    """An operation was asked for more output order than its input supports."""


def var_weight(name):
    """Weight of a variable: 1 for L and H, i for ci."""
    if name == "L" or name == "H":
        return 1
    if name.startswith("c") and name[1:].isdigit():
        i = int(name[1:])
        if i >= 1:
            return i
    raise ValueError("unknown variable %r" % (name,))


def _var_key(name):
    if name == "L":
        return (0, 0)
    if name == "H":
        return (1, 0)
    return (2, int(name[1:]))


def mono_from_dict(exps):
    """Canonical monomial from a {variable: exponent} mapping."""
    items = []
    for v, e in exps.items():
        var_weight(v)  # validates the name
        if e < 0:
            raise ValueError("negative exponent for %r" % (v,))
        if e:
            items.append((v, int(e)))
    items.sort(key=lambda it: _var_key(it[0]))
    return tuple(items)


def mono_weight(mono):
    return sum(var_weight(v) * e for v, e in mono)


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    items = sorted(d.items(), key=lambda it: _var_key(it[0]))
    return tuple(items)


def _mono_sort_key(mono):
    return tuple((_var_key(v), e) for v, e in mono)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an int or Fraction, got %r" % (value,))


class WSeries:
    """A truncated series: map from (monomial, y-degree) to nonzero Fraction.

    Instances are immutable by convention; every operation returns a new
    series.  Two series are equal iff their truncation orders and term maps
    agree, so tests compare exactly, never approximately.
    """

    __slots__ = ("wmax", "qmax", "terms")

    def __init__(self, wmax, qmax, terms=None):
        if wmax < 0 or qmax < 0:
            raise ValueError("truncation orders must be >= 0")
        self.wmax = int(wmax)
        self.qmax = int(qmax)
        clean = {}
        if terms:
            for (mono, q), coeff in terms.items():
                if q > self.qmax or mono_weight(mono) > self.wmax:
                    continue
                c = _as_fraction(coeff)
                if c:
                    clean[(mono, q)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, wmax, qmax):
        return cls(wmax, qmax)

    @classmethod
    def const(cls, value, wmax, qmax):
        return cls(wmax, qmax, {((), 0): _as_fraction(value)})

    @classmethod
    def var(cls, name, wmax, qmax):
        return cls(wmax, qmax, {(mono_from_dict({name: 1}), 0): Fraction(1)})

    @classmethod
    def y(cls, wmax, qmax):
        return cls(wmax, qmax, {((), 1): Fraction(1)})

    @classmethod
    def from_terms(cls, terms, wmax, qmax):
        """Build from {(monomial, ydeg): coefficient}; out-of-range terms drop."""
        return cls(wmax, qmax, terms)

    @classmethod
    def from_y_poly(cls, coeffs, wmax, qmax):
        """Series sum(coeffs[q] * y^q) from a sequence of rationals."""
        return cls(wmax, qmax, {((), q): c for q, c in enumerate(coeffs)})

    # -- basic structure ----------------------------------------------

    def _require_same(self, other):
        if self.wmax != other.wmax or self.qmax != other.qmax:
            raise TruncationMismatchError(
                "truncation mismatch: (%d, %d) vs (%d, %d)"
                % (self.wmax, self.qmax, other.wmax, other.qmax)
            )

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WSeries):
            return NotImplemented
        return (
            self.wmax == other.wmax
            and self.qmax == other.qmax
            and self.terms == other.terms
        )

    def get(self, mono=(), q=0):
        """Coefficient of a single (monomial, y^q) term (0 if absent)."""
        return self.terms.get((mono, q), Fraction(0))

    def constant_term(self):
        return self.terms.get(((), 0), Fraction(0))

    def min_weight(self):
        """Smallest weight carried by any term, or None for the zero series."""
        if not self.terms:
            return None
        return min(mono_weight(m) for (m, _q) in self.terms)

    def max_y_degree(self):
        if not self.terms:
            return -1
        return max(q for (_m, q) in self.terms)

    def sorted_items(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (mono_weight(kv[0][0]), kv[0][1], _mono_sort_key(kv[0][0])),
        )

    def truncate(self, wmax=None, qmax=None):
        """Re-truncate to (possibly) smaller orders."""
        w = self.wmax if wmax is None else wmax
        q = self.qmax if qmax is None else qmax
        if w > self.wmax or q > self.qmax:
            raise TruncationDeficitError(
                "cannot extend truncation (%d, %d) to (%d, %d)"
                % (self.wmax, self.qmax, w, q)
            )
        return WSeries(w, q, self.terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WSeries.const(other, self.wmax, self.qmax)
        elif not isinstance(other, WSeries):
            return NotImplemented
        self._require_same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return WSeries(self.wmax, self.qmax, out)

    __radd__ = __add__

    def __neg__(self):
        return WSeries(self.wmax, self.qmax, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WSeries.const(other, self.wmax, self.qmax)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return WSeries.zero(self.wmax, self.qmax)
            return WSeries(
                self.wmax, self.qmax, {k: v * c for k, v in self.terms.items()}
            )
        if not isinstance(other, WSeries):
            return NotImplemented
        self._require_same(other)
        wmax, qmax = self.wmax, self.qmax
        # bucket the right factor by weight so whole blocks prune early
        buckets = {}
        for (m, q), c in other.terms.items():
            buckets.setdefault(mono_weight(m), []).append((m, q, c))
        out = {}
        for (m1, q1), c1 in self.terms.items():
            w1 = mono_weight(m1)
            qroom = qmax - q1
            for w2, items in buckets.items():
                if w1 + w2 > wmax:
                    continue
                for m2, q2, c2 in items:
                    if q2 > qroom:
                        continue
                    key = (mono_mul(m1, m2), q1 + q2)
                    prev = out.get(key)
                    out[key] = c1 * c2 if prev is None else prev + c1 * c2
        return WSeries(wmax, qmax, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        result = WSeries.const(1, self.wmax, self.qmax)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        """Multiplicative inverse, exact to (wmax, qmax).

        Graded Newton iteration: the error 1 - a*x lies in the ideal of
        positive (weight + y-degree) terms and squares each step, so
        convergence needs only log2(wmax + qmax + 1) rounds.
        """
        c = self.constant_term()
        if not c:
            raise NotAUnitError("constant (weight-0, y^0) term is zero")
        one = WSeries.const(1, self.wmax, self.qmax)
        x = WSeries.const(Fraction(1, 1) / c, self.wmax, self.qmax)
        for _ in range(self.wmax + self.qmax + 2):
            err = one - self * x
            if err.is_zero():
                return x
            x = x + x * err
        raise ArithmeticError("inverse iteration failed to terminate")

    def exp(self):
        """exp of a series with no weight-0 content (pure-y terms included)."""
        if any(mono_weight(m) == 0 for (m, _q) in self.terms):
            raise ValueError("exp needs every term to have weight >= 1")
        result = WSeries.const(1, self.wmax, self.qmax)
        term = WSeries.const(1, self.wmax, self.qmax)
        for k in range(1, self.wmax + 1):
            term = term * self * Fraction(1, k)
            if term.is_zero():
                break
            result = result + term
        return result

    def log(self):
        """log of 1 + (weight >= 1 terms); inverse of :meth:`exp`."""
        u = self - 1
        if any(mono_weight(m) == 0 for (m, _q) in u.terms):
            raise ValueError("log needs constant term 1 and no other weight-0 terms")
        result = WSeries.zero(self.wmax, self.qmax)
        power = WSeries.const(1, self.wmax, self.qmax)
        for k in range(1, self.wmax + 1):
            power = power * u
            if power.is_zero():
                break
            result = result + power * Fraction((-1) ** (k + 1), k)
        return result

    # -- structural operations ------------------------------------------

    def substitute(self, var, replacement):
        """Replace ``var`` by a series of minimal weight >= 1, re-truncating."""
        var_weight(var)
        self._require_same(replacement)
        mw = replacement.min_weight()
        if mw is not None and mw < 1:
            raise ValueError(
                "substitution would create negative-weight content: "
                "replacement has weight-0 terms"
            )
        parts = self.coefficients_of(var)
        out = WSeries.zero(self.wmax, self.qmax)
        power = WSeries.const(1, self.wmax, self.qmax)
        for e in range(0, (max(parts) if parts else 0) + 1):
            if e:
                power = power * replacement
            if e in parts:
                out = out + parts[e] * power
        return out

    def reweight_by_one_plus_y(self):
        """Multiply the weight-k component by (1+y)^k; the t -> t(1+y) map."""
        out = {}
        for (m, q), c in self.terms.items():
            k = mono_weight(m)
            for j in range(0, min(k, self.qmax - q) + 1):
                key = (m, q + j)
                add = c * comb(k, j)
                prev = out.get(key)
                out[key] = add if prev is None else prev + add
        return WSeries(self.wmax, self.qmax, out)

    def diff_h(self):
        """Formal d/dH.  The weight bound is kept; callers track validity."""
        out = {}
        for (m, q), c in self.terms.items():
            d = dict(m)
            e = d.get("H", 0)
            if not e:
                continue
            if e == 1:
                d.pop("H")
            else:
                d["H"] = e - 1
            out[(mono_from_dict(d), q)] = c * e
        return WSeries(self.wmax, self.qmax, out)

    def coeff(self, k, q):
        """Weight-k, y^q homogeneous part as a y-free series."""
        if not (0 <= k <= self.wmax):
            raise ValueError("weight %d out of range (wmax=%d)" % (k, self.wmax))
        if not (0 <= q <= self.qmax):
            raise ValueError("y-degree %d out of range (qmax=%d)" % (q, self.qmax))
        out = {}
        for (m, qq), c in self.terms.items():
            if qq == q and mono_weight(m) == k:
                out[(m, 0)] = c
        return WSeries(self.wmax, self.qmax, out)

    def y_slice(self, q):
        """Coefficient of y^q over all weights, as a y-free series."""
        if not (0 <= q <= self.qmax):
            raise ValueError("y-degree %d out of range (qmax=%d)" % (q, self.qmax))
        out = {}
        for (m, qq), c in self.terms.items():
            if qq == q:
                out[(m, 0)] = c
        return WSeries(self.wmax, self.qmax, out)

    def weight_component(self, k):
        """Weight-k homogeneous part, keeping the y-direction."""
        if not (0 <= k <= self.wmax):
            raise ValueError("weight %d out of range (wmax=%d)" % (k, self.wmax))
        out = {}
        for (m, q), c in self.terms.items():
            if mono_weight(m) == k:
                out[(m, q)] = c
        return WSeries(self.wmax, self.qmax, out)

    def coefficients_of(self, var):
        """Decompose by powers of ``var``: {exponent: series with var removed}."""
        var_weight(var)
        split = {}
        for (m, q), c in self.terms.items():
            d = dict(m)
            e = d.pop(var, 0)
            split.setdefault(e, {})[(mono_from_dict(d), q)] = c
        return {
            e: WSeries(self.wmax, self.qmax, terms) for e, terms in split.items()
        }

    # -- display --------------------------------------------------------

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, q), c in self.sorted_items():
            factors = ["%s^%d" % (v, e) if e > 1 else v for v, e in m]
            if q:
                factors.append("y^%d" % q if q > 1 else "y")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def to_latex(self):
        if not self.terms:
            return "0"

        def coeff_tex(c):
            if c.denominator == 1:
                return str(abs(c.numerator))
            return r"\frac{%d}{%d}" % (abs(c.numerator), c.denominator)

        def var_tex(v, e):
            base = "c_{%s}" % v[1:] if v.startswith("c") else v
            return base if e == 1 else "%s^{%d}" % (base, e)

        parts = []
        for (m, q), c in self.sorted_items():
            factors = [var_tex(v, e) for v, e in m]
            if q:
                factors.append("y" if q == 1 else "y^{%d}" % q)
            body = " ".join(factors)
            if not body:
                body = coeff_tex(c)
            elif abs(c) != 1:
                body = coeff_tex(c) + " " + body
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        body = self.to_text()
        if len(body) > 120:
            body = body[:117] + "..."
        return "WSeries(wmax=%d, qmax=%d: %s)" % (self.wmax, self.qmax, body)

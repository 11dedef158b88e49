"""Shared test utilities: random series generators and an independent
numeric evaluator used as a brute-force oracle."""

from fractions import Fraction

from ellgenus import WSeries, mono_from_dict


def random_series(rng, variables, wmax, qmax, nterms=10, allow_const=True):
    terms = {}
    for _ in range(nterms):
        mono = {}
        budget = rng.randrange(0 if allow_const else 1, wmax + 1)
        while budget > 0:
            name = rng.choice(variables)
            w = 1 if name in ("L", "H") else int(name[1:])
            if w > budget:
                break
            mono[name] = mono.get(name, 0) + 1
            budget -= w
        q = rng.randrange(0, qmax + 1)
        key = (mono_from_dict(mono), q)
        coeff = Fraction(rng.randrange(-8, 9), rng.randrange(1, 4))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return WSeries(wmax, qmax, terms)


def evaluate_numeric(series, values, y=None):
    """Evaluate a series at rational variable values, fully independently
    of the library's substitution machinery.

    Returns a dict {y-degree: Fraction}, or a single Fraction when a value
    for y is supplied.
    """
    by_q = {}
    for (mono, q), coeff in series.terms.items():
        total = coeff
        for var, exp in mono:
            total *= Fraction(values[var]) ** exp
        by_q[q] = by_q.get(q, Fraction(0)) + total
    if y is None:
        return by_q
    return sum(v * Fraction(y) ** q for q, v in by_q.items())

"""Realizability of Fibonacci-type sequences: Dold congruences, orbit counts,
Pisano periods and the (P, Q) conjecture scanner."""

import json as _json
from fractions import Fraction

from . import _core
from ._core import (
    IndexOverflow,
    SpecSyntaxError,
    canonical_spec,
    desmond_check,
    divisors,
    factorize,
    fib,
    fib_mod,
    golden_mean_fix_count,
    is_prime,
    lemma34_check,
    lucas,
    lucas_u,
    lucas_v,
    mobius,
    mobius_convolve,
    pisano,
    pisano_bruteforce,
    pisano_prime_power,
    spec_eval,
    spec_eval_mod,
)

__version__ = "0.1.0"


def orbit_count(spec, n):
    """Number of closed orbits of length n, as an exact Fraction."""
    num, den = _core.orbit_count(spec, n)
    return Fraction(num, den)


def dold_scan(spec, max_n, workers=1, exact_bound=50):
    return _json.loads(_core.dold_scan(spec, max_n, workers, exact_bound))


def sign_check(spec, max_n):
    return _json.loads(_core.sign_check(spec, max_n))


def growth_certificate(spec, max_n):
    return _json.loads(_core.growth_certificate(spec, max_n))


def orbit_counts(spec, max_n):
    return _json.loads(_core.orbit_counts(spec, max_n))


def denominator_witnesses(spec, prime_bound, workers=1):
    return _json.loads(_core.denominator_witnesses(spec, prime_bound, workers))


def conjecture_scan(p_range, q_range, max_n, workers=1, sign_bound=10):
    return _json.loads(_core.conjecture_scan(p_range, q_range, max_n, workers, sign_bound))


def wall_verify(max_p, max_exponent=3):
    return _json.loads(_core.wall_verify(max_p, max_exponent))

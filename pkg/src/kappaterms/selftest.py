"""Condensed oracle suites behind the ``selftest`` CLI subcommand.

Each suite re-derives expected values independently (expansion oracles,
brute-force powers, word enumeration) and checks the implementation against
them on a seeded sample.  Runs in seconds; the pytest suite is the full
version.
"""
from __future__ import annotations

import random

from .catalog import random_term, random_word, standard_fixtures
from .finsemi import delta_eval
from .pointlikes import compute_pointlikes
from .superpose import beta_prime, nu, phi
from .terms import eval_term, expand_clip, word_term
from .theta import ThetaContext
from .truncation import D_SIDE, prefix_k
from .terms import Window, Letter, Concat, _Empty


def _windows_of(word: str, k: int):
    return tuple(Window(word[i:i + k + 1]) for i in range(max(0, len(word) - k)))


def _letters(t):
    if isinstance(t, _Empty):
        return ()
    if isinstance(t, Letter):
        return (t.symbol,)
    if isinstance(t, Concat):
        out = []
        for p in t.parts:
            out.extend(_letters(p))
        return tuple(out)
    raise AssertionError("expected a finite word term")


def _suite_exponents(rng):
    checks = 0
    for fx in standard_fixtures():
        s = fx.semigroup
        for x in s.elements():
            for q in range(1, 6):
                lhs = s.omega_minus_q(s.power(x, q), 1)
                rhs = s.omega_minus_q(x, q)
                if lhs != rhs:
                    return False, checks
                if s.mul(rhs, s.power(x, q)) != s.omega_power(x):
                    return False, checks
                checks += 1
    return True, checks


def _suite_phi_words(rng):
    checks = 0
    for _ in range(200):
        k = rng.randint(1, 4)
        w = random_word(rng, "abc", 60)
        got = _letters(phi(word_term(w), k))
        if got != _windows_of(w, k):
            return False, checks
        checks += 1
    return True, checks


def _suite_nu_beta(rng):
    checks = 0
    for _ in range(200):
        k = rng.randint(1, 3)
        w = random_word(rng, "ab", 10)
        t = word_term(w)
        if nu(beta_prime(t, k)) != phi(t, k):
            return False, checks
        checks += 1
    return True, checks


def _suite_truncation(rng):
    checks = 0
    for _ in range(200):
        k = rng.randint(1, 6)
        t = random_term(rng, "ab", 3)
        e = k + 2
        clip = expand_clip(t, e, k)
        if prefix_k(t, k) != clip:
            return False, checks
        checks += 1
    return True, checks


def _suite_value_preservation(rng):
    checks = 0
    for fx in standard_fixtures():
        k = fx.semigroup.order + 1
        ctx = ThetaContext(fx.semigroup, fx.gens, k)
        for _ in range(40):
            t = random_term(rng, "".join(fx.gens.alphabet), 3)
            if eval_term(ctx.theta_prime(t), fx.semigroup, fx.gens) != \
                    eval_term(t, fx.semigroup, fx.gens):
                return False, checks
            checks += 1
    return True, checks


def _suite_pointlikes(rng):
    checks = 0
    for fx in standard_fixtures():
        if fx.semigroup.order > 4:
            continue
        k = 2
        got = dict(compute_pointlikes(fx.semigroup, fx.gens, D_SIDE, k))
        brute: dict[str, set] = {}
        alphabet = fx.gens.alphabet
        words = [""]
        for _ in range(k + 4):
            words = [w + a for w in words for a in alphabet]
            for w in words:
                brute.setdefault(w[-k:], set()).add(
                    delta_eval(fx.semigroup, fx.gens, w))
        maximal = {frozenset(v) for v in brute.values()
                   if not any(set(v) < o for o in brute.values())}
        if set(got.values()) != maximal:
            return False, checks
        checks += 1
    return True, checks


SUITES = [
    ("exponent identities", _suite_exponents),
    ("window map on words", _suite_phi_words),
    ("pair route equals window map", _suite_nu_beta),
    ("truncation vs expansion oracle", _suite_truncation),
    ("value preservation", _suite_value_preservation),
    ("pointlike subsets vs brute force", _suite_pointlikes),
]


def run_selftest(seed: int = 20240901, out=print) -> bool:
    ok = True
    for name, suite in SUITES:
        passed, checks = suite(random.Random(seed))
        ok = ok and passed
        out(f"{'ok  ' if passed else 'FAIL'} {name} ({checks} checks)")
    return ok

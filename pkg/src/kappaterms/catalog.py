"""Small stock semigroups and random generators used by tests and selftest.

Every fixture comes with a generating map over a two- or three-letter
alphabet, so terms over "abc" evaluate everywhere.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .finsemi import FiniteSemigroup, GeneratorMap, adjoin_identity
from .terms import Term, concat, letter, omega_minus_one


@dataclass(frozen=True)
class Fixture:
    name: str
    semigroup: FiniteSemigroup
    gens: GeneratorMap


def trivial() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], ["e"], label="trivial")


def cyclic(n: int) -> FiniteSemigroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [f"g{i}" for i in range(n)]
    return FiniteSemigroup(table, names, label=f"Z{n}")


def left_zero(n: int) -> FiniteSemigroup:
    table = [[i] * n for i in range(n)]
    return FiniteSemigroup(table, [f"l{i}" for i in range(n)], label=f"LZ{n}")


def right_zero(n: int) -> FiniteSemigroup:
    table = [list(range(n)) for _ in range(n)]
    return FiniteSemigroup(table, [f"r{i}" for i in range(n)], label=f"RZ{n}")


def semilattice_chain(n: int) -> FiniteSemigroup:
    # meet on the chain 0 > 1 > ... (product takes the max index)
    table = [[max(i, j) for j in range(n)] for i in range(n)]
    return FiniteSemigroup(table, [f"m{i}" for i in range(n)], label=f"SL{n}")


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """Powers of a single element: x^(index) = x^(index+period)."""
    n = index + period - 1

    def wrap(e: int) -> int:
        while e > n:
            e -= period
        return e

    table = [[wrap(i + j) - 1 for j in range(1, n + 1)] for i in range(1, n + 1)]
    names = [f"x{i}" for i in range(1, n + 1)]
    return FiniteSemigroup(table, names, label=f"M({index},{period})")


def null(n: int) -> FiniteSemigroup:
    # every product is the zero element
    table = [[0] * n for _ in range(n)]
    return FiniteSemigroup(table, [f"z{i}" for i in range(n)], label=f"N{n}")


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup,
                   label: str | None = None) -> FiniteSemigroup:
    pairs = list(itertools.product(s.elements(), t.elements()))
    index = {p: i for i, p in enumerate(pairs)}
    table = [[index[(s.mul(a, c), t.mul(b, d))] for (c, d) in pairs]
             for (a, b) in pairs]
    names = [f"{s.name_of(a)}{t.name_of(b)}" for (a, b) in pairs]
    return FiniteSemigroup(table, names, label=label or f"{s.label}x{t.label}")


def transformation_semigroup(maps, points: int) -> FiniteSemigroup:
    """Closure of a set of self-maps of {0..points-1} under composition
    (left-to-right: (f*g)(x) = g(f(x)))."""
    elems = sorted({tuple(m) for m in maps})
    frontier = list(elems)
    closed = set(elems)
    while frontier:
        f = frontier.pop()
        for g in list(closed):
            for h in (tuple(g[f[x]] for x in range(points)),
                      tuple(f[g[x]] for x in range(points))):
                if h not in closed:
                    closed.add(h)
                    frontier.append(h)
    elems = sorted(closed)
    index = {f: i for i, f in enumerate(elems)}
    table = [[index[tuple(g[f[x]] for x in range(points))] for g in elems]
             for f in elems]
    names = ["".join(map(str, f)) for f in elems]
    return FiniteSemigroup(table, names, label=f"T{points}")


def standard_fixtures() -> list[Fixture]:
    """The stock desk-scale fixtures: trivial, the small groups, the one-sided
    zeros, a semilattice, an aperiodic monogenic semigroup, and a
    non-commutative order-4 product."""
    lz2z2 = direct_product(left_zero(2), cyclic(2))
    return [
        Fixture("trivial", trivial(),
                GeneratorMap("abc", {"a": 0, "b": 0, "c": 0})),
        Fixture("Z2", cyclic(2),
                GeneratorMap("ab", {"a": 1, "b": 0})),
        Fixture("Z3", cyclic(3),
                GeneratorMap("ab", {"a": 1, "b": 2})),
        Fixture("LZ2", left_zero(2),
                GeneratorMap("ab", {"a": 0, "b": 1})),
        Fixture("RZ2", right_zero(2),
                GeneratorMap("ab", {"a": 0, "b": 1})),
        Fixture("SL2", semilattice_chain(2),
                GeneratorMap("ab", {"a": 0, "b": 1})),
        Fixture("M(3,1)", monogenic(3, 1),
                GeneratorMap("ab", {"a": 0, "b": 1})),
        Fixture("LZ2xZ2", lz2z2,
                GeneratorMap("ab", {"a": 1, "b": 2})),
    ]


def _pool() -> list[FiniteSemigroup]:
    return [
        trivial(), cyclic(2), cyclic(3), cyclic(4), cyclic(5),
        left_zero(2), left_zero(3), right_zero(2), right_zero(3),
        semilattice_chain(2), semilattice_chain(3),
        monogenic(2, 1), monogenic(3, 1), monogenic(2, 2), monogenic(2, 3),
        monogenic(3, 2), null(2), null(3),
        direct_product(left_zero(2), cyclic(2)),
    ]


def random_semigroup(rng: random.Random, max_order: int = 5) -> FiniteSemigroup:
    """A randomly chosen small semigroup: stock families plus random
    transformation semigroups."""
    if rng.random() < 0.4:
        for _ in range(40):
            points = rng.choice((2, 3))
            maps = [tuple(rng.randrange(points) for _ in range(points))
                    for _ in range(2)]
            s = transformation_semigroup(maps, points)
            if s.order <= max_order:
                return s
    choices = [s for s in _pool() if s.order <= max_order]
    return rng.choice(choices)


def random_evaluation(rng: random.Random, symbols, max_order: int = 5):
    """A random semigroup with identity adjoined and random images for the
    given symbols; suitable for evaluating possibly-empty window terms."""
    s1 = adjoin_identity(random_semigroup(rng, max_order))
    images = {sym: rng.randrange(s1.order) for sym in symbols}
    return s1, GeneratorMap(tuple(symbols), images)


def random_word(rng: random.Random, alphabet: str, max_len: int,
                min_len: int = 1) -> str:
    n = rng.randint(min_len, max_len)
    return "".join(rng.choice(alphabet) for _ in range(n))


def random_term(rng: random.Random, alphabet: str = "abc",
                max_depth: int = 4) -> Term:
    """A random term: letters at the leaves, concatenations and
    (omega-1)-powers above, nesting bounded by ``max_depth``."""
    if max_depth <= 0:
        return letter(rng.choice(alphabet))
    roll = rng.random()
    if roll < 0.35:
        return letter(rng.choice(alphabet))
    if roll < 0.75:
        n = rng.randint(2, 3)
        return concat(*(random_term(rng, alphabet, max_depth - 1)
                        for _ in range(n)))
    return omega_minus_one(random_term(rng, alphabet, max_depth - 1))

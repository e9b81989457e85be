"""Truncation operators and the identity checkers built on them.

``prefix_k``/``suffix_k`` evaluate a term in the finite semigroup of words of
length at most k, whose product truncates to the first (K-side) or last
(D-side) k letters.  For terms with powers the infinite prefix and suffix are
ultimately periodic; `UPWord` is their canonical form and makes equality of
such streams decidable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm

from .errors import CapError, PreconditionError
from .terms import (Concat, Letter, OmegaMinusOne, Term, _Empty,
                    word_or_infinite, INFINITE)
from .verdict import Verdict, HOLDS, failure

K_SIDE = "K"
D_SIDE = "D"


def take_prefix(word: str, k: int) -> str:
    return word[:k]


def take_suffix(word: str, k: int) -> str:
    return word[-k:] if len(word) > k else word


class TruncSemigroup:
    """Words of length 1..k with product ``u*v = trunc_k(uv)``.

    Products are computed on demand from the words; a full Cayley table is
    never materialized because the order grows geometrically in k.
    """

    def __init__(self, kind: str, alphabet, k: int, cap: int = 100_000):
        if kind not in (K_SIDE, D_SIDE):
            raise ValueError(f"kind must be {K_SIDE!r} or {D_SIDE!r}")
        alphabet = tuple(alphabet)
        if k < 1 or not alphabet:
            raise ValueError("need k >= 1 and a non-empty alphabet")
        self.kind = kind
        self.alphabet = alphabet
        self.k = k
        if self.order > cap:
            raise CapError(f"truncation semigroup of order {self.order} "
                           f"exceeds the cap {cap}")

    @property
    def order(self) -> int:
        a = len(self.alphabet)
        return sum(a ** i for i in range(1, self.k + 1))

    def elements(self):
        for n in range(1, self.k + 1):
            for tup in itertools.product(self.alphabet, repeat=n):
                yield "".join(tup)

    def truncate(self, word: str) -> str:
        if self.kind == K_SIDE:
            return take_prefix(word, self.k)
        return take_suffix(word, self.k)

    def mul(self, u: str, v: str) -> str:
        return self.truncate(u + v)

    def omega_minus_q(self, u: str, q: int) -> str:
        """Group-inverse power of ``u``, by direct orbit enumeration."""
        if q < 1:
            raise ValueError("q must be a positive integer")
        seen: dict[str, int] = {}
        x, m = u, 1
        while x not in seen:
            seen[x] = m
            x = self.mul(x, u)
            m += 1
        index, period = seen[x], m - seen[x]
        r = (-q) % period
        m = index + ((r - index) % period)
        out = u
        for _ in range(m - 1):
            out = self.mul(out, u)
        return out


def build_trunc(kind: str, alphabet, k: int, cap: int = 100_000) -> TruncSemigroup:
    return TruncSemigroup(kind, alphabet, k, cap)


def _word_omega_minus_one(u: str, mul) -> str:
    seen: dict[str, int] = {}
    x, m = u, 1
    while x not in seen:
        seen[x] = m
        x = mul(x, u)
        m += 1
    index, period = seen[x], m - seen[x]
    target = index + ((period - 1 - index) % period)
    out = u
    for _ in range(target - 1):
        out = mul(out, u)
    return out


def _trunc_eval(t: Term, k: int, side: str) -> str:
    if isinstance(t, _Empty):
        return ""
    if side == K_SIDE:
        mul = lambda u, v: take_prefix(u + v, k)
    else:
        mul = lambda u, v: take_suffix(u + v, k)
    memo: dict[int, str] = {}

    def go(t: Term) -> str:
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(t, Letter):
            val = t.symbol
            if not isinstance(val, str):
                raise ValueError("truncation operates on base-alphabet terms")
        elif isinstance(t, Concat):
            val = ""
            for p in t.parts:
                val = mul(val, go(p))
        elif isinstance(t, OmegaMinusOne):
            val = _word_omega_minus_one(go(t.base), mul)
        else:
            raise AssertionError(t)
        memo[key] = val
        return val

    return go(t)


def prefix_k(t: Term, k: int) -> str:
    """The word of length <= k every sufficiently long expansion of ``t``
    starts with (the whole word when ``t`` is shorter)."""
    if k < 1:
        raise ValueError("k must be positive")
    return _trunc_eval(t, k, K_SIDE)


def suffix_k(t: Term, k: int) -> str:
    """Mirror of `prefix_k`: the stable length-<=k suffix."""
    if k < 1:
        raise ValueError("k must be positive")
    return _trunc_eval(t, k, D_SIDE)


def natural_projection(t: Term, kind: str, k: int) -> str:
    """Image of ``t`` in the K-side or D-side truncation semigroup."""
    if kind == K_SIDE:
        return prefix_k(t, k)
    if kind == D_SIDE:
        return suffix_k(t, k)
    raise ValueError(f"kind must be {K_SIDE!r} or {D_SIDE!r}")


# ---------------------------------------------------------------------------
# ultimately periodic one-sided infinite words

def _primitive_root(v: str) -> str:
    n = len(v)
    for d in range(1, n + 1):
        if n % d == 0 and v[:d] * (n // d) == v:
            return v[:d]
    raise AssertionError


@dataclass(frozen=True)
class UPWord:
    """An ultimately periodic one-sided infinite word ``pre . period^inf``.

    Rightward words grow to the right (prefix streams); leftward words grow
    to the left (suffix streams), with ``pre`` at the anchored right end.
    Construction canonicalizes: the period is primitive and the preperiod is
    shortest, so equality of the dataclass is equality of the streams.
    """

    pre: str
    period: str
    leftward: bool = False

    def __post_init__(self):
        if not self.period:
            raise ValueError("the period must be non-empty")
        v = _primitive_root(self.period)
        u = self.pre
        if not self.leftward:
            while u and u[-1] == v[-1]:
                u = u[:-1]
                v = v[-1] + v[:-1]
        else:
            while u and u[0] == v[0]:
                u = u[1:]
                v = v[1:] + v[0]
        object.__setattr__(self, "pre", u)
        object.__setattr__(self, "period", v)

    def ray(self, n: int) -> str:
        """The first ``n`` letters counted from the anchored end outward.

        For rightward words this is the length-n prefix in reading order;
        for leftward words the length-n suffix read right-to-left.
        """
        reps = -(-max(0, n - len(self.pre)) // len(self.period)) + 1
        if not self.leftward:
            return (self.pre + self.period * reps)[:n]
        return (self.period * reps + self.pre)[::-1][:n]

    def letters(self, n: int) -> str:
        """First n letters (rightward) or last n letters in reading order
        (leftward)."""
        if not self.leftward:
            return self.ray(n)
        return self.ray(n)[::-1]

    def comparison_bound(self, other: "UPWord") -> int:
        return (len(self.pre) + len(other.pre)
                + 2 * lcm(len(self.period), len(other.period)))

    def divergence(self, other: "UPWord"):
        """1-based position (from the anchored end) of the first difference,
        or None if the streams are equal."""
        if self.leftward != other.leftward:
            raise ValueError("cannot compare words of different directions")
        n = self.comparison_bound(other)
        a, b = self.ray(n), other.ray(n)
        for i in range(n):
            if a[i] != b[i]:
                return i + 1
        return None

    def __str__(self):
        if self.leftward:
            return f"({self.period})^inf.{self.pre}" if self.pre else f"({self.period})^inf"
        return f"{self.pre}.({self.period})^inf" if self.pre else f"({self.period})^inf"


def infinite_prefix(t: Term) -> UPWord:
    """The rightward infinite word whose length-L prefix is ``prefix_k(t, L)``
    for every L.  Only defined for terms with a power node."""
    acc: list[str] = []
    cur = t
    while True:
        if isinstance(cur, OmegaMinusOne):
            base = cur.base
            w = word_or_infinite(base)
            if w is INFINITE:
                cur = base
                continue
            return UPWord("".join(acc), w)
        if isinstance(cur, Concat):
            for p in cur.parts:
                if isinstance(p, Letter):
                    acc.append(p.symbol)
                else:
                    cur = p
                    break
            else:
                raise PreconditionError("term is a finite word")
            continue
        raise PreconditionError("term is a finite word")


def infinite_suffix(t: Term) -> UPWord:
    """Mirror of `infinite_prefix`: the leftward infinite suffix stream."""
    acc: list[str] = []
    cur = t
    while True:
        if isinstance(cur, OmegaMinusOne):
            base = cur.base
            w = word_or_infinite(base)
            if w is INFINITE:
                cur = base
                continue
            return UPWord("".join(reversed(acc)), w, leftward=True)
        if isinstance(cur, Concat):
            for p in reversed(cur.parts):
                if isinstance(p, Letter):
                    acc.append(p.symbol)
                else:
                    cur = p
                    break
            else:
                raise PreconditionError("term is a finite word")
            continue
        raise PreconditionError("term is a finite word")


# ---------------------------------------------------------------------------
# identity checkers

VARIETIES = ("Kk", "Dk", "K", "D", "LI")


def check_identity(variety: str, lhs: Term, rhs: Term, k: int | None = None) -> Verdict:
    """Decide ``lhs = rhs`` over one of the prefix/suffix pseudovarieties.

    ``Kk``/``Dk`` compare the level-k truncations.  ``K``/``D`` compare whole
    prefix/suffix streams: two finite words are equal only if identical, a
    finite and an infinite term never agree (witnessed one past the word's
    length), and two infinite terms are compared through their canonical
    ultimately periodic streams.  ``LI`` holds iff both the K- and D-checks
    hold.
    """
    if variety in ("Kk", "Dk"):
        if k is None or k < 1:
            raise ValueError(f"{variety} needs a level k >= 1")
        side = K_SIDE if variety == "Kk" else D_SIDE
        a = natural_projection(lhs, side, k)
        b = natural_projection(rhs, side, k)
        if a == b:
            return HOLDS
        return failure({"level": k, "lhs": a, "rhs": b})
    if variety in ("K", "D"):
        return _check_stream(variety, lhs, rhs)
    if variety == "LI":
        left = _check_stream("K", lhs, rhs)
        if left.fails:
            return failure({"side": "K", **left.witness})
        right = _check_stream("D", lhs, rhs)
        if right.fails:
            return failure({"side": "D", **right.witness})
        return HOLDS
    raise ValueError(f"unknown pseudovariety {variety!r}")


def _check_stream(side: str, lhs: Term, rhs: Term) -> Verdict:
    lw = word_or_infinite(lhs)
    rw = word_or_infinite(rhs)
    if lw is not INFINITE and rw is not INFINITE:
        if lw == rw:
            return HOLDS
        if side == "D":
            lw, rw = lw[::-1], rw[::-1]
        level = next((i + 1 for i, (a, b) in enumerate(zip(lw, rw)) if a != b),
                     min(len(lw), len(rw)) + 1)
        return failure({"level": level, "lhs": lw[:level][::-1] if side == "D" else lw[:level],
                        "rhs": rw[:level][::-1] if side == "D" else rw[:level]})
    if (lw is INFINITE) != (rw is INFINITE):
        finite = lw if lw is not INFINITE else rw
        return failure({"level": len(finite) + 1, "mixed": True})
    a = infinite_prefix(lhs) if side == "K" else infinite_suffix(lhs)
    b = infinite_prefix(rhs) if side == "K" else infinite_suffix(rhs)
    if a == b:
        return HOLDS
    level = a.divergence(b)
    if level is None:
        raise AssertionError("canonical forms differ but streams agree")
    return failure({"level": level, "lhs": str(a), "rhs": str(b)})

"""The k-superposition homomorphism and the pair-alphabet route to it.

``phi(t, k)`` rewrites a term over the base alphabet into one over the window
alphabet (words of length k+1), sending a word to the sequence of its
length-(k+1) factors.  ``beta_prime`` is the companion map into the pair
alphabet <w,a> with w a word of length <= k, ``bk_action`` the left action of
short words on it, and ``nu`` the letter-to-window collapse; composing nu
after beta_prime recovers phi.

Power nodes are handled by saturation: the base is repeated until its stable
suffix has full length k, after which the tail of windows is literally
periodic and the power can be pushed onto the window term.
"""
from __future__ import annotations

from .errors import PreconditionError
from .terms import (EMPTY, BkPair, Concat, Letter, OmegaMinusOne, Term,
                    Window, _Empty, concat, finite_length, omega_minus_one,
                    word_or_infinite, word_term, INFINITE)
from .truncation import suffix_k, take_suffix


def e_term(u: str) -> Term:
    """The canonical idempotent term over the word ``u``: u^(w-1) u.

    Evaluates to the omega-power of u's image in every finite semigroup.
    """
    if not u:
        raise ValueError("e_term needs a non-empty word")
    base = word_term(u)
    return concat(omega_minus_one(base), base)


def saturation_exponent(t: Term, k: int) -> int:
    """Least p with the expansion of ``t^p`` at least k letters long."""
    n = finite_length(t)
    if n is None:
        return 1
    if n == 0:
        raise ValueError("empty power base")
    return -(-k // n)


def saturate(t: Term, k: int) -> Term:
    """Rewrite every power node so its base expands to length >= k, using
    x^(w-1) = (x^p)^(w-1) x^(p-1).  The result denotes the same element in
    every finite semigroup."""
    if isinstance(t, (_Empty, Letter)):
        return t
    if isinstance(t, Concat):
        return concat(*(saturate(p, k) for p in t.parts))
    base = saturate(t.base, k)
    p = saturation_exponent(base, k)
    y = base if p == 1 else concat(*(base,) * p)
    return concat(omega_minus_one(y), *(base,) * (p - 1))


def factor_prefix(t: Term, k: int) -> Term:
    """A term ``tau`` with ``t = prefix_k(t) . tau`` in every finite semigroup.

    Words give their residual; concatenations peel from the left; a power
    x^(w-1) is first rewritten as x^p (x^(w-1))^(p+1) so the word part covers
    the k letters to peel.
    """
    if k < 1:
        raise ValueError("k must be positive")
    w = word_or_infinite(t)
    if w is not INFINITE:
        if len(w) < k:
            raise PreconditionError(f"term of length {len(w)} is shorter than k={k}")
        return word_term(w[k:])
    if isinstance(t, OmegaMinusOne):
        base = t.base
        p = saturation_exponent(base, k)
        if finite_length(base) is None:
            # x^(w-1) = x (x^(w-1))^2 with x itself infinite
            return concat(factor_prefix(base, k),
                          omega_minus_one(base), omega_minus_one(base))
        word = word_or_infinite(base)
        rep = omega_minus_one(word_term(word))
        return concat(word_term((word * p)[k:]), *(rep,) * (p + 1))
    # concatenation: consume leading letters, then delegate
    run: list[str] = []
    for i, part in enumerate(t.parts):
        if isinstance(part, Letter):
            run.append(part.symbol)
            if len(run) == k:
                return concat(*t.parts[i + 1:])
        else:
            rest = t.parts[i:]
            if run:
                return factor_prefix(concat(*rest), k - len(run))
            return concat(factor_prefix(part, k), *rest[1:])
    raise AssertionError("unreachable: finite case handled above")


class SuperposeContext:
    """Window size plus the memo tables shared by `phi` and `beta_prime`.

    The tables are keyed by (subterm, incoming suffix) so shared subterms are
    transformed once; memoization is semantics-free.
    """

    def __init__(self, k: int, alphabet=None):
        if k < 1:
            raise ValueError("the window size k must be positive")
        self.k = k
        self.alphabet = tuple(alphabet) if alphabet is not None else None
        self._phi_memo: dict = {}
        self._beta_memo: dict = {}

    # -- phi ---------------------------------------------------------------

    def phi(self, t: Term) -> Term:
        """The window term: for words, the sequence of length-(k+1) factors
        (empty when the word is no longer than k)."""
        return self._phi(t, "")

    def _phi(self, t: Term, carry: str) -> Term:
        # value of phi(carry . t); the carry is a stable suffix, length <= k
        if isinstance(t, _Empty):
            return EMPTY
        key = (t, carry)
        hit = self._phi_memo.get(key)
        if hit is not None:
            return hit
        if isinstance(t, Letter):
            if not isinstance(t.symbol, str):
                raise ValueError("phi expects a term over the base alphabet")
            out = self._phi_word(t.symbol, carry)
        elif isinstance(t, Concat):
            pieces = []
            c = carry
            for chunk in _letter_chunks(t.parts):
                if isinstance(chunk, str):
                    pieces.append(self._phi_word(chunk, c))
                    c = take_suffix(c + chunk, self.k)
                else:
                    pieces.append(self._phi(chunk, c))
                    c = self._advance(c, chunk)
            out = concat(*pieces)
        elif isinstance(t, OmegaMinusOne):
            out = self._phi_power(t.base, carry)
        else:
            raise AssertionError(t)
        self._phi_memo[key] = out
        return out

    def _phi_word(self, w: str, carry: str) -> Term:
        s = carry + w
        k = self.k
        if len(s) <= k:
            return EMPTY
        return word_term(Window(s[i:i + k + 1]) for i in range(len(s) - k))

    def _phi_power(self, base: Term, carry: str) -> Term:
        # phi(carry . base^(w-1)) with the base saturated to y = base^p:
        #   phi(carry . y) . (phi(suffix_k(y) . y))^(w-2) . phi(suffix_k(y) . base^(p-1))
        k = self.k
        p = saturation_exponent(base, k)
        y = base if p == 1 else concat(*(base,) * p)
        s = suffix_k(y, k)
        head = self._phi(y, carry)
        rep = omega_minus_one(self._phi(y, s))
        pieces = [head, rep, rep]
        if p > 1:
            pieces.append(self._phi(concat(*(base,) * (p - 1)), s))
        return concat(*pieces)

    def _advance(self, carry: str, part: Term) -> str:
        return suffix_k(concat(word_term(carry), part), self.k)

    # -- beta_prime ----------------------------------------------------------

    def beta_prime(self, t: Term) -> Term:
        """The pair-alphabet term: each letter is tagged with the stable
        suffix of what precedes it."""
        if isinstance(t, _Empty):
            raise ValueError("beta_prime needs a non-empty term")
        return self._beta(t)

    def _beta(self, t: Term) -> Term:
        hit = self._beta_memo.get(t)
        if hit is not None:
            return hit
        if isinstance(t, Letter):
            if not isinstance(t.symbol, str):
                raise ValueError("beta_prime expects a term over the base alphabet")
            out = self._beta_word(t.symbol, "")
        elif isinstance(t, Concat):
            pieces = []
            c = ""
            for chunk in _letter_chunks(t.parts):
                if isinstance(chunk, str):
                    pieces.append(self._beta_word(chunk, c))
                    c = take_suffix(c + chunk, self.k)
                else:
                    pieces.append(bk_action(c, self._beta(chunk), self.k))
                    c = self._advance(c, chunk)
            out = concat(*pieces)
        elif isinstance(t, OmegaMinusOne):
            out = self._beta_power(t.base)
        else:
            raise AssertionError(t)
        self._beta_memo[t] = out
        return out

    def _beta_word(self, w: str, carry: str) -> Term:
        k = self.k
        return word_term(BkPair(take_suffix(carry + w[:i], k), w[i], k)
                         for i in range(len(w)))

    def _beta_power(self, base: Term) -> Term:
        # beta(base^(w-1)) = beta(y) . (act_s beta(y))^(w-2) . act_s beta(base^(p-1))
        # with y = base^p saturated and s = suffix_k(y)
        k = self.k
        p = saturation_exponent(base, k)
        y = base if p == 1 else concat(*(base,) * p)
        s = suffix_k(y, k)
        by = self._beta(y)
        rep = omega_minus_one(bk_action(s, by, k))
        pieces = [by, rep, rep]
        if p > 1:
            pieces.append(bk_action(s, self._beta(concat(*(base,) * (p - 1))), k))
        return concat(*pieces)


def _letter_chunks(parts):
    """Group maximal runs of base letters into plain strings."""
    buf: list[str] = []
    for p in parts:
        if isinstance(p, Letter) and isinstance(p.symbol, str):
            buf.append(p.symbol)
        else:
            if buf:
                yield "".join(buf)
                buf = []
            yield p
    if buf:
        yield "".join(buf)


def phi(t: Term, k: int) -> Term:
    return SuperposeContext(k).phi(t)


def beta_prime(t: Term, k: int) -> Term:
    return SuperposeContext(k).beta_prime(t)


def bk_action(w: str, t: Term, k: int) -> Term:
    """Left action of a word of length <= k on a pair-alphabet term: each
    letter <x,a> becomes <suffix_k(w x), a>; homomorphic on the structure."""
    if len(w) > k:
        raise ValueError("the acting word must have length at most k")
    if not w:
        return t
    return _act(w, t, k)


def _act(w: str, t: Term, k: int) -> Term:
    if isinstance(t, _Empty):
        return t
    if isinstance(t, Letter):
        sym = t.symbol
        if not isinstance(sym, BkPair):
            raise ValueError(f"symbol {sym!r} is not a pair letter")
        if sym.k != k:
            raise ValueError(f"pair letter declared for k={sym.k}, action uses k={k}")
        return Letter(BkPair(take_suffix(w + sym.left, k), sym.letter, k))
    if isinstance(t, Concat):
        return concat(*(_act(w, p, k) for p in t.parts))
    return omega_minus_one(_act(w, t.base, k))


def nu(t: Term) -> Term:
    """Collapse a pair-alphabet term to a window term: <w,a> becomes the
    window [wa] when w has full length, and disappears otherwise."""
    if isinstance(t, _Empty):
        return EMPTY
    if isinstance(t, Letter):
        sym = t.symbol
        if not isinstance(sym, BkPair):
            raise ValueError(f"symbol {sym!r} is not a pair letter")
        if len(sym.left) == sym.k:
            return Letter(Window(sym.left + sym.letter))
        return EMPTY
    if isinstance(t, Concat):
        return concat(*(nu(p) for p in t.parts))
    inner = nu(t.base)
    if isinstance(inner, _Empty):
        return EMPTY
    return omega_minus_one(inner)

"""Term algebra over structured alphabets: ASTs, parsing, printing, evaluation.

Terms are built from letters, concatenation and the (omega-1)-power; every
other exponent is parser sugar rewritten into those two constructors.
Construction goes through canonicalizing helpers (`letter`, `word_term`,
`concat`, `omega_minus_one`), so structurally equal terms have a unique
normal form:

* concatenations are flattened and never contain the empty term,
* power bases are never empty.

A term does not store its alphabet; symbols are self-describing and
`content` recovers the set of symbols that occur.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import CapError, EvalError, ParseError
from .finsemi import FiniteSemigroup, GeneratorMap


# ---------------------------------------------------------------------------
# symbols

@dataclass(frozen=True)
class Window:
    """A letter of a window alphabet: a word of length k+1, written [abc]."""

    word: str

    def __post_init__(self):
        if len(self.word) < 2:
            raise ValueError("window symbols have length at least 2")

    @property
    def k(self) -> int:
        return len(self.word) - 1

    def __str__(self):
        return f"[{self.word}]"


@dataclass(frozen=True)
class BkPair:
    """A letter of a pair alphabet: a word of length <= k plus a base letter,
    written <w,a>.  The declared k travels with the symbol."""

    left: str
    letter: str
    k: int

    def __post_init__(self):
        if len(self.letter) != 1:
            raise ValueError("the second component is a single base letter")
        if self.k < 1 or len(self.left) > self.k:
            raise ValueError("first component longer than the declared k")

    def __str__(self):
        return f"<{self.left},{self.letter}>"


Symbol = Union[str, Window, BkPair]


def symbol_text(symbol: Symbol) -> str:
    return symbol if isinstance(symbol, str) else str(symbol)


# ---------------------------------------------------------------------------
# terms

class Term:
    """Base class of the term AST.  Instances are immutable normal forms."""

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Term({to_text(self)!r})"


@dataclass(frozen=True, repr=False)
class _Empty(Term):
    pass


EMPTY = _Empty()


@dataclass(frozen=True, repr=False)
class Letter(Term):
    symbol: Symbol


@dataclass(frozen=True, repr=False)
class Concat(Term):
    parts: tuple  # at least two parts, none empty, none itself a Concat


@dataclass(frozen=True, repr=False)
class OmegaMinusOne(Term):
    base: Term  # never empty


def letter(symbol: Symbol) -> Term:
    if isinstance(symbol, str):
        if len(symbol) != 1:
            raise ValueError(f"base letters are single characters, got {symbol!r}")
    elif not isinstance(symbol, (Window, BkPair)):
        raise TypeError(f"not a symbol: {symbol!r}")
    return Letter(symbol)


def word_term(word: Iterable[Symbol]) -> Term:
    """The term spelling out a word; the empty word gives the empty term."""
    parts = tuple(Letter(s) if not isinstance(s, Letter) else s for s in word)
    for p in parts:
        letter(p.symbol)
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Concat(parts)


def concat(*terms: Term) -> Term:
    parts: list[Term] = []
    for t in terms:
        if isinstance(t, _Empty):
            continue
        if isinstance(t, Concat):
            parts.extend(t.parts)
        elif isinstance(t, Term):
            parts.append(t)
        else:
            raise TypeError(f"not a term: {t!r}")
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Concat(tuple(parts))


def omega_minus_one(t: Term) -> Term:
    if isinstance(t, _Empty):
        raise ValueError("the power base must be non-empty")
    if not isinstance(t, Term):
        raise TypeError(f"not a term: {t!r}")
    return OmegaMinusOne(t)


# ---------------------------------------------------------------------------
# structural queries

def size(t: Term) -> int:
    """Number of letter occurrences (power bases counted once)."""
    if isinstance(t, _Empty):
        return 0
    if isinstance(t, Letter):
        return 1
    if isinstance(t, Concat):
        return sum(size(p) for p in t.parts)
    return size(t.base)


def has_power(t: Term) -> bool:
    if isinstance(t, OmegaMinusOne):
        return True
    if isinstance(t, Concat):
        return any(has_power(p) for p in t.parts)
    return False


class _Infinite:
    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def word_or_infinite(t: Term):
    """The word a power-free term spells, or the INFINITE sentinel."""
    if has_power(t):
        return INFINITE
    return expand(t, 1)


def finite_length(t: Term):
    """Length of the word a power-free term spells; None for terms with powers."""
    return None if has_power(t) else size(t)


def content(t: Term) -> frozenset:
    """The set of symbols occurring in ``t`` (the content of the term)."""
    out: set = set()
    _collect_symbols(t, out)
    return frozenset(out)


def _collect_symbols(t: Term, out: set):
    if isinstance(t, Letter):
        out.add(t.symbol)
    elif isinstance(t, Concat):
        for p in t.parts:
            _collect_symbols(p, out)
    elif isinstance(t, OmegaMinusOne):
        _collect_symbols(t.base, out)


# ---------------------------------------------------------------------------
# finite expansions

def expand(t: Term, e: int):
    """Replace every (omega-1)-power by an e-fold repetition, recursively.

    Returns a plain string for terms over the base alphabet, otherwise a
    tuple of symbols.  This is the desk-scale oracle for prefix, suffix and
    factor computations.
    """
    if e < 1:
        raise ValueError("expansion exponent must be positive")
    out: list[Symbol] = []
    _expand_into(t, e, out)
    if all(isinstance(s, str) for s in out):
        return "".join(out)
    return tuple(out)


def _expand_into(t: Term, e: int, out: list):
    if isinstance(t, _Empty):
        return
    if isinstance(t, Letter):
        out.append(t.symbol)
    elif isinstance(t, Concat):
        for p in t.parts:
            _expand_into(p, e, out)
    else:
        body: list[Symbol] = []
        _expand_into(t.base, e, body)
        for _ in range(e):
            out.extend(body)


def expand_clip(t: Term, e: int, limit: int) -> str:
    """First ``limit`` letters of ``expand(t, e)`` for a base-alphabet term,
    computed without materializing the full expansion."""
    out: list[str] = []
    _clip_left(t, e, limit, out)
    return "".join(out)


def _clip_left(t: Term, e: int, limit: int, out: list) -> None:
    if len(out) >= limit or isinstance(t, _Empty):
        return
    if isinstance(t, Letter):
        out.append(t.symbol)
    elif isinstance(t, Concat):
        for p in t.parts:
            if len(out) >= limit:
                return
            _clip_left(p, e, limit, out)
    else:
        for _ in range(e):
            if len(out) >= limit:
                return
            _clip_left(t.base, e, limit, out)


def expand_clip_right(t: Term, e: int, limit: int) -> str:
    """Last ``limit`` letters of ``expand(t, e)``, mirror of expand_clip."""
    out: list[str] = []
    _clip_right(t, e, limit, out)
    out.reverse()
    return "".join(out)


def _clip_right(t: Term, e: int, limit: int, out: list) -> None:
    if len(out) >= limit or isinstance(t, _Empty):
        return
    if isinstance(t, Letter):
        out.append(t.symbol)
    elif isinstance(t, Concat):
        for p in reversed(t.parts):
            if len(out) >= limit:
                return
            _clip_right(p, e, limit, out)
    else:
        for _ in range(e):
            if len(out) >= limit:
                return
            _clip_right(t.base, e, limit, out)


# ---------------------------------------------------------------------------
# evaluation

def eval_term(t: Term, semigroup: FiniteSemigroup, gens: GeneratorMap) -> int:
    """Evaluate a term: letters through the generator map, concatenation by
    the table, the (omega-1)-power by the group-inverse power.

    The empty term needs an adjoined identity to evaluate into.
    """
    memo: dict[int, int] = {}

    def go(t: Term) -> int:
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(t, Letter):
            val = gens.image(t.symbol)
        elif isinstance(t, Concat):
            val = go(t.parts[0])
            for p in t.parts[1:]:
                val = semigroup.mul(val, go(p))
        elif isinstance(t, OmegaMinusOne):
            val = semigroup.omega_minus_q(go(t.base), 1)
        else:
            raise AssertionError(t)
        memo[key] = val
        return val

    if isinstance(t, _Empty):
        if semigroup.has_adjoined_identity:
            return 0
        raise EvalError("the empty term only evaluates into an adjoined identity")
    return go(t)


# ---------------------------------------------------------------------------
# parsing

_DEFAULT_UNFOLD_LIMIT = 10_000


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self):
        c = self.peek()
        if c is not None:
            self.pos += 1
        return c

    def expect(self, c: str):
        got = self.take()
        if got != c:
            raise ParseError(f"expected {c!r} at position {self.pos}, got {got!r}")

    def number(self) -> int:
        digits = []
        while True:
            c = self.peek()
            if c is None or not c.isdigit():
                break
            digits.append(self.take())
        if not digits:
            raise ParseError(f"expected a number at position {self.pos}")
        return int("".join(digits))


def _is_letter(c) -> bool:
    return c is not None and c.isalpha() and c.islower() and c.isascii()


def parse_term(text: str, k: int | None = None,
               unfold_limit: int = _DEFAULT_UNFOLD_LIMIT) -> Term:
    """Parse the term grammar.

    Grammar: juxtaposition is concatenation; ``x^w``, ``x^w+q``, ``x^w-q``
    and numeric powers are sugar over the (omega-1)-power; ``[abc]`` is a
    window letter, ``<ab,c>`` a pair letter, ``1`` the empty term.  Pair
    letters adopt the declared ``k`` when given (the textual form does not
    carry it), defaulting to the length of their first component.
    """
    sc = _Scanner(text)
    t = _parse_sequence(sc, k, unfold_limit)
    if sc.peek() is not None:
        raise ParseError(f"unexpected {sc.peek()!r} at position {sc.pos}")
    return t


def _parse_sequence(sc: _Scanner, k, unfold_limit) -> Term:
    factors = []
    while True:
        c = sc.peek()
        if c is None or c in ")]>,":
            break
        factors.append(_parse_factor(sc, k, unfold_limit))
    if not factors:
        raise ParseError(f"expected a term at position {sc.pos}")
    return concat(*factors)


def _parse_factor(sc: _Scanner, k, unfold_limit) -> Term:
    atom = _parse_atom(sc, k, unfold_limit)
    if sc.peek() != "^":
        return atom
    sc.take()
    c = sc.peek()
    if c == "w":
        sc.take()
        nxt = sc.peek()
        if nxt == "-":
            sc.take()
            q = sc.number()
            if q < 1:
                raise ParseError("zero exponent")
            if isinstance(atom, _Empty):
                return EMPTY
            return concat(*(omega_minus_one(atom),) * q)
        if nxt == "+":
            sc.take()
            q = sc.number()
            if q < 1:
                raise ParseError("zero exponent")
            if isinstance(atom, _Empty):
                return EMPTY
            _guard_unfold(atom, q + 1, unfold_limit)
            return concat(omega_minus_one(atom), *(atom,) * (q + 1))
        if isinstance(atom, _Empty):
            return EMPTY
        return concat(omega_minus_one(atom), atom)
    if c is not None and c.isdigit():
        n = sc.number()
        if n < 1:
            raise ParseError("zero exponent")
        _guard_unfold(atom, n, unfold_limit)
        return concat(*(atom,) * n)
    raise ParseError(f"bad exponent at position {sc.pos}")


def _guard_unfold(atom: Term, n: int, unfold_limit: int):
    if size(atom) * n > unfold_limit:
        raise CapError(f"unfolding to {size(atom) * n} letters exceeds the "
                       f"limit of {unfold_limit}")


def _parse_atom(sc: _Scanner, k, unfold_limit) -> Term:
    c = sc.peek()
    if c == "(":
        sc.take()
        t = _parse_sequence(sc, k, unfold_limit)
        sc.expect(")")
        return t
    if c == "[":
        sc.take()
        letters = []
        while _is_letter(sc.peek()):
            letters.append(sc.take())
        sc.expect("]")
        if len(letters) < 2:
            raise ParseError("window letters need at least two characters")
        return Letter(Window("".join(letters)))
    if c == "<":
        sc.take()
        left = []
        while _is_letter(sc.peek()):
            left.append(sc.take())
        sc.expect(",")
        a = sc.take()
        if not _is_letter(a):
            raise ParseError("pair letters end with a single base letter")
        sc.expect(">")
        left_word = "".join(left)
        kk = k if k is not None else max(1, len(left_word))
        if len(left_word) > kk:
            raise ParseError(f"pair component {left_word!r} longer than k={kk}")
        return Letter(BkPair(left_word, a, kk))
    if c == "1":
        sc.take()
        return EMPTY
    if _is_letter(c):
        return Letter(sc.take())
    raise ParseError(f"unexpected {c!r} at position {sc.pos}")


# ---------------------------------------------------------------------------
# printing

def to_text(t: Term) -> str:
    """Print a term in the same grammar `parse_term` reads."""
    if isinstance(t, _Empty):
        return "1"
    if isinstance(t, Concat):
        return "".join(_factor_text(p) for p in t.parts)
    return _factor_text(t)


def _factor_text(t: Term) -> str:
    if isinstance(t, Letter):
        return symbol_text(t.symbol)
    if isinstance(t, OmegaMinusOne):
        base = t.base
        if isinstance(base, Letter):
            return f"{symbol_text(base.symbol)}^w-1"
        return f"({to_text(base)})^w-1"
    raise AssertionError(f"not a factor: {t!r}")

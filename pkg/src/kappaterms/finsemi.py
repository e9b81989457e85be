"""Finite semigroup arithmetic: Cayley tables, power structure, word evaluation.

Elements are dense integer indices ``0..order-1``; names are presentation
only.  All values are immutable after construction and every operation is a
pure function, so instances are safe to share freely.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AlgebraError, EvalError, ParseError


@dataclass(frozen=True)
class MonogenicProfile:
    """Least ``(index, period)`` with ``s^index = s^(index+period)``."""

    index: int
    period: int


class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    The table is checked for associativity eagerly; at the desk-scale orders
    this package targets (a few dozen elements) the O(n^3) sweep is cheap and
    it guards every downstream computation.
    """

    def __init__(self, table, names=None, label="S", has_adjoined_identity=False):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise AlgebraError("a semigroup needs at least one element")
        for row in table:
            if len(row) != n:
                raise AlgebraError("multiplication table is not square")
            for entry in row:
                if not isinstance(entry, int) or not 0 <= entry < n:
                    raise AlgebraError(f"table entry {entry!r} is not an element index")
        if names is None:
            names = tuple(f"s{i}" for i in range(n))
        else:
            names = tuple(str(x) for x in names)
        if len(names) != n:
            raise AlgebraError("need exactly one name per element")
        if len(set(names)) != n:
            raise AlgebraError("element names must be pairwise distinct")
        for s in range(n):
            row_s = table[s]
            for t in range(n):
                row_st = table[row_s[t]]
                row_t = table[t]
                for u in range(n):
                    if row_st[u] != row_s[row_t[u]]:
                        raise AlgebraError(
                            f"table is not associative at ({s},{t},{u})")
        if has_adjoined_identity:
            for s in range(n):
                if table[0][s] != s or table[s][0] != s:
                    raise AlgebraError("index 0 is flagged as identity but is not one")
        self.table = table
        self.names = names
        self.label = label
        self.has_adjoined_identity = has_adjoined_identity
        self._profiles: dict[int, MonogenicProfile] = {}
        self._name_index = {name: i for i, name in enumerate(names)}

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def power(self, s: int, m: int) -> int:
        if m < 1:
            raise ValueError("powers start at exponent 1")
        out = s
        for _ in range(m - 1):
            out = self.table[out][s]
        return out

    def is_idempotent(self, s: int) -> bool:
        return self.table[s][s] == s

    def index_of(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise EvalError(f"unknown element name {name!r}") from None

    def name_of(self, s: int) -> str:
        return self.names[s]

    def monogenic_profile(self, s: int) -> MonogenicProfile:
        """Least (index, period) of the subsemigroup generated by ``s``.

        The power sequence s, s^2, ... is the orbit of a deterministic map,
        so the first repeated value closes the unique cycle; its first
        occurrence is the least index and the gap the least period.
        """
        cached = self._profiles.get(s)
        if cached is not None:
            return cached
        seen: dict[int, int] = {}
        x, m = s, 1
        while x not in seen:
            seen[x] = m
            x = self.table[x][s]
            m += 1
        prof = MonogenicProfile(index=seen[x], period=m - seen[x])
        self._profiles[s] = prof
        return prof

    def omega_power(self, s: int) -> int:
        """The unique idempotent among the powers of ``s``."""
        prof = self.monogenic_profile(s)
        m = -(-prof.index // prof.period) * prof.period
        return self.power(s, m)

    def omega_minus_q(self, s: int, q: int) -> int:
        """The group inverse of ``s^(omega+q)`` in the cycle group of ``s``.

        Satisfies ``omega_minus_q(s, q) * s^q = omega_power(s)``.
        """
        if q < 1:
            raise ValueError("q must be a positive integer")
        prof = self.monogenic_profile(s)
        r = (-q) % prof.period
        m = prof.index + ((r - prof.index) % prof.period)
        return self.power(s, m)

    def __repr__(self):
        return f"FiniteSemigroup({self.label}, order={self.order})"


class GeneratorMap:
    """Images of an ordered alphabet of symbols in a semigroup.

    Base letters are one-character strings; the composite window and pair
    symbols from the terms module are equally valid keys.
    """

    def __init__(self, alphabet: Iterable, images: Mapping):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AlgebraError("alphabet symbols must be distinct")
        self.images = dict(images)
        missing = [a for a in self.alphabet if a not in self.images]
        if missing:
            raise AlgebraError(f"no image for symbols {missing!r}")

    def image(self, symbol) -> int:
        try:
            return self.images[symbol]
        except KeyError:
            raise EvalError(f"unknown symbol {symbol!r}") from None

    def is_generating(self, semigroup: FiniteSemigroup) -> bool:
        """Whether the images generate every element (modulo a fresh identity)."""
        target = set(semigroup.elements())
        if semigroup.has_adjoined_identity:
            target.discard(0)
        gens = {self.images[a] for a in self.alphabet}
        closed = set(gens)
        frontier = list(closed)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = semigroup.mul(x, g)
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
        return target <= closed

    def __repr__(self):
        pairs = ", ".join(f"{a!r}->{self.images[a]}" for a in self.alphabet)
        return f"GeneratorMap({pairs})"


def delta_eval(semigroup: FiniteSemigroup, gens: GeneratorMap, word) -> int:
    """Left-to-right fold of the table over the generator images of ``word``."""
    val = None
    for sym in word:
        img = gens.image(sym)
        val = img if val is None else semigroup.mul(val, img)
    if val is None:
        raise ValueError("cannot evaluate the empty word in a semigroup")
    return val


def adjoin_identity(semigroup: FiniteSemigroup, name: str = "1") -> FiniteSemigroup:
    """A copy of ``semigroup`` with a fresh identity adjoined at index 0.

    The identity is adjoined even when the semigroup already is a monoid, so
    that constraint maps always have an unambiguous codomain.
    """
    if name in semigroup.names:
        raise AlgebraError(
            f"cannot adjoin identity: an element is already named {name!r}")
    n = semigroup.order
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        table[0][j] = j
        table[j][0] = j
    for i in range(n):
        for j in range(n):
            table[i + 1][j + 1] = semigroup.table[i][j] + 1
    names = (name,) + semigroup.names
    return FiniteSemigroup(table, names, label=f"{semigroup.label}^1",
                           has_adjoined_identity=True)


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def load_semigroup(text: str):
    """Parse the line-oriented semigroup file format.

    Returns ``(semigroup, generator_map_or_None)``.  Format::

        semigroup <name> <n>
        elements <n names>
        <n rows of n names>          # row s lists s*t for t in element order
        generators a=<name> b=<name> # optional

    Comments start with ``#``; lines are whitespace-insensitive.
    """
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty semigroup file")
    head = rows[0].split()
    if len(head) != 3 or head[0] != "semigroup":
        raise ParseError("first line must be 'semigroup <name> <n>'")
    label = head[1]
    try:
        n = int(head[2])
    except ValueError:
        raise ParseError(f"bad element count {head[2]!r}") from None
    if n < 1:
        raise ParseError("element count must be positive")
    if len(rows) < 2 + n:
        raise ParseError("semigroup file ends before the table is complete")
    elems = rows[1].split()
    if not elems or elems[0] != "elements":
        raise ParseError("second line must be 'elements <names>'")
    names = elems[1:]
    if len(names) != n:
        raise ParseError(f"expected {n} element names, got {len(names)}")
    if len(set(names)) != n:
        raise AlgebraError("element names must be pairwise distinct")
    index = {name: i for i, name in enumerate(names)}
    table = []
    for r in range(n):
        entries = rows[2 + r].split()
        if len(entries) != n:
            raise ParseError(f"table row {r} has {len(entries)} entries, expected {n}")
        try:
            table.append([index[e] for e in entries])
        except KeyError as exc:
            raise ParseError(f"unknown element name {exc.args[0]!r} in table row {r}") from None
    rest = rows[2 + n:]
    gens = None
    if rest:
        if len(rest) > 1 or not rest[0].startswith("generators"):
            raise ParseError("unexpected trailing content after the table")
        pairs = rest[0].split()[1:]
        if not pairs:
            raise ParseError("empty generators line")
        letters, images = [], {}
        for item in pairs:
            if "=" not in item:
                raise ParseError(f"bad generator assignment {item!r}")
            letter, _, name = item.partition("=")
            if len(letter) != 1 or not letter.islower() or not letter.isalpha():
                raise ParseError(f"generator letter must be a single lowercase letter, got {letter!r}")
            if letter in images:
                raise ParseError(f"duplicate generator letter {letter!r}")
            if name not in index:
                raise ParseError(f"unknown element name {name!r} in generators line")
            letters.append(letter)
            images[letter] = index[name]
        gens = GeneratorMap(letters, images)
    semigroup = FiniteSemigroup(table, names, label=label)
    if gens is not None and not gens.is_generating(semigroup):
        raise AlgebraError("generator images do not generate the semigroup")
    return semigroup, gens

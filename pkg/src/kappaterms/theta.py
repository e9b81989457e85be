"""Value-preserving rewriting of terms over a fixed finite semigroup.

With a window size k strictly larger than the semigroup, every length-k word
has two positions 1 < i <= j <= k where the evaluation of the prefixes
repeats; inserting the idempotent of the repeated block there does not change
the evaluated value.  `theta_prime` exploits this window by window: it maps
any term to one whose windows are all stabilized by idempotent insertions
while evaluating to the same element.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraError, PreconditionError
from .finsemi import FiniteSemigroup, GeneratorMap, delta_eval
from .superpose import SuperposeContext, e_term
from .terms import (EMPTY, Concat, Letter, OmegaMinusOne, Term, Window,
                    _Empty, concat, omega_minus_one, word_term)
from .truncation import prefix_k, suffix_k


@dataclass(frozen=True)
class IndexPair:
    """Positions 1 < i <= j <= k (window-relative, 1-based) with
    delta(a_1..a_{i-1}) = delta(a_1..a_j), both minimal (j first), and
    ``word`` the repeated block a_i..a_j."""

    i: int
    j: int
    word: str


class ThetaContext:
    """A semigroup, a generator map and a window size k > |S|.

    Index pairs are computed window-relatively and cached per window word, so
    occurrences of the same window share one pair.  Each cached pair is
    machine-checked on insertion: appending the omega-power of the repeated
    block after position j must not change the evaluation.
    """

    def __init__(self, semigroup: FiniteSemigroup, gens: GeneratorMap, k: int):
        if k <= semigroup.order:
            raise PreconditionError(
                f"window size k={k} must exceed the semigroup order {semigroup.order}")
        self.semigroup = semigroup
        self.gens = gens
        self.k = k
        self._pairs: dict[str, IndexPair] = {}
        self._psi_letters: dict[str, Term] = {}
        self._superpose = SuperposeContext(k)

    # -- index pairs --------------------------------------------------------

    def fix_ij(self, w: str) -> IndexPair:
        if len(w) != self.k:
            raise ValueError(f"expected a window of length {self.k}, got {w!r}")
        hit = self._pairs.get(w)
        if hit is not None:
            return hit
        S, gens = self.semigroup, self.gens
        vals = {}
        acc = None
        for pos, a in enumerate(w, start=1):
            img = gens.image(a)
            acc = img if acc is None else S.mul(acc, img)
            vals[pos] = acc
        for j in range(2, self.k + 1):
            for i in range(2, j + 1):
                if vals[i - 1] == vals[j]:
                    pair = IndexPair(i, j, w[i - 1:j])
                    self._certify(w, pair, vals)
                    self._pairs[w] = pair
                    return pair
        raise AlgebraError(
            "no repeated prefix value; pigeonhole needs k > |S|")

    def _certify(self, w: str, pair: IndexPair, vals: dict):
        # appending (a_i..a_j)^omega after a_1..a_j must be invisible to delta
        sp = vals[pair.j]
        e = self.semigroup.omega_power(delta_eval(self.semigroup, self.gens, pair.word))
        if self.semigroup.mul(sp, e) != sp:
            raise AlgebraError(f"internal: idempotent certificate fails for {w!r}")

    def index_pairs(self) -> dict[str, IndexPair]:
        """All pairs fixed so far (a snapshot, for certification sweeps)."""
        return dict(self._pairs)

    # -- the transformation pieces -------------------------------------------

    def lambda_k(self, t: Term) -> Term:
        """Head anchor: terms shorter than k stay put; otherwise the prefix
        up to j followed by the idempotent of the repeated block.  Depends
        only on prefix_k(t)."""
        if isinstance(t, _Empty):
            raise ValueError("lambda_k needs a non-empty term")
        p = prefix_k(t, self.k)
        if len(p) < self.k:
            return word_term(p)
        pair = self.fix_ij(p)
        return concat(word_term(p[:pair.j]), e_term(pair.word))

    def rho_k(self, t: Term) -> Term:
        """Tail anchor, mirror of `lambda_k` on the suffix; empty for terms
        shorter than k."""
        if isinstance(t, _Empty):
            raise ValueError("rho_k needs a non-empty term")
        s = suffix_k(t, self.k)
        if len(s) < self.k:
            return EMPTY
        pair = self.fix_ij(s)
        return concat(e_term(pair.word), word_term(s[pair.j:]))

    def psi_k(self, t: Term) -> Term:
        """Letter-wise collapse of a window term: each window of length k+1
        becomes idempotent . middle letters . idempotent, using the index
        pairs of its two length-k sub-windows in absolute positions."""
        if isinstance(t, _Empty):
            return EMPTY
        if isinstance(t, Letter):
            sym = t.symbol
            if not isinstance(sym, Window):
                raise ValueError(f"symbol {sym!r} is not a window letter")
            if sym.k != self.k:
                raise ValueError(f"window of length {sym.k + 1}, expected {self.k + 1}")
            return self._psi_letter(sym.word)
        if isinstance(t, Concat):
            return concat(*(self.psi_k(p) for p in t.parts))
        if isinstance(t, OmegaMinusOne):
            return omega_minus_one(self.psi_k(t.base))
        raise AssertionError(t)

    def _psi_letter(self, w: str) -> Term:
        hit = self._psi_letters.get(w)
        if hit is not None:
            return hit
        k = self.k
        first = self.fix_ij(w[:k])
        second = self.fix_ij(w[1:])
        j2 = second.j + 1  # absolute position within w
        if j2 < first.j:
            raise AlgebraError("internal: window pair positions are not monotone")
        out = concat(e_term(first.word), word_term(w[first.j:j2]),
                     e_term(second.word))
        self._psi_letters[w] = out
        return out

    def theta_k(self, t: Term) -> Term:
        """Collapse of all windows: empty exactly on words of length <= k."""
        return self.psi_k(self._superpose.phi(t))

    def theta_prime(self, t: Term) -> Term:
        """The full transformation lambda_k(t) . theta_k(t) . rho_k(t).

        Evaluates to the same element as ``t`` in the context's semigroup,
        for every term.
        """
        if isinstance(t, _Empty):
            raise ValueError("theta_prime needs a non-empty term")
        return concat(self.lambda_k(t), self.theta_k(t), self.rho_k(t))

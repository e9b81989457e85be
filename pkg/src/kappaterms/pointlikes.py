"""Pointlike equation systems: checking, subset computation, transformation.

A system is a single chain x_1 = ... = x_m with a constraint phi mapping each
variable into the semigroup with a fresh identity adjoined.  A candidate
solution assigns each variable a term; `check_solution` verifies the chain
against a pseudovariety checker in one of three modes, and
`transform_solution` rewrites a level-k solution into one whose window images
agree at every level, preserving all evaluated values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ParseError, PreconditionError, RejectedSolution
from .finsemi import FiniteSemigroup, GeneratorMap, adjoin_identity
from .superpose import phi
from .terms import Term, _Empty, content, eval_term, parse_term
from .theta import ThetaContext
from .truncation import (TruncSemigroup, check_identity, prefix_k,
                         suffix_k)
from .verdict import Verdict, HOLDS, failure, unknown_at


# ---------------------------------------------------------------------------
# systems

@dataclass
class PointlikeSystem:
    """The chain x_1 = ... = x_m with constraints into S^1."""

    variables: tuple
    constraints: dict  # variable -> element index of the adjoined semigroup

    def __post_init__(self):
        if len(self.variables) < 2:
            raise ValueError("a pointlike system chains at least two variables")
        missing = [x for x in self.variables if x not in self.constraints]
        if missing:
            raise ValueError(f"unconstrained variables: {missing}")


def with_identity(semigroup: FiniteSemigroup, gens: GeneratorMap):
    """The adjoined-identity semigroup and the generator map shifted into it."""
    s1 = adjoin_identity(semigroup)
    gens1 = GeneratorMap(gens.alphabet,
                         {a: gens.images[a] + 1 for a in gens.alphabet})
    return s1, gens1


def parse_system(text: str, semigroup: FiniteSemigroup, gens: GeneratorMap):
    """Parse the system file format.

    Lines (comments start with ``#``)::

        vars x1 x2 ...
        phi x1=<element-name> ...     # "1" names the adjoined identity
        eta x1=<term> ...             # "1" is the empty term

    Returns ``(system, eta)`` with eta a dict of terms.
    """
    s1, _ = with_identity(semigroup, gens)
    variables: list = []
    constraints: dict = {}
    eta: dict = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "vars":
            variables.extend(args)
        elif kind in ("phi", "eta"):
            for item in args:
                if "=" not in item:
                    raise ParseError(f"bad assignment {item!r}")
                var, _, value = item.partition("=")
                if kind == "phi":
                    constraints[var] = s1.index_of(value)
                else:
                    eta[var] = parse_term(value)
        else:
            raise ParseError(f"unknown system line {kind!r}")
    if not variables:
        raise ParseError("system file declares no variables")
    stray = (set(constraints) | set(eta)) - set(variables)
    if stray:
        raise ParseError(f"assignments for undeclared variables: {sorted(stray)}")
    missing = [x for x in variables if x not in eta]
    if missing:
        raise ParseError(f"no candidate term for variables: {missing}")
    return PointlikeSystem(tuple(variables), constraints), eta


# ---------------------------------------------------------------------------
# pseudovariety checkers

class VChecker:
    """An identity oracle for one pseudovariety.

    ``check`` returns holds only when the identity provably holds for the
    named pseudovariety and fails only with a machine-checkable witness.
    """

    name = "abstract"

    def check(self, lhs: Term, rhs: Term) -> Verdict:
        raise NotImplementedError


class SlChecker(VChecker):
    """Semilattices: an identity holds exactly when the contents agree."""

    name = "Sl"

    def check(self, lhs: Term, rhs: Term) -> Verdict:
        a, b = content(lhs), content(rhs)
        if a == b:
            return HOLDS
        return failure({"only_lhs": sorted(map(str, a - b)),
                        "only_rhs": sorted(map(str, b - a))})


class TruncationChecker(VChecker):
    """The prefix/suffix pseudovarieties, delegated to `check_identity`."""

    def __init__(self, variety: str, k: int | None = None):
        self.variety = variety
        self.k = k
        self.name = f"{variety}({k})" if k is not None else variety

    def check(self, lhs: Term, rhs: Term) -> Verdict:
        return check_identity(self.variety, lhs, rhs, k=self.k)


class FalsificationChecker(VChecker):
    """Evaluates both sides in a finite list of semigroups.

    Sound for failures (a distinguishing semigroup is a witness); when every
    listed semigroup agrees the answer is unknown at the list's size.
    """

    name = "falsifier"

    def __init__(self, instances: Iterable):
        # instances: (label, semigroup, gens); identities are adjoined so
        # empty window images evaluate
        self._instances = []
        for label, semigroup, gens in instances:
            if not semigroup.has_adjoined_identity:
                semigroup = adjoin_identity(semigroup)
                gens = GeneratorMap(gens.alphabet,
                                    {a: gens.images[a] + 1 for a in gens.alphabet})
            self._instances.append((label, semigroup, gens))

    def check(self, lhs: Term, rhs: Term) -> Verdict:
        for label, semigroup, gens in self._instances:
            a = eval_term(lhs, semigroup, gens)
            b = eval_term(rhs, semigroup, gens)
            if a != b:
                return failure({"semigroup": label,
                                "lhs": semigroup.name_of(a),
                                "rhs": semigroup.name_of(b)})
        return unknown_at(len(self._instances))


def sl_checker() -> VChecker:
    return SlChecker()


def k_checker() -> VChecker:
    return TruncationChecker("K")


def d_checker() -> VChecker:
    return TruncationChecker("D")


def li_checker() -> VChecker:
    return TruncationChecker("LI")


def kk_checker(k: int) -> VChecker:
    return TruncationChecker("Kk", k)


def dk_checker(k: int) -> VChecker:
    return TruncationChecker("Dk", k)


# ---------------------------------------------------------------------------
# solution checking

MODES = ("plain", "dk", "d")


def check_solution(system: PointlikeSystem, semigroup: FiniteSemigroup,
                   gens: GeneratorMap, eta: dict, checker: VChecker,
                   mode: str = "plain", k: int | None = None,
                   bound: int | None = None) -> Verdict:
    """Verify a candidate solution of the chain.

    The constraint delta(eta(x)) = phi(x) is checked first and fails hard on
    mismatch.  Then each adjacent pair is checked: ``plain`` asks the checker
    directly; ``dk`` asks for equal level-k prefixes and suffixes plus the
    checker on the window images; ``d`` asks for the full prefix/suffix
    streams to agree plus the checker on window images at every level up to
    ``bound`` - all levels passing yields unknown-at-bound, since the level
    quantifier is unbounded.  Syntactically equal pairs hold outright.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "dk" and (k is None or k < 1):
        raise ValueError("dk mode needs the level k")
    if mode == "d" and (bound is None or bound < 1):
        raise ValueError("d mode needs a positive level bound")
    s1, gens1 = with_identity(semigroup, gens)
    for x in system.variables:
        if x not in eta:
            raise ValueError(f"candidate solution is not total: missing {x!r}")
        got = eval_term(eta[x], s1, gens1)
        want = system.constraints[x]
        if got != want:
            return failure({"kind": "constraint", "variable": x,
                            "expected": s1.name_of(want), "got": s1.name_of(got)})
    saw_unknown = False
    for x, y in zip(system.variables, system.variables[1:]):
        lhs, rhs = eta[x], eta[y]
        if lhs == rhs:
            continue
        verdict = _check_pair(lhs, rhs, checker, mode, k, bound)
        if verdict.fails:
            return failure({"kind": "pair", "pair": (x, y), **verdict.witness})
        if verdict.unknown:
            saw_unknown = True
    if saw_unknown:
        return unknown_at(bound if mode == "d" else 0)
    return HOLDS


def _check_pair(lhs: Term, rhs: Term, checker: VChecker, mode: str,
                k: int | None, bound: int | None) -> Verdict:
    if mode == "plain":
        return checker.check(lhs, rhs)
    if mode == "dk":
        a, b = prefix_k(lhs, k), prefix_k(rhs, k)
        if a != b:
            return failure({"condition": "prefix", "level": k, "lhs": a, "rhs": b})
        a, b = suffix_k(lhs, k), suffix_k(rhs, k)
        if a != b:
            return failure({"condition": "suffix", "level": k, "lhs": a, "rhs": b})
        inner = checker.check(phi(lhs, k), phi(rhs, k))
        if inner.fails:
            return failure({"condition": "window-image", "level": k, **inner.witness})
        return inner
    li = check_identity("LI", lhs, rhs)
    if li.fails:
        return failure({"condition": "stream", **li.witness})
    for level in range(1, bound + 1):
        inner = checker.check(phi(lhs, level), phi(rhs, level))
        if inner.fails:
            return failure({"condition": "window-image", "level": level,
                            **inner.witness})
    return unknown_at(bound)


# ---------------------------------------------------------------------------
# pointlike subsets

def compute_pointlikes(semigroup: FiniteSemigroup, gens: GeneratorMap,
                       kind: str, k: int, cap: int = 100_000):
    """Maximal pointlike subsets for the level-k prefix or suffix projection.

    For every word w of length <= k, collect the set of values of all words
    projecting onto w, by fixpoint relaxation over right multiplication by
    generators; return the inclusion-maximal sets, each with a witness word.
    """
    ts = TruncSemigroup(kind, gens.alphabet, k, cap)
    sets: dict[str, set] = {}
    for a in gens.alphabet:
        sets.setdefault(a, set()).add(gens.images[a])
    changed = True
    while changed:
        changed = False
        for w in sorted(sets):
            current = sets[w]
            for a in gens.alphabet:
                img = gens.images[a]
                target = ts.mul(w, a)
                bucket = sets.setdefault(target, set())
                add = {semigroup.mul(s, img) for s in current} - bucket
                if add:
                    bucket |= add
                    changed = True
    # inclusion-maximal sets, deduplicated, lexicographically least witness
    frozen = {w: frozenset(v) for w, v in sets.items()}
    out = []
    seen = set()
    for w in sorted(frozen, key=lambda w: (len(w), w)):
        fs = frozen[w]
        if fs in seen or any(fs < other for other in frozen.values()):
            continue
        seen.add(fs)
        out.append((w, fs))
    return out


# ---------------------------------------------------------------------------
# the transformation pipeline

@dataclass
class TransformReport:
    """What `transform_solution` verified, in checkable form."""

    input_verdict: Verdict
    delta_verdict: Verdict
    d_verdict: Verdict
    bound: int
    levels: dict = field(default_factory=dict)  # (x, y) -> {level: bool}

    def overall(self) -> Verdict:
        if self.delta_verdict.fails:
            return self.delta_verdict
        return self.d_verdict

    def machine_block(self) -> str:
        verdict = self.overall()
        witness = verdict.witness if verdict.witness is not None else "-"
        return (f"verdict: {verdict.status}\n"
                f"bound: {self.bound}\n"
                f"witness: {witness}")

    def text(self) -> str:
        lines = [f"input solution (level-k check): {self.input_verdict}",
                 f"value preservation: {self.delta_verdict}",
                 f"stream-level check: {self.d_verdict}"]
        for pair in sorted(self.levels):
            marks = self.levels[pair]
            ok = sum(1 for v in marks.values() if v)
            lines.append(f"window images {pair[0]}={pair[1]}: "
                         f"{ok}/{len(marks)} levels pass")
        lines.append(self.machine_block())
        return "\n".join(lines)


def transform_solution(system: PointlikeSystem, semigroup: FiniteSemigroup,
                       gens: GeneratorMap, eta_k: dict, k: int,
                       checker: VChecker, bound: int | None = None):
    """Rewrite a verified level-k solution through `theta_prime`.

    Refuses when k is not larger than the semigroup or when the input fails
    the level-k check.  Returns the transformed solution and a report with
    the constraint re-verification (exact), the stream-level verdict at
    ``bound`` (default 2k) and the per-level pass matrix.
    """
    if k <= semigroup.order:
        raise PreconditionError(
            f"window size k={k} must exceed the semigroup order {semigroup.order}")
    if bound is None:
        bound = 2 * k
    input_verdict = check_solution(system, semigroup, gens, eta_k, checker,
                                   mode="dk", k=k)
    if input_verdict.fails:
        raise RejectedSolution(
            f"candidate is not a level-{k} solution: {input_verdict}",
            verdict=input_verdict)
    ctx = ThetaContext(semigroup, gens, k)
    eta = {x: t if isinstance(t, _Empty) else ctx.theta_prime(t)
           for x, t in eta_k.items()}
    s1, gens1 = with_identity(semigroup, gens)
    delta_verdict = HOLDS
    for x in system.variables:
        got = eval_term(eta[x], s1, gens1)
        want = system.constraints[x]
        if got != want:
            delta_verdict = failure({"kind": "internal-error", "variable": x,
                                     "expected": s1.name_of(want),
                                     "got": s1.name_of(got)})
            break
    d_verdict = check_solution(system, semigroup, gens, eta, checker,
                               mode="d", bound=bound)
    levels: dict = {}
    for x, y in zip(system.variables, system.variables[1:]):
        lhs, rhs = eta[x], eta[y]
        marks = {}
        for level in range(1, bound + 1):
            marks[level] = bool(checker.check(phi(lhs, level),
                                              phi(rhs, level)).holds
                                ) if lhs != rhs else True
        levels[(x, y)] = marks
    report = TransformReport(input_verdict=input_verdict,
                             delta_verdict=delta_verdict,
                             d_verdict=d_verdict, bound=bound, levels=levels)
    return eta, report

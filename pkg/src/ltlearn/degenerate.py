"""Fragments with direct answers.

Shortest-formula learners for tiny operator sets, and constructive
separators of polynomial size for the richer fragments; the latter decide
existence and give ``learn_minimal`` its search cap.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .formula import (
    And, Eventually, Formula, Globally, Letter, Next, Op, Or, FALSE, TRUE,
    conjunction, disjunction, dualize, next_n, parse_operators,
)
from .sample import (
    LearnResult, Sample, collapse_runs, common_weak_subword_avoiding,
    is_weak_subword,
)
from .semantics import TraceBatch

__all__ = [
    "learn_bool", "learn_unary", "learn_Gand", "learn_For_fixed",
    "construct_separator", "existence_cap", "AlphabetTooLargeError",
    "weak_subword_formula", "avoid_weak_subword_formula",
]

_BOOL = frozenset({Op.AND, Op.OR})
_UNARY = frozenset({Op.F, Op.G, Op.X})


class AlphabetTooLargeError(ValueError):
    pass


def _ops(ops) -> frozenset:
    return parse_operators(ops) if not isinstance(ops, frozenset) else ops


def _trivial(sample: Sample, method: str) -> LearnResult | None:
    if not sample.N:
        return LearnResult.found(TRUE, method)
    if not sample.P:
        return LearnResult.found(FALSE, method)
    return None


def _first_separator(sample: Sample, candidates: Iterable[Formula], method: str) -> LearnResult:
    batch = sample.batch()
    np_ = len(sample.P)
    pf = batch.first_mask(range(np_))
    nf = batch.first_mask(range(np_, len(batch.words)))
    memo: dict = {}
    for phi in sorted(candidates):
        t = batch.table(phi, memo)
        if (t & pf) == pf and not (t & nf):
            return LearnResult.found(phi, method)
    return LearnResult.no_separator(method)


def _right_or(parts):
    parts = list(parts)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def learn_bool(sample: Sample, ops=frozenset()) -> LearnResult:
    """Shortest separator using only ``and``/``or`` over letters.

    Such formulas only see the first letter of a word.
    """
    ops = _ops(ops)
    if not ops <= _BOOL:
        raise ValueError("learn_bool handles operator sets within {and, or}")
    hit = _trivial(sample, "bool")
    if hit:
        return hit
    A = sorted({u[0] for u in sample.P})
    B = {v[0] for v in sample.N}
    if Op.OR in ops:
        if B & set(A):
            return LearnResult.no_separator("bool")
        return LearnResult.found(_right_or([Letter(a) for a in A]), "bool")
    if len(A) == 1 and A[0] not in B:
        return LearnResult.found(Letter(A[0]), "bool")
    return LearnResult.no_separator("bool")


def learn_unary(sample: Sample, ops) -> LearnResult:
    """Shortest separator in LTL(Op) for Op within {F, G, X}.

    Up to equivalence on words of bounded length every such formula is a
    constant or one of X^k a, X^k F a, X^k G a, X^k F G a, so scanning
    that family by size is exhaustive.
    """
    ops = _ops(ops)
    if not ops <= _UNARY:
        raise ValueError("learn_unary handles operator sets within {F, G, X}")
    hit = _trivial(sample, "unary")
    if hit:
        return hit
    kmax = sample.max_length if Op.X in ops else 1
    cands = []
    for a in sample.alphabet:
        tails = [Letter(a)]
        if Op.F in ops:
            tails.append(Eventually(Letter(a)))
        if Op.G in ops:
            tails.append(Globally(Letter(a)))
        if Op.F in ops and Op.G in ops:
            tails.append(Eventually(Globally(Letter(a))))
        for k in range(kmax):
            cands.extend(next_n(k, t) for t in tails)
    return _first_separator(sample, cands, "unary")


def learn_Gand(sample: Sample) -> LearnResult:
    """Shortest separator in LTL(G, and): always one of a or G a."""
    hit = _trivial(sample, "G-and")
    if hit:
        return hit
    cands = [Letter(a) for a in sample.alphabet]
    cands += [Globally(Letter(a)) for a in sample.alphabet]
    return _first_separator(sample, cands, "G-and")


def learn_For_fixed(sample: Sample, max_alphabet: int = 8) -> LearnResult:
    """Shortest separator in LTL(F, or).

    Every such formula is a disjunction of atoms ``a`` and ``F a``.  The
    cheapest way to write ``OR_{a in S} F a | OR_{b in T} b`` is
    ``F(OR S) | OR T`` of size ``2|S| + 2|T| - 1 + [S nonempty]``; we scan
    every S and take the forced T.
    """
    if len(sample.alphabet) > max_alphabet:
        raise AlphabetTooLargeError(
            f"alphabet of {len(sample.alphabet)} letters exceeds the limit {max_alphabet}")
    hit = _trivial(sample, "F-or")
    if hit:
        return hit
    in_neg = {c for v in sample.N for c in v}
    neg_first = {v[0] for v in sample.N}
    f_ok = [a for a in sample.alphabet if a not in in_neg]
    best = None
    for r in range(len(f_ok) + 1):
        for S in combinations(f_ok, r):
            Sset = set(S)
            T = set()
            ok = True
            for u in sample.P:
                if Sset & set(u):
                    continue
                if u[0] in neg_first:
                    ok = False
                    break
                T.add(u[0])
            if not ok:
                continue
            parts = []
            if S:
                parts.append(Eventually(_right_or([Letter(a) for a in S])))
            parts.extend(Letter(b) for b in sorted(T))
            phi = _right_or(parts)
            if best is None or phi < best:
                best = phi
    if best is None:
        return LearnResult.no_separator("F-or")
    return LearnResult.found(best, "F-or")


# ---------------------------------------------------------------------------
# constructive separators

def weak_subword_formula(u) -> Formula:
    """F(a1 & F(a2 & ... F ak)): words having ``u`` as a weak subword."""
    phi = Eventually(Letter(u[-1]))
    for c in reversed(u[:-1]):
        phi = Eventually(And(Letter(c), phi))
    return phi


def _bar(a: str, alphabet) -> Formula:
    return disjunction([Letter(b) for b in alphabet if b != a])


def avoid_weak_subword_formula(v, alphabet) -> Formula:
    """G(~a1 | G(~a2 | ... G ~ak)) with ~a the other letters: words
    *without* ``v`` as a weak subword."""
    phi = Globally(_bar(v[-1], alphabet))
    for c in reversed(v[:-1]):
        phi = Globally(Or(_bar(c, alphabet), phi))
    return phi


def _last_letter_construction(sample: Sample) -> LearnResult:
    for u in sample.P:
        for v in sample.N:
            if len(v) > len(u) and v[:len(u)] == u and all(c == u[-1] for c in v[len(u):]):
                return LearnResult.no_separator("construct:G,X")
    parts = []
    for u in sample.P:
        m = len(u)
        conj = [next_n(j, Letter(u[j])) for j in range(m - 1)]
        conj.append(next_n(m - 1, Globally(Letter(u[-1]))))
        parts.append(conjunction(conj))
    return LearnResult.found(disjunction(parts), "construct:G,X")


def _prefix_construction(sample: Sample) -> LearnResult:
    for u in sample.P:
        for v in sample.N:
            if len(v) >= len(u) and v[:len(u)] == u:
                return LearnResult.no_separator("construct:X")
    parts = [conjunction([next_n(j, Letter(c)) for j, c in enumerate(u)]) for u in sample.P]
    return LearnResult.found(disjunction(parts), "construct:X")


def _FG_construction(sample: Sample) -> LearnResult:
    alphabet = sample.alphabet
    disj = []
    for u in sample.P:
        conj = []
        for v in sample.N:
            v_in_u = is_weak_subword(v, u)
            u_in_v = is_weak_subword(u, v)
            if v_in_u and u_in_v:
                return LearnResult.no_separator("construct:F,G")
            pieces = []
            if not u_in_v:
                pieces.append(weak_subword_formula(u))
            if not v_in_u:
                pieces.append(avoid_weak_subword_formula(v, alphabet))
            conj.append(conjunction(pieces))
        disj.append(conjunction(conj))
    return LearnResult.found(disjunction(disj), "construct:F,G")


def _F_or_construction(sample: Sample) -> LearnResult:
    """One conjunct per negative shared by all positives when possible;
    otherwise a disjunction over positives, each separated pairwise.

    No separator exists iff some u is a weak subword of some v with the
    same first letter: pinning the embedding at position 0 carries every
    F/and/or formula from u over to v.
    """
    firsts = {u[0] for u in sample.P}
    conj = []
    for v in sample.N:
        w = common_weak_subword_avoiding(sample.P, v)
        if w is not None:
            conj.append(weak_subword_formula(collapse_runs(w)))
        elif len(firsts) == 1 and v[0] not in firsts:
            conj.append(Letter(next(iter(firsts))))
        else:
            break
    else:
        return LearnResult.found(conjunction(conj), "construct:F")
    disj = []
    for u in sample.P:
        parts: list = []
        for v in sample.N:
            w = common_weak_subword_avoiding([u], v)
            if w is not None:
                f = weak_subword_formula(collapse_runs(w))
            elif u[0] != v[0]:
                f = Letter(u[0])
            else:
                return LearnResult.no_separator("construct:F")
            if f not in parts:
                parts.append(f)
        if not any(d == conjunction(parts) for d in disj):
            disj.append(conjunction(parts))
    return LearnResult.found(disjunction(disj), "construct:F")


def construct_separator(sample: Sample, ops) -> LearnResult:
    """A polynomial-size separator, or a proof that none exists.

    Supported operator sets contain one of {G,X,and,or}, {X,and,or}
    (without G), {F,G,and,or}, {F,and,or} or {G,and,or}; extra operators
    are allowed when the construction stays valid.
    """
    ops = _ops(ops)
    if Op.U in ops or Op.NOT in ops:
        raise ValueError("constructions cover operator sets within {F,G,X,and,or}")
    hit = _trivial(sample, "construct")
    if hit:
        return hit
    if {Op.G, Op.X, Op.AND, Op.OR} <= ops:
        return _last_letter_construction(sample)
    if {Op.X, Op.AND, Op.OR} <= ops:
        return _prefix_construction(sample)
    if Op.X in ops:
        raise ValueError(f"no construction for {sorted(o.value for o in ops)}")
    if {Op.F, Op.G, Op.AND, Op.OR} <= ops:
        return _FG_construction(sample)
    if {Op.F, Op.AND, Op.OR} <= ops:
        return _F_or_construction(sample)
    if {Op.G, Op.AND, Op.OR} <= ops:
        res = _F_or_construction(sample.swapped())
        if not res.is_found:
            return LearnResult.no_separator("construct:G")
        return LearnResult.found(dualize(res.formula), "construct:G")
    raise ValueError(f"no construction for {sorted(o.value for o in ops)}")


def existence_cap(sample: Sample, ops) -> LearnResult:
    """Some separator in LTL(ops) (a size cap for exact search), or a proof
    that there is none."""
    from .fatterns import learn_Fand_heuristic
    from .patterns import greedy_approx_xand, pattern_to_formula

    ops = _ops(ops)
    if ops <= _BOOL:
        return learn_bool(sample, ops)
    if ops <= _UNARY:
        return learn_unary(sample, ops)
    if ops == {Op.G, Op.AND}:
        return learn_Gand(sample)
    if ops == {Op.F, Op.OR}:
        return learn_For_fixed(sample)
    if ops == {Op.X, Op.AND}:
        hit = _trivial(sample, "greedy")
        if hit:
            return hit
        pat = greedy_approx_xand(sample)
        if pat is None:
            return LearnResult.no_separator("greedy")
        return LearnResult.found(pattern_to_formula(pat), "greedy")
    if ops == {Op.F, Op.AND}:
        return learn_Fand_heuristic(sample)
    return construct_separator(sample, ops)

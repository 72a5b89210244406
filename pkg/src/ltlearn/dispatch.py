"""One entry point that picks a learner for a sample and an operator set."""
from __future__ import annotations

from .degenerate import learn_bool, learn_For_fixed, learn_Gand, learn_unary
from .exact import learn_exact, learn_minimal
from .fatterns import learn_Fand_heuristic
from .formula import Op, parse_operators
from .patterns import greedy_approx_xand, learn_greedy_xand
from .sample import LearnResult, Sample

__all__ = ["learn", "MODES", "DEFAULT_MAX_SIZE"]

MODES = ("auto", "exact", "minimal", "greedy-xand", "fattern")
DEFAULT_MAX_SIZE = 10

_XAND = frozenset({Op.X, Op.AND})
_FAND = frozenset({Op.F, Op.AND})


def _bounded(res: LearnResult, max_size: int | None) -> LearnResult:
    if res.is_found and max_size is not None and res.size > max_size:
        return LearnResult.none_within(max_size, res.method)
    return res


def learn(sample: Sample, ops, mode: str = "auto",
          max_size: int | None = None, jobs: int = 1, pruned: bool = True) -> LearnResult:
    ops = parse_operators(ops)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    if mode == "exact":
        return learn_exact(sample, ops, max_size or DEFAULT_MAX_SIZE, pruned=pruned, jobs=jobs)
    if mode == "minimal":
        return _bounded(learn_minimal(sample, ops, jobs=jobs), max_size)
    if mode == "greedy-xand":
        if ops != _XAND:
            raise ValueError("greedy-xand works on the fragment {X,and} only")
        return _bounded(learn_greedy_xand(sample), max_size)
    if mode == "fattern":
        if ops != _FAND:
            raise ValueError("fattern mode works on the fragment {F,and} only")
        return _bounded(learn_Fand_heuristic(sample), max_size)

    # auto
    if Op.U not in ops and Op.NOT not in ops:
        if ops <= {Op.AND, Op.OR}:
            return _bounded(learn_bool(sample, ops), max_size)
        if ops <= {Op.F, Op.G, Op.X}:
            return _bounded(learn_unary(sample, ops), max_size)
        if ops == {Op.G, Op.AND}:
            return _bounded(learn_Gand(sample), max_size)
        if ops == {Op.F, Op.OR}:
            return _bounded(learn_For_fixed(sample), max_size)
        if ops == _XAND and sample.P and sample.N:
            pat = greedy_approx_xand(sample)
            if pat is None:
                return LearnResult.no_separator("auto")
            cap = pat.size if max_size is None else min(max_size, pat.size)
            res = learn_exact(sample, ops, cap, pruned=pruned, jobs=jobs)
            return LearnResult(res.status, res.formula, res.bound, "auto")
        try:
            res = learn_minimal(sample, ops, jobs=jobs)
        except ValueError:
            pass
        else:
            return _bounded(LearnResult(res.status, res.formula, res.bound, "auto"), max_size)
    res = learn_exact(sample, ops, max_size or DEFAULT_MAX_SIZE, pruned=pruned, jobs=jobs)
    return LearnResult(res.status, res.formula, res.bound, "auto")

"""Exhaustive search for a minimal separating formula.

Formulas are produced size layer by size layer, and inside a layer in the
formula total order, so the first separator met is the minimal one.  Each
candidate is represented by its semantics table (one int, see
``semantics.TraceBatch``) plus a recipe pointing at its children; the
actual ``Formula`` is only built for the winner.

With ``pruned=True`` a candidate whose table was already seen is dropped.
Separation depends on the table alone, and swapping a subformula for an
earlier one with the same table never makes the whole formula larger in
the order, so pruning returns exactly the formula the unpruned search
would.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator

from .formula import (
    FULL_OPS, And, Eventually, Formula, Globally, Letter, NegLetter, Next, Op,
    Or, Until, FALSE, TRUE, in_fragment, parse_operators,
)
from .sample import LearnResult, Sample
from .semantics import TraceBatch

__all__ = [
    "learn_exact", "learn_minimal", "Enumerator", "ResourceExhaustedError",
    "enumerate_formulas",
]

log = logging.getLogger(__name__)

# below this many pairs a block is cheaper to do inline than to ship out
_PARALLEL_MIN_PAIRS = 20000


class ResourceExhaustedError(RuntimeError):
    """A size layer outgrew the configured limit."""


def _as_ops(ops) -> frozenset:
    if isinstance(ops, frozenset) and all(isinstance(o, Op) for o in ops):
        return ops
    return parse_operators(ops)


def _binary_block(op, left, right, same, not_last):
    # worker side of a parallel block: tables only, in generation order
    out = []
    app = out.append
    for i, a in enumerate(left):
        rs = right[i:] if same else right
        if op == "and":
            for b in rs:
                app(a & b)
        elif op == "or":
            for b in rs:
                app(a | b)
        else:
            guard = a & not_last
            for b in rs:
                r = b
                while True:
                    nr = b | (guard & (r >> 1))
                    if nr == r:
                        break
                    r = nr
                app(r)
    return out


class Enumerator:
    """Layered enumeration of formulas over a fixed batch of words.

    ``tables[k]`` and ``recipes[k]`` hold the size-``k`` layer.  A recipe
    is ``(kind, a, b)``: a letter name for leaves, ``(size, index)``
    references for inner nodes.
    """

    def __init__(self, batch: TraceBatch, letters: Iterable[str], ops,
                 pruned: bool = True, max_layer: int | None = None,
                 jobs: int = 1):
        self.batch = batch
        self.letters = sorted(set(letters))
        self.ops = _as_ops(ops)
        self.pruned = pruned
        self.max_layer = max_layer
        self.jobs = max(1, int(jobs))
        self.tables: list[list[int]] = [[]]
        self.recipes: list[list[tuple]] = [[]]
        self._seen: set[int] = set()
        self._built: dict[tuple[int, int], Formula] = {}
        self._pool = None

    def close(self):
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    # --------------------------------------------------------------
    def build(self, size: int, index: int) -> Formula:
        key = (size, index)
        hit = self._built.get(key)
        if hit is not None:
            return hit
        kind, a, b = self.recipes[size][index]
        if kind == "L":
            f = Letter(a)
        elif kind == "N":
            f = NegLetter(a)
        elif kind in ("X", "F", "G"):
            f = {"X": Next, "F": Eventually, "G": Globally}[kind](self.build(*a))
        else:
            f = {"U": Until, "and": And, "or": Or}[kind](self.build(*a), self.build(*b))
        self._built[key] = f
        return f

    def layer(self, k: int, stop: Callable[[int], bool] | None = None) -> int | None:
        """Generate layer ``k`` (all smaller layers must exist).

        ``stop(table)`` is called on every kept candidate; the index of the
        first candidate for which it returns true is returned and the layer
        is left incomplete.
        """
        assert len(self.tables) == k, "layers must be generated in order"
        tabs: list[int] = []
        recs: list[tuple] = []
        self.tables.append(tabs)
        self.recipes.append(recs)
        seen = self._seen
        pruned = self.pruned
        limit = self.max_layer
        batch = self.batch

        def push(t, rec):
            if pruned:
                if t in seen:
                    return False
                seen.add(t)
            tabs.append(t)
            recs.append(rec)
            if limit is not None and len(tabs) > limit:
                raise ResourceExhaustedError(
                    f"layer {k} exceeds {limit} formulas; raise max_layer or lower k_max")
            return stop is not None and stop(t)

        ops = self.ops
        if k == 1:
            for c in self.letters:
                if push(batch.letter(c), ("L", c, None)):
                    return len(tabs) - 1
            return None
        if k == 2 and Op.NOT in ops:
            for c in self.letters:
                if push(batch.neg_letter(c), ("N", c, None)):
                    return len(tabs) - 1
        prev = self.tables[k - 1]
        for kind, op, fn in (("X", Op.X, batch.next), ("F", Op.F, batch.eventually),
                             ("G", Op.G, batch.globally)):
            if op not in ops:
                continue
            for i, t in enumerate(prev):
                if push(fn(t), (kind, (k - 1, i), None)):
                    return len(tabs) - 1
        for kind, op in (("U", Op.U), ("and", Op.AND), ("or", Op.OR)):
            if op not in ops:
                continue
            commutative = kind != "U"
            for s1 in range(1, k - 1):
                s2 = k - 1 - s1
                if commutative and s1 > s2:
                    break
                hit = self._binary(kind, s1, s2, commutative and s1 == s2, push)
                if hit is not None:
                    return hit
        return None

    def _binary(self, kind, s1, s2, same, push):
        left = self.tables[s1]
        right = self.tables[s2]
        pairs = len(left) * len(right)
        not_last = self.batch.not_last
        if self.jobs > 1 and pairs >= _PARALLEL_MIN_PAIRS:
            return self._binary_parallel(kind, s1, s2, same, push)
        for i, a in enumerate(left):
            start = i if same else 0
            if kind == "and":
                for j in range(start, len(right)):
                    if push(a & right[j], (kind, (s1, i), (s2, j))):
                        return len(self.tables[-1]) - 1
            elif kind == "or":
                for j in range(start, len(right)):
                    if push(a | right[j], (kind, (s1, i), (s2, j))):
                        return len(self.tables[-1]) - 1
            else:
                guard = a & not_last
                for j in range(start, len(right)):
                    b = right[j]
                    r = b
                    while True:
                        nr = b | (guard & (r >> 1))
                        if nr == r:
                            break
                        r = nr
                    if push(r, (kind, (s1, i), (s2, j))):
                        return len(self.tables[-1]) - 1
        return None

    def _binary_parallel(self, kind, s1, s2, same, push):
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.jobs)
        left = self.tables[s1]
        right = self.tables[s2]
        n = len(left)
        step = max(1, -(-n // (self.jobs * 4)))
        futures = []
        for i0 in range(0, n, step):
            chunk = left[i0:i0 + step]
            if same:
                # row i of the chunk pairs with right[i0 + i:]
                futures.append((i0, self._pool.submit(
                    _binary_block_same, kind, chunk, right, i0, self.batch.not_last)))
            else:
                futures.append((i0, self._pool.submit(
                    _binary_block, kind, chunk, right, False, self.batch.not_last)))
        # merge strictly in generation order so the result matches jobs=1
        for i0, fut in futures:
            flat = fut.result()
            pos = 0
            for i in range(i0, min(i0 + step, n)):
                start = i if same else 0
                for j in range(start, len(right)):
                    if push(flat[pos], (kind, (s1, i), (s2, j))):
                        for _, other in futures:
                            other.cancel()
                        return len(self.tables[-1]) - 1
                    pos += 1
        return None

    def formulas(self, k_max: int) -> Iterator[Formula]:
        """All kept formulas up to ``k_max`` in total order."""
        for k in range(1, k_max + 1):
            if len(self.tables) == k:
                self.layer(k)
            for i in range(len(self.tables[k])):
                yield self.build(k, i)


def _binary_block_same(op, chunk, right, i0, not_last):
    out = []
    for i, a in enumerate(chunk):
        out.extend(_binary_block(op, [a], right[i0 + i:], False, not_last))
    return out


def enumerate_formulas(words, letters, ops, k_max: int, pruned: bool = True) -> list[Formula]:
    """Convenience wrapper: every enumerated formula up to ``k_max``."""
    batch = TraceBatch(words) if words else TraceBatch([("_",)])
    return list(Enumerator(batch, letters, ops, pruned=pruned).formulas(k_max))


def learn_exact(sample: Sample, ops, k_max: int, pruned: bool = True,
                jobs: int = 1, max_layer: int | None = None) -> LearnResult:
    """Minimal separating formula of size at most ``k_max`` in ``LTL(ops)``.

    Ties are broken by the formula order.  Constants appear only as the
    whole formula: ``true`` when there are no negatives, ``false`` when
    there are no positives.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    ops = _as_ops(ops)
    if not sample.N:
        return LearnResult.found(TRUE, "exact")
    if not sample.P:
        return LearnResult.found(FALSE, "exact")
    batch = sample.batch()
    npos = len(sample.P)
    pf = batch.first_mask(range(npos))
    nf = batch.first_mask(range(npos, len(batch.words)))

    def separating(t: int) -> bool:
        return (t & pf) == pf and not (t & nf)

    with Enumerator(batch, sample.alphabet, ops, pruned=pruned,
                    max_layer=max_layer, jobs=jobs) as en:
        for k in range(1, k_max + 1):
            hit = en.layer(k, separating)
            if hit is not None:
                phi = en.build(k, hit)
                assert phi.size == k and in_fragment(phi, ops)
                assert separating(batch.table(phi))
                return LearnResult.found(phi, "exact")
            log.debug("size %d: %d formulas kept", k, len(en.tables[k]))
    return LearnResult.none_within(k_max, "exact")


def learn_minimal(sample: Sample, ops, jobs: int = 1,
                  max_layer: int | None = None) -> LearnResult:
    """Decide whether a separator exists, then search up to a proven cap.

    The cap comes from a constructive separator or a fragment-specific
    learner; fragments without either raise ``ValueError``.
    """
    from .degenerate import existence_cap

    ops = _as_ops(ops)
    if not ops <= FULL_OPS | {Op.NOT} or Op.NOT in ops:
        raise ValueError(
            "learn_minimal supports operator sets within {F,G,X,and,or}; "
            "use learn_exact with an explicit bound")
    cap = existence_cap(sample, ops)
    if not cap.is_found:
        return cap
    if cap.formula.size == 1:
        # nothing smaller exists; constants are returned as-is
        return LearnResult.found(cap.formula, "minimal")
    res = learn_exact(sample, ops, cap.formula.size, jobs=jobs, max_layer=max_layer)
    assert res.is_found, "the cap formula guarantees a hit"
    return LearnResult.found(res.formula, "minimal")

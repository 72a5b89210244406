"""Benchmark generators from hitting set and set cover.

Each generator maps a combinatorial instance to a learning sample, a size
threshold K and, when the instance is a YES instance, a witness formula of
size at most K.  The brute-force solvers double as oracles for tests.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .formula import (
    Eventually, Formula, Globally, Letter, Op, Or, conjunction, disjunction,
    format_operators, next_n, parse_operators,
)
from .fatterns import Fattern
from .patterns import Pattern, pattern_to_formula
from .sample import Sample, SampleError, save_sample, separates

__all__ = [
    "HittingSetInstance", "SetCoverInstance", "GeneratedBenchmark",
    "solve_hitting_set", "solve_set_cover", "gen_hitting_For",
    "gen_setcover_Xand", "gen_hitting_Fand_unbounded", "gen_hitting_Fand_fixed3",
    "gen_hitting_Gor_fixed3", "pad_for_X_fragments", "fixed3_constants",
    "gor_claimed_witness", "gor_complement_witness", "SOLVER_LIMIT",
]

log = logging.getLogger(__name__)

SOLVER_LIMIT = 20
PAD_WARN_LENGTH = 100_000


def _subsets(sets, ground):
    out = []
    for s in sets:
        s = frozenset(int(x) for x in s)
        if not s:
            raise ValueError("subsets must be non-empty")
        if min(s) < 1 or max(s) > ground:
            raise ValueError(f"subset {sorted(s)} leaves [1, {ground}]")
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class HittingSetInstance:
    """Subsets C_1..C_n of [1, ground] and a budget k."""

    ground: int
    sets: tuple
    k: int = 0

    def __post_init__(self):
        if self.ground < 0 or self.k < 0:
            raise ValueError("ground size and budget must be non-negative")
        object.__setattr__(self, "sets", _subsets(self.sets, self.ground))

    def to_dict(self):
        return {"ground": self.ground, "sets": [sorted(s) for s in self.sets], "k": self.k}


@dataclass(frozen=True)
class SetCoverInstance:
    """Sets S_1..S_l over the universe [1, universe] and a budget k."""

    universe: int
    sets: tuple
    k: int = 0

    def __post_init__(self):
        if self.universe < 0 or self.k < 0:
            raise ValueError("universe size and budget must be non-negative")
        sets = []
        for s in self.sets:
            s = frozenset(int(x) for x in s)
            if s and (min(s) < 1 or max(s) > self.universe):
                raise ValueError(f"set {sorted(s)} leaves [1, {self.universe}]")
            sets.append(s)
        object.__setattr__(self, "sets", tuple(sets))

    def to_dict(self):
        return {"universe": self.universe, "sets": [sorted(s) for s in self.sets], "k": self.k}


def solve_hitting_set(inst: HittingSetInstance) -> tuple[int, tuple]:
    """Smallest hitting set, lexicographically first among the smallest."""
    if inst.ground > SOLVER_LIMIT:
        raise ValueError(f"ground set larger than {SOLVER_LIMIT}")
    for r in range(inst.ground + 1):
        for H in combinations(range(1, inst.ground + 1), r):
            hs = set(H)
            if all(hs & C for C in inst.sets):
                return r, H
    raise AssertionError("the full ground set hits every non-empty subset")


def solve_set_cover(inst: SetCoverInstance) -> tuple[int, tuple] | None:
    """Smallest cover as 1-based set indices; ``None`` if some element is
    in no set."""
    if len(inst.sets) > SOLVER_LIMIT:
        raise ValueError(f"more than {SOLVER_LIMIT} sets")
    universe = set(range(1, inst.universe + 1))
    for r in range(len(inst.sets) + 1):
        for I in combinations(range(1, len(inst.sets) + 1), r):
            if universe <= set().union(*(inst.sets[i - 1] for i in I)):
                return r, I
    return None


@dataclass
class GeneratedBenchmark:
    """A generated learning problem with its threshold and certificate.

    ``witness`` is only set when it has been checked to separate the
    sample within ``K``; everything else (including claims that failed
    the check) goes to ``provenance``.
    """

    reduction: str
    sample: Sample | None
    fragment: frozenset
    K: int
    witness: Formula | None = None
    provenance: dict = field(default_factory=dict)

    def manifest(self, sample_path: str | None = None) -> dict:
        return {
            "reduction": self.reduction,
            "sample": sample_path,
            "fragment": format_operators(self.fragment),
            "K": self.K,
            "witness": None if self.witness is None else str(self.witness),
            "witness_size": None if self.witness is None else self.witness.size,
            "provenance": self.provenance,
        }

    def write(self, out_dir, stem: str | None = None) -> tuple[Path | None, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = stem or self.reduction
        sample_path = None
        if self.sample is not None:
            sample_path = out / f"{stem}.sample.json"
            save_sample(self.sample, sample_path)
        man = out / f"{stem}.manifest.json"
        man.write_text(json.dumps(self.manifest(sample_path and sample_path.name),
                                  indent=2) + "\n", encoding="utf-8")
        return sample_path, man


def _certify(bench: GeneratedBenchmark, claimed: Formula | None):
    if claimed is None or bench.sample is None:
        return bench
    ok = separates(claimed, bench.sample)
    bench.provenance["claimed_witness"] = str(claimed)
    bench.provenance["claimed_witness_size"] = claimed.size
    bench.provenance["claimed_witness_separates"] = ok
    if ok and claimed.size <= bench.K:
        bench.witness = claimed
    return bench


# ---------------------------------------------------------------------------

def gen_hitting_For(inst: HittingSetInstance) -> GeneratedBenchmark:
    """Hitting set to LTL(F, or) with threshold 2k.

    Letters a_i, b_i for each element i.  Set C_j becomes the positive
    word with a_i at position i when i is in C_j and b_i otherwise; the
    single negative is b_1 ... b_l.
    """
    l = inst.ground
    if l < 1:
        raise ValueError("ground set must be non-empty")
    alphabet = tuple(f"a{i}" for i in range(1, l + 1)) + tuple(f"b{i}" for i in range(1, l + 1))
    P = [tuple(f"a{i}" if i in C else f"b{i}" for i in range(1, l + 1)) for C in inst.sets]
    v = tuple(f"b{i}" for i in range(1, l + 1))
    sample = Sample(tuple(P), (v,), alphabet)
    kmin, H = solve_hitting_set(inst)
    bench = GeneratedBenchmark("hitting-for", sample, parse_operators("F,or"), 2 * inst.k,
                               provenance={"instance": inst.to_dict(), "k_min": kmin,
                                           "hitting_set": list(H)})
    claimed = None
    if H and kmin <= inst.k:
        claimed = Eventually(disjunction([Letter(f"a{i}") for i in H]))
    return _certify(bench, claimed)


def gen_setcover_Xand(inst: SetCoverInstance) -> GeneratedBenchmark:
    """Set cover to LTL(X, and).

    u = a^(l+1); element j gives v_j with b at position i iff j is in S_i
    (and a at position l+1); one more negative a^l b forces position l+1.
    A cover of size k gives the pattern on cover + {l+1}, size l + 2k + 1,
    which is the threshold K.
    """
    l = len(inst.sets)
    n = inst.universe
    u = ("a",) * (l + 1)
    N = []
    for j in range(1, n + 1):
        N.append(tuple("b" if j in inst.sets[i - 1] else "a" for i in range(1, l + 1)) + ("a",))
    N.append(("a",) * l + ("b",))
    K = l + 2 * inst.k + 1
    sol = solve_set_cover(inst)
    prov = {"instance": inst.to_dict(), "size_convention": "l + 2k + 1 (forced last position counted)"}
    if sol is None:
        # an uncovered element's negative equals u: no sample can be formed
        prov["unsatisfiable_cover"] = True
        prov["positive"] = [list(u)]
        prov["negative"] = [list(v) for v in N]
        return GeneratedBenchmark("setcover-xand", None, parse_operators("X,and"), K,
                                  provenance=prov)
    kmin, I = sol
    prov.update({"k_min": kmin, "cover": list(I), "unsatisfiable_cover": False})
    sample = Sample((u,), tuple(N), ("a", "b"))
    bench = GeneratedBenchmark("setcover-xand", sample, parse_operators("X,and"), K,
                               provenance=prov)
    claimed = None
    if kmin <= inst.k:
        pos = tuple(sorted(I)) + (l + 1,)
        claimed = pattern_to_formula(Pattern(pos, ("a",) * len(pos)))
    return _certify(bench, claimed)


def gen_hitting_Fand_unbounded(inst: HittingSetInstance) -> GeneratedBenchmark:
    """Hitting set over [1, m] to LTL(F, and) over the alphabet 0..m.

    u = 0 1 ... m; C_j gives v_j = 0 followed by the complement of C_j in
    increasing order.  Threshold 3k - 1; witness: the fattern of the
    sorted hitting set.
    """
    m = inst.ground
    alphabet = tuple(str(i) for i in range(m + 1))
    u = alphabet
    N = [("0",) + tuple(str(i) for i in range(1, m + 1) if i not in C) for C in inst.sets]
    sample = Sample((u,), tuple(N), alphabet)
    kmin, H = solve_hitting_set(inst)
    bench = GeneratedBenchmark("hitting-fand", sample, parse_operators("F,and"), 3 * inst.k - 1,
                               provenance={"instance": inst.to_dict(), "k_min": kmin,
                                           "hitting_set": list(H)})
    claimed = None
    if H and kmin <= inst.k:
        claimed = Fattern(tuple(str(i) for i in H)).formula
    return _certify(bench, claimed)


def fixed3_constants(m: int, k_budget: int) -> dict:
    M = 3 * m + 2
    return {"m": m, "M": M, "k'": k_budget,
            "K_fand": 6 * k_budget * M + 9 * m + 2,
            "K_gor": 6 * k_budget * M + 11 * m + 4}


def _fixed3_words(inst: HittingSetInstance):
    m = inst.ground
    M = 3 * m + 2
    ab = ("a", "b")
    # leading c: without it u has only m letters c and the witness below
    # (m + 1 letters c) cannot embed
    u = ("c",) + (ab * (M + 1) + ("c",)) * m
    N = []
    for T in inst.sets:
        v = ("c",)
        for j in range(1, m + 1):
            v += ab * (M if j in T else M + 1) + ("c",)
        N.append(v)
    return u, N


def _fixed3_witness_word(m: int, M: int, H) -> tuple:
    ab = ("a", "b")
    w = ("c",)
    for j in range(1, m + 1):
        w += (ab * (M + 1) if j in H else ab) + ("c",)
    return w


def gen_hitting_Fand_fixed3(inst: HittingSetInstance, k_budget: int | None = None) -> GeneratedBenchmark:
    """Hitting set over [1, m] to LTL(F, and) over {a, b, c}.

    M = 3m + 2, K = 6k'M + 9m + 2.  The witness is the fattern of
    c z_1 c ... z_m c with z_j = (ab)^(M+1) on the hitting set and ab
    elsewhere; its size is 3(2kM + 3m + 1) - 1 for a hitting set of size k.
    The YES/NO answer is k' >= k_min: the witness settles YES, and the
    lower bound k_min(6M - 3) exceeds K whenever k' < k_min.
    """
    m = inst.ground
    if m < 1:
        raise ValueError("ground set must be non-empty")
    kb = inst.k if k_budget is None else k_budget
    const = fixed3_constants(m, kb)
    M = const["M"]
    u, N = _fixed3_words(inst)
    sample = Sample((u,), tuple(N), ("a", "b", "c"))
    kmin, H = solve_hitting_set(inst)
    w = _fixed3_witness_word(m, M, set(H))
    prov = {"instance": inst.to_dict(), "constants": const, "k_min": kmin,
            "hitting_set": list(H), "witness_word_length": len(w),
            "lower_bound": kmin * (6 * M - 3), "expected_answer": kb >= kmin}
    bench = GeneratedBenchmark("fixed3-fand", sample, parse_operators("F,and"),
                               const["K_fand"], provenance=prov)
    claimed = Fattern(w).formula if kmin <= kb else None
    return _certify(bench, claimed)


def _bar_claimed(c: str) -> Formula:
    return {"a": Letter("b"), "b": Letter("a"), "c": Or(Letter("a"), Letter("b"))}[c]


def _bar_exact(c: str) -> Formula:
    return disjunction([Letter(x) for x in "abc" if x != c])


def _g_chain(word, bar) -> Formula:
    phi = Globally(bar(word[-1]))
    for c in reversed(word[:-1]):
        phi = Globally(Or(bar(c), phi))
    return phi


def gor_claimed_witness(word) -> Formula:
    """G(~x1 | G(~x2 | ... G ~xp)) with ~a = b, ~b = a, ~c = a | b."""
    return _g_chain(word, _bar_claimed)


def gor_complement_witness(word) -> Formula:
    """Same chain with exact complements (~a = b | c, ...): the negation of
    the fattern of ``word``."""
    return _g_chain(word, _bar_exact)


def gen_hitting_Gor_fixed3(inst: HittingSetInstance, k_budget: int | None = None) -> GeneratedBenchmark:
    """Dual of ``gen_hitting_Fand_fixed3`` for LTL(G, or): positives and
    negatives swap, K = 6k'M + 11m + 4.

    The claimed witness uses ~a = b and ~b = a; it is recorded in the
    provenance, and kept as ``witness`` only if it separates.
    """
    m = inst.ground
    if m < 1:
        raise ValueError("ground set must be non-empty")
    kb = inst.k if k_budget is None else k_budget
    const = fixed3_constants(m, kb)
    M = const["M"]
    u, N = _fixed3_words(inst)
    sample = Sample(tuple(N), (u,), ("a", "b", "c"))
    kmin, H = solve_hitting_set(inst)
    w = _fixed3_witness_word(m, M, set(H))
    prov = {"instance": inst.to_dict(), "constants": const, "k_min": kmin,
            "hitting_set": list(H), "witness_word_length": len(w),
            "expected_answer": kb >= kmin}
    bench = GeneratedBenchmark("fixed3-gor", sample, parse_operators("G,or"),
                               const["K_gor"], provenance=prov)
    if kmin > kb:
        return bench
    exact = gor_complement_witness(w)
    prov["complement_witness_size"] = exact.size
    prov["complement_witness_separates"] = separates(exact, sample)
    return _certify(bench, gor_claimed_witness(w))


def pad_for_X_fragments(sample: Sample, dual: bool = False,
                        max_length: int = PAD_WARN_LENGTH) -> Sample:
    """Pad a one-positive sample so F and G stop helping.

    With M the size of the full prefix formula of u, every word gets a^M
    appended, then u' and the v'_i are interleaved periodically:
    u'' = (u' v'_1 ... v'_n)^(M+1) and v''_i = v'_i ... v'_n (u' v'_1 ... v'_n)^M.
    ``dual`` swaps the roles (one negative, many positives).
    """
    if dual:
        return pad_for_X_fragments(sample.swapped(), False, max_length).swapped()
    if len(sample.P) != 1:
        raise SampleError("padding needs exactly one positive word")
    u = sample.P[0]
    l = len(u)
    if any(len(v) != l for v in sample.N):
        raise SampleError("padding needs all words of the same length")
    if u in sample.N:
        raise SampleError("the positive word is also negative: no separator exists")
    a = sample.alphabet[0]
    M = l * (l + 1) // 2 + l - 1
    up = u + (a,) * M
    vps = [v + (a,) * M for v in sample.N]
    period = up + tuple(c for v in vps for c in v)
    U = period * (M + 1)
    V = [tuple(c for v in vps[i:] for c in v) + period * M for i in range(len(vps))]
    if len(U) > max_length:
        log.warning("padded words reach length %d", len(U))
    return Sample((U,), tuple(V), sample.alphabet)

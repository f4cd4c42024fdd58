"""Constraint system over per-rule impact values, and its solvers.

A knowledge base R with n rules induces one integer variable per rule (the
penalty added to every world falsifying that rule) and, for each rule i,
the constraint

    k_i  >  min over worlds verifying rule i  of  sum of k_j (j != i,
            world falsifies rule j)
          - min over worlds falsifying rule i of  the same sum,

with min over the empty set treated as infinite.  Solutions are vectors of
natural numbers; each one induces a ranking function that accepts every
rule of R (see :mod:`crsolve.ocf`).

Search is confined to the box [0, bound]^n (default bound n, the number of
rules): minimal solutions always fit inside it, so "infeasible" here means
"no solution within the box", not a proven inconsistency of R.  A rule
whose verifying set is empty can never be satisfied by any vector; such
rules are reported as degenerate.

Compilation: every world's falsified-rule set is collapsed into a bitmask
signature, and for each constraint side only the subset-minimal signatures
are kept (sums are monotone in the nonnegative variables, so minima are
attained there).  Solvers run bounds propagation at every search node:

    lo_i <- max(lo_i, 1 + min_sig(V_i, lo) - min_sig(F_i, hi))

which is monotone and terminates; values are labelled in rule order,
ascending, so solutions stream in lexicographic order.

A CRProblem is immutable after build; each solve call owns private search
state, so concurrent solves on one problem are safe.
"""

from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass
from time import perf_counter
from typing import Iterator

from .kb import KnowledgeBase
from .worlds import FalsificationMatrix, build_partitions, iter_bits

KappaVector = tuple[int, ...]

_SigSet = tuple[tuple[int, ...], ...]


class SolutionOrdering(enum.Enum):
    """Which minimality notion (if any) a solution set was filtered by."""

    ALL = "all"
    SUM = "sum"
    COMPONENTWISE = "componentwise"
    INDUCED_OCF = "induced_ocf"


class InfeasibleError(Exception):
    """No solution exists within the search box [0, bound]^n."""

    def __init__(self, bound: int, degenerate_rules: tuple[int, ...] = ()):
        self.bound = bound
        self.degenerate_rules = degenerate_rules
        msg = f"no solution with every component in [0, {bound}]"
        if degenerate_rules:
            ids = ", ".join(str(i) for i in degenerate_rules)
            msg += f"; degenerate rule(s) with no verifying world: {ids}"
        super().__init__(msg)


class SolveTimeout(Exception):
    """A solve operation exceeded its deadline."""


@dataclass(frozen=True)
class SolutionSet:
    """Solution vectors in lexicographic order, without duplicates."""

    ordering: SolutionOrdering
    bound: int
    vectors: tuple[KappaVector, ...]
    minimal_sum: int | None = None

    def as_dict(self) -> dict:
        """JSON-ready form: ordering, bound, solutions, and (for sum-based
        sets) the minimal sum; box-relative filters flag their scope."""
        out: dict = {
            "ordering": self.ordering.value,
            "bound": self.bound,
            "solutions": [list(v) for v in self.vectors],
        }
        if self.minimal_sum is not None:
            out["minimal_sum"] = self.minimal_sum
        if self.ordering in (SolutionOrdering.COMPONENTWISE, SolutionOrdering.INDUCED_OCF):
            out["complete_within_bound"] = True
        return out


@dataclass(frozen=True)
class CRProblem:
    """Compiled constraint problem: partitions, signatures, and domains."""

    partitions: FalsificationMatrix
    bound: int
    domains: tuple[tuple[int, int], ...]
    world_sigs: tuple[int, ...]
    verifying_sigs: tuple[_SigSet, ...]
    falsifying_sigs: tuple[_SigSet, ...]
    degenerate_rules: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.domains)

    @property
    def infeasible(self) -> bool:
        """True once propagation has emptied some variable's domain."""
        return any(lo > hi for lo, hi in self.domains)


def _minimal_signatures(masks: set[int]) -> _SigSet:
    """Subset-minimal antichain of rule-index bitmasks, as index tuples."""
    kept: list[int] = []
    for mask in sorted(masks, key=lambda s: (s.bit_count(), s)):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return tuple(tuple(iter_bits(mask)) for mask in kept)


def build_problem(kb: KnowledgeBase, bound: int | None = None) -> CRProblem:
    """Compile CR(R): world partitions, falsification signatures, and the
    initial domain box [0, bound]^n (bound defaults to n)."""
    parts = build_partitions(kb)
    n = parts.n
    if bound is None:
        bound = n
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    world_sigs = [0] * parts.num_worlds
    for j, falsified in enumerate(parts.falsifying):
        bit = 1 << j
        for w in iter_bits(falsified):
            world_sigs[w] |= bit
    verifying_sigs = []
    falsifying_sigs = []
    degenerate = []
    for i in range(n):
        drop = ~(1 << i)
        vmasks = {world_sigs[w] & drop for w in iter_bits(parts.verifying[i])}
        fmasks = {world_sigs[w] & drop for w in iter_bits(parts.falsifying[i])}
        verifying_sigs.append(_minimal_signatures(vmasks))
        falsifying_sigs.append(_minimal_signatures(fmasks))
        if not vmasks:
            degenerate.append(i + 1)
    return CRProblem(
        partitions=parts,
        bound=bound,
        domains=tuple((0, bound) for _ in range(n)),
        world_sigs=tuple(world_sigs),
        verifying_sigs=tuple(verifying_sigs),
        falsifying_sigs=tuple(falsifying_sigs),
        degenerate_rules=tuple(degenerate),
    )


def falsified_sum(p: CRProblem, i: int, w: int, v: KappaVector) -> int:
    """Sum of v[j] over rules j != i (1-based ids) falsified at world w."""
    if not 1 <= i <= p.n:
        raise ValueError(f"rule id {i} out of range 1..{p.n}")
    if not 0 <= w < p.partitions.num_worlds:
        raise ValueError(f"world index {w} out of range")
    if len(v) != p.n:
        raise ValueError(f"vector has length {len(v)}, expected {p.n}")
    mask = p.world_sigs[w] & ~(1 << (i - 1))
    return sum(v[j] for j in iter_bits(mask))


def _min_sig_sum(sigs: _SigSet, values) -> int:
    return min(sum(values[j] for j in sig) for sig in sigs)


def check_solution(p: CRProblem, v: KappaVector) -> bool:
    """Exact test of the constraint conjunction at vector v.

    Empty-min cases: no verifying world makes rule i unsatisfiable for any
    finite v[i]; no falsifying world satisfies the constraint vacuously.
    """
    if len(v) != p.n:
        raise ValueError(f"vector has length {len(v)}, expected {p.n}")
    if any(x < 0 for x in v):
        return False
    for i in range(p.n):
        vs = p.verifying_sigs[i]
        if not vs:
            return False
        fs = p.falsifying_sigs[i]
        if not fs:
            continue
        if v[i] <= _min_sig_sum(vs, v) - _min_sig_sum(fs, v):
            return False
    return True


def _propagate_box(lo: list[int], hi: list[int], vsigs, fsigs) -> bool:
    """Tighten lower bounds to their fixpoint in place; False if some
    domain empties (including any rule with no verifying world)."""
    n = len(lo)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            vs = vsigs[i]
            if not vs:
                lo[i] = hi[i] + 1
                return False
            fs = fsigs[i]
            if not fs:
                continue
            floor = _min_sig_sum(vs, lo) - _min_sig_sum(fs, hi) + 1
            if floor > lo[i]:
                if floor > hi[i]:
                    lo[i] = floor
                    return False
                lo[i] = floor
                changed = True
    return True


def propagate(p: CRProblem) -> CRProblem:
    """Bounds-consistency fixpoint over the current domains.

    Lower bounds only ever increase (idempotent); the result is marked
    infeasible when a domain empties, and problems already marked stay
    as they are.
    """
    if p.infeasible:
        return p
    lo = [d[0] for d in p.domains]
    hi = [d[1] for d in p.domains]
    _propagate_box(lo, hi, p.verifying_sigs, p.falsifying_sigs)
    return dataclasses.replace(p, domains=tuple(zip(lo, hi)))


def _search(
    p: CRProblem,
    sum_target: int | None = None,
    deadline: float | None = None,
) -> Iterator[KappaVector]:
    """Depth-first labelling in rule order, values ascending; yields every
    solution in the box (optionally restricted to a fixed component sum)
    in lexicographic order."""
    vsigs = p.verifying_sigs
    fsigs = p.falsifying_sigs
    n = p.n
    lo = [d[0] for d in p.domains]
    hi = [d[1] for d in p.domains]
    if not _propagate_box(lo, hi, vsigs, fsigs):
        return

    def rec(idx: int, lo: list[int], hi: list[int], partial: int) -> Iterator[KappaVector]:
        if deadline is not None and perf_counter() > deadline:
            raise SolveTimeout
        if idx == n:
            if sum_target is None or partial == sum_target:
                yield tuple(lo)
            return
        first, last = lo[idx], hi[idx]
        if sum_target is not None:
            rest_lo = sum(lo[idx + 1 :])
            rest_hi = sum(hi[idx + 1 :])
            first = max(first, sum_target - partial - rest_hi)
            last = min(last, sum_target - partial - rest_lo)
        for val in range(first, last + 1):
            lo2 = lo.copy()
            hi2 = hi.copy()
            lo2[idx] = hi2[idx] = val
            if _propagate_box(lo2, hi2, vsigs, fsigs):
                yield from rec(idx + 1, lo2, hi2, partial + val)

    yield from rec(0, lo, hi, 0)


def enumerate_solutions(
    p: CRProblem, limit: int | None = None, deadline: float | None = None
) -> SolutionSet:
    """All solutions in the box, lexicographically; ``limit`` truncates."""
    vectors: list[KappaVector] = []
    for v in _search(p, deadline=deadline):
        if limit is not None and len(vectors) >= limit:
            break
        vectors.append(v)
    return SolutionSet(SolutionOrdering.ALL, p.bound, tuple(vectors))


def solve_min_sum(
    p: CRProblem, deadline: float | None = None
) -> tuple[int, KappaVector]:
    """Branch-and-bound minimum of the component sum.

    Returns (minimal sum, vector); the vector is the lexicographically
    least among the sum-minimal solutions.  Raises InfeasibleError when
    the box holds no solution.
    """
    vsigs = p.verifying_sigs
    fsigs = p.falsifying_sigs
    n = p.n
    best_sum: int | None = None
    best_vec: KappaVector | None = None
    lo = [d[0] for d in p.domains]
    hi = [d[1] for d in p.domains]
    if _propagate_box(lo, hi, vsigs, fsigs):

        def rec(idx: int, lo: list[int], hi: list[int], partial: int) -> None:
            nonlocal best_sum, best_vec
            if deadline is not None and perf_counter() > deadline:
                raise SolveTimeout
            if idx == n:
                if best_sum is None or partial < best_sum:
                    best_sum, best_vec = partial, tuple(lo)
                return
            rest_lo = sum(lo[idx + 1 :])
            for val in range(lo[idx], hi[idx] + 1):
                if best_sum is not None and partial + val + rest_lo >= best_sum:
                    break
                lo2 = lo.copy()
                hi2 = hi.copy()
                lo2[idx] = hi2[idx] = val
                if not _propagate_box(lo2, hi2, vsigs, fsigs):
                    continue
                if best_sum is not None and partial + val + sum(lo2[idx + 1 :]) >= best_sum:
                    continue
                rec(idx + 1, lo2, hi2, partial + val)

        rec(0, lo, hi, 0)
    if best_vec is None:
        raise InfeasibleError(p.bound, p.degenerate_rules)
    return best_sum, best_vec


def all_min_sum(p: CRProblem, deadline: float | None = None) -> SolutionSet:
    """Exactly the solutions whose component sum is minimal, in two phases:
    find the minimum, then enumerate at that fixed sum."""
    minimal, _ = solve_min_sum(p, deadline=deadline)
    vectors = tuple(_search(p, sum_target=minimal, deadline=deadline))
    return SolutionSet(SolutionOrdering.SUM, p.bound, vectors, minimal_sum=minimal)


def _non_dominated(vectors: list[KappaVector]) -> list[KappaVector]:
    """Componentwise non-dominated subset of distinct vectors.

    Processing by ascending component sum means any dominator of v is seen
    before v, and dominators are never themselves dominated when checked,
    so comparing against the running frontier suffices.
    """
    frontier: list[KappaVector] = []
    for v in sorted(vectors, key=lambda x: (sum(x), x)):
        if not any(all(f[i] <= v[i] for i in range(len(v))) for f in frontier):
            frontier.append(v)
    return sorted(frontier)


def pareto_min(p: CRProblem, deadline: float | None = None) -> SolutionSet:
    """Solutions not componentwise-dominated by any other solution in the
    box (a partial order: the result can be larger than the sum-minimal
    set, and every sum-minimal solution is in it)."""
    vectors = list(_search(p, deadline=deadline))
    if not vectors:
        raise InfeasibleError(p.bound, p.degenerate_rules)
    return SolutionSet(
        SolutionOrdering.COMPONENTWISE, p.bound, tuple(_non_dominated(vectors))
    )


def ocf_min(p: CRProblem, deadline: float | None = None) -> SolutionSet:
    """Solutions whose induced ranking function is not pointwise-dominated
    by another solution's (dominance requires the two rankings to differ
    somewhere; vectors inducing identical rankings are all retained)."""
    vectors = list(_search(p, deadline=deadline))
    if not vectors:
        raise InfeasibleError(p.bound, p.degenerate_rules)
    sig_indices = [tuple(iter_bits(sig)) for sig in sorted(set(p.world_sigs))]
    by_ranking: dict[tuple[int, ...], list[KappaVector]] = {}
    for v in vectors:
        ranking = tuple(sum(v[j] for j in sig) for sig in sig_indices)
        by_ranking.setdefault(ranking, []).append(v)
    surviving = set(_non_dominated(list(by_ranking.keys())))
    kept = sorted(
        v for ranking, vs in by_ranking.items() if ranking in surviving for v in vs
    )
    return SolutionSet(SolutionOrdering.INDUCED_OCF, p.bound, tuple(kept))

"""World semantics: formula evaluation over all 2**m interpretations.

Worlds are dense integers in ``[0, 2**m)``.  The atom with index i occupies
bit (m - i) of the world index, so the first declared atom is the most
significant bit and descending index order is conventional truth-table
reading order (the all-true world first).

Sets of worlds are plain ints used as bitsets: bit w is set iff world w is
in the set.  Everything here is pure and immutable once built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .kb import Atom, Conditional, Formula, KnowledgeBase, Term

WorldSet = int


class IndicatorValue(enum.Enum):
    """Three-valued status of a conditional at a world."""

    VERIFIES = 1
    FALSIFIES = 0
    NOT_APPLICABLE = "u"


def world_count(m: int) -> int:
    return 1 << m


def full_set(m: int) -> WorldSet:
    """The set of all 2**m worlds."""
    return (1 << (1 << m)) - 1


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of set bits, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@lru_cache(maxsize=None)
def _bit_column(m: int, k: int) -> WorldSet:
    # Worlds whose index has bit k set: blocks of 2**k clear then 2**k set,
    # replicated across all 2**m worlds by doubling.
    block = 1 << k
    pattern = ((1 << block) - 1) << block
    span = 2 * block
    total = 1 << m
    while span < total:
        pattern |= pattern << span
        span *= 2
    return pattern


def atom_worlds(m: int, index: int) -> WorldSet:
    """Worlds in which the atom with 1-based ``index`` is true."""
    return _bit_column(m, m - index)


def eval_term(t: Term, w: int) -> bool:
    """True iff every positive bit of the term is 1 and every negative bit
    is 0 in world ``w``; unconstrained atoms are free."""
    return (w & t.pos) == t.pos and (w & t.neg) == 0


def eval_formula(f: Formula, w: int) -> bool:
    return any(eval_term(t, w) for t in f.terms)


def term_worlds(t: Term) -> WorldSet:
    if t.pos & t.neg:
        return 0
    m = t.width
    ws = full_set(m)
    for k in iter_bits(t.pos):
        ws &= _bit_column(m, k)
    for k in iter_bits(t.neg):
        ws &= full_set(m) ^ _bit_column(m, k)
    return ws


def formula_worlds(f: Formula) -> WorldSet:
    """The set of worlds satisfying the formula (union over DNF terms)."""
    ws = 0
    for t in f.terms:
        ws |= term_worlds(t)
    return ws


def indicator(c: Conditional, w: int) -> IndicatorValue:
    """Three-valued indicator of conditional ``c`` at world ``w``:
    VERIFIES on antecedent-and-consequent worlds, FALSIFIES on
    antecedent-and-negated-consequent worlds, NOT_APPLICABLE otherwise."""
    if not eval_formula(c.antecedent, w):
        return IndicatorValue.NOT_APPLICABLE
    if eval_formula(c.consequent, w):
        return IndicatorValue.VERIFIES
    return IndicatorValue.FALSIFIES


@dataclass(frozen=True)
class FalsificationMatrix:
    """Per-rule verifying and falsifying world sets.

    Row i holds the worlds verifying rule i+1 (antecedent and consequent
    both hold) and the worlds falsifying it (antecedent holds, consequent
    fails); the two sets are disjoint by construction.
    """

    num_atoms: int
    verifying: tuple[WorldSet, ...]
    falsifying: tuple[WorldSet, ...]

    @property
    def n(self) -> int:
        return len(self.verifying)

    @property
    def num_worlds(self) -> int:
        return world_count(self.num_atoms)


def build_partitions(kb: KnowledgeBase) -> FalsificationMatrix:
    """Compute each rule's verifying/falsifying world sets."""
    full = full_set(kb.m)
    verifying = []
    falsifying = []
    for c in kb.conditionals:
        wa = formula_worlds(c.antecedent)
        wb = formula_worlds(c.consequent)
        verifying.append(wa & wb)
        falsifying.append(wa & (full ^ wb))
    return FalsificationMatrix(kb.m, tuple(verifying), tuple(falsifying))


def world_str(atoms: tuple[Atom, ...], w: int) -> str:
    """Render a world as space-separated literals, e.g. ``p b -f w -k``."""
    m = len(atoms)
    return " ".join(
        a.name if w & (1 << (m - a.index)) else "-" + a.name for a in atoms
    )


def world_str_compact(atoms: tuple[Atom, ...], w: int) -> str:
    """Compact form used in JSON records, e.g. ``pbfwk`` or ``p-bfwk``."""
    m = len(atoms)
    return "".join(
        a.name if w & (1 << (m - a.index)) else "-" + a.name for a in atoms
    )

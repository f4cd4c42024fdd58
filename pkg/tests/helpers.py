"""Shared fixtures data and reference oracles.

The reference implementations here deliberately avoid the package's bitset
machinery: worlds are sets of true atom names, formulas are evaluated per
term through literal lists, and the constraint check follows the textbook
min-of-sums definition directly.  They are slow and only meant to
cross-check the real code on small inputs.
"""

from __future__ import annotations

import itertools
import random

from crsolve import Conditional, Formula, KnowledgeBase, parse_kb

BIRDS_TEXT = """\
# birds fly, birds are animals, flying birds are animals
vars: b, f, a
rule r1: (f | b)
rule r2: (a | b)
rule r3: (a | f, b)
"""

PENGUINS_TEXT = """\
# penguins, birds, flying, winged, kiwis
vars: p, b, f, w, k
rule r1: (f | b)
rule r2: (b | p)
rule r3: (!f | p)
rule r4: (w | b)
rule r5: (b | k)
"""

# Ranking induced by (1, 2, 2, 1, 1) on the penguins KB, indexed by world
# (p most significant bit, k least); the textbook ranking for this scenario.
PENGUINS_RANKS = (
    0, 1, 0, 1, 0, 1, 0, 1,
    2, 2, 1, 1, 1, 1, 0, 0,
    2, 3, 2, 3, 4, 5, 4, 5,
    2, 2, 1, 1, 3, 3, 2, 2,
)


def birds_kb() -> KnowledgeBase:
    return parse_kb(BIRDS_TEXT)


def penguins_kb() -> KnowledgeBase:
    return parse_kb(PENGUINS_TEXT)


def true_atoms(kb: KnowledgeBase, w: int) -> set[str]:
    m = kb.m
    return {a.name for a in kb.atoms if (w >> (m - a.index)) & 1}


def eval_formula_ref(f: Formula, kb: KnowledgeBase, w: int) -> bool:
    atoms = true_atoms(kb, w)
    names = {a.index: a.name for a in kb.atoms}
    for term in f.terms:
        ok = True
        for index, positive in term.literals():
            if (names[index] in atoms) != positive:
                ok = False
                break
        if ok:
            return True
    return False


def indicator_ref(c: Conditional, kb: KnowledgeBase, w: int) -> str:
    """'v' verifies, 'f' falsifies, 'n' not applicable."""
    if not eval_formula_ref(c.antecedent, kb, w):
        return "n"
    return "v" if eval_formula_ref(c.consequent, kb, w) else "f"


def partitions_ref(kb: KnowledgeBase) -> tuple[list[list[int]], list[list[int]]]:
    verifying: list[list[int]] = []
    falsifying: list[list[int]] = []
    for c in kb.conditionals:
        vs, fs = [], []
        for w in range(2**kb.m):
            status = indicator_ref(c, kb, w)
            if status == "v":
                vs.append(w)
            elif status == "f":
                fs.append(w)
        verifying.append(vs)
        falsifying.append(fs)
    return verifying, falsifying


def compile_ref(kb: KnowledgeBase) -> tuple[list[list[int]], list[set[int]]]:
    """Precomputed (verifying world lists, falsifying world sets)."""
    verifying, falsifying = partitions_ref(kb)
    return verifying, [set(ws) for ws in falsifying]


def check_ref(kb, v, compiled=None) -> bool:
    """Textbook constraint check: for every rule i, v[i] must exceed the
    difference of the two minima of other-rule falsification sums."""
    if any(x < 0 for x in v):
        return False
    verifying, fsets = compiled if compiled is not None else compile_ref(kb)
    n = kb.n

    def other_sum(i: int, w: int) -> int:
        return sum(v[j] for j in range(n) if j != i and w in fsets[j])

    for i in range(n):
        if not verifying[i]:
            return False
        vmin = min(other_sum(i, w) for w in verifying[i])
        if not fsets[i]:
            continue
        fmin = min(other_sum(i, w) for w in fsets[i])
        if not v[i] > vmin - fmin:
            return False
    return True


def brute_solutions(kb: KnowledgeBase, bound: int | None = None) -> list[tuple[int, ...]]:
    """All solutions in the box, by scanning every vector; lexicographic."""
    if bound is None:
        bound = kb.n
    compiled = compile_ref(kb)
    return [
        v
        for v in itertools.product(range(bound + 1), repeat=kb.n)
        if check_ref(kb, v, compiled)
    ]


def non_dominated_ref(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Quadratic componentwise dominance filter."""
    out = []
    for v in vectors:
        dominated = any(
            u != v and all(u[i] <= v[i] for i in range(len(v))) for u in vectors
        )
        if not dominated:
            out.append(v)
    return sorted(out)


def induced_ranks_ref(kb: KnowledgeBase, v: tuple[int, ...]) -> list[int]:
    _, falsifying = partitions_ref(kb)
    ranks = []
    for w in range(2**kb.m):
        ranks.append(sum(v[i] for i in range(kb.n) if w in set(falsifying[i])))
    return ranks


def random_formula_text(rng: random.Random, names: list[str]) -> str:
    roll = rng.random()
    if roll < 0.04:
        return "bot"
    if roll < 0.10:
        return "top"
    parts = []
    for _ in range(rng.choice((1, 1, 1, 2))):
        picked = rng.sample(names, rng.randint(1, min(2, len(names))))
        parts.append(", ".join(("!" if rng.random() < 0.5 else "") + a for a in picked))
    return " ; ".join(parts)


def random_kb_text(rng: random.Random, max_atoms: int = 4, max_rules: int = 3) -> str:
    m = rng.randint(1, max_atoms)
    names = ["a", "b", "c", "d"][:m]
    lines = ["vars: " + ", ".join(names)]
    for _ in range(rng.randint(0, max_rules)):
        cons = random_formula_text(rng, names)
        ant = random_formula_text(rng, names)
        lines.append(f"rule: ({cons} | {ant})")
    return "\n".join(lines) + "\n"

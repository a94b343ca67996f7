"""Self-check suite behind ``raagcomm verify``.

Each check compares two independent computations and reports the first
disagreement it finds.  Random inputs come from one seeded generator so
that a run is reproducible from its seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, List, Optional

from .combinatorics import Graph, all_graphs, clique_complex, random_graph
from .freegroup import Word, commutator, invert, swap_expand
from .generators import count_J, count_P, count_W_closed, count_W_recursive, enumerate_descriptors
from .rewriting import express_in_basis, m3_loop_identity, rewrite_f2
from .topology import (
    build_cube_complex,
    build_grid,
    cycle_rank,
    h1_rank_and_torsion,
    nontree_edges,
    nontree_loop_word,
)

DEFAULT_SEED = 20170601


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[Any] = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "counterexample": self.counterexample}


def _run(name: str, cases) -> CheckResult:
    n = 0
    for ok, example in cases:
        n += 1
        if not ok:
            return CheckResult(name, False, n, example)
    return CheckResult(name, True, n)


def check_swap_identity(rng=None):
    exps = (-2, -1, 1, 2)
    for nq, np_, nx, ny in product(exps, repeat=4):
        q, p = Word.gen(4, 1, nq), Word.gen(4, 2, np_)
        for x in (Word.gen(4, 3, nx), commutator(Word.gen(4, 3, nx), Word.gen(4, 4, ny))):
            lhs = commutator(q, commutator(p, x))
            ok = (lhs * invert(swap_expand(q, p, x))).is_identity
            yield ok, {"q": str(q), "p": str(p), "x": str(x)}


def check_m3_identities(rng=None):
    for c in product(range(-2, 3), repeat=3):
        for p in (1, 2):
            loop, fw = m3_loop_identity(c, p)
            yield fw.verifies(loop), {"c": list(c), "p": p}


def check_free_counts(rng=None):
    for m in (2, 3, 4):
        for s in (1, 2, 3):
            values = {count_J(m, s), count_W_closed(m, s), count_W_recursive(m, s), cycle_rank(build_grid(m, s))}
            yield len(values) == 1, {"m": m, "s": s, "values": sorted(values)}


def _homology_cases(rng):
    for m in range(1, 5):
        yield from all_graphs(m)
    yield Graph.cycle(5)
    yield Graph(5, Graph.cycle(5).edges | {(2, 5), (2, 4)})
    for _ in range(10):
        yield random_graph(5, rng)


def check_homology(rng):
    for g in _homology_cases(rng):
        K = clique_complex(g)
        for s in (1, 2):
            rank, torsion = h1_rank_and_torsion(build_cube_complex(K, s))
            P = count_P(K, s).P
            n = len(enumerate_descriptors(K, s))
            yield (rank, torsion, n) == (P, [], P), {
                "m": g.m,
                "edges": g.sorted_edges(),
                "s": s,
                "h1_rank": rank,
                "torsion": torsion,
                "P": P,
                "enumerated": n,
            }


def _random_f2_word(rng, max_len=40):
    while True:
        raw = [(rng.randint(1, 2), rng.choice([e for e in range(-5, 6) if e])) for _ in range(rng.randint(0, 12))]
        w = Word(2, raw)
        # balance the exponent sums with a commutator-closing tail
        sums = [sum(e for g, e in w.syllables if g == k) for k in (1, 2)]
        w = w * Word(2, [(1, -sums[0]), (2, -sums[1])])
        if len(w) <= max_len:
            return w


def check_rewriting(rng):
    for _ in range(200):
        w = _random_f2_word(rng)
        yield rewrite_f2(w).verifies(w), {"word": str(w)}
    for e in nontree_edges(3, 2):
        loop = nontree_loop_word(3, 2, e)
        yield express_in_basis(loop, 3, 2).verifies(loop), {"edge": [list(e[0]), e[1]]}


CHECKS: List[tuple[str, Callable]] = [
    ("swap identity", check_swap_identity),
    ("m=3 loop identities", check_m3_identities),
    ("J = W = cycle rank", check_free_counts),
    ("P = H1 rank, no torsion", check_homology),
    ("rewriting verifies", check_rewriting),
]


def run_all(seed: int = DEFAULT_SEED, log=None) -> List[CheckResult]:
    rng = random.Random(seed)
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        results.append(_run(name, fn(rng)))
        if log is not None:
            log.write(f"{name}: {time.perf_counter() - start:.2f}s\n")
    return results

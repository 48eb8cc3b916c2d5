"""Process-pool helpers for exhaustive sweeps; results never depend on the worker count."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from .qgraph import congruent
from .word_monoid import Alphabet

CHUNK = 256


def _check_chunk(args) -> Optional[int]:
    lhs, rhs, alpha, names, chunk, budget = args
    from .hypoplactic import substitute

    for k, combo in enumerate(chunk):
        sigma = dict(zip(names, combo))
        if not congruent(alpha, substitute(lhs, sigma), substitute(rhs, sigma), budget):
            return k
    return None


def first_failure(lhs: str, rhs: str, alpha: Alphabet, names: list[str], substitutions: Iterable, budget, jobs: int) -> Optional[dict]:
    """Earliest failing substitution in iteration order, checked in parallel chunks."""
    it = iter(substitutions)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            batch = [list(itertools.islice(it, CHUNK)) for _ in range(jobs * 4)]
            batch = [c for c in batch if c]
            if not batch:
                return None
            results = pool.map(_check_chunk, [(lhs, rhs, alpha, names, c, budget) for c in batch])
            for chunk, hit in zip(batch, results):
                if hit is not None:
                    return dict(zip(names, chunk[hit]))

"""Connected components of word quasi-crystal graphs and the rooted congruence test."""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import BudgetExceeded
from .qc_core import POS_INF, QuasiCrystalTable, ext_to_json
from .qtensor import ZERO
from .rootsys import Kind, Weight
from .word_monoid import Alphabet, StandardAlphabet, TableAlphabet, Word

DEFAULT_BUDGET = 1_000_000


def default_budget() -> int:
    raw = os.environ.get("QCK_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class Component:
    alphabet: Alphabet
    root: Word
    vertices: list[Word] = field(default_factory=list)
    index: dict[Word, int] = field(default_factory=dict)
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    loops: list[tuple[int, int]] = field(default_factory=list)

    def weight(self, v: int) -> Weight:
        return self.alphabet.wt(self.vertices[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_words(self) -> set[tuple[Word, Word, int]]:
        return {(self.vertices[a], self.vertices[b], i) for a, b, i in self.edges}

    def loop_words(self) -> set[tuple[Word, int]]:
        return {(self.vertices[v], i) for v, i in self.loops}


def explore(alpha: Alphabet, w: Sequence, budget: Optional[int] = None) -> Component:
    """Breadth-first closure of {w} under all defined raising and lowering operators.

    Vertices are numbered in discovery order: labels ascending, raising
    before lowering at each label.
    """
    budget = default_budget() if budget is None else budget
    w = tuple(w)
    comp = Component(alpha, w, [w], {w: 0})
    queue = deque([w])
    while queue:
        u = queue.popleft()
        p = alpha.profile(u)
        for k in range(len(p.sigs)):
            for v in (p.e[k], p.f[k]):
                if v is not None and v not in comp.index:
                    if len(comp.vertices) >= budget:
                        raise BudgetExceeded(budget)
                    comp.index[v] = len(comp.vertices)
                    comp.vertices.append(v)
                    queue.append(v)
    for a, u in enumerate(comp.vertices):
        p = alpha.profile(u)
        for k, s in enumerate(p.sigs):
            i = k + 1
            if s is ZERO:
                comp.loops.append((a, i))
            if p.f[k] is not None:
                comp.edges.append((a, comp.index[p.f[k]], i))
    return comp


def hw_words(c: Component) -> list[Word]:
    has_in = {b for _, b, _ in c.edges}
    return [w for k, w in enumerate(c.vertices) if k not in has_in]


def lw_words(c: Component) -> list[Word]:
    has_out = {a for a, _, _ in c.edges}
    return [w for k, w in enumerate(c.vertices) if k not in has_out]


def congruent(alpha: Alphabet, u: Sequence, v: Sequence, budget: Optional[int] = None) -> bool:
    """Whether some isomorphism of components sends u to v.

    Paired breadth-first search: weights are compared at the roots, then
    every visited pair must agree on all signatures, and the operators are
    propagated in lockstep while a bijection is maintained.
    """
    budget = default_budget() if budget is None else budget
    u, v = tuple(u), tuple(v)
    if alpha.wt(u) != alpha.wt(v):
        return False
    fwd, bwd = {u: v}, {v: u}
    queue = deque([(u, v)])
    profile = alpha.profile
    while queue:
        a, b = queue.popleft()
        pa, pb = profile(a), profile(b)
        if pa.sigs != pb.sigs:
            return False
        for ops_a, ops_b in ((pa.e, pb.e), (pa.f, pb.f)):
            for x, y in zip(ops_a, ops_b):
                if x is None:
                    continue
                fx, by = fwd.get(x), bwd.get(y)
                if fx is None and by is None:
                    if len(fwd) >= budget:
                        raise BudgetExceeded(budget)
                    fwd[x], bwd[y] = y, x
                    queue.append((x, y))
                elif fx != y or by != x:
                    return False
    return True


def component_table(c: Component) -> QuasiCrystalTable:
    """The component as an explicit table with ids ``v0, v1, ...``."""
    alpha = c.alphabet
    ids = [f"v{k}" for k in range(len(c.vertices))]
    wt, eps, phi, e, f = {}, {}, {}, {}, {}
    for k, w in enumerate(c.vertices):
        x = ids[k]
        wt[x] = alpha.wt(w)
        p = alpha.profile(w)
        for j, i in enumerate(alpha.indices):
            s = p.sigs[j]
            eps[x, i] = POS_INF if s is ZERO else s.minus
            phi[x, i] = POS_INF if s is ZERO else s.plus
            e[x, i] = None if p.e[j] is None else ids[c.index[p.e[j]]]
            f[x, i] = None if p.f[j] is None else ids[c.index[p.f[j]]]
    return QuasiCrystalTable(alpha.root, tuple(ids), wt, eps, phi, e, f)


def _alphabet_json(alpha: Alphabet) -> dict:
    if isinstance(alpha, StandardAlphabet):
        return {"kind": alpha.kind.value, "n": alpha.n}
    return {"kind": Kind.EXPLICIT.value, "n": alpha.root.index_count}


def _letters_json(alpha: Alphabet, w: Word) -> list:
    if isinstance(alpha, TableAlphabet):
        return [alpha.letters.index(x) for x in w]
    return list(w)


def to_json_doc(c: Component) -> dict:
    alpha = c.alphabet
    vertices = []
    for k, w in enumerate(c.vertices):
        vertices.append({
            "id": k,
            "word": _letters_json(alpha, w),
            "weight": list(alpha.wt(w)),
            "eps": [ext_to_json(alpha.eps(w, i)) for i in alpha.indices],
            "phi": [ext_to_json(alpha.phi(w, i)) for i in alpha.indices],
        })
    return {
        "alphabet": _alphabet_json(alpha),
        "root": _letters_json(alpha, c.root),
        "vertices": vertices,
        "edges": [{"from": a, "to": b, "label": i} for a, b, i in c.edges],
        "loops": [{"vertex": v, "label": i} for v, i in c.loops],
    }


def _word_text(w: Word) -> str:
    return " ".join(str(x) for x in w) if w else "ε"


def to_dot(c: Component) -> str:
    alpha = c.alphabet
    lines = ["digraph component {"]
    for k, w in enumerate(c.vertices):
        weight = "(" + ",".join(str(x) for x in alpha.wt(w)) + ")"
        lines.append(f'  v{k} [label="{_word_text(w)}\\n{weight}"];')
    for a, b, i in c.edges:
        lines.append(f'  v{a} -> v{b} [label="{i}"];')
    for v, i in c.loops:
        lines.append(f'  v{v} -> v{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(c: Component, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_doc(c), sort_keys=True) + "\n"
    if fmt == "dot":
        return to_dot(c)
    raise ValueError(f"unknown format {fmt!r}")

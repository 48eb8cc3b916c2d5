"""Hypoplactic monoids: classical rewriting for type A, element classes for type C,
the normal form for type C on two letters, identity checking and embeddings."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .errors import InvalidPair, RankTooSmall, UnsupportedAlphabet
from .qgraph import congruent, explore, hw_words
from .word_monoid import Alphabet, StandardAlphabet, Word, alphabet, word_class

# -- classical relations on type A ------------------------------------------------

# (left pattern, right pattern, side condition on the letters bound to t, x, y, z).
_RELATIONS: list[tuple[str, str, Callable[[dict], bool]]] = [
    ("yzx", "yxz", lambda v: v["x"] < v["y"] < v["z"]),
    ("xzy", "zxy", lambda v: v["x"] < v["y"] < v["z"]),
    ("xyx", "xxy", lambda v: v["x"] < v["y"]),
    ("xyy", "yxy", lambda v: v["x"] < v["y"]),
    ("xzty", "zxyt", lambda v: v["t"] <= v["x"] < v["y"] <= v["z"]),
    ("ytzx", "tyxz", lambda v: v["t"] < v["x"] <= v["y"] < v["z"]),
]


def _match(pattern: str, window: Sequence[int]) -> Optional[dict]:
    binding: dict = {}
    for var, letter in zip(pattern, window):
        if binding.setdefault(var, letter) != letter:
            return None
    return binding


def knuth_neighbours(w: Word) -> Iterator[Word]:
    """Words reachable from w by one relation applied in either direction."""
    for lhs, rhs, cond in _RELATIONS:
        k = len(lhs)
        for pos in range(len(w) - k + 1):
            window = w[pos:pos + k]
            for src, dst in ((lhs, rhs), (rhs, lhs)):
                v = _match(src, window)
                if v is not None and cond(v):
                    yield w[:pos] + tuple(v[c] for c in dst) + w[pos + k:]


def classical_class(w: Sequence[int]) -> frozenset:
    """All words connected to w by the classical relations (a finite set of anagrams)."""
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        for v in knuth_neighbours(queue.popleft()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def classical_congruent_A(n: int, u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = tuple(u), tuple(v)
    for x in u + v:
        if not 1 <= x <= n:
            raise UnsupportedAlphabet(f"letter {x} outside 1..{n}")
    if sorted(u) != sorted(v):
        return False
    return v in classical_class(u)


# -- element classes ----------------------------------------------------------------


def is_commutative(alpha: Alphabet, w: Sequence) -> bool:
    return word_class(alpha, w).isolated


def is_idempotent(alpha: Alphabet, w: Sequence) -> bool:
    w = tuple(w)
    return word_class(alpha, w).isolated and not any(alpha.wt(w))


def inv_signature(alpha: StandardAlphabet, w: Sequence) -> tuple[int, ...]:
    """delta_i = 1 iff w has an i-inversion."""
    return tuple(int(alpha.has_inversion(w, i)) for i in alpha.indices)


def witness_conditions_hold(lam: Sequence[int], delta: Sequence[int]) -> bool:
    n = len(lam)
    if len(delta) != n:
        return False
    d = [None] + list(delta) + [0]  # 1-based with a zero sentinel past n
    for i in range(1, n + 1):
        if lam[i - 1] != 0 and not (d[i] == 1 and (i == 1 or d[i - 1] == 1)):
            return False
        if i >= 2 and d[i] == 1 and not (d[i - 1] == 1 or (i <= n - 1 and d[i + 1] == 1)):
            return False
    return True


def commutative_witness(n: int, lam: Sequence[int], delta: Sequence[int]) -> Word:
    """An isolated type C word with the given weight and inversion bits."""
    lam, delta = tuple(lam), tuple(delta)
    if len(lam) != n or len(delta) != n or any(b not in (0, 1) for b in delta):
        raise InvalidPair("weight and inversion tuple must both have length n")
    if not witness_conditions_hold(lam, delta):
        raise InvalidPair(f"no commutative element has weight {lam} and inversions {delta}")
    word: list[int] = []
    if delta[0]:
        word += [1, -1]
    for i in range(2, n + 1):
        if delta[i - 2] and delta[i - 1]:
            word += [i, -i, i, -i]
    for i in range(1, n + 1):
        word += [i] * max(lam[i - 1], 0)
    for i in range(n, 0, -1):
        word += [-i] * max(-lam[i - 1], 0)
    return tuple(word)


# -- normal form on C_2 -------------------------------------------------------------


class Family(enum.Enum):
    Power1 = "1"
    Family2121 = "2121"
    Family12bar1 = "12bar1"
    Family12bar2bar1 = "12bar2bar1"


@dataclass(frozen=True)
class C2NormalForm:
    family: Family
    params: tuple[int, ...]
    representative: Word
    word: Word

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": list(self.params),
            "representative": list(self.representative),
            "word": list(self.word),
        }


def representative(family: Family, params: Sequence[int]) -> Word:
    m = tuple(params)
    if family is Family.Power1:
        return (1,) * m[0]
    if family is Family.Family2121:
        return (2,) * m[0] + (1,) * (m[1] + 1) + (2,) * (m[2] + 1) + (1,) * m[3]
    if family is Family.Family12bar1:
        return (1,) * (m[0] + 1) + (2,) * m[1] + (-1,) * (m[2] + 1)
    return (1,) * (m[0] + 1) + (2,) * (m[1] + 1) + (-2,) * (m[2] + 1) + (-1,) * (m[3] + 1)


def params_valid(family: Family, params: Sequence[int]) -> bool:
    m = tuple(params)
    sizes = {Family.Power1: 1, Family.Family2121: 4, Family.Family12bar1: 3, Family.Family12bar2bar1: 4}
    if len(m) != sizes[family] or any(x < 0 for x in m):
        return False
    if family is Family.Family12bar1:
        return m[0] == 0 or m[2] == 0
    if family is Family.Family12bar2bar1:
        return (m[0] == 0 or m[3] == 0) and (m[1] == 0 or m[2] == 0)
    return True


def raise_to_highest(alpha: Alphabet, w: Word) -> Word:
    """Apply raising operators (lowest label first) until none is defined."""
    while True:
        p = alpha.profile(w)
        nxt = next((v for v in p.e if v is not None), None)
        if nxt is None:
            return w
        w = nxt


def form_2121(u: Word) -> tuple[int, int, int, int]:
    """Exponents (q0, p, q, r) with u congruent to 2^q0 1^p 2^q 1^r, for u over {1, 2}."""
    q0 = 0
    while q0 < len(u) and u[q0] == 2:
        q0 += 1
    rest = u[q0:]
    if 2 not in rest:
        return (q0, 0, 0, len(rest))
    r = 0
    while rest[len(rest) - 1 - r] == 1:
        r += 1
    middle = rest[:len(rest) - r]
    return (q0, middle.count(1), middle.count(2), r)


def _split_pos_neg(pos: int, neg: int) -> tuple[int, int]:
    return (pos - neg, 0) if pos >= neg else (0, neg - pos)


def classify_highest_C2(h: Word) -> tuple[Family, tuple[int, ...]]:
    """Family and parameters for a highest-weight C_2 word, by case analysis."""
    count = h.count
    if -2 in h:
        m1, m4 = _split_pos_neg(count(1), count(-1))
        m2, m3 = _split_pos_neg(count(2), count(-2))
        return Family.Family12bar2bar1, (m1, m2, m3, m4)
    if -1 in h:
        p = 0
        while p < len(h) and h[p] == -1:
            p += 1
        if -1 not in h[p:]:
            q1, q2, q3, q4 = form_2121(h[p:])
            return Family.Family2121, (p + q1, q2 - 1, q3 - 1, q4)
        m1, m3 = _split_pos_neg(count(1), count(-1))
        return Family.Family12bar1, (m1, count(2), m3)
    if 2 in h:
        p1, p2, p3, p4 = form_2121(h)
        return Family.Family2121, (p1, p2 - 1, p3 - 1, p4)
    return Family.Power1, (len(h),)


def _candidates_by_weight(lam: tuple[int, int]) -> Iterator[tuple[Family, tuple[int, ...]]]:
    a, b = lam
    if b == 0 and a >= 0:
        yield Family.Power1, (a,)
    if a >= 1 and b >= 1:
        for m2 in range(a):
            for m1 in range(b):
                yield Family.Family2121, (m1, m2, b - 1 - m1, a - 1 - m2)
    if b >= 0:
        yield Family.Family12bar1, (max(a, 0), b, max(-a, 0))
    yield Family.Family12bar2bar1, (max(a, 0), max(b, 0), max(-b, 0), max(-a, 0))


def classify_component_C2_by_search(w: Word) -> list[tuple[Family, tuple[int, ...]]]:
    """Every family representative congruent to some highest-weight word of the component of w.

    Representatives are highest-weight words and isomorphisms preserve highest
    weight, so candidates are drawn from the weights of those words.
    """
    C2 = alphabet("C", 2)
    found = []
    for h in hw_words(explore(C2, w)):
        for fam, params in _candidates_by_weight(C2.wt(h)):
            if params_valid(fam, params) and congruent(C2, h, representative(fam, params)):
                if (fam, params) not in found:
                    found.append((fam, params))
    return found


def normal_form_C2(w: Sequence[int], method: str = "cases") -> C2NormalForm:
    """The family of the component of w and the vertex of its representative
    component that corresponds to w.

    ``method="cases"`` picks the family by case analysis of a highest-weight
    word; ``method="search"`` tests every same-weight candidate instead.
    """
    C2 = alphabet("C", 2)
    w = C2.check_word(w)
    h = raise_to_highest(C2, w)
    if method == "cases":
        fam, params = classify_highest_C2(h)
    elif method == "search":
        found = classify_component_C2_by_search(w)
        if len(found) != 1:
            raise AssertionError(f"expected one candidate for {w}, found {found}")
        fam, params = found[0]
    else:
        raise ValueError(f"unknown method {method!r}")
    rep = representative(fam, params)
    target_wt = C2.wt(w)
    for r in explore(C2, rep).vertices:
        if C2.wt(r) == target_wt and congruent(C2, w, r):
            return C2NormalForm(fam, params, rep, r)
    raise AssertionError(f"no vertex of the component of {rep} is congruent to {w}")


# -- identities ---------------------------------------------------------------------


def words_up_to(alpha: Alphabet, max_len: int) -> list[Word]:
    """All words of length at most max_len in length-lexicographic order."""
    order = sorted(alpha.letters, key=alpha.rank) if isinstance(alpha, StandardAlphabet) else list(alpha.letters)
    out: list[Word] = []
    for k in range(max_len + 1):
        out.extend(itertools.product(order, repeat=k))
    return out


def variables_of(lhs: str, rhs: str) -> list[str]:
    return list(dict.fromkeys(lhs + rhs))


def substitute(term: str, sigma: dict) -> Word:
    return tuple(x for var in term for x in sigma[var])


def check_identity(
    lhs: str,
    rhs: str,
    alpha: Alphabet,
    max_len: int,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> Optional[dict]:
    """First substitution (length-lex) under which lhs and rhs are not congruent.

    ``None`` means the identity holds for all substitutions up to max_len.
    """
    names = variables_of(lhs, rhs)
    words = words_up_to(alpha, max_len)
    substitutions = itertools.product(words, repeat=len(names))
    if jobs > 1:
        from .parallel import first_failure
        return first_failure(lhs, rhs, alpha, names, substitutions, budget, jobs)
    for combo in substitutions:
        sigma = dict(zip(names, combo))
        if not congruent(alpha, substitute(lhs, sigma), substitute(rhs, sigma), budget):
            return sigma
    return None


def identity_conditions(lhs: str, rhs: str) -> bool:
    """Necessary conditions for an identity to hold in the C_2 hypoplactic monoid:
    equal letter counts, and equal counts before the first and after the last
    occurrence of every variable."""
    names = variables_of(lhs, rhs)
    if any(lhs.count(x) != rhs.count(x) for x in names):
        return False
    for x in names:
        if x not in lhs:
            continue
        before_u, before_v = lhs[:lhs.index(x)], rhs[:rhs.index(x)]
        after_u, after_v = lhs[lhs.rindex(x) + 1:], rhs[rhs.rindex(x) + 1:]
        for y in names:
            if before_u.count(y) != before_v.count(y) or after_u.count(y) != after_v.count(y):
                return False
    return True


# -- embeddings -----------------------------------------------------------------------


def embed_A_to_C(w: Sequence[int], n: int) -> Word:
    """Words over 1..n-1 into type C on n letters: w -> w n -n n -n, empty stays empty."""
    if n < 3:
        raise RankTooSmall(f"target rank must be >= 3, got {n}")
    w = tuple(w)
    if any(not 1 <= x <= n - 1 for x in w):
        raise UnsupportedAlphabet(f"letters must lie in 1..{n - 1}")
    return w + (n, -n, n, -n) if w else ()


def embed_C_to_C(w: Sequence[int], n: int) -> Word:
    """Type C on n-1 letters into type C on n letters: x -> (x shifted by one) 1 -1."""
    if n < 3:
        raise RankTooSmall(f"target rank must be >= 3, got {n}")
    out: list[int] = []
    for x in w:
        if x == 0 or abs(x) > n - 1:
            raise UnsupportedAlphabet(f"letter {x} outside type C on {n - 1} letters")
        out += [x + 1 if x > 0 else x - 1, 1, -1]
    return tuple(out)


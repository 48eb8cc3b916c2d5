"""Words over a seminormal alphabet and their quasi-crystal structure.

Two evaluation routes are provided.  :class:`StandardAlphabet` (types A and
C on signed-integer letters) scans a word once per index using the
inversion description.  :class:`TableAlphabet` folds letter signatures over
an arbitrary seminormal table.  Both expose the same interface, and both
memoise the per-word data used by graph exploration.

Type C letters are signed integers: ``k`` is k and ``-k`` is k-bar, ordered
1 < 2 < ... < n < -n < ... < -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import rootsys
from .errors import NotSeminormal, UnsupportedAlphabet, WordParseError
from .qc_core import POS_INF, ExtInt, QuasiCrystalTable, is_seminormal
from .qtensor import ONE, ZERO, Pair, Sig, sig_mul
from .rootsys import Kind, RootData, Weight

Word = tuple
CACHE_SIZE = 1 << 20


@dataclass(frozen=True)
class Profile:
    """Per-index data of one word: signatures and operator images."""

    sigs: tuple[Sig, ...]
    e: tuple[Optional[Word], ...]
    f: tuple[Optional[Word], ...]


def _sig_eps(s: Sig) -> ExtInt:
    return POS_INF if s is ZERO else s.minus


def _sig_phi(s: Sig) -> ExtInt:
    return POS_INF if s is ZERO else s.plus


class Alphabet:
    """Common interface; subclasses supply ``letter_*`` data and ``_profile``."""

    root: RootData
    letters: tuple

    def __init__(self) -> None:
        self.profile = lru_cache(maxsize=CACHE_SIZE)(self._profile)

    @property
    def indices(self) -> range:
        return self.root.indices

    def _profile(self, w: Word) -> Profile:
        raise NotImplementedError

    def wt(self, w: Word) -> Weight:
        total = [0] * self.root.dim
        for x in w:
            for k, c in enumerate(self.letter_wt(x)):
                total[k] += c
        return tuple(total)

    def sig(self, w: Word, i: int) -> Sig:
        return self.profile(tuple(w)).sigs[i - 1]

    def eps(self, w: Word, i: int) -> ExtInt:
        return _sig_eps(self.sig(w, i))

    def phi(self, w: Word, i: int) -> ExtInt:
        return _sig_phi(self.sig(w, i))

    def e(self, w: Word, i: int) -> Optional[Word]:
        return self.profile(tuple(w)).e[i - 1]

    def f(self, w: Word, i: int) -> Optional[Word]:
        return self.profile(tuple(w)).f[i - 1]

    def letter_wt(self, x) -> Weight:
        raise NotImplementedError

    def check_word(self, w: Sequence) -> Word:
        w = tuple(w)
        for x in w:
            if x not in self._letter_set:
                raise WordParseError(f"letter {x!r} is not in the alphabet")
        return w

    @property
    def _letter_set(self) -> frozenset:
        return frozenset(self.letters)


class StandardAlphabet(Alphabet):
    """Letters of type A (1..n) or type C (1..n, -n..-1)."""

    def __init__(self, kind: str | Kind, n: int):
        self.kind = Kind(kind) if not isinstance(kind, Kind) else kind
        self.n = n
        self.root = rootsys.named(self.kind, n)
        if self.kind is Kind.A:
            self.letters = tuple(range(1, n + 1))
        else:
            self.letters = tuple(range(1, n + 1)) + tuple(-k for k in range(n, 0, -1))
        self._weights = {x: self._compute_letter_wt(x) for x in self.letters}
        # Per index: letters with phi = 1 ("plus"), letters with epsilon = 1 ("minus"),
        # and the single-letter raising / lowering maps.
        self._plus, self._minus, self._raise, self._lower = {}, {}, {}, {}
        for i in self.root.indices:
            if self.kind is Kind.A or i < n:
                lower = {i: i + 1}
                if self.kind is Kind.C:
                    lower[-(i + 1)] = -i
            else:
                lower = {n: -n}
            self._lower[i] = lower
            self._raise[i] = {y: x for x, y in lower.items()}
            self._plus[i] = frozenset(lower)
            self._minus[i] = frozenset(self._raise[i])
        super().__init__()

    def __repr__(self) -> str:
        return f"StandardAlphabet({self.kind.value!r}, {self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardAlphabet) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __reduce__(self):
        return (StandardAlphabet, (self.kind.value, self.n))

    def _compute_letter_wt(self, x: int) -> Weight:
        return rootsys.scale(1 if x > 0 else -1, rootsys.unit(self.n, abs(x)))

    def letter_wt(self, x: int) -> Weight:
        return self._weights[x]

    def rank(self, x: int) -> int:
        """Position in the total order of letters, 1-based."""
        return x if x > 0 else 2 * self.n + 1 + x

    def letter_name(self, x: int) -> str:
        return str(x) if x > 0 else f"{-x}̅"

    def wt(self, w: Word) -> Weight:
        total = [0] * self.n
        for x in w:
            if x > 0:
                total[x - 1] += 1
            else:
                total[-x - 1] -= 1
        return tuple(total)

    def scan(self, w: Word, i: int) -> tuple[Sig, Optional[int], Optional[int]]:
        """Signature plus the positions where e_i and f_i act."""
        plus, minus = self._plus[i], self._minus[i]
        n_plus = n_minus = 0
        first_plus = last_minus = None
        for pos, x in enumerate(w):
            if x in plus:
                n_plus += 1
                if first_plus is None:
                    first_plus = pos
            elif x in minus:
                n_minus += 1
                last_minus = pos
                if first_plus is not None:
                    return ZERO, None, None
        return Pair(n_minus, n_plus), last_minus, first_plus

    def has_inversion(self, w: Word, i: int) -> bool:
        self.root._check_index(i)
        return self.scan(tuple(w), i)[0] is ZERO

    def _profile(self, w: Word) -> Profile:
        sigs, es, fs = [], [], []
        for i in self.root.indices:
            s, p, q = self.scan(w, i)
            sigs.append(s)
            es.append(None if p is None else w[:p] + (self._raise[i][w[p]],) + w[p + 1:])
            fs.append(None if q is None else w[:q] + (self._lower[i][w[q]],) + w[q + 1:])
        return Profile(tuple(sigs), tuple(es), tuple(fs))


class TableAlphabet(Alphabet):
    """Words over the elements of an arbitrary seminormal table."""

    def __init__(self, table: QuasiCrystalTable):
        if not is_seminormal(table):
            raise NotSeminormal("word structure needs a seminormal alphabet")
        self.table = table
        self.root = table.root
        self.letters = table.elements
        self._sig = {
            (x, i): (ZERO if table.eps[x, i] == POS_INF else Pair(table.eps[x, i], table.phi[x, i]))
            for x in table.elements
            for i in table.indices
        }
        super().__init__()

    def letter_wt(self, x: str) -> Weight:
        return self.table.wt[x]

    def _profile(self, w: Word) -> Profile:
        sigs, es, fs = [], [], []
        for i in self.root.indices:
            s: Sig = ONE
            p = q = None
            for pos, x in enumerate(w):
                ls = self._sig[x, i]
                s = sig_mul(s, ls)
                if ls is not ZERO:
                    if ls.minus > 0:
                        p = pos
                    if ls.plus > 0 and q is None:
                        q = pos
            sigs.append(s)
            if s is ZERO:
                es.append(None)
                fs.append(None)
                continue
            es.append(None if p is None else w[:p] + (self.table.e[w[p], i],) + w[p + 1:])
            fs.append(None if q is None else w[:q] + (self.table.f[w[q], i],) + w[q + 1:])
        return Profile(tuple(sigs), tuple(es), tuple(fs))


@lru_cache(maxsize=None)
def alphabet(kind: str, n: int) -> StandardAlphabet:
    """Shared standard alphabet instance, so per-word caches are reused."""
    return StandardAlphabet(kind, n)


def word_wt(alpha: Alphabet, w: Sequence) -> Weight:
    return alpha.wt(tuple(w))


def has_inversion(alpha: Alphabet, w: Sequence, i: int) -> bool:
    if not isinstance(alpha, StandardAlphabet):
        raise UnsupportedAlphabet("inversions are defined for standard alphabets only")
    return alpha.has_inversion(w, i)


def word_sig(alpha: Alphabet, w: Sequence, i: int) -> Sig:
    return alpha.sig(tuple(w), i)


def word_e(alpha: Alphabet, w: Sequence, i: int) -> Optional[Word]:
    return alpha.e(tuple(w), i)


def word_f(alpha: Alphabet, w: Sequence, i: int) -> Optional[Word]:
    return alpha.f(tuple(w), i)


def bar(alpha: Alphabet, w: Sequence) -> Word:
    """Reverse the word and bar every letter."""
    if not (isinstance(alpha, StandardAlphabet) and alpha.kind is Kind.C):
        raise UnsupportedAlphabet("bar is defined on type C words only")
    return tuple(-x for x in reversed(tuple(w)))


@dataclass(frozen=True)
class WordClass:
    highest_weight: bool
    lowest_weight: bool

    @property
    def isolated(self) -> bool:
        return self.highest_weight and self.lowest_weight


def word_class(alpha: Alphabet, w: Sequence) -> WordClass:
    p = alpha.profile(tuple(w))
    return WordClass(all(x is None for x in p.e), all(x is None for x in p.f))


def highest_weight_witness(lam: Sequence[int]) -> Word:
    """The type C word 1^a1 .. n^an -n^bn .. -1^b1 of highest weight lam."""
    n = len(lam)
    a = [l + 1 if l >= 0 else 1 for l in lam]
    b = [1 if l >= 0 else -l + 1 for l in lam]
    head = [k for k in range(1, n + 1) for _ in range(a[k - 1])]
    tail = [-k for k in range(n, 0, -1) for _ in range(b[k - 1])]
    return tuple(head + tail)


_SPLIT = re.compile(r"[\s,]+")


def parse_word(alpha: Alphabet, text: str) -> Word:
    """Parse signed integers separated by spaces or commas ("" is the empty word)."""
    text = text.strip()
    if not text:
        return ()
    try:
        letters = tuple(int(tok) for tok in _SPLIT.split(text) if tok)
    except ValueError as exc:
        raise WordParseError(f"cannot parse word {text!r}") from exc
    return alpha.check_word(letters)


def format_word(w: Sequence) -> str:
    return " ".join(str(x) for x in w)

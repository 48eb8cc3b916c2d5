"""Root-system data for types A and C, and validation of the root axioms.

Weights are tuples of integers.  All arithmetic is exact: pairings and
coefficient solves use :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import sympy

from .errors import IndexOutOfRange, NonIntegralPairing, RankTooSmall

Weight = tuple[int, ...]


class Kind(enum.Enum):
    A = "A"
    C = "C"
    EXPLICIT = "explicit"


def unit(d: int, k: int) -> Weight:
    """The standard basis vector e_k (1-based) of Z^d."""
    return tuple(1 if j == k - 1 else 0 for j in range(d))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(k, v: Weight) -> tuple:
    return tuple(k * a for a in v)


def dot(u, v) -> Fraction | int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class RootData:
    """Simple roots and their squared norms inside Z^dim.

    ``n`` is the alphabet size for the named kinds: type A on n letters has
    n-1 simple roots, type C on n letters has n.
    """

    kind: Kind
    dim: int
    simple_roots: tuple[Weight, ...]
    coroot_norms: tuple[Fraction, ...]
    n: int = 0

    @property
    def index_count(self) -> int:
        return len(self.simple_roots)

    @property
    def indices(self) -> range:
        return range(1, self.index_count + 1)

    def alpha(self, i: int) -> Weight:
        self._check_index(i)
        return self.simple_roots[i - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.index_count:
            raise IndexOutOfRange(f"index {i} outside 1..{self.index_count}")

    def zero(self) -> Weight:
        return (0,) * self.dim

    @cached_property
    def _left_inverse(self) -> list[list[Fraction]]:
        # Rows solve k from v = sum k_i alpha_i when v lies in the root span.
        a = sympy.Matrix([list(r) for r in self.simple_roots]).T
        if a.rank() < self.index_count:
            return []
        pinv = (a.T * a).inv() * a.T
        return [[Fraction(int(x.p), int(x.q)) for x in pinv.row(r)] for r in range(pinv.rows)]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "simple_roots": [list(r) for r in self.simple_roots],
            "coroot_norms": [f"{q.numerator}/{q.denominator}" for q in self.coroot_norms],
        }


def type_a(n: int) -> RootData:
    """Type A on the alphabet {1..n}: alpha_i = e_i - e_{i+1} for i < n."""
    if n < 2:
        raise RankTooSmall(f"type A needs n >= 2, got {n}")
    roots = tuple(sub(unit(n, i), unit(n, i + 1)) for i in range(1, n))
    return RootData(Kind.A, n, roots, tuple(Fraction(2) for _ in roots), n)


def type_c(n: int) -> RootData:
    """Type C on the alphabet {1..n, n-bar..1-bar}: alpha_n = 2 e_n."""
    if n < 2:
        raise RankTooSmall(f"type C needs n >= 2, got {n}")
    roots = [sub(unit(n, i), unit(n, i + 1)) for i in range(1, n)]
    roots.append(scale(2, unit(n, n)))
    norms = [Fraction(2)] * (n - 1) + [Fraction(4)]
    return RootData(Kind.C, n, tuple(roots), tuple(norms), n)


def named(kind: str | Kind, n: int) -> RootData:
    kind = Kind(kind) if not isinstance(kind, Kind) else kind
    if kind is Kind.A:
        return type_a(n)
    if kind is Kind.C:
        return type_c(n)
    raise ValueError("explicit root data must be loaded from JSON")


def from_json(doc: dict | str) -> RootData:
    """Load explicit root data: {dim, simple_roots, coroot_norms}."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    dim = int(doc["dim"])
    roots = tuple(tuple(int(c) for c in r) for r in doc["simple_roots"])
    if any(len(r) != dim for r in roots):
        raise ValueError("simple root length does not match dim")
    norms = tuple(Fraction(str(q)) for q in doc["coroot_norms"])
    if len(norms) != len(roots) or any(q <= 0 for q in norms):
        raise ValueError("coroot_norms must be positive, one per simple root")
    return RootData(Kind.EXPLICIT, dim, roots, norms)


def pairing(rd: RootData, lam: Weight, i: int) -> int:
    """<lam, alpha_i^vee> = 2 <lam, alpha_i> / <alpha_i, alpha_i>."""
    rd._check_index(i)
    q = Fraction(2 * dot(lam, rd.simple_roots[i - 1])) / rd.coroot_norms[i - 1]
    if q.denominator != 1:
        raise NonIntegralPairing(f"<{lam}, alpha_{i}^vee> = {q}")
    return q.numerator


def root_coefficients(rd: RootData, v: Weight) -> tuple[Fraction, ...] | None:
    """Solve v = sum k_i alpha_i exactly; None when v is outside the root span."""
    inv = rd._left_inverse
    if not inv:
        raise ValueError("simple roots are linearly dependent")
    k = tuple(sum((c * x for c, x in zip(row, v)), Fraction(0)) for row in inv)
    back = [sum((k[j] * rd.simple_roots[j][t] for j in range(len(k))), Fraction(0)) for t in range(rd.dim)]
    if any(b != x for b, x in zip(back, v)):
        return None
    return k


def weight_leq(rd: RootData, mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu is a nonnegative combination of simple roots."""
    k = root_coefficients(rd, sub(lam, mu))
    return k is not None and all(c >= 0 for c in k)


def reflect(alpha: Weight, v) -> tuple:
    """r_alpha(v) = v - <v, alpha^vee> alpha, computed in rationals."""
    c = Fraction(2 * dot(v, alpha), dot(alpha, alpha))
    return tuple(x - c * a for x, a in zip(v, alpha))


def generated_roots(rd: RootData) -> frozenset[Weight]:
    """The full root system of a named type."""
    n = rd.n
    e = lambda k: unit(n, k)  # noqa: E731
    roots: set[Weight] = set()
    if rd.kind is Kind.A:
        for i, j in itertools.permutations(range(1, n + 1), 2):
            roots.add(sub(e(i), e(j)))
    elif rd.kind is Kind.C:
        for i, j in itertools.combinations(range(1, n + 1), 2):
            for si, sj in itertools.product((1, -1), repeat=2):
                roots.add(add(scale(si, e(i)), scale(sj, e(j))))
        for i in range(1, n + 1):
            roots.add(scale(2, e(i)))
            roots.add(scale(-2, e(i)))
    else:
        return reflection_closure(rd)
    return frozenset(roots)


def reflection_closure(rd: RootData, limit: int = 10_000) -> frozenset[Weight]:
    """Orbit of the simple roots and their negatives under simple reflections."""
    found = set(rd.simple_roots) | {scale(-1, a) for a in rd.simple_roots}
    frontier = list(found)
    while frontier:
        v = frontier.pop()
        for a in rd.simple_roots:
            img = reflect(a, v)
            if any(Fraction(x).denominator != 1 for x in img):
                continue
            w = tuple(int(x) for x in img)
            if w not in found:
                if len(found) >= limit:
                    raise ValueError(f"reflection orbit exceeds {limit} roots")
                found.add(w)
                frontier.append(w)
    return frozenset(found)


@dataclass
class AxiomReport:
    violations: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {name for name, _ in self.violations}

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [{"axiom": a, "witness": [list(map(str, w)) if isinstance(w, tuple) else str(w) for w in wit]} for a, wit in self.violations]}


def _rank(vectors) -> int:
    if not vectors:
        return 0
    return sympy.Matrix([list(v) for v in vectors]).rank()


def validate_root_axioms(rd: RootData, roots) -> AxiomReport:
    """Check RS1-RS4, SR1-SR2 and WL1-WL3 for the lattice Z^dim."""
    report = AxiomReport()
    phi = {tuple(r) for r in roots}
    zero = rd.zero()
    bad = report.violations.append

    if not phi:
        bad(("RS1", ("empty",)))
    if zero in phi:
        bad(("RS1", (zero,)))
    nonzero = [r for r in sorted(phi) if r != zero]

    for a in nonzero:
        for b in nonzero:
            img = reflect(a, b)
            if any(Fraction(x).denominator != 1 for x in img) or tuple(int(x) for x in img) not in phi:
                bad(("RS2", (a, b)))
            c = Fraction(2 * dot(b, a), dot(a, a))
            if c.denominator != 1:
                bad(("RS3", (b, a)))

    for a, b in itertools.permutations(nonzero, 2):
        # b = k a with k not in {1, -1}
        if _rank([a, b]) == 1:
            k = Fraction(dot(b, a), dot(a, a))
            if k not in (1, -1):
                bad(("RS4", (a, b)))

    simple = list(rd.simple_roots)
    for r in simple:
        if r not in phi:
            bad(("SR1", ("simple root is not a root", r)))
    independent = _rank(simple) == len(simple)
    if not independent:
        bad(("SR1", tuple(simple)))
    else:
        for r in nonzero:
            k = root_coefficients(rd, r)
            if k is None or any(c.denominator != 1 for c in k) or not (all(c >= 0 for c in k) or all(c <= 0 for c in k)):
                bad(("SR2", (r,)))

    for r, q in zip(simple, rd.coroot_norms):
        if Fraction(dot(r, r)) != q:
            bad(("SR1", ("coroot norm mismatch", r)))

    basis = [unit(rd.dim, k) for k in range(1, rd.dim + 1)]
    if _rank(basis) != rd.dim:
        bad(("WL1", ()))
    for r in nonzero:
        if any(Fraction(x).denominator != 1 for x in r):
            bad(("WL2", (r,)))
    for lam in basis:
        for a in nonzero:
            if Fraction(2 * dot(lam, a), dot(a, a)).denominator != 1:
                bad(("WL3", (lam, a)))
    return report

"""Finite quasi-crystals given by explicit tables.

Extended integers are plain ``int`` for finite values plus the two
singletons :data:`POS_INF` and :data:`NEG_INF`.  A table stores, for every
element and index, the weight, the values of epsilon and phi, and the
partial raising/lowering maps (``None`` where undefined).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from . import rootsys
from .errors import MismatchedType, RankTooSmall, UnknownElement
from .rootsys import RootData, Weight, pairing


class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __hash__(self) -> int:
        return hash(("inf", self.sign))

    def _key(self, other) -> int:
        if isinstance(other, _Infinity):
            return other.sign
        if isinstance(other, int):
            return 0
        return NotImplemented

    def __lt__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.sign < k

    def __le__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.sign <= k

    def __gt__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.sign > k

    def __ge__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.sign >= k

    def __add__(self, other):
        if isinstance(other, _Infinity) and other.sign != self.sign:
            raise ArithmeticError("cannot add +inf and -inf")
        if isinstance(other, (int, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NEG_INF if self.sign > 0 else POS_INF


POS_INF = _Infinity(1)
NEG_INF = _Infinity(-1)
ExtInt = Union[int, _Infinity]


def is_finite(v: ExtInt) -> bool:
    return not isinstance(v, _Infinity)


def ext_to_json(v: ExtInt):
    return repr(v) if isinstance(v, _Infinity) else int(v)


def ext_from_json(v) -> ExtInt:
    if v in ("+inf", "inf"):
        return POS_INF
    if v == "-inf":
        return NEG_INF
    return int(v)


Key = tuple[str, int]


@dataclass(frozen=True)
class QuasiCrystalTable:
    """An explicit finite quasi-crystal (or a candidate one, before validation)."""

    root: RootData
    elements: tuple[str, ...]
    wt: Mapping[str, Weight]
    eps: Mapping[Key, ExtInt]
    phi: Mapping[Key, ExtInt]
    e: Mapping[Key, Optional[str]]
    f: Mapping[Key, Optional[str]]

    @property
    def indices(self) -> range:
        return self.root.indices

    def check(self, x: str) -> None:
        if x not in self.wt:
            raise UnknownElement(x)

    def to_json(self) -> dict:
        idx = list(self.indices)
        root = self.root.to_json()
        root["kind"] = self.root.kind.value
        if self.root.n:
            root["n"] = self.root.n
        return {
            "root": root,
            "elements": list(self.elements),
            "wt": {x: list(self.wt[x]) for x in self.elements},
            "eps": {x: [ext_to_json(self.eps[x, i]) for i in idx] for x in self.elements},
            "phi": {x: [ext_to_json(self.phi[x, i]) for i in idx] for x in self.elements},
            "e": {x: [self.e.get((x, i)) for i in idx] for x in self.elements},
            "f": {x: [self.f.get((x, i)) for i in idx] for x in self.elements},
        }

    def replace(self, **changes) -> "QuasiCrystalTable":
        data = {k: getattr(self, k) for k in ("root", "elements", "wt", "eps", "phi", "e", "f")}
        data.update(changes)
        return QuasiCrystalTable(**data)


def table_from_json(doc: dict | str) -> QuasiCrystalTable:
    if isinstance(doc, str):
        doc = json.loads(doc)
    rdoc = doc["root"]
    kind = rdoc.get("kind", "explicit")
    if kind in ("A", "C") and "n" in rdoc:
        root = rootsys.named(kind, int(rdoc["n"]))
    else:
        root = rootsys.from_json(rdoc)
    elements = tuple(str(x) for x in doc["elements"])
    idx = list(root.indices)
    wt = {x: tuple(int(c) for c in doc["wt"][x]) for x in elements}
    eps, phi, e, f = {}, {}, {}, {}
    for x in elements:
        for pos, i in enumerate(idx):
            eps[x, i] = ext_from_json(doc["eps"][x][pos])
            phi[x, i] = ext_from_json(doc["phi"][x][pos])
            e[x, i] = doc["e"][x][pos]
            f[x, i] = doc["f"][x][pos]
    return QuasiCrystalTable(root, elements, wt, eps, phi, e, f)


@dataclass(frozen=True)
class Violation:
    clause: str
    element: str
    index: int
    detail: str = ""


@dataclass
class Report:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set[tuple[str, str, int]]:
        return {(v.clause, v.element, v.index) for v in self.violations}

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"clause": v.clause, "element": v.element, "index": v.index, "detail": v.detail}
                for v in self.violations
            ],
        }


def _shift(v: ExtInt, d: int) -> ExtInt:
    return v + d


def validate_quasicrystal(t: QuasiCrystalTable) -> Report:
    """Report every violated axiom clause with its (element, index) witness.

    Clause "0" covers structural problems: missing entries or operator
    targets outside the element set.
    """
    report = Report()
    bad = lambda c, x, i, d="": report.violations.append(Violation(c, x, i, d))  # noqa: E731
    elems = set(t.elements)
    for x in t.elements:
        if x not in t.wt or len(t.wt[x]) != t.root.dim:
            bad("0", x, 0, "weight missing or wrong length")
            continue
        for i in t.indices:
            if (x, i) not in t.eps or (x, i) not in t.phi:
                bad("0", x, i, "epsilon or phi missing")
                continue
            ex, px = t.eps[x, i], t.phi[x, i]
            y, z = t.e.get((x, i)), t.f.get((x, i))
            for target in (y, z):
                if target is not None and target not in elems:
                    bad("0", x, i, f"operator target {target!r} unknown")
            if (y is not None and y not in elems) or (z is not None and z not in elems):
                continue
            # (1)
            expected = ex if not is_finite(ex) else ex + pairing(t.root, t.wt[x], i)
            if px != expected:
                bad("1", x, i, f"phi={px!r} but epsilon+pairing={expected!r}")
            alpha = t.root.alpha(i)
            # (2)
            if y is not None and is_finite(ex):
                if t.wt[y] != rootsys.add(t.wt[x], alpha):
                    bad("2", x, i, "weight of e(x) is not wt(x)+alpha")
                if t.eps[y, i] != _shift(ex, -1) or t.phi[y, i] != _shift(px, 1):
                    bad("2", x, i, "epsilon/phi of e(x) not shifted by -1/+1")
            # (3)
            if z is not None and is_finite(ex):
                if t.wt[z] != rootsys.sub(t.wt[x], alpha):
                    bad("3", x, i, "weight of f(x) is not wt(x)-alpha")
                if t.eps[z, i] != _shift(ex, 1) or t.phi[z, i] != _shift(px, -1):
                    bad("3", x, i, "epsilon/phi of f(x) not shifted by +1/-1")
            # (4)
            if y is not None and t.f.get((y, i)) != x:
                bad("4", x, i, f"e(x)={y} but f({y})!={x}")
            if z is not None and t.e.get((z, i)) != x:
                bad("4", x, i, f"f(x)={z} but e({z})!={x}")
            # (5), (6)
            if ex == NEG_INF and (y is not None or z is not None):
                bad("5", x, i, "operator defined where epsilon=-inf")
            if ex == POS_INF and (y is not None or z is not None):
                bad("6", x, i, "operator defined where epsilon=+inf")
    return report


def _string_length(t: QuasiCrystalTable, x: str, i: int, op: Mapping[Key, Optional[str]]) -> int:
    k, seen = 0, {x}
    y = op.get((x, i))
    while y is not None:
        k += 1
        if y in seen:
            return -1
        seen.add(y)
        y = op.get((y, i))
    return k


def is_seminormal(t: QuasiCrystalTable) -> bool:
    for x in t.elements:
        for i in t.indices:
            if t.eps[x, i] == POS_INF:
                continue
            if t.eps[x, i] != _string_length(t, x, i, t.e):
                return False
            if t.phi[x, i] != _string_length(t, x, i, t.f):
                return False
    return True


def _build(root: RootData, elements, wt, raise_pairs) -> QuasiCrystalTable:
    """Table from a crystal-chain description: raise_pairs[i] = list of (x, e_i(x))."""
    eps, phi, e, f = {}, {}, {}, {}
    for x in elements:
        for i in root.indices:
            eps[x, i], phi[x, i], e[x, i], f[x, i] = 0, 0, None, None
    for i, pairs in raise_pairs.items():
        for x, y in pairs:
            e[x, i], f[y, i] = y, x
            eps[x, i] += 1
            phi[y, i] += 1
    return QuasiCrystalTable(root, tuple(elements), wt, eps, phi, e, f)


def standard_A(n: int) -> QuasiCrystalTable:
    """Letters 1..n, weight e_x, with f_i(i) = i+1."""
    if n < 2:
        raise RankTooSmall(f"n must be >= 2, got {n}")
    root = rootsys.type_a(n)
    elements = [str(k) for k in range(1, n + 1)]
    wt = {str(k): rootsys.unit(n, k) for k in range(1, n + 1)}
    pairs = {i: [(str(i + 1), str(i))] for i in root.indices}
    return _build(root, elements, wt, pairs)


def standard_C(n: int) -> QuasiCrystalTable:
    """Letters 1..n, -n..-1 (k-bar written -k), weight +-e_k."""
    if n < 2:
        raise RankTooSmall(f"n must be >= 2, got {n}")
    root = rootsys.type_c(n)
    elements = [str(k) for k in range(1, n + 1)] + [str(-k) for k in range(n, 0, -1)]
    wt = {str(k): rootsys.unit(n, k) for k in range(1, n + 1)}
    wt.update({str(-k): rootsys.scale(-1, rootsys.unit(n, k)) for k in range(1, n + 1)})
    pairs = {i: [(str(i + 1), str(i)), (str(-i), str(-(i + 1)))] for i in range(1, n)}
    pairs[n] = [(str(-n), str(n))]
    return _build(root, elements, wt, pairs)


_INF = POS_INF


def fixture_A3_squared() -> QuasiCrystalTable:
    """Nine-element quasi-crystal of type A on three letters, given as a table.

    Rows: (wt, e1, e2, f1, f2, eps1, eps2, phi1, phi2).
    """
    root = rootsys.type_a(3)
    rows = {
        "(1,1)": ((2, 0, 0), None, None, "(2,1)", None, 0, 0, 2, 0),
        "(1,2)": ((1, 1, 0), None, None, None, "(1,3)", _INF, 0, _INF, 1),
        "(1,3)": ((1, 0, 1), None, "(1,2)", "(2,3)", None, 0, 1, 1, 0),
        "(2,1)": ((1, 1, 0), "(1,1)", None, "(2,2)", "(3,1)", 1, 0, 1, 1),
        "(2,2)": ((0, 2, 0), "(2,1)", None, None, "(3,2)", 2, 0, 0, 2),
        "(2,3)": ((0, 1, 1), "(1,3)", None, None, None, 1, _INF, 0, _INF),
        "(3,1)": ((1, 0, 1), None, "(2,1)", "(3,2)", None, 0, 1, 1, 0),
        "(3,2)": ((0, 1, 1), "(3,1)", "(2,2)", None, "(3,3)", 1, 1, 0, 1),
        "(3,3)": ((0, 0, 2), None, "(3,2)", None, None, 0, 2, 0, 0),
    }
    wt, eps, phi, e, f = {}, {}, {}, {}, {}
    for x, (w, e1, e2, f1, f2, ep1, ep2, ph1, ph2) in rows.items():
        wt[x] = w
        e[x, 1], e[x, 2], f[x, 1], f[x, 2] = e1, e2, f1, f2
        eps[x, 1], eps[x, 2], phi[x, 1], phi[x, 2] = ep1, ep2, ph1, ph2
    return QuasiCrystalTable(root, tuple(rows), wt, eps, phi, e, f)


def fixture_Q2() -> QuasiCrystalTable:
    """Two isolated elements with finite epsilon/phi: valid but not seminormal."""
    root = rootsys.type_a(2)
    wt = {"a": (1, 0), "b": (0, 1)}
    eps = {("a", 1): 0, ("b", 1): 1}
    phi = {("a", 1): 1, ("b", 1): 0}
    none = {("a", 1): None, ("b", 1): None}
    return QuasiCrystalTable(root, ("a", "b"), wt, eps, phi, dict(none), dict(none))


@dataclass(frozen=True)
class ElementClass:
    highest_weight: bool
    lowest_weight: bool

    @property
    def isolated(self) -> bool:
        return self.highest_weight and self.lowest_weight


def element_class(t: QuasiCrystalTable, x: str) -> ElementClass:
    t.check(x)
    hi = all(t.e.get((x, i)) is None for i in t.indices)
    lo = all(t.f.get((x, i)) is None for i in t.indices)
    return ElementClass(hi, lo)


@dataclass(frozen=True)
class HomCheck:
    is_hom: bool
    is_iso: bool


def _same_type(a: RootData, b: RootData) -> bool:
    return (a.dim, a.simple_roots, a.coroot_norms) == (b.dim, b.simple_roots, b.coroot_norms)


def check_homomorphism(src: QuasiCrystalTable, dst: QuasiCrystalTable, mapping: Mapping[str, Optional[str]]) -> HomCheck:
    """Test a partial map for being a homomorphism and for being an isomorphism.

    Elements absent from ``mapping`` (or mapped to None) are sent to undefined.
    """
    if not _same_type(src.root, dst.root):
        raise MismatchedType("source and target have different root data")
    psi = {x: mapping.get(x) for x in src.elements}
    for y in psi.values():
        if y is not None:
            dst.check(y)

    is_hom = True
    for x, y in psi.items():
        if y is None:
            continue
        if src.wt[x] != dst.wt[y]:
            is_hom = False
            break
        for i in src.indices:
            if src.eps[x, i] != dst.eps[y, i] or src.phi[x, i] != dst.phi[y, i]:
                is_hom = False
            for op_s, op_d in ((src.e, dst.e), (src.f, dst.f)):
                x2 = op_s.get((x, i))
                if x2 is not None and psi.get(x2) is not None and psi[x2] != op_d.get((y, i)):
                    is_hom = False

    images = [y for y in psi.values() if y is not None]
    bijective = len(images) == len(src.elements) == len(dst.elements) and len(set(images)) == len(images)
    is_iso = is_hom and bijective
    if is_iso:
        for x, y in psi.items():
            for i in src.indices:
                for op_s, op_d in ((src.e, dst.e), (src.f, dst.f)):
                    x2 = op_s.get((x, i))
                    mapped = None if x2 is None else psi[x2]
                    if mapped != op_d.get((y, i)):
                        is_iso = False
    return HomCheck(is_hom, is_iso)


def mutate(t: QuasiCrystalTable, rng: random.Random) -> QuasiCrystalTable:
    """Change one epsilon or phi entry to a different value."""
    x = rng.choice(t.elements)
    i = rng.choice(list(t.indices))
    field_name = rng.choice(("eps", "phi"))
    values = dict(getattr(t, field_name))
    old = values[x, i]
    if is_finite(old):
        values[x, i] = rng.choice([old + d for d in (-2, -1, 1, 2)] + [POS_INF, NEG_INF])
    else:
        values[x, i] = rng.choice([-1, 0, 1, 2, -old])
    return t.replace(**{field_name: values})


def mutation_misses(t: QuasiCrystalTable, trials: int, seed: int) -> int:
    """Number of seeded single-entry mutations of ``t`` the validator accepts."""
    rng = random.Random(seed)
    return sum(validate_quasicrystal(mutate(t, rng)).ok for _ in range(trials))

"""Signatures in the monoid with zero <-, + | +- = 0> and the quasi-tensor product."""

from __future__ import annotations

from typing import NamedTuple, Union

from .errors import MismatchedType, NotSeminormal
from .qc_core import POS_INF, QuasiCrystalTable, _same_type, is_seminormal
from .rootsys import add, pairing


class Pair(NamedTuple):
    """The nonzero signature -^minus +^plus."""

    minus: int
    plus: int


class _Zero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Zero"


ZERO = _Zero()
Sig = Union[Pair, _Zero]
ONE = Pair(0, 0)


def sig_mul(s: Sig, t: Sig) -> Sig:
    if s is ZERO or t is ZERO:
        return ZERO
    if s.plus > 0 and t.minus > 0:
        return ZERO
    return Pair(s.minus + t.minus, s.plus + t.plus)


def sig_of(t: QuasiCrystalTable, x: str, i: int, *, checked: bool = False) -> Sig:
    """Zero when epsilon is +inf, otherwise -^epsilon +^phi."""
    if not checked and not is_seminormal(t):
        raise NotSeminormal("signatures need a seminormal table")
    t.check(x)
    eps = t.eps[x, i]
    if eps == POS_INF:
        return ZERO
    return Pair(eps, t.phi[x, i])


def pair_id(x: str, y: str) -> str:
    return f"({x},{y})"


def qtensor(t1: QuasiCrystalTable, t2: QuasiCrystalTable) -> QuasiCrystalTable:
    """The quasi-tensor product; element (x, y) is named ``(x,y)``."""
    if not _same_type(t1.root, t2.root):
        raise MismatchedType("factors have different root data")
    if not (is_seminormal(t1) and is_seminormal(t2)):
        raise NotSeminormal("quasi-tensor product needs seminormal factors")
    root = t1.root
    elements, wt, eps, phi, e, f = [], {}, {}, {}, {}, {}
    for x in t1.elements:
        for y in t2.elements:
            xy = pair_id(x, y)
            elements.append(xy)
            wt[xy] = add(t1.wt[x], t2.wt[y])
            for i in root.indices:
                px, ey = t1.phi[x, i], t2.eps[y, i]
                if px > 0 and ey > 0:
                    eps[xy, i] = phi[xy, i] = POS_INF
                    e[xy, i] = f[xy, i] = None
                    continue
                eps[xy, i] = max(t1.eps[x, i], ey - pairing(root, t1.wt[x], i))
                phi[xy, i] = max(px + pairing(root, t2.wt[y], i), t2.phi[y, i])
                if px >= ey:
                    ex = t1.e.get((x, i))
                    e[xy, i] = None if ex is None else pair_id(ex, y)
                else:
                    ex = t2.e.get((y, i))
                    e[xy, i] = None if ex is None else pair_id(x, ex)
                if px > ey:
                    fx = t1.f.get((x, i))
                    f[xy, i] = None if fx is None else pair_id(fx, y)
                else:
                    fx = t2.f.get((y, i))
                    f[xy, i] = None if fx is None else pair_id(x, fx)
    return QuasiCrystalTable(root, tuple(elements), wt, eps, phi, e, f)

"""Euler elements of a root system and their symmetry."""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import Vec, dot, fmt, is_zero, neg, vec
from .rootsys import RootSystem, build_root_system, dual_basis, weyl_orbit


@dataclass(frozen=True)
class EulerElement:
    coweight: Vec
    label: int | None = None

    def to_json(self) -> dict:
        return {"label": self.label, "coweight": [fmt(x) for x in self.coweight]}


def _coweight(h) -> Vec:
    return vec(h.coweight if isinstance(h, EulerElement) else h)


def is_euler(rs: RootSystem, h) -> bool:
    """True iff ``h != 0`` and every positive root takes a value in {-1, 0, 1} on it."""
    h = _coweight(h)
    if is_zero(h):
        return False
    return all(dot(a, h) in (-1, 0, 1) for a in rs.positive_roots)


def euler_elements(rs: RootSystem) -> list[EulerElement]:
    """Dual-basis elements that are Euler, labelled 1..n."""
    return [EulerElement(h, j) for j, h in enumerate(dual_basis(rs), 1) if is_euler(rs, h)]


def is_symmetric(rs: RootSystem, h) -> bool:
    """``-h`` is Weyl-conjugate to ``h``."""
    h = _coweight(h)
    if not is_euler(rs, h):
        raise ValueError("not an Euler element")
    return neg(h) in weyl_orbit(rs, h)


def symmetric_elements(rs: RootSystem) -> list[EulerElement]:
    return [e for e in euler_elements(rs) if is_symmetric(rs, e)]


def symmetric_class_count(rs: RootSystem) -> int:
    return len(symmetric_elements(rs))


def summary(rs: RootSystem | str) -> dict:
    if isinstance(rs, str):
        rs = build_root_system(rs)
    eu = euler_elements(rs)
    sym = [e.label for e in eu if is_symmetric(rs, e)]
    return {
        "family": rs.type.family,
        "rank": rs.rank,
        "euler": [e.label for e in eu],
        "symmetric": sym,
        "class_counts": {"euler": len(eu), "symmetric": len(sym)},
    }

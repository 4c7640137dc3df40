"""Irreducible root systems in Bourbaki coordinates.

Roots and coweights are rational vectors in the epsilon basis; the
standard inner product identifies the Cartan space with its dual, so
``alpha(h)`` is the dot product.  Exceptional realizations follow the
plates of Bourbaki, *Groupes et algebres de Lie*, ch. VI.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable

from .linalg import Vec, add, dot, fmt, inverse, neg, scale, sub, vec

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "BC")
_FIXED = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}

Root = Vec
Coweight = Vec


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in _FIXED:
            if self.rank != _FIXED[self.family]:
                raise ValueError(f"{self.family} has rank {_FIXED[self.family]}, got {self.rank}")
        elif self.rank < _MIN[self.family]:
            raise ValueError(
                f"{self.family}_n requires n >= {_MIN[self.family]}, got {self.rank}")

    @property
    def name(self) -> str:
        return self.family if self.family in _FIXED else f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, s: str) -> "RootSystemType":
        s = s.strip().upper().replace("_", "")
        if s in _FIXED:
            return cls(s, _FIXED[s])
        fam = "BC" if s.startswith("BC") else s[:1]
        try:
            n = int(s[len(fam):])
        except ValueError:
            raise ValueError(f"cannot parse root system {s!r}") from None
        return cls(fam, n)


def _e(n: int, *terms: tuple[int, object]) -> Root:
    v = [Q(0)] * n
    for i, c in terms:
        v[i - 1] += Q(c)
    return tuple(v)


def _simple_roots(t: RootSystemType) -> list[Root]:
    f, n = t.family, t.rank
    h = Q(1, 2)
    if f == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if f in ("B", "C", "D", "BC"):
        s = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        last = {"B": _e(n, (n, 1)), "BC": _e(n, (n, 1)), "C": _e(n, (n, 2)),
                "D": _e(n, (n - 1, 1), (n, 1))}[f]
        return s + [last]
    if f in ("E6", "E7", "E8"):
        e8 = [
            _e(8, (1, h), (8, h), *[(i, -h) for i in range(2, 8)]),
            _e(8, (1, 1), (2, 1)),
            _e(8, (2, 1), (1, -1)),
            _e(8, (3, 1), (2, -1)),
            _e(8, (4, 1), (3, -1)),
            _e(8, (5, 1), (4, -1)),
            _e(8, (6, 1), (5, -1)),
            _e(8, (7, 1), (6, -1)),
        ]
        return e8[:n]
    if f == "F4":
        return [_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 1)),
                _e(4, (1, h), (2, -h), (3, -h), (4, -h))]
    if f == "G2":
        return [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
    raise AssertionError(f)


def coroot(a: Root) -> Root:
    """``2a/(a,a)``."""
    return scale(Q(2) / dot(a, a), a)


def reflect(a: Root, v: Vec) -> Vec:
    """``s_a(v) = v - <v, a^vee> a``, written on the coweight side as ``v - a(v) a^vee``."""
    return sub(v, scale(dot(a, v), coroot(a)))


@dataclass(frozen=True)
class RootSystem:
    type: RootSystemType
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    _all: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def dim(self) -> int:
        return len(self.simple_roots[0])

    @property
    def roots(self) -> frozenset:
        return self._all

    def coroot(self, a: Root) -> Root:
        return coroot(a)

    def is_root(self, v: Vec) -> bool:
        return tuple(Q(x) for x in v) in self._all

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entries ``a_ij = alpha_j(alpha_i^vee)``."""
        return tuple(tuple(int(dot(b, coroot(a))) for b in self.simple_roots)
                     for a in self.simple_roots)

    def simple_coords(self, v: Vec) -> Vec:
        """Coefficients of ``v`` (in the span of the roots) on the simple roots."""
        gi = _gram_inverse(self.simple_roots)
        rhs = [dot(a, v) for a in self.simple_roots]
        return tuple(dot(row, rhs) for row in gi)

    def to_json(self) -> dict:
        return {
            "family": self.type.family,
            "rank": self.type.rank,
            "simple_roots": [[fmt(x) for x in a] for a in self.simple_roots],
            "positive_roots": [[fmt(x) for x in a] for a in self.positive_roots],
        }


@lru_cache(maxsize=None)
def _gram_inverse(simple: tuple[Root, ...]):
    return inverse(tuple(tuple(dot(a, b) for b in simple) for a in simple))


def _orbit(gens: Iterable[Root], seeds: Iterable[Vec]) -> set[Vec]:
    gens = [(a, coroot(a)) for a in gens]
    seen = set(seeds)
    todo = deque(seen)
    while todo:
        v = todo.popleft()
        for a, av in gens:
            w = sub(v, scale(dot(a, v), av))
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@lru_cache(maxsize=None)
def build_root_system(t: RootSystemType | str) -> RootSystem:
    """Construct the root system of the given type.

    All roots arise as images of simple roots under simple reflections; for
    ``BC_n`` the doubled short roots ``2 eps_i`` are added.  Positivity is read
    off from the simple-root coordinates.
    """
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    simple = _simple_roots(t)
    roots = _orbit(simple, simple)
    if t.family == "BC":
        roots |= {scale(2, a) for a in list(roots) if dot(a, a) == 1}
    roots = {vec(r) for r in roots}
    rs = RootSystem(t, tuple(simple), (), frozenset(roots))
    pos = []
    for r in roots:
        c = rs.simple_coords(r)
        if all(x >= 0 for x in c):
            pos.append((tuple(-x for x in c), r))
        elif not all(x <= 0 for x in c):
            raise AssertionError(f"root {r} is neither positive nor negative")
    pos.sort()
    return RootSystem(t, tuple(simple), tuple(r for _, r in pos), frozenset(roots))


def dual_basis(rs: RootSystem) -> list[Coweight]:
    """Coweights ``h_j`` in the span of the roots with ``alpha_k(h_j) = delta_kj``."""
    cor = [coroot(a) for a in rs.simple_roots]
    cm = rs.cartan_matrix()
    # h_j = sum_i c_ij alpha_i^vee with sum_i c_ij a_ik = delta_jk
    ci = inverse(tuple(tuple(Q(x) for x in r) for r in cm))
    out = []
    for j in range(rs.rank):
        h = tuple(Q(0) for _ in range(rs.dim))
        for i in range(rs.rank):
            h = add(h, scale(ci[j][i], cor[i]))
        out.append(h)
    return out


def weyl_orbit(rs: RootSystem, v: Coweight) -> frozenset:
    """Orbit of ``v`` under the Weyl group, by breadth-first search."""
    return frozenset(_orbit(rs.simple_roots, [vec(v)]))


def cartan_integer(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """``beta(alpha^vee)`` for roots ``alpha``, ``beta``."""
    alpha, beta = vec(alpha), vec(beta)
    for r in (alpha, beta):
        if r not in rs.roots:
            raise ValueError(f"{[fmt(x) for x in r]} is not a root of {rs.type.name}")
    x = dot(beta, coroot(alpha))
    assert x.denominator == 1
    return int(x)


def evaluate(alpha: Root, h: Coweight) -> Q:
    return dot(alpha, h)


__all__ = [
    "FAMILIES", "Root", "Coweight", "RootSystemType", "RootSystem", "build_root_system",
    "dual_basis", "weyl_orbit", "cartan_integer", "coroot", "reflect", "evaluate", "neg",
]

"""Orthogonal Euler pairs: conjugacy classes and symmetry.

A pair (h, k) is encoded by a sign vector sigma, k = sum_j sigma_j k_j.  The
centralizer of h acts on sign vectors through the Weyl group of the dual
symmetric subalgebra: permutations (type A), permutations and all sign
changes (type C), or permutations and even sign changes (type D).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .catalog import RealFormEntry

SignVector = tuple[int, ...]
MAX_ORBIT_RANK = 12


@dataclass(frozen=True)
class PairClass:
    entry: str
    j: int
    representative: SignVector

    def to_json(self) -> dict:
        return {"j": self.j, "representative": list(self.representative)}


def representative(r: int, j: int) -> SignVector:
    """``k^j``: j plus signs followed by r - j minus signs."""
    return (1,) * j + (-1,) * (r - j)


def _star(entry: RealFormEntry) -> str:
    if entry.sigma_star_type is None:
        raise ValueError(f"{entry.slug}: h is not symmetric, there are no orthogonal pairs")
    return entry.sigma_star_type


def class_indices(entry: RealFormEntry) -> list[int]:
    r = entry.rank_r
    return {"A": list(range(r + 1)), "C": [r], "D": [r - 1, r]}[_star(entry)]


def pair_classes(entry: RealFormEntry) -> list[PairClass]:
    r = entry.rank_r
    return [PairClass(entry.slug, j, representative(r, j)) for j in class_indices(entry)]


def _check(entry: RealFormEntry, sigma) -> SignVector:
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != entry.rank_r or any(s not in (1, -1) for s in sigma):
        raise ValueError(f"sign vector must have {entry.rank_r} entries in {{+1,-1}}")
    return sigma


def classify_sign_vector(entry: RealFormEntry, sigma) -> PairClass:
    sigma = _check(entry, sigma)
    r = entry.rank_r
    star = _star(entry)
    plus = sigma.count(1)
    if star == "A":
        j = plus
    elif star == "C":
        j = r
    else:
        j = r if (r - plus) % 2 == 0 else r - 1
    return PairClass(entry.slug, j, representative(r, j))


def _generators(star: str, r: int):
    gens = []
    for i in range(r - 1):
        gens.append(lambda s, i=i: s[:i] + (s[i + 1], s[i]) + s[i + 2:])
    if star == "C":
        for i in range(r):
            gens.append(lambda s, i=i: s[:i] + (-s[i],) + s[i + 1:])
    elif star == "D":
        for i in range(r - 1):
            gens.append(lambda s, i=i: s[:i] + (-s[i], -s[i + 1]) + s[i + 2:])
    return gens


def orbit_of_sign_vectors(entry: RealFormEntry, sigma) -> frozenset:
    """Closure of ``sigma`` under the Weyl generators, by breadth-first search."""
    if entry.rank_r > MAX_ORBIT_RANK:
        raise ValueError(f"rank {entry.rank_r} exceeds the orbit guard {MAX_ORBIT_RANK}")
    sigma = _check(entry, sigma)
    gens = _generators(_star(entry), entry.rank_r)
    seen = {sigma}
    todo = deque([sigma])
    while todo:
        s = todo.popleft()
        for g in gens:
            t = g(s)
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return frozenset(seen)


def orbit_cells(entry: RealFormEntry) -> list[frozenset]:
    """Partition of {+1,-1}^r into orbits."""
    cells: list[frozenset] = []
    covered: set = set()
    for s in product((1, -1), repeat=entry.rank_r):
        if s not in covered:
            cell = orbit_of_sign_vectors(entry, s)
            cells.append(cell)
            covered |= cell
    return cells


def is_symmetric_pair(entry: RealFormEntry, cls: PairClass) -> bool:
    star = _star(entry)
    r = entry.rank_r
    if cls.j not in class_indices(entry):
        raise ValueError(f"invalid class index {cls.j}")
    if star == "A":
        return r % 2 == 0 and cls.j == r // 2
    if star == "C":
        return True
    return r % 2 == 0


def is_symmetric_pair_oracle(entry: RealFormEntry, cls: PairClass) -> bool:
    """``-k`` lies in the orbit of ``k``."""
    rep = cls.representative
    return tuple(-s for s in rep) in orbit_of_sign_vectors(entry, rep)


def summary(entry: RealFormEntry) -> dict:
    return {
        "entry": entry.slug,
        "sigma_star_type": entry.sigma_star_type,
        "rank_r": entry.rank_r,
        "classes": [
            {"j": c.j, "representative": list(c.representative),
             "symmetric": is_symmetric_pair(entry, c)}
            for c in pair_classes(entry)
        ],
    }

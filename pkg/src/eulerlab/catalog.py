"""Compiled-in catalog of simple real Lie algebras with Euler elements.

Each entry records the restricted root system, the Euler label, root
multiplicities (keyed by squared root length, i.e. by Weyl orbit), the
strongly orthogonal roots spanning the Cayley subspace, and the expected
fundamental group of the adjoint orbit.  Every entry is validated when the
catalog is loaded.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache

from .linalg import Vec, add, dot, fmt, sub, vec
from .rootsys import RootSystem, build_root_system, dual_basis

TYPE_TAGS = ("Complex", "Cayley", "Split", "NonSplit")
PI1_BY_TYPE = {"Complex": "Trivial", "NonSplit": "Trivial", "Cayley": "Z", "Split": "Z2"}
STAR_BY_TYPE = {"Complex": "C", "NonSplit": "C", "Cayley": "A", "Split": "D"}


class CatalogError(ValueError):
    pass


# Table 2 rows: (key, type, g, g*, Sigma(g,a), h, g_1(h), Sigma(g,c), Sigma(g*,c), condition)
TABLE2 = (
    ("sl2rC", "Complex", "sl_{2r}(C)", "su_{r,r}(C)", "A_{2r-1}", "h_r", "M_r(C)", "C_r", "C_r", ""),
    ("sp2rC", "Complex", "sp_{2r}(C)", "sp_{2r}(R)", "C_r", "h_r", "Sym_r(C)", "C_r", "C_r", ""),
    ("so2n1C", "Complex", "so_{2n+1}(C)", "so_{2,2n-1}(R)", "B_n", "h_1", "C^{2n-1}", "C_2", "C_2", "n > 1"),
    ("so2nC", "Complex", "so_{2n}(C)", "so_{2,2n-2}(R)", "D_n", "h_1", "C^{2n-2}", "C_2", "C_2", "n > 2"),
    ("so4rC", "Complex", "so_{4r}(C)", "so*(4r)", "D_{2r}", "h_{2r-1},h_{2r}", "Skew_{2r}(C)", "C_r", "C_r", ""),
    ("e7C", "Complex", "e_7(C)", "e_{7(-25)}", "E_7", "h_7", "Herm_3(O)_C", "C_3", "C_3", ""),
    ("surr", "Cayley", "su_{r,r}(C)", "R⊕sl_r(C)", "C_r", "h_r", "Herm_r(C)", "C_r", "A_{r-1}", "r >= 1"),
    ("sp2rR", "Cayley", "sp_{2r}(R)", "R⊕sl_r(R)", "C_r", "h_r", "Sym_r(R)", "C_r", "A_{r-1}", "r > 1"),
    ("so2n1", "Cayley", "so_{2,n+1}(R)", "R⊕so_{1,n}(R)", "C_2", "h_2", "R^{1,n}", "C_2", "A_1", "n > 1"),
    ("sostar", "Cayley", "so*(4r)", "R⊕sl_r(H)", "C_r", "h_r", "Herm_r(H)", "C_r", "A_{r-1}", "r > 1"),
    ("e7m25", "Cayley", "e_{7(-25)}", "R⊕e_{6(-26)}", "C_3", "h_3", "Herm_3(O)", "C_3", "A_2", ""),
    ("sl2rR", "Split", "sl_{2r}(R)", "so_{r,r}(R)", "A_{2r-1}", "h_r", "M_r(R)", "C_r", "D_r", "r > 1"),
    ("so2r2r", "Split", "so_{2r,2r}(R)", "so_{2r}(C)", "D_{2r}", "h_{2r-1},h_{2r}", "Skew_{2r}(R)", "C_r", "D_r", "r > 1"),
    ("e7R", "Split", "e_7(R)", "sl_4(H)", "E_7", "h_7", "Herm_3(O_split)", "C_3", "D_3", ""),
    ("sopq", "Split", "so_{p+1,q+1}(R)", "so_{1,p}(R)⊕so_{1,q}(R)", "B_{p+1} (p<q) / D_{p+1} (p=q)",
     "h_1", "R^{p,q}", "C_2", "D_2 ≅ A_1^{⊕2}", "p,q > 1"),
    ("sl2rH", "NonSplit", "sl_{2r}(H)", "u_{r,r}(H)", "A_{2r-1}", "h_r", "M_r(H)", "C_r", "C_r", ""),
    ("urrH", "NonSplit", "u_{r,r}(H)", "sp_{2r}(C)", "C_r", "h_r", "Aherm_r(H)", "C_r", "C_r", ""),
    ("so1d", "NonSplit", "so_{1,d+1}(R)", "so_{1,d}(R)", "A_1", "h_1", "R^{0,d}", "C_1", "C_1", "d >= 2"),
)
TABLE2_COLUMNS = ("g", "g*", "Sigma(g,a)", "h", "g_1(h)", "Sigma(g,c)", "Sigma(g*,c)")

# Hermitian algebras of tube type: (g, Sigma(g,a), g_C, Sigma(g_C,a), symmetric Euler element)
TABLE1 = (
    ("su_{n,n}(C)", "C_n", "sl_{2n}(C)", "A_{2n-1}", "h_n"),
    ("so_{2,2n-1}(R), n > 1", "C_2", "so_{2n+1}(C)", "B_n", "h_1"),
    ("sp_{2n}(R)", "C_n", "sp_{2n}(C)", "C_n", "h_n"),
    ("so_{2,2n-2}(R), n > 2", "C_2", "so_{2n}(C)", "D_n", "h_1"),
    ("so*(4n)", "C_n", "so_{4n}(C)", "D_{2n}", "h_{2n-1}, h_{2n}"),
    ("e_{7(-25)}", "C_3", "e_7", "E_7", "h_7"),
)
TABLE1_COLUMNS = ("g (hermitian)", "Sigma(g,a)", "g_C", "Sigma(g_C,a)", "symmetric Euler element")


@dataclass(frozen=True)
class RealFormEntry:
    slug: str
    name: str
    sigma_ga: str
    euler_label: int
    multiplicity: dict | None
    type_tag: str
    sigma_star_type: str | None
    rank_r: int
    gamma: tuple[Vec, ...]
    g1_description: str
    g1_dimension: int
    pi1_expected: str
    g_star: str = ""
    table2_row: str | None = None
    realization: tuple | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.sigma_ga)

    @property
    def h(self) -> Vec:
        return dual_basis(self.root_system)[self.euler_label - 1]

    @property
    def symmetric(self) -> bool:
        return self.sigma_star_type is not None

    @property
    def matrix_level(self) -> bool:
        return self.realization is not None

    def mult(self, root) -> int | None:
        if self.multiplicity is None:
            return None
        return self.multiplicity.get(int(dot(root, root)))

    def to_json(self) -> dict:
        return {
            "slug": self.slug,
            "name": self.name,
            "sigma_ga": self.sigma_ga,
            "euler_label": self.euler_label,
            "multiplicity": None if self.multiplicity is None
            else {str(k): v for k, v in sorted(self.multiplicity.items())},
            "type_tag": self.type_tag,
            "sigma_star_type": self.sigma_star_type,
            "rank_r": self.rank_r,
            "gamma": [[fmt(x) for x in g] for g in self.gamma],
            "g1_description": self.g1_description,
            "g1_dimension": self.g1_dimension,
            "pi1_expected": self.pi1_expected,
            "g_star": self.g_star,
            "table2_row": self.table2_row,
            "level": "matrix" if self.matrix_level else "classification",
            "notes": list(self.notes),
        }


def _eps(n, *pairs) -> Vec:
    v = [Q(0)] * n
    for i, c in pairs:
        v[i - 1] += Q(c)
    return tuple(v)


def _c_gamma(r: int) -> tuple[Vec, ...]:
    if r == 1:
        return ((Q(1), Q(-1)),)
    return tuple(_eps(r, (j, 2)) for j in range(1, r + 1))


def _c_type(r: int) -> str:
    return "A1" if r == 1 else f"C{r}"


def _c_mult(short: int, long: int, r: int) -> dict:
    return {2: long} if r == 1 else {2: short, 4: long}


def _entries() -> list[RealFormEntry]:
    E = RealFormEntry
    out: list[RealFormEntry] = []

    # Complex type at small rank (restricted roots = roots, all multiplicities 2)
    out += [
        E("sl4C", "sl(4,C)", "A3", 2, {2: 2}, "Complex", "C", 2,
          (_eps(4, (1, 1), (3, -1)), _eps(4, (2, 1), (4, -1))), "M_2(C)", 8, "Trivial",
          "su_{2,2}(C)", "sl2rC"),
        E("sp4C", "sp(4,C)", "C2", 2, {2: 2, 4: 2}, "Complex", "C", 2, _c_gamma(2),
          "Sym_2(C)", 6, "Trivial", "sp_4(R)", "sp2rC"),
        E("so5C", "so(5,C)", "B2", 1, {1: 2, 2: 2}, "Complex", "C", 2,
          (_eps(2, (1, 1), (2, 1)), _eps(2, (1, 1), (2, -1))), "C^3", 6, "Trivial",
          "so_{2,3}(R)", "so2n1C"),
        E("so8C_h1", "so(8,C)", "D4", 1, {2: 2}, "Complex", "C", 2,
          (_eps(4, (1, 1), (2, 1)), _eps(4, (1, 1), (2, -1))), "C^6", 12, "Trivial",
          "so_{2,6}(R)", "so2nC"),
        E("so8C", "so(8,C)", "D4", 4, {2: 2}, "Complex", "C", 2,
          (_eps(4, (1, 1), (2, 1)), _eps(4, (3, 1), (4, 1))), "Skew_4(C)", 12, "Trivial",
          "so*(8)", "so4rC",
          notes=("h_3 and h_4 lead to isomorphic configurations; h_4 is stored",)),
        E("e7C", "e_7(C)", "E7", 7, {2: 2}, "Complex", "C", 3, _E7_GAMMA,
          "Herm_3(O)_C", 54, "Trivial", "e_{7(-25)}", "e7C"),
    ]

    # Cayley type
    for r in (1, 2, 3):
        out.append(E(f"su{r}{r}", f"su({r},{r})", _c_type(r), r, _c_mult(2, 1, r), "Cayley", "A", r,
                     _c_gamma(r), f"Herm_{r}(C)", r * r, "Z", f"R⊕sl_{r}(C)", "surr",
                     notes=("su(1,1) is isomorphic to sl(2,R)",) if r == 1 else ()))
    out.append(E("sl2R", "sl(2,R)", "A1", 1, {2: 1}, "Cayley", "A", 1, _c_gamma(1),
                 "Herm_1(C) ≅ R", 1, "Z", "R", "surr", ("sl", 2),
                 notes=("isomorphic to su(1,1), the r = 1 Cayley row",)))
    for r in (1, 2, 3):
        out.append(E(f"sp{2 * r}R", f"sp({2 * r},R)", _c_type(r), r, _c_mult(1, 1, r), "Cayley", "A",
                     r, _c_gamma(r), f"Sym_{r}(R)", r * (r + 1) // 2, "Z", f"R⊕sl_{r}(R)",
                     "sp2rR" if r > 1 else "surr", ("sp", r)))
    for d in (3, 4, 5, 6):
        out.append(E(f"so2{d}", f"so(2,{d})", "C2", 2, {2: d - 2, 4: 1}, "Cayley", "A", 2,
                     _c_gamma(2), f"R^{{1,{d - 1}}}", d, "Z", f"R⊕so_{{1,{d - 1}}}(R)", "so2n1",
                     ("so", 2, d)))
    out.append(E("so12", "so(1,2)", "A1", 1, {2: 1}, "Cayley", "A", 1, _c_gamma(1), "R", 1, "Z",
                 "R", "surr", ("so", 1, 2), notes=("isomorphic to sl(2,R)",)))
    out.append(E("sostar8", "so*(8)", "C2", 2, {2: 4, 4: 1}, "Cayley", "A", 2, _c_gamma(2),
                 "Herm_2(H)", 6, "Z", "R⊕sl_2(H)", "sostar"))
    out.append(E("e7m25", "e_{7(-25)}", "C3", 3, {2: 8, 4: 1}, "Cayley", "A", 3, _c_gamma(3),
                 "Herm_3(O)", 27, "Z", "R⊕e_{6(-26)}", "e7m25"))

    # Split type
    for r in (2, 3):
        n = 2 * r
        out.append(E(f"sl{n}R", f"sl({n},R)", f"A{n - 1}", r, {2: 1}, "Split", "D", r,
                     tuple(_eps(n, (j, 1), (r + j, -1)) for j in range(1, r + 1)),
                     f"M_{r}(R)", r * r, "Z2", f"so_{{{r},{r}}}(R)", "sl2rR", ("sl", n)))
    out.append(E("so44", "so(4,4)", "D4", 4, {2: 1}, "Split", "D", 2,
                 (_eps(4, (1, 1), (2, 1)), _eps(4, (3, 1), (4, 1))), "Skew_4(R)", 6, "Z2",
                 "so_4(C)", "so2r2r", ("so", 4, 4, "hn"),
                 notes=("h_3 and h_4 lead to isomorphic configurations; h_4 is stored",)))
    out.append(E("so33_h3", "so(3,3)", "D3", 3, {2: 1}, "Split", None, 1,
                 (_eps(3, (1, 1), (2, 1)),), "Skew_3(R)", 3, "Z2", "", None, ("so", 3, 3, "hn"),
                 notes=("h_3 is not symmetric; no orthogonal pairs",)))
    for p, q in ((2, 2), (2, 3), (3, 3)):
        P, Qn = p + 1, q + 1
        rs = f"D{P}" if p == q else f"B{P}"
        mult = {2: 1} if p == q else {2: 1, 1: q - p}
        out.append(E(f"soP1Q1_p{p}_q{q}", f"so({P},{Qn})", rs, 1, mult, "Split", "D", 2,
                     (_eps(P, (1, 1), (2, 1)), _eps(P, (1, 1), (2, -1))), f"R^{{{p},{q}}}",
                     p + q, "Z2", f"so_{{1,{p}}}(R)⊕so_{{1,{q}}}(R)", "sopq", ("so", P, Qn)))
    out.append(E("e7R", "e_7(R)", "E7", 7, {2: 1}, "Split", "D", 3, _E7_GAMMA,
                 "Herm_3(O_split)", 27, "Z2", "sl_4(H)", "e7R",
                 notes=("Z(universal cover) ≅ Z4; Z1 = Z2",)))
    out.append(E("e6R", "e_6(R)", "E6", 1, {2: 1}, "Split", None, 2, _E6_GAMMA,
                 "", 16, "Z2", "", None,
                 notes=("h_1 is not symmetric; Inn(g)^h is not connected",)))

    # Non-split type
    for r in (1, 2):
        n = 2 * r
        out.append(E(f"sl{n}H", f"sl({n},H)", f"A{n - 1}", r, {2: 4}, "NonSplit", "C", r,
                     tuple(_eps(n, (j, 1), (r + j, -1)) for j in range(1, r + 1)),
                     f"M_{r}(H)", 4 * r * r, "Trivial", f"u_{{{r},{r}}}(H)", "sl2rH"))
        out.append(E(f"u{r}{r}H", f"u({r},{r},H)", _c_type(r), r, _c_mult(4, 3, r), "NonSplit", "C",
                     r, _c_gamma(r), f"Aherm_{r}(H)", 2 * r * r + r, "Trivial", f"sp_{2 * r}(C)",
                     "urrH"))
    for D in (3, 4, 5, 6):
        out.append(E(f"so1{D}", f"so(1,{D})", "A1", 1, {2: D - 1}, "NonSplit", "C", 1,
                     _c_gamma(1), f"R^{{0,{D - 1}}}", D - 1, "Trivial", f"so_{{1,{D - 1}}}(R)",
                     "so1d", ("so", 1, D)))
    return out


_H = Q(1, 2)
_E7_GAMMA = (
    _eps(8, (7, -1), (8, 1)),
    _eps(8, (5, 1), (6, 1)),
    _eps(8, (5, -1), (6, 1)),
)
_E6_GAMMA = (
    tuple(Q(x) for x in (_H, _H, _H, _H, _H, -_H, -_H, _H)),
    tuple(Q(x) for x in (-_H, -_H, -_H, -_H, _H, -_H, -_H, _H)),
)


def strongly_orthogonal(rs: RootSystem, a: Vec, b: Vec) -> bool:
    return add(a, b) not in rs.roots and sub(a, b) not in rs.roots


def sigma_one(entry: RealFormEntry) -> list[Vec]:
    """Roots taking the value 1 on the Euler element."""
    h = entry.h
    return [a for a in entry.root_system.positive_roots if dot(a, h) == 1]


def strongly_orthogonal_roots(entry: RealFormEntry) -> list[Vec]:
    """The stored strongly orthogonal roots, re-validated against the root system."""
    _validate(entry)
    return list(entry.gamma)


def _validate(e: RealFormEntry) -> None:
    rs = e.root_system
    h = e.h
    bad = lambda msg: CatalogError(f"{e.slug}: {msg}")
    if e.type_tag not in TYPE_TAGS:
        raise bad(f"unknown type tag {e.type_tag}")
    if not 1 <= e.euler_label <= rs.rank:
        raise bad("Euler label out of range")
    if not all(dot(a, h) in (-1, 0, 1) for a in rs.positive_roots):
        raise bad("h is not an Euler element")
    if len(e.gamma) != e.rank_r:
        raise bad("|gamma| differs from rank_r")
    for i, g in enumerate(e.gamma):
        g = vec(g)
        if g not in rs.roots:
            raise bad(f"gamma_{i + 1} is not a root")
        if dot(g, h) != 1:
            raise bad(f"gamma_{i + 1}(h) != 1")
        for g2 in e.gamma[:i]:
            if not strongly_orthogonal(rs, g, vec(g2)):
                raise bad("gamma not strongly orthogonal")
    if e.sigma_star_type is not None and e.sigma_star_type != STAR_BY_TYPE[e.type_tag]:
        raise bad("Sigma(g*,c) inconsistent with type tag")
    if e.pi1_expected != PI1_BY_TYPE[e.type_tag]:
        raise bad("pi1_expected inconsistent with type tag")
    if e.multiplicity is not None:
        lengths = {int(dot(a, a)) for a in rs.roots}
        if set(e.multiplicity) != lengths:
            raise bad("multiplicity map does not cover every root length")
        dim = sum(e.mult(a) for a in sigma_one(e))
        if dim != e.g1_dimension:
            raise bad(f"g_1 dimension {e.g1_dimension} != sum of multiplicities {dim}")


@lru_cache(maxsize=None)
def _load() -> tuple[RealFormEntry, ...]:
    entries = _entries()
    slugs = [e.slug for e in entries]
    if len(set(slugs)) != len(slugs):
        raise CatalogError("duplicate slug")
    for e in entries:
        _validate(e)
    return tuple(entries)


def load_catalog() -> list[RealFormEntry]:
    return list(_load())


def get_entry(slug: str) -> RealFormEntry:
    for e in _load():
        if e.slug == slug:
            return e
    known = ", ".join(e.slug for e in _load())
    raise KeyError(f"unknown entry {slug!r}; known entries: {known}")


def table2_rows(present_only: bool = True) -> list[dict]:
    used = {e.table2_row for e in _load()}
    rows = []
    for key, typ, *cols, cond in TABLE2:
        if present_only and key not in used:
            continue
        rows.append({"key": key, "type": typ, "condition": cond,
                     "columns": dict(zip(TABLE2_COLUMNS, cols)),
                     "entries": [e.slug for e in _load() if e.table2_row == key]})
    return rows


def table1_rows() -> list[dict]:
    return [dict(zip(TABLE1_COLUMNS, r)) for r in TABLE1]


def export_json() -> str:
    return json.dumps([e.to_json() for e in _load()], indent=2, ensure_ascii=False)

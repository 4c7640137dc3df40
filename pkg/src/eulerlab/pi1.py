"""Fundamental group of the adjoint orbit of an Euler element.

Two independent routes: the type of ``(g, h)`` (Complex and NonSplit give the
trivial group, Cayley gives Z, Split gives Z2), and Wiggerman's presentation
of pi_1(G/P_j) for the maximal parabolic attached to ``h = h_j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import RealFormEntry
from .linalg import dot
from .rootsys import RootSystem, cartan_integer

KINDS = ("Trivial", "Z", "Z2")

_NOTES = {
    "Trivial": "no non-contractible loops",
    "Z": "class of t -> exp(4 pi t z_1), infinite order",
    "Z2": "class of t -> exp(4 pi t z_1), order 2",
}


class MissingMultiplicity(ValueError):
    pass


@dataclass(frozen=True)
class FundamentalGroup:
    kind: str
    generator_note: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")


def _fg(kind: str) -> FundamentalGroup:
    return FundamentalGroup(kind, _NOTES[kind])


@dataclass(frozen=True)
class ProductGroup:
    """``Z^a x Z2^b`` with one label per factor."""
    free_rank: int
    two_torsion_rank: int
    factor_labels: tuple[str, ...] = field(default=())

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and self.two_torsion_rank == 0

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + ["Z2"] * self.two_torsion_rank
        return " x ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"a": self.free_rank, "b": self.two_torsion_rank,
                "factors": list(self.factor_labels), "group": str(self)}


def pi1_structure(entry: RealFormEntry) -> FundamentalGroup:
    kind = {"Complex": "Trivial", "NonSplit": "Trivial", "Cayley": "Z", "Split": "Z2"}[entry.type_tag]
    return _fg(kind)


def pi1_wiggerman(rs: RootSystem, mult, j: int) -> FundamentalGroup:
    """Wiggerman's criterion for the parabolic of the simple root ``alpha_j``.

    ``mult`` maps a simple root to its multiplicity; it may be a dict keyed by
    1-based simple-root index or a callable on roots.
    """
    simple = rs.simple_roots
    if not 1 <= j <= len(simple):
        raise ValueError("simple-root index out of range")

    def m(i: int) -> int:
        a = simple[i - 1]
        val = mult(a) if callable(mult) else (mult or {}).get(i)
        if val is None:
            raise MissingMultiplicity(f"no multiplicity for simple root alpha_{i}")
        return val

    ms = {i: m(i) for i in range(1, len(simple) + 1)}
    if ms[j] > 1:
        return _fg("Trivial")
    aj = simple[j - 1]
    for i in range(1, len(simple) + 1):
        if i != j and ms[i] == 1 and cartan_integer(rs, simple[i - 1], aj) % 2:
            return _fg("Z2")
    return _fg("Z")


def pi1_wiggerman_entry(entry: RealFormEntry) -> FundamentalGroup:
    if entry.multiplicity is None:
        raise MissingMultiplicity(f"{entry.slug}: multiplicities unknown")
    rs = entry.root_system
    h = entry.h
    j = [i for i, a in enumerate(rs.simple_roots, 1) if dot(a, h) == 1]
    assert j == [entry.euler_label]
    return pi1_wiggerman(rs, entry.mult, entry.euler_label)


def cross_check_pi1(entry: RealFormEntry) -> bool:
    return pi1_structure(entry).kind == pi1_wiggerman_entry(entry).kind


def _as_product(fg: FundamentalGroup, label: str) -> ProductGroup:
    return {"Trivial": ProductGroup(0, 0),
            "Z": ProductGroup(1, 0, (label,)),
            "Z2": ProductGroup(0, 1, (label,))}[fg.kind]


def pi1_semisimple_product(components) -> ProductGroup:
    """Product over the simple ideals on which the Euler element is non-zero.

    ``components`` is a sequence of ``(entry, h_nonzero)`` pairs.
    """
    comps = list(components)
    if not any(nz for _, nz in comps):
        raise ValueError("Euler element vanishes on every simple ideal")
    a = b = 0
    free, tors = [], []
    for entry, nz in comps:
        if not nz:
            continue
        p = _as_product(pi1_structure(entry), entry.name)
        a += p.free_rank
        b += p.two_torsion_rank
        (free if p.free_rank else tors).extend(p.factor_labels)
    return ProductGroup(a, b, tuple(free + tors))


@dataclass(frozen=True)
class AlgebraSpec:
    """A Lie algebra given by its Levi quotient and a symbolic radical."""
    name: str
    components: tuple  # (RealFormEntry, h_nonzero)
    radical: str = "0"
    radical_dim: int = 0


def pi1_with_radical(spec: AlgebraSpec) -> ProductGroup:
    """The orbit retracts onto the orbit in the Levi quotient; the radical is discarded."""
    return pi1_semisimple_product(spec.components)


def poincare_spec(d: int, radical: str = "R^{1,d}") -> AlgebraSpec:
    from .catalog import get_entry
    return AlgebraSpec(f"R^{{1,{d}}} ⋊ so(1,{d})", ((get_entry(f"so1{d}"), True),), radical, d + 1)


def conformal_spec(d: int, radical: str = "0") -> AlgebraSpec:
    from .catalog import get_entry
    return AlgebraSpec(f"so(2,{d})", ((get_entry(f"so2{d}"), True),), radical, 0)


def report(entry: RealFormEntry, method: str = "both") -> dict:
    out: dict = {"entry": entry.slug}
    if method in ("structure", "both"):
        s = pi1_structure(entry)
        out.update(kind=s.kind, generator_note=s.generator_note)
    if method in ("wiggerman", "both"):
        try:
            w = pi1_wiggerman_entry(entry)
            out["wiggerman"] = w.kind
            out.setdefault("kind", w.kind)
            out.setdefault("generator_note", w.generator_note)
        except MissingMultiplicity as exc:
            out["wiggerman"] = None
            out["refusal"] = str(exc)
    if method == "both":
        out["agreement"] = out.get("wiggerman") == out["kind"]
    return out

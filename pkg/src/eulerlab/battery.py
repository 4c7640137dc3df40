"""Exact check battery for the matrix realizations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from itertools import product
from random import Random

from .catalog import load_catalog
from .linalg import Mat, bracket, fmt, identity, is_zero, madd, mat, matmul, mscale, msub, transpose
from .matrixlie import (
    E, EulerPair, NotInvertible, build_algebra, euler_matrix, exp_ad_on_plane, grade,
    is_euler_matrix, is_orthogonal_pair, jordan_build, jordan_invertible, pair_roundtrip,
    random_invertible, realize_params, sl2_triple_from_nilpotent, so22_report, tau_apply,
)


@dataclass
class Report:
    subject: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    matrices: dict[str, Mat] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, ok: bool) -> bool:
        self.checks.append((name, bool(ok)))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> list[str]:
        return [n for n, ok in self.checks if not ok]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok} for n, ok in self.checks],
            "matrices": {k: [[fmt(v) for v in r] for r in m] for k, m in self.matrices.items()},
            "notes": list(self.notes),
        }


def dimension_formula(family: str, params: tuple) -> int:
    if family == "sl":
        n = params[0]
        return n * n - 1
    if family == "so":
        n = sum(params)
        return n * (n - 1) // 2
    m = params[0]
    return m * (2 * m + 1)


def euler_labels(family: str, params: tuple) -> list:
    """Euler elements exercised by the battery, paired with the realization they match."""
    if family == "sl":
        n = params[0]
        return [(p, ("sl", n) if 2 * p == n else None) for p in range(1, n)]
    if family == "sp":
        return [("h", ("sp", params[0]))]
    p, q = params
    out = []
    if p >= 2 and q >= 2:
        out.append(((1, p + 2), ("so", p, q) if p <= q else None))
    else:
        out.append(((1, p + 1), ("so", p, q) if p == 1 else None))
    if p == q >= 2:
        out.append(("hn", ("so", p, q, "hn")))
    return out


def g1_dimension_formula(family: str, params: tuple, label) -> int:
    if family == "sl":
        return label * (params[0] - label)
    if family == "sp":
        m = params[0]
        return m * (m + 1) // 2
    p, q = params
    if label == "hn":
        return p * (p - 1) // 2
    return p + q - 2


def _catalog_g1(realization: tuple | None) -> list[tuple[str, int]]:
    if realization is None:
        return []
    return [(e.slug, e.g1_dimension) for e in load_catalog() if e.realization == realization]


def _tau_checks(rep: Report, dec, tag: str) -> None:
    alg = dec.algebra
    basis = alg.basis
    tb = [tau_apply(dec, b) for b in basis]
    rep.check(f"{tag}: tau_h is an involution", all(tau_apply(dec, t) == b for t, b in zip(tb, basis)))
    rep.check(f"{tag}: tau_h fixes h", tau_apply(dec, dec.h) == dec.h)
    auto = all(tau_apply(dec, bracket(basis[i], basis[j])) == bracket(tb[i], tb[j])
               for i in range(len(basis)) for j in range(i + 1, len(basis)))
    rep.check(f"{tag}: tau_h is an automorphism", auto)
    fixed = sum(1 for b, t in zip(basis, tb) if t == b)
    rep.check(f"{tag}: tau_h fixes exactly g_0", all(tau_apply(dec, x) == x for x in dec.zero)
              and all(tau_apply(dec, x) == mscale(-1, x) for x in dec.plus + dec.minus))
    del fixed


def _grading_checks(rep: Report, dec, tag: str) -> None:
    alg = dec.algebra
    d1, d0, dm = len(dec.plus), len(dec.zero), len(dec.minus)
    rep.check(f"{tag}: dim g_1 = dim g_-1", d1 == dm)
    rep.check(f"{tag}: g_-1 + g_0 + g_1 = g", d1 + d0 + dm == alg.dim)
    ok = True
    parts = {-1: dec.minus, 0: dec.zero, 1: dec.plus}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            if j < i:
                continue
            for u in parts[i]:
                for v in parts[j]:
                    w = bracket(u, v)
                    if abs(i + j) == 2:
                        ok &= is_zero(w)
                    else:
                        ok &= dec.in_part(i + j, w)
    rep.check(f"{tag}: [g_i, g_j] in g_(i+j)", ok)
    rep.check(f"{tag}: (ad x)^3 = 0 on g_1", all(
        is_zero(bracket(x, bracket(x, bracket(x, b)))) for x in dec.plus for b in alg.basis))


def _pair_checks(rep: Report, dec, k: Mat, tag: str) -> None:
    alg = dec.algebra
    pair = EulerPair(dec.h, k)
    rep.check(f"{tag}: k is Euler", is_euler_matrix(alg, k))
    rep.check(f"{tag}: (h,k) orthogonal", is_orthogonal_pair(dec, k))
    rep.check(f"{tag}: (k,h) orthogonal", is_orthogonal_pair(grade(alg, k), dec.h))
    rep.check(f"{tag}: [h,k]=z, [z,k]=h, [h,z]=k", pair.sl2_relations())


def _jordan_checks(rep: Report, dec, e: Mat, tag: str) -> None:
    jd = jordan_build(dec, e)
    basis = dec.plus
    rep.check(f"{tag}: Jordan product is commutative",
              all(jd.product(x, y) == jd.product(y, x) for x in basis for y in basis))
    rep.check(f"{tag}: e is the Jordan unit", all(jd.product(e, x) == x for x in basis))


def algebra_battery(family: str, *params: int, seed: int = 0, samples: int = 2) -> Report:
    """Run every exact check on one algebra."""
    alg = build_algebra(family, *params)  # raises on a closure failure
    rep = Report(alg.name)
    rep.check("bracket closure", alg.check_closure())
    rep.check("dimension", alg.dim == dimension_formula(family, params))
    rng = Random(seed)
    for label, rparams in euler_labels(family, params):
        tag = f"h={label}"
        h = euler_matrix(alg, label)
        rep.matrices[tag] = h
        if not rep.check(f"{tag}: minimal polynomial of ad h divides t^3 - t", is_euler_matrix(alg, h)):
            continue
        dec = grade(alg, h)
        _grading_checks(rep, dec, tag)
        _tau_checks(rep, dec, tag)
        rep.check(f"{tag}: dim g_1 formula", len(dec.plus) == g1_dimension_formula(family, params, label))
        for slug, dim in _catalog_g1(rparams):
            rep.check(f"{tag}: dim g_1 = catalog value for {slug}", len(dec.plus) == dim)
        xs: list[tuple[str, Mat]] = []
        if rparams is not None:
            R = realize_params(rparams)
            rep.check(f"{tag}: Jordan frame", R.verify_frame())
            r = len(R.frame)
            for sigma in product((1, -1), repeat=r):
                x = R.x_of(sigma)
                if r and jordan_invertible(dec, x):
                    xs.append(("x=" + "".join("+" if s > 0 else "-" for s in sigma), x))
        if not xs:
            try:
                xs = [(f"random#{i}", random_invertible(dec, rng, tries=30)) for i in range(samples)]
            except RuntimeError:
                rep.notes.append(f"{tag}: no invertible element in g_1 found; no orthogonal partner")
                continue
        else:
            xs += [(f"random#{i}", random_invertible(dec, rng, tries=200)) for i in range(samples)]
        for name, x in xs:
            ((_, _, neg_y), k) = sl2_triple_from_nilpotent(dec, x)
            rep.matrices[f"{tag}: k[{name}]"] = k
            _pair_checks(rep, dec, k, f"{tag} {name}")
            rep.check(f"{tag} {name}: 2 k_1 = x", pair_roundtrip(dec, x))
        _jordan_checks(rep, dec, xs[0][1], tag)
    if family == "sl" and params == (2,):
        sl2_identities(rep)
    if family == "so" and params == (2, 2):
        so22 = so22_report()
        for name, ok in so22["checks"].items():
            rep.check(f"so(2,2) identity: {name}", ok)
    return rep


def sl2_identities(rep: Report) -> None:
    """The standard orthogonal pair (h0, k0) of sl(2,R) and its rotations."""
    alg = build_algebra("sl", 2)
    h0 = mat([[Q(1, 2), 0], [0, Q(-1, 2)]])
    k0 = mat([[0, Q(1, 2)], [Q(1, 2), 0]])
    z0 = bracket(h0, k0)
    rep.matrices.update({"h0": h0, "k0": k0, "z0": z0})
    dec = grade(alg, h0)
    rep.check("sl2: h0 = euler_matrix(sl2, 1)", euler_matrix(alg, 1) == h0)
    rep.check("sl2: z0 = (1/2)(0 1; -1 0)", z0 == mat([[0, Q(1, 2)], [Q(-1, 2), 0]]))
    rep.check("sl2: (h0, k0) orthogonal", is_orthogonal_pair(dec, k0))
    rep.check("sl2: (h0, h0) not orthogonal", not is_orthogonal_pair(dec, h0))
    b = Q(2)
    rep.check("sl2: (h0, (1/2)(0 b; 1/b 0)) orthogonal for b = 2",
              is_orthogonal_pair(dec, mat([[0, b / 2], [1 / (2 * b), 0]])))
    a, bb, c = Q(3), Q(5), Q(7)
    x = mat([[a, bb], [c, -a]])
    rep.check("sl2: tau_h0 flips the off-diagonal signs", tau_apply(dec, x) == mat([[a, -bb], [-c, -a]]))
    rep.check("sl2: tau_h0(k0) = -k0", tau_apply(dec, k0) == mscale(-1, k0))
    negz = mscale(-1, z0)
    rep.check("sl2: exp(-pi ad z0) h0 = -h0", exp_ad_on_plane(negz, 1, h0) == mscale(-1, h0))
    rep.check("sl2: exp(-pi/2 ad z0) h0 = k0", exp_ad_on_plane(negz, Q(1, 2), h0) == k0)
    rep.check("sl2: exp(0 ad z0) h0 = h0", exp_ad_on_plane(negz, 0, h0) == h0)
    (x_, two_h, neg_y), k = sl2_triple_from_nilpotent(dec, E(2, 1, 2))
    rep.check("sl2: y = (0 0; 1 0) for x = (0 1; 0 0)", mscale(-1, neg_y) == E(2, 2, 1))
    rep.check("sl2: triple from x = (0 1; 0 0) gives k0", k == k0)
    jd = jordan_build(dec, E(2, 1, 2))
    rep.check("sl2: Jordan algebra is one-dimensional", len(dec.plus) == 1 and jd.product(jd.e, jd.e) == jd.e)
    try:
        sl2_triple_from_nilpotent(dec, mscale(0, E(2, 1, 2)))
        rep.check("sl2: x = 0 is not invertible", False)
    except NotInvertible:
        rep.check("sl2: x = 0 is not invertible", True)


def default_suite() -> list[tuple]:
    out: list[tuple] = [("sl", n) for n in range(2, 7)]
    out += [("so", p, q) for total in range(3, 9) for p in range(1, total) for q in [total - p] if p <= q]
    out += [("sp", m) for m in range(1, 4)]
    return out


def run_suite(suite=None, seed: int = 0) -> list[Report]:
    return [algebra_battery(spec[0], *spec[1:], seed=seed) for spec in (suite or default_suite())]

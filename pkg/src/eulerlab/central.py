"""Central elements of orthogonal pairs as winding classes.

For a realized entry the maximal compact subgroup K is a product of
rotation and unitary groups.  A one-parameter path ``t -> exp(t z)``,
``z`` in the compact part, that ends in the center of K lifts to a unique
element of the universal cover of K lying over that central element.  These
lifted classes form an abelian group containing pi_1(K); the central
elements zeta_{h,k} = exp(2 pi z_{h,k}) and the subgroups Z2, Z3 are computed
inside it.

Factor encodings (one per compact factor, p-part first):

* ``circle`` (SO(2)): a rational winding number; loops are integers.
* ``spin`` (SO(m), m >= 3): a pair (eps, s) standing for (-1)^s w^eps in the
  center of Spin(m), w the volume element; eps = 1 means the path ends at -I.
  Loops have eps = 0, and s is the class in pi_1(SO(m)) = Z2.
* ``unitary`` (U(n)): (w, phase) with w the trace winding and the endpoint
  the scalar exp(2 pi i phase); loops have phase 0 and w in Z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import gcd, lcm

from .catalog import RealFormEntry
from .linalg import Mat, dot, fmt, identity, matmul, matvec, mscale, msub, nullspace, rank, scale, sub, transpose
from .matrixlie import MatrixAlgebra, Realization, realize, realize_params
from .pairs import class_indices, pair_classes, representative
from .pi1 import ProductGroup


class NonClosedLoop(ValueError):
    pass


class NotCompact(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    label: str
    kind: str  # circle | spin | unitary
    coords: tuple[int, ...]  # 0-based

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def omega_square_negative(self) -> bool:
        m = self.m
        return (m * (m - 1) // 2) % 2 == 1


@dataclass(frozen=True)
class CompactModel:
    family: str
    n: int
    factors: tuple[Factor, ...]

    def pi1(self) -> ProductGroup:
        free = [f.label for f in self.factors if f.kind in ("circle", "unitary")]
        tors = [f.label for f in self.factors if f.kind == "spin"]
        return ProductGroup(len(free), len(tors), tuple(free + tors))

    def identity(self) -> "LoopClass":
        vals = []
        for f in self.factors:
            vals.append(Q(0) if f.kind == "circle" else (0, 0) if f.kind == "spin" else (Q(0), Q(0)))
        return LoopClass(self, tuple(vals))

    def pi1_generators(self) -> list["LoopClass"]:
        gens = []
        for i, f in enumerate(self.factors):
            v = list(self.identity().values)
            v[i] = Q(1) if f.kind == "circle" else (0, 1) if f.kind == "spin" else (Q(1), Q(0))
            gens.append(LoopClass(self, tuple(v)))
        return gens

    def loop(self, *parts) -> "LoopClass":
        """Build a closed class from integers, one per factor (mod 2 for spin factors)."""
        vals = []
        for f, p in zip(self.factors, parts):
            vals.append(Q(p) if f.kind == "circle" else (0, int(p) % 2) if f.kind == "spin"
                        else (Q(p), Q(0)))
        return LoopClass(self, tuple(vals))


def compact_model(alg: MatrixAlgebra) -> CompactModel:
    n = alg.n_total
    if alg.family == "sl":
        blocks = [("SO(%d)" % n, tuple(range(n)))]
    elif alg.family == "so":
        p, q = alg.params
        blocks = [(f"SO({p})", tuple(range(p))), (f"SO({q})", tuple(range(p, n)))]
    else:
        m = alg.params[0]
        return CompactModel("sp", n, (Factor(f"U({m})", "unitary", tuple(range(n))),))
    factors = []
    for label, idx in blocks:
        if len(idx) == 2:
            factors.append(Factor(label, "circle", idx))
        elif len(idx) >= 3:
            factors.append(Factor(label, "spin", idx))
    return CompactModel(alg.family, n, tuple(factors))


@dataclass(frozen=True)
class LoopClass:
    model: CompactModel
    values: tuple

    def _norm(self):
        out = []
        for f, v in zip(self.model.factors, self.values):
            if f.kind == "circle":
                out.append(Q(v))
            elif f.kind == "spin":
                out.append((v[0] % 2, v[1] % 2))
            else:
                out.append((Q(v[0]), Q(v[1]) % 1))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, LoopClass) and self._norm() == other._norm()

    def __hash__(self):
        return hash(self._norm())

    def __add__(self, other: "LoopClass") -> "LoopClass":
        out = []
        for f, a, b in zip(self.model.factors, self.values, other.values):
            if f.kind == "circle":
                out.append(a + b)
            elif f.kind == "spin":
                c = int(f.omega_square_negative)
                out.append(((a[0] + b[0]) % 2, (a[1] + b[1] + c * a[0] * b[0]) % 2))
            else:
                out.append((a[0] + b[0], (a[1] + b[1]) % 1))
        return LoopClass(self.model, tuple(out))

    def __neg__(self) -> "LoopClass":
        out = []
        for f, a in zip(self.model.factors, self.values):
            if f.kind == "circle":
                out.append(-a)
            elif f.kind == "spin":
                c = int(f.omega_square_negative)
                out.append((a[0] % 2, (a[1] + c * a[0]) % 2))
            else:
                out.append((-a[0], (-a[1]) % 1))
        return LoopClass(self.model, tuple(out))

    def __sub__(self, other: "LoopClass") -> "LoopClass":
        return self + (-other)

    def times(self, k: int) -> "LoopClass":
        out = self.model.identity()
        step = self if k >= 0 else -self
        for _ in range(abs(k)):
            out = out + step
        return out

    @property
    def is_loop(self) -> bool:
        for f, v in zip(self.model.factors, self._norm()):
            if f.kind == "circle" and v.denominator != 1:
                return False
            if f.kind == "spin" and v[0]:
                return False
            if f.kind == "unitary" and (v[1] != 0 or v[0].denominator != 1):
                return False
        return True

    @property
    def is_identity(self) -> bool:
        return self == self.model.identity()

    def __str__(self) -> str:
        parts = []
        for f, v in zip(self.model.factors, self._norm()):
            if f.kind == "circle":
                parts.append(fmt(v))
            elif f.kind == "spin":
                parts.append(f"{v[1]}̄" if not v[0] else ("-w" if v[1] else "w"))
            else:
                parts.append(fmt(v[0]) if v[1] == 0 else f"{fmt(v[0])}@{fmt(v[1])}")
        return "(" + ", ".join(parts) + ")"

    def to_json(self) -> dict:
        comps = []
        for f, v in zip(self.model.factors, self._norm()):
            if f.kind == "circle":
                comps.append({"factor": f.label, "winding": fmt(v)})
            elif f.kind == "spin":
                comps.append({"factor": f.label, "ends_at_minus_identity": bool(v[0]), "sign": v[1]})
            else:
                comps.append({"factor": f.label, "trace_winding": fmt(v[0]), "phase": fmt(v[1])})
        return {"class": str(self), "closed": self.is_loop, "components": comps}


# --- exact spectral data of skew matrices -----------------------------------

def _sub(z: Mat, idx) -> Mat:
    return tuple(tuple(z[i][j] for j in idx) for i in idx)


def _min_poly(a: Mat) -> list[Q]:
    n = len(a)
    powers = [identity(n)]
    while True:
        flat = [[v for r in p for v in r] for p in powers]
        ns = nullspace(transpose(tuple(map(tuple, flat))), len(powers))
        if ns:
            v = ns[0]
            return [c / v[-1] for c in v]
        powers.append(matmul(powers[-1], a))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


def _rational_roots(coeffs: list[Q]) -> list[Q]:
    """All roots of a polynomial that splits over Q (constant term first)."""
    den = lcm(*[c.denominator for c in coeffs])
    ints = [int(c * den) for c in coeffs]
    roots = []
    while len(ints) > 1 and ints[0] == 0:
        roots.append(Q(0))
        ints = ints[1:]
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Q(p, q), Q(-p, q)):
                    if cand not in roots and sum(c * cand ** i for i, c in enumerate(ints)) == 0:
                        roots.append(cand)
    if len(roots) != len(coeffs) - 1:
        raise NonClosedLoop("rotation speeds are not rational")
    return roots


def _sqrt(x: Q) -> Q:
    from .matrixlie import _rational_sqrt
    try:
        return _rational_sqrt(x)
    except ValueError:
        raise NonClosedLoop("rotation speed is not rational") from None


def rotation_planes(z: Mat) -> list[tuple[Q, tuple, tuple]]:
    """Decompose a rational skew matrix into invariant planes.

    Returns ``(theta, u, v)`` with ``z u = theta v``, ``z v = -theta u``,
    ``|u| = |v|``, the planes pairwise orthogonal.
    """
    n = len(z)
    z2 = matmul(z, z)
    speeds = sorted(_sqrt(-r) for r in _rational_roots(_min_poly(z2)) if r != 0)
    planes = []
    for th in speeds:
        space = nullspace(tuple(tuple(a + (th * th if i == j else 0) for j, a in enumerate(row))
                                for i, row in enumerate(z2)), n)
        chosen: list[tuple] = []
        for w in space:
            for p in chosen:
                w = sub(w, scale(dot(w, p) / dot(p, p), p))
            if all(x == 0 for x in w):
                continue
            u = w
            v = scale(1 / th, matvec(z, u))
            planes.append((th, u, v))
            chosen += [u, v]
    return planes


def _det_sign(cols: list[tuple]) -> int:
    from .linalg import rref
    m = [list(r) for r in transpose(tuple(cols))]
    n = len(m)
    sign = 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        if m[c][c] < 0:
            sign = -sign
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign


def _check_compact(model: CompactModel, z: Mat) -> None:
    if transpose(z) != mscale(-1, z):
        raise NotCompact("z is not skew-symmetric")
    inside = {(i, j) for f in model.factors for i in f.coords for j in f.coords}
    for i in range(model.n):
        for j in range(model.n):
            if z[i][j] and (i, j) not in inside:
                raise NotCompact("z does not respect the block structure of K")
    for f in model.factors:
        if f.kind == "unitary":
            m = model.n // 2
            J = tuple(tuple(Q(1) if j == i + m else Q(-1) if i == j + m else Q(0) for j in range(model.n))
                      for i in range(model.n))
            if matmul(z, J) != matmul(J, z):
                raise NotCompact("z does not commute with the complex structure")


def winding_class(model: CompactModel | MatrixAlgebra, z: Mat, turns=1) -> LoopClass:
    """Lifted class of ``t -> exp(t z)``, ``0 <= t <= 2 pi * turns``."""
    if isinstance(model, MatrixAlgebra):
        model = compact_model(model)
    z = tuple(tuple(Q(x) for x in r) for r in z)
    t = Q(turns)
    _check_compact(model, z)
    vals = []
    for f in model.factors:
        zz = _sub(z, f.coords)
        if f.kind == "circle":
            vals.append(zz[1][0] * t)
        elif f.kind == "spin":
            vals.append(_spin_value(f, zz, t))
        else:
            vals.append(_unitary_value(zz, t))
    # factors of size 1 contribute nothing but must not be rotated
    return LoopClass(model, tuple(vals))


def _spin_value(f: Factor, zz: Mat, t: Q) -> tuple[int, int]:
    planes = rotation_planes(zz)
    turns = [th * t for th, _, _ in planes]
    if all(x.denominator == 1 for x in turns):
        return (0, int(sum(turns)) % 2)
    halves = all((2 * x).denominator == 1 and x.denominator == 2 for x in turns)
    if halves and 2 * len(planes) == f.m:
        s = sum(int(x - Q(1, 2)) + 1 for x in turns)
        cols = [w for _, u, v in planes for w in (u, v)]
        if _det_sign(cols) < 0:
            s += 1
        return (1, s % 2)
    raise NonClosedLoop("the path does not end in the center of " + f.label)


def _unitary_value(zz: Mat, t: Q) -> tuple[Q, Q]:
    n = len(zz)
    m = n // 2
    J = tuple(tuple(Q(1) if j == i + m else Q(-1) if i == j + m else Q(0) for j in range(n))
              for i in range(n))
    lambdas: list[tuple[Q, int]] = []
    kernel = len(nullspace(zz, n))
    if kernel:
        lambdas.append((Q(0), kernel // 2))
    for th in sorted({th for th, _, _ in rotation_planes(zz)}):
        for sgn in (1, -1):
            d = len(nullspace(msub(zz, mscale(sgn * th, J)), n))
            if d:
                lambdas.append((sgn * th, d // 2))
    assert sum(c for _, c in lambdas) == m
    phases = {(lam * t) % 1 for lam, _ in lambdas}
    if len(phases) != 1:
        raise NonClosedLoop("the path does not end in the center of U(n)")
    w = sum(lam * c for lam, c in lambdas) * t
    return (w, phases.pop())


# --- finitely generated subgroups -------------------------------------------

def _encode(classes: list[LoopClass]) -> tuple[list[list[int]], list[int]]:
    """Integer vectors and moduli (0 = free) for a family of classes."""
    model = classes[0].model
    den = 1
    for c in classes:
        for f, v in zip(model.factors, c._norm()):
            if f.kind == "circle":
                den = lcm(den, v.denominator)
            elif f.kind == "unitary":
                den = lcm(den, v[0].denominator, v[1].denominator)
    moduli: list[int] = []
    for f in model.factors:
        if f.kind == "circle":
            moduli.append(0)
        elif f.kind == "spin":
            moduli += [4] if f.omega_square_negative else [2, 2]
        else:
            moduli += [0, den]
    vecs = []
    for c in classes:
        v: list[int] = []
        for f, x in zip(model.factors, c._norm()):
            if f.kind == "circle":
                v.append(int(x * den))
            elif f.kind == "spin":
                v += [(x[0] + 2 * x[1]) % 4] if f.omega_square_negative else [x[0], x[1]]
            else:
                v += [int(x[0] * den), int(x[1] * den)]
        vecs.append(v)
    return vecs, moduli


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form (echelon with positive pivots)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncol = len(a[0])
    out = []
    r = 0
    for c in range(ncol):
        piv = [i for i in range(r, len(a)) if a[i][c] != 0]
        if not piv:
            continue
        while True:
            piv = [i for i in range(r, len(a)) if a[i][c] != 0]
            i0 = min(piv, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return [row for row in a[:r]]


def _lattice(vecs: list[list[int]], moduli: list[int]) -> list[list[int]]:
    n = len(moduli)
    rel = [[m if i == j else 0 for j in range(n)] for i, m in enumerate(moduli) if m]
    return _hnf(vecs + rel)


def _reduce(basis: list[list[int]], v: list[int]) -> list[int]:
    v = list(v)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        q = v[c] // row[c]
        if v[c] - q * row[c] != 0:
            return v
        v = [x - q * y for x, y in zip(v, row)]
    return v


def _gram_det(basis: list[list[int]]) -> Q:
    if not basis:
        return Q(1)
    g = [[Q(sum(a * b for a, b in zip(r, s))) for s in basis] for r in basis]
    n = len(g)
    det = Q(1)
    for c in range(n):
        p = next(i for i in range(c, n) if g[i][c] != 0)
        if p != c:
            g[c], g[p] = g[p], g[c]
            det = -det
        det *= g[c][c]
        for i in range(c + 1, n):
            f = g[i][c] / g[c][c]
            g[i] = [a - f * b for a, b in zip(g[i], g[c])]
    return det


def subgroup_contains(gens: list[LoopClass], x: LoopClass) -> bool:
    vecs, mods = _encode(list(gens) + [x])
    basis = _lattice(vecs[:-1], mods)
    return not any(_reduce(basis, vecs[-1]))


def subgroup_index(small: list[LoopClass], big: list[LoopClass]) -> int | None:
    """``[<big> : <small>]`` assuming containment; ``None`` when infinite."""
    vecs, mods = _encode(list(small) + list(big) + [small[0].model.identity() if small else big[0].model.identity()])
    a = _lattice(vecs[:len(small)], mods)
    b = _lattice(vecs[len(small):len(small) + len(big)], mods)
    if len(a) != len(b):
        return None
    ratio = _gram_det(a) / _gram_det(b)
    from .matrixlie import _rational_sqrt
    idx = _rational_sqrt(ratio)
    assert idx.denominator == 1
    return int(idx)


def same_subgroup(a: list[LoopClass], b: list[LoopClass]) -> bool:
    return all(subgroup_contains(b, x) for x in a) and all(subgroup_contains(a, x) for x in b)


def element_order(x: LoopClass) -> int | None:
    """Order of ``x``; ``None`` for infinite order."""
    (v,), mods = _encode([x])
    n = 1
    for a, m in zip(v, mods):
        if m == 0:
            if a:
                return None
        else:
            n = lcm(n, m // gcd(a % m, m))
    return n


def cyclic_kind(gen: LoopClass) -> str:
    o = element_order(gen)
    return "Z" if o is None else "Trivial" if o == 1 else f"Z{o}"


# --- Z-groups -----------------------------------------------------------------

@dataclass(frozen=True)
class ZLattice:
    ambient: CompactModel
    Z2: tuple[LoopClass, ...]
    Z3: tuple[LoopClass, ...] | None = None
    Z1: tuple[LoopClass, ...] | None = None

    @property
    def z2_kind(self) -> str:
        return cyclic_kind(self.Z2[0]) if len(self.Z2) == 1 else "non-cyclic"

    @property
    def index_z3_z2(self) -> int | None:
        if self.Z3 is None:
            return None
        return subgroup_index(list(self.Z2), list(self.Z3))

    def to_json(self) -> dict:
        pi1 = self.ambient.pi1()
        out = {
            "pi1": {"a": pi1.free_rank, "b": pi1.two_torsion_rank, "factors": list(pi1.factor_labels)},
            "Z1": None if self.Z1 is None else [str(x) for x in self.Z1],
            "Z2_generators": [str(x) for x in self.Z2],
            "Z2_kind": self.z2_kind,
        }
        if self.Z3 is not None:
            out["Z3_generators"] = [str(x) for x in self.Z3]
            out["index_Z3_Z2"] = self.index_z3_z2
            out["Z3_in_pi1_K"] = all(x.is_loop for x in self.Z3)
            out["index_Z2_in_pi1_K"] = (subgroup_index(list(self.Z2), self.ambient.pi1_generators())
                                        if self.ambient.factors else 1)
        return out


def _realized(entry: RealFormEntry) -> Realization:
    return realize(entry)


def model_of(entry: RealFormEntry) -> CompactModel:
    return compact_model(_realized(entry).algebra)


def zeta(entry: RealFormEntry, j: int) -> LoopClass:
    """``zeta_{h,k^j}``: the class of ``t -> exp(t z_{h,k^j})`` on ``[0, 2 pi]``."""
    if j not in class_indices(entry):
        raise ValueError(f"{entry.slug}: no pair class k^{j}")
    return _zeta(entry.realization, entry.slug, entry.rank_r, j)


@lru_cache(maxsize=None)
def _zeta(params: tuple, slug: str, r: int, j: int) -> LoopClass:
    R = realize_params(params, slug)
    return winding_class(compact_model(R.algebra), R.z_of(representative(r, j)), 1)


def z1_class(entry: RealFormEntry) -> LoopClass:
    """Class of ``exp(4 pi z_1)``."""
    R = _realized(entry)
    return winding_class(compact_model(R.algebra), R.z_i(1), 2)


def z2_subgroup(entry: RealFormEntry) -> ZLattice:
    R = _realized(entry)
    return ZLattice(compact_model(R.algebra), (z1_class(entry),))


def z3_subgroup(entry: RealFormEntry) -> ZLattice:
    z2 = z2_subgroup(entry)
    if not complement_exists(entry):
        return ZLattice(z2.ambient, z2.Z2, z2.Z2)
    zetas = tuple(zeta(entry, c.j) for c in pair_classes(entry))
    return ZLattice(z2.ambient, z2.Z2, z2.Z2 + zetas)


def zeta_difference(entry: RealFormEntry, j: int, m: int) -> LoopClass:
    return zeta(entry, j) - zeta(entry, m)


def differences_generate_z2(entry: RealFormEntry) -> bool:
    idx = class_indices(entry)
    diffs = [zeta_difference(entry, j, m) for j in idx for m in idx if j != m]
    z2 = list(z2_subgroup(entry).Z2)
    if not diffs:
        return all(x.is_identity for x in z2)
    return same_subgroup(diffs, z2)


def complement_exists(entry: RealFormEntry) -> bool:
    """A twisted complement of the base wedge exists iff h is symmetric."""
    from .euler import is_symmetric
    return is_symmetric(entry.root_system, entry.h)


@dataclass(frozen=True)
class Coset:
    representative: LoopClass
    subgroup: tuple[LoopClass, ...]

    def __contains__(self, x: LoopClass) -> bool:
        return subgroup_contains(list(self.subgroup), x - self.representative)

    def __str__(self) -> str:
        return f"{self.representative}·<{', '.join(str(g) for g in self.subgroup)}>"


def complement_coset(entry: RealFormEntry) -> Coset | None:
    if not complement_exists(entry):
        return None
    first = pair_classes(entry)[0].j
    return Coset(zeta(entry, first), z2_subgroup(entry).Z2)


def untwisted_in_orbit(entry: RealFormEntry, quotient_generators: list[LoopClass]) -> bool:
    """``Z3 Gamma == Z2 Gamma`` in the quotient by ``Gamma``."""
    lat = z3_subgroup(entry)
    base = list(lat.Z2) + list(quotient_generators)
    return all(subgroup_contains(base, x) for x in lat.Z3)


def base_class(entry: RealFormEntry) -> int:
    from .pairs import is_symmetric_pair
    classes = pair_classes(entry)
    sym = [c.j for c in classes if is_symmetric_pair(entry, c)]
    return sym[0] if sym else classes[0].j


def twist_chain(entry: RealFormEntry, target: LoopClass) -> list[tuple[int, int]]:
    """Shortest list of difference steps (j, m) with sum of zeta_j - zeta_m = target - zeta_base."""
    lat = z3_subgroup(entry)
    if not subgroup_contains(list(lat.Z3), target):
        raise ValueError("target is not in Z3")
    base = zeta(entry, base_class(entry))
    delta = target - base
    z2 = list(lat.Z2)
    if not subgroup_contains(z2, delta):
        raise ValueError("target is not in the coset zeta*Z2")
    if delta.is_identity:
        return []
    idx = class_indices(entry)
    steps = sorted(((j, m) for j in idx for m in idx if j != m), key=lambda s: (abs(s[0] - s[1]), s[0] < s[1], s[1]))
    for j, m in steps:
        d = zeta_difference(entry, j, m)
        if not same_subgroup([d], z2):
            continue
        order = element_order(d)
        if order is None:
            (vd,), _ = _encode([d])
            vecs, _ = _encode([d, delta])
            c = next(i for i, x in enumerate(vecs[0]) if x)
            n = Q(vecs[1][c], vecs[0][c])
            assert n.denominator == 1 and d.times(int(n)) == delta
            n = int(n)
        else:
            n = next(k for k in range(order) if d.times(k) == delta)
            if order - n < n:
                n -= order
        return [(j, m)] * n if n > 0 else [(m, j)] * (-n)
    raise AssertionError("no difference generates Z2")


@dataclass(frozen=True)
class WedgePoint:
    """A point (side * h, twist * tau_h) of the wedge-space fiber over +-h."""
    side: int
    twist: LoopClass

    def dual(self) -> "WedgePoint":
        return WedgePoint(-self.side, self.twist)

    def act(self, flips: bool, delta: LoopClass) -> "WedgePoint":
        """Action of g in G^{+-h}: flips the sign if Ad(g)h = -h and multiplies the twist by delta_h(g)."""
        return WedgePoint(-self.side if flips else self.side, self.twist + delta)


def base_point(entry: RealFormEntry) -> WedgePoint:
    return WedgePoint(1, model_of(entry).identity())


def in_wedge_orbit(entry: RealFormEntry, w: WedgePoint) -> bool:
    z2 = list(z2_subgroup(entry).Z2)
    if w.side == 1:
        return subgroup_contains(z2, w.twist)
    coset = complement_coset(entry)
    return coset is not None and w.twist in coset


def report(entry: RealFormEntry) -> dict:
    lat = z3_subgroup(entry)
    out = lat.to_json()
    out["entry"] = entry.slug
    coset = complement_coset(entry)
    out["complement_exists"] = coset is not None
    out["complement_coset"] = None if coset is None else str(coset)
    if coset is not None:
        out["zeta"] = {f"k^{c.j}": str(zeta(entry, c.j)) for c in pair_classes(entry)}
    return out

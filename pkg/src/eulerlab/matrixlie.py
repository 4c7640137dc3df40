"""Rational matrix realizations of sl(n,R), so(p,q) and sp(2n,R).

Euler gradings, the involution tau_h, sl2-triples attached to invertible
elements of g_1, and the Jordan product x*y = [[x,f],y] on g_1.  Everything
is exact; eigenspaces are kernels of ad h - lambda.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from random import Random

from .linalg import (Mat, bracket, fmt, identity, inverse, is_zero, madd, mat, matmul, mscale,
                     msub, nullspace, rank, rref, solve, transpose, zeros)

FAMILIES = ("sl", "so", "sp")


class NotEuler(ValueError):
    pass


class NotInvertible(ValueError):
    pass


def E(n: int, i: int, j: int, c=1) -> Mat:
    """Matrix unit with entry ``c`` at (i, j), 1-based."""
    return tuple(tuple(Q(c) if (a, b) == (i - 1, j - 1) else Q(0) for b in range(n)) for a in range(n))


def msum(ms, n: int) -> Mat:
    out = zeros(n)
    for m in ms:
        out = madd(out, m)
    return out


def _flat(x: Mat) -> list[Q]:
    return [v for row in x for v in row]


@dataclass(frozen=True, eq=False)
class MatrixAlgebra:
    family: str
    params: tuple[int, ...]
    n_total: int
    basis: tuple[Mat, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def name(self) -> str:
        if self.family == "sl":
            return f"sl({self.params[0]},R)"
        if self.family == "so":
            return f"so({self.params[0]},{self.params[1]})"
        return f"sp({2 * self.params[0]},R)"

    @cached_property
    def _coord_data(self):
        flat = [_flat(b) for b in self.basis]
        _, piv = rref(flat)
        if len(piv) != len(flat):
            raise ValueError("basis is linearly dependent")
        sub = tuple(tuple(flat[i][p] for p in piv) for i in range(len(flat)))
        inv = inverse(sub)
        inv_sparse = tuple(tuple((i, v) for i, v in enumerate(row) if v) for row in inv)
        return piv, inv_sparse

    @cached_property
    def _sparse_basis(self):
        return tuple(tuple((a, b, v) for a, row in enumerate(m) for b, v in enumerate(row) if v)
                     for m in self.basis)

    def coords(self, x: Mat) -> tuple[Q, ...]:
        """Coordinates of ``x`` in the basis; raises if ``x`` is not in the algebra."""
        piv, inv = self._coord_data
        fx = _flat(x)
        c = [Q(0)] * self.dim
        for k, p in enumerate(piv):
            v = fx[p]
            if v:
                for i, w in inv[k]:
                    c[i] += v * w
        c = tuple(c)
        if self.combine(c) != tuple(tuple(r) for r in x):
            raise ValueError("matrix is not in the algebra")
        return c

    def combine(self, c) -> Mat:
        n = self.n_total
        out = [[Q(0)] * n for _ in range(n)]
        for ci, entries in zip(c, self._sparse_basis):
            if ci:
                for a, b, v in entries:
                    out[a][b] += ci * v
        return tuple(tuple(r) for r in out)

    def contains(self, x: Mat) -> bool:
        try:
            self.coords(x)
            return True
        except ValueError:
            return False

    def ad(self, x: Mat) -> Mat:
        """Matrix of ad x in the basis (columns are images of basis vectors)."""
        cols = [self.coords(bracket(x, b)) for b in self.basis]
        return transpose(tuple(cols))

    def check_closure(self) -> bool:
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1:]:
                self.coords(bracket(a, b))
        return True


def _sl_basis(n: int) -> list[Mat]:
    out = [E(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    out += [msub(E(n, i, i), E(n, i + 1, i + 1)) for i in range(1, n)]
    return out


def _so_basis(p: int, q: int) -> list[Mat]:
    n = p + q
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i <= p) == (j <= p):
                out.append(msub(E(n, i, j), E(n, j, i)))
            else:
                out.append(madd(E(n, i, j), E(n, j, i)))
    return out


def _sp_basis(m: int) -> list[Mat]:
    n = 2 * m
    out = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            out.append(msub(E(n, i, j), E(n, m + j, m + i)))
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            s = E(n, i, m + j) if i == j else madd(E(n, i, m + j), E(n, j, m + i))
            out.append(s)
            out.append(transpose(s))
    return out


@lru_cache(maxsize=None)
def build_algebra(family: str, *params: int, check: bool = True) -> MatrixAlgebra:
    """``build_algebra("sl", n)``, ``build_algebra("so", p, q)``, ``build_algebra("sp", n)``.

    ``sp`` takes the half-size ``n`` and returns sp(2n,R).
    """
    if family == "sl":
        (n,) = params
        if n < 2:
            raise ValueError("sl(n) needs n >= 2")
        alg = MatrixAlgebra("sl", (n,), n, tuple(_sl_basis(n)))
    elif family == "so":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("so(p,q) needs p, q >= 1")
        alg = MatrixAlgebra("so", (p, q), p + q, tuple(_so_basis(p, q)))
    elif family == "sp":
        (n,) = params
        if n < 1:
            raise ValueError("sp(2n) needs n >= 1")
        alg = MatrixAlgebra("sp", (n,), 2 * n, tuple(_sp_basis(n)))
    else:
        raise ValueError(f"unknown family {family!r}")
    if check:
        alg.check_closure()
    return alg


def boost(n: int, j: int, m: int) -> Mat:
    """``h_{j,m}``: swaps e_j and e_m."""
    return madd(E(n, j, m), E(n, m, j))


def euler_matrix(alg: MatrixAlgebra, label=None) -> Mat:
    """Standard Euler elements.

    sl(n): label ``p`` gives diag(q 1_p, -p 1_q)/n (default p = n // 2);
    so(p,q): label ``(j, m)`` gives the boost h_{j,m} (default (1, p+1)), label
    ``"hn"`` gives (1/2) sum_i h_{i,n+i} on so(n,n);
    sp(2n): (1/2) diag(1_n, -1_n).
    """
    n = alg.n_total
    if alg.family == "sl":
        p = n // 2 if label is None else int(label)
        if not 1 <= p < n:
            raise ValueError("label must satisfy 1 <= p < n")
        q = n - p
        return tuple(tuple(Q(q if i < p else -p, n) if i == j else Q(0) for j in range(n))
                     for i in range(n))
    if alg.family == "so":
        p, q = alg.params
        if label == "hn":
            if p != q:
                raise ValueError("label 'hn' needs p == q")
            return mscale(Q(1, 2), msum((boost(n, i, p + i) for i in range(1, p + 1)), n))
        j, m = (1, p + 1) if label is None else label
        if not (1 <= j <= p < m <= n):
            raise ValueError("boost needs j <= p < m")
        return boost(n, j, m)
    if label not in (None, "h"):
        raise ValueError("sp(2n) has the single label 'h'")
    m = alg.params[0]
    return tuple(tuple(Q(1 if i < m else -1, 2) if i == j else Q(0) for j in range(n))
                 for i in range(n))


def is_euler_matrix(alg: MatrixAlgebra, h: Mat) -> bool:
    """ad h != 0 and its minimal polynomial divides t(t-1)(t+1)."""
    m = alg.ad(h)
    if is_zero(m):
        return False
    return is_zero(msub(matmul(m, matmul(m, m)), m))


@dataclass(frozen=True, eq=False)
class GradedDecomposition:
    algebra: MatrixAlgebra
    h: Mat
    minus: tuple[Mat, ...]
    zero: tuple[Mat, ...]
    plus: tuple[Mat, ...]

    def part(self, i: int) -> tuple[Mat, ...]:
        return {-1: self.minus, 0: self.zero, 1: self.plus}[i]

    def components(self, x: Mat) -> tuple[Mat, Mat, Mat]:
        """``(x_-1, x_0, x_1)``."""
        self.algebra.coords(x)
        a = bracket(self.h, x)
        b = bracket(self.h, a)
        x1 = mscale(Q(1, 2), madd(b, a))
        xm = mscale(Q(1, 2), msub(b, a))
        return xm, msub(x, b), x1

    @cached_property
    def _plus_coord_data(self):
        flat = [_flat(b) for b in self.plus]
        _, piv = rref(flat)
        sub = tuple(tuple(f[p] for p in piv) for f in flat)
        return piv, inverse(sub)

    def plus_coords(self, x: Mat) -> tuple[Q, ...]:
        """Coordinates of an element of g_1 in the basis ``plus`` (no membership check)."""
        piv, inv = self._plus_coord_data
        fx = _flat(x)
        v = [fx[p] for p in piv]
        return tuple(sum((v[k] * inv[k][i] for k in range(len(v)) if v[k]), Q(0)) for i in range(len(v)))

    def in_part(self, i: int, x: Mat) -> bool:
        comps = self.components(x)
        return all(is_zero(c) for k, c in zip((-1, 0, 1), comps) if k != i)


def grade(alg: MatrixAlgebra, h: Mat) -> GradedDecomposition:
    if not is_euler_matrix(alg, h):
        raise NotEuler("h is not an Euler element")
    m = alg.ad(h)
    d = alg.dim
    parts = []
    for lam in (-1, 0, 1):
        shifted = msub(m, mscale(lam, identity(d)))
        parts.append(tuple(alg.combine(v) for v in nullspace(shifted, d)))
    return GradedDecomposition(alg, h, *parts)


def tau_apply(dec: GradedDecomposition, x: Mat) -> Mat:
    """``e^{pi i ad h} x``: +x on g_0, -x on g_1 and g_-1."""
    dec.algebra.coords(x)
    return msub(x, mscale(2, bracket(dec.h, bracket(dec.h, x))))


def is_orthogonal_pair(dec: GradedDecomposition, k: Mat) -> bool:
    if not dec.algebra.contains(k) or not is_euler_matrix(dec.algebra, k):
        return False
    return is_zero(dec.components(k)[1])


@dataclass(frozen=True, eq=False)
class EulerPair:
    h: Mat
    k: Mat

    @property
    def z(self) -> Mat:
        return bracket(self.h, self.k)

    def sl2_relations(self) -> bool:
        z = self.z
        return bracket(z, self.k) == self.h and bracket(self.h, z) == self.k


def _solve_in(alg: MatrixAlgebra, space, lhs, target: Mat):
    """Find coefficients c with sum c_i lhs(space_i) = target, or None."""
    cols = [alg.coords(lhs(v)) for v in space]
    a = transpose(tuple(cols))
    c = solve(a, alg.coords(target))
    if c is None:
        return None
    return msum((mscale(ci, v) for ci, v in zip(c, space)), alg.n_total)


def jordan_invertible(dec: GradedDecomposition, x: Mat) -> bool:
    """(ad x)^2 maps g_-1 onto g_1."""
    if not dec.in_part(1, x):
        raise ValueError("x is not in g_1")
    if len(dec.minus) != len(dec.plus) or not dec.plus:
        return False
    alg = dec.algebra
    imgs = [alg.coords(bracket(x, bracket(x, v))) for v in dec.minus]
    return rank(imgs) == len(dec.plus)


def sl2_triple_from_nilpotent(dec: GradedDecomposition, x: Mat):
    """Return ``((x, 2h, -y), k)`` with y in g_-1, [x, y] = 2h and k = (x + y)/2."""
    if not jordan_invertible(dec, x):
        raise NotInvertible("x is not in E^x: (ad x)^2 is not bijective from g_-1 to g_1")
    h = dec.h
    y = _solve_in(dec.algebra, dec.minus, lambda v: bracket(x, v), mscale(2, h))
    if y is None:
        raise NotInvertible("no y in g_-1 with [x, y] = 2h")
    k = mscale(Q(1, 2), madd(x, y))
    return (x, mscale(2, h), mscale(-1, y)), k


def pair_roundtrip(dec: GradedDecomposition, x: Mat) -> bool:
    _, k = sl2_triple_from_nilpotent(dec, x)
    return mscale(2, dec.components(k)[2]) == tuple(tuple(r) for r in x)


def exp_ad_on_plane(z: Mat, angle, target: Mat) -> Mat:
    """``e^{t ad z} target`` for ``t = angle * pi``, when (ad z)^2 target = -target.

    ``angle`` is a rational multiple of pi and must be a multiple of 1/2 so
    that the cosine and sine are exact.
    """
    t = Q(angle)
    a = bracket(z, target)
    if bracket(z, a) != mscale(-1, target):
        raise ValueError("(ad z)^2 target != -target")
    if (2 * t).denominator != 1:
        raise ValueError("angle must be a multiple of pi/2")
    quarter = int(2 * t) % 4
    cos, sin = [(1, 0), (0, 1), (-1, 0), (0, -1)][quarter]
    return madd(mscale(cos, target), mscale(sin, a))


@dataclass(frozen=True, eq=False)
class JordanData:
    decomposition: GradedDecomposition
    e: Mat
    f: Mat
    rank: int = 0

    def product(self, x: Mat, y: Mat) -> Mat:
        return bracket(bracket(x, self.f), y)

    def power(self, x: Mat, k: int) -> Mat:
        out = self.e
        for _ in range(k):
            out = self.product(x, out)
        return out


def jordan_build(dec: GradedDecomposition, e: Mat, f: Mat | None = None, rank: int = 0) -> JordanData:
    if not dec.in_part(1, e):
        raise ValueError("e is not in g_1")
    if f is None:
        (_, _, neg_y), _ = sl2_triple_from_nilpotent(dec, e)
        f = mscale(Q(-1, 2), neg_y)
    if not dec.in_part(-1, f):
        raise ValueError("f is not in g_-1")
    if bracket(e, f) != dec.h:
        raise ValueError("[e, f] != h")
    return JordanData(dec, e, f, rank)


def jordan_product(jd: JordanData, x: Mat, y: Mat) -> Mat:
    return jd.product(x, y)


def jordan_min_poly(jd: JordanData, x: Mat) -> list[Q]:
    """Monic coefficients (constant term first) of the minimal polynomial of x in E."""
    alg = jd.decomposition.algebra
    powers = [alg.coords(jd.e)]
    cur = jd.e
    while True:
        cur = jd.product(x, cur)
        powers.append(alg.coords(cur))
        ns = nullspace(transpose(tuple(powers)), len(powers))
        if ns:
            v = ns[0]
            lead = v[-1]
            return [c / lead for c in v]


def jordan_trace(jd: JordanData, y: Mat) -> Q:
    """Generic trace, normalized by tr(e) = rank: tr(y) = rank * Trace L(y) / dim."""
    dec = jd.decomposition
    basis = dec.plus
    total = sum((dec.plus_coords(jd.product(y, b))[i] for i, b in enumerate(basis)), Q(0))
    return jd.rank * total / len(basis)


def jordan_char_poly(jd: JordanData, x: Mat) -> list[Q]:
    """Generic characteristic polynomial (constant term first, degree = rank) via Newton's identities."""
    r = jd.rank
    p = [None] + [jordan_trace(jd, jd.power(x, k)) for k in range(1, r + 1)]
    e = [Q(1)]
    for k in range(1, r + 1):
        e.append(sum(((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)), Q(0)) / k)
    return [(-1) ** (r - i) * e[r - i] for i in range(r + 1)]


def jordan_norm(jd: JordanData, x: Mat) -> Q:
    """Generic norm: the product of the eigenvalues."""
    return (-1) ** jd.rank * jordan_char_poly(jd, x)[0]


def positive_root_count(coeffs: list[Q]) -> int:
    """Descartes' count of sign changes; exact when all roots are real."""
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# --- so(2,2) ---------------------------------------------------------------

def _q4(scale, rows) -> Mat:
    return mscale(scale, mat(rows))


SO22_PUBLISHED = {
    "e1": _q4(Q(1, 4), [[0, -1, 1, 0], [1, 0, 0, -1], [1, 0, 0, -1], [0, -1, 1, 0]]),
    "e2": _q4(Q(1, 4), [[0, 1, 1, 0], [-1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0]]),
    "k1": _q4(Q(1, 2), [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    "k2": _q4(Q(1, 2), [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    "z_h_k2": mat([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    "z_h_k1": mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    "z1": _q4(Q(1, 2), [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
}


def so22_root_vectors(alg: MatrixAlgebra | None = None) -> tuple[Mat, Mat]:
    """Root vectors in g_1(h) for h = h_{1,4}, with [k, e1] = e1, [k, e2] = -e2, k = h_{2,3}.

    Computed as joint eigenvectors and normalized so that e_1 + e_1^T and
    e_2 + e_2^T are Euler elements conjugate to (h +- k)/2.
    """
    alg = alg or build_algebra("so", 2, 2)
    h, k = boost(4, 1, 4), boost(4, 2, 3)
    adh, adk = alg.ad(h), alg.ad(k)
    d = alg.dim
    out = []
    for s in (1, -1):
        a = tuple(msub(adh, identity(d))) + tuple(msub(adk, mscale(s, identity(d))))
        (v,) = nullspace(a, d)
        x = alg.combine(v)
        # scale so that [x, x^T] = h + s k, the coroot of the root on a
        c = bracket(x, transpose(x))
        target = madd(h, mscale(s, k))
        ratio = next(c[i][j] / target[i][j] for i in range(4) for j in range(4) if target[i][j])
        # x -> lam x multiplies [x, x^T] by lam^2; ratio is a rational square here
        lam = _rational_sqrt(1 / ratio)
        out.append(mscale(Q(lam, 2), x))
    return out[0], out[1]


def so22_frame(alg: MatrixAlgebra | None = None) -> tuple[Mat, Mat]:
    """Root vectors e_1, e_2 with the sign choice of the published so(2,2) matrices."""
    e1, e2 = so22_root_vectors(alg)
    # the sign of a root vector is a free choice
    if e1[1][0] < 0:
        e1 = mscale(-1, e1)
    if e2[1][0] > 0:
        e2 = mscale(-1, e2)
    return e1, e2


def _rational_sqrt(x: Q) -> Q:
    from math import isqrt
    x = Q(x)
    if x <= 0:
        raise ValueError("not a positive rational")
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ValueError("not a rational square")
    return Q(n, d)


def so22_report() -> dict:
    """Recompute the named so(2,2) matrices and compare with the published ones."""
    alg = build_algebra("so", 2, 2)
    h, k = boost(4, 1, 4), boost(4, 2, 3)
    e1, e2 = so22_frame(alg)
    k1 = madd(e1, transpose(e1))
    k2 = madd(e2, transpose(e2))
    kj = {2: madd(k1, k2), 1: msub(k1, k2), 0: mscale(-1, madd(k1, k2))}
    computed = {
        "h": h, "k": k, "e1": e1, "e2": e2, "k1": k1, "k2": k2,
        "k^0": kj[0], "k^1": kj[1], "k^2": kj[2],
        "z_h_k1": bracket(h, kj[1]), "z_h_k2": bracket(h, kj[2]),
        "z1": bracket(h, k1),
    }
    dec = grade(alg, h)
    checks = {name: computed[name] == ref for name, ref in SO22_PUBLISHED.items()}
    checks["k^2 = h_{1,3}"] = kj[2] == boost(4, 1, 3)
    checks["k^1 = -h_{2,4}"] = kj[1] == mscale(-1, boost(4, 2, 4))
    checks["k^0 = -k^2"] = kj[0] == mscale(-1, kj[2])
    checks["[k,e1] = e1"] = bracket(k, e1) == e1
    checks["[k,e2] = -e2"] = bracket(k, e2) == mscale(-1, e2)
    checks["g_1(h) = span(e1, e2)"] = len(dec.plus) == 2 and all(dec.in_part(1, e) for e in (e1, e2))
    checks["z_h_k2 = e1 - e1^T + e2 - e2^T"] = computed["z_h_k2"] == madd(
        msub(e1, transpose(e1)), msub(e2, transpose(e2)))
    checks["z1 = e1 - e1^T"] = computed["z1"] == msub(e1, transpose(e1))
    for j, kk in kj.items():
        checks[f"(h,k^{j}) orthogonal"] = is_orthogonal_pair(dec, kk)
    return {"matrices": {n: [[fmt(v) for v in r] for r in m] for n, m in computed.items()},
            "checks": checks, "passed": all(checks.values())}


# --- random elements --------------------------------------------------------

def random_g1(dec: GradedDecomposition, rng: Random, bound: int = 3) -> Mat:
    n = dec.algebra.n_total
    return msum((mscale(rng.randint(-bound, bound), v) for v in dec.plus), n)


def random_invertible(dec: GradedDecomposition, rng: Random, frame=None, tries: int = 200) -> Mat:
    """A random element of E^x; with a Jordan frame, half the draws are perturbed frame sums."""
    n = dec.algebra.n_total
    for _ in range(tries):
        if frame and rng.random() < 0.5:
            x = msum((mscale(rng.choice((-3, -2, -1, 1, 2, 3)), c) for c in frame), n)
            x = madd(x, mscale(Q(1, 5), random_g1(dec, rng, 1)))
        else:
            x = random_g1(dec, rng)
        if jordan_invertible(dec, x):
            return x
    raise RuntimeError("failed to sample an invertible element")


# --- realizations of catalog entries ----------------------------------------

class RealizationUnavailable(ValueError):
    pass


def _embed(x: Mat, n: int, idx) -> Mat:
    """Place a 4x4 matrix on the coordinates ``idx`` of an n x n matrix."""
    out = [[Q(0)] * n for _ in range(n)]
    for a in range(4):
        for b in range(4):
            if x[a][b]:
                out[idx[a] - 1][idx[b] - 1] = x[a][b]
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True, eq=False)
class Realization:
    """A matrix model of a catalog entry with a Jordan frame c_1..c_r in g_1.

    The frame consists of root vectors for the strongly orthogonal roots,
    normalized so that ``[c_i, c_i^T]`` is the matching coroot; then for
    ``x = sum sigma_i c_i`` the solution of ``[x, y] = 2h`` is ``y = x^T`` and
    ``z = [h, k] = (x - x^T)/2`` is skew, i.e. lies in the compact part.
    """
    slug: str
    algebra: MatrixAlgebra
    h: Mat
    frame: tuple[Mat, ...]

    @cached_property
    def decomposition(self) -> GradedDecomposition:
        return grade(self.algebra, self.h)

    def x_of(self, sigma) -> Mat:
        return msum((mscale(s, c) for s, c in zip(sigma, self.frame)), self.algebra.n_total)

    def k_of(self, sigma) -> Mat:
        x = self.x_of(sigma)
        return mscale(Q(1, 2), madd(x, transpose(x)))

    def z_of(self, sigma) -> Mat:
        return bracket(self.h, self.k_of(sigma))

    def z_i(self, i: int = 1) -> Mat:
        """``z_i = [h, k_i]`` for the sl2 attached to the i-th frame vector."""
        c = self.frame[i - 1]
        return mscale(Q(1, 2), msub(c, transpose(c)))

    @cached_property
    def _jordan(self) -> JordanData:
        e = self.x_of([1] * len(self.frame))
        return jordan_build(self.decomposition, e, mscale(Q(1, 2), transpose(e)), len(self.frame))

    def jordan(self) -> JordanData:
        return self._jordan

    def verify_frame(self) -> bool:
        """Each c_i spans an sl2 with c_i^T; for symmetric h the frame sum solves [x, x^T] = 2h."""
        dec = self.decomposition
        for c in self.frame:
            t = bracket(c, transpose(c))
            if not dec.in_part(1, c) or bracket(t, c) != mscale(2, c):
                return False
        e = self.x_of([1] * len(self.frame))
        if not jordan_invertible(dec, e):
            return True  # non-symmetric h: g_1 has no invertible elements
        (_, _, neg_y), _ = sl2_triple_from_nilpotent(dec, e)
        return mscale(-1, neg_y) == transpose(e)


def _so1_frame(alg: MatrixAlgebra, h: Mat) -> Mat:
    n = alg.n_total
    for s in (1, -1):
        x = madd(madd(E(n, 1, 3), E(n, 3, 1)), mscale(s, msub(E(n, 2, 3), E(n, 3, 2))))
        if bracket(h, x) == x:
            c = bracket(x, transpose(x))
            ratio = next(c[i][j] / h[i][j] for i in range(n) for j in range(n) if h[i][j])
            return mscale(_rational_sqrt(Q(2) / ratio), x)
    raise AssertionError("no root vector found")


@lru_cache(maxsize=None)
def realize_params(params: tuple, slug: str = "") -> Realization:
    fam = params[0]
    if fam == "sl":
        n = params[1]
        alg = build_algebra("sl", n)
        r = n // 2
        h = euler_matrix(alg, r)
        frame = tuple(E(n, i, r + i) for i in range(1, r + 1)) if n % 2 == 0 else ()
        return Realization(slug, alg, h, frame)
    if fam == "sp":
        m = params[1]
        alg = build_algebra("sp", m)
        return Realization(slug, alg, euler_matrix(alg), tuple(E(2 * m, i, m + i) for i in range(1, m + 1)))
    p, q = params[1], params[2]
    alg = build_algebra("so", p, q)
    n = p + q
    if len(params) > 3 and params[3] == "hn":
        h = euler_matrix(alg, "hn")
        e1, _ = so22_frame()
        copies = [(2 * i + 1, 2 * i + 2, p + 2 * i + 2, p + 2 * i + 1) for i in range(p // 2)]
        frame = tuple(mscale(2, _embed(e1, n, idx)) for idx in copies)
        return Realization(slug, alg, h, frame)
    if p == 1:
        h = boost(n, 1, 2)
        return Realization(slug, alg, h, (_so1_frame(alg, h),))
    e1, e2 = so22_frame()
    idx = (1, 2, p + 1, p + 2)
    h = boost(n, 1, p + 2)
    return Realization(slug, alg, h, (mscale(2, _embed(e1, n, idx)), mscale(2, _embed(e2, n, idx))))


def realize(entry) -> Realization:
    if entry.realization is None:
        raise RealizationUnavailable(f"{entry.slug}: classification-level entry, no matrix model")
    return realize_params(entry.realization, entry.slug)

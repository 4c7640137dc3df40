"""Small exact linear-algebra kernel over ``Fraction``."""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]


def vec(xs) -> Vec:
    return tuple(Q(x) for x in xs)


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    return sum((a * b for a, b in zip(u, v)), Q(0))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in u)


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def zeros(n: int, m: int | None = None) -> Mat:
    m = n if m is None else m
    return tuple(tuple(Q(0) for _ in range(m)) for _ in range(n))


def identity(n: int) -> Mat:
    return tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: Mat, b: Mat) -> Mat:
    m = len(b[0]) if b else 0
    out = []
    for r in a:
        acc = [Q(0)] * m
        for x, brow in zip(r, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def matvec(a: Mat, v: Sequence[Q]) -> Vec:
    return tuple(sum((x * y for x, y in zip(r, v) if x and y), Q(0)) for r in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def madd(a: Mat, b: Mat) -> Mat:
    return tuple(add(r, s) for r, s in zip(a, b))


def msub(a: Mat, b: Mat) -> Mat:
    return tuple(sub(r, s) for r, s in zip(a, b))


def mscale(c, a: Mat) -> Mat:
    return tuple(scale(c, r) for r in a)


def bracket(x: Mat, y: Mat) -> Mat:
    return msub(matmul(x, y), matmul(y, x))


def is_zero(a) -> bool:
    if a and isinstance(a[0], tuple):
        return all(x == 0 for r in a for x in r)
    return all(x == 0 for x in a)


def rref(a: Sequence[Sequence[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Q(x) for x in r] for r in a]
    pivots: list[int] = []
    if not m:
        return m, pivots
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence[Q]]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[Q]], ncols: int | None = None) -> list[Vec]:
    """Basis of ``{x : a x = 0}``."""
    if not a:
        n = ncols or 0
        return [tuple(Q(int(i == j)) for j in range(n)) for i in range(n)]
    m, pivots = rref(a)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Q(0)] * n
        x[f] = Q(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence[Q]], b: Sequence[Q]) -> Vec | None:
    """One solution of ``a x = b`` or ``None`` if inconsistent."""
    n = len(a[0])
    aug = [list(r) + [Q(v)] for r, v in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Q(0)] * n
    for i, p in enumerate(pivots):
        x[p] = m[i][n]
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [list(r) + [Q(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(r[n:]) for r in m)


def fmt(x: Q) -> str:
    """Serialize a rational as ``p/q`` (``p`` when integral)."""
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

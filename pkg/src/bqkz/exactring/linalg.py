"""Exact determinants, Pfaffians and nullspaces over commutative rings."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclo import CycloElem
from .errors import NonSquare, NotSkewSymmetric, OddDimension
from .poly import MultiPoly, exact_div

COFACTOR_MAX = 5


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.zero(x.ring, x.names)
    if isinstance(x, CycloElem):
        return CycloElem.zero(x.order)
    return 0


def _one_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.one(x.ring, x.names)
    if isinstance(x, CycloElem):
        return CycloElem.one(x.order)
    return 1


def _exact_quotient(a, b):
    if isinstance(a, MultiPoly):
        return exact_div(a, b)
    if isinstance(a, CycloElem) or isinstance(b, CycloElem):
        return a / b
    return Fraction(a) / b


def _square(m: Sequence[Sequence]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is not square ({n} rows)")
    return n


def cofactor_determinant(m: Sequence[Sequence]):
    """Laplace expansion along the first row; the brute-force reference."""
    n = _square(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = _zero_like(m[0][0])
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_determinant(m: Sequence[Sequence]):
    """Fraction-free Gaussian elimination (every division is exact)."""
    n = _square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = _one_like(a[0][0])
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return _zero_like(a[0][0])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def determinant(m: Sequence[Sequence]):
    """Exact determinant; cofactor expansion up to 5x5, Bareiss beyond."""
    n = _square(m)
    if n <= COFACTOR_MAX:
        return cofactor_determinant(m)
    return bareiss_determinant(m)


def pfaffian(m: Sequence[Sequence]):
    """Pfaffian by recursive expansion along the first row."""
    n = _square(m)
    if n % 2:
        raise OddDimension(f"Pfaffian of a {n}x{n} matrix")
    for i in range(n):
        if m[i][i]:
            raise NotSkewSymmetric("nonzero diagonal entry")
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                raise NotSkewSymmetric(f"entries ({i},{j}) and ({j},{i}) are not opposite")
    return _pf(m, tuple(range(n)))


def _pf(m, idx: tuple[int, ...]):
    if not idx:
        return 1
    first = idx[0]
    total = _zero_like(m[0][0])
    for pos in range(1, len(idx)):
        j = idx[pos]
        a = m[first][j]
        if not a:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        term = a * _pf(m, rest)
        # sign (-1)^(pos+1) for the pos-th remaining index
        total = total + term if pos % 2 == 1 else total - term
    return total


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : rows . x = 0} over a field, by Gauss-Jordan elimination.

    Entries may be Fractions, ints or CycloElem.  Returns a list of basis
    vectors (each a list of length ncols).
    """
    a = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c] if not isinstance(a[r][c], (int, Fraction)) else Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    sample = next((x for row in rows for x in row if x), rows[0][0] if rows and rows[0] else 0)
    basis = []
    for fcol in free:
        vec = [_zero_like(sample)] * ncols
        vec[fcol] = _one_like(sample)
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][fcol]
        basis.append(vec)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    zero = _zero_like(a[0][0]) if n and m else 0
    out = [[zero] * p for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(m):
            x = row[t]
            if not x:
                continue
            brow = b[t]
            for j in range(p):
                y = brow[j]
                if y:
                    acc[j] = acc[j] + x * y
    return out

"""Exact integer linear algebra: Smith normal form, image membership,
cokernels and bounded Diophantine solving.

All matrices are small (at most 16x16 here) and dense, stored as tuples of
tuples of Python ints.  Python integers never wrap around, but the contract
still promises loud failure instead of silently huge numbers, so every row
or column operation checks entries against ENTRY_LIMIT.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

# Entries beyond this bound abort the computation.  The geometry never
# produces numbers remotely this large; hitting the bound means a bug.
ENTRY_LIMIT = 2 ** 63


class LatticeOverflow(ArithmeticError):
    """An intermediate entry left the permitted range."""


class DimensionMismatch(ValueError):
    """Operands with incompatible shapes."""


Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Freeze a row-major table of ints, validating shape and magnitude."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or not m[0]:
        raise DimensionMismatch("matrix must have positive dimensions")
    width = len(m[0])
    for row in m:
        if len(row) != width:
            raise DimensionMismatch("ragged rows")
        for x in row:
            _check(x)
    return m


def _check(x: int) -> int:
    if abs(x) >= ENTRY_LIMIT:
        raise LatticeOverflow(f"entry {x} exceeds limit")
    return x


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionMismatch("matrix product shapes")
    bt = list(zip(*b))
    return tuple(
        tuple(_check(sum(x * y for x, y in zip(row, col))) for col in bt)
        for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if len(a[0]) != len(v):
        raise DimensionMismatch("matrix-vector shapes")
    return tuple(_check(sum(x * y for x, y in zip(row, v))) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def det_unimodular(a: Matrix) -> int:
    """Determinant by integer fraction-free elimination (Bareiss)."""
    n = len(a)
    if len(a[0]) != n:
        raise DimensionMismatch("determinant of a non-square matrix")
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _check((m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev)
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and D diagonal.

    ``divisors`` lists the diagonal of D: nonnegative, each dividing the
    next, zeros last.
    """

    u: Matrix
    d: Matrix
    v: Matrix
    divisors: tuple[int, ...]

    def verify(self, m: Matrix) -> bool:
        if mat_mul(mat_mul(self.u, m), self.v) != self.d:
            return False
        if abs(det_unimodular(self.u)) != 1 or abs(det_unimodular(self.v)) != 1:
            return False
        for a, b in zip(self.divisors, self.divisors[1:]):
            if a == 0 and b != 0:
                return False
            if a != 0 and b % a != 0:
                return False
        return True


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Diagonalize over Z by elementary row/column operations.

    Pivot selection takes the smallest nonzero absolute value in the
    remaining block (ties by row-major position), which makes the output
    deterministic for a fixed input.
    """
    m = as_matrix(m)
    rows, cols = len(m), len(m[0])
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def row_add(dst: int, src: int, k: int) -> None:
        if k == 0:
            return
        for j in range(cols):
            a[dst][j] = _check(a[dst][j] + k * a[src][j])
        for j in range(rows):
            u[dst][j] = _check(u[dst][j] + k * u[src][j])

    def col_add(dst: int, src: int, k: int) -> None:
        if k == 0:
            return
        for i in range(rows):
            a[i][dst] = _check(a[i][dst] + k * a[i][src])
        for i in range(cols):
            v[i][dst] = _check(v[i][dst] + k * v[i][src])

    def row_swap(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def col_swap(i: int, j: int) -> None:
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        if a[t][t] < 0:
            for j in range(cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        dirty = False
        for i in range(t + 1, rows):
            q = a[i][t] // a[t][t]
            row_add(i, t, -q)
            if a[i][t] != 0:
                dirty = True
        for j in range(t + 1, cols):
            q = a[t][j] // a[t][t]
            col_add(j, t, -q)
            if a[t][j] != 0:
                dirty = True
        if dirty:
            continue
        # pivot now clears its row and column; enforce divisibility
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        t += 1

    divisors = tuple(a[i][i] for i in range(min(rows, cols)))
    dec = SmithDecomposition(
        u=tuple(tuple(r) for r in u),
        d=tuple(tuple(r) for r in a),
        v=tuple(tuple(r) for r in v),
        divisors=divisors,
    )
    return dec


def cokernel(m: Matrix) -> tuple[int, tuple[int, ...]]:
    """Invariants of Z^rows / im(M): (free rank, torsion divisors > 1)."""
    m = as_matrix(m)
    dec = smith_normal_form(m)
    rank = sum(1 for d in dec.divisors if d != 0)
    free = len(m) - rank
    torsion = tuple(d for d in dec.divisors if d > 1)
    return free, torsion


def image_membership(m: Matrix, v: Sequence[int]) -> tuple[bool, Optional[Vector]]:
    """Does v lie in the integer column span of M?  Returns a witness w
    with M @ w == v when it does."""
    m = as_matrix(m)
    v = tuple(int(x) for x in v)
    if len(v) != len(m):
        raise DimensionMismatch("vector length vs matrix rows")
    dec = smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    uv = mat_vec(dec.u, v)
    y = [0] * cols
    for i in range(rows):
        d = dec.d[i][i] if i < min(rows, cols) else 0
        if d != 0:
            if uv[i] % d != 0:
                return False, None
            y[i] = uv[i] // d
        elif uv[i] != 0:
            return False, None
    w = mat_vec(dec.v, tuple(y))
    return True, w


def solve_diophantine(
    a: Matrix, b: Sequence[int]
) -> Optional[tuple[Vector, tuple[Vector, ...]]]:
    """All integer solutions of A x = b as x0 + span_Z(kernel basis).

    Returns None when no integer solution exists.
    """
    a = as_matrix(a)
    b = tuple(int(x) for x in b)
    if len(b) != len(a):
        raise DimensionMismatch("rhs length vs matrix rows")
    dec = smith_normal_form(a)
    rows, cols = len(a), len(a[0])
    ub = mat_vec(dec.u, b)
    y = [0] * cols
    for i in range(rows):
        d = dec.d[i][i] if i < min(rows, cols) else 0
        if d != 0:
            if ub[i] % d != 0:
                return None
            y[i] = ub[i] // d
        elif ub[i] != 0:
            return None
    x0 = mat_vec(dec.v, tuple(y))
    rank = sum(1 for d in dec.divisors if d != 0)
    kernel = tuple(
        tuple(dec.v[i][j] for i in range(cols)) for j in range(rank, cols)
    )
    return x0, kernel


def coset_residues(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    """Residues of v in Smith coordinates of coker(M).

    Entry i is (U v)_i reduced mod d_i (0 <= r < d_i) for a nonzero
    divisor, and (U v)_i itself on the free part.
    """
    m = as_matrix(m)
    v = tuple(int(x) for x in v)
    dec = smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    uv = mat_vec(dec.u, v)
    out = []
    for i in range(rows):
        d = dec.d[i][i] if i < min(rows, cols) else 0
        out.append(uv[i] % d if d != 0 else uv[i])
    return tuple(out)


def coset_invariants(m: Matrix, v: Sequence[int]) -> tuple[int, int]:
    """Basis-independent profile of the class [v] in coker(M).

    Returns (order, divisibility): order is the additive order of [v]
    (0 meaning infinite), divisibility is the largest k with [v] in
    k * coker(M) (0 for the zero class).

    These two numbers are preserved when (M, v) is replaced by
    (T' M T, T' v) for unimodular T, so they can be compared across
    states whose bases differ by a monodromy transformation.
    """
    m = as_matrix(m)
    res = coset_residues(m, v)
    dec = smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    pairs = []
    for i in range(rows):
        d = dec.d[i][i] if i < min(rows, cols) else 0
        pairs.append((d, res[i]))
    if all(r == 0 for _, r in pairs):
        return 1, 0
    order = 1
    for d, r in pairs:
        if r == 0:
            continue
        if d == 0:
            order = 0
            break
        order = _lcm(order, d // _gcd(d, r))
    # [v] in k*coker iff k | r on free coordinates and gcd(k, d) | r on
    # torsion ones; scan a documented small range (profile, not an API).
    div = 1
    for k in range(2, 65):
        ok = all(
            (r % k == 0) if d == 0 else (r % _gcd(k, d) == 0) for d, r in pairs
        )
        if ok:
            div = k
    return order, div


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // _gcd(a, b)

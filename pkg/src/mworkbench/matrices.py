"""Exact integer matrices, Smith normal form, and signatures of rational
symmetric forms.  Everything runs over Python ints / Fractions; no floats.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise ValueError("dimension mismatch")
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a: IntMatrix, v: list[int]) -> list[int]:
    return [sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a))]


def mat_eq(a: IntMatrix, b: IntMatrix) -> bool:
    return a == b


def transpose(a: IntMatrix) -> IntMatrix:
    return [list(row) for row in zip(*a)] if a else []


def smith_normal_form(mat: IntMatrix) -> tuple[list[int], int]:
    """Invariant factors d1 | d2 | ... (positive, nontrivial rows of the
    diagonal) and the free rank = columns - rank.

    Row/column reduction by exact Euclidean steps; standard algorithm.
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0 or cols == 0:
        return [], cols
    r = 0  # pivot index

    def find_pivot(start: int):
        best = None
        for i in range(start, rows):
            for j in range(start, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    while True:
        piv = find_pivot(r)
        if piv is None:
            break
        i0, j0 = piv
        a[r], a[i0] = a[i0], a[r]
        for row in a:
            row[r], row[j0] = row[j0], row[r]
        # clear row/column r by euclidean steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(r + 1, rows):
                if a[i][r]:
                    q = a[i][r] // a[r][r]
                    for j in range(cols):
                        a[i][j] -= q * a[r][j]
                    if a[i][r]:
                        a[r], a[i] = a[i], a[r]
                        dirty = True
            for j in range(r + 1, cols):
                if a[r][j]:
                    q = a[r][j] // a[r][r]
                    for i in range(rows):
                        a[i][j] -= q * a[i][r]
                    if a[r][j]:
                        for i in range(rows):
                            a[i][r], a[i][j] = a[i][j], a[i][r]
                        dirty = True
        # ensure pivot divides the rest of the matrix
        p = a[r][r]
        fix = None
        for i in range(r + 1, rows):
            for j in range(r + 1, cols):
                if a[i][j] % p != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            for j in range(cols):
                a[r][j] += a[fix][j]
            continue
        r += 1
        if r >= min(rows, cols):
            break
    factors = [abs(a[i][i]) for i in range(r) if abs(a[i][i]) != 0]
    return factors, cols - len(factors)


def abelian_invariants(mat: IntMatrix, ngens: int) -> tuple[list[int], int]:
    """Invariant factors (>1 entries kept as torsion) and free rank of
    Z^ngens / rowspace(mat)."""
    if not mat:
        return [], ngens
    factors, free = smith_normal_form(mat)
    return factors, free


def form_signature(q: list[list[Fraction]]) -> int:
    """Signature of a symmetric rational form by congruence diagonalization.

    Degenerate directions contribute 0.
    """
    n = len(q)
    a = [[Fraction(x) for x in row] for row in q]
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("form is not symmetric")
    sig = 0
    idx = 0
    while idx < n:
        if a[idx][idx] == 0:
            # look for a later nonzero diagonal entry to swap in
            swap = None
            for k in range(idx + 1, n):
                if a[k][k] != 0:
                    swap = k
                    break
            if swap is not None:
                for row in a:
                    row[idx], row[swap] = row[swap], row[idx]
                a[idx], a[swap] = a[swap], a[idx]
            else:
                # all remaining diagonal entries vanish: find off-diagonal
                off = None
                for i in range(idx, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            off = (i, j)
                            break
                    if off:
                        break
                if off is None:
                    break  # zero block: contributes 0
                i, j = off
                # row/col_i += row/col_j makes a nonzero diagonal entry
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
                if a[i][i] == 0:
                    raise AssertionError("diagonalization step failed")
                if i != idx:
                    for row in a:
                        row[idx], row[i] = row[i], row[idx]
                    a[idx], a[i] = a[i], a[idx]
        p = a[idx][idx]
        sig += 1 if p > 0 else -1
        for k in range(idx + 1, n):
            c = a[k][idx] / p
            if c:
                for j in range(n):
                    a[k][j] -= c * a[idx][j]
                for j in range(n):
                    a[j][k] -= c * a[j][idx]
        idx += 1
    return sig

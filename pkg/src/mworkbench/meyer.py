"""Meyer's signature cocycle on Sp(2g, Z) and signature accumulation for
positive Dehn twist factorizations.

tau_g(A, B) is computed as the Wall/Kashiwara triple index of the Lagrangian
graphs of I, A and AB inside (H + H, J + (-J)): the signature of the
quadratic form q(x1, x2, x3) = omega(x1, x2) on the solution space
{ xi in graph(Mi) : x1 + x2 + x3 = 0 }.  This is a 2-cocycle whose
accumulation over a positive factorization t_{c_l} ... t_{c_1} = 1 computes
the signature of the fibration:

    sigma = - sum_{k=1}^{l-1} tau_g(rho(t_{c_k} ... t_{c_1}), rho(t_{c_{k+1}}))
            + sum of local terms (0 per nonseparating, -1 per separating cycle)

with rho the capped H_1 representation.  Orientation conventions here are
pinned by the calibration gate in the topology module: the intersection form
is J with <x_i, y_i> = -1 on basis (x_1..x_g, y_1..y_g), and right-handed
twists transvect by x -> x + <x, c> c.
"""

from __future__ import annotations

from fractions import Fraction

from .matrices import IntMatrix, form_signature, identity, mat_mul


def symplectic_j(g: int) -> IntMatrix:
    """Intersection form on basis (x_1..x_g, y_1..y_g); <x_i, y_i> = -1."""
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for i in range(g):
        j[i][g + i] = -1
        j[g + i][i] = 1
    return j


def transvection(j: IntMatrix, v: list[int]) -> IntMatrix:
    """Right-handed Dehn twist on H_1: x -> x + <x, v> v, <u, w> = u^T J w."""
    n = len(j)
    jv = [sum(j[i][k] * v[k] for k in range(n)) for i in range(n)]
    out = identity(n)
    for i in range(n):
        for k in range(n):
            out[i][k] += v[i] * jv[k]
    return out


def is_symplectic(m: IntMatrix, j: IntMatrix) -> bool:
    """m^T J m == J."""
    n = len(j)
    prod = [[sum(m[t][i] * j[t][s] for t in range(n)) for s in range(n)] for i in range(n)]
    full = [[sum(prod[i][t] * m[t][k] for t in range(n)) for k in range(n)] for i in range(n)]
    return full == j


def _rational_solve_kernel(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the kernel of a rational matrix (rows = equations)."""
    if not m:
        return []
    rows, cols = len(m), len(m[0])
    a = [row[:] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -a[ri][fc]
        basis.append(v)
    return basis


def _kashiwara_index(l1, l2, l3, omega) -> int:
    """Signature of q((x1,x2,x3)) = omega(x1, x2) on {xi in Li, sum xi = 0}."""
    n = len(omega)
    ds = (len(l1), len(l2), len(l3))
    eqs = [[Fraction(0)] * sum(ds) for _ in range(n)]
    for i in range(n):
        for a, v in enumerate(l1):
            eqs[i][a] = Fraction(v[i])
        for a, v in enumerate(l2):
            eqs[i][ds[0] + a] = Fraction(v[i])
        for a, v in enumerate(l3):
            eqs[i][ds[0] + ds[1] + a] = Fraction(v[i])
    ker = _rational_solve_kernel(eqs)
    if not ker:
        return 0
    vecs = []
    for c in ker:
        x1 = [sum(c[a] * Fraction(l1[a][i]) for a in range(ds[0])) for i in range(n)]
        x2 = [sum(c[ds[0] + a] * Fraction(l2[a][i]) for a in range(ds[1])) for i in range(n)]
        vecs.append((x1, x2))

    def om(u, v):
        return sum(u[i] * Fraction(omega[i][k]) * v[k] for i in range(n) for k in range(n))

    form = [[om(v1[0], v2[1]) for v2 in vecs] for v1 in vecs]
    sym = [[(form[i][k] + form[k][i]) / 2 for k in range(len(vecs))] for i in range(len(vecs))]
    return form_signature(sym)


def _graph(m: IntMatrix, n: int):
    return [[(1 if i == a else 0) for i in range(n)] + [m[i][a] for i in range(n)] for a in range(n)]


def meyer_cocycle(a: IntMatrix, b: IntMatrix, j: IntMatrix, flip: bool = False) -> int:
    """tau_g(A, B).  `flip` negates the orientation convention (used by the
    calibration gate's negative test)."""
    n = len(j)
    big = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for k in range(n):
            big[i][k] = -j[i][k] if flip else j[i][k]
            big[n + i][n + k] = j[i][k] if flip else -j[i][k]
    return _kashiwara_index(_graph(identity(n), n), _graph(a, n), _graph(mat_mul(a, b), n), big)


def accumulate_signature(word_matrices: list[IntMatrix], local_terms: list[int],
                         j: IntMatrix, flip: bool = False) -> int:
    """Signature of the fibration with monodromy factorization given by
    `word_matrices` in display order (leftmost applied last); the product
    must be the identity."""
    if not word_matrices:
        return 0
    n = len(j)
    total = 0
    prefix = word_matrices[-1]
    for k in range(1, len(word_matrices)):
        t_next = word_matrices[-1 - k]
        total += meyer_cocycle(prefix, t_next, j, flip=flip)
        prefix = mat_mul(t_next, prefix)
    if prefix != identity(n):
        raise ValueError("word is not a relator on H_1; signature undefined")
    return -total + sum(local_terms)

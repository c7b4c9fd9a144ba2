"""Constructions on holed disks: the base case for every shipped model.

Picture: boundary 1 is the outer circle, holes are boundaries 2..n in a row,
basepoint and all whiskers enter from below.  pi_1 is free on the hole
loops; a convex curve around consecutive holes S acts by conjugation by the
left-to-right product of their loops and drags exactly the whiskers of S.
Half-twist lifts between adjacent holes follow the positive braid-generator
convention; arcs between distant holes and curves around non-consecutive
holes are transported by half-twist conjugation.
"""

from __future__ import annotations

from .autos import FreeAut
from .rep import FramedMap
from .surface import NamedArc, NamedCurve, SurfaceModel
from .words import EMPTY, Word, winv, wmul


def disk_model(name: str, nholes: int) -> SurfaceModel:
    """Sigma_0^{nholes+1}: outer boundary 1 with the basepoint, holes
    2..nholes+1 left to right, one framing point per boundary."""
    m = SurfaceModel(name, 0, nholes + 1)
    m.set_generators([f"x{b}" for b in range(2, nholes + 2)])
    m.add_point("u1", 1, tuple(range(1, nholes + 1)))
    for b in range(2, nholes + 2):
        m.add_point(f"u{b}", b, (b - 1,))
    return m


def hole_gen(model: SurfaceModel, b: int) -> int:
    return model.gen_index[f"x{b}"]


def convex_rep(model: SurfaceModel, holes: list[int]) -> FramedMap:
    """Right twist along the convex curve around consecutive `holes`."""
    holes = sorted(holes)
    if holes != list(range(holes[0], holes[-1] + 1)):
        raise ValueError("convex curves need consecutive holes")
    gens = [hole_gen(model, b) for b in holes]
    w = tuple(gens)
    rank, npts = model.rank, model.npts
    images, inv_images = [], []
    for k in range(1, rank + 1):
        if k in gens:
            images.append(wmul(w, (k,), winv(w)))
            inv_images.append(wmul(winv(w), (k,), w))
        else:
            images.append((k,))
            inv_images.append((k,))
    defects: list[Word] = [EMPTY] * npts
    for b in holes:
        for i in model.points_on(b):
            defects[i - 1] = w
    if len(holes) == model.nboundary - 1:
        # outer-parallel curve also drags the extra points on boundary 1
        for i in model.points_on(1):
            if i != 1:
                defects[i - 1] = w
    return FramedMap(npts, tuple(range(1, npts + 1)), FreeAut(rank, tuple(images), tuple(inv_images)), tuple(defects))


def convex_word(model: SurfaceModel, holes: list[int]) -> Word:
    return tuple(hole_gen(model, b) for b in sorted(holes))


def add_convex_curve(model: SurfaceModel, cid: str, holes: list[int],
                     disjoint: tuple[str, ...] = ()) -> NamedCurve:
    w = convex_word(model, holes)
    c = NamedCurve(
        cid, w, model.h1_of_word(w), convex_rep(model, holes),
        boundary=(holes[0] if len(holes) == 1 else (1 if len(holes) == model.nboundary - 1 else None)),
        disjoint=frozenset(disjoint),
    )
    model.curves[cid] = c
    return c


def adjacent_half_twist(model: SurfaceModel, i: int, j: int) -> FramedMap:
    """Positive half-twist lift along the straight arc between the framing
    points of adjacent holes i < j = i + 1."""
    if j != i + 1:
        raise ValueError("adjacent holes only")
    xi, xj = hole_gen(model, i), hole_gen(model, j)
    rank, npts = model.rank, model.npts
    images, inv_images = [], []
    for k in range(1, rank + 1):
        if k == xi:
            images.append((xi, xj, -xi))
            inv_images.append((xj,))
        elif k == xj:
            images.append((xi,))
            inv_images.append((-xj, xi, xj))
        else:
            images.append((k,))
            inv_images.append((k,))
    pi = model.points_on(i)[0]
    pj = model.points_on(j)[0]
    perm = list(range(1, npts + 1))
    perm[pi - 1], perm[pj - 1] = pj, pi
    defects: list[Word] = [EMPTY] * npts
    defects[pi - 1] = (xi,)
    return FramedMap(npts, tuple(perm), FreeAut(rank, tuple(images), tuple(inv_images)), tuple(defects))


def conjugated_map(transporter: FramedMap, base: FramedMap) -> FramedMap:
    """transporter o base o transporter^-1."""
    return transporter.compose(base).compose(transporter.inverse())


def band_curve_rep(model: SurfaceModel, i: int, j: int, sign: int) -> FramedMap:
    """Twist around holes {i, j}, transported below (sign<0) or above the
    holes in between."""
    base = convex_rep(model, [i, i + 1])
    t = FramedMap.identity(model.npts, model.rank)
    for k in range(i + 1, j):
        step = adjacent_half_twist(model, k, k + 1)
        if sign < 0:
            step = step.inverse()
        t = step.compose(t)
    return conjugated_map(t, base)


def arc_between(model: SurfaceModel, i: int, j: int, sign: int) -> FramedMap:
    """Half-twist lift between holes i < j transported below/above."""
    if j == i + 1:
        return adjacent_half_twist(model, i, j)
    t = FramedMap.identity(model.npts, model.rank)
    for k in range(i, j - 1):
        step = adjacent_half_twist(model, k, k + 1)
        if sign < 0:
            step = step.inverse()
        t = step.compose(t)
    return conjugated_map(t, adjacent_half_twist(model, j - 1, j))

"""Exact representation of framed mapping classes.

A mapping class of a compact surface with boundary carrying framing points
p_1..p_m (one or two per boundary component; p_1 is the basepoint) is
represented by the triple

  * perm:    the induced permutation of the framing points,
  * psi:     the action on pi_1(Sigma, p_1) rebased through a fixed whisker
             system w_i: p_1 -> p_i  (w_1 trivial),
  * defects: the loops L_i = w_{perm(1)} . g(w_i) . w_{perm(i)}^{-1}
             recording where each whisker is carried.

Loops and whisker arcs to every boundary fill the surface, so equality of
triples is equality of mapping classes (Alexander method); in particular
boundary twists are detected through their defects even though they act
trivially on pi_1.  Composition laws (g o h, h applied first):

  perm_{gh} = perm_g o perm_h
  psi_{gh}(x) = L^-1 . psi_g(psi_h(x)) . L      with L = L_{perm_h(1)}(g)
  L_i(gh) = L^-1 . psi_g(L_i(h)) . L_{perm_h(i)}(g)

Models that mark only a subset of the framing points use `restrict` to
project the representation onto the surviving points (a group homomorphism
on the classes preserving that subset, still faithful as long as every
boundary keeps a point).
"""

from __future__ import annotations

from dataclasses import dataclass

from .autos import FreeAut
from .words import EMPTY, Word, winv, wmul


@dataclass(frozen=True)
class FramedMap:
    npts: int  # number of framing points
    perm: tuple[int, ...]  # perm[i-1] = image point of point i
    psi: FreeAut
    defects: tuple[Word, ...]  # defects[i-1] = L_i; L_1 is always empty

    def __post_init__(self):
        if len(self.perm) != self.npts or len(self.defects) != self.npts:
            raise ValueError("framing data length mismatch")
        if self.defects[0] != EMPTY:
            raise ValueError("L_1 must be trivial by construction")

    @staticmethod
    def identity(npts: int, rank: int) -> "FramedMap":
        return FramedMap(npts, tuple(range(1, npts + 1)), FreeAut.identity(rank), (EMPTY,) * npts)

    def compose(self, other: "FramedMap") -> "FramedMap":
        """self o other (other applied first)."""
        if self.npts != other.npts or self.psi.rank != other.psi.rank:
            raise ValueError("model mismatch")
        g, h = self, other
        perm = tuple(g.perm[h.perm[i] - 1] for i in range(self.npts))
        ell = g.defects[h.perm[0] - 1]
        psi_gh_images = tuple(wmul(winv(ell), g.psi.apply(im), ell) for im in h.psi.images)
        psi_gh_inv = tuple(
            h.psi.inv_apply(g.psi.inv_apply(wmul(ell, (k,), winv(ell))))
            for k in range(1, self.psi.rank + 1)
        )
        psi = FreeAut(self.psi.rank, psi_gh_images, psi_gh_inv)
        defects = tuple(
            wmul(winv(ell), g.psi.apply(h.defects[i]), g.defects[h.perm[i] - 1])
            for i in range(self.npts)
        )
        return FramedMap(self.npts, perm, psi, defects)

    def inverse(self) -> "FramedMap":
        g = self
        inv_perm = [0] * self.npts
        for i in range(self.npts):
            inv_perm[g.perm[i] - 1] = i + 1
        ell = g.defects[inv_perm[0] - 1]
        images = tuple(g.psi.inv_apply(wmul(ell, (k,), winv(ell))) for k in range(1, self.psi.rank + 1))
        inv_images = tuple(wmul(winv(ell), g.psi.apply((k,)), ell) for k in range(1, self.psi.rank + 1))
        psi = FreeAut(self.psi.rank, images, inv_images)
        defects = tuple(
            g.psi.inv_apply(wmul(ell, winv(g.defects[inv_perm[i] - 1])))
            for i in range(self.npts)
        )
        return FramedMap(self.npts, tuple(inv_perm), psi, defects)

    def power(self, e: int) -> "FramedMap":
        if e == 0:
            return FramedMap.identity(self.npts, self.psi.rank)
        base = self if e > 0 else self.inverse()
        acc = base
        for _ in range(abs(e) - 1):
            acc = base.compose(acc)
        return acc

    def is_identity(self) -> bool:
        return (
            self.perm == tuple(range(1, self.npts + 1))
            and self.psi.is_identity()
            and all(d == EMPTY for d in self.defects)
        )

    def restrict(self, keep: list[int]) -> "FramedMap":
        """Project onto the framing points `keep` (1-based, keep[0] must be
        the basepoint); the class must preserve the subset."""
        if keep[0] != 1:
            raise ValueError("basepoint must be kept")
        pos = {p: i + 1 for i, p in enumerate(keep)}
        for p in keep:
            if self.perm[p - 1] not in pos:
                raise ValueError("class does not preserve the marked subset")
        perm = tuple(pos[self.perm[p - 1]] for p in keep)
        defects = tuple(self.defects[p - 1] for p in keep)
        return FramedMap(len(keep), perm, self.psi, defects)

    def __mul__(self, other: "FramedMap") -> "FramedMap":
        return self.compose(other)


def compose_sequence(maps: list[FramedMap], npts: int, rank: int) -> FramedMap:
    """Compose a display-ordered sequence (leftmost applied last)."""
    acc = FramedMap.identity(npts, rank)
    for m in reversed(maps):
        acc = m.compose(acc)
    return acc

"""Automorphisms of finitely generated free groups.

An automorphism stores the images of the positive generators; the inverse
images are carried alongside so that inversion is O(1) and composition can
track both directions.  Shipped mapping-class data always provides both
sides, so nothing here ever has to solve for an inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, free_reduce, winv, wmul


@dataclass(frozen=True)
class FreeAut:
    rank: int
    images: tuple[Word, ...]
    inv_images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank or len(self.inv_images) != self.rank:
            raise ValueError("image count must equal rank")

    @staticmethod
    def identity(rank: int) -> "FreeAut":
        gens = tuple((i,) for i in range(1, rank + 1))
        return FreeAut(rank, gens, gens)

    @staticmethod
    def from_images(rank: int, images: list[Word], inv_images: list[Word]) -> "FreeAut":
        f = FreeAut(rank, tuple(map(free_reduce, images)), tuple(map(free_reduce, inv_images)))
        for g in range(1, rank + 1):
            if f.apply(f.inv_apply((g,))) != (g,):
                raise ValueError(f"inverse images do not invert on generator {g}")
        return f

    def apply(self, w) -> Word:
        out: list[int] = []
        for x in w:
            img = self.images[x - 1] if x > 0 else winv(self.images[-x - 1])
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)

    def inv_apply(self, w) -> Word:
        out: list[int] = []
        for x in w:
            img = self.inv_images[x - 1] if x > 0 else winv(self.inv_images[-x - 1])
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)

    def compose(self, other: "FreeAut") -> "FreeAut":
        """self o other (other applied first)."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        images = tuple(self.apply(im) for im in other.images)
        inv_images = tuple(other.inv_apply(im) for im in self.inv_images)
        return FreeAut(self.rank, images, inv_images)

    def inverse(self) -> "FreeAut":
        return FreeAut(self.rank, self.inv_images, self.images)

    def is_identity(self) -> bool:
        return all(im == (i + 1,) for i, im in enumerate(self.images))

def inner(rank: int, u: Word) -> FreeAut:
    """Conjugation x -> u x u^-1."""
    images = tuple(wmul(u, (g,), winv(u)) for g in range(1, rank + 1))
    inv_images = tuple(wmul(winv(u), (g,), u) for g in range(1, rank + 1))
    return FreeAut(rank, images, inv_images)


def compose_all(auts: list[FreeAut], rank: int) -> FreeAut:
    """Compose left-to-right as maps: [f1, f2, ...] -> f1 o f2 o ..."""
    acc = FreeAut.identity(rank)
    for f in reversed(auts):
        acc = f.compose(acc)
    return acc

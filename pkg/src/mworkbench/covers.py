"""Lifting framed mapping classes through double covers.

Given a base model, a Z/2 character chi on its free pi_1 (specified on
generators, nonzero on some generator t used as the sheet transversal), and
a set of "branch" holes (chi-odd boundary loops whose preimage is capped by
a disk around the branch point upstairs), this builds the cover's free pi_1
by Reidemeister-Schreier and lifts framed maps exactly.

Every base framing point p acquires two lifts (p, 0), (p, 1) = endpoints of
the lifts of t^s . w_p starting at the sheet-0 basepoint.  For a base class
g fixing the base basepoint, the sheet-0 lift satisfies

    sigma~(p, s) = (sigma(p), s xor chi(L_p(g)))
    psi~ = psi_g restricted to ker(chi), rewritten
    L~_{(p,s)} = rewrite( psi_g(t)^s . L_p(g) . t^{-s'} )

and lifting is a group homomorphism.  The deck transformation is the framed
map with psi = conjugation by t and defects t^{2s} at (p, s).
"""

from __future__ import annotations

from .autos import FreeAut
from .rep import FramedMap
from .surface import SurfaceModel
from .words import EMPTY, Word, free_reduce, winv, wmul, wpow


class CoverError(ValueError):
    pass


class DoubleCover:
    def __init__(self, base: SurfaceModel, chi: dict[str, int], branch: tuple[int, ...] = (),
                 transversal_gen: str | None = None):
        self.base = base
        self.chi = tuple(chi[n] % 2 for n in base.gen_names)
        self.branch = tuple(branch)
        if transversal_gen is None:
            transversal_gen = next(n for n in base.gen_names if chi[n] % 2 == 1)
        self.t_gen = base.gen_index[transversal_gen]
        if self.chi[self.t_gen - 1] != 1:
            raise CoverError("transversal generator must be chi-odd")
        for b in self.branch:
            i = base.points_on(b)[0]
            if self.chi_of(base.peripheral[i]) != 1:
                raise CoverError(f"branch hole {b} needs a chi-odd peripheral loop")
        self._build()

    def chi_of(self, w: Word) -> int:
        return sum(self.chi[abs(x) - 1] for x in w) % 2

    # -- Reidemeister-Schreier --------------------------------------------------

    def _build(self):
        base = self.base
        r = base.rank
        t = self.t_gen
        # raw generators u_{s,x} for s in {0,1}, x in gens; u_{0,t} is trivial
        self._pair_index: dict[tuple[int, int], int] = {}
        self._pair_names: list[tuple[int, int]] = []
        for x in range(1, r + 1):
            for s in (0, 1):
                self._pair_index[(s, x)] = len(self._pair_names) + 1
                self._pair_names.append((s, x))
        elim: dict[int, Word] = {self._pair_index[(0, t)]: EMPTY}

        # branch squares: rewrite(p^2) = 1, eliminate one generator each
        for b in self.branch:
            i = base.points_on(b)[0]
            p = base.peripheral[i]
            w = self._apply_elim(self._rewrite_raw(wmul(p, p)), elim)
            counts: dict[int, int] = {}
            for x in w:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            target = None
            for x in w:
                if counts[abs(x)] == 1 and abs(x) not in elim:
                    target = x
                    break
            if target is None:
                raise CoverError(f"cannot eliminate branch relation for hole {b}")
            k = w.index(target)
            rest = wmul(winv(w[:k]), winv(w[k + 1 :]))
            elim[abs(target)] = rest if target > 0 else winv(rest)

        changed = True
        while changed:
            changed = False
            for k, w in list(elim.items()):
                w2 = free_reduce(self._apply_elim(w, {kk: vv for kk, vv in elim.items() if kk != k}))
                if w2 != w:
                    elim[k] = w2
                    changed = True
        self._elim = elim
        kept = [i for i in range(1, 2 * r + 1) if i not in elim]
        self._kept = kept
        self._final_index = {g: i + 1 for i, g in enumerate(kept)}
        self.rank = len(kept)

        # framing points upstairs: (base point, sheet)
        self.point_pairs: list[tuple[int, int]] = [(1, 0)]
        for p in range(1, base.npts + 1):
            for s in (0, 1):
                if (p, s) == (1, 0):
                    continue
                if base.boundary_of_point(p) in self.branch:
                    continue
                self.point_pairs.append((p, s))
        self.p_index = {ps: i + 1 for i, ps in enumerate(self.point_pairs)}
        self.npts = len(self.point_pairs)

    def _scan_letter(self, s: int, x: int) -> int:
        if x > 0:
            return self._pair_index[(s, x)]
        s2 = (s + self.chi[abs(x) - 1]) % 2
        return -self._pair_index[(s2, abs(x))]

    def _rewrite_raw(self, w: Word) -> Word:
        if self.chi_of(w) != 0:
            raise CoverError("can only rewrite chi-even words")
        out: list[int] = []
        s = 0
        for x in w:
            g = self._scan_letter(s, x)
            out.append(g)
            s = (s + self.chi[abs(x) - 1]) % 2
        return free_reduce(out)

    def _apply_elim(self, w: Word, elim: dict[int, Word]) -> Word:
        out: list[int] = []
        for x in w:
            sub = elim.get(abs(x))
            if sub is None:
                out.append(x)
            else:
                out.extend(sub if x > 0 else winv(sub))
        return free_reduce(out)

    def rewrite(self, w: Word) -> Word:
        raw = self._apply_elim(self._rewrite_raw(w), self._elim)
        return free_reduce(tuple((1 if x > 0 else -1) * self._final_index[abs(x)] for x in raw))

    def gen_base_word(self, gen_i: int) -> Word:
        """Base word of the cover generator: t^s x t^-(s xor chi(x))."""
        s, x = self._pair_names[self._kept[gen_i - 1] - 1]
        s2 = (s + self.chi[x - 1]) % 2
        return wmul((self.t_gen,) * s, (x,), winv((self.t_gen,) * s2))

    # -- lifting --------------------------------------------------------------------

    def lift(self, g: FramedMap) -> FramedMap:
        """The sheet-0-basepoint-fixing lift of a base class fixing point 1."""
        base = self.base
        if g.perm[0] != 1:
            raise CoverError("can only lift classes fixing the base basepoint")
        for k in range(1, base.rank + 1):
            if self.chi_of(g.psi.apply((k,))) != self.chi[k - 1]:
                raise CoverError("class does not preserve the covering character")
        t = (self.t_gen,)
        psi_t = g.psi.apply(t)
        images, inv_images = [], []
        for gen_i in range(1, self.rank + 1):
            bw = self.gen_base_word(gen_i)
            images.append(self.rewrite(g.psi.apply(bw)))
            inv_images.append(self.rewrite(g.psi.inv_apply(bw)))
        psi = FreeAut(self.rank, tuple(images), tuple(inv_images))
        perm = [0] * self.npts
        defects: list[Word] = [EMPTY] * self.npts
        for (p, s), idx in self.p_index.items():
            lb = g.defects[p - 1]
            s2 = (s + self.chi_of(lb)) % 2
            tgt = (g.perm[p - 1], s2)
            if tgt not in self.p_index:
                raise CoverError("lift moves a framing point onto the branch locus")
            perm[idx - 1] = self.p_index[tgt]
            word = wmul(wpow(psi_t, s), lb, winv(wpow(t, s2)))
            defects[idx - 1] = self.rewrite(word)
        return FramedMap(self.npts, tuple(perm), psi, tuple(defects))

    def deck(self) -> FramedMap:
        """The deck transformation (sheet swap) as a framed map."""
        t = (self.t_gen,)
        images, inv_images = [], []
        for gen_i in range(1, self.rank + 1):
            bw = self.gen_base_word(gen_i)
            images.append(self.rewrite(wmul(t, bw, winv(t))))
            inv_images.append(self.rewrite(wmul(winv(t), bw, t)))
        psi = FreeAut(self.rank, tuple(images), tuple(inv_images))
        perm = [0] * self.npts
        defects: list[Word] = [EMPTY] * self.npts
        t2 = self.rewrite(wmul(t, t))
        for (p, s), idx in self.p_index.items():
            perm[idx - 1] = self.p_index[(p, 1 - s)]
            defects[idx - 1] = t2 if s == 1 else EMPTY
        return FramedMap(self.npts, tuple(perm), psi, tuple(defects))

    # -- assembling the cover as a model -----------------------------------------

    def model(self, name: str, genus: int) -> SurfaceModel:
        """Package the covering surface as a SurfaceModel shell (generators,
        framing points, peripherals); the caller adds curves and symplectic
        structure."""
        base = self.base
        # count upstairs boundaries
        upstairs: list[tuple[int, int]] = []  # (base boundary, sheet) or (b, -1) for connected
        for b in range(1, base.nboundary + 1):
            if b in self.branch:
                continue
            i = base.points_on(b)[0]
            if self.chi_of(base.peripheral[i]) == 0:
                upstairs.append((b, 0))
                upstairs.append((b, 1))
            else:
                upstairs.append((b, -1))
        # boundary of the basepoint lift first
        b1 = base.boundary_of_point(1)
        key0 = (b1, 0) if (b1, 0) in upstairs else (b1, -1)
        upstairs.sort(key=lambda x: x != key0)
        self.boundary_pairs = upstairs
        bmap = {bs: i + 1 for i, bs in enumerate(upstairs)}
        m = SurfaceModel(name, genus, len(upstairs))
        m.set_generators([f"g{i}" for i in range(1, self.rank + 1)])
        if m.rank != self.rank:
            raise CoverError(
                f"genus {genus} inconsistent with cover rank {self.rank} and {len(upstairs)} boundaries"
            )
        t = (self.t_gen,)
        for (p, s), idx in sorted(self.p_index.items(), key=lambda kv: kv[1]):
            pname, pb = base.points[p - 1]
            periph = base.peripheral[p]
            if self.chi_of(periph) == 0:
                up_b = bmap[(pb, s)]
                word = self.rewrite(wmul(wpow(t, s), periph, winv(wpow(t, s))))
            else:
                up_b = bmap[(pb, -1)]
                word = self.rewrite(wmul(wpow(t, s), periph, periph, winv(wpow(t, s))))
            m.add_point(f"{pname}s{s}", up_b, word, marked=False)
        return m

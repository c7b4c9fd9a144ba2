"""Surface models: genus, boundary components, marked points, a named
curve/arc/class alphabet with exact action data, and the model file format.

A model fixes a free basis of pi_1 of the bounded surface (rank 2g + n - 1,
basepoint on boundary 1) and a system of framing points, one per boundary
(the marked points u_i of the framed mapping class group, plus unmarked
framing points where a figure leaves a boundary unmarked).  Every alphabet
entry ships its framed action data (point permutation, pi_1 automorphism,
whisker defects; see rep.py).  Bounded H_1 is the abelianization of pi_1 in
the same basis; the intersection form pairs the declared symplectic
generators and kills boundary classes.  Loaders validate the transvection
identity and declared-disjointness commutation for every curve.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass

from .autos import FreeAut
from .matrices import IntMatrix, identity
from .meyer import symplectic_j, transvection
from .rep import FramedMap
from .words import EMPTY, Word, exponent_sum, format_word, free_reduce, parse_word, winv, wmul


class ModelError(ValueError):
    pass


@dataclass
class NamedCurve:
    id: str
    pi1_word: Word
    h1: list[int]  # bounded class = abelianization of pi1_word
    rep: FramedMap  # right-handed Dehn twist
    boundary: int | None = None  # set if boundary-parallel
    disjoint: frozenset = frozenset()


@dataclass
class NamedArc:
    id: str
    ends: tuple[str, str]  # framing point names of the endpoints
    rep: FramedMap  # positive half-twist lift
    square_text: str = ""  # display token word equal to rep**2


@dataclass
class NamedClass:
    id: str
    rep: FramedMap | None  # None when no pi_1 data is shipped
    h1cap: IntMatrix  # action on capped H_1
    order: int | None = None


@dataclass
class LiftedTwist:
    """Lifted critical twist along `curve`, swapping the marked points
    `swaps`; `expansion_text` is the display token word (boundary twist
    inverse, interior twist, half-twist lift) the lift equals."""

    id: str
    curve: str
    swaps: tuple[str, str]
    expansion_text: str


# --- curve expressions -------------------------------------------------------


@dataclass(frozen=True)
class Named:
    id: str


@dataclass(frozen=True)
class Image:
    conjugator: tuple  # parsed token word, display order
    base: "CurveExpr"


CurveExpr = Named | Image


class SurfaceModel:
    def __init__(self, name: str, genus: int, nboundary: int):
        if genus < 0 or nboundary < 1:
            raise ModelError("need genus >= 0 and at least one boundary")
        self.name = name
        self.genus = genus
        self.nboundary = nboundary
        self.rank = 2 * genus + nboundary - 1
        self.gen_names: list[str] = []
        self.gen_index: dict[str, int] = {}
        self.sympl_x: list[str] = []
        self.sympl_y: list[str] = []
        self.points: list[tuple[str, int]] = []  # (point name, boundary); [0] is the basepoint
        self.point_index: dict[str, int] = {}
        self.marked: dict[str, int] = {}  # marked point name -> boundary
        self.peripheral: dict[int, Word] = {}  # point idx -> based peripheral word
        self.cap_words: dict[str, Word] = {}  # gen -> word in capped generators
        self.curves: dict[str, NamedCurve] = {}
        self.arcs: dict[str, NamedArc] = {}
        self.classes: dict[str, NamedClass] = {}
        self.lifts: dict[str, LiftedTwist] = {}
        self.provenance: str = ""

    # -- structure ------------------------------------------------------------

    def set_generators(self, names: list[str]):
        if len(names) != self.rank:
            raise ModelError(f"model {self.name}: need {self.rank} generators, got {len(names)}")
        self.gen_names = list(names)
        self.gen_index = {n: i + 1 for i, n in enumerate(names)}

    def add_point(self, name: str, boundary: int, peripheral: Word, marked: bool = True):
        self.points.append((name, boundary))
        idx = len(self.points)
        self.point_index[name] = idx
        self.peripheral[idx] = peripheral
        if marked:
            self.marked[name] = boundary
        return idx

    @property
    def npts(self) -> int:
        return len(self.points)

    def word(self, text: str) -> Word:
        return parse_word(text, self.gen_index)

    def word_text(self, w: Word) -> str:
        return format_word(w, self.gen_names)

    def boundary_of_point(self, idx: int) -> int:
        return self.points[idx - 1][1]

    def points_on(self, b: int) -> list[int]:
        return [i + 1 for i, (_, pb) in enumerate(self.points) if pb == b]

    @property
    def capped_rank(self) -> int:
        return 2 * self.genus

    def cap_word(self, w: Word) -> Word:
        out: list[int] = []
        for x in w:
            img = self.cap_words[self.gen_names[abs(x) - 1]]
            out.extend(img if x > 0 else winv(img))
        return free_reduce(out)

    def closed_relator(self) -> Word:
        g = self.genus
        w: list[int] = []
        for i in range(g):
            x, y = i + 1, g + i + 1
            w += [x, y, -x, -y]
        return tuple(w)

    def j_bounded(self) -> IntMatrix:
        n = self.rank
        j = [[0] * n for _ in range(n)]
        g = self.genus
        for i in range(g):
            xi = self.gen_index[self.sympl_x[i]] - 1
            yi = self.gen_index[self.sympl_y[i]] - 1
            j[xi][yi] = -1
            j[yi][xi] = 1
        return j

    def cap_matrix(self) -> IntMatrix:
        rows = []
        for name in self.sympl_x + self.sympl_y:
            row = [0] * self.rank
            row[self.gen_index[name] - 1] = 1
            rows.append(row)
        return rows

    def capped_class(self, h1: list[int]) -> list[int]:
        cap = self.cap_matrix()
        return [sum(cap[i][k] * h1[k] for k in range(self.rank)) for i in range(self.capped_rank)]

    def h1_of_word(self, w: Word) -> list[int]:
        return exponent_sum(w, self.rank)

    def identity_map(self) -> FramedMap:
        return FramedMap.identity(self.npts, self.rank)

    def boundary_twist_rep(self, b: int) -> FramedMap:
        """Right twist along a curve parallel to boundary b."""
        if b < 1 or b > self.nboundary:
            raise ModelError(f"no boundary {b}")
        defects = [EMPTY] * self.npts
        psi = FreeAut.identity(self.rank)
        if b == self.points[0][1]:
            d = self.peripheral[1]
            psi = FreeAut(
                self.rank,
                tuple(wmul(d, (k,), winv(d)) for k in range(1, self.rank + 1)),
                tuple(wmul(winv(d), (k,), d) for k in range(1, self.rank + 1)),
            )
            for i in range(2, self.npts + 1):
                defects[i - 1] = d
            # further points on the basepoint boundary get the local word
            for i in self.points_on(b):
                if i != 1:
                    defects[i - 1] = self.peripheral[i]
        else:
            for i in self.points_on(b):
                defects[i - 1] = self.peripheral[i]
        return FramedMap(self.npts, tuple(range(1, self.npts + 1)), psi, tuple(defects))

    # -- validation -------------------------------------------------------------

    def validate(self):
        j = self.j_bounded()
        g = self.genus
        if g:
            sub = symplectic_j(g)
            idx = [self.gen_index[n] - 1 for n in self.sympl_x + self.sympl_y]
            for a, ia in enumerate(idx):
                for b, ib in enumerate(idx):
                    if j[ia][ib] != sub[a][b]:
                        raise ModelError(f"{self.name}: symplectic block of J is not standard")
        covered = {pb for _, pb in self.points}
        if covered != set(range(1, self.nboundary + 1)):
            raise ModelError(f"{self.name}: every boundary needs a framing point")
        total = [0] * self.rank
        for b in range(1, self.nboundary + 1):
            i = self.points_on(b)[0]
            for k, v in enumerate(self.h1_of_word(self.peripheral[i])):
                total[k] += v
        if any(total):
            raise ModelError(f"{self.name}: peripheral classes do not sum to zero")
        for c in self.curves.values():
            self._validate_curve(c, j)
        for a in self.arcs.values():
            b0 = self.marked.get(a.ends[0]) or self.boundary_of_point(self.point_index[a.ends[0]])
            b1 = self.marked.get(a.ends[1]) or self.boundary_of_point(self.point_index[a.ends[1]])
            if b0 == b1:
                raise ModelError(f"{self.name}: arc {a.id} endpoints on one boundary")
        for c in self.curves.values():
            for other_id in c.disjoint:
                o = self.curves[other_id]
                if c.rep.compose(o.rep) != o.rep.compose(c.rep):
                    raise ModelError(
                        f"{self.name}: twists along {c.id},{o.id} declared disjoint but do not commute"
                    )

    def _validate_curve(self, c: NamedCurve, j: IntMatrix):
        if c.h1 != self.h1_of_word(c.pi1_word):
            raise ModelError(f"{self.name}: curve {c.id}: h1 class differs from abelianized pi1 word")
        n = self.rank
        expected = transvection(j, c.h1)
        actual = [[0] * n for _ in range(n)]
        for k in range(1, n + 1):
            img = exponent_sum(c.rep.psi.apply((k,)), n)
            for i in range(n):
                actual[i][k - 1] = img[i]
        if actual != expected:
            raise ModelError(f"{self.name}: curve {c.id}: twist does not abelianize to the transvection")
        if c.boundary is not None and any(self.capped_class(c.h1)):
            raise ModelError(f"{self.name}: curve {c.id}: boundary-parallel but capped class nonzero")

    # -- serialization ------------------------------------------------------------

    def serialize(self) -> str:
        out = io.StringIO()
        w = out.write
        w(f"[surface]\nname = {self.name}\ngenus = {self.genus}\nboundaries = {self.nboundary}\n")
        if self.provenance:
            w(f"provenance = {self.provenance}\n")
        w(f"gens = {' '.join(self.gen_names)}\n")
        if self.sympl_x:
            w(f"sympl.x = {' '.join(self.sympl_x)}\n")
            w(f"sympl.y = {' '.join(self.sympl_y)}\n")
        for i, (pname, pb) in enumerate(self.points, start=1):
            mk = " marked" if pname in self.marked else ""
            w(f"point.{pname} = {pb} {self.word_text(self.peripheral[i])}{mk}\n")
        for name in self.gen_names:
            if name in self.cap_words and self.cap_words[name] != EMPTY:
                w(f"cap.{name} = {format_word(self.cap_words[name], self.sympl_x + self.sympl_y)}\n")
        for c in sorted(self.curves.values(), key=lambda c: c.id):
            w(f"\n[curve {c.id}]\n")
            w(f"pi1 = {self.word_text(c.pi1_word)}\n")
            w(f"h1 = {' '.join(map(str, c.h1))}\n")
            if c.boundary is not None:
                w(f"boundary = {c.boundary}\n")
            if c.disjoint:
                w(f"disjoint = {' '.join(sorted(c.disjoint))}\n")
            self._write_rep(w, c.rep)
        for a in sorted(self.arcs.values(), key=lambda a: a.id):
            w(f"\n[arc {a.id}]\n")
            w(f"ends = {a.ends[0]} {a.ends[1]}\n")
            if a.square_text:
                w(f"square = {a.square_text}\n")
            self._write_rep(w, a.rep)
        for cl in sorted(self.classes.values(), key=lambda c: c.id):
            w(f"\n[class {cl.id}]\n")
            if cl.order:
                w(f"order = {cl.order}\n")
            for row in cl.h1cap:
                w(f"h1cap = {' '.join(map(str, row))}\n")
            if cl.rep is not None:
                self._write_rep(w, cl.rep)
        for lt in sorted(self.lifts.values(), key=lambda l: l.id):
            w(f"\n[lift {lt.id}]\n")
            w(f"curve = {lt.curve}\n")
            w(f"swaps = {lt.swaps[0]} {lt.swaps[1]}\n")
            w(f"expansion = {lt.expansion_text}\n")
        return out.getvalue()

    def _write_rep(self, w, rep: FramedMap):
        if rep.perm != tuple(range(1, self.npts + 1)):
            w(f"perm = {' '.join(map(str, rep.perm))}\n")
        for k, name in enumerate(self.gen_names, start=1):
            img = rep.psi.images[k - 1]
            if img != (k,):
                w(f"twist.{name} = {self.word_text(img)}\n")
        for k, name in enumerate(self.gen_names, start=1):
            img = rep.psi.inv_images[k - 1]
            if img != (k,):
                w(f"twistinv.{name} = {self.word_text(img)}\n")
        for i in range(2, self.npts + 1):
            if rep.defects[i - 1] != EMPTY:
                w(f"defect.{self.points[i - 1][0]} = {self.word_text(rep.defects[i - 1])}\n")


def _strip(line: str) -> str:
    return line.split(";")[0].strip()


def load_surface_model(text: str) -> SurfaceModel:
    """Parse and validate a model file; diagnostics carry line numbers."""
    sections: list[tuple[str, str, dict, int]] = []
    current: dict | None = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        m = re.match(r"\[(\w+)(?:\s+(\S+))?\]$", line)
        if m:
            current = {}
            sections.append((m.group(1), m.group(2) or "", current, ln))
            continue
        if current is None:
            raise ModelError(f"line {ln}: content before any section")
        if "=" not in line:
            raise ModelError(f"line {ln}: expected key = value")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key in current:
            current[key] = current[key] + "\n" + val
        else:
            current[key] = val

    surf = [s for s in sections if s[0] == "surface"]
    if len(surf) != 1:
        raise ModelError("model file needs exactly one [surface] section")
    _, _, head, ln0 = surf[0]
    try:
        model = SurfaceModel(head["name"], int(head["genus"]), int(head["boundaries"]))
    except KeyError as e:
        raise ModelError(f"line {ln0}: missing surface key {e}")
    model.set_generators(head["gens"].split())
    model.provenance = head.get("provenance", "")
    if "sympl.x" in head:
        model.sympl_x = head["sympl.x"].split()
        model.sympl_y = head["sympl.y"].split()
    for key, val in head.items():
        if key.startswith("point."):
            pname = key.split(".", 1)[1]
            parts = val.split()
            marked = parts[-1] == "marked"
            if marked:
                parts = parts[:-1]
            b = int(parts[0])
            wtext = " ".join(parts[1:])
            model.add_point(pname, b, model.word(wtext) if wtext != "1" else EMPTY, marked=marked)
    for key, val in head.items():
        if key.startswith("cap."):
            gen = key.split(".", 1)[1]
            capped_names = model.sympl_x + model.sympl_y
            model.cap_words[gen] = (
                parse_word(val, {n: i + 1 for i, n in enumerate(capped_names)}) if val != "1" else EMPTY
            )
    for gen in model.gen_names:
        model.cap_words.setdefault(gen, EMPTY)

    def read_rep(entries: dict, ln: int) -> FramedMap:
        rank, npts = model.rank, model.npts
        perm = tuple(int(x) for x in entries["perm"].split()) if "perm" in entries else tuple(range(1, npts + 1))
        images, inv_images = [], []
        for k, name in enumerate(model.gen_names, start=1):
            images.append(model.word(entries[f"twist.{name}"]) if f"twist.{name}" in entries else (k,))
            inv_images.append(model.word(entries[f"twistinv.{name}"]) if f"twistinv.{name}" in entries else (k,))
        defects = [EMPTY] * npts
        for i in range(2, npts + 1):
            key = f"defect.{model.points[i - 1][0]}"
            if key in entries:
                defects[i - 1] = model.word(entries[key])
        try:
            psi = FreeAut.from_images(rank, images, inv_images)
        except ValueError as e:
            raise ModelError(f"line {ln}: bad automorphism data: {e}")
        return FramedMap(npts, perm, psi, tuple(defects))

    seen: set[str] = set()
    for kind, name, entries, ln in sections:
        if kind == "surface":
            continue
        if name in seen:
            raise ModelError(f"line {ln}: duplicate id {name!r}")
        seen.add(name)
        if kind == "curve":
            rep = read_rep(entries, ln)
            w = model.word(entries["pi1"]) if entries.get("pi1", "1") != "1" else EMPTY
            h1 = [int(x) for x in entries["h1"].split()] if "h1" in entries else model.h1_of_word(w)
            model.curves[name] = NamedCurve(
                name, w, h1, rep,
                boundary=int(entries["boundary"]) if "boundary" in entries else None,
                disjoint=frozenset(entries.get("disjoint", "").split()),
            )
        elif kind == "arc":
            ends = tuple(entries["ends"].split())
            model.arcs[name] = NamedArc(name, ends, read_rep(entries, ln), entries.get("square", ""))
        elif kind == "class":
            h1cap = (
                [[int(x) for x in row.split()] for row in entries["h1cap"].split("\n")]
                if entries.get("h1cap")
                else identity(model.capped_rank)
            )
            rep = read_rep(entries, ln) if any(k.startswith("twist.") or k == "perm" for k in entries) else None
            model.classes[name] = NamedClass(name, rep, h1cap, int(entries["order"]) if "order" in entries else None)
        elif kind == "lift":
            model.lifts[name] = LiftedTwist(
                name, entries["curve"], tuple(entries["swaps"].split()), entries["expansion"]
            )
        else:
            raise ModelError(f"line {ln}: unknown section [{kind}]")
    model.validate()
    return model

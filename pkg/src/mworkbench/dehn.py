"""Word problem in closed surface groups of genus >= 2 via Dehn's algorithm.

The genus-g relator (product of g commutators) satisfies C'(1/6), so greedy
replacement of any subword longer than half of a cyclic conjugate of the
relator (or its inverse) by the shorter complement decides triviality.
Deterministic strategy: scan left to right, apply the first longest
replacement found.
"""

from __future__ import annotations

from .words import Word, cyclic_reduce, free_reduce, winv, wmul


def surface_relator(genus: int) -> Word:
    """[x1,y1][x2,y2]...[xg,yg] on generators x_i=2i-1, y_i=2i."""
    w: list[int] = []
    for i in range(genus):
        x, y = 2 * i + 1, 2 * i + 2
        w += [x, y, -x, -y]
    return tuple(w)


class DehnReducer:
    def __init__(self, relator: Word):
        relator = cyclic_reduce(relator)
        if len(relator) < 8:
            raise ValueError("relator too short: need genus >= 2 surface relator")
        self.relator = relator
        self.length = len(relator)
        self.half = self.length // 2
        # all cyclic rotations of r and r^-1, each paired with its complement:
        # if rotation = u * v with len(u) > half, then u == (v)^-1 in the group.
        self._table: dict[Word, Word] = {}
        for base in (relator, winv(relator)):
            n = len(base)
            for i in range(n):
                rot = base[i:] + base[:i]
                # store replacements for prefixes u of rot with len > half
                for lu in range(self.half + 1, n + 1):
                    u = rot[:lu]
                    v = rot[lu:]
                    cand = winv(v)
                    if u not in self._table or len(cand) < len(self._table[u]):
                        self._table[u] = cand
        self._max_len = max(len(u) for u in self._table)

    def _replace_once(self, w: Word) -> Word | None:
        """First longest >half-relator subword of the cyclic word, replaced.

        Scans the doubled word so replacements may straddle the wrap-around.
        """
        n = len(w)
        dbl = w + w
        for start in range(n):
            for lu in range(min(self._max_len, n), self.half, -1):
                u = dbl[start : start + lu]
                if len(u) < lu:
                    continue
                v = self._table.get(u)
                if v is not None:
                    if start + lu <= n:
                        return free_reduce(w[:start] + v + w[start + lu :])
                    # wrapped subword: rotate so it becomes initial, replace
                    rot = w[start:] + w[:start]
                    return free_reduce(v + rot[lu:])
        return None

    def reduce(self, w) -> Word:
        """Dehn-reduced representative (freely and cyclically reduced between
        replacement passes).  Empty iff w is trivial in the surface group."""
        w = cyclic_reduce(free_reduce(w))
        while True:
            w2 = self._replace_once(w)
            if w2 is None:
                return w
            w = cyclic_reduce(w2)

    def is_trivial(self, w) -> bool:
        return len(self.reduce(w)) == 0

    def equal(self, a, b) -> bool:
        return self.is_trivial(wmul(a, winv(b)))

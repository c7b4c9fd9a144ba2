"""Todd-Coxeter coset enumeration (HLT with coincidence processing).

Enumerates cosets of the trivial subgroup of a finitely presented group,
certifying finite order when the table closes within a node cap.  Used to
certify trivial and Z/2 fundamental-group verdicts; callers treat a hit cap
as "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word


@dataclass
class EnumerationResult:
    closed: bool
    order: int | None
    cosets_defined: int


class _Table:
    def __init__(self, ngens: int, cap: int):
        self.ngens = ngens
        self.cap = cap
        self.rows: list[list[int | None]] = [[None] * (2 * ngens)]
        self.parent = [0]
        self.defined = 1
        self.version = 0

    @staticmethod
    def col(x: int) -> int:
        return 2 * (abs(x) - 1) + (0 if x > 0 else 1)

    def rep(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def get(self, a: int, x: int) -> int | None:
        v = self.rows[a][self.col(x)]
        return None if v is None else self.rep(v)

    def _set(self, a: int, x: int, b: int, pending: list[tuple[int, int]]):
        cur = self.get(a, x)
        if cur is None:
            self.rows[a][self.col(x)] = b
            self.version += 1
        elif cur != b:
            pending.append((cur, b))
        cur2 = self.get(b, -x)
        if cur2 is None:
            self.rows[b][self.col(-x)] = a
            self.version += 1
        elif cur2 != a:
            pending.append((cur2, a))

    def connect(self, a: int, x: int, b: int):
        pending: list[tuple[int, int]] = []
        self._set(a, x, b, pending)
        self._drain(pending)

    def _drain(self, pending: list[tuple[int, int]]):
        while pending:
            a, b = pending.pop()
            a, b = self.rep(a), self.rep(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.parent[b] = a
            self.version += 1
            row = self.rows[b]
            for c in range(2 * self.ngens):
                d = row[c]
                if d is None:
                    continue
                x = (c // 2 + 1) * (1 if c % 2 == 0 else -1)
                self._set(a, x, self.rep(d), pending)

    def new_coset(self, a: int, x: int) -> int:
        if self.defined >= self.cap:
            raise OverflowError("coset cap exceeded")
        b = len(self.rows)
        self.rows.append([None] * (2 * self.ngens))
        self.parent.append(b)
        self.defined += 1
        self.version += 1
        self.rows[a][self.col(x)] = b
        self.rows[b][self.col(-x)] = a
        return b

    def scan(self, a: int, word: Word):
        """Forward/backward scan of `word` at coset a; deduce or fill one gap
        at a time (classical HLT scan-and-fill)."""
        n = len(word)
        if n == 0:
            return
        while True:
            a0 = self.rep(a)
            f, i = a0, 0
            while i < n:
                nxt = self.get(f, word[i])
                if nxt is None:
                    break
                f, i = nxt, i + 1
            if i == n:
                if f != a0:
                    self._drain([(f, a0)])
                return
            b, j = a0, n
            while j > i:
                prv = self.get(b, -word[j - 1])
                if prv is None:
                    break
                b, j = prv, j - 1
            if j == i + 1:
                self.connect(f, word[i], b)
                return
            if j == i:
                if f != b:
                    self._drain([(f, b)])
                return
            self.new_coset(f, word[i])


def coset_enumeration(ngens: int, relators: list[Word], cap: int = 100_000) -> EnumerationResult:
    t = _Table(ngens, cap)
    try:
        while True:
            before = t.version, len(t.rows)
            i = 0
            while i < len(t.rows):
                if t.rep(i) == i:
                    for rel in relators:
                        if t.rep(i) != i:
                            break
                        t.scan(i, rel)
                i += 1
            # fill holes so every generator acts everywhere
            for a in range(len(t.rows)):
                if t.rep(a) != a:
                    continue
                for c in range(2 * t.ngens):
                    if t.rows[a][c] is None and t.rep(a) == a:
                        x = (c // 2 + 1) * (1 if c % 2 == 0 else -1)
                        if t.get(a, x) is None:
                            t.new_coset(a, x)
            if (t.version, len(t.rows)) == before:
                break
    except OverflowError:
        return EnumerationResult(False, None, t.defined)
    live = sum(1 for a in range(len(t.rows)) if t.rep(a) == a)
    return EnumerationResult(True, live, t.defined)

"""Freely reduced words in a finitely generated free group.

A word is a tuple of nonzero ints: ``k`` means the k-th generator (1-based),
``-k`` its inverse.  All public functions return words in reduced normal form
(no adjacent cancelling pair), which makes equality testing plain tuple
equality.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs; unique normal form."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a valid letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def wmul(*ws: Sequence[int]) -> Word:
    """Concatenate words and reduce."""
    out: list[int] = []
    for w in ws:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def winv(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def wpow(w: Sequence[int], n: int) -> Word:
    if n == 0:
        return EMPTY
    base = tuple(w) if n > 0 else winv(w)
    out: Word = EMPTY
    for _ in range(abs(n)):
        out = wmul(out, base)
    return out


def conj(u: Sequence[int], w: Sequence[int]) -> Word:
    """u w u^-1, reduced."""
    return wmul(u, w, winv(u))


def cyclic_reduce(w: Sequence[int]) -> Word:
    """Strip matching prefix/suffix inverse pairs."""
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return tuple(w[i:j])


def cyclic_rotations(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(max(1, len(w)))]


def exponent_sum(w: Sequence[int], rank: int) -> list[int]:
    """Abelianization of w as a vector of length rank."""
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def parse_word(text: str, gen_index: dict[str, int]) -> Word:
    """Parse ``a b^-1 c^2``-style token text against a generator-name table."""
    letters: list[int] = []
    for tok in text.split():
        name, _, exp = tok.partition("^")
        if name not in gen_index:
            raise KeyError(f"unknown generator {name!r}")
        e = int(exp) if exp else 1
        g = gen_index[name]
        letters.extend([g if e > 0 else -g] * abs(e))
    return free_reduce(letters)


def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    """Inverse of parse_word, with runs collapsed to powers."""
    if not w:
        return "1"
    toks: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = (j - i) if w[i] > 0 else -(j - i)
        name = names[abs(w[i]) - 1]
        toks.append(name if n == 1 else f"{name}^{n}")
        i = j
    return " ".join(toks)

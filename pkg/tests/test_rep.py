import random

from mworkbench.autos import FreeAut, inner
from mworkbench.rep import FramedMap, compose_sequence
from mworkbench.words import free_reduce


def random_framed(rng, nb, rank):
    """Random framed map: random permutation, random inner psi, random defects."""
    perm = list(range(1, nb + 1))
    rng.shuffle(perm)
    u = free_reduce([rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 4))])
    psi = inner(rank, u)
    defects = [()] + [
        free_reduce([rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 4))])
        for _ in range(nb - 1)
    ]
    return FramedMap(nb, tuple(perm), psi, tuple(defects))


def test_rep_group_laws():
    rng = random.Random(42)
    nb, rank = 4, 2
    ident = FramedMap.identity(nb, rank)
    for _ in range(100):
        g = random_framed(rng, nb, rank)
        h = random_framed(rng, nb, rank)
        k = random_framed(rng, nb, rank)
        assert g.compose(ident) == g
        assert ident.compose(g) == g
        assert g.compose(g.inverse()).is_identity()
        assert g.inverse().compose(g).is_identity()
        assert g.compose(h.compose(k)) == g.compose(h).compose(k)
        assert g.compose(h).inverse() == h.inverse().compose(g.inverse())


def test_rep_power_and_sequence():
    rng = random.Random(9)
    g = random_framed(rng, 3, 2)
    assert g.power(0).is_identity()
    assert g.power(3) == g.compose(g).compose(g)
    assert g.power(-2) == g.inverse().compose(g.inverse())
    h = random_framed(rng, 3, 2)
    # display order [g, h]: h applied first
    assert compose_sequence([g, h], 3, 2) == g.compose(h)

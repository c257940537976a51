import itertools
import random

import pytest

from hwbcirc.perm import Permutation, canonical_5_cycle, conjugator_to_canonical


def test_from_cycle_basic():
    p = Permutation.from_cycle((0, 1, 2), 3)
    assert p.image == (1, 2, 0)


def test_from_cycle_empty_is_identity():
    assert Permutation.from_cycle((), 4) == Permutation.identity(4)


def test_five_cycle_has_order_five():
    p = Permutation.from_cycle((1, 2, 3, 4, 5), 6)
    q = p
    for _ in range(4):
        q = q.then(p)
    assert q == Permutation.identity(6)
    assert p.order() == 5


def test_from_cycle_rejects_duplicates_and_range():
    with pytest.raises(ValueError):
        Permutation.from_cycle((0, 1, 0), 3)
    with pytest.raises(ValueError):
        Permutation.from_cycle((0, 5), 3)


def test_compose_convention_matches_transposition_pair_identity():
    # (0,1)(2,3) as the left-to-right product of two 5-cycles
    a = Permutation.from_cycle((2, 0, 3, 4, 1), 5)
    b = Permutation.from_cycle((4, 2, 0, 3, 1), 5)
    want = Permutation.from_cycle((0, 1), 5).then(Permutation.from_cycle((2, 3), 5))
    assert a.then(b) == want


def test_compose_identity_laws_and_inverse():
    rng = random.Random(11)
    for _ in range(50):
        k = rng.randint(1, 10)
        image = list(range(k))
        rng.shuffle(image)
        p = Permutation(image)
        e = Permutation.identity(k)
        assert p.then(e) == p
        assert e.then(p) == p
        assert p.then(p.inverse()) == e
        assert p.inverse().then(p) == e


def test_compose_is_associative():
    rng = random.Random(13)
    for _ in range(100):
        k = rng.randint(2, 10)
        perms = []
        for _ in range(3):
            image = list(range(k))
            rng.shuffle(image)
            perms.append(Permutation(image))
        a, b, c = perms
        assert a.then(b).then(c) == a.then(b.then(c))


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        Permutation.identity(3).then(Permutation.identity(4))


def test_conjugator_spec_example():
    # sigma = (1,4,3,2,5) in 1-based labels
    sigma = Permutation.from_cycle((0, 3, 2, 1, 4), 5)
    theta = conjugator_to_canonical(sigma)
    # theta(2)=4, theta(3)=3, theta(4)=2, theta(5)=5, theta(1)=1, 1-based
    assert theta.image == (0, 3, 2, 1, 4)
    assert canonical_5_cycle().relabel(theta) == sigma


def test_conjugator_all_24_five_cycles():
    rho = canonical_5_cycle()
    count = 0
    for rest in itertools.permutations((1, 2, 3, 4)):
        sigma = Permutation.from_cycle((0,) + rest, 5)
        theta = conjugator_to_canonical(sigma)
        assert rho.relabel(theta) == sigma
        count += 1
    assert count == 24


def test_conjugator_rejects_non_five_cycles():
    with pytest.raises(ValueError):
        conjugator_to_canonical(Permutation.identity(5))
    with pytest.raises(ValueError):
        conjugator_to_canonical(Permutation.from_cycle((0, 1), 5))


def test_relabel_is_an_automorphism():
    rng = random.Random(17)
    for _ in range(50):
        imgs = []
        for _ in range(3):
            image = list(range(5))
            rng.shuffle(image)
            imgs.append(Permutation(image))
        p, q, theta = imgs
        assert p.then(q).relabel(theta) == p.relabel(theta).then(q.relabel(theta))


def test_cycles_roundtrip():
    rng = random.Random(19)
    for _ in range(50):
        k = rng.randint(1, 12)
        image = list(range(k))
        rng.shuffle(image)
        p = Permutation(image)
        rebuilt = Permutation.identity(k)
        for cyc in p.cycles():
            rebuilt = rebuilt.then(Permutation.from_cycle(cyc, k))
        assert rebuilt == p

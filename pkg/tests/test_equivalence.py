import itertools
import random

import pytest

from hadamat import constructions as C
from hadamat.cyclotomic import root_of_unity
from hadamat.equivalence import (
    EquivalenceWitness,
    UnsupportedDimensionError,
    apply_transform,
    canonical_fingerprint,
    equiv,
    identity_witness,
    replay,
)
from hadamat.matrix import CycloMatrix, DimensionMismatchError, MatrixError, is_hadamard


def f4_family(k):
    """F4 with the affine parameter exp(2 pi i k / 60); distinct k in [0, 30) are inequivalent."""
    return CycloMatrix.from_exponents([
        [0, 0, 0, 0],
        [0, 15 + k, 30, 45 + k],
        [0, 30, 0, 30],
        [0, 45 + k, 30, 15 + k],
    ], 60)


def random_transform(h, rng):
    n = h.dim
    p1, p2 = list(range(n)), list(range(n))
    rng.shuffle(p1)
    rng.shuffle(p2)
    d1 = [root_of_unity(60, rng.randrange(60)) for _ in range(n)]
    d2 = [root_of_unity(60, rng.randrange(60)) for _ in range(n)]
    return apply_transform(h, p1, p2, d1, d2)


def test_family_members_are_hadamard():
    assert is_hadamard(f4_family(0)) and is_hadamard(f4_family(5))


def test_reflexive_with_identity_witness():
    h = C.get("D_2")
    v = equiv(h, h)
    assert v.equivalent and replay(v.witness, h, h)
    assert replay(identity_witness(h), h, h)


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("use_numba", [True, False])
def test_random_transform_is_found(seed, use_numba):
    rng = random.Random(seed)
    h = C.get("F_5")
    g = random_transform(h, rng)
    v = equiv(h, g, use_numba=use_numba)
    assert v.equivalent and replay(v.witness, h, g)


def test_inequivalent_exhaustive():
    v = equiv(f4_family(0), f4_family(5), exhaustive=True)
    assert not v.equivalent
    assert v.pairs_examined == 576 and v.matching_pairs == 0
    v2 = equiv(f4_family(0), f4_family(5))
    assert v2.pairs_examined == 576


def test_prefilter_is_opt_in():
    a, b = f4_family(0), f4_family(5)
    assert canonical_fingerprint(a) != canonical_fingerprint(b)
    v = equiv(a, b, prefilter=True)
    assert not v.equivalent and v.prefiltered and v.pairs_examined == 0


def test_fingerprint_invariant():
    rng = random.Random(1)
    h = C.get("D_3")
    assert canonical_fingerprint(h) == canonical_fingerprint(random_transform(h, rng))


def test_backends_agree_on_counts():
    h, g = C.get("F_5"), C.get("D_4")
    a = equiv(h, g, exhaustive=True, use_numba=True)
    b = equiv(h, g, exhaustive=True, use_numba=False)
    assert (a.matching_pairs, a.pairs_examined, a.witness) == (b.matching_pairs, b.pairs_examined, b.witness)


def test_non_butson_uses_exact_scan():
    # (3 + 4i) / 5 is unimodular but not a root of unity
    u = (3 + 4 * root_of_unity(60, 15)) / 5
    assert u.is_unimodular()
    h = C.get("F_3")
    one = root_of_unity(60, 0)
    g = apply_transform(h, [1, 0, 2], [0, 2, 1], [u, one, one], None)
    v = equiv(h, g)
    assert v.equivalent and v.backend == "exact"
    assert replay(v.witness, h, g)


def test_guards():
    with pytest.raises(DimensionMismatchError):
        equiv(C.get("F_3"), C.get("F_5"))
    f6 = C.fourier(6, 60)
    with pytest.raises(UnsupportedDimensionError):
        equiv(f6, f6)
    j = CycloMatrix.from_rows([[1, 1], [1, 1]], 60)
    with pytest.raises(MatrixError):
        equiv(j, C.get("F_2"))


def test_replay_rejects_wrong_witness():
    h = C.get("F_3")
    one = root_of_unity(60, 0)
    w = EquivalenceWitness((0, 1, 2), (0, 1, 2), (one,) * 3, (root_of_unity(60, 1), one, one))
    assert not replay(w, h, h)


def test_equivalence_relation_pattern():
    mats = {"F_4(0)": f4_family(0), "F_4(5)": f4_family(5), "F_4(10)": f4_family(10),
            "T": random_transform(f4_family(5), random.Random(3))}
    names = sorted(mats)
    rel = {(a, b): equiv(mats[a], mats[b]).equivalent for a in names for b in names}
    for a in names:
        assert rel[a, a]
    for a, b in itertools.product(names, repeat=2):
        assert rel[a, b] == rel[b, a]
    for a, b, c in itertools.product(names, repeat=3):
        if rel[a, b] and rel[b, c]:
            assert rel[a, c]
    assert rel["F_4(5)", "T"] and not rel["F_4(0)", "F_4(5)"]

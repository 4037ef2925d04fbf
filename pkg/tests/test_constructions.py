import json
from pathlib import Path

import pytest

from hadamat import constructions as C
from hadamat.cyclotomic import CycloNum, embed, root_of_unity
from hadamat.matrix import CycloMatrix, butson_exponents, is_hadamard, is_inverse_orthogonal

GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_exponents.json").read_text())
GOLDEN.pop("_note")


def z(k, M=60):
    return root_of_unity(M, k)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_exponents(name):
    assert butson_exponents(C.get(name)).tolist() == GOLDEN[name]


def test_catalog_shape():
    cat = C.catalog()
    names = [nm.name for nm in cat]
    assert len(names) == len(set(names)) == 53
    assert all(nm.matrix.order == 60 for nm in cat)
    assert {"F_2", "F_3", "F_5", "D_1", "D_4", "I_2/3", "I_1/3", "B_4241", "A_5251"} <= set(names)


def test_every_hadamard_candidate_verdict():
    non_hadamard = {nm.name for nm in C.catalog() if not is_hadamard(nm.matrix)}
    # only the two unitary diagonals are not Hadamard; A_i/B_i at omega = zeta_3 all are
    assert non_hadamard == {"I_2/3", "I_1/3"}


def test_display_value_tokens():
    assert C.display_value("-(-1)^1/3") == z(40)
    assert C.display_value("(-1)^2/3") == z(20)
    assert C.display_value("(-1)^1/6") == z(5)
    assert C.display_value("-i") == z(45)
    assert C.display_value("-(-1)^1/5") == z(36)
    assert C.display_value("(-1)^4/5") == z(24)
    assert C.display_value("w") == C.display_value("g") == z(20)
    with pytest.raises(C.ConstructionError):
        C.display_value("(-1^2/3")


def test_display_repairs():
    errs = C.display_errata()
    locs = {e.location.split(" ")[0] for e in errs}
    assert "D_2[2,3]" in locs
    assert any(e.printed == "(-1^2/3" for e in errs)
    # unrepaired D_2 breaks the circulant and is not Hadamard
    assert not is_hadamard(C.from_display("D_2", repaired=False))
    assert is_hadamard(C.from_display("D_2"))


def test_c2_examples():
    one = CycloNum.one(60)
    i = z(15)
    h = C.c2_solutions(one, one, i, i, which=3)
    assert h[1, 0] == -i
    for k in range(1, 5):
        assert C.c2_constraint(C.c2_reference(k)).is_zero()
        assert is_inverse_orthogonal(C.c2_reference(k))
    assert not is_inverse_orthogonal(C.c2_reference(1, literal=True))


def test_c3_quadratic_roots():
    one = CycloNum.one(60)
    r = C.c3_quadratic_roots(one, one)
    assert r == (z(20), z(40))
    for a in r:
        assert all(x.is_zero() for x in C.c3_constraints(a, one, one))
    assert C.circulant([z(20), one, one]).dim == 3
    assert is_hadamard(C.circulant([z(20), one, one]))


def test_c3_not_representable():
    # the discriminant -3 has no square root in Q(zeta_8), whose quadratic subfields are Q(i), Q(sqrt 2), Q(sqrt -2)
    one = CycloNum.one(8)
    assert C.c3_quadratic_roots(one, one) == (C.NOT_REPRESENTABLE, C.NOT_REPRESENTABLE)


def test_c5():
    for k in range(1, 5):
        a = embed(root_of_unity(5, k), 60)
        assert C.c5_factor(a).is_zero()
        assert is_hadamard(C.c5_pattern(a))
    assert not is_hadamard(C.c5_pattern(CycloNum.one(60)))
    q = C.c5_offdiag_quotients()
    assert len(q) == 20 and all(v is not None for v in q.values())
    # a^3 * (row 0 . row 1) = a^6 + a^4 + a^3 + a^2 + 1 = Phi_5(a) * (a^2 - a + 1)
    assert q[(0, 1)] == (3, [1, -1, 1])


def test_transfer():
    assert C.transfer(C.get("A_11"), C.get("A_12"), convention="H2*H1").same_entries(C.get("A_1112"))
    assert C.transfer(C.get("A_12"), C.get("A_11")).same_entries(C.get("A_1112"))
    f4 = C.fourier(4, 60)
    # (1/sqrt 4) F4* F4 = 2 I
    two_i = CycloMatrix.from_rows([[2 if i == j else 0 for j in range(4)] for i in range(4)], 60)
    assert C.transfer(f4, f4).same_entries(two_i)
    with pytest.raises(ValueError):
        C.transfer(C.get("A_11"), C.get("A_12"), convention="nope")


def test_identical_groups():
    groups = C.identical_display_groups()
    assert ["F_2", "H_4"] in groups
    assert ["B_1", "A_11", "B_12", "B_22"] in groups


def test_fourier_requires_divisible_order():
    with pytest.raises(C.ConstructionError):
        C.fourier(5, 12)

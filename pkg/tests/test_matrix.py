import numpy as np
import pytest

from hadamat import constructions as C
from hadamat.cyclotomic import CycloNum, root_of_unity
from hadamat.matrix import (
    CycloMatrix,
    DimensionMismatchError,
    MatrixError,
    butson_exponents,
    dephase,
    dephase_factors,
    gram,
    is_diagonal,
    is_hadamard,
    is_inverse_orthogonal,
    is_unitary,
    is_unitary_diagonal,
    matmul,
    permute_cols,
    permute_rows,
    scale_diag,
)


def J(n, M=60):
    return CycloMatrix.from_exponents([[0] * n for _ in range(n)], M)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_fourier_hadamard(n):
    assert is_hadamard(C.fourier(n, 60))


def test_all_ones_fails_at_first_gram_cell():
    v = is_hadamard(J(3))
    assert not v
    i, j, defect = v.failing_cell
    assert (i, j) == (0, 1)
    assert defect == 3


def test_non_unimodular_entry_reported_first():
    two = CycloNum.from_int(60, 2)
    one = CycloNum.one(60)
    h = CycloMatrix(60, ((one, one), (two, -one)))
    v = is_hadamard(h)
    assert not v and v.failing_cell[:2] == (1, 0)


def test_gram_matches_numpy():
    h = C.get("D_3")
    a = h.to_numpy()
    assert np.allclose(gram(h).to_numpy(), a @ a.conj().T)
    assert np.allclose(matmul(h, h.conj_transpose()).to_numpy(), gram(h).to_numpy())


def test_unitary_uses_scale():
    f = C.fourier(3, 60)
    assert not is_unitary(f)
    assert is_unitary(f.with_scale(1))
    assert is_unitary(CycloMatrix.identity(4, 60))


def test_inverse_orthogonal():
    assert is_inverse_orthogonal(C.fourier(5, 60))
    assert not is_inverse_orthogonal(J(2))
    z = CycloNum.zero(60)
    one = CycloNum.one(60)
    with pytest.raises(MatrixError):
        is_inverse_orthogonal(CycloMatrix(60, ((z, one), (one, one))))


def test_diagonals():
    assert is_diagonal(C.get("I_2/3"))
    assert is_unitary_diagonal(C.get("I_1/3"))
    assert not is_unitary_diagonal(C.get("F_3"))


def test_permute_and_scale():
    h = C.get("D_1")
    p = [2, 0, 4, 1, 3]
    assert permute_rows(h, p)[1, 3] == h[0, 3]
    assert permute_cols(h, p)[3, 1] == h[3, 0]
    z = root_of_unity(60, 7)
    s = scale_diag(h, [z] * 5, None)
    assert s[2, 2] == z * h[2, 2]


def test_dephase_has_unit_border():
    d = dephase(C.get("A_1112"))
    assert all(d[0, j] == 1 for j in range(3))
    assert all(d[i, 0] == 1 for i in range(3))


def test_dephase_factors_reconstruct():
    h = C.get("A_3231")
    r, c = dephase_factors(h)
    assert scale_diag(h, r, c).same_entries(dephase(h))


@pytest.mark.parametrize("nm", C.catalog(), ids=lambda nm: nm.name)
def test_dephase_idempotent(nm):
    if any(x.is_zero() for _, _, x in nm.matrix.entries()):
        pytest.skip("zero entries")
    d = dephase(nm.matrix)
    assert dephase(d).same_entries(d)


def test_butson_exponents():
    e = butson_exponents(C.get("F_3"))
    assert e.tolist() == [[0, 0, 0], [0, 20, 40], [0, 40, 20]]
    assert butson_exponents(C.get("I_2/3")) is None


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        matmul(C.fourier(2, 60), C.fourier(3, 60))


def test_ragged_rows_rejected():
    one = CycloNum.one(60)
    with pytest.raises(MatrixError):
        CycloMatrix(60, ((one, one), (one,)))

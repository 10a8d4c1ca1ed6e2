import pytest

from strongconn.errors import ShapeError
from strongconn.linmaps import (
    Infeasible,
    LinMap,
    SpaceLabel,
    Subspace,
    basis_vector,
    flip_map,
    kernel_basis,
    kron_all,
    map_from_vector,
    map_kron,
    map_vectorize,
    rref_solve,
    stacked_kernel,
    subspace_ops,
    tensor_index,
    try_inverse,
    vector,
    vector_coeffs,
)
from strongconn.scalars import Field


QQ = Field.rationals()
A2 = SpaceLabel.base("A", 2)
C3 = SpaceLabel.base("C", 3)


def mat(entries, dom, cod, field=QQ):
    return LinMap(field, dom, cod,
                  [[field.scalar(e) for e in row] for row in entries])


def test_tensor_index_row_major():
    space = A2.tensor(C3)
    assert tensor_index((1, 0), space) == 3
    assert tensor_index((0, 0), space) == 0
    assert tensor_index((1, 2), space) == 5
    assert space.unflatten(5) == (1, 2)


def test_tensor_index_out_of_range():
    with pytest.raises(IndexError):
        tensor_index((2, 0), A2.tensor(C3))
    with pytest.raises(IndexError):
        tensor_index((0,), A2.tensor(C3))


def test_compose_identity():
    f = mat([[1, 2, 3], [4, 5, 6]], C3, A2)
    assert LinMap.identity(QQ, A2) @ f == f
    assert f @ LinMap.identity(QQ, C3) == f


def test_compose_label_mismatch():
    f = mat([[1, 0], [0, 1]], A2, A2)
    g = mat([[1, 0, 0], [0, 1, 0]], C3, A2)
    with pytest.raises(ShapeError):
        g @ f  # inner labels A vs A are fine; try mismatched one
    # mismatch: f expects domain A, g produces codomain A... build real mismatch
    h = mat([[1], [0], [0]], SpaceLabel.base("B", 1), C3)
    with pytest.raises(ShapeError):
        f @ h


def test_kron_of_identities():
    assert map_kron(LinMap.identity(QQ, A2), LinMap.identity(QQ, C3)) == \
        LinMap.identity(QQ, A2.tensor(C3))


def test_kron_functoriality_spot_check():
    f = mat([[1, 2], [3, 4]], A2, A2)
    fp = mat([[0, 1], [1, 1]], A2, A2)
    g = mat([[2, 0], [1, 1]], A2, A2)
    gp = mat([[1, 1], [0, 2]], A2, A2)
    lhs = map_kron(f, g) @ map_kron(fp, gp)
    rhs = map_kron(f @ fp, g @ gp)
    assert lhs == rhs


def test_kron_on_basis_vectors():
    u = basis_vector(QQ, A2, 1)
    v = basis_vector(QQ, C3, 2)
    w = map_kron(u, v)
    assert w.codomain == A2.tensor(C3)
    assert vector_coeffs(w)[tensor_index((1, 2), A2.tensor(C3))] == QQ.one


def test_scalar_space_label_absorbed_by_kron():
    eps = mat([[1, 1]], A2, SpaceLabel.scalar())  # a functional on A
    m = map_kron(LinMap.identity(QQ, A2), eps)
    assert m.codomain == A2
    assert m.domain == A2.tensor(A2)


def test_rref_solve_identity():
    t = mat([[1, 2], [3, 4]], A2, A2)
    x = rref_solve(LinMap.identity(QQ, A2), t)
    assert x == t


def test_rref_solve_free_variable_zeroed():
    B1 = SpaceLabel.base("B", 1)
    M = mat([[1, 1]], A2, B1)
    t = mat([[1]], B1, B1)
    x = rref_solve(M, t)
    assert vector_coeffs(x.relabel(domain=SpaceLabel.scalar())) == \
        (QQ.one, QQ.zero)


def test_rref_solve_infeasible_with_witness():
    B1 = SpaceLabel.base("B", 1)
    M = LinMap.zero(QQ, A2, B1)
    t = mat([[1]], B1, B1)
    out = rref_solve(M, t)
    assert isinstance(out, Infeasible)
    assert out.row == 0


def test_rref_solve_deterministic():
    M = mat([[1, 1, 0], [0, 0, 1]], C3, A2)
    t = mat([[2], [5]], SpaceLabel.base("T", 1), A2)
    x1 = rref_solve(M, t)
    x2 = rref_solve(M, t)
    assert x1 == x2
    assert M @ x1 == t


def test_kernel_of_identity_and_zero():
    assert kernel_basis(LinMap.identity(QQ, C3)).dim == 0
    assert kernel_basis(LinMap.zero(QQ, C3, A2)).dim == 3


def test_kernel_simple():
    B1 = SpaceLabel.base("B", 1)
    M = mat([[1, -1]], A2, B1)
    k = kernel_basis(M)
    assert k.dim == 1
    assert k.contains_vector([QQ.one, QQ.one])


def test_rank_nullity_on_random_shape():
    M = mat([[1, 2, 3], [2, 4, 6]], C3, A2)
    assert M.rank() + kernel_basis(M).dim == 3


def test_subspace_ops():
    e1 = [QQ.one, QQ.zero]
    e2 = [QQ.zero, QQ.one]
    U = Subspace.from_vectors(QQ, A2, [e1])
    V = Subspace.from_vectors(QQ, A2, [e2])
    Z = Subspace.zero(QQ, A2)
    assert subspace_ops("equal", U, U)
    assert subspace_ops("sum", U, Z) == U
    assert subspace_ops("intersection", U, V) == Z
    assert subspace_ops("contains", subspace_ops("sum", U, V), U)
    assert not subspace_ops("contains", U, V)


def test_subspace_canonical_basis_unique():
    U1 = Subspace.from_vectors(QQ, A2, [[2, 2]])
    U2 = Subspace.from_vectors(QQ, A2, [[5, 5]])
    assert U1 == U2
    assert U1.basis[0] == (QQ.one, QQ.one)


def test_subspace_ambient_mismatch():
    U = Subspace.from_vectors(QQ, A2, [[1, 0]])
    V = Subspace.from_vectors(QQ, C3, [[1, 0, 0]])
    with pytest.raises(ShapeError):
        subspace_ops("sum", U, V)


def test_flip_map_swaps():
    fl = flip_map(QQ, A2, C3)
    v = map_kron(basis_vector(QQ, A2, 1), basis_vector(QQ, C3, 2))
    w = fl @ v
    assert vector_coeffs(w)[tensor_index((2, 1), C3.tensor(A2))] == QQ.one
    assert sum(1 for c in vector_coeffs(w) if c) == 1


def test_try_inverse():
    M = mat([[1, 1], [0, 1]], A2, A2)
    Minv = try_inverse(M)
    assert Minv @ M == LinMap.identity(QQ, A2)
    assert try_inverse(mat([[1, 1], [1, 1]], A2, A2)) is None
    with pytest.raises(ShapeError):
        try_inverse(mat([[1, 0, 0], [0, 1, 0]], C3, A2))


def test_vectorize_roundtrip():
    M = mat([[1, 2, 3], [4, 5, 6]], C3, A2)
    v = map_vectorize(M)
    assert map_from_vector(QQ, C3, A2, v) == M


def test_stacked_kernel():
    B1 = SpaceLabel.base("B", 1)
    M1 = mat([[1, -1, 0]], C3, B1)
    M2 = mat([[0, 1, -1]], C3, B1)
    k = stacked_kernel([M1, M2])
    assert k.dim == 1
    assert k.contains_vector([QQ.one, QQ.one, QQ.one])


def test_vector_helpers():
    v = vector(QQ, C3, [1, 2, 3])
    assert vector_coeffs(v) == (QQ.one, QQ.scalar(2), QQ.scalar(3))
    with pytest.raises(ShapeError):
        vector(QQ, C3, [1, 2])


def test_kron_all():
    i2 = LinMap.identity(QQ, A2)
    assert kron_all(i2, i2, i2).domain.dim == 8

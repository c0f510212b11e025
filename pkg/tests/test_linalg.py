from fractions import Fraction as F

from tautilt import linalg
from tautilt.fields import QQ, PrimeField


def M(rows):
    return [[F(x) for x in row] for row in rows]


def test_rref_and_rank():
    a = M([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, pivots = linalg.rref(QQ, a)
    assert pivots == [0, 1]
    assert linalg.rank(QQ, a) == 2
    assert linalg.rank(QQ, []) == 0
    assert linalg.rank(QQ, M([[0, 0]])) == 0


def test_kernel_basis():
    a = M([[1, 2, 3], [0, 1, 1]])
    ker = linalg.kernel_basis(QQ, a, ncols=3)
    assert len(ker) == 1
    for v in ker:
        assert all(
            sum(row[j] * v[j] for j in range(3)) == 0 for row in a
        )
    # the empty matrix has full kernel
    assert len(linalg.kernel_basis(QQ, [], ncols=4)) == 4


def test_solve_vector_and_matrix():
    a = M([[1, 1], [0, 1]])
    x = linalg.solve(QQ, a, [F(3), F(1)])
    assert x == [F(2), F(1)]
    assert linalg.solve(QQ, M([[1, 1], [1, 1]]), [F(0), F(1)]) is None
    sol = linalg.solve(QQ, a, M([[1, 0], [0, 1]]))
    assert linalg.mat_mul(QQ, a, sol) == linalg.identity(QQ, 2)


def test_transpose_shaped_preserves_empty_dimensions():
    # arguments give the shape of the result
    assert linalg.transpose_shaped([], 3, 0) == [[], [], []]
    assert linalg.transpose_shaped([[], [], []], 0, 3) == []
    assert linalg.transpose_shaped(M([[1, 2]]), 2, 1) == M([[1], [2]])


def test_echelon_membership():
    ech = linalg.Echelon(QQ, 3)
    assert ech.add([F(1), F(0), F(1)])
    assert ech.add([F(0), F(1), F(0)])
    assert not ech.add([F(1), F(1), F(1)])
    assert ech.rank == 2
    assert ech.contains([F(2), F(-1), F(2)])
    assert not ech.contains([F(0), F(0), F(1)])


def test_quotient_basis():
    space = [[F(1), F(0)], [F(0), F(1)]]
    sub = [[F(1), F(1)]]
    reps, coords = linalg.quotient_basis(QQ, space, sub, 2)
    assert len(reps) == 1
    # the representative and the subspace together span the plane
    ech = linalg.Echelon(QQ, 2)
    ech.add(sub[0])
    assert ech.add(reps[0])


def test_prime_field_matrices():
    f = PrimeField(5)
    a = [[1, 2], [3, 4]]
    assert linalg.rank(f, a) == 2
    inv = linalg.solve(f, a, linalg.identity(f, 2))
    assert linalg.mat_mul(f, a, inv) == linalg.identity(f, 2)

import random

import pytest

from metafix.fox import jacobian
from metafix.laurent import LaurentPoly, parse_poly
from metafix.matrices import LaurentMatrix, cramer_solve
from metafix.samples import random_ia, random_poly


def P(text, n=2):
    return parse_poly(text, n)


def random_matrix(rng, rows, cols, n, terms=2):
    return LaurentMatrix(
        n,
        [
            [random_poly(rng, n, terms=terms, span=1, coeff=2) for _ in range(cols)]
            for _ in range(rows)
        ],
    )


def test_det_examples():
    n = 3
    i3 = LaurentMatrix.identity(n, n)
    assert (i3 - i3).det() == 0
    m = LaurentMatrix(2, [[P("x1"), P("1")], [P("1"), P("x1^-1")]])
    assert m.det() == 0


def test_det_of_ia_difference():
    rng = random.Random(41)
    for _ in range(10):
        nn = rng.randrange(2, 5)
        phi = random_ia(rng, nn)
        jmi = jacobian(phi) - LaurentMatrix.identity(nn, nn)
        assert jmi.det().is_zero()


def test_det_requires_square():
    with pytest.raises(ValueError):
        LaurentMatrix.zeros(2, 3, 1).det()


def test_bareiss_matches_cofactor():
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randrange(1, 3)
        size = rng.randrange(1, 5)
        m = random_matrix(rng, size, size, n)
        assert m.det_bareiss() == m.det_cofactor()


def test_bareiss_path_on_larger_matrix():
    rng = random.Random(43)
    m = random_matrix(rng, 5, 5, 2, terms=1)
    assert m.det() == m.det_cofactor()


def test_rank_examples(displaced_pair, infinite_fix):
    assert LaurentMatrix.zeros(3, 2, 2).rank() == 0
    jmi = jacobian(displaced_pair) - LaurentMatrix.identity(2, 2)
    assert jmi.rank() == 1
    jmi3 = jacobian(infinite_fix) - LaurentMatrix.identity(3, 3)
    assert jmi3.rank() == 1


def test_rank_equals_transpose_rank():
    rng = random.Random(44)
    for _ in range(40):
        n = rng.randrange(1, 3)
        m = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5), n)
        assert m.rank() == m.transpose().rank()


def test_kernel_examples():
    m = LaurentMatrix(1, [[parse_poly("x1 - 1", 1), parse_poly("x1 - 1", 1)]])
    z = m.kernel_vector()
    assert z == [LaurentPoly.one(1), LaurentPoly.constant(-1, 1)]

    nonsingular = LaurentMatrix(1, [[parse_poly("x1", 1)]])
    assert nonsingular.kernel_vector() is None


def test_kernel_annihilates_random():
    rng = random.Random(45)
    hits = 0
    for _ in range(60):
        n = rng.randrange(1, 3)
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = random_matrix(rng, rows, cols, n, terms=1)
        z = m.kernel_vector()
        if z is None:
            assert m.rank() == cols
            continue
        hits += 1
        assert any(not p.is_zero() for p in z)
        assert all(p.is_zero() for p in m.mul_vector(z))
    assert hits > 10


def test_cramer_examples():
    m = LaurentMatrix(1, [[parse_poly("x1", 1)]])
    res = cramer_solve(m, [parse_poly("x1^2", 1)])
    assert res.status == "solution" and res.solution == [parse_poly("x1", 1)]

    # the inhomogeneous divisibility obstruction on two generators
    m2 = LaurentMatrix(2, [[P("x2 + x1 - 2")]])
    res2 = cramer_solve(m2, [P("x2 - 1")])
    assert res2.status == "no_solution_in_ring"

    singular = LaurentMatrix(1, [[LaurentPoly.zero(1)]])
    assert cramer_solve(singular, [parse_poly("x1", 1)]).status == "singular"


def test_cramer_shape_mismatch():
    with pytest.raises(ValueError):
        cramer_solve(LaurentMatrix.zeros(2, 3, 1), [LaurentPoly.zero(1)] * 2)
    with pytest.raises(ValueError):
        cramer_solve(LaurentMatrix.identity(2, 1), [LaurentPoly.zero(1)])


def test_cramer_solution_verifies():
    rng = random.Random(46)
    solved = 0
    for _ in range(60):
        n = rng.randrange(1, 3)
        size = rng.randrange(1, 4)
        m = random_matrix(rng, size, size, n, terms=1)
        x = [random_poly(rng, n, terms=1, span=1, coeff=2) for _ in range(size)]
        b = m.mul_vector(x)
        res = cramer_solve(m, b)
        if res.status == "solution":
            solved += 1
            assert m.mul_vector(res.solution) == b
        else:
            assert res.status == "singular"
    assert solved > 10


def test_matrix_product_and_vector_helpers():
    a = LaurentMatrix(1, [[parse_poly("x1", 1), parse_poly("1", 1)]])
    b = LaurentMatrix(1, [[parse_poly("x1 - 1", 1)], [parse_poly("2", 1)]])
    prod = a * b
    assert prod.entries[0][0] == parse_poly("x1^2 - x1 + 2", 1)
    v = a.vec_mul([parse_poly("x1", 1)])
    assert v == [parse_poly("x1^2", 1), parse_poly("x1", 1)]

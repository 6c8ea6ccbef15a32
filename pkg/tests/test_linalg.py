import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordercomplement import linalg as la
from ordercomplement.errors import DimensionMismatch, NotSquare
from ordercomplement.linalg import IntMatrix, IntPolynomial

from oracles import charpoly_interpolated, fraction_det, leibniz_det


@st.composite
def square_matrices(draw, max_n=5, lo=-6, hi=6):
    n = draw(st.integers(0, max_n))
    vals = draw(st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n))
    return IntMatrix(n, n, vals)


@st.composite
def zero_one_matrices(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    vals = draw(st.lists(st.integers(0, 1), min_size=n * n, max_size=n * n))
    return IntMatrix(n, n, vals)


def M(rows):
    return IntMatrix.from_rows(rows)


def test_basic_algebra():
    assert la.all_ones(2) - la.identity(2) == M([[0, 1], [1, 0]])
    A = M([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert la.matmul(la.identity(3), A) == A
    assert A @ la.identity(3) == A
    assert la.transpose(A) == M([[1, 4, 7], [2, 5, 8], [3, 6, 10]])
    assert la.scalar_mul(-2, A) == M([[-2, -4, -6], [-8, -10, -12], [-14, -16, -20]])
    assert la.add(A, A) == A.scale(2)
    assert la.sub(A, A) == la.zeros(3)
    assert la.trace(A) == 16
    assert A.total() == 46


@pytest.mark.parametrize("n", range(6))
def test_all_ones_is_outer_product_of_ones(n):
    assert la.all_ones(n) == la.outer([1] * n, [1] * n)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        la.identity(2) + la.identity(3)
    with pytest.raises(DimensionMismatch):
        IntMatrix(2, 3, range(6)) @ IntMatrix(2, 3, range(6))
    with pytest.raises(DimensionMismatch):
        IntMatrix(2, 2, [1, 2, 3])
    with pytest.raises(NotSquare):
        la.determinant(IntMatrix(2, 3, range(6)))
    with pytest.raises(NotSquare):
        la.charpoly(IntMatrix(1, 2, [1, 2]))
    with pytest.raises(NotSquare):
        la.is_nilpotent(IntMatrix(3, 1, [0, 0, 0]))


def test_big_integers_stay_exact():
    big = 10**40 + 7
    A = M([[big, 1], [1, big]])
    assert la.determinant(A) == big * big - 1
    assert la.charpoly(A) == IntPolynomial([big * big - 1, -2 * big, 1])


# determinant ---------------------------------------------------------------

def test_determinant_examples():
    assert la.determinant(M([[0, 1], [1, 0]])) == -1
    assert la.determinant(la.all_ones(3) - la.identity(3)) == 2
    assert la.determinant(IntMatrix(0, 0, [])) == 1
    assert la.determinant(M([[0, 0], [0, 5]])) == 0


def test_determinant_upper_unitriangular():
    A = M([[1, 5, -3, 2], [0, 1, 7, 1], [0, 0, 1, 9], [0, 0, 0, 1]])
    assert la.determinant(A) == 1


def test_determinant_needs_row_swaps():
    A = M([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert la.determinant(A) == -1
    B = M([[0, 2, 1], [0, 0, 3], [4, 1, 1]])
    assert la.determinant(B) == leibniz_det(B.to_rows()) == 24


@settings(max_examples=300)
@given(square_matrices())
def test_determinant_matches_leibniz(A):
    assert la.determinant(A) == leibniz_det(A.to_rows())


@settings(max_examples=100)
@given(zero_one_matrices(max_n=10))
def test_determinant_matches_rational_elimination(A):
    assert la.determinant(A) == fraction_det(A.to_rows())


# characteristic polynomial -------------------------------------------------

def test_charpoly_examples():
    assert la.charpoly(M([[0, 1], [1, 0]])) == IntPolynomial([-1, 0, 1])
    assert la.charpoly(IntMatrix(0, 0, [])) == IntPolynomial([1])
    assert la.charpoly(M([[7]])) == IntPolynomial([7, -1])


@pytest.mark.parametrize("n", range(8))
def test_charpoly_identity(n):
    assert la.charpoly(la.identity(n)) == IntPolynomial([1, -1]) ** n


def test_charpoly_unitriangular():
    A = M([[1, 2, 0, 5], [0, 1, 1, 1], [0, 0, 1, 3], [0, 0, 0, 1]])
    assert la.charpoly(A) == IntPolynomial([1, -4, 6, -4, 1])


@settings(max_examples=200)
@given(square_matrices())
def test_charpoly_matches_interpolation(A):
    assert list(la.charpoly(A).coeffs) == charpoly_interpolated(A.to_rows())


@settings(max_examples=50)
@given(zero_one_matrices(max_n=9))
def test_charpoly_matches_interpolation_01(A):
    assert list(la.charpoly(A).coeffs) == charpoly_interpolated(A.to_rows())


@settings(max_examples=200)
@given(square_matrices(max_n=7))
def test_charpoly_degree_lead_and_constant(A):
    p = la.charpoly(A)
    n = A.rows
    assert p.degree == n
    assert p.leading() == (-1) ** n
    assert p(0) == la.determinant(A)
    if n:
        assert p.coeff(n - 1) == (-1) ** (n - 1) * la.trace(A)


@given(square_matrices(max_n=6), st.randoms(use_true_random=False))
def test_permutation_similarity_invariance(A, rnd):
    perm = list(range(A.rows))
    rnd.shuffle(perm)
    B = la.permute(A, perm)
    assert la.determinant(B) == la.determinant(A)
    assert la.charpoly(B) == la.charpoly(A)


def test_berkowitz_is_monic_det_t_minus_a():
    A = M([[2, 1], [1, 3]])
    # det(tI - A) = t^2 - 5t + 5
    assert la.berkowitz(A) == [1, -5, 5]


# nilpotency ----------------------------------------------------------------

def test_is_nilpotent():
    strict = M([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert la.is_nilpotent(strict)
    assert not la.is_nilpotent(la.identity(2))
    assert la.is_nilpotent(M([[0, 0], [1, 0]]))
    assert not la.is_nilpotent(M([[0, 1], [1, 0]]))
    assert la.is_nilpotent(IntMatrix(0, 0, []))


def test_matpow():
    A = M([[1, 1], [1, 0]])
    assert la.matpow(A, 10) == M([[89, 55], [55, 34]])
    assert la.matpow(A, 0) == la.identity(2)


# polynomials ---------------------------------------------------------------

def test_poly_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial([0, 0]).degree == -1


def test_poly_eval():
    p = IntPolynomial([-1, 0, 1])
    assert la.poly_eval(p, 0) == -1
    assert la.poly_eval(p, 1) == 0
    assert p(-3) == 8


def test_poly_arithmetic():
    a = IntPolynomial([1, 1])
    b = IntPolynomial([-1, 1])
    assert la.poly_mul(a, b) == IntPolynomial([-1, 0, 1])
    assert la.poly_scale(a, 3) == IntPolynomial([3, 3])
    assert la.poly_equal(a + b, IntPolynomial([0, 2]))
    assert a - a == IntPolynomial()
    assert a ** 3 == IntPolynomial([1, 3, 3, 1])
    assert IntPolynomial.linear_power(1, 4, lead=-2) == IntPolynomial([-2, -8, -12, -8, -2])
    assert IntPolynomial.linear_power(-1, 2) == IntPolynomial([1, -2, 1])
    assert 1 - IntPolynomial([0, 1]) == IntPolynomial([1, -1])


@given(st.lists(st.integers(-50, 50), max_size=6), st.lists(st.integers(-50, 50), max_size=6), st.integers(-9, 9))
def test_poly_mul_evaluates_pointwise(c1, c2, x):
    p, q = IntPolynomial(c1), IntPolynomial(c2)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_render_poly():
    assert la.render_poly(IntPolynomial([-1, 0, 1])) == "λ² - 1"
    assert la.render_poly(IntPolynomial([0, -1])) == "-λ"
    assert la.render_poly(IntPolynomial([0, 0, 0, 0, 1])) == "λ⁴"
    assert la.render_poly(IntPolynomial([5, -3, 0, 12])) == "12λ³ - 3λ + 5"
    assert la.render_poly(IntPolynomial()) == "0"


def test_render_matrix():
    assert la.render_matrix(M([[1, -1], [0, 1]])) == " 1 -1\n 0  1"
    assert la.render_matrix(IntMatrix(0, 0, [])) == ""

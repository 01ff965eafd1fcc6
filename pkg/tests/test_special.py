"""Matrix specialization: printed formulas, symmetries, recovery, quasi-Schur."""

import random
from fractions import Fraction

import pytest

from ncshift.params import ParamSubstitution
from ncshift.quasidet import MatValue, SingularMinor, random_mat
from ncshift.ribbon import Composition, ribbon
from ncshift.special import (
    VariableAssignment,
    ZeroDenominator,
    check_extension,
    check_shifted_symmetry,
    commutative_oracle,
    commutative_recovery,
    evaluate_nc,
    frobenius_form,
    giambelli_check,
    hook_partition,
    lambda_spec,
    phi_psi_relation_defect,
    psi_variable_shift,
    quasi_schur_lambda_form,
    quasi_schur_spec,
    s_spec,
    shifted_power,
    swap_variables,
    variable_shift_defect,
)

STAR = ParamSubstitution.equidistant(1, -1)  # a_i = i - 1


def assignment(n, d, seed, sub=STAR, tries=24):
    for attempt in range(tries):
        rng = random.Random(seed + attempt)
        A = VariableAssignment(
            tuple(random_mat(rng, d) for _ in range(n)), sub
        )
        try:
            s_spec(min(n, 2), A)
            lambda_spec(min(n, 2), A)
            return A
        except SingularMinor:
            continue
    pytest.skip("no nonsingular sample")


def test_shifted_power_examples():
    x = MatValue([[2, 1], [0, 3]])
    assert shifted_power(x, STAR, 0) == MatValue.identity(2)
    zero = ParamSubstitution.equidistant(0, 0)
    assert shifted_power(x, zero, 3) == x * x * x
    y = MatValue([[3]])
    assert shifted_power(y, STAR, 3) == MatValue([[6]])  # 3 * 2 * 1


def test_printed_small_formulas():
    for d in (1, 2, 3):
        for seed in (1, 2, 3):
            rng = random.Random(1000 * d + seed)
            x1, x2 = random_mat(rng, d), random_mat(rng, d)
            I = MatValue.identity(d)
            A1 = VariableAssignment((x1,), STAR)
            assert lambda_spec(1, A1) == x1
            assert s_spec(1, A1) == x1
            A2 = VariableAssignment((x1, x2), STAR)
            try:
                den = (x2 - x1 - I).inverse()
                s1 = (x2 * (x2 - I) - (x1 + I) * x1) * den
                assert s_spec(1, A2) == s1
                assert lambda_spec(1, A2) == s1
                l2 = (x2 * (x2 - I) - x1 * x2) * (
                    (x1 + I).inverse() * x2 - I
                ).inverse()
                assert lambda_spec(2, A2) == l2
                s2 = (x2 * (x2 - I) * (x2 - 2 * I) - (x1 + I) * x1 * (x1 - I)) * den
                assert s_spec(2, A2) == s2
            except SingularMinor:
                continue


def test_lambda_vanishing_beyond_variable_count():
    for n in (1, 2, 3):
        A = assignment(n, 2, 140 + n)
        for k in range(n + 1, n + 3):
            assert lambda_spec(k, A).is_zero()


def test_s_does_not_vanish_beyond_variable_count():
    # the defining series forces S_2(x_1) = <x_1|a>^2; the displayed claim
    # that S_k vanishes for k > n contradicts the commutative recovery
    x = MatValue([[Fraction(5, 2)]])
    A = VariableAssignment((x,), STAR)
    assert s_spec(2, A) == shifted_power(x, STAR, 2)
    assert not s_spec(2, A).is_zero()


def test_zero_matrix_values_k0():
    A = assignment(2, 2, 150)
    assert s_spec(0, A) == MatValue.identity(2)
    assert lambda_spec(0, A) == MatValue.identity(2)


def test_variable_shift_laws():
    A = assignment(2, 2, 160)
    assert psi_variable_shift(1, A, 0) == s_spec(1, A)
    for k in (1, 2):
        assert variable_shift_defect(k, A).is_zero()
        assert phi_psi_relation_defect(k, A).is_zero()
    # c = 0 makes the shift the identity
    zero = ParamSubstitution.equidistant(0, 0)
    A0 = assignment(2, 2, 170, sub=zero)
    for k in (1, 2):
        assert psi_variable_shift(k, A0, 3) == s_spec(k, A0)


def _checked_symmetry(n, d, seed, k, i, sub=STAR, tries=24):
    for attempt in range(tries):
        A = assignment(n, d, seed + 1000 * attempt, sub=sub)
        try:
            return check_shifted_symmetry(k, A, i)
        except SingularMinor:
            continue
    pytest.skip("no nonsingular swapped sample")


def test_shifted_symmetry():
    # c = 0: plain transposition invariance
    zero = ParamSubstitution.equidistant(0, 0)
    assert _checked_symmetry(2, 2, 190, 1, 1, sub=zero)
    assert _checked_symmetry(2, 2, 191, 2, 1, sub=zero)
    # printed example: n = 2 invariance under (x1, x2) -> (x2 - 1, x1 + 1)
    for k in (1, 2):
        assert _checked_symmetry(2, 2, 200 + k, k, 1)
    assert _checked_symmetry(4, 2, 210, 3, 2)


def test_ribbon_specialization_symmetry():
    A = assignment(3, 2, 230)
    for I in (Composition((2, 1)), Composition((1, 2)), Composition((2, 2))):
        x = ribbon(I)
        for i in (1, 2):
            assert evaluate_nc(x, A) == evaluate_nc(x, swap_variables(A, i))


def test_denominator_stability_under_reindexing():
    # the dpower denominator grid for n+1 rows reduces to the n-row one
    from ncshift.special import _dpower

    A = assignment(3, 2, 240)
    lhs = _dpower(A, A.n + 1, list(range(A.n)), A.n)
    rhs = _dpower(A, A.n, list(range(A.n)), A.n)
    assert lhs == rhs


def test_extension_stability():
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            A = assignment(n, 2, 260 + 10 * n + k)
            assert check_extension(k, A)
    # printed instance: S_1(x_1, 0) = x_1 when a_1 = 0
    x1 = MatValue([[Fraction(3)]])
    A = VariableAssignment((x1, MatValue([[0]])), STAR)
    assert s_spec(1, A) == x1


def test_defining_relation_under_unshifted_specialization():
    # c = 0: sum_{i+j=m} (-1)^j S_i(x) Lambda_j(x) = delta_{m,0} up to m = n
    zero = ParamSubstitution.equidistant(0, 0)
    A = assignment(3, 2, 280, sub=zero)
    d = A.d
    for m in range(1, A.n + 1):
        acc = MatValue.zeros(d)
        for j in range(m + 1):
            term = s_spec(m - j, A) * lambda_spec(j, A)
            acc = acc + (term if j % 2 == 0 else -term)
        assert acc.is_zero()


def test_commutative_recovery():
    rng = random.Random(31415)
    for n in range(1, 5):
        for k in range(1, 5):
            for _ in range(40):
                scalars = [
                    Fraction(rng.randint(-9, 12), rng.choice([1, 2, 3]))
                    for _ in range(n)
                ]
                try:
                    assert commutative_recovery(k, n, scalars)
                    break
                except (ZeroDenominator, SingularMinor):
                    continue


def test_recovery_at_shifted_schur_vanishing_point():
    # x = (lambda_i + n - i) pattern makes falling factorials vanish; both
    # sides agree (here: they are both zero or both the same value)
    scalars = [Fraction(3), Fraction(1)]  # x_1 = lambda_1 + 1, x_2 = lambda_2
    try:
        assert commutative_recovery(2, 2, scalars)
    except ZeroDenominator:
        pytest.skip("denominator vanished for this sample")


def test_recovery_k_beyond_n():
    # the oracle ratio is nonzero for the complete homogeneous family and
    # zero for the elementary one
    assert commutative_oracle("L", 3, [Fraction(2), Fraction(5, 2)]) == 0
    val = commutative_oracle("S", 2, [Fraction(5, 2)])
    assert val == Fraction(5, 2) * Fraction(3, 2)


def test_quasi_schur_row_and_column():
    A = assignment(4, 2, 300)
    for k in (1, 2, 3):
        assert quasi_schur_spec((k,), A) == s_spec(k, A)
        assert quasi_schur_spec((1,) * k, A) == lambda_spec(k, A)


def test_quasi_schur_conjugate_identity():
    A = assignment(4, 2, 310)
    assert quasi_schur_spec((1, 1, 2), A) == quasi_schur_lambda_form((1, 3), A)
    assert quasi_schur_spec((1, 3), A) == quasi_schur_lambda_form((1, 1, 2), A)


def test_quasi_schur_requires_partition():
    A = assignment(2, 1, 320)
    with pytest.raises(ValueError):
        quasi_schur_spec((2, 1, 2), A)


def test_frobenius_form():
    assert frobenius_form((1, 1, 2)) == ((2,), (1,))
    assert frobenius_form((2, 2)) == ((0, 1), (0, 1))
    assert hook_partition(2, 1) == (1, 1, 2)
    assert hook_partition(0, 3) == (4,)


def test_giambelli():
    A = assignment(4, 2, 330)
    for shape in ((2, 2), (1, 2, 2), (2, 3), (1, 1, 3)):
        try:
            assert giambelli_check(shape, A)
        except SingularMinor:
            continue


def test_assignment_json_round_trip():
    A = assignment(2, 2, 340)
    data = A.to_json()
    B = VariableAssignment.from_json(data)
    assert B.vars == A.vars and B.sub == A.sub
    assert data["d"] == 2 and len(data["vars"]) == 2
    assert all(len(v) == 4 for v in data["vars"])


def test_assignment_validation():
    with pytest.raises(ValueError):
        VariableAssignment((MatValue([[1]]),), ParamSubstitution.symbolic())
    with pytest.raises(ValueError):
        VariableAssignment(
            (MatValue([[1]]), MatValue.identity(2)), STAR
        )
    with pytest.raises(ValueError):
        VariableAssignment((), STAR)

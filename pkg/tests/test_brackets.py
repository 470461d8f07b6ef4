import pytest

from quadlie.braided import BraidedSpace, h_of_c, split_minpoly
from quadlie.brackets import (
    BasisMismatch,
    Inconsistent,
    QuadraticLieAlgebra,
    RestrictedBracket,
    check_dim1_rigidity,
    derived_antisym_plus,
    dim1_instance,
    image_subalgebra,
    lift_bracket,
    random_verified_brackets,
    restrict_bracket,
    solve_linear_bracket_space,
    verify_lifted,
    verify_qbracket,
)
from quadlie.classify import conjugate
from quadlie.fields import GF, QQ, CharTwo
from quadlie.linalg import Mat
from quadlie.table import GAMMA_RULES, default_gamma, gamma_allowed, row_instance


def all_rows(field=QQ):
    return [row_instance(r, field, default_gamma(r, field)) for r in range(1, 9)]


def test_verify_lifted_table_rows():
    for q in all_rows():
        rep = verify_lifted(q)
        assert rep.ok, rep


def test_verify_lifted_gamma_sweep():
    for row in range(1, 9):
        if GAMMA_RULES[row] is None:
            continue
        for g in (0, 1, 2):
            if gamma_allowed(row, QQ, g):
                assert verify_lifted(row_instance(row, QQ, g)).ok, (row, g)


def test_zero_bracket_always_verifies():
    for q in all_rows():
        zero = QuadraticLieAlgebra(q.space, Mat.zero(QQ, 2, 4))
        assert verify_lifted(zero).ok


def test_corrupted_bracket_fails():
    q = row_instance(1, QQ)
    bad = [row[:] for row in q.beta.a]
    bad[1][1] = QQ(1)  # extra second-row entry no longer kills Im(c + Id)
    rep = verify_lifted(QuadraticLieAlgebra(q.space, Mat(QQ, bad)))
    assert not rep.antisym
    assert not rep.ok


def test_mismatched_bracket_fails_compatibility():
    # the antisymmetric pair bracket on the row-4 braiding passes
    # antisymmetry but not the braiding compatibility
    q4 = row_instance(4, QQ, 1)
    foreign = Mat.from_rows(QQ, [[0, 1, -1, 0], [0, 0, 0, 0]])
    rep = verify_lifted(QuadraticLieAlgebra(q4.space, foreign))
    assert rep.antisym
    assert not (rep.bracket_left and rep.bracket_right)
    assert not rep.ok


def test_char_two_rejected():
    F2 = GF(2)
    sp = BraidedSpace(F2, 2, Mat.identity(F2, 4))
    with pytest.raises(CharTwo):
        verify_lifted(QuadraticLieAlgebra(sp, Mat.zero(F2, 2, 4)))


def test_restrict_bracket_frozen_values():
    # row 1: the restricted bracket sends x2(x)x1 - x1(x)x2 to -x1
    q = row_instance(1, QQ)
    rb = restrict_bracket(q, split_minpoly(q.space))
    assert rb.beta_bar == Mat.from_rows(QQ, [[-1], [0]])
    # row 8: h = (X-1)^2 maps x2(x)x1 to 2(x2(x)x1 - x1(x)x2), so the
    # restricted bracket must send the echelon generator to x1/2
    q8 = row_instance(8, QQ, 1)
    split8 = split_minpoly(q8.space)
    hc = h_of_c(q8.space, split8)
    assert list(hc.col(1)) == [QQ(0), QQ(2), QQ(-2), QQ(0)]
    rb8 = restrict_bracket(q8, split8)
    assert rb8.beta_bar == Mat.from_rows(QQ, [[QQ(1) / QQ(2)], [0]])


def test_lift_restrict_roundtrip_all_rows():
    for q in all_rows():
        split = split_minpoly(q.space)
        rb = restrict_bracket(q, split)
        assert verify_qbracket(rb).ok
        q2 = lift_bracket(rb, split)
        assert q2.beta == q.beta
        rb2 = restrict_bracket(q2, split)
        assert rb2.beta_bar == rb.beta_bar


def test_lift_zero():
    q = row_instance(3, QQ, 1)
    split = split_minpoly(q.space)
    e2 = q.space.e2()
    zero = RestrictedBracket(q.space, e2, Mat.zero(QQ, 2, e2.dim))
    assert verify_qbracket(zero).ok
    assert lift_bracket(zero, split).beta.is_zero()


def test_restrict_inconsistent_bracket():
    # the flip sends x1(x)x1 into Im(c + Id); a bracket not killing it
    # cannot factor through the primitives
    q = row_instance(1, QQ)
    bad = Mat.from_rows(QQ, [[1, 0, 0, 0], [0, 0, 0, 0]])
    with pytest.raises(Inconsistent):
        restrict_bracket(QuadraticLieAlgebra(q.space, bad), split_minpoly(q.space))


def test_lift_bracket_rejects_invalid_split():
    # an invalid factorization whose evaluation escapes the primitive
    # space is detected by the lift
    from quadlie.braided import MinpolySplit
    from quadlie.linalg import HypothesisViolated, Poly

    q1 = row_instance(1, QQ)
    rb1 = restrict_bracket(q1, split_minpoly(q1.space))
    fake = MinpolySplit(
        f=Poly(QQ, [0, 1, 1]), h=Poly(QQ, [0, 1]), h_at_minus1=QQ(-1)
    )  # h(c) = c has full image on the invertible flip
    with pytest.raises(HypothesisViolated):
        lift_bracket(RestrictedBracket(q1.space, q1.space.e2(), rb1.beta_bar), fake)


def test_verify_qbracket_rejects_wrong_basis():
    q = row_instance(1, QQ)
    bigger = BraidedSpace(QQ, 2, Mat.identity(QQ, 4).scale(QQ(-1)))
    with pytest.raises(BasisMismatch):
        verify_qbracket(RestrictedBracket(q.space, bigger.e2(), Mat.zero(QQ, 2, 4)))


def test_verify_qbracket_corrupted_row3():
    # sending x1(x)x1 to x2 is incompatible with the braiding
    q = row_instance(3, QQ, 1)
    e2 = q.space.e2()
    assert e2.basis[0] == (QQ(1), QQ(0), QQ(0), QQ(0))
    bb = Mat.from_rows(QQ, [[0, -1], [1, 0]])  # e1 -> x2, e2 -> -x1
    rep = verify_qbracket(RestrictedBracket(q.space, e2, bb))
    assert not rep.bracket
    assert not rep.ok


def test_image_subalgebra_rows():
    # rank-one image: the restriction carries the zero bracket
    for row in (1, 4):
        q = row_instance(row, QQ, default_gamma(row, QQ))
        sub = image_subalgebra(q)
        assert sub.space.dim == 1
        assert sub.beta.is_zero()
        assert verify_lifted(sub).ok
    q4 = row_instance(4, QQ, 1)
    sub4 = image_subalgebra(q4)
    assert sub4.space.c == Mat.from_rows(QQ, [[1]])

    zero = QuadraticLieAlgebra(q4.space, Mat.zero(QQ, 2, 4))
    assert image_subalgebra(zero) is None


def test_dim1_rigidity_exhaustive():
    for p in (3, 5, 7):
        assert check_dim1_rigidity(GF(p))


def test_dim1_specific_failure_over_q():
    # c = -1 with a unit bracket passes antisymmetry but not compatibility
    q = dim1_instance(QQ, -1, 1)
    rep = verify_lifted(q)
    assert rep.antisym
    assert not (rep.bracket_left and rep.bracket_right)


def test_derived_antisym_plus():
    q3 = row_instance(3, QQ, 1)
    assert derived_antisym_plus(q3)
    for q in all_rows():
        assert derived_antisym_plus(q)  # vacuous on zero-e2bar rows


def test_derived_antisym_plus_random_gf5():
    sp = row_instance(3, GF(5), 2).space
    found = random_verified_brackets(sp, count=5, seed=31)
    assert found
    for q in found:
        assert derived_antisym_plus(q)


def _kills_e2bar(space, mat):
    return all(not x for v in space.e2bar().basis for x in mat.apply(v))


def test_jacobi_equivalent_to_one_sided_vanishing():
    # in odd characteristic, with antisymmetry and compatibility in place,
    # the Jacobi condition holds iff b b1 kills the domain iff b b2 does
    cases = []
    q3 = row_instance(3, QQ, 1)
    cases.append(q3)
    sp5 = row_instance(3, GF(5), 2).space
    cases.extend(random_verified_brackets(sp5, count=8, seed=77))
    for q in cases:
        rep = verify_lifted(q)
        assert rep.antisym and rep.bracket_left and rep.bracket_right
        one = _kills_e2bar(q.space, q.beta @ q.beta1())
        two = _kills_e2bar(q.space, q.beta @ q.beta2())
        assert rep.jacobi == one == two

    # a Jacobi violator (which also breaks compatibility) fails both
    # one-sided vanishing conditions as well
    from quadlie.brackets import RestrictedBracket as RB

    q = row_instance(3, QQ, 1)
    split = split_minpoly(q.space)
    bb = Mat.from_rows(QQ, [[0, -1], [1, 0]])
    bad = lift_bracket(RB(q.space, q.space.e2(), bb), split)
    rep = verify_lifted(bad)
    assert rep.antisym and not rep.jacobi and not rep.bracket_left
    assert not _kills_e2bar(bad.space, bad.beta @ bad.beta1())
    assert not _kills_e2bar(bad.space, bad.beta @ bad.beta2())


def test_scaling_invariance():
    # nonzero rescalings of the bracket stay verified, and the scalar map
    # intertwines the two structures
    for q in all_rows():
        lam = QQ(3)
        scaled = QuadraticLieAlgebra(q.space, q.beta.scale(lam))
        assert verify_lifted(scaled).ok
        f = Mat.identity(QQ, 2).scale(lam)
        # f . (lam beta) = beta . (f (x) f)
        from quadlie.braided import mat_tensor

        assert f @ scaled.beta == q.beta @ mat_tensor(QQ, f, f)
        # equivalently, conjugating by lam Id divides the bracket by lam
        assert conjugate(scaled, f).beta == q.beta


def test_solve_linear_bracket_space_contains_table_bracket():
    for q in all_rows():
        basis = solve_linear_bracket_space(q.space)
        # the table bracket lies in the affine span of the solution basis
        from quadlie.linalg import Subspace

        vecs = [tuple(x for row in b.a for x in row) for b in basis]
        target = tuple(x for row in q.beta.a for x in row)
        sub = Subspace(QQ, 8, vecs)
        assert sub.contains(target)


def test_random_verified_brackets_deterministic():
    sp = row_instance(1, GF(5)).space
    a = random_verified_brackets(sp, count=10, seed=17)
    b = random_verified_brackets(sp, count=10, seed=17)
    assert [q.beta for q in a] == [q.beta for q in b]
    for q in a:
        assert verify_lifted(q).ok

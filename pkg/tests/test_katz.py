import math
from fractions import Fraction

import pytest

from katzcyclic import (
    DifferentialModule,
    InternalConsistencyError,
    PreconditionError,
    RationalFunctionField,
    UnsupportedOperationError,
    alpha,
    apply_nabla,
    base_change,
    companion_form,
    epsilon,
    find_cyclic,
    h_matrix,
    invert_coefficients,
    is_basis,
    katz_vector,
    derivative_coefficients,
    linalg,
    polys,
    rescale_derivation,
    specialize_vector,
    vandermonde_det,
    xpoly,
)
from katzcyclic.fields import QQ
from katzcyclic.katz import assemble_h, h_entry, qx_to_str
from katzcyclic.xpoly import XPolyRing

from _helpers import (
    expanded_h_rows,
    free_module_h_entries,
    nabla_on_xpoly_row,
    katz_vector_xpoly_row,
    random_module,
    seeded,
)


@pytest.fixture
def qx():
    return RationalFunctionField()


def mk(ring, rows):
    g1 = linalg.freeze([[ring.parse(e) for e in row] for row in rows])
    return DifferentialModule(ring=ring, n=len(rows), g1=g1)


class TestEpsilonAlpha:
    def test_epsilon_s0_upper_triangular(self):
        for n in (2, 3, 4, 5):
            for i in range(n):
                for j in range(n):
                    assert epsilon(0, i, j, n) == (1 if j >= i else 0)

    def test_epsilon_examples(self):
        assert epsilon(4, 1, 0, 3) == 0
        assert epsilon(2, 2, 1, 3) == 1

    def test_index_range_errors(self):
        with pytest.raises(PreconditionError):
            epsilon(0, 3, 0, 3)
        with pytest.raises(PreconditionError):
            alpha(5, 0, 0, 3)

    def test_alpha_s0_is_taylor(self):
        for n in (2, 3, 4):
            for i in range(n):
                for j in range(i, n):
                    assert alpha(0, i, j, n) == 1

    def test_alpha_spot_values(self):
        assert alpha(1, 0, 1, 3) == -2
        assert alpha(2, 2, 1, 3) == -3
        assert alpha(3, 3, 1, 4) == 4
        assert alpha(4, 4, 2, 5) == 25

    def test_sign_spellings_agree(self):
        # (-1)^(s+k) and (-1)^(s-k) give the same sum
        def alt(s, i, j, n):
            if epsilon(s, i, j, n) == 0:
                return 0
            total = 0
            for k in range(max(0, s + j - (n - 1)), min(i, s) + 1):
                sign = -1 if (s - k) % 2 else 1
                total += sign * math.comb(s - k + j, j) * math.comb(i, k)
            return total

        for n in (2, 3, 4):
            for s in range(2 * n - 1):
                for i in range(n):
                    for j in range(n):
                        assert alpha(s, i, j, n) == alt(s, i, j, n)

    def test_alpha_integer_valued(self):
        for n in (2, 3, 4, 5):
            for s in range(2 * n - 1):
                for i in range(n):
                    for j in range(n):
                        assert isinstance(alpha(s, i, j, n), int)


class TestHMatrix:
    def test_golden_n2(self):
        def strs(s):
            return [[qx_to_str(e) for e in row] for row in h_matrix(s, 2)]

        assert strs(0) == [["1", "X"], ["0", "1"]]
        assert strs(1) == [["-X", "0"], ["0", "X"]]
        assert strs(2) == [["0", "0"], ["-X", "0"]]

    def test_derived_n3_s3_rows(self):
        rows = [[qx_to_str(e) for e in row] for row in h_matrix(3, 3)]
        assert rows[0] == ["0", "0", "0"]
        assert rows[1] == ["1/2*X^2", "0", "0"]
        assert rows[2] == ["X", "-X^2", "0"]

    def test_h0_is_taylor_matrix(self):
        for n in (2, 3, 4, 5):
            h0 = h_matrix(0, n)
            for i in range(n):
                for j in range(n):
                    if j < i:
                        assert h0[i][j] == ()
                    else:
                        m = j - i
                        expected = tuple(
                            [Fraction(0)] * m + [Fraction(1, math.factorial(m))]
                        )
                        assert h0[i][j] == expected

    def test_support_interval(self):
        # for s >= 1 entries vanish when j - i is outside
        # [max(1-s, 1-n), n-1-s]; for s = 0 the matrix is upper triangular
        for n in (2, 3, 4, 5):
            for s in range(2 * n - 1):
                lo = 0 if s == 0 else max(1 - s, 1 - n)
                for i in range(n):
                    for j in range(n):
                        if not (lo <= j - i <= n - 1 - s):
                            assert h_entry(s, i, j, n) == ()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_free_module_expansion_oracle(self, n):
        # the defining property: h_{s;i,j} is the Q[X] coefficient of the
        # s-th derivative of e_j inside nabla^i(c(e, X))
        expansion = free_module_h_entries(n)
        for i in range(n):
            seen = dict(expansion[i])
            for s in range(2 * n - 1):
                for j in range(n):
                    expected = seen.pop((s, j), ())
                    assert h_entry(s, i, j, n) == expected
            assert not seen  # nothing outside s <= 2n-2

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_h0_inverse_is_sign_flip(self, n):
        h0 = h_matrix(0, n)
        h0neg = [
            [tuple(c if k % 2 == 0 else -c for k, c in enumerate(e)) for e in row]
            for row in h0
        ]
        for i in range(n):
            for j in range(n):
                acc = ()
                for l in range(n):
                    acc = polys.add(QQ, acc, polys.mul(QQ, h0[i][l], h0neg[l][j]))
                expected = (Fraction(1),) if i == j else ()
                assert acc == expected

    def test_s_out_of_range(self):
        with pytest.raises(PreconditionError):
            h_matrix(5, 3)


class TestKatzVector:
    def test_trivial_connection(self, qx):
        m = mk(qx, [["0"] * 3] * 3)
        kv = katz_vector(m)
        for j in range(3):
            for k in range(3):
                expected = Fraction(1, math.factorial(j)) if k == j else Fraction(0)
                assert qx.eq(kv.coeffs[j][k], qx.from_fraction(expected))

    def test_nilpotent_up(self, qx):
        m = mk(qx, [["0", "1"], ["0", "0"]])
        kv = katz_vector(m)
        # c = e0 + X(e1 - nabla e0) = e0
        assert kv.coeffs[0] == (qx.one, qx.zero)
        assert len(kv.coeffs[1]) == 2 and all(qx.is_zero(c) for c in kv.coeffs[1])

    def test_nilpotent_down(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        kv = katz_vector(m)
        assert kv.coeffs[0] == (qx.one, qx.zero)
        assert kv.coeffs[1] == (qx.zero, qx.one)

    def test_constant_coefficient_is_e0(self, qx):
        rng = seeded(41)
        for n in (2, 3):
            m = random_module(qx, rng, n, max_deg=2)
            kv = katz_vector(m)
            assert kv.coeffs[0] == tuple(
                qx.one if k == 0 else qx.zero for k in range(n)
            )


class TestDerivativeCoefficients:
    def test_i0_identity(self, qx):
        m = mk(qx, [["0", "1"], ["x", "0"]])
        c0 = [(qx.parse("x"), qx.one), (qx.zero, qx.parse("x^2"))]
        for j in range(2):
            assert derivative_coefficients(m, c0, 0, j) == c0[j]

    def test_trivial_connection_differentiates(self, qx):
        m = mk(qx, [["0"] * 2] * 2)
        c0 = [(qx.one, qx.zero), (qx.parse("x"), qx.one), (qx.zero, qx.parse("2"))]
        for j in range(2):
            got = derivative_coefficients(m, c0, 1, j)
            expected = linalg.row_add(
                qx,
                linalg.row_derive(qx, c0[j]),
                linalg.row_scale(qx, qx.from_int(j + 1), c0[j + 1]),
            )
            assert got == expected

    def test_against_direct_symbolic_differentiation(self, qx):
        rng = seeded(43)
        n = 3
        m = random_module(qx, rng, n, max_deg=2)
        c0 = [
            tuple(qx.from_int(rng.randint(-3, 3)) for _ in range(n))
            for _ in range(n)
        ]
        row = tuple(
            xpoly.normalize(qx, [c0[j][k] for j in range(n)]) for k in range(n)
        )
        for i in range(n):
            for j in range(n):
                got = derivative_coefficients(m, c0, i, j)
                expected = tuple(
                    row[k][j] if j < len(row[k]) else qx.zero for k in range(n)
                )
                assert got == expected
            row = nabla_on_xpoly_row(qx, row, m.g1)


class TestInvertCoefficients:
    def test_j0_identity(self, qx):
        m = mk(qx, [["0", "1"], ["x", "0"]])
        rows = [(qx.one, qx.parse("x")), (qx.zero, qx.one)]
        out = invert_coefficients(m, rows)
        assert out[0] == rows[0]

    def test_basis_choice_reproduces_candidate(self, qx):
        rng = seeded(47)
        for n in (2, 3):
            m = random_module(qx, rng, n, max_deg=2)
            basis = [
                tuple(qx.one if k == i else qx.zero for k in range(n))
                for i in range(n)
            ]
            out = invert_coefficients(m, basis)
            kv = katz_vector(m)
            for j in range(n):
                assert out[j] == kv.coeffs[j]

    def test_round_trip_random_vectors(self, qx):
        rng = seeded(53)
        n = 3
        m = random_module(qx, rng, n, max_deg=2)
        for _ in range(10):
            c0 = [
                tuple(qx.from_int(rng.randint(-3, 3)) for _ in range(n))
                for _ in range(n)
            ]
            zero_components = [derivative_coefficients(m, c0, i, 0) for i in range(n)]
            back = invert_coefficients(m, zero_components)
            assert tuple(back) == tuple(tuple(r) for r in c0)


class TestBaseChange:
    def test_trivial_connection(self, qx):
        m = mk(qx, [["0"] * 3] * 3)
        bc = base_change(m)
        xr = XPolyRing(qx)
        h0 = tuple(
            tuple(
                xpoly.normalize(qx, [qx.from_fraction(c) for c in e]) for e in row
            )
            for row in h_matrix(0, 3)
        )
        assert linalg.mat_eq(xr, bc.h_assembled, h0)
        assert bc.det_poly == (qx.one,)

    def test_hand_computed_n2(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        bc = base_change(m)
        X = (qx.zero, qx.one)
        assert bc.h_assembled == ((
            (qx.one,), X), (X, (qx.one,)))
        assert bc.det_poly == (qx.one, qx.zero, qx.from_int(-1))
        assert qx.eq(bc.coefficients[0], qx.one)

    def test_rows_match_direct_expansion(self, qx):
        rng = seeded(59)
        for n in (2, 3):
            m = random_module(qx, rng, n, max_deg=2)
            H, _ = assemble_h(m)
            rows = expanded_h_rows(m)
            for i in range(n):
                for k in range(n):
                    assert xpoly.eq(qx, H[i][k], rows[i][k])

    def test_wedge_identity(self, qx):
        # det of the coordinate matrix of the derivative family = det H(X)
        rng = seeded(61)
        m = random_module(qx, rng, 3, max_deg=1)
        bc = base_change(m)
        xr = XPolyRing(qx)
        rows = expanded_h_rows(m)
        assert xpoly.eq(qx, linalg.det(xr, linalg.freeze(rows)), bc.det_poly)


class TestSpecialize:
    def test_x_at_zero_is_t(self, qx):
        X = (qx.zero, qx.one)
        assert qx.eq(xpoly.specialize(qx, X, qx.zero), qx.t)

    def test_polynomial_substitution(self, qx):
        f = (qx.one, qx.zero, qx.from_int(-1))  # 1 - X^2
        a = qx.from_int(2)
        assert qx.eq(xpoly.specialize(qx, f, a), qx.parse("1 - (x-2)^2"))

    def test_non_constant_rejected(self, qx):
        with pytest.raises(PreconditionError):
            xpoly.specialize(qx, (qx.one,), qx.parse("x"))

    def test_commutes_with_connection(self, qx):
        rng = seeded(67)
        for n in (2, 3):
            m = random_module(qx, rng, n, max_deg=2)
            row = katz_vector_xpoly_row(m)
            a = qx.from_int(rng.randint(-2, 2))
            specialized = tuple(xpoly.specialize(qx, f, a) for f in row)
            lhs = apply_nabla(m, specialized, 1)
            nabla_row = nabla_on_xpoly_row(qx, row, m.g1)
            rhs = tuple(xpoly.specialize(qx, f, a) for f in nabla_row)
            assert all(qx.eq(x, y) for x, y in zip(lhs, rhs))


class TestFindCyclic:
    def test_trivial_connection(self, qx):
        m = mk(qx, [["0"] * 3] * 3)
        res = find_cyclic(m)
        assert qx.eq(res.a, qx.zero)
        assert qx.eq(res.determinant, qx.one)
        for j in range(3):
            assert qx.eq(
                res.vector[j],
                qx.mul(qx.from_fraction(Fraction(1, math.factorial(j))), qx.pow(qx.t, j)),
            )

    def test_hand_computed_n2(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        res = find_cyclic(m)
        assert res.candidate_index == 0
        assert qx.eq(res.determinant, qx.parse("1 - x^2"))
        assert res.vector == (qx.one, qx.parse("x"))

    def test_random_results_pass_is_basis(self, qx):
        rng = seeded(71)
        for _ in range(10):
            m = random_module(qx, rng, 3, max_deg=2)
            res = find_cyclic(m)
            family = [res.vector]
            for _ in range(2):
                family.append(apply_nabla(m, family[-1], 1))
            _, ok = is_basis(m, family)
            assert ok

    def test_duplicate_candidates_rejected(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        cands = [qx.from_int(i) for i in (0, 1, 1)]
        with pytest.raises(PreconditionError):
            find_cyclic(m, cands)

    def test_too_few_candidates_rejected(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        with pytest.raises(PreconditionError):
            find_cyclic(m, [qx.zero])

    def test_non_field_needs_candidates(self):
        from katzcyclic import GaussPolynomialRing

        ring = GaussPolynomialRing(3)
        m = DifferentialModule(ring=ring, n=2, g1=linalg.zeros(ring, 2))
        with pytest.raises(UnsupportedOperationError):
            find_cyclic(m)


class TestVandermonde:
    def test_small_cases(self):
        assert vandermonde_det([0, 1]) == 1
        assert vandermonde_det([0, 1, 2]) == 2

    def test_against_brute_force_determinant(self):
        def brute(consts):
            n = len(consts)
            mat = [[Fraction(c) ** j for j in range(n)] for c in consts]

            def det(m):
                if len(m) == 1:
                    return m[0][0]
                total = Fraction(0)
                for i in range(len(m)):
                    minor = [row[1:] for k, row in enumerate(m) if k != i]
                    term = m[i][0] * det(minor)
                    total += term if i % 2 == 0 else -term
                return total

            return det(mat)

        consts = list(range(7))
        assert vandermonde_det(consts) == brute(consts)

    def test_zero_iff_duplicates(self):
        assert vandermonde_det([1, 3, 3]) == 0
        assert vandermonde_det([1, 3, 4]) != 0

    def test_ring_valued(self, qx):
        consts = [qx.from_int(i) for i in range(4)]
        got = vandermonde_det(consts, ring=qx)
        assert qx.eq(got, qx.from_fraction(vandermonde_det(range(4))))


class TestCompanionForm:
    def test_rank_one(self, qx):
        m = mk(qx, [["x"]])
        (b0,) = companion_form(m, (qx.one,))
        assert qx.eq(b0, qx.parse("x"))

    def residual_is_zero(self, qx, m, c):
        b = companion_form(m, c)
        family = [tuple(c)]
        for _ in range(m.n):
            family.append(apply_nabla(m, family[-1], 1))
        resid = family[m.n]
        for k in range(m.n):
            resid = linalg.row_sub(qx, resid, linalg.row_scale(qx, b[k], family[k]))
        assert all(qx.is_zero(c_) for c_ in resid)

    def test_trivial_connection_residual(self, qx):
        m = mk(qx, [["0", "0"], ["0", "0"]])
        res = find_cyclic(m)
        self.residual_is_zero(qx, m, res.vector)

    def test_hand_example_residual(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        self.residual_is_zero(qx, m, (qx.one, qx.parse("x")))

    def test_random_residuals(self, qx):
        rng = seeded(73)
        for _ in range(5):
            m = random_module(qx, rng, 3, max_deg=2)
            res = find_cyclic(m)
            self.residual_is_zero(qx, m, res.vector)

    def test_non_basis_rejected(self, qx):
        from katzcyclic import NotInvertibleError

        m = mk(qx, [["0", "1"], ["0", "0"]])
        # c = e0 has nabla(c) = e1? no: row convention gives nabla(e0) = e1;
        # pick c with nabla c parallel to c instead
        with pytest.raises(NotInvertibleError):
            companion_form(m, (qx.zero, qx.one))


class TestDerivationRescaling:
    def test_triangular_base_change_n2(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        f = qx.parse("x")
        res = find_cyclic(m)
        c = res.vector
        scaled = rescale_derivation(m, f)
        family = [tuple(c)]
        for _ in range(m.n - 1):
            family.append(apply_nabla(m, family[-1], 1))
        scaled_family = [tuple(c)]
        for _ in range(m.n - 1):
            scaled_family.append(apply_nabla(scaled, scaled_family[-1], 1))
        basis_rows = linalg.freeze(family)
        for k, w in enumerate(scaled_family):
            coords = linalg.solve_left(qx, basis_rows, w)
            assert qx.eq(coords[k], qx.pow(f, k))
            for j in range(k + 1, m.n):
                assert qx.is_zero(coords[j])

    def test_cyclic_transfers_under_rescaling(self, qx):
        m = mk(qx, [["0", "0"], ["1", "0"]])
        f = qx.parse("x")
        res = find_cyclic(m)
        scaled = rescale_derivation(m, f)
        family = [res.vector, apply_nabla(scaled, res.vector, 1)]
        _, ok = is_basis(scaled, family)
        assert ok

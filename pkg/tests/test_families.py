import math
from fractions import Fraction

import pytest

from appellseq.engine import NormalizationError
from appellseq.families import (
    FamilySpec,
    classical_cauchy_oracle,
    family_coefficients,
    family_identity_checks,
    load_custom_family,
)

F = Fraction


class TestFamilySpec:
    def test_labels(self):
        assert FamilySpec.bernoulli().label == "bernoulli"
        assert FamilySpec.euler().label == "euler"
        assert FamilySpec.hyper_bernoulli(2, 3).label == "hyper-bernoulli(2,3)"
        assert FamilySpec.hyper_cauchy(1, 4).label == "hyper-cauchy(1,4)"

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            FamilySpec("weierstrass")

    @pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (-2, 3)])
    def test_parametric_bounds(self, m, n):
        with pytest.raises(ValueError):
            FamilySpec.hyper_bernoulli(m, n)
        with pytest.raises(ValueError):
            FamilySpec.hyper_cauchy(m, n)

    def test_custom_requires_normalized_head(self):
        with pytest.raises(ValueError):
            FamilySpec.custom([])
        with pytest.raises(NormalizationError):
            FamilySpec.custom([F(2), F(1)])
        spec = FamilySpec.custom([1, F(-1, 2)])
        assert spec.values == (1, F(-1, 2))


class TestCoefficients:
    def test_bernoulli(self):
        d = family_coefficients(FamilySpec.bernoulli(), 5).d
        assert d == (1, F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6))

    def test_euler(self):
        d = family_coefficients(FamilySpec.euler(), 4).d
        assert d == (1, F(1, 2), F(1, 2), F(1, 2), F(1, 2))

    def test_hyper_bernoulli_1_1_is_bernoulli(self):
        a = family_coefficients(FamilySpec.hyper_bernoulli(1, 1), 10)
        b = family_coefficients(FamilySpec.bernoulli(), 10)
        assert a.d == b.d

    def test_hyper_bernoulli_general_entry(self):
        # d_n = (M)^(n) / (M+N)^(n)
        d = family_coefficients(FamilySpec.hyper_bernoulli(2, 3), 3).d
        assert d == (1, F(2, 5), F(2 * 3, 5 * 6), F(2 * 3 * 4, 5 * 6 * 7))

    def test_hyper_cauchy_sign_alternates(self):
        # d_n = (-1)^n (M)^(n) (N)^(n) / (N+1)^(n); M=N=1 gives n!/(n+1)
        d = family_coefficients(FamilySpec.hyper_cauchy(1, 1), 4).d
        assert d == (
            1,
            F(-1, 2),
            F(math.factorial(2), 3),
            F(-math.factorial(3), 4),
            F(math.factorial(4), 5),
        )

    def test_hyper_cauchy_general_entry(self):
        d = family_coefficients(FamilySpec.hyper_cauchy(2, 3), 2).d
        assert d == (1, F(-2 * 3, 4), F(2 * 3 * 3 * 4, 4 * 5))

    def test_custom_serves_prefix(self):
        spec = FamilySpec.custom([1, F(1, 2), F(1, 3)])
        assert family_coefficients(spec, 1).d == (1, F(1, 2))
        with pytest.raises(ValueError):
            family_coefficients(spec, 3)

    def test_negative_n_max_rejected(self):
        with pytest.raises(ValueError):
            family_coefficients(FamilySpec.bernoulli(), -1)


class TestCustomFile:
    def test_load_with_comments_and_blanks(self, tmp_path):
        path = tmp_path / "family.txt"
        path.write_text("# custom family\n\n1\n-1/2\n\n1/12\n# trailing\n")
        spec = load_custom_family(path)
        assert spec.values == (1, F(-1, 2), F(1, 12))

    def test_line_numbers_in_errors(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1\n1/2\noops\n")
        with pytest.raises(ValueError, match="bad.txt:3"):
            load_custom_family(path)

    def test_unnormalized_head_rejected(self, tmp_path):
        path = tmp_path / "head.txt"
        path.write_text("3\n1/2\n")
        with pytest.raises(NormalizationError, match="d_0 must be 1"):
            load_custom_family(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n")
        with pytest.raises(ValueError, match="no coefficients"):
            load_custom_family(path)


class TestIdentityChecks:
    def test_m1_closed_form_holds(self):
        for N in range(1, 6):
            check = family_identity_checks(FamilySpec.hyper_bernoulli(1, N), 12)
            assert check.ok
            assert check.first_mismatch is None

    def test_other_specs_rejected(self):
        with pytest.raises(ValueError):
            family_identity_checks(FamilySpec.hyper_bernoulli(2, 1), 5)
        with pytest.raises(ValueError):
            family_identity_checks(FamilySpec.bernoulli(), 5)


class TestTelescoping:
    def test_rising_factorial_ratio_collapses(self):
        # (N)^(n) / (N+1)^(n) = N / (N+n), the step that turns the
        # hypergeometric Cauchy coefficients into the display entries
        from appellseq.arith import rising_factorial

        for N in range(1, 6):
            for n in range(11):
                ratio = rising_factorial(N, n) / rising_factorial(N + 1, n)
                assert ratio == F(N, N + n)


class TestCauchyOracle:
    def test_spot_values(self):
        c = classical_cauchy_oracle(4)
        assert c == [1, F(1, 2), F(-1, 6), F(1, 4), F(-19, 30)]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            classical_cauchy_oracle(-1)

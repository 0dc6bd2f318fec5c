import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrl.sequences import (
    VIOLATION_NON_POSITIVE,
    VIOLATION_SUM,
    IntSequence,
    ValidationResult,
    is_extra_super_increasing,
    is_super_increasing,
    minimal_extra_super,
    minimal_extra_super_fast,
    minimal_super,
    minimal_super_fast,
    read_sequence_file,
)

from reference_data import (
    EXTRA_SUPER_BROKEN,
    EXTRA_SUPER_EXAMPLE,
    MINIMAL_EXTRA_SUPER_7,
    MINIMAL_SUPER_7,
    SUPER_EXAMPLE,
    Z_16,
)


def brute_force_extra_super(terms):
    """Nested-loop restatement of the weighted-sum rule, used as an oracle."""
    for i, term in enumerate(terms):
        if term <= 0:
            return ValidationResult.violation(i, VIOLATION_NON_POSITIVE)
        if i >= 1 and term <= sum((i - j) * terms[j] for j in range(i)):
            return ValidationResult.violation(i, VIOLATION_SUM)
    return ValidationResult.ok()


class TestIntSequence:
    def test_coerces_terms_to_tuple(self):
        seq = IntSequence([1, 2, 3])
        assert seq.terms == (1, 2, 3)
        assert len(seq) == 3
        assert list(seq) == [1, 2, 3]
        assert seq[-1] == 3

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            IntSequence(())

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            IntSequence((1,), "fancy")

    def test_minimal_kinds_must_start_at_one(self):
        with pytest.raises(ValueError):
            IntSequence((2, 3), "minimal_super")
        with pytest.raises(ValueError):
            IntSequence((2, 3), "minimal_extra_super")
        IntSequence((1, 2), "minimal_super")


class TestSuperValidator:
    def test_worked_example(self):
        assert is_super_increasing(SUPER_EXAMPLE) == ValidationResult.ok()

    def test_boundary_equality_fails(self):
        verdict = is_super_increasing((1, 1))
        assert verdict == ValidationResult.violation(1, VIOLATION_SUM)

    def test_powers_of_two(self):
        assert is_super_increasing(MINIMAL_SUPER_7).valid

    def test_non_positive_term(self):
        assert is_super_increasing((3, 0, 9)) == ValidationResult.violation(
            1, VIOLATION_NON_POSITIVE
        )
        assert is_super_increasing((-1,)) == ValidationResult.violation(
            0, VIOLATION_NON_POSITIVE
        )

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_super_increasing(())

    def test_accepts_int_sequence(self):
        assert is_super_increasing(IntSequence(SUPER_EXAMPLE)).valid


class TestExtraSuperValidator:
    def test_worked_example(self):
        assert is_extra_super_increasing(EXTRA_SUPER_EXAMPLE).valid

    def test_weighted_sum_boundary(self):
        # at index 7 the weighted sum of the first seven terms is exactly 956
        verdict = is_extra_super_increasing(EXTRA_SUPER_BROKEN)
        assert verdict == ValidationResult.violation(7, VIOLATION_SUM)

    def test_short_prefixes(self):
        assert is_extra_super_increasing((1, 2)).valid
        assert is_extra_super_increasing((1, 2, 5)).valid
        assert is_extra_super_increasing((1, 2, 4)) == ValidationResult.violation(
            2, VIOLATION_SUM
        )

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_extra_super_increasing([])

    @given(st.lists(st.integers(min_value=-2, max_value=1000), min_size=1, max_size=12))
    def test_matches_brute_force(self, terms):
        assert is_extra_super_increasing(terms) == brute_force_extra_super(terms)


class TestMinimalSuper:
    def test_worked_example(self):
        assert minimal_super(7).terms == MINIMAL_SUPER_7

    def test_base_case(self):
        assert minimal_super(0).terms == (1,)

    def test_n20_last_term(self):
        assert minimal_super(20).terms[-1] == 1048576

    def test_closed_form_up_to_1000(self):
        terms = minimal_super(1000).terms
        assert all(terms[i] == 2 ** i for i in range(1001))

    def test_fast_variant_agrees(self):
        assert minimal_super_fast(300) == minimal_super(300)

    @pytest.mark.parametrize("n", [0, 1, 2, 10, 64, 500])
    def test_kind_and_validity(self, n):
        seq = minimal_super(n)
        assert seq.kind == "minimal_super"
        assert is_super_increasing(seq).valid

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            minimal_super(-1)


class TestMinimalExtraSuper:
    def test_worked_example(self):
        assert minimal_extra_super(7).terms == MINIMAL_EXTRA_SUPER_7
        assert minimal_extra_super_fast(7).terms == MINIMAL_EXTRA_SUPER_7

    def test_base_cases(self):
        assert minimal_extra_super(0).terms == (1,)
        assert minimal_extra_super_fast(0).terms == (1,)
        assert minimal_extra_super_fast(2).terms == (1, 2, 5)

    def test_n16_last_term(self):
        assert minimal_extra_super(16).terms[-1] == Z_16
        assert minimal_extra_super_fast(16).terms[-1] == Z_16

    def test_definitional_equals_recurrence(self):
        # the acceptance suite pushes this to n = 2000
        assert minimal_extra_super(300) == minimal_extra_super_fast(300)

    def test_prefix_stability(self):
        full = minimal_extra_super(50).terms
        for n in (0, 1, 7, 23):
            assert minimal_extra_super(n).terms == full[: n + 1]

    @pytest.mark.parametrize("n", [0, 1, 2, 10, 64, 500])
    def test_kind_and_validity(self, n):
        seq = minimal_extra_super_fast(n)
        assert seq.kind == "minimal_extra_super"
        assert is_extra_super_increasing(seq).valid

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            minimal_extra_super(-1)
        with pytest.raises(ValueError):
            minimal_extra_super_fast(-1)


class TestMinimality:
    @pytest.mark.parametrize("index", range(0, 33))
    def test_super_decrement_breaks_at_index(self, index):
        terms = list(minimal_super(32).terms)
        terms[index] -= 1
        verdict = is_super_increasing(terms)
        assert not verdict.valid
        assert verdict.first_violation_index == index

    @pytest.mark.parametrize("index", range(0, 33))
    def test_extra_super_decrement_breaks_at_index(self, index):
        terms = list(minimal_extra_super_fast(32).terms)
        terms[index] -= 1
        verdict = is_extra_super_increasing(terms)
        assert not verdict.valid
        assert verdict.first_violation_index == index


class TestFibonacciBisection:
    def test_terms_are_odd_indexed_fibonacci(self):
        fib = [0, 1]
        while len(fib) <= 2 * 1000 + 1:
            fib.append(fib[-1] + fib[-2])
        terms = minimal_extra_super_fast(1000).terms
        assert all(terms[i] == fib[2 * i + 1] for i in range(1001))


class TestSequenceFile:
    def write(self, tmp_path, text):
        path = tmp_path / "seq.txt"
        path.write_text(text, encoding="utf-8")
        return path

    def test_reads_plain_terms(self, tmp_path):
        path = self.write(tmp_path, "2\n3\n7\n")
        assert read_sequence_file(path).terms == (2, 3, 7)

    def test_ignores_comments_and_blanks(self, tmp_path):
        path = self.write(tmp_path, "# header\n\n 1 \n+2  # trailing\n\n5\n")
        assert read_sequence_file(path).terms == (1, 2, 5)

    def test_accepts_negative_terms(self, tmp_path):
        # validators report these as violations; parsing accepts them
        path = self.write(tmp_path, "1\n-2\n")
        assert read_sequence_file(path).terms == (1, -2)

    def test_rejects_garbage_with_line_number(self, tmp_path):
        path = self.write(tmp_path, "1\ntwo\n")
        with pytest.raises(ValueError, match="line 2"):
            read_sequence_file(path)

    def test_rejects_float_tokens(self, tmp_path):
        path = self.write(tmp_path, "1.5\n")
        with pytest.raises(ValueError, match="line 1"):
            read_sequence_file(path)

    def test_rejects_empty_file(self, tmp_path):
        path = self.write(tmp_path, "# nothing here\n")
        with pytest.raises(ValueError, match="no terms"):
            read_sequence_file(path)

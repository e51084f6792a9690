"""
Test Suite for Functions on Finite Sets
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.config import reset_settings
from src.core.errors import (
    DomainClosureError,
    EnumerationCapError,
    FunctionParseError,
    InputError
)
from src.core.funcgraph import (
    FiniteFunction,
    apply,
    enumerate_functions,
    func_matrix,
    parse_function,
    parse_int_list,
    render_function
)
from tests.strategies import finite_functions


class TestParsing:
    """Tests for reading image tables"""

    def test_comma_separated(self):
        assert parse_function("0,1,1").images == (0, 1, 1)

    def test_whitespace_separated(self):
        assert parse_function(" 1 0 ").images == (1, 0)
        assert parse_function("1, 0").images == (1, 0)

    def test_empty_is_degenerate(self):
        f = parse_function("")
        assert f.n == 0
        assert f.images == ()

    def test_closure_error_names_index(self):
        """Test an out-of-range image reports the offending index and value"""
        with pytest.raises(DomainClosureError) as exc_info:
            parse_function("0,1,2,4")
        assert exc_info.value.index == 3
        assert exc_info.value.image == 4
        assert "index 3" in str(exc_info.value)

    def test_image_equal_to_n_is_rejected(self):
        with pytest.raises(DomainClosureError):
            parse_function("1,2")

    def test_non_integer_token(self):
        with pytest.raises(FunctionParseError):
            parse_function("0,a,1")

    def test_negative_image(self):
        with pytest.raises(FunctionParseError):
            parse_function("0,-1")

    @pytest.mark.parametrize("text", ["0,+1", "0,1_0,2", "\u0660,\u0661", "0,1.0", "0,0x1", "0,--1"])
    def test_only_plain_decimal_tokens(self, text):
        """Test Python literal forms beyond plain digits are parse errors"""
        with pytest.raises(FunctionParseError):
            parse_function(text)

    def test_signed_list_rejects_literal_forms(self):
        with pytest.raises(FunctionParseError):
            parse_int_list("12,+3", allow_negative=True)

    def test_int_list_allows_negatives_on_request(self):
        assert parse_int_list("12, -3,4", allow_negative=True) == [12, -3, 4]

    def test_errors_are_input_errors(self):
        with pytest.raises(InputError):
            parse_function("5,0")

    @given(finite_functions())
    def test_render_parse_round_trip(self, f):
        assert parse_function(render_function(f)) == f


class TestFiniteFunction:
    """Tests for the image-table type"""

    def test_apply(self):
        f = FiniteFunction((0, 1, 1))
        assert f.apply(2) == 1
        assert f(0) == 0
        assert apply(f, 1) == 1

    def test_apply_out_of_domain(self):
        with pytest.raises(InputError):
            FiniteFunction((1, 0)).apply(2)

    def test_render(self):
        assert FiniteFunction((0, 1, 1)).render() == "0,1,1"
        assert str(FiniteFunction(())) == ""

    def test_direct_construction_checks_closure(self):
        with pytest.raises(DomainClosureError):
            FiniteFunction((0, 3, 1))


class TestFuncMatrix:
    """Tests for the adjacency matrix A_f"""

    def test_quadratic_map(self):
        assert func_matrix(FiniteFunction((0, 1, 1))).to_lists() == [
            [1, 0, 0],
            [0, 1, 0],
            [0, 1, 0],
        ]

    def test_swap(self):
        assert func_matrix(FiniteFunction((1, 0))).to_lists() == [[0, 1], [1, 0]]

    def test_singleton(self):
        assert func_matrix(FiniteFunction((0,))).to_lists() == [[1]]

    @given(finite_functions())
    def test_each_row_has_one_entry(self, f):
        for row in func_matrix(f).to_lists():
            assert sorted(row) == [0] * (f.n - 1) + [1]

    @given(finite_functions().flatmap(
        lambda f: st.tuples(st.just(f), st.lists(st.integers(-100, 100), min_size=f.n, max_size=f.n))
    ))
    def test_matrix_acts_by_pullback(self, case):
        """(A y)_i = y_{f(i)}"""
        f, y = case
        assert func_matrix(f).apply(y) == [y[f.images[i]] for i in range(f.n)]


class TestEnumeration:
    """Tests for exhaustive enumeration"""

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 27), (4, 256)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_functions(n)) == count

    def test_lexicographic_order(self):
        tables = [f.images for f in enumerate_functions(2)]
        assert tables == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_all_distinct(self):
        tables = [f.images for f in enumerate_functions(3)]
        assert len(set(tables)) == 27
        assert tables == sorted(tables)

    def test_cap_refuses_before_generating(self):
        """Test the cap error names the function count"""
        with pytest.raises(EnumerationCapError) as exc_info:
            enumerate_functions(7)
        assert exc_info.value.count == 7 ** 7
        assert "823543" in str(exc_info.value)

    def test_explicit_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_functions(3, cap=2)
        assert len(list(enumerate_functions(3, cap=3))) == 27

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv('LINREP_ENUM_CAP', '2')
        reset_settings()
        with pytest.raises(EnumerationCapError):
            enumerate_functions(3)
        assert len(list(enumerate_functions(2))) == 4

    def test_negative_n(self):
        with pytest.raises(InputError):
            enumerate_functions(-1)

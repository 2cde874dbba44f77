"""Type parsing and the closed-form counts (frozen oracle values in comments)."""

import pytest

from zclass.closed_form import (
    EXCEPTIONAL_TABLE,
    CoxeterType,
    IrreducibleType,
    parse_coxeter_type,
    z_count,
    z_count_bc,
    z_count_d,
    z_count_dihedral,
    z_count_exceptional,
)
from zclass.combinatorics import signed_partitions_of
from zclass.errors import CoxeterParseError, CoxeterRankError, OrderCapExceeded


class TestParser:
    def test_single(self):
        t = parse_coxeter_type("B3")
        assert t.factors == (IrreducibleType("B", 3),)
        assert str(t) == "B3"

    def test_product(self):
        t = parse_coxeter_type("B3 x I2(7)")
        assert t.factors == (IrreducibleType("B", 3), IrreducibleType("I2", 7))

    def test_whitespace_and_case_insensitive(self):
        assert str(parse_coxeter_type("b3xi2( 7 )")) == "B3 x I2(7)"
        assert str(parse_coxeter_type("  e6 X h4 ")) == "E6 x H4"

    def test_rank_errors(self):
        with pytest.raises(CoxeterRankError):
            parse_coxeter_type("D1")
        with pytest.raises(CoxeterRankError):
            parse_coxeter_type("I2(2)")
        with pytest.raises(CoxeterRankError):
            parse_coxeter_type("A0")

    def test_parse_errors_carry_position(self):
        with pytest.raises(CoxeterParseError) as exc:
            parse_coxeter_type("B3 * D4")
        assert exc.value.position == 3
        with pytest.raises(CoxeterParseError):
            parse_coxeter_type("")
        with pytest.raises(CoxeterParseError):
            parse_coxeter_type("E5")
        with pytest.raises(CoxeterParseError):
            parse_coxeter_type("B3 x")
        with pytest.raises(CoxeterParseError):
            parse_coxeter_type("I2 7")

    def test_b_and_c_both_accepted(self):
        assert z_count(parse_coxeter_type("B4")).total == z_count(
            parse_coxeter_type("C4")
        ).total

    def test_group_orders(self):
        assert parse_coxeter_type("B3").group_order() == 48
        assert parse_coxeter_type("D4").group_order() == 192
        assert parse_coxeter_type("I2(8)").group_order() == 16
        assert parse_coxeter_type("A3 x A1").group_order() == 48


class TestCountBC:
    # n=2..5 frozen from the exhaustive oracle run on C2 wr S_n
    @pytest.mark.parametrize(
        "n,expected", [(1, 1), (2, 4), (3, 5), (4, 13), (5, 17)]
    )
    def test_small_values(self, n, expected):
        assert z_count_bc(n) == expected

    @pytest.mark.parametrize("n", range(1, 26))
    def test_bounded_by_signed_partition_count(self, n):
        assert z_count_bc(n) <= len(signed_partitions_of(n))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            z_count_bc(0)


class TestCountD:
    # D2 ~ C2 x C2 (one z-class); D4 frozen from the oracle run
    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 5), (4, 10), (6, 20)])
    def test_small_values(self, n, expected):
        assert z_count_d(n) == expected

    @pytest.mark.parametrize("n", range(3, 26, 2))
    def test_odd_rank_equals_bc(self, n):
        assert z_count_d(n) == z_count_bc(n)

    def test_rejects_rank_below_two(self):
        with pytest.raises(ValueError):
            z_count_d(1)


class TestDihedral:
    @pytest.mark.parametrize(
        "m,expected",
        [(3, 3), (4, 4), (5, 3), (6, 3), (7, 3), (8, 4), (10, 3), (12, 4), (16, 4)],
    )
    def test_values(self, m, expected):
        assert z_count_dihedral(m) == expected

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            z_count_dihedral(2)


class TestExceptional:
    @pytest.mark.parametrize(
        "family,expected",
        [("F4", 16), ("E6", 24), ("E7", 28), ("E8", 65), ("H3", 4), ("H4", 15)],
    )
    def test_z_counts(self, family, expected):
        assert z_count_exceptional(family) == expected

    def test_conjugacy_metadata(self):
        assert {f: cc for f, (cc, _) in EXCEPTIONAL_TABLE.items()} == {
            "F4": 25,
            "E6": 25,
            "E7": 60,
            "E8": 112,
            "H3": 10,
            "H4": 34,
        }


class TestProductDispatch:
    def test_b3_times_i2_8(self):
        result = z_count(parse_coxeter_type("B3 x I2(8)"))
        assert result.total == 20
        assert [f.z_count for f in result.per_factor] == [5, 4]
        assert result.method == "formula"

    def test_h3_table(self):
        result = z_count(parse_coxeter_type("H3"))
        assert result.total == 4
        assert result.method == "table"

    def test_a1_by_oracle(self):
        result = z_count(parse_coxeter_type("A1"))
        assert result.total == 1
        assert result.method == "oracle"

    def test_total_multiplies(self):
        for text in ("B2 x D4", "I2(5) x A2", "H3 x B2"):
            result = z_count(parse_coxeter_type(text))
            total = 1
            for f in result.per_factor:
                assert f.z_count == z_count(CoxeterType((f.factor,))).total
                total *= f.z_count
            assert result.total == total

    def test_all_small_rank_pairs_multiply(self):
        pool = [
            "A2", "A4", "B3", "B6", "D4", "D5", "I2(5)", "I2(8)",
            "F4", "H3", "H4", "E6",
        ]
        singles = {text: z_count(parse_coxeter_type(text)).total for text in pool}
        for t1 in pool:
            for t2 in pool:
                combined = z_count(parse_coxeter_type(f"{t1} x {t2}")).total
                assert combined == singles[t1] * singles[t2]

    def test_a_beyond_cap_is_distinct_error(self):
        with pytest.raises(OrderCapExceeded):
            z_count(parse_coxeter_type("A8"))
        # A8 works once the cap is lifted far enough
        assert z_count(parse_coxeter_type("A8"), order_cap=500_000).total >= 1

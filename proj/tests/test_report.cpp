#include <doctest.h>

#include "abexp/report.hpp"

using namespace abexp;
using nlohmann::json;

TEST_CASE("rationals serialize as exact strings") {
    json j = Rational(13, 54);
    CHECK(j.is_string());
    CHECK(j == "13/54");
    CHECK(json(Rational(5)) == "5");
    CHECK(json(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("big counts fall back to decimal strings") {
    CHECK(mpz_to_json(mpz_class(42)) == json(42));
    CHECK(mpz_to_json(mpz_class(42)).is_number());
    mpz_class big = mpz_class(1) << 100;
    json j = mpz_to_json(big);
    CHECK(j.is_string());
    CHECK(j == "1267650600228229401496703205376");
}

TEST_CASE("structured values carry their fields") {
    CHECK(json(validate_params(2, 3)) == json({{"a", 2}, {"b", 3}}));
    CHECK(json(Interval{Rational(1, 3), Rational(1, 2)}) ==
          json({{"lo", "1/3"}, {"hi", "1/2"}}));
    CHECK(json(AffineMap{Rational(1, 6), Rational(1, 3)}) ==
          json({{"ratio", "1/6"}, {"translation", "1/3"}}));
    CHECK(json(EventuallyPeriodicWord{{0}, {1, 2}}) ==
          json({{"preperiod", {0}}, {"period", {1, 2}}}));
    CHECK(json(OverlapPair{{0, 2}, {1, 0}}) ==
          json({{"left", {0, 2}}, {"right", {1, 0}}}));
}

TEST_CASE("absent witnesses serialize as null") {
    json j = UniquenessVerdict{true, {}, {}};
    CHECK(j["unique"] == true);
    CHECK(j["witness_shift"].is_null());
    CHECK(j["witness_value"].is_null());

    j = UniquenessVerdict{false, 2, Rational(2, 5)};
    CHECK(j["witness_shift"] == 2);
    CHECK(j["witness_value"] == "2/5");
}

TEST_CASE("dimension results name their case") {
    DimensionResult r;
    r.dim_case = DimensionCase::osc_min_s_1;
    r.s = 0.5;
    r.value = 0.5;
    json j = r;
    CHECK(j["case"] == "osc-min-s-1");
    CHECK(j["s"] == 0.5);
    CHECK(j["regression"].is_null());

    CHECK(std::string(to_string(DimensionCase::no_zero_formula)) == "no-zero-formula");
    CHECK(std::string(to_string(DimensionCase::similarity_min_s_1)) == "similarity-min-s-1");
    CHECK(std::string(to_string(DimensionCase::undetermined_estimate_only)) ==
          "undetermined-estimate-only");
}

TEST_CASE("parse_digit_word") {
    CHECK(parse_digit_word("0,1,2") == DigitWord{0, 1, 2});
    CHECK(parse_digit_word("7") == DigitWord{7});
    CHECK(parse_digit_word("") == DigitWord{});
    CHECK(parse_digit_word("10,0") == DigitWord{10, 0});
    CHECK_THROWS_AS(parse_digit_word("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_word("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_word("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_word("1,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_word("9999999999"), std::invalid_argument);
}

TEST_CASE("parse_periodic_word") {
    EventuallyPeriodicWord w = parse_periodic_word("1,0|2,1");
    CHECK(w.preperiod == DigitWord{1, 0});
    CHECK(w.period == DigitWord{2, 1});
    CHECK(parse_periodic_word("|0,1,2") == EventuallyPeriodicWord{{}, {0, 1, 2}});
    CHECK(parse_periodic_word("0|") == EventuallyPeriodicWord{{0}, {}});
    CHECK_THROWS_WITH_AS(parse_periodic_word("0,1,2"),
                         "expected \"preperiod|period\", got \"0,1,2\"", std::invalid_argument);
}

TEST_CASE("csv exports") {
    PrefixCount pc;
    pc.depth = 2;
    pc.counts = {mpz_class(1), mpz_class(2), mpz_class(3)};
    CHECK(csv_counts(pc) == "n,count\n0,1\n1,2\n2,3\n");

    OrbitStats stats;
    stats.samples = 4;
    stats.steps = 5;
    stats.hits = 3;
    stats.first_hit_histogram = {{0, 2}, {3, 1}};
    CHECK(csv_first_hits(stats) == "step,count\n0,2\n3,1\n");

    DensityHistogram h;
    h.bins = 2;
    h.counts = {1, 3};
    h.total = 4;
    CHECK(csv_density(h) == "bin,mass\n0,1/4\n1,3/4\n");

    Regression reg;
    reg.points = {{6, 16}, {7, 27}};
    CHECK(csv_regression(reg) == "scale_exponent,boxes_occupied\n6,16\n7,27\n");

    std::vector<UniquePeriodicPoint> pts = {{{{}, {0, 2}}, Rational(1, 7)},
                                            {{{3}, {1}}, Rational(1, 2)}};
    CHECK(csv_unique_points(pts) ==
          "preperiod,period,value\n,0 2,1/7\n3,1,1/2\n");
}

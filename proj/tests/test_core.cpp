#include <doctest.h>

#include <algorithm>

#include "abexp/core.hpp"
#include "abexp/rng.hpp"

using namespace abexp;

namespace {

DigitWord random_word(std::uint64_t seed, int len, int b) {
    DigitWord w(len);
    for (int i = 0; i < len; ++i) {
        w[i] = static_cast<Digit>(splitmix64_at(seed, i) % b);
    }
    return w;
}

}  // namespace

TEST_CASE("validate_params accepts 1 < a < b and rejects the rest") {
    Params p = validate_params(2, 3);
    CHECK(p.a == 2);
    CHECK(p.b == 3);
    CHECK_THROWS_WITH_AS(validate_params(1, 3), "a > 1 required", std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_params(0, 3), "a > 1 required", std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_params(2, 2), "a < b required", std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_params(3, 2), "a < b required", std::invalid_argument);
    CHECK_THROWS_AS(validate_params(2, 1'000'001), std::invalid_argument);
}

TEST_CASE("derived constants of the base pair") {
    Params p = validate_params(2, 3);
    CHECK(p.inv_a() == Rational(1, 2));
    CHECK(p.inv_b() == Rational(1, 3));
    CHECK(p.in_open_overlap(Rational(2, 5)));
    CHECK(!p.in_open_overlap(Rational(1, 3)));
    CHECK(!p.in_open_overlap(Rational(1, 2)));
    CHECK(p.boundary_points() == std::vector<Rational>{Rational(2, 3)});
    CHECK(p.is_boundary_point(Rational(2, 3)));

    Params q = validate_params(2, 5);
    CHECK(q.boundary_points() == std::vector<Rational>{Rational(2, 5), Rational(3, 5),
                                                       Rational(4, 5)});
    CHECK(q.is_boundary_point(Rational(3, 5)));
    CHECK(!q.is_boundary_point(Rational(1, 5)));
    CHECK(!q.is_boundary_point(Rational(1)));
}

TEST_CASE("digit maps") {
    Params p = validate_params(2, 3);
    CHECK(digit_map(p, 0) == AffineMap{Rational(1, 2), Rational(0)});
    CHECK(digit_map(p, 1) == AffineMap{Rational(1, 3), Rational(1, 3)});
    CHECK(digit_map(p, 2) == AffineMap{Rational(1, 3), Rational(2, 3)});
    CHECK_THROWS_AS(digit_map(p, 3), std::invalid_argument);
    CHECK_THROWS_AS(digit_map(p, -1), std::invalid_argument);
}

TEST_CASE("compose_word matches hand-composed maps") {
    Params p23 = validate_params(2, 3);
    CHECK(compose_word(p23, {0, 2}) == AffineMap{Rational(1, 6), Rational(1, 3)});
    CHECK(compose_word(p23, {}) == AffineMap{Rational(1), Rational(0)});

    Params p24 = validate_params(2, 4);
    CHECK(compose_word(p24, {1, 0}) == AffineMap{Rational(1, 8), Rational(1, 4)});
    CHECK(compose_word(p24, {0, 2}) == AffineMap{Rational(1, 8), Rational(1, 4)});
}

TEST_CASE("cylinders") {
    Params p = validate_params(2, 3);
    CHECK(cylinder(p, {}) == Interval{Rational(0), Rational(1)});
    CHECK(cylinder(p, {0}) == Interval{Rational(0), Rational(1, 2)});
    CHECK(cylinder(p, {1}) == Interval{Rational(1, 3), Rational(2, 3)});
    CHECK(cylinder(p, {0, 2}) == Interval{Rational(1, 3), Rational(1, 2)});
    CHECK(cylinder(p, {0, 1, 1, 1}) == Interval{Rational(13, 54), Rational(7, 27)});
}

TEST_CASE("pi_prefix values") {
    Params p = validate_params(2, 3);
    CHECK(pi_prefix(p, {2, 2}) == Rational(8, 9));
    CHECK(pi_prefix(p, {0, 2}) == Rational(1, 3));
    CHECK(pi_prefix(p, {0, 1, 1, 1}) == Rational(13, 54));
    CHECK(pi_prefix(p, {}) == Rational(0));
}

TEST_CASE("pi_periodic fixed points") {
    Params p = validate_params(2, 3);
    CHECK(pi_periodic(p, {{}, {1}}) == Rational(1, 2));
    CHECK(pi_periodic(p, {{}, {0, 2}}) == Rational(2, 5));
    CHECK(pi_periodic(p, {{}, {2}}) == Rational(1));
    CHECK(pi_periodic(p, {{}, {0}}) == Rational(0));
    CHECK(pi_periodic(p, {{}, {0, 1, 2}}) == Rational(5, 17));
    CHECK(pi_periodic(p, {{0, 2}, {1}}) == (Rational(1, 6) * Rational(1, 2) + Rational(1, 3)));
    CHECK_THROWS_AS(pi_periodic(p, {{0}, {}}), std::invalid_argument);
}

TEST_CASE("word validation") {
    Params p = validate_params(2, 3);
    CHECK_NOTHROW(validate_word(p, DigitWord{0, 1, 2}));
    CHECK_THROWS_AS(validate_word(p, DigitWord{0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(p, DigitWord{-1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(p, EventuallyPeriodicWord{{0}, {}}), std::invalid_argument);
    CHECK_NOTHROW(validate_word(p, EventuallyPeriodicWord{{}, {2}}));
}

TEST_CASE("shift_word slices the preperiod then rotates the period") {
    EventuallyPeriodicWord w{{0, 1}, {2, 3}};
    CHECK(shift_word(w, 0) == w);
    CHECK(shift_word(w, 1) == EventuallyPeriodicWord{{1}, {2, 3}});
    CHECK(shift_word(w, 2) == EventuallyPeriodicWord{{}, {2, 3}});
    CHECK(shift_word(w, 3) == EventuallyPeriodicWord{{}, {3, 2}});
    CHECK(shift_word(w, 4) == EventuallyPeriodicWord{{}, {2, 3}});
    CHECK(shift_word(w, 7) == EventuallyPeriodicWord{{}, {3, 2}});
    CHECK_THROWS_AS(shift_word(w, -1), std::invalid_argument);
}

TEST_CASE("composition is coherent with concatenation") {
    for (auto [a, b] : {std::pair{2, 3}, {2, 4}, {3, 5}, {4, 9}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 20; ++i) {
            DigitWord w1 = random_word(100 + i, 1 + i % 5, b);
            DigitWord w2 = random_word(200 + i, 1 + (i + 2) % 5, b);
            DigitWord cat = w1;
            cat.insert(cat.end(), w2.begin(), w2.end());
            CHECK(compose_word(p, cat) == compose(compose_word(p, w1), compose_word(p, w2)));
        }
    }
}

TEST_CASE("cylinder width follows the ratio law") {
    for (auto [a, b] : {std::pair{2, 3}, {3, 7}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 30; ++i) {
            DigitWord w = random_word(300 + i, 1 + i % 8, b);
            int zeros = static_cast<int>(std::count(w.begin(), w.end(), 0));
            Rational expected(1);
            for (int z = 0; z < zeros; ++z) expected = expected * p.inv_a();
            for (std::size_t k = zeros; k < w.size(); ++k) expected = expected * p.inv_b();
            CHECK(cylinder(p, w).width() == expected);
            CHECK(compose_word(p, w).ratio == expected);
        }
    }
}

TEST_CASE("child cylinders nest inside and cover their parent") {
    for (auto [a, b] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 15; ++i) {
            DigitWord w = random_word(400 + i, i % 6, b);
            Interval parent = cylinder(p, w);
            std::vector<Interval> children;
            for (Digit d = 0; d < b; ++d) {
                DigitWord ext = w;
                ext.push_back(d);
                Interval child = cylinder(p, ext);
                CHECK(parent.contains(child));
                children.push_back(child);
            }
            std::sort(children.begin(), children.end(),
                      [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
            CHECK(children.front().lo == parent.lo);
            CHECK(children.back().hi == parent.hi);
            for (std::size_t k = 0; k + 1 < children.size(); ++k) {
                CHECK(children[k + 1].lo <= children[k].hi);  // no gaps
            }
        }
    }
}

TEST_CASE("pi_prefix is the left endpoint of the cylinder") {
    Params p = validate_params(3, 5);
    for (int i = 0; i < 30; ++i) {
        DigitWord w = random_word(500 + i, 1 + i % 7, 5);
        CHECK(pi_prefix(p, w) == cylinder(p, w).lo);
    }
}

TEST_CASE("pi_periodic solves the shift recursion") {
    // pi(w) = T_{d1}(pi(shifted w)) for the first digit d1.
    for (auto [a, b] : {std::pair{2, 3}, {3, 5}, {2, 6}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 40; ++i) {
            EventuallyPeriodicWord w{random_word(600 + i, i % 3, b),
                                     random_word(700 + i, 1 + i % 4, b)};
            Rational v = pi_periodic(p, w);
            Digit first = w.preperiod.empty() ? w.period.front() : w.preperiod.front();
            CHECK(v == digit_map(p, first)(pi_periodic(p, shift_word(w, 1))));
            CHECK(Rational(0) <= v);
            CHECK(v <= Rational(1));
        }
    }
}

TEST_CASE("pi_periodic fixed point is invariant under the period map") {
    Params p = validate_params(2, 3);
    for (int i = 0; i < 25; ++i) {
        DigitWord per = random_word(800 + i, 1 + i % 5, 3);
        Rational fixed = pi_periodic(p, {{}, per});
        CHECK(compose_word(p, per)(fixed) == fixed);
    }
}

#include <doctest.h>

#include <numeric>

#include "abexp/dynamics.hpp"
#include "abexp/rng.hpp"

using namespace abexp;

TEST_CASE("greedy_step branch selection") {
    Params p = validate_params(2, 3);
    SUBCASE("below 1/b the digit is 0 and the map is x -> a*x") {
        GreedyStep s = greedy_step(p, Rational(1, 4));
        CHECK(s.digit == 0);
        CHECK(s.next == Rational(1, 2));
    }
    SUBCASE("digit j branch is x -> b*x - j") {
        GreedyStep s = greedy_step(p, Rational(1, 2));
        CHECK(s.digit == 1);
        CHECK(s.next == Rational(1, 2));
    }
    SUBCASE("the top digit is clamped to b-1 and fixes 1") {
        GreedyStep s = greedy_step(p, Rational(1));
        CHECK(s.digit == 2);
        CHECK(s.next == Rational(1));
    }
    SUBCASE("0 is a fixed point of the digit-0 branch") {
        GreedyStep s = greedy_step(p, Rational(0));
        CHECK(s.digit == 0);
        CHECK(s.next == Rational(0));
    }
    SUBCASE("branch boundaries take the upper digit") {
        GreedyStep s = greedy_step(p, Rational(2, 3));
        CHECK(s.digit == 2);
        CHECK(s.next == Rational(0));
    }
    SUBCASE("points outside [0,1] are rejected") {
        CHECK_THROWS_AS(greedy_step(p, Rational(-1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(greedy_step(p, Rational(3, 2)), std::invalid_argument);
    }
}

TEST_CASE("greedy_expand produces the lexicographically known prefix") {
    Params p = validate_params(2, 3);
    CHECK(greedy_expand(p, Rational(1, 4), 4) == DigitWord{0, 1, 1, 1});
    CHECK(greedy_expand(p, Rational(0), 5) == DigitWord{0, 0, 0, 0, 0});
    CHECK(greedy_expand(p, Rational(1), 5) == DigitWord{2, 2, 2, 2, 2});
    CHECK(greedy_expand(p, Rational(1, 2), 1) == DigitWord{1});
    CHECK_THROWS_AS(greedy_expand(p, Rational(1, 2), -1), std::invalid_argument);
}

TEST_CASE("orbit lists iterates exactly") {
    Params p = validate_params(2, 3);
    std::vector<Rational> got = orbit(p, Rational(1, 5), 2);
    CHECK(got == std::vector<Rational>{Rational(1, 5), Rational(2, 5), Rational(1, 5)});
    CHECK(orbit(p, Rational(1, 2), 0) == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("greedy prefix stays inside its own cylinder") {
    for (auto [a, b] : {std::pair{2, 3}, {2, 4}, {3, 5}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 40; ++i) {
            Rational x(mpz_class(static_cast<unsigned long>(splitmix64_at(900, i) % 1009)),
                       mpz_class(1009));
            DigitWord w = greedy_expand(p, x, 30);
            CHECK(cylinder(p, w).contains(x));
            CHECK(static_cast<int>(w.size()) == 30);
        }
    }
}

TEST_CASE("greedy_step inverts through the digit map") {
    for (auto [a, b] : {std::pair{2, 3}, {3, 7}}) {
        Params p = validate_params(a, b);
        for (int i = 0; i < 60; ++i) {
            Rational x(mpz_class(static_cast<unsigned long>(splitmix64_at(901, i) % 2003)),
                       mpz_class(2003));
            GreedyStep s = greedy_step(p, x);
            CHECK(digit_map(p, s.digit)(s.next) == x);
        }
    }
}

TEST_CASE("greedy denominators never grow") {
    Params p = validate_params(2, 5);
    Rational x(17, 91);
    for (int i = 0; i < 50; ++i) {
        GreedyStep s = greedy_step(p, x);
        CHECK(mpz_class(Rational(91).num() % s.next.den()) == 0);
        x = s.next;
    }
}

TEST_CASE("overlap_hit_stats is deterministic and internally consistent") {
    Params p = validate_params(2, 3);
    OrbitStats s1 = overlap_hit_stats(p, 500, 40, 9, 101);
    OrbitStats s2 = overlap_hit_stats(p, 500, 40, 9, 101);
    CHECK(s1.samples == 500);
    CHECK(s1.steps == 40);
    CHECK(s1.hits == s2.hits);
    CHECK(s1.first_hit_histogram == s2.first_hit_histogram);
    CHECK(s1.hits <= s1.samples);
    long long histogram_total = 0;
    for (auto& [step, count] : s1.first_hit_histogram) {
        CHECK(step >= 0);
        CHECK(step <= 40);
        CHECK(count > 0);
        histogram_total += count;
    }
    CHECK(histogram_total == s1.hits);
    CHECK(s1.hit_fraction() == Rational(s1.hits, 500));

    OrbitStats other_seed = overlap_hit_stats(p, 500, 40, 10, 101);
    CHECK(other_seed.samples == 500);  // different seed still fills the record

    CHECK_THROWS_AS(overlap_hit_stats(p, 0, 40, 9, 101), std::invalid_argument);
    CHECK_THROWS_AS(overlap_hit_stats(p, 10, -1, 9, 101), std::invalid_argument);
    CHECK_THROWS_AS(overlap_hit_stats(p, 10, 5, 9, 1), std::invalid_argument);
}

TEST_CASE("invariant_density_histogram masses are exact and sum to one") {
    Params p = validate_params(2, 3);
    DensityHistogram h = invariant_density_histogram(p, 10, 200, 50, 3, 1009, 0.1);
    CHECK(h.bins == 10);
    CHECK(static_cast<int>(h.counts.size()) == 10);
    long long sum = std::accumulate(h.counts.begin(), h.counts.end(), 0ll);
    CHECK(sum == h.total);
    CHECK(h.total == 200ll * (50 - 5));  // burn-in discards floor(0.1*50) = 5 iterates
    Rational mass_sum(0);
    for (const Rational& m : h.masses()) mass_sum = mass_sum + m;
    CHECK(mass_sum == Rational(1));

    DensityHistogram again = invariant_density_histogram(p, 10, 200, 50, 3, 1009, 0.1);
    CHECK(again.counts == h.counts);

    CHECK_THROWS_AS(invariant_density_histogram(p, 0, 200, 50, 3, 1009), std::invalid_argument);
    CHECK_THROWS_AS(invariant_density_histogram(p, 10, 200, 50, 3, 1009, 1.5),
                    std::invalid_argument);
}

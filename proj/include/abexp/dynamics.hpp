#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "abexp/core.hpp"

namespace abexp {

struct GreedyStep {
    Digit digit;
    Rational next;
};

/// One step of the greedy digit extraction: the digit is floor(b*x)
/// clamped to b-1, and the image is a*x on [0,1/b), b*x - j on
/// [j/b,(j+1)/b), with 1 fixed. Output stays exact; the denominator of
/// the image divides the denominator of x.
GreedyStep greedy_step(const Params& p, const Rational& x);

/// First n greedy digits of x. x lies in cylinder(p, result) exactly.
DigitWord greedy_expand(const Params& p, Rational x, int n);

/// (x, G(x), ..., G^n(x)) under the greedy map, exact.
std::vector<Rational> orbit(const Params& p, const Rational& x, int n);

/// Aggregate record of how often sampled greedy orbits enter the open
/// overlap (1/b, 1/a), where branch choices exist.
struct OrbitStats {
    long long samples = 0;
    long long steps = 0;
    long long hits = 0;
    std::map<long long, long long> first_hit_histogram;  // step index -> count

    Rational hit_fraction() const { return Rational(hits) / Rational(samples); }
};

/// Samples `samples` points k/denom (k drawn from a deterministic stream
/// derived from seed and the sample index) and records, for each, the
/// first index k in 0..steps with G^k(x) in the open overlap.
OrbitStats overlap_hit_stats(const Params& p, long long samples, long long steps,
                             std::uint64_t seed, long long denom);

/// Empirical orbit-visit histogram over equal subdivisions of [0,1].
/// Counts are exact integers; masses are exact fractions count/total.
struct DensityHistogram {
    int bins = 0;
    std::vector<long long> counts;
    long long total = 0;

    std::vector<Rational> masses() const;
};

/// Accumulates visit counts of sampled greedy orbits into `bins` equal
/// subintervals of [0,1], discarding the first floor(burn_in*steps)
/// iterates of every orbit.
DensityHistogram invariant_density_histogram(const Params& p, int bins, long long samples,
                                             long long steps, std::uint64_t seed, long long denom,
                                             double burn_in = 0.1);

}  // namespace abexp

#include "abexp/dynamics.hpp"

#include <stdexcept>

#include "abexp/rng.hpp"

namespace abexp {

namespace {

void check_unit_interval(const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) {
        throw std::invalid_argument("x must lie in [0,1]");
    }
}

}  // namespace

GreedyStep greedy_step(const Params& p, const Rational& x) {
    check_unit_interval(x);
    mpz_class f = (Rational(p.b) * x).floor();
    Digit g = f >= p.b - 1 ? p.b - 1 : static_cast<Digit>(f.get_si());
    Rational next = g == 0 ? Rational(p.a) * x : Rational(p.b) * x - Rational(g);
    return {g, next};
}

DigitWord greedy_expand(const Params& p, Rational x, int n) {
    if (n < 0) throw std::invalid_argument("digit count must be nonnegative");
    DigitWord w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
        GreedyStep s = greedy_step(p, x);
        w.push_back(s.digit);
        x = s.next;
    }
    return w;
}

std::vector<Rational> orbit(const Params& p, const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("step count must be nonnegative");
    std::vector<Rational> pts;
    pts.reserve(n + 1);
    pts.push_back(x);
    for (int i = 0; i < n; ++i) pts.push_back(greedy_step(p, pts.back()).next);
    return pts;
}

OrbitStats overlap_hit_stats(const Params& p, long long samples, long long steps,
                             std::uint64_t seed, long long denom) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (denom < 2) throw std::invalid_argument("denom must be >= 2");

    const Rational lo = p.inv_b();
    const Rational hi = p.inv_a();
    OrbitStats stats;
    stats.samples = samples;
    stats.steps = steps;

    for (long long i = 0; i < samples; ++i) {
        Rational y(mpz_class(static_cast<unsigned long>(sample_numerator(seed, i, denom))),
                   mpz_class(static_cast<long>(denom)));
        long long first_hit = -1;
        for (long long k = 0; k <= steps; ++k) {
            if (y > lo && y < hi) {
                first_hit = k;
                break;
            }
            if (k < steps) y = greedy_step(p, y).next;
        }
        if (first_hit >= 0) {
            ++stats.hits;
            ++stats.first_hit_histogram[first_hit];
        }
    }
    return stats;
}

std::vector<Rational> DensityHistogram::masses() const {
    std::vector<Rational> m;
    m.reserve(counts.size());
    for (long long c : counts) m.push_back(Rational(c) / Rational(total));
    return m;
}

DensityHistogram invariant_density_histogram(const Params& p, int bins, long long samples,
                                             long long steps, std::uint64_t seed, long long denom,
                                             double burn_in) {
    if (bins < 2) throw std::invalid_argument("bins must be >= 2");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (denom < 2) throw std::invalid_argument("denom must be >= 2");
    if (burn_in < 0.0 || burn_in >= 1.0) throw std::invalid_argument("burn_in must be in [0,1)");

    const long long burn = static_cast<long long>(burn_in * static_cast<double>(steps));
    DensityHistogram h;
    h.bins = bins;
    h.counts.assign(bins, 0);

    for (long long i = 0; i < samples; ++i) {
        Rational y(mpz_class(static_cast<unsigned long>(sample_numerator(seed, i, denom))),
                   mpz_class(static_cast<long>(denom)));
        for (long long k = 0; k < steps; ++k) {
            if (k >= burn) {
                mpz_class idx = (Rational(bins) * y).floor();
                int bin = idx >= bins ? bins - 1 : static_cast<int>(idx.get_si());
                ++h.counts[bin];
                ++h.total;
            }
            y = greedy_step(p, y).next;
        }
    }
    return h;
}

}  // namespace abexp

#include "abexp/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

namespace abexp {

namespace {

mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

std::map<int, int> prime_exponents(int n) {
    std::map<int, int> out;
    for (int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

double moran_residual(const Params& p, int size, double s) {
    return std::pow(1.0 / p.a, s) + (size - 1) * std::pow(1.0 / p.b, s) - 1.0;
}

}  // namespace

DigitSet validate_digit_set(const Params& p, std::vector<Digit> digits) {
    if (digits.empty()) throw std::invalid_argument("digit set must be nonempty");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    for (Digit d : digits) {
        if (d < 0 || d >= p.b) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " outside alphabet {0,...," + std::to_string(p.b - 1) +
                                        "}");
        }
    }
    return digits;
}

const char* to_string(DimensionCase c) {
    switch (c) {
        case DimensionCase::no_zero_formula: return "no-zero-formula";
        case DimensionCase::similarity_min_s_1: return "similarity-min-s-1";
        case DimensionCase::osc_min_s_1: return "osc-min-s-1";
        case DimensionCase::undetermined_estimate_only: return "undetermined-estimate-only";
    }
    return "unknown";
}

double similarity_dimension(const Params& p, const DigitSet& D, double tol) {
    if (!has_zero(D)) throw std::invalid_argument("digit set must contain 0");
    if (D.size() < 2) throw std::invalid_argument("digit set must have at least two digits");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

    const int size = static_cast<int>(D.size());
    // f(0) = |D| - 1 > 0 and f(2) <= 1/4 + (b-1)/b^2 - 1 < 0, so the
    // root lies in (0, 2) and bisection cannot stall.
    double lo = 0.0, hi = 2.0;
    double mid = 1.0;
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        double fm = moran_residual(p, size, mid);
        if (std::fabs(fm) < tol) return mid;
        (fm > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<std::pair<int, int>> is_commensurable(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("a and b must be >= 2");
    const auto ea = prime_exponents(a);
    const auto eb = prime_exponents(b);
    if (ea.size() != eb.size()) return std::nullopt;
    // a^m = b^n iff m*ea[p] = n*eb[p] for every prime p, so the exponent
    // vectors must be proportional with ratio m/n = eb/ea in lowest terms.
    const int g = std::gcd(eb.begin()->second, ea.begin()->second);
    const int m = eb.begin()->second / g;
    const int n = ea.begin()->second / g;
    auto it_b = eb.begin();
    for (const auto& [prime, exp_a] : ea) {
        if (it_b->first != prime || m * exp_a != n * it_b->second) return std::nullopt;
        ++it_b;
    }
    return std::make_pair(m, n);
}

std::vector<OverlapPair> detect_exact_overlaps(const Params& p, const DigitSet& D, int depth,
                                               long long cap) {
    const DigitSet digits = validate_digit_set(p, D);
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");

    mpz_class words = 0, power = 1;
    for (int k = 1; k <= depth; ++k) {
        power *= digits.size();
        words += power;
    }
    if (cap > 0 && words > to_mpz(cap)) {
        throw CapExceeded("word count " + words.get_str() + " exceeds cap " +
                          std::to_string(cap));
    }

    std::map<std::pair<Rational, Rational>, std::vector<DigitWord>> by_map;
    DigitWord path;
    auto visit = [&](auto&& self, const AffineMap& m, int remaining) -> void {
        if (remaining == 0) return;
        for (Digit d : digits) {
            AffineMap composed = compose(m, digit_map(p, d));
            path.push_back(d);
            by_map[{composed.ratio, composed.translation}].push_back(path);
            self(self, composed, remaining - 1);
            path.pop_back();
        }
    };
    visit(visit, AffineMap{}, depth);

    std::vector<OverlapPair> out;
    for (auto& [key, group] : by_map) {
        if (group.size() < 2) continue;
        std::sort(group.begin(), group.end());
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const DigitWord& left = group[i];
                const DigitWord& right = group[j];
                // collisions sharing a first or last digit extend a
                // shorter collision and are dropped as non-minimal
                if (left.front() != right.front() && left.back() != right.back()) {
                    out.push_back({left, right});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const OverlapPair& x, const OverlapPair& y) {
        return std::tie(x.left, x.right) < std::tie(y.left, y.right);
    });
    return out;
}

DimensionResult box_count_dimension(const Params& p, const DigitSet& D,
                                    const BoxCountConfig& cfg) {
    const DigitSet digits = validate_digit_set(p, D);
    if (cfg.depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (cfg.scales.size() < 2) throw std::invalid_argument("at least two scales required");
    for (int e : cfg.scales) {
        if (e < 1 || e > 26) throw std::invalid_argument("scale exponent out of range [1, 26]");
    }

    mpz_class leaves = 1;
    for (int i = 0; i < cfg.depth; ++i) leaves *= digits.size();
    if (cfg.cap > 0 && leaves > to_mpz(cfg.cap)) {
        throw CapExceeded("cylinder count " + leaves.get_str() + " exceeds cap " +
                          std::to_string(cfg.cap));
    }

    std::vector<int> scales = cfg.scales;
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    const int emax = scales.back();

    // Cylinders should be finer than the smallest boxes or the counts
    // saturate and drag the slope down.
    Rational width(1);
    const Rational widest(1, has_zero(digits) ? p.a : p.b);
    for (int i = 0; i < cfg.depth; ++i) width = width * widest;
    if (!(width < Rational(mpz_class(1), mpz_class(1) << emax))) {
        std::cerr << "warning: depth " << cfg.depth << " cylinders have width " << width
                  << " >= 2^-" << emax << "; increase depth for a reliable estimate\n";
    }

    std::vector<mpz_class> pow2;
    std::vector<std::vector<char>> occupied;
    for (int e : scales) {
        pow2.push_back(mpz_class(1) << e);
        occupied.emplace_back(std::size_t(1) << e, 0);
    }

    // Box k = [k/2^e, (k+1)/2^e] meets [lo, hi] iff lo*2^e - 1 <= k <= hi*2^e.
    auto mark = [&](const Rational& lo, const Rational& hi) {
        for (std::size_t si = 0; si < scales.size(); ++si) {
            mpz_class q, r;
            mpz_class scaled = lo.num() * pow2[si];
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(),
                        lo.den().get_mpz_t());
            long kmin = q.get_si() - (r == 0 ? 1 : 0);
            if (kmin < 0) kmin = 0;

            scaled = hi.num() * pow2[si];
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(),
                        hi.den().get_mpz_t());
            long kmax = q.get_si();
            const long top = (1l << scales[si]) - 1;
            if (kmax > top) kmax = top;

            for (long k = kmin; k <= kmax; ++k) occupied[si][k] = 1;
        }
    };

    auto visit = [&](auto&& self, const AffineMap& m, int remaining) -> void {
        if (remaining == 0) {
            mark(m.translation, m.translation + m.ratio);
            return;
        }
        for (Digit d : digits) self(self, compose(m, digit_map(p, d)), remaining - 1);
    };
    visit(visit, AffineMap{}, cfg.depth);

    Regression reg;
    const double ln2 = std::log(2.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t si = 0; si < scales.size(); ++si) {
        long long boxes = std::count(occupied[si].begin(), occupied[si].end(), char(1));
        reg.points.push_back({scales[si], boxes});
        const double x = scales[si] * ln2;
        const double y = std::log(static_cast<double>(boxes));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(scales.size());
    reg.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    reg.intercept = (sy - reg.slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (const RegressionPoint& pt : reg.points) {
        const double x = pt.scale_exponent * ln2;
        const double y = std::log(static_cast<double>(pt.boxes));
        const double fit = reg.slope * x + reg.intercept;
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    reg.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;

    DimensionResult res;
    res.dim_case = DimensionCase::undetermined_estimate_only;
    res.value = reg.slope;
    res.residual = 0.0;
    res.regression = std::move(reg);
    return res;
}

DimensionResult hausdorff_formula(const Params& p, const DigitSet& D,
                                  const BoxCountConfig& cfg) {
    const DigitSet digits = validate_digit_set(p, D);
    const int size = static_cast<int>(digits.size());
    DimensionResult res;

    if (!has_zero(digits)) {
        // Equal ratios 1/b: dimension log|D| / log b, open set condition
        // holds since the b branch images tile [0,1].
        const double s = std::log(static_cast<double>(size)) /
                         std::log(static_cast<double>(p.b));
        res.dim_case = DimensionCase::no_zero_formula;
        res.s = s;
        res.value = s;
        res.residual = std::fabs(size * std::pow(1.0 / p.b, s) - 1.0);
        return res;
    }
    if (size == 1) {
        // D = {0}: only the fixed point 0 remains.
        res.dim_case = DimensionCase::similarity_min_s_1;
        res.s = 0.0;
        res.value = 0.0;
        res.residual = 0.0;
        return res;
    }

    const double s = similarity_dimension(p, digits);
    res.s = s;
    res.residual = std::fabs(moran_residual(p, size, s));

    if (size == p.b) {
        // Full alphabet: every point of [0,1] is expandable, and the
        // Moran root satisfies s >= 1, so min(s,1) = 1 is exact.
        res.dim_case = DimensionCase::similarity_min_s_1;
        res.value = 1.0;
        return res;
    }
    if (!is_commensurable(p.a, p.b)) {
        res.dim_case = DimensionCase::similarity_min_s_1;
        res.value = std::min(s, 1.0);
        return res;
    }
    if (digits[1] * p.a >= p.b) {  // min(D \ {0}) >= b/a, exactly
        res.dim_case = DimensionCase::osc_min_s_1;
        res.value = std::min(s, 1.0);
        return res;
    }

    DimensionResult est = box_count_dimension(p, digits, cfg);
    res.dim_case = DimensionCase::undetermined_estimate_only;
    res.value = est.value;
    res.regression = std::move(est.regression);
    return res;
}

}  // namespace abexp

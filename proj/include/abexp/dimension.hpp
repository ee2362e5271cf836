#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abexp/core.hpp"
#include "abexp/errors.hpp"

namespace abexp {

/// Nonempty sorted set of digits from {0,...,b-1}.
using DigitSet = std::vector<Digit>;

/// Sorts, deduplicates and range-checks a digit set.
DigitSet validate_digit_set(const Params& p, std::vector<Digit> digits);

inline bool has_zero(const DigitSet& D) { return !D.empty() && D.front() == 0; }

enum class DimensionCase {
    no_zero_formula,           // 0 not in D: dimension log|D| / log b
    similarity_min_s_1,        // min(s,1), justified by incommensurability of a and b
    osc_min_s_1,               // min(s,1), justified by the open set condition
    undetermined_estimate_only // commensurable with possible overlaps: box-count estimate
};

const char* to_string(DimensionCase c);

struct RegressionPoint {
    int scale_exponent = 0;    // boxes have width 2^-scale_exponent
    long long boxes = 0;       // occupied box count at that scale
};

struct Regression {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<RegressionPoint> points;
};

struct DimensionResult {
    DimensionCase dim_case = DimensionCase::undetermined_estimate_only;
    std::optional<double> s;   // similarity dimension when the equation applies
    double value = 0.0;        // the dimension, or the estimate
    double residual = 0.0;     // |f(s)| of the solved equation, 0 when no equation
    std::optional<Regression> regression;
};

/// Two distinct digit words inducing exactly the same affine map.
struct OverlapPair {
    DigitWord left;
    DigitWord right;
};

/// Solves (1/a)^s + (|D|-1) (1/b)^s = 1 by bisection on [0,2].
/// Requires 0 in D and |D| >= 2. The root can exceed 1; callers clamp.
double similarity_dimension(const Params& p, const DigitSet& D, double tol = 1e-12);

/// Least (m, n) with a^m = b^n, or nullopt when log b / log a is
/// irrational. Decided exactly via prime exponent vectors.
std::optional<std::pair<int, int>> is_commensurable(int a, int b);

/// All minimal exact collisions among words over D of length <= depth:
/// pairs of words with identical (ratio, translation) whose first digits
/// differ and whose last digits differ (longer collisions extend these).
std::vector<OverlapPair> detect_exact_overlaps(const Params& p, const DigitSet& D, int depth,
                                               long long cap = 1'000'000);

struct BoxCountConfig {
    int depth = 13;
    std::vector<int> scales = {6, 7, 8, 9, 10, 11, 12};
    long long cap = 1'000'000;
};

/// Marks which dyadic boxes [k/2^e, (k+1)/2^e] meet some depth-`depth`
/// cylinder over D (closed intersection, decided exactly) and regresses
/// log(occupied boxes) on log(2^e). Result carries the slope as value
/// and the full regression. Warns on stderr when cylinders are wider
/// than the smallest box.
DimensionResult box_count_dimension(const Params& p, const DigitSet& D,
                                    const BoxCountConfig& cfg = {});

/// Dimension of the set of points expandable with digits from D only:
///   |D| = b: the whole interval, value 1;
///   0 not in D: log|D| / log b;
///   0 in D, a and b incommensurable: min(s, 1);
///   0 in D, min(D \ {0}) >= b/a: min(s, 1) (open set condition);
///   otherwise: box-count estimate, flagged undetermined.
DimensionResult hausdorff_formula(const Params& p, const DigitSet& D,
                                  const BoxCountConfig& cfg = {});

}  // namespace abexp

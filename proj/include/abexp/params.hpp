#pragma once

#include <vector>

#include "abexp/rational.hpp"

namespace abexp {

/// Validated base pair. The digit alphabet is {0,...,b-1}; digit 0 acts
/// with contraction 1/a, all other digits with contraction 1/b, so the
/// images of [0,1] under the digit maps overlap on [1/b, 1/a].
struct Params {
    int a = 0;
    int b = 0;

    Rational inv_a() const { return Rational(1, a); }
    Rational inv_b() const { return Rational(1, b); }

    /// The open interval (1/b, 1/a) where the digit-0 and digit-1 branch
    /// images overlap in their interiors.
    bool in_open_overlap(const Rational& x) const { return x > inv_b() && x < inv_a(); }

    /// Points j/b for j = 2,...,b-1, where adjacent digit branches meet.
    std::vector<Rational> boundary_points() const {
        std::vector<Rational> pts;
        pts.reserve(b > 2 ? b - 2 : 0);
        for (int j = 2; j < b; ++j) pts.emplace_back(j, b);
        return pts;
    }

    /// True iff x equals j/b for some j in {2,...,b-1}.
    bool is_boundary_point(const Rational& x) const {
        Rational bx = Rational(b) * x;
        if (!bx.is_integer()) return false;
        mpz_class j = bx.num();
        return j >= 2 && j <= b - 1;
    }

    bool operator==(const Params&) const = default;
};

/// Checks 1 < a < b and returns the validated pair.
Params validate_params(long long a, long long b);

}  // namespace abexp

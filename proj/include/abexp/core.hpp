#pragma once

#include "abexp/params.hpp"
#include "abexp/rational.hpp"
#include "abexp/words.hpp"

namespace abexp {

/// An affine contraction x -> ratio*x + translation with exact rational
/// coefficients. Compositions of digit maps have ratio (1/a)^z * (1/b)^(n-z)
/// where z is the number of zero digits, and map [0,1] into [0,1].
struct AffineMap {
    Rational ratio{1};
    Rational translation{0};

    Rational operator()(const Rational& x) const { return ratio * x + translation; }

    bool operator==(const AffineMap&) const = default;
};

/// outer(inner(x)), exactly.
inline AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    return {outer.ratio * inner.ratio, outer.ratio * inner.translation + outer.translation};
}

/// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    bool operator==(const Interval&) const = default;
};

/// The branch map of a single digit: digit 0 contracts by 1/a towards 0,
/// digit j >= 1 is the base-b branch x/b + j/b.
AffineMap digit_map(const Params& p, Digit d);

/// The composition of the branch maps of w, first digit outermost.
/// The empty word gives the identity.
AffineMap compose_word(const Params& p, const DigitWord& w);

/// Image of [0,1] under compose_word(p, w): the set of points whose
/// expansions can start with w. Width equals the composed ratio.
Interval cylinder(const Params& p, const DigitWord& w);

/// Exact value of the finite digit series of w, i.e. the value of the
/// infinite word w 0 0 0 ... . Equals compose_word(p, w).translation.
Rational pi_prefix(const Params& p, const DigitWord& w);

/// Exact value of an eventually periodic word: the period map is a strict
/// contraction, its fixed point is rational, and the preperiod map is
/// applied to that fixed point.
Rational pi_periodic(const Params& p, const EventuallyPeriodicWord& w);

}  // namespace abexp

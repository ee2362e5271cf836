#pragma once

#include <vector>

#include "abexp/params.hpp"

namespace abexp {

using Digit = int;

/// Finite digit sequence over {0,...,b-1}. Empty words are legal and
/// denote the identity map / the full cylinder [0,1].
using DigitWord = std::vector<Digit>;

/// Preperiod followed by an infinitely repeated period (period nonempty).
struct EventuallyPeriodicWord {
    DigitWord preperiod;
    DigitWord period;

    bool operator==(const EventuallyPeriodicWord&) const = default;
};

void validate_word(const Params& p, const DigitWord& w);
void validate_word(const Params& p, const EventuallyPeriodicWord& w);

/// The tail d_{k+1} d_{k+2} ... of an eventually periodic word, again
/// eventually periodic. Shifting past the preperiod rotates the period.
EventuallyPeriodicWord shift_word(const EventuallyPeriodicWord& w, int k);

}  // namespace abexp

#include "abexp/core.hpp"

#include <stdexcept>
#include <string>

namespace abexp {

Params validate_params(long long a, long long b) {
    if (a <= 1) throw std::invalid_argument("a > 1 required");
    if (b <= a) throw std::invalid_argument("a < b required");
    if (b > 1'000'000) throw std::invalid_argument("b too large (limit 10^6)");
    return Params{static_cast<int>(a), static_cast<int>(b)};
}

void validate_word(const Params& p, const DigitWord& w) {
    for (Digit d : w) {
        if (d < 0 || d >= p.b) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " outside alphabet {0,...," + std::to_string(p.b - 1) + "}");
        }
    }
}

void validate_word(const Params& p, const EventuallyPeriodicWord& w) {
    if (w.period.empty()) throw std::invalid_argument("period must be nonempty");
    validate_word(p, w.preperiod);
    validate_word(p, w.period);
}

EventuallyPeriodicWord shift_word(const EventuallyPeriodicWord& w, int k) {
    if (k < 0) throw std::invalid_argument("shift index must be nonnegative");
    const int m = static_cast<int>(w.preperiod.size());
    const int n = static_cast<int>(w.period.size());
    if (k < m) {
        return {DigitWord(w.preperiod.begin() + k, w.preperiod.end()), w.period};
    }
    const int rot = (k - m) % n;
    DigitWord period;
    period.reserve(n);
    for (int i = 0; i < n; ++i) period.push_back(w.period[(rot + i) % n]);
    return {{}, period};
}

AffineMap digit_map(const Params& p, Digit d) {
    if (d < 0 || d >= p.b) {
        throw std::invalid_argument("digit " + std::to_string(d) + " outside alphabet");
    }
    if (d == 0) return {Rational(1, p.a), Rational(0)};
    return {Rational(1, p.b), Rational(d, p.b)};
}

AffineMap compose_word(const Params& p, const DigitWord& w) {
    AffineMap m;  // identity
    for (Digit d : w) m = compose(m, digit_map(p, d));
    return m;
}

Interval cylinder(const Params& p, const DigitWord& w) {
    AffineMap m = compose_word(p, w);
    return {m.translation, m.translation + m.ratio};
}

Rational pi_prefix(const Params& p, const DigitWord& w) {
    return compose_word(p, w).translation;
}

Rational pi_periodic(const Params& p, const EventuallyPeriodicWord& w) {
    validate_word(p, w);
    AffineMap per = compose_word(p, w.period);
    // period nonempty, so per.ratio <= 1/a < 1
    Rational fixed = per.translation / (Rational(1) - per.ratio);
    return compose_word(p, w.preperiod)(fixed);
}

}  // namespace abexp

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abexp {

/// Exact rational number backed by GMP.
///
/// Always held in lowest terms with a positive denominator. Every
/// arithmetic operation and comparison is exact; there is no rounding
/// anywhere. Conversion to double exists only for statistics summaries
/// and dimension regressions.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers are rationals
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) { init(mpz_class(num), mpz_class(den)); }
    Rational(const mpz_class& num, const mpz_class& den) { init(num, den); }

    /// Parses "p/q" or a bare integer "p". The denominator, when present,
    /// must be a positive integer literal; the numerator may carry a sign.
    static Rational parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    /// "p/q" in lowest terms, or just "p" when the value is an integer.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// Largest integer not greater than the value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw std::domain_error("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    void init(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace abexp

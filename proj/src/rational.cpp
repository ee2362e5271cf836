#include "abexp/rational.hpp"

#include <cctype>
#include <ostream>

namespace abexp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("expected a rational like \"p/q\" or an integer, got \"" +
                                    std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    if (negative) n = -n;
    mpz_class d(std::string(den), 10);
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace abexp

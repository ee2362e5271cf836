#include "abexp/report.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace abexp {

using nlohmann::json;

void to_json(json& j, const Rational& r) { j = r.str(); }

json mpz_to_json(const mpz_class& z) {
    if (z >= 0 && z.fits_ulong_p()) return json(static_cast<std::uint64_t>(z.get_ui()));
    return json(z.get_str());
}

void to_json(json& j, const Params& p) { j = json{{"a", p.a}, {"b", p.b}}; }

void to_json(json& j, const Interval& iv) { j = json{{"lo", iv.lo}, {"hi", iv.hi}}; }

void to_json(json& j, const AffineMap& m) {
    j = json{{"ratio", m.ratio}, {"translation", m.translation}};
}

void to_json(json& j, const EventuallyPeriodicWord& w) {
    j = json{{"preperiod", w.preperiod}, {"period", w.period}};
}

void to_json(json& j, const OrbitStats& s) {
    json hist = json::array();
    for (const auto& [step, count] : s.first_hit_histogram) {
        hist.push_back(json::array({step, count}));
    }
    j = json{{"samples", s.samples},
             {"steps", s.steps},
             {"hits", s.hits},
             {"hit_fraction", s.hit_fraction()},
             {"first_hit_histogram", hist}};
}

void to_json(json& j, const DensityHistogram& h) {
    j = json{{"bins", h.bins}, {"total", h.total}, {"counts", h.counts}, {"masses", h.masses()}};
}

void to_json(json& j, const PrefixCount& pc) {
    json counts = json::array();
    for (const mpz_class& c : pc.counts) counts.push_back(mpz_to_json(c));
    j = json{{"depth", pc.depth}, {"counts", counts}, {"total_nodes", mpz_to_json(pc.total_nodes())}};
}

void to_json(json& j, const Enumeration& e) {
    j = json{{"prefix_count", e.prefix_count}, {"words", e.words}};
}

void to_json(json& j, const UniquenessVerdict& v) {
    j = json{{"unique", v.unique},
             {"witness_shift", v.witness_shift ? json(*v.witness_shift) : json()},
             {"witness_value", v.witness_value ? json(*v.witness_value) : json()}};
}

void to_json(json& j, const UniquePeriodicPoint& pt) {
    j = json{{"word", pt.word}, {"value", pt.value}};
}

void to_json(json& j, const LanguageInfo& info) {
    j = json{{"l", info.l},
             {"r", info.r},
             {"countable_condition", info.countable_condition},
             {"uncountable_condition", info.uncountable_condition}};
}

const char* to_string(LanguageWordStatus s) {
    switch (s) {
        case LanguageWordStatus::unique: return "unique";
        case LanguageWordStatus::exceptional: return "exceptional";
        case LanguageWordStatus::violation: return "violation";
    }
    return "unknown";
}

void to_json(json& j, const LanguageCheck& c) {
    j = json{{"word", c.word},
             {"value", c.value},
             {"status", to_string(c.status)},
             {"witness_shift", c.witness_shift ? json(*c.witness_shift) : json()},
             {"witness_value", c.witness_value ? json(*c.witness_value) : json()}};
}

void to_json(json& j, const LanguageReport& r) {
    j = json{{"info", r.info},
             {"max_start_zero", r.max_start_zero},
             {"min_start_l", r.min_start_l},
             {"max_below_inv_b", r.max_below_inv_b},
             {"min_above_inv_a", r.min_above_inv_a},
             {"words_checked", r.words_checked},
             {"unique_words", r.unique_words},
             {"violations", r.violations},
             {"exceptional", r.exceptional}};
}

void to_json(json& j, const RegressionPoint& pt) {
    j = json{{"scale_exponent", pt.scale_exponent}, {"boxes_occupied", pt.boxes}};
}

void to_json(json& j, const Regression& reg) {
    j = json{{"slope", reg.slope},
             {"intercept", reg.intercept},
             {"r2", reg.r2},
             {"points", reg.points}};
}

void to_json(json& j, const DimensionResult& res) {
    j = json{{"case", to_string(res.dim_case)},
             {"s", res.s ? json(*res.s) : json()},
             {"value", res.value},
             {"residual", res.residual},
             {"regression", res.regression ? json(*res.regression) : json()}};
}

void to_json(json& j, const OverlapPair& pair) {
    j = json{{"left", pair.left}, {"right", pair.right}};
}

namespace {

int parse_digit_token(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("empty digit in word");
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("bad digit \"" + std::string(token) + "\" in word");
        }
    }
    if (token.size() > 9) throw std::invalid_argument("digit \"" + std::string(token) + "\" too large");
    return std::stoi(std::string(token));
}

}  // namespace

DigitWord parse_digit_word(std::string_view text) {
    DigitWord out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_digit_token(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

EventuallyPeriodicWord parse_periodic_word(std::string_view text) {
    std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw std::invalid_argument("expected \"preperiod|period\", got \"" + std::string(text) +
                                    "\"");
    }
    return {parse_digit_word(text.substr(0, bar)), parse_digit_word(text.substr(bar + 1))};
}

std::string csv_counts(const PrefixCount& pc) {
    std::ostringstream os;
    os << "n,count\n";
    for (std::size_t n = 0; n < pc.counts.size(); ++n) {
        os << n << ',' << pc.counts[n].get_str() << '\n';
    }
    return os.str();
}

std::string csv_first_hits(const OrbitStats& s) {
    std::ostringstream os;
    os << "step,count\n";
    for (const auto& [step, count] : s.first_hit_histogram) {
        os << step << ',' << count << '\n';
    }
    return os.str();
}

std::string csv_density(const DensityHistogram& h) {
    std::ostringstream os;
    os << "bin,mass\n";
    const std::vector<Rational> masses = h.masses();
    for (std::size_t i = 0; i < masses.size(); ++i) {
        os << i << ',' << masses[i].str() << '\n';
    }
    return os.str();
}

std::string csv_regression(const Regression& reg) {
    std::ostringstream os;
    os << "scale_exponent,boxes_occupied\n";
    for (const RegressionPoint& pt : reg.points) {
        os << pt.scale_exponent << ',' << pt.boxes << '\n';
    }
    return os.str();
}

std::string csv_unique_points(const std::vector<UniquePeriodicPoint>& pts) {
    std::ostringstream os;
    os << "preperiod,period,value\n";
    for (const UniquePeriodicPoint& pt : pts) {
        auto join = [&](const DigitWord& w) {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += ' ';
                s += std::to_string(w[i]);
            }
            return s;
        };
        os << join(pt.word.preperiod) << ',' << join(pt.word.period) << ',' << pt.value.str()
           << '\n';
    }
    return os.str();
}

}  // namespace abexp

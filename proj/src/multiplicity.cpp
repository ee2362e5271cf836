#include "abexp/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace abexp {

namespace {

void check_unit_interval(const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) {
        throw std::invalid_argument("x must lie in [0,1]");
    }
}

/// Exact preimage of y under the branch map of digit d. Only valid when
/// d is viable for y, in which case the result stays in [0,1].
Rational branch_preimage(const Params& p, Digit d, const Rational& y) {
    if (d == 0) return Rational(p.a) * y;
    return Rational(p.b) * y - Rational(d);
}

DigitWord least_rotation(const DigitWord& w) {
    const int n = static_cast<int>(w.size());
    DigitWord best = w;
    DigitWord rot = w;
    for (int s = 1; s < n; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_primitive(const DigitWord& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < n && repeats; ++i) repeats = w[i] == w[i % d];
        if (repeats) return false;
    }
    return true;
}

mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

std::vector<Digit> viable_digits(const Params& p, const Rational& x) {
    check_unit_interval(x);
    std::vector<Digit> out;
    if (x <= p.inv_a()) out.push_back(0);
    // x lies in [j/b, (j+1)/b] only for j = floor(b*x) and, when b*x is an
    // integer, also for the digit one below.
    Rational bx = Rational(p.b) * x;
    mpz_class f = bx.floor();
    for (mpz_class j : {mpz_class(f - 1), f}) {
        if (j < 1 || j > p.b - 1) continue;
        Digit d = static_cast<Digit>(j.get_si());
        if (Rational(d, p.b) <= x && x <= Rational(d + 1, p.b)) out.push_back(d);
    }
    return out;
}

mpz_class PrefixCount::total_nodes() const {
    mpz_class t = 0;
    for (const mpz_class& c : counts) t += c;
    return t;
}

Enumeration enumerate_prefixes(const Params& p, const Rational& x, int depth, long long cap,
                               bool collect_words) {
    check_unit_interval(x);
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");

    PrefixCount pc;
    pc.depth = depth;
    pc.counts.reserve(depth + 1);
    pc.counts.push_back(1);
    mpz_class total = 1;
    const mpz_class cap_z = to_mpz(cap);

    auto overflow = [&](int reached) {
        pc.depth = reached;
        return EnumerationOverflow("enumeration overflow: node cap " + std::to_string(cap) +
                                       " exceeded at depth " + std::to_string(reached),
                                   pc);
    };

    if (collect_words) {
        // Explicit nodes, one per word.
        std::vector<std::pair<DigitWord, Rational>> frontier;
        frontier.emplace_back(DigitWord{}, x);
        for (int n = 1; n <= depth; ++n) {
            std::vector<std::pair<DigitWord, Rational>> next;
            for (const auto& [word, y] : frontier) {
                for (Digit d : viable_digits(p, y)) {
                    DigitWord ext = word;
                    ext.push_back(d);
                    next.emplace_back(std::move(ext), branch_preimage(p, d, y));
                }
            }
            frontier = std::move(next);
            pc.counts.push_back(static_cast<long>(frontier.size()));
            total += pc.counts.back();
            if (cap > 0 && total > cap_z) throw overflow(n);
        }
        Enumeration e;
        e.prefix_count = std::move(pc);
        e.words.reserve(frontier.size());
        for (auto& [word, y] : frontier) e.words.push_back(std::move(word));
        std::sort(e.words.begin(), e.words.end());
        return e;
    }

    // Words reaching the same tail value branch identically from there on,
    // so the frontier aggregates multiplicities per value.
    std::map<Rational, mpz_class> frontier;
    frontier.emplace(x, 1);
    for (int n = 1; n <= depth; ++n) {
        std::map<Rational, mpz_class> next;
        mpz_class level = 0;
        for (const auto& [y, mult] : frontier) {
            for (Digit d : viable_digits(p, y)) {
                next[branch_preimage(p, d, y)] += mult;
                level += mult;
            }
        }
        frontier = std::move(next);
        pc.counts.push_back(level);
        total += level;
        if (cap > 0 && total > cap_z) throw overflow(n);
    }
    return Enumeration{std::move(pc), {}};
}

UniquenessVerdict check_unique(const Params& p, const EventuallyPeriodicWord& w) {
    validate_word(p, w);
    GoodRegion region{p};
    const int shifts = static_cast<int>(w.preperiod.size() + w.period.size());
    for (int k = 0; k < shifts; ++k) {
        Rational value = pi_periodic(p, shift_word(w, k));
        if (!region.contains(value)) {
            return {false, k, value};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

std::vector<UniquePeriodicPoint> search_unique_periodic(const Params& p, int max_period,
                                                        long long cap) {
    if (max_period < 1) throw std::invalid_argument("max_period must be >= 1");

    // b^1 + ... + b^max_period candidate words before rotation pruning.
    mpz_class candidates = 0;
    mpz_class power = 1;
    for (int k = 1; k <= max_period; ++k) {
        power *= p.b;
        candidates += power;
    }
    if (cap > 0 && candidates > to_mpz(cap)) {
        throw CapExceeded("search space of " + candidates.get_str() + " periodic words exceeds cap " +
                          std::to_string(cap));
    }

    std::vector<UniquePeriodicPoint> found;
    for (int k = 1; k <= max_period; ++k) {
        DigitWord w(k, 0);
        while (true) {
            if (is_primitive(w) && least_rotation(w) == w) {
                EventuallyPeriodicWord word{{}, w};
                if (check_unique(p, word).unique) {
                    found.push_back({word, pi_periodic(p, word)});
                }
            }
            // odometer over {0,...,b-1}^k
            int i = k - 1;
            while (i >= 0 && w[i] == p.b - 1) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }
    std::sort(found.begin(), found.end(),
              [](const UniquePeriodicPoint& lhs, const UniquePeriodicPoint& rhs) {
                  return lhs.value < rhs.value;
              });
    return found;
}

LanguageInfo thm42_language(const Params& p) {
    LanguageInfo info;
    info.l = (p.b + p.a - 1) / p.a;  // ceil(b/a)
    info.r = info.l * p.a - p.b;
    info.countable_condition = p.b < p.a * p.a;
    info.uncountable_condition = p.b < p.a * p.a - 2 - info.r;
    return info;
}

std::vector<DigitWord> language_prefixes(const Params& p, int n, long long cap) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    const Digit l = thm42_language(p).l;
    const DigitWord blocks[2] = {{0, l}, {l, 0}};

    // Length-m prefixes of infinite block concatenations.
    auto block_prefixes = [&](int m) {
        std::set<DigitWord> out;
        DigitWord current;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(current.size()) >= m) {
                out.insert(DigitWord(current.begin(), current.begin() + m));
                return;
            }
            for (const DigitWord& blk : blocks) {
                current.insert(current.end(), blk.begin(), blk.end());
                self(self);
                current.resize(current.size() - blk.size());
            }
        };
        rec(rec);
        return out;
    };

    // At most 3 * 2^(n/2 + 1) truncations before deduplication.
    if (cap > 0 && n >= 2) {
        mpz_class bound = 3 * (mpz_class(1) << (n / 2 + 1));
        if (bound > to_mpz(cap)) {
            throw CapExceeded("language truncation count exceeds cap " + std::to_string(cap));
        }
    }

    std::set<DigitWord> result = block_prefixes(n);
    if (n >= 1) {
        for (const DigitWord& tail : block_prefixes(n - 1)) {
            for (Digit first : {Digit(0), l}) {
                DigitWord w;
                w.reserve(n);
                w.push_back(first);
                w.insert(w.end(), tail.begin(), tail.end());
                result.insert(std::move(w));
            }
        }
    }
    return {result.begin(), result.end()};
}

LanguageReport verify_language_bounds(const Params& p, int depth, long long cap) {
    if (depth < 2) throw std::invalid_argument("depth must be >= 2");
    LanguageReport report;
    report.info = thm42_language(p);
    const Digit l = report.info.l;

    // Extremal projections over the language: starting with 0 the largest
    // value is 0 l (l 0)^inf, starting with l the smallest is l 0 (0 l)^inf.
    report.max_start_zero = pi_periodic(p, {{0, l}, {l, 0}});
    report.min_start_l = pi_periodic(p, {{l, 0}, {0, l}});
    report.max_below_inv_b = report.max_start_zero < p.inv_b();
    report.min_above_inv_a = report.min_start_l > p.inv_a();

    const int max_blocks = depth / 2;
    if (cap > 0) {
        mpz_class patterns = (mpz_class(1) << (max_blocks + 1)) - 2;
        if (patterns > to_mpz(cap)) {
            throw CapExceeded("block pattern count exceeds cap " + std::to_string(cap));
        }
    }

    const DigitWord blocks[2] = {{0, l}, {l, 0}};
    std::set<DigitWord> seen;  // canonical rotations of primitive periods

    for (int k = 1; k <= max_blocks; ++k) {
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            DigitWord period;
            period.reserve(2 * k);
            for (int i = 0; i < k; ++i) {
                const DigitWord& blk = blocks[(mask >> i) & 1];
                period.insert(period.end(), blk.begin(), blk.end());
            }
            if (!is_primitive(period)) continue;  // same infinite word as a shorter pattern
            if (!seen.insert(least_rotation(period)).second) continue;

            EventuallyPeriodicWord word{{}, period};
            LanguageCheck check{word, pi_periodic(p, word), LanguageWordStatus::unique, {}, {}};
            for (int s = 0; s < static_cast<int>(period.size()); ++s) {
                Rational value = pi_periodic(p, shift_word(word, s));
                if (value >= p.inv_b() && value <= p.inv_a()) {
                    check.status = LanguageWordStatus::violation;
                    check.witness_shift = s;
                    check.witness_value = value;
                    break;
                }
                if (check.status == LanguageWordStatus::unique && p.is_boundary_point(value)) {
                    check.status = LanguageWordStatus::exceptional;
                    check.witness_shift = s;
                    check.witness_value = value;
                }
            }
            ++report.words_checked;
            switch (check.status) {
                case LanguageWordStatus::unique:
                    ++report.unique_words;
                    break;
                case LanguageWordStatus::exceptional:
                    report.exceptional.push_back(std::move(check));
                    break;
                case LanguageWordStatus::violation:
                    report.violations.push_back(std::move(check));
                    break;
            }
        }
    }
    return report;
}

}  // namespace abexp

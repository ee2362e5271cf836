#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abexp/core.hpp"
#include "abexp/errors.hpp"

namespace abexp {

/// The region ([0,1/b) u (1/a,1]) minus the branch-boundary points j/b.
/// A tail value in this region admits exactly one next digit; an
/// eventually periodic expansion is unique iff every shifted tail value
/// stays inside.
struct GoodRegion {
    Params p;

    bool contains(const Rational& x) const {
        if (x >= p.inv_b() && x <= p.inv_a()) return false;
        return !p.is_boundary_point(x);
    }
};

/// Digits j with x in the closed image T_j([0,1]): digit 0 iff x <= 1/a,
/// digit j >= 1 iff j/b <= x <= (j+1)/b. Sorted; size 1, 2 or 3.
std::vector<Digit> viable_digits(const Params& p, const Rational& x);

/// counts[n] = number of depth-n digit words whose cylinder contains x.
struct PrefixCount {
    int depth = 0;
    std::vector<mpz_class> counts;

    mpz_class total_nodes() const;
};

/// Node/word cap exceeded during prefix enumeration; carries the counts
/// gathered before the overflow.
class EnumerationOverflow : public CapExceeded {
public:
    EnumerationOverflow(const std::string& what, PrefixCount partial)
        : CapExceeded(what), partial_(std::move(partial)) {}

    const PrefixCount& partial() const { return partial_; }

private:
    PrefixCount partial_;
};

struct Enumeration {
    PrefixCount prefix_count;
    std::vector<DigitWord> words;  // depth-n words, only when requested
};

/// Breadth-first expansion of the branch tree of x: a node carrying tail
/// value y branches on every viable digit j to the exact preimage
/// T_j^{-1}(y). counts[n] counts words, so equal tail values reached by
/// different words are aggregated with multiplicities unless the final
/// word list is requested. cap <= 0 disables the cap; otherwise the
/// total number of tree nodes (sum of counts) is bounded by cap.
Enumeration enumerate_prefixes(const Params& p, const Rational& x, int depth,
                               long long cap = 1'000'000, bool collect_words = false);

struct UniquenessVerdict {
    bool unique = false;
    std::optional<int> witness_shift;
    std::optional<Rational> witness_value;
};

/// Exact uniqueness decision for an eventually periodic expansion: every
/// distinct shifted tail (preperiod + period many) must project into the
/// good region. Returns the least failing shift otherwise.
UniquenessVerdict check_unique(const Params& p, const EventuallyPeriodicWord& w);

struct UniquePeriodicPoint {
    EventuallyPeriodicWord word;  // purely periodic, lexicographically least rotation
    Rational value;
};

/// Enumerates purely periodic words with period length <= max_period (one
/// representative per rotation class, primitive periods only), keeps the
/// ones whose expansion is unique, sorted by value.
std::vector<UniquePeriodicPoint> search_unique_periodic(const Params& p, int max_period,
                                                        long long cap = 1'000'000);

/// The two-block language derived from l = ceil(b/a), r = l*a - b:
/// infinite words over the blocks {0l, l0} together with their one-step
/// shifts. Inside the stated parameter range every member projects to a
/// uniquely expandable point.
struct LanguageInfo {
    int l = 0;
    int r = 0;
    bool countable_condition = false;    // b < a^2
    bool uncountable_condition = false;  // b < a^2 - 2 - r
};

LanguageInfo thm42_language(const Params& p);

/// All length-n truncations of the two-block language (block words plus
/// their one-step shifts), deduplicated and sorted.
std::vector<DigitWord> language_prefixes(const Params& p, int n, long long cap = 1'000'000);

enum class LanguageWordStatus {
    unique,       // all shifted tail values in the good region
    exceptional,  // some tail hits a boundary point j/b, none lands in the overlap
    violation,    // some tail lands in the closed overlap [1/b, 1/a]
};

struct LanguageCheck {
    EventuallyPeriodicWord word;
    Rational value;
    LanguageWordStatus status;
    std::optional<int> witness_shift;
    std::optional<Rational> witness_value;
};

struct LanguageReport {
    LanguageInfo info;
    Rational max_start_zero;  // largest projection of language words starting with 0
    Rational min_start_l;     // smallest projection of language words starting with l
    bool max_below_inv_b = false;
    bool min_above_inv_a = false;
    long long words_checked = 0;
    long long unique_words = 0;
    std::vector<LanguageCheck> violations;
    std::vector<LanguageCheck> exceptional;
};

/// Checks every periodic block pattern with period length <= depth against
/// the uniqueness criterion and computes the exact extremal projections
/// (the periodic words 0 l (l 0)^inf and l 0 (0 l)^inf). Runs regardless
/// of whether the parameter conditions hold, so failures can be observed.
LanguageReport verify_language_bounds(const Params& p, int depth, long long cap = 1'000'000);

}  // namespace abexp

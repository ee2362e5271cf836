#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abexp/core.hpp"
#include "abexp/dimension.hpp"
#include "abexp/dynamics.hpp"
#include "abexp/multiplicity.hpp"
#include "abexp/report.hpp"
#include "abexp/version.hpp"

namespace {

using nlohmann::json;
using namespace abexp;

constexpr long long kDefaultCap = 1'000'000;

struct Common {
    long long a = 0;
    long long b = 0;
    std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--a", c.a, "first base: digit 0 contracts by 1/a")->required();
    sub->add_option("--b", c.b, "second base: digit alphabet {0,...,b-1}")->required();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
}

void add_cap(CLI::App* sub, long long& cap) {
    sub->add_option("--cap", cap, "enumeration node/word cap, 0 disables")
        ->envname("AB_EXPAND_MAX_NODES")
        ->capture_default_str();
}

void emit_json(const Params& p, json inputs, json result,
               std::optional<std::uint64_t> seed = std::nullopt) {
    json prov{{"version", kVersion}};
    if (seed) prov["seed"] = *seed;
    json out{{"params", p},
             {"inputs", std::move(inputs)},
             {"result", std::move(result)},
             {"provenance", std::move(prov)}};
    std::cout << out.dump(2) << '\n';
}

[[noreturn]] void no_csv(const std::string& sub) {
    throw std::invalid_argument("csv format not available for " + sub);
}

std::string join_digits(const DigitWord& w, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(w[i]);
    }
    return s;
}

std::string word_str(const EventuallyPeriodicWord& w) {
    return join_digits(w.preperiod) + "|" + join_digits(w.period);
}

std::ostream& plain() {
    std::cout << std::setprecision(12);
    return std::cout;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact a,b-expansions: greedy digits, expansion counting, uniqueness, "
                 "restricted-digit dimensions"};
    app.require_subcommand(1);

    // expand
    Common ex_c;
    std::string ex_x;
    int ex_depth = 0;
    auto* ex = app.add_subcommand("expand", "greedy digits, cylinder and partial value of x");
    add_common(ex, ex_c);
    ex->add_option("--x", ex_x, "point in [0,1], rational \"p/q\" or integer")->required();
    ex->add_option("--depth", ex_depth, "number of digits")->required();
    ex->callback([&] {
        Params p = validate_params(ex_c.a, ex_c.b);
        Rational x = Rational::parse(ex_x);
        DigitWord digits = greedy_expand(p, x, ex_depth);
        Interval cyl = cylinder(p, digits);
        Rational value = pi_prefix(p, digits);
        if (ex_c.format == "json") {
            emit_json(p, json{{"x", x}, {"depth", ex_depth}},
                      json{{"digits", digits}, {"cylinder", cyl}, {"value", value}});
        } else if (ex_c.format == "plain") {
            plain() << "digits: " << join_digits(digits) << '\n'
                    << "cylinder: [" << cyl.lo << ", " << cyl.hi << "]\n"
                    << "value: " << value << '\n';
        } else {
            no_csv("expand");
        }
    });

    // count
    Common ct_c;
    std::string ct_x;
    int ct_depth = 0;
    long long ct_cap = kDefaultCap;
    bool ct_words = false;
    auto* ct = app.add_subcommand("count", "count digit words whose cylinder contains x");
    add_common(ct, ct_c);
    ct->add_option("--x", ct_x, "point in [0,1], rational \"p/q\" or integer")->required();
    ct->add_option("--depth", ct_depth, "maximum word length")->required();
    ct->add_flag("--words", ct_words, "also list the depth-n words");
    add_cap(ct, ct_cap);
    ct->callback([&] {
        Params p = validate_params(ct_c.a, ct_c.b);
        Rational x = Rational::parse(ct_x);
        Enumeration e = enumerate_prefixes(p, x, ct_depth, ct_cap, ct_words);
        if (ct_c.format == "json") {
            emit_json(p,
                      json{{"x", x}, {"depth", ct_depth}, {"cap", ct_cap}, {"words", ct_words}},
                      json(e));
        } else if (ct_c.format == "csv") {
            std::cout << csv_counts(e.prefix_count);
        } else {
            plain() << "depth: " << e.prefix_count.depth << '\n' << "counts:";
            for (const mpz_class& c : e.prefix_count.counts) std::cout << ' ' << c.get_str();
            std::cout << '\n'
                      << "total_nodes: " << e.prefix_count.total_nodes().get_str() << '\n';
            for (const DigitWord& w : e.words) std::cout << join_digits(w) << '\n';
        }
    });

    // unique
    Common un_c;
    std::string un_word;
    auto* un = app.add_subcommand("unique", "decide uniqueness of an eventually periodic expansion");
    add_common(un, un_c);
    un->add_option("--word", un_word, "eventually periodic word \"preperiod|period\"")->required();
    un->callback([&] {
        Params p = validate_params(un_c.a, un_c.b);
        EventuallyPeriodicWord w = parse_periodic_word(un_word);
        UniquenessVerdict v = check_unique(p, w);
        Rational value = pi_periodic(p, w);
        if (un_c.format == "json") {
            json result(v);
            result["value"] = value;
            emit_json(p, json{{"word", w}}, result);
        } else if (un_c.format == "plain") {
            plain() << "unique: " << (v.unique ? "true" : "false") << '\n'
                    << "value: " << value << '\n';
            if (!v.unique) {
                std::cout << "witness_shift: " << *v.witness_shift << '\n'
                          << "witness_value: " << *v.witness_value << '\n';
            }
        } else {
            no_csv("unique");
        }
    });

    // search-unique
    Common su_c;
    int su_maxp = 0;
    long long su_cap = kDefaultCap;
    auto* su = app.add_subcommand("search-unique",
                                  "find purely periodic words with unique expansions");
    add_common(su, su_c);
    su->add_option("--max-period", su_maxp, "largest period length to scan")->required();
    add_cap(su, su_cap);
    su->callback([&] {
        Params p = validate_params(su_c.a, su_c.b);
        auto pts = search_unique_periodic(p, su_maxp, su_cap);
        if (su_c.format == "json") {
            emit_json(p, json{{"max_period", su_maxp}, {"cap", su_cap}},
                      json{{"count", pts.size()}, {"points", pts}});
        } else if (su_c.format == "csv") {
            std::cout << csv_unique_points(pts);
        } else {
            plain() << "found: " << pts.size() << '\n';
            for (const UniquePeriodicPoint& pt : pts) {
                std::cout << word_str(pt.word) << " -> " << pt.value << '\n';
            }
        }
    });

    // language
    Common lg_c;
    int lg_depth = 10;
    long long lg_cap = kDefaultCap;
    auto* lg = app.add_subcommand("language",
                                  "two-block language parameters and uniqueness verification");
    add_common(lg, lg_c);
    lg->add_option("--depth", lg_depth, "check block patterns up to this period length")
        ->capture_default_str();
    add_cap(lg, lg_cap);
    lg->callback([&] {
        Params p = validate_params(lg_c.a, lg_c.b);
        LanguageReport r = verify_language_bounds(p, lg_depth, lg_cap);
        if (lg_c.format == "json") {
            emit_json(p, json{{"depth", lg_depth}, {"cap", lg_cap}}, json(r));
        } else if (lg_c.format == "plain") {
            plain() << "l: " << r.info.l << '\n'
                    << "r: " << r.info.r << '\n'
                    << "countable_condition: " << (r.info.countable_condition ? "true" : "false")
                    << '\n'
                    << "uncountable_condition: "
                    << (r.info.uncountable_condition ? "true" : "false") << '\n'
                    << "max_start_zero: " << r.max_start_zero
                    << (r.max_below_inv_b ? " < 1/b" : " !< 1/b") << '\n'
                    << "min_start_l: " << r.min_start_l
                    << (r.min_above_inv_a ? " > 1/a" : " !> 1/a") << '\n'
                    << "words_checked: " << r.words_checked << '\n'
                    << "unique_words: " << r.unique_words << '\n'
                    << "violations: " << r.violations.size() << '\n'
                    << "exceptional: " << r.exceptional.size() << '\n';
            for (const LanguageCheck& c : r.violations) {
                std::cout << "violation: " << word_str(c.word) << " shift " << *c.witness_shift
                          << " -> " << *c.witness_value << '\n';
            }
        } else {
            no_csv("language");
        }
    });

    // dimension
    Common dm_c;
    std::string dm_digits;
    std::string dm_method = "formula";
    double dm_tol = 1e-12;
    int dm_depth = 13;
    std::string dm_scales = "6,7,8,9,10,11,12";
    long long dm_cap = kDefaultCap;
    auto* dm = app.add_subcommand("dimension",
                                  "dimension of the points expandable with a restricted digit set");
    add_common(dm, dm_c);
    dm->add_option("--digits", dm_digits, "digit set, comma list")->required();
    dm->add_option("--method", dm_method, "formula | similarity | box")
        ->check(CLI::IsMember({"formula", "similarity", "box"}))
        ->capture_default_str();
    dm->add_option("--tol", dm_tol, "similarity solver tolerance")->capture_default_str();
    dm->add_option("--depth", dm_depth, "cylinder depth for box counting")->capture_default_str();
    dm->add_option("--scales", dm_scales, "box scale exponents e (boxes of width 2^-e)")
        ->capture_default_str();
    add_cap(dm, dm_cap);
    dm->callback([&] {
        Params p = validate_params(dm_c.a, dm_c.b);
        DigitSet D = validate_digit_set(p, parse_digit_word(dm_digits));
        json inputs{{"digits", D}, {"method", dm_method}};
        json result;
        std::optional<Regression> reg;
        if (dm_method == "similarity") {
            double s = similarity_dimension(p, D, dm_tol);
            double residual = std::pow(1.0 / p.a, s) +
                              (static_cast<double>(D.size()) - 1) * std::pow(1.0 / p.b, s) - 1.0;
            inputs["tol"] = dm_tol;
            result = json{{"s", s}, {"residual", std::fabs(residual)}};
            if (dm_c.format == "plain") {
                plain() << "s: " << s << '\n' << "residual: " << std::fabs(residual) << '\n';
                return;
            }
        } else {
            BoxCountConfig cfg;
            cfg.depth = dm_depth;
            cfg.scales.clear();
            for (int e : parse_digit_word(dm_scales)) cfg.scales.push_back(e);
            cfg.cap = dm_cap;
            DimensionResult res = dm_method == "box" ? box_count_dimension(p, D, cfg)
                                                     : hausdorff_formula(p, D, cfg);
            if (res.regression) {
                inputs["depth"] = dm_depth;
                inputs["scales"] = cfg.scales;
                inputs["cap"] = dm_cap;
            }
            reg = res.regression;
            result = json(res);
            if (dm_c.format == "plain") {
                plain() << "case: " << to_string(res.dim_case) << '\n';
                if (res.s) std::cout << "s: " << *res.s << '\n';
                std::cout << "value: " << res.value << '\n'
                          << "residual: " << res.residual << '\n';
                if (res.regression) {
                    std::cout << "slope: " << res.regression->slope
                              << " intercept: " << res.regression->intercept
                              << " r2: " << res.regression->r2 << '\n';
                }
                return;
            }
        }
        if (dm_c.format == "json") {
            emit_json(p, inputs, result);
        } else {
            if (!reg) no_csv("dimension without box counting");
            std::cout << csv_regression(*reg);
        }
    });

    // overlaps
    Common ov_c;
    std::string ov_digits;
    int ov_depth = 0;
    long long ov_cap = kDefaultCap;
    auto* ov = app.add_subcommand("overlaps",
                                  "exact word collisions and multiplicative commensurability");
    add_common(ov, ov_c);
    ov->add_option("--digits", ov_digits, "digit set, comma list")->required();
    ov->add_option("--depth", ov_depth, "maximum word length")->required();
    add_cap(ov, ov_cap);
    ov->callback([&] {
        Params p = validate_params(ov_c.a, ov_c.b);
        DigitSet D = validate_digit_set(p, parse_digit_word(ov_digits));
        auto comm = is_commensurable(p.a, p.b);
        auto pairs = detect_exact_overlaps(p, D, ov_depth, ov_cap);
        if (ov_c.format == "json") {
            emit_json(p, json{{"digits", D}, {"depth", ov_depth}, {"cap", ov_cap}},
                      json{{"commensurable",
                            comm ? json::array({comm->first, comm->second}) : json()},
                           {"pairs", pairs}});
        } else if (ov_c.format == "plain") {
            if (comm) {
                plain() << "commensurable: a^" << comm->first << " = b^" << comm->second << '\n';
            } else {
                plain() << "commensurable: none\n";
            }
            std::cout << "pairs: " << pairs.size() << '\n';
            for (const OverlapPair& pr : pairs) {
                std::cout << join_digits(pr.left) << " = " << join_digits(pr.right) << '\n';
            }
        } else {
            no_csv("overlaps");
        }
    });

    // orbit-stats
    Common os_c;
    long long os_samples = 10'000;
    long long os_steps = 100;
    std::uint64_t os_seed = 1;
    long long os_denom = 1'000'003;
    auto* os = app.add_subcommand("orbit-stats",
                                  "how often sampled greedy orbits enter the branch overlap");
    add_common(os, os_c);
    os->add_option("--samples", os_samples, "number of sampled starting points")
        ->capture_default_str();
    os->add_option("--steps", os_steps, "greedy iterations per sample")->capture_default_str();
    os->add_option("--seed", os_seed, "deterministic sampling seed")->capture_default_str();
    os->add_option("--denom", os_denom, "samples are k/denom")->capture_default_str();
    os->callback([&] {
        Params p = validate_params(os_c.a, os_c.b);
        OrbitStats s = overlap_hit_stats(p, os_samples, os_steps, os_seed, os_denom);
        if (os_c.format == "json") {
            emit_json(p,
                      json{{"samples", os_samples},
                           {"steps", os_steps},
                           {"denom", os_denom}},
                      json(s), os_seed);
        } else if (os_c.format == "csv") {
            std::cout << csv_first_hits(s);
        } else {
            plain() << "samples: " << s.samples << '\n'
                    << "steps: " << s.steps << '\n'
                    << "hits: " << s.hits << '\n'
                    << "hit_fraction: " << s.hit_fraction() << '\n';
        }
    });

    // density
    Common dn_c;
    int dn_bins = 10;
    long long dn_samples = 10'000;
    long long dn_steps = 100;
    std::uint64_t dn_seed = 1;
    long long dn_denom = 1'000'003;
    double dn_burn = 0.1;
    auto* dn = app.add_subcommand("density",
                                  "empirical visit histogram of sampled greedy orbits");
    add_common(dn, dn_c);
    dn->add_option("--bins", dn_bins, "number of equal subintervals of [0,1]")
        ->capture_default_str();
    dn->add_option("--samples", dn_samples, "number of sampled starting points")
        ->capture_default_str();
    dn->add_option("--steps", dn_steps, "greedy iterations per sample")->capture_default_str();
    dn->add_option("--seed", dn_seed, "deterministic sampling seed")->capture_default_str();
    dn->add_option("--denom", dn_denom, "samples are k/denom")->capture_default_str();
    dn->add_option("--burn-in", dn_burn, "fraction of leading iterates to discard")
        ->capture_default_str();
    dn->callback([&] {
        Params p = validate_params(dn_c.a, dn_c.b);
        DensityHistogram h =
            invariant_density_histogram(p, dn_bins, dn_samples, dn_steps, dn_seed, dn_denom,
                                        dn_burn);
        if (dn_c.format == "json") {
            emit_json(p,
                      json{{"bins", dn_bins},
                           {"samples", dn_samples},
                           {"steps", dn_steps},
                           {"denom", dn_denom},
                           {"burn_in", dn_burn}},
                      json(h), dn_seed);
        } else if (dn_c.format == "csv") {
            std::cout << csv_density(h);
        } else {
            plain() << "bins: " << h.bins << '\n' << "total: " << h.total << '\n' << "masses:";
            for (const Rational& m : h.masses()) std::cout << ' ' << m;
            std::cout << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

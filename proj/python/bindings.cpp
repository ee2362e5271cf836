#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "abexp/core.hpp"
#include "abexp/dimension.hpp"
#include "abexp/dynamics.hpp"
#include "abexp/multiplicity.hpp"
#include "abexp/report.hpp"
#include "abexp/version.hpp"

namespace py = pybind11;
using namespace abexp;
using nlohmann::json;

namespace {

// Structured results cross the boundary as plain Python objects; exact
// rationals stay "p/q" strings throughout.
py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object mpz_to_int(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

}  // namespace

PYBIND11_MODULE(_abexp, m) {
    m.doc() = "exact a,b-expansions: digit maps, greedy expansion, uniqueness, dimension";
    m.attr("__version__") = kVersion;

    m.def(
        "pi_prefix",
        [](int a, int b, const DigitWord& word) {
            Params p = validate_params(a, b);
            return pi_prefix(p, word).str();
        },
        py::arg("a"), py::arg("b"), py::arg("word"));

    m.def(
        "pi_periodic",
        [](int a, int b, const DigitWord& preperiod, const DigitWord& period) {
            Params p = validate_params(a, b);
            return pi_periodic(p, {preperiod, period}).str();
        },
        py::arg("a"), py::arg("b"), py::arg("preperiod"), py::arg("period"));

    m.def(
        "cylinder",
        [](int a, int b, const DigitWord& word) {
            Params p = validate_params(a, b);
            Interval iv = cylinder(p, word);
            return py::make_tuple(iv.lo.str(), iv.hi.str());
        },
        py::arg("a"), py::arg("b"), py::arg("word"));

    m.def(
        "greedy_expand",
        [](int a, int b, const std::string& x, int n) {
            Params p = validate_params(a, b);
            return greedy_expand(p, Rational::parse(x), n);
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("n"));

    m.def(
        "orbit",
        [](int a, int b, const std::string& x, int n) {
            Params p = validate_params(a, b);
            std::vector<std::string> out;
            for (const Rational& v : orbit(p, Rational::parse(x), n)) out.push_back(v.str());
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("n"));

    m.def(
        "count_expansions",
        [](int a, int b, const std::string& x, int depth, long long cap) {
            Params p = validate_params(a, b);
            Enumeration e = enumerate_prefixes(p, Rational::parse(x), depth, cap, false);
            py::list counts;
            for (const mpz_class& c : e.prefix_count.counts) counts.append(mpz_to_int(c));
            return counts;
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("depth"), py::arg("cap") = 1'000'000);

    m.def(
        "check_unique",
        [](int a, int b, const DigitWord& preperiod, const DigitWord& period) {
            Params p = validate_params(a, b);
            EventuallyPeriodicWord w{preperiod, period};
            UniquenessVerdict v = check_unique(p, w);
            json result(v);
            result["value"] = pi_periodic(p, w);
            return json_to_py(result);
        },
        py::arg("a"), py::arg("b"), py::arg("preperiod"), py::arg("period"));

    m.def(
        "search_unique_periodic",
        [](int a, int b, int max_period, long long cap) {
            Params p = validate_params(a, b);
            return json_to_py(json(search_unique_periodic(p, max_period, cap)));
        },
        py::arg("a"), py::arg("b"), py::arg("max_period"), py::arg("cap") = 1'000'000);

    m.def(
        "thm42_language",
        [](int a, int b) {
            return json_to_py(json(thm42_language(validate_params(a, b))));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "verify_language_bounds",
        [](int a, int b, int depth, long long cap) {
            Params p = validate_params(a, b);
            return json_to_py(json(verify_language_bounds(p, depth, cap)));
        },
        py::arg("a"), py::arg("b"), py::arg("depth") = 10, py::arg("cap") = 1'000'000);

    m.def(
        "similarity_dimension",
        [](int a, int b, const std::vector<Digit>& digits, double tol) {
            Params p = validate_params(a, b);
            return similarity_dimension(p, validate_digit_set(p, digits), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("digits"), py::arg("tol") = 1e-12);

    m.def(
        "hausdorff_formula",
        [](int a, int b, const std::vector<Digit>& digits) {
            Params p = validate_params(a, b);
            return json_to_py(json(hausdorff_formula(p, validate_digit_set(p, digits))));
        },
        py::arg("a"), py::arg("b"), py::arg("digits"));

    m.def(
        "box_count_dimension",
        [](int a, int b, const std::vector<Digit>& digits, int depth, std::vector<int> scales,
           long long cap) {
            Params p = validate_params(a, b);
            BoxCountConfig cfg;
            cfg.depth = depth;
            if (!scales.empty()) cfg.scales = std::move(scales);
            cfg.cap = cap;
            return json_to_py(json(box_count_dimension(p, validate_digit_set(p, digits), cfg)));
        },
        py::arg("a"), py::arg("b"), py::arg("digits"), py::arg("depth") = 13,
        py::arg("scales") = std::vector<int>{}, py::arg("cap") = 1'000'000);

    m.def("is_commensurable", &is_commensurable, py::arg("a"), py::arg("b"));

    m.def(
        "detect_exact_overlaps",
        [](int a, int b, const std::vector<Digit>& digits, int depth, long long cap) {
            Params p = validate_params(a, b);
            return json_to_py(json(detect_exact_overlaps(p, validate_digit_set(p, digits),
                                                         depth, cap)));
        },
        py::arg("a"), py::arg("b"), py::arg("digits"), py::arg("depth"),
        py::arg("cap") = 1'000'000);

    m.def(
        "overlap_hit_stats",
        [](int a, int b, long long samples, long long steps, std::uint64_t seed,
           long long denom) {
            Params p = validate_params(a, b);
            return json_to_py(json(overlap_hit_stats(p, samples, steps, seed, denom)));
        },
        py::arg("a"), py::arg("b"), py::arg("samples") = 10'000, py::arg("steps") = 100,
        py::arg("seed") = 1, py::arg("denom") = 1'000'003);

    m.def(
        "invariant_density_histogram",
        [](int a, int b, int bins, long long samples, long long steps, std::uint64_t seed,
           long long denom, double burn_in) {
            Params p = validate_params(a, b);
            return json_to_py(
                json(invariant_density_histogram(p, bins, samples, steps, seed, denom, burn_in)));
        },
        py::arg("a"), py::arg("b"), py::arg("bins") = 10, py::arg("samples") = 10'000,
        py::arg("steps") = 100, py::arg("seed") = 1, py::arg("denom") = 1'000'003,
        py::arg("burn_in") = 0.1);
}

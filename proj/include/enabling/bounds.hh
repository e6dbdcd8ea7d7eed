#ifndef ENABLING_BOUNDS_HH
#define ENABLING_BOUNDS_HH

#include <enabling/rational.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace enabling
{
    struct ProvenanceEntry
    {
        std::string formula;
        nlohmann::json value;
    };

    struct BoundReport
    {
        std::uint64_t lower = 0;
        std::optional<std::uint64_t> upper;
        std::optional<std::uint64_t> exact;
        std::vector<ProvenanceEntry> provenance;
    };

    /// ceil((sqrt(k1-1) + sqrt(k2-1))^2), computed with integer square roots.
    auto two_colour_lower(std::uint64_t k1, std::uint64_t k2) -> std::uint64_t;

    /// Largest k with a k-enabling graph on n vertices: floor(n/4) + 1.
    auto feige_k_of_n(std::uint64_t n) -> std::uint64_t;

    /// sum_{i<j} x_i x_j - sum_i x_i + 1, for entries in [0, 1].
    auto improved_inequality(std::span<const Rational> x) -> Rational;

    /// f_m(x) = k m x - m(m-1)/2 x^2.
    auto f_eval(std::uint64_t m, std::uint64_t k, const Rational & x) -> Rational;

    /// max over 0 <= m <= r of f_m(x).
    auto f_max(std::uint64_t r, std::uint64_t k, const Rational & x) -> Rational;

    /// max(r(k-1)+1, f_max(r,k,2)); the report lists every formula tried.
    auto multicolour_lower(std::uint64_t r, std::uint64_t k) -> BoundReport;

    /// 2r(k-1), or p^2 when k = p is prime and r = p + 1, whichever is smaller.
    auto multicolour_upper(std::uint64_t r, std::uint64_t k) -> std::uint64_t;

    /// Lower and upper bounds on n(k1, k2) with the formulas that produced them.
    auto two_colour_report(std::uint64_t k1, std::uint64_t k2) -> BoundReport;

    /// Lower and upper bounds on n_r(k); when they differ the gap is open.
    auto multicolour_report(std::uint64_t r, std::uint64_t k) -> BoundReport;

    auto to_json(const BoundReport & report) -> nlohmann::json;
}

#endif

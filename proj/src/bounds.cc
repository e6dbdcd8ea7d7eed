#include <enabling/bounds.hh>
#include <enabling/constructions.hh>
#include <enabling/graph.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;

using nlohmann::json;

namespace enabling
{
    namespace
    {
        auto checked_mul(uint64_t a, uint64_t b) -> uint64_t
        {
            uint64_t out;
            if (__builtin_mul_overflow(a, b, &out))
                throw InvalidArgument{ "parameters too large: arithmetic overflow" };
            return out;
        }

        auto need_at_least_two(uint64_t r, uint64_t k) -> void
        {
            if (r < 2 || k < 2)
                throw InvalidArgument{ "multicolour bounds need r, k >= 2" };
        }

        auto integer_value(const Rational & q) -> uint64_t
        {
            auto c = ceil(q);
            if (c < 0 || ! c.fits_ulong_p())
                throw InvalidArgument{ "bound does not fit in 64 bits" };
            return c.get_ui();
        }

        auto finish(BoundReport & report) -> void
        {
            if (report.upper && *report.upper == report.lower)
                report.exact = report.lower;
        }

        // Cheapest integral two-colour construction dominating (k1, k2): any
        // (k1', k2')-enabling graph with k1' >= k1, k2' >= k2 is also
        // (k1, k2)-enabling. (K, K) with K = max(k1, k2) always qualifies.
        auto dominating_construction(uint64_t k1, uint64_t k2) -> std::pair<uint64_t, std::pair<uint64_t, uint64_t>>
        {
            uint64_t top = std::max(k1, k2);
            std::pair<uint64_t, std::pair<uint64_t, uint64_t>> best{ 4 * (top - 1), { top, top } };
            constexpr uint64_t scan_limit = 4000;
            if (top > scan_limit)
                return best;
            for (uint64_t a = k1; a <= top; ++a)
                for (uint64_t b = k2; b <= top; ++b) {
                    auto g = std::gcd(a - 1, b - 1);
                    if (is_perfect_square((a - 1) / g) && is_perfect_square((b - 1) / g)) {
                        auto n = two_colour_lower(a, b);
                        if (n < best.first)
                            best = { n, { a, b } };
                        break;
                    }
                }
            return best;
        }
    }

    auto two_colour_lower(uint64_t k1, uint64_t k2) -> uint64_t
    {
        if (k1 < 1 || k2 < 1)
            throw InvalidArgument{ "clique sizes must be at least 1" };
        if (k1 == 1)
            return k2;
        if (k2 == 1)
            return k1;
        uint64_t a = k1 - 1, b = k2 - 1;
        auto disc = checked_mul(4, checked_mul(a, b));
        auto root = isqrt(disc);
        return a + b + root + (root * root == disc ? 0 : 1);
    }

    auto feige_k_of_n(uint64_t n) -> uint64_t
    {
        if (n < 1)
            throw InvalidArgument{ "n must be positive" };
        return n / 4 + 1;
    }

    auto improved_inequality(std::span<const Rational> x) -> Rational
    {
        Rational sum = 0, pairs = 0;
        for (const auto & xi : x) {
            if (xi < 0 || xi > 1)
                throw InvalidArgument{ "improved_inequality entries must lie in [0, 1], got " + to_string(xi) };
            pairs += sum * xi;
            sum += xi;
        }
        return Rational{ pairs - sum + 1 };
    }

    auto f_eval(uint64_t m, uint64_t k, const Rational & x) -> Rational
    {
        Rational mm{ Integer{ m } }, kk{ Integer{ k } };
        return Rational{ kk * mm * x - mm * (mm - 1) / 2 * x * x };
    }

    auto f_max(uint64_t r, uint64_t k, const Rational & x) -> Rational
    {
        Rational best = f_eval(0, k, x);
        for (uint64_t m = 1; m <= r; ++m)
            best = std::max(best, f_eval(m, k, x));
        return best;
    }

    auto multicolour_lower(uint64_t r, uint64_t k) -> BoundReport
    {
        need_at_least_two(r, k);
        uint64_t trivial = r * (k - 1) + 1;
        auto f_at_two = integer_value(f_max(r, k, Rational{ 2 }));
        Integer closed = Integer{ 2 } * r * k - Integer{ 2 } * r * (r - 1);

        BoundReport report;
        report.lower = std::max(trivial, f_at_two);
        report.provenance = {
            { "trivial r(k-1)+1", trivial },
            { "f_max(r,k,2)", f_at_two },
            { "2rk-2r(r-1)", closed.get_si() }
        };
        return report;
    }

    auto multicolour_upper(uint64_t r, uint64_t k) -> uint64_t
    {
        need_at_least_two(r, k);
        auto blocks = checked_mul(2 * r, k - 1);
        if (r == k + 1 && is_prime(k))
            return std::min(blocks, k * k);
        return blocks;
    }

    auto two_colour_report(uint64_t k1, uint64_t k2) -> BoundReport
    {
        BoundReport report;
        report.lower = two_colour_lower(k1, k2);
        if (k1 == 1 || k2 == 1) {
            report.provenance.push_back({ "n(1,k) = k", report.lower });
            report.upper = report.lower;
        }
        else {
            report.provenance.push_back({ "(sqrt(k1-1)+sqrt(k2-1))^2", two_colour_surd(k1, k2) });
            report.provenance.push_back({ "ceiling", report.lower });
            auto [n, pair] = dominating_construction(k1, k2);
            report.upper = n;
            report.provenance.push_back({ "extremal construction at (" + to_string(pair.first) + "," + to_string(pair.second) + ")", n });
        }
        finish(report);
        return report;
    }

    auto multicolour_report(uint64_t r, uint64_t k) -> BoundReport
    {
        auto report = multicolour_lower(r, k);
        report.upper = multicolour_upper(r, k);
        report.provenance.push_back({ "block construction 2r(k-1)", checked_mul(2 * r, k - 1) });
        if (r == k + 1 && is_prime(k))
            report.provenance.push_back({ "prime slope construction p^2", k * k });
        finish(report);
        return report;
    }

    auto to_json(const BoundReport & report) -> json
    {
        json provenance = json::array();
        for (const auto & p : report.provenance)
            provenance.push_back({ { "formula", p.formula }, { "value", p.value } });
        json j{ { "lower", report.lower }, { "provenance", provenance } };
        j["upper"] = report.upper ? json(*report.upper) : json(nullptr);
        j["exact"] = report.exact ? json(*report.exact) : json(nullptr);
        j["open"] = ! report.exact.has_value();
        return j;
    }
}

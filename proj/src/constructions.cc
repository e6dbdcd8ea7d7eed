#include <enabling/constructions.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

using nlohmann::json;

namespace enabling
{
    namespace
    {
        auto prime_factors(uint64_t x) -> std::map<uint64_t, unsigned>
        {
            std::map<uint64_t, unsigned> result;
            for (uint64_t d = 2; d * d <= x; ++d)
                while (x % d == 0) {
                    ++result[d];
                    x /= d;
                }
            if (x > 1)
                ++result[x];
            return result;
        }

        auto checked_mul(uint64_t a, uint64_t b) -> uint64_t
        {
            uint64_t out;
            if (__builtin_mul_overflow(a, b, &out))
                throw InvalidArgument{ "parameters too large: arithmetic overflow" };
            return out;
        }
    }

    auto isqrt(uint64_t x) -> uint64_t
    {
        if (x < 2)
            return x;
        // Newton from above; monotone decreasing until it reaches floor(sqrt(x)).
        uint64_t r = uint64_t{ 1 } << ((64 - __builtin_clzll(x) + 1) / 2);
        while (true) {
            uint64_t next = (r + x / r) / 2;
            if (next >= r)
                return r;
            r = next;
        }
    }

    auto is_perfect_square(uint64_t x) -> bool
    {
        auto s = isqrt(x);
        return s * s == x;
    }

    auto is_prime(uint64_t p) -> bool
    {
        if (p < 2)
            return false;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    auto two_colour_surd(uint64_t k1, uint64_t k2) -> string
    {
        uint64_t a = k1 - 1, b = k2 - 1;
        auto fa = prime_factors(a), fb = prime_factors(b);
        for (auto [p, e] : fb)
            fa[p] += e;
        uint64_t square_root_part = 1, square_free = 1;
        for (auto [p, e] : fa) {
            for (unsigned i = 0; i < e / 2; ++i)
                square_root_part *= p;
            if (e % 2 == 1)
                square_free *= p;
        }
        auto coefficient = 2 * square_root_part;
        if (square_free == 1)
            return to_string(a + b + coefficient);
        return to_string(a + b) + " + " + to_string(coefficient) + "*sqrt(" + to_string(square_free) + ")";
    }

    auto two_colour_extremal_params(uint64_t k1, uint64_t k2) -> TwoColourExtremalParams
    {
        if (k1 < 2 || k2 < 2)
            throw InvalidArgument{ "two_colour_extremal needs k1, k2 >= 2" };
        TwoColourExtremalParams p{};
        p.k1 = k1;
        p.k2 = k2;
        p.g = std::gcd(k1 - 1, k2 - 1);
        auto qa = (k1 - 1) / p.g, qb = (k2 - 1) / p.g;
        if (! is_perfect_square(qa) || ! is_perfect_square(qb))
            throw NotIntegral{ "(sqrt(k1-1) + sqrt(k2-1))^2 = " + two_colour_surd(k1, k2)
                + " is not an integer for (k1, k2) = (" + to_string(k1) + ", " + to_string(k2) + ")" };
        p.a = isqrt(qa);
        p.b = isqrt(qb);
        p.n = checked_mul(p.g, checked_mul(p.a + p.b, p.a + p.b));
        return p;
    }

    auto p4_blowup(size_t n) -> EdgeColouredGraph
    {
        if (n < 4)
            throw InvalidArgument{ "p4_blowup needs n >= 4, got " + to_string(n) };
        // part[v] in 0..3; the first n mod 4 parts receive one extra vertex.
        vector<unsigned> part(n);
        size_t v = 0;
        for (unsigned p = 0; p < 4; ++p) {
            size_t size = n / 4 + (p < n % 4 ? 1 : 0);
            for (size_t i = 0; i < size; ++i)
                part[v++] = p;
        }
        vector<Colour> colours(pair_count(n));
        size_t idx = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = u + 1; w < n; ++w, ++idx) {
                auto pu = part[u], pw = part[w];
                bool red = (pu == pw) ? (pu == 1 || pu == 2) : (pw - pu == 1);
                colours[idx] = red ? 0 : 1;
            }
        return EdgeColouredGraph::build(n, 2, std::move(colours));
    }

    auto biregular_bipartite(size_t m1, size_t m2, size_t d1, size_t d2) -> vector<Edge>
    {
        if (m1 * d1 != m2 * d2)
            throw InvalidArgument{ "handshake violation: " + to_string(m1) + "*" + to_string(d1) + " != "
                + to_string(m2) + "*" + to_string(d2) };
        if (d1 > m2 || d2 > m1)
            throw InvalidArgument{ "degree exceeds the size of the opposite side" };
        vector<Edge> edges;
        edges.reserve(m1 * d1);
        for (size_t i = 0; i < m1; ++i) {
            auto first = edges.size();
            for (size_t s = 0; s < d1; ++s)
                edges.emplace_back(i, (i * d1 + s) % m2);
            std::sort(edges.begin() + first, edges.end());
        }
        return edges;
    }

    auto two_colour_extremal(uint64_t k1, uint64_t k2) -> EdgeColouredGraph
    {
        auto p = two_colour_extremal_params(k1, k2);
        size_t red = p.red_size(), blue = p.blue_size(), n = p.n;
        auto cross = biregular_bipartite(red, blue, p.g * p.a * p.b, p.g * p.a * p.a);

        vector<Colour> colours(pair_count(n), 1);
        for (Vertex u = 0; u < red; ++u)
            for (Vertex w = u + 1; w < red; ++w)
                colours[pair_index(n, u, w)] = 0;
        for (auto [l, r] : cross)
            colours[pair_index(n, l, red + r)] = 0;
        return EdgeColouredGraph::build(n, 2, std::move(colours));
    }

    auto multicolour_blocks(size_t r, size_t k) -> EdgeColouredGraph
    {
        if (r < 2 || k < 2)
            throw InvalidArgument{ "multicolour_blocks needs r, k >= 2" };
        size_t block = 2 * (k - 1), n = r * block;
        vector<Colour> colours(pair_count(n));
        size_t idx = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = u + 1; w < n; ++w, ++idx) {
                size_t bu = u / block, bw = w / block;
                if (bu == bw)
                    colours[idx] = bu;
                else {
                    size_t x = u % block, y = w % block;
                    colours[idx] = (y + block - x) % block < k - 1 ? bu : bw;
                }
            }
        return EdgeColouredGraph::build(n, r, std::move(colours));
    }

    auto prime_slope(uint64_t p) -> EdgeColouredGraph
    {
        if (! is_prime(p))
            throw InvalidArgument{ "prime_slope needs a prime, got " + to_string(p) };
        // inverse[d] * d == 1 mod p
        vector<uint64_t> inverse(p, 0);
        for (uint64_t d = 1; d < p; ++d)
            for (uint64_t e = 1; e < p; ++e)
                if (d * e % p == 1)
                    inverse[d] = e;

        size_t n = p * p;
        vector<Colour> colours(pair_count(n));
        size_t idx = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = u + 1; w < n; ++w, ++idx) {
                uint64_t x = u / p, y = u % p, z = w / p, t = w % p;
                if (y == t)
                    colours[idx] = p;
                else
                    colours[idx] = ((x + p - z) % p) * inverse[(y + p - t) % p] % p;
            }
        return EdgeColouredGraph::build(n, p + 1, std::move(colours));
    }

    auto construct(const string & family, const vector<uint64_t> & params) -> Construction
    {
        auto want = [&] (size_t count) {
            if (params.size() != count)
                throw InvalidArgument{ "construction '" + family + "' takes " + to_string(count) + " parameter(s), got "
                    + to_string(params.size()) };
        };

        if (family == "p4") {
            want(1);
            auto n = params[0];
            return { p4_blowup(n),
                { { "construction", "p4_blowup" }, { "params", { { "n", n } } },
                    { "label_map", "parts V1..V4 are consecutive label ranges; the first n mod 4 parts have one extra vertex" } } };
        }
        if (family == "extremal") {
            want(2);
            auto p = two_colour_extremal_params(params[0], params[1]);
            return { two_colour_extremal(params[0], params[1]),
                { { "construction", "two_colour_extremal" },
                    { "params", { { "k1", p.k1 }, { "k2", p.k2 }, { "g", p.g }, { "a", p.a }, { "b", p.b } } },
                    { "label_map", "vertices 0.." + to_string(p.red_size() - 1) + " form the red clique R, "
                        + to_string(p.red_size()) + ".." + to_string(p.n - 1) + " the blue clique B" } } };
        }
        if (family == "blocks") {
            want(2);
            auto r = params[0], k = params[1];
            return { multicolour_blocks(r, k),
                { { "construction", "multicolour_blocks" }, { "params", { { "r", r }, { "k", k } } },
                    { "label_map", "block V_i (colour i) holds labels i*" + to_string(2 * (k - 1)) + " onwards, "
                        + to_string(2 * (k - 1)) + " per block" } } };
        }
        if (family == "prime") {
            want(1);
            auto p = params[0];
            return { prime_slope(p),
                { { "construction", "prime_slope" }, { "params", { { "p", p } } },
                    { "label_map", "(x,y) in Z_p x Z_p is labelled x*p+y; colour i < p is slope i, colour p is slope infinity" } } };
        }
        throw InvalidArgument{ "unknown construction family '" + family + "' (expected p4, extremal, blocks or prime)" };
    }

    auto to_json(const Construction & c) -> json
    {
        auto j = to_json(c.graph);
        j["metadata"] = c.metadata;
        return j;
    }
}

#include <enabling/rational.hh>
#include <enabling/graph.hh>

using std::string;

using nlohmann::json;

namespace enabling
{
    auto make_rational(long num, long den) -> Rational
    {
        if (den == 0)
            throw InvalidArgument{ "zero denominator" };
        Rational q{ num, den };
        q.canonicalize();
        return q;
    }

    auto ceil(const Rational & q) -> Integer
    {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return r;
    }

    auto floor(const Rational & q) -> Integer
    {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return r;
    }

    auto to_string(const Rational & q) -> string
    {
        return q.get_str();
    }

    auto to_json(const Rational & q) -> json
    {
        return json{ { "num", q.get_num().get_str() }, { "den", q.get_den().get_str() } };
    }

    auto rational_from_json(const json & j) -> Rational
    {
        if (! j.is_object() || ! j.contains("num") || ! j.contains("den") || ! j["num"].is_string() || ! j["den"].is_string())
            throw InvalidArgument{ "rational must be {\"num\": string, \"den\": string}" };
        Integer num, den;
        if (num.set_str(j["num"].get<string>(), 10) != 0 || den.set_str(j["den"].get<string>(), 10) != 0)
            throw InvalidArgument{ "rational has a non-decimal numerator or denominator" };
        if (den <= 0)
            throw InvalidArgument{ "rational denominator must be positive" };
        Rational q{ num, den };
        q.canonicalize();
        if (q.get_den() != den)
            throw InvalidArgument{ "rational " + j["num"].get<string>() + "/" + j["den"].get<string>() + " is not reduced" };
        return q;
    }
}

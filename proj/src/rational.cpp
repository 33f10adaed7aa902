#include "wps/rational.hpp"

#include <stdexcept>

namespace wps {

Rational make_rational(long long num, long long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

}  // namespace wps

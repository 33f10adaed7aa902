#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wps {

using Rational = mpq_class;

Rational make_rational(long long num, long long den = 1);
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int(const Rational&, long long k) { return make_rational(k); }

}  // namespace wps

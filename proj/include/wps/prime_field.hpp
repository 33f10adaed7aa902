#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wps {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

bool is_prime_u64(std::uint64_t n);

// Element of Z/p for an odd prime p < 2^32.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t p, long long v) : p_(p)
    {
        long long r = v % static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }
    static Fp raw(std::uint64_t p, std::uint64_t v) { Fp x; x.p_ = p; x.v_ = v % p; return x; }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const { check(o); std::uint64_t s = v_ + o.v_; return raw(p_, s >= p_ ? s - p_ : s); }
    Fp operator-(const Fp& o) const { check(o); return raw(p_, v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
    Fp operator*(const Fp& o) const { check(o); return raw(p_, (v_ * o.v_) % p_); }
    Fp operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    Fp pow(std::uint64_t e) const
    {
        Fp r = raw(p_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    Fp inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("division by zero in F_p");
        return pow(p_ - 2);
    }

private:
    void check(const Fp& o) const
    {
        if (p_ != o.p_)
            throw std::logic_error("mixed prime fields");
    }
    std::uint64_t p_ = 0, v_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp zero_like(const Fp& x) { return Fp::raw(x.modulus(), 0); }
inline Fp one_like(const Fp& x) { return Fp::raw(x.modulus(), 1); }
inline Fp from_int(const Fp& x, long long k) { return Fp(x.modulus(), k); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }
inline BigInt field_order(const Fp& x) { return BigInt(x.modulus()); }

}  // namespace wps

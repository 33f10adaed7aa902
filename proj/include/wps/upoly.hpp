#pragma once

#include "wps/prime_field.hpp"
#include "wps/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wps {

// Extension-field helpers are found by qualified lookup inside the templates below.
template <class F> class Ext;
template <class F> bool is_zero(const Ext<F>& x);
template <class F> Ext<F> zero_like(const Ext<F>& x);
template <class F> Ext<F> one_like(const Ext<F>& x);
template <class F> Ext<F> from_int(const Ext<F>& x, long long k);
template <class F> std::string to_string(const Ext<F>& x);

// Dense univariate polynomial over a field, coefficients low to high.
template <class F>
class UPoly {
public:
    explicit UPoly(F one) : one_(std::move(one)) {}
    UPoly(F one, std::vector<F> coeffs) : c_(std::move(coeffs)), one_(std::move(one)) { trim(); }

    static UPoly constant(const F& c) { return UPoly(one_like(c), {c}); }
    static UPoly monomial(const F& c, int deg)
    {
        std::vector<F> v(deg + 1, zero_like(c));
        v[deg] = c;
        return UPoly(one_like(c), std::move(v));
    }
    static UPoly x(const F& one) { return monomial(one, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_like(one_); }
    const F& lead() const { return c_.back(); }
    const F& one() const { return one_; }
    const std::vector<F>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const
    {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_like(one_));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UPoly(one_, std::move(r));
    }
    UPoly operator-() const
    {
        std::vector<F> r;
        for (const auto& a : c_) r.push_back(-a);
        return UPoly(one_, std::move(r));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const
    {
        if (is_zero() || o.is_zero()) return UPoly(one_);
        std::vector<F> r(c_.size() + o.c_.size() - 1, zero_like(one_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (wps::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UPoly(one_, std::move(r));
    }
    UPoly scaled(const F& s) const
    {
        std::vector<F> r;
        for (const auto& a : c_) r.push_back(a * s);
        return UPoly(one_, std::move(r));
    }
    bool operator==(const UPoly& o) const
    {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const
    {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<F> rem = c_;
        int dd = d.degree();
        if (degree() < dd) return {UPoly(one_), *this};
        std::vector<F> q(degree() - dd + 1, zero_like(one_));
        F inv = one_ / d.lead();
        for (int i = degree(); i >= dd; --i) {
            if (wps::is_zero(rem[i])) continue;
            F f = rem[i] * inv;
            q[i - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - f * d.c_[j];
        }
        rem.resize(dd);
        return {UPoly(one_, std::move(q)), UPoly(one_, std::move(rem))};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }

    UPoly monic() const { return is_zero() ? *this : scaled(one_ / lead()); }
    UPoly derivative() const
    {
        std::vector<F> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * from_int(one_, static_cast<long long>(i)));
        return UPoly(one_, std::move(r));
    }

    F operator()(const F& x) const
    {
        F r = zero_like(one_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    // Evaluate at a point of a larger ring G, given an embedding F -> G.
    template <class G, class Embed>
    G evaluate_in(const G& x, Embed embed) const
    {
        G r = zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + embed(*it);
        return r;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (wps::is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + wps::to_string(c_[i]) + ")";
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && wps::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
    F one_;
};

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b)
{
    while (!b.is_zero()) {
        UPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
template <class F>
std::pair<UPoly<F>, UPoly<F>> inverse_mod(const UPoly<F>& a, const UPoly<F>& m)
{
    UPoly<F> r0 = m, r1 = a % m;
    UPoly<F> s0(m.one()), s1 = UPoly<F>::constant(m.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly<F> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    F inv = m.one() / r0.lead();
    return {r0.scaled(inv), (s0 % m).scaled(inv)};
}

template <class F>
UPoly<F> powmod(UPoly<F> base, BigInt e, const UPoly<F>& m)
{
    UPoly<F> r = UPoly<F>::constant(m.one()) % m;
    base = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace wps

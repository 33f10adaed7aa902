#pragma once

#include "wps/upoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wps {

template <class F>
struct ExtContext {
    UPoly<F> modulus;  // monic
    std::string generator = "g";
};

// Element of F[X]/(m). Arithmetic is only a field when m is irreducible;
// inverse() throws when the element shares a factor with m.
template <class F>
class Ext {
public:
    using Context = std::shared_ptr<const ExtContext<F>>;

    Ext() = default;
    Ext(Context ctx, const F& c) : ctx_(std::move(ctx)), c_(deg(), zero_like(c)) { c_[0] = c; }
    static Ext from_poly(Context ctx, const UPoly<F>& p)
    {
        UPoly<F> r = p % ctx->modulus;
        Ext e(ctx, zero_like(ctx->modulus.one()));
        for (int i = 0; i <= r.degree(); ++i) e.c_[i] = r.coeff(i);
        return e;
    }
    static Ext generator(Context ctx)
    {
        return from_poly(ctx, UPoly<F>::x(ctx->modulus.one()));
    }
    static Context make_context(UPoly<F> modulus, std::string gen = "g")
    {
        if (modulus.degree() < 1) throw std::invalid_argument("extension modulus must have positive degree");
        return std::make_shared<const ExtContext<F>>(ExtContext<F>{modulus.monic(), std::move(gen)});
    }

    const Context& context() const { return ctx_; }
    int deg() const { return ctx_->modulus.degree(); }
    const std::vector<F>& coeffs() const { return c_; }
    UPoly<F> as_poly() const { return UPoly<F>(ctx_->modulus.one(), c_); }
    bool in_base() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!wps::is_zero(c_[i])) return false;
        return true;
    }
    const F& base_part() const { return c_[0]; }

    Ext operator+(const Ext& o) const
    {
        Ext r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        return r;
    }
    Ext operator-(const Ext& o) const
    {
        Ext r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
        return r;
    }
    Ext operator-() const
    {
        Ext r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Ext operator*(const Ext& o) const { return from_poly(ctx_, as_poly() * o.as_poly()); }
    Ext operator/(const Ext& o) const { return *this * o.inverse(); }
    Ext& operator+=(const Ext& o) { return *this = *this + o; }
    Ext& operator-=(const Ext& o) { return *this = *this - o; }
    Ext& operator*=(const Ext& o) { return *this = *this * o; }
    bool operator==(const Ext& o) const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool is_zero() const
    {
        for (const auto& a : c_)
            if (!wps::is_zero(a)) return false;
        return true;
    }
    Ext inverse() const
    {
        auto [g, s] = inverse_mod(as_poly(), ctx_->modulus);
        if (g.degree() != 0) throw std::domain_error("element not invertible in extension");
        return from_poly(ctx_, s);
    }
    Ext embed(const F& c) const { return Ext(ctx_, c); }

private:
    Context ctx_;
    std::vector<F> c_;
};

template <class F> bool is_zero(const Ext<F>& x) { return x.is_zero(); }
template <class F> Ext<F> zero_like(const Ext<F>& x) { return Ext<F>(x.context(), zero_like(x.context()->modulus.one())); }
template <class F> Ext<F> one_like(const Ext<F>& x) { return Ext<F>(x.context(), x.context()->modulus.one()); }
template <class F> Ext<F> from_int(const Ext<F>& x, long long k) { return Ext<F>(x.context(), from_int(x.context()->modulus.one(), k)); }

template <class F>
std::string to_string(const Ext<F>& x)
{
    std::string s;
    const auto& c = x.coeffs();
    const std::string& g = x.context()->generator;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (is_zero(c[i])) continue;
        if (!s.empty()) s += " + ";
        std::string a = to_string(c[i]);
        if (i == 0) s += a;
        else s += "(" + a + ")*" + g + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
}

template <class F>
BigInt field_order(const Ext<F>& x)
{
    BigInt q = field_order(x.context()->modulus.one());
    BigInt r = 1;
    for (int i = 0; i < x.deg(); ++i) r *= q;
    return r;
}

template <class F>
F power(F base, BigInt e)
{
    F r = one_like(base);
    while (e > 0) {
        if ((e & 1) != 0) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace wps

#pragma once

#include "wps/upoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace wps {

// Multivariate polynomial over a field, terms keyed by exponent vector.
template <class F>
class SparsePoly {
public:
    using Exponents = std::vector<int>;

    SparsePoly(int nvars, F one) : nvars_(nvars), one_(std::move(one)) {}

    static SparsePoly constant(int nvars, const F& c)
    {
        SparsePoly p(nvars, one_like(c));
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static SparsePoly variable(int nvars, int i, const F& one)
    {
        SparsePoly p(nvars, one);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.add_term(e, one);
        return p;
    }

    int nvars() const { return nvars_; }
    const F& one() const { return one_; }
    const std::map<Exponents, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const F& c)
    {
        if (wps::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (wps::is_zero(it->second)) terms_.erase(it);
    }
    F coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_like(one_) : it->second;
    }

    SparsePoly operator+(const SparsePoly& o) const
    {
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SparsePoly operator-() const
    {
        SparsePoly r(nvars_, one_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }
    SparsePoly operator*(const SparsePoly& o) const
    {
        SparsePoly r(nvars_, one_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    SparsePoly scaled(const F& s) const
    {
        SparsePoly r(nvars_, one_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }
    SparsePoly pow(int k) const
    {
        SparsePoly r = constant(nvars_, one_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    bool operator==(const SparsePoly& o) const
    {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [e, c] : terms_) {
            auto it = o.terms_.find(e);
            if (it == o.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    int degree_in(int var) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    // Replace variable `var` by the polynomial `value`.
    SparsePoly substitute(int var, const SparsePoly& value) const
    {
        SparsePoly r(nvars_, one_);
        std::vector<SparsePoly> powers{constant(nvars_, one_)};
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
            Exponents rest = e;
            rest[var] = 0;
            SparsePoly t(nvars_, one_);
            t.add_term(rest, c);
            r = r + t * powers[e[var]];
        }
        return r;
    }

    template <class G, class Map>
    SparsePoly<G> map_coefficients(const G& one, Map fn) const
    {
        SparsePoly<G> r(nvars_, one);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    // Evaluate at a point whose coordinates live in G, given an embedding F -> G.
    template <class G, class Embed>
    G evaluate(const std::vector<G>& point, Embed embed) const
    {
        G r = zero_like(point.at(0));
        for (const auto& [e, c] : terms_) {
            G t = embed(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            r = r + t;
        }
        return r;
    }

    UPoly<F> to_univariate(int var = 0) const
    {
        std::vector<F> c(std::max(degree_in(var) + 1, 0), zero_like(one_));
        for (const auto& [e, a] : terms_) {
            for (int i = 0; i < nvars_; ++i)
                if (i != var && e[i] != 0) throw std::logic_error("polynomial is not univariate");
            c[e[var]] = c[e[var]] + a;
        }
        return UPoly<F>(one_, std::move(c));
    }
    static SparsePoly from_univariate(const UPoly<F>& p, int nvars = 1, int var = 0)
    {
        SparsePoly r(nvars, p.one());
        for (int i = 0; i <= p.degree(); ++i) {
            Exponents e(nvars, 0);
            e[var] = i;
            r.add_term(e, p.coeff(i));
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + wps::to_string(it->second) + ")";
            for (int i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                s += "*" + names.at(i);
                if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

private:
    int nvars_;
    F one_;
    std::map<Exponents, F> terms_;
};

}  // namespace wps

#include "wps/algebra.hpp"
#include "wps/graded.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace wps {

namespace {

struct Stratum {
    std::vector<int> inside;   // coordinate indices in I
    std::vector<int> outside;  // the rest
    std::vector<int> wI;
};

Stratum make_stratum(const WeightVector& w, unsigned mask)
{
    Stratum s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask >> i & 1) {
            s.inside.push_back(static_cast<int>(i));
            s.wI.push_back(w[i]);
        } else {
            s.outside.push_back(static_cast<int>(i));
        }
    }
    return s;
}

// Indices j outside I such that some monomial in x_I has degree deg - w_j.
std::vector<int> external_set(const WeightVector& w, const Stratum& s, int deg)
{
    std::vector<int> e;
    for (int j : s.outside)
        if (has_monomial(s.wI, deg - w[j])) e.push_back(j);
    return e;
}

std::size_t union_size(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> u = a;
    for (int x : b)
        if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
    return u.size();
}

// Exact test of one stratum with |I| <= 2 for a random member over F_p:
// true when no point of the stratum is a singular point of the affine cone.
bool stratum_smooth_random(const WeightVector& w, const DegreeSpec& d, unsigned mask, std::uint64_t p,
                           std::mt19937_64& rng)
{
    const Stratum st = make_stratum(w, mask);
    const std::size_t n = w.size();
    const Fp one(p, 1), zero(p, 0);
    auto rnd = [&]() {
        Fp c = Fp::raw(p, rng() % p);
        return is_zero(c) ? one : c;
    };

    if (st.inside.size() == 1) {
        const int i = st.inside[0];
        std::vector<std::vector<Fp>> jac;
        for (int deg : d) {
            if (deg % w[i] == 0) return true;  // pure power with nonzero coefficient
            std::vector<Fp> row(n, zero);
            for (int k : st.outside) {
                int rest = deg - w[k];
                if (rest >= 0 && rest % w[i] == 0) row[k] = rnd();
            }
            jac.push_back(row);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!is_zero(jac[0][a] * jac[1][b] - jac[0][b] * jac[1][a])) return true;
        return false;
    }

    // I = {i, j}: set x_i = 1, x_j = s.
    const int i = st.inside[0], j = st.inside[1];
    std::vector<UPoly<Fp>> P, Di, Dj;
    std::vector<std::vector<UPoly<Fp>>> G(d.size(), std::vector<UPoly<Fp>>(n, UPoly<Fp>(one)));
    for (std::size_t mu = 0; mu < d.size(); ++mu) {
        std::vector<Fp> pc, ic, jc;
        auto put = [&](std::vector<Fp>& v, int k, const Fp& c) {
            if (k < 0) return;
            if (static_cast<int>(v.size()) <= k) v.resize(k + 1, zero);
            v[k] = v[k] + c;
        };
        for (const auto& m : enumerate_monomials(st.wI, d[mu])) {
            int a = m.exponents[0], b = m.exponents[1];
            Fp c = rnd();
            put(pc, b, c);
            put(ic, b, c * Fp(p, a));
            put(jc, b - 1, c * Fp(p, b));
        }
        P.emplace_back(one, pc);
        Di.emplace_back(one, ic);
        Dj.emplace_back(one, jc);
        for (int k : st.outside) {
            std::vector<Fp> gc;
            for (const auto& m : enumerate_monomials(st.wI, d[mu] - w[k])) put(gc, m.exponents[1], rnd());
            G[mu][k] = UPoly<Fp>(one, gc);
        }
        G[mu][i] = Di.back();
        G[mu][j] = Dj.back();
    }
    UPoly<Fp> g(one);
    for (const auto& f : P) g = gcd(g, f);
    for (std::size_t a = 0; a < n && g.degree() != 0; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g = gcd(g, G[0][a] * G[1][b] - G[0][b] * G[1][a]);
    if (g.is_zero()) return false;
    const UPoly<Fp> s = UPoly<Fp>::x(one);
    while (g.degree() > 0 && is_zero(g.coeff(0))) g = g / s;
    return g.degree() == 0;
}

bool stratum_smooth_any_seed(const WeightVector& w, const DegreeSpec& d, unsigned mask, std::uint64_t p, int seeds)
{
    for (int seed = 0; seed < seeds; ++seed) {
        std::mt19937_64 rng(0x5eed0000ULL + seed * 7919ULL + mask);
        if (stratum_smooth_random(w, d, mask, p, rng)) return true;
    }
    return false;
}

constexpr int kSeeds = 8;

}  // namespace

QuasiSmoothResult quasi_smooth_report(const WeightVector& w, const DegreeSpec& d, std::uint64_t prime)
{
    if (w.size() != d.size() + 3)
        throw std::invalid_argument("surface needs codimension equal to number of degrees");
    const std::uint64_t p = prime ? prime : kDefaultPrime;
    const std::size_t n = w.size();
    QuasiSmoothResult res;
    std::vector<unsigned> small_strata;

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const Stratum st = make_stratum(w, mask);
        const std::size_t k = st.inside.size();
        bool ok = false;
        if (d.size() == 1) {
            ok = has_monomial(st.wI, d[0]) || external_set(w, st, d[0]).size() >= k;
        } else {
            bool pure0 = has_monomial(st.wI, d[0]), pure1 = has_monomial(st.wI, d[1]);
            auto e0 = external_set(w, st, d[0]), e1 = external_set(w, st, d[1]);
            if (pure0 && pure1) {
                ok = true;
            } else if (pure0 || pure1) {
                int a = pure0 ? 0 : 1, b = 1 - a;
                const auto& eb = pure0 ? e1 : e0;
                ok = eb.size() + 1 >= k || count_monomials(st.wI, d[a], 2) == 1;
                for (int j : eb)
                    if (count_monomials(st.wI, d[b] - w[j], 2) == 1) ok = true;
                small_strata.push_back(mask);
            } else {
                ok = e0.size() >= k && e1.size() >= k && union_size(e0, e1) >= k + 1;
                small_strata.push_back(mask);
            }
            if (!ok && k <= 2 && stratum_smooth_any_seed(w, d, mask, p, kSeeds)) {
                ok = true;
                res.randomized_strata.push_back(mask);
            }
        }
        if (!ok) {
            res.failing_subset = mask;
            res.reason = "singular along coordinate stratum " + subset_string(mask, n);
            return res;
        }
    }

    if (d.size() == 2) {
        std::erase_if(small_strata, [](unsigned m) { return std::popcount(m) > 2; });
        for (int seed = 0; seed < kSeeds; ++seed) {
            ++res.seeds_tried;
            std::mt19937_64 rng(0xfa11bac0ULL + seed);
            bool all = true;
            for (unsigned m : small_strata)
                if (!stratum_smooth_random(w, d, m, p, rng)) {
                    all = false;
                    break;
                }
            if (all) {
                res.quasi_smooth = true;
                return res;
            }
        }
        res.reason = "randomized Jacobian test failed on all seeds";
        return res;
    }
    res.quasi_smooth = true;
    return res;
}

}  // namespace wps

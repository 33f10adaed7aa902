#include "wps/algebra.hpp"

#include <algorithm>
#include <set>

namespace wps {

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

template <class F>
std::optional<F> tonelli_shanks(const F& a, std::mt19937_64& rng)
{
    if (is_zero(a)) return a;
    const F one = one_like(a);
    BigInt q = field_order(a);
    BigInt half = (q - 1) / 2;
    if (!(power(a, half) == one)) return std::nullopt;
    BigInt t = q - 1;
    int s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    F z = a;
    do {
        z = random_like(a, rng);
    } while (is_zero(z) || power(z, half) == one);
    int m = s;
    F c = power(z, t), tt = power(a, t), r = power(a, (t + 1) / 2);
    while (!(tt == one)) {
        int i = 0;
        F probe = tt;
        while (!(probe == one)) {
            probe = probe * probe;
            ++i;
        }
        F b = c;
        for (int k = 0; k < m - i - 1; ++k) b = b * b;
        m = i;
        c = b * b;
        tt = tt * c;
        r = r * b;
    }
    return r;
}

std::optional<mpz_class> isqrt_exact(const mpz_class& n)
{
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

std::optional<Rational> sqrt_of(const Rational& a)
{
    auto n = isqrt_exact(a.get_num());
    auto d = isqrt_exact(a.get_den());
    if (!n || !d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

std::optional<Fp> sqrt_of(const Fp& a)
{
    std::mt19937_64 rng(a.value() + 17);
    return tonelli_shanks(a, rng);
}

std::optional<GF> sqrt_of(const GF& a)
{
    std::mt19937_64 rng(29);
    return tonelli_shanks(a, rng);
}

std::optional<QExt> sqrt_of(const QExt& a)
{
    const auto& m = a.context()->modulus;
    if (m.degree() == 1) {
        auto r = sqrt_of(a.base_part());
        if (!r) return std::nullopt;
        return a.embed(*r);
    }
    if (m.degree() != 2) throw std::invalid_argument("square roots only in degree <= 2 extensions of Q");
    // g^2 + b g + c = 0, so g = (-b + sqrt(D))/2 with D = b^2 - 4c.
    Rational b = m.coeff(1), c = m.coeff(0);
    Rational D = b * b - 4 * c;
    Rational a0 = a.coeffs()[0], a1 = a.coeffs()[1];
    // a0 + a1 g = A + B sqrt(D)
    Rational A = a0 - a1 * b / 2, B = a1 / 2;
    std::optional<std::pair<Rational, Rational>> xy;
    if (sgn(B) == 0) {
        if (auto x = sqrt_of(A)) xy = std::make_pair(*x, Rational(0));
        else if (auto y = sqrt_of(Rational(A / D))) xy = std::make_pair(Rational(0), *y);
    } else {
        auto nrm = sqrt_of(Rational(A * A - D * B * B));
        if (nrm) {
            for (int sign : {1, -1}) {
                auto x = sqrt_of(Rational((A + sign * *nrm) / 2));
                if (x && sgn(*x) != 0) {
                    xy = std::make_pair(*x, Rational(B / (2 * *x)));
                    break;
                }
            }
        }
    }
    if (!xy) return std::nullopt;
    // x + y sqrt(D) = (x + y b) + 2y g
    auto [x, y] = *xy;
    QExt r = QExt::from_poly(a.context(), UPoly<Rational>(Rational(1), {Rational(x + y * b), Rational(2 * y)}));
    if (!(r * r == a)) return std::nullopt;
    return r;
}

UPoly<Fp> squarefree_part(const UPoly<Fp>& f)
{
    if (f.degree() <= 0) return f.monic();
    UPoly<Fp> g = gcd(f, f.derivative());
    return (f / g).monic();
}

std::vector<UPoly<Fp>> distinct_degree_factorization(const UPoly<Fp>& f0)
{
    std::vector<UPoly<Fp>> out;
    UPoly<Fp> f = squarefree_part(f0);
    const Fp one = f0.one();
    const UPoly<Fp> x = UPoly<Fp>::x(one);
    UPoly<Fp> h = x;
    int k = 0;
    while (f.degree() >= 2 * (k + 1)) {
        ++k;
        h = powmod(h, BigInt(one.modulus()), f);
        UPoly<Fp> g = gcd(h - x, f);
        out.push_back(g);
        if (g.degree() > 0) {
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) {
        out.resize(f.degree(), UPoly<Fp>::constant(one));
        out[f.degree() - 1] = f.monic();
    }
    return out;
}

UPoly<Fp> equal_degree_factor(const UPoly<Fp>& g0, int k, std::mt19937_64& rng)
{
    UPoly<Fp> g = g0.monic();
    const Fp one = g.one();
    BigInt q = 1;
    for (int i = 0; i < k; ++i) q *= one.modulus();
    BigInt e = (q - 1) / 2;
    while (g.degree() > k) {
        std::vector<Fp> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(random_like(one, rng));
        UPoly<Fp> h(one, c);
        if (h.degree() < 1) continue;
        UPoly<Fp> w = powmod(h, e, g) - UPoly<Fp>::constant(one);
        UPoly<Fp> d = gcd(w, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            UPoly<Fp> other = (g / d).monic();
            g = d.degree() <= other.degree() ? d : other;
        }
    }
    return g;
}

UPoly<Fp> smallest_irreducible_factor(const UPoly<Fp>& f, std::uint64_t seed)
{
    if (f.degree() < 1) throw std::invalid_argument("constant polynomial has no irreducible factor");
    auto ddf = distinct_degree_factorization(f);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < ddf.size(); ++i)
        if (ddf[i].degree() > 0) return equal_degree_factor(ddf[i], static_cast<int>(i) + 1, rng);
    throw std::logic_error("distinct-degree factorization found no factor");
}

std::vector<Fp> roots_in_base(const UPoly<Fp>& f, std::uint64_t seed)
{
    std::vector<Fp> roots;
    if (f.degree() < 1) return roots;
    auto ddf = distinct_degree_factorization(f);
    if (ddf.empty() || ddf[0].degree() < 1) return roots;
    std::mt19937_64 rng(seed);
    std::vector<UPoly<Fp>> work{ddf[0]};
    while (!work.empty()) {
        UPoly<Fp> g = work.back();
        work.pop_back();
        if (g.degree() == 1) {
            roots.push_back(-g.coeff(0) / g.lead());
            continue;
        }
        UPoly<Fp> d = equal_degree_factor(g, 1, rng);
        work.push_back(d);
        work.push_back((g / d).monic());
    }
    std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    return roots;
}

namespace {

std::optional<std::vector<mpz_class>> divisors(mpz_class n)
{
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    if (n > mpz_class("1000000000000")) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) fac.emplace_back(d, e);
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const UPoly<Rational>& f)
{
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : f.coeffs()) z.push_back(mpz_class(c * l));
    std::size_t low = 0;
    while (z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 == z.size()) return roots;
    auto dp = divisors(z[low]);
    auto dq = divisors(z.back());
    if (!dp || !dq) return std::nullopt;
    std::set<Rational> seen;
    for (const auto& p : *dp)
        for (const auto& q : *dq)
            for (int s : {1, -1}) {
                Rational cand(s * p, q);
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                if (sgn(f(cand)) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace wps

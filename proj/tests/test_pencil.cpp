#include "wps/pencil.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace wps;

namespace {

const Fp kOneP(kDefaultPrime, 1);

template <class F>
ConicForm<F> make_conic(F zz, F tt, F uu, F zt, F zu, F tu)
{
    return {zz, tt, uu, zt, zu, tu};
}

ConicForm<Rational> qconic(long long zz, long long tt, long long uu, long long zt, long long zu, long long tu)
{
    return make_conic<Rational>(make_rational(zz), make_rational(tt), make_rational(uu), make_rational(zt),
                                make_rational(zu), make_rational(tu));
}

// Fiber conic computed straight from the surface equations: substitute the
// fiber and the chart, then read off the coefficients with u = 1.
template <class F>
ConicForm<F> conic_by_substitution(const CiCoefficients<F>& s, const F& alpha)
{
    auto [F1, F2] = s.equations();
    const F one = one_like(s.a1);
    auto cst = [&](const F& v) { return SparsePoly<F>::constant(5, v); };
    SparsePoly<F> p = s.normalized
                          ? (F2 - F1.scaled(alpha)).substitute(kX, cst(one)).substitute(kY, cst(alpha))
                          : (F1 - F2.scaled(alpha)).substitute(kX, cst(alpha)).substitute(kY, cst(one));
    CHECK(p.degree_in(kW) <= 0);
    auto co = [&](int z, int t) { return p.coefficient({0, 0, z, t, 0}); };
    return {co(2, 0), co(0, 2), co(0, 0), co(1, 1), co(1, 0), co(0, 1)};
}

template <class F>
bool same_conic(const ConicForm<F>& a, const ConicForm<F>& b)
{
    return a.zz == b.zz && a.tt == b.tt && a.uu == b.uu && a.zt == b.zt && a.zu == b.zu && a.tu == b.tu;
}

CiCoefficients<Rational> normalized_constant(int n, long long c)
{
    CiCoefficients<Rational> s;
    s.n = n;
    s.normalized = true;
    s.a1 = 1;
    s.b1 = 0;
    s.a2 = 0;
    s.b2 = 1;
    s.g_n.assign(n + 1, Rational(0));
    s.gh_n.assign(n + 1, Rational(0));
    s.g_2n.assign(2 * n + 1, Rational(0));
    s.g_2n[2 * n] = make_rational(c);  // c x^{2n}, so g_2n(1, a) = c
    return s;
}

template <class E>
std::set<std::string> line_set(const Factorization<E>& f)
{
    return {f.first.to_string(), f.second.to_string()};
}

}  // namespace

TEST_CASE("sample_surface invariants")
{
    auto q = sample_surface_q(2, 0, false);
    CHECK_FALSE(is_zero(q.a1));
    CHECK_FALSE(is_zero(q.b2));
    CHECK_FALSE(is_zero(q.a1 * q.b2 - q.b1 * q.a2));
    CHECK(q.f_2n.size() == 5);

    auto p = sample_surface_p(3, 7, kDefaultPrime, false);
    CHECK_FALSE(is_zero(p.a1));
    CHECK_FALSE(is_zero(p.b2));
    CHECK_FALSE(is_zero(p.a1 * p.b2 - p.b1 * p.a2));
    CHECK(p.g_2n.size() == 7);

    auto again = sample_surface_p(3, 7, kDefaultPrime, false);
    CHECK(again.g_2n == p.g_2n);

    CHECK_THROWS_WITH(sample_surface_p(2, 0, 3, false), doctest::Contains("field too small"));
    CHECK_NOTHROW(sample_surface_p(2, 0, 5, false));
    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK_NOTHROW(sample_surface_p(1, seed, 5, false).validate());
}

TEST_CASE("normalized equations are wx + zt and wy + z^2 + t^2 + ...")
{
    auto s = sample_surface_p(2, 3, kDefaultPrime, true);
    auto [F1, F2] = s.equations();
    SparsePoly<Fp> expect(5, kOneP);
    expect.add_term({1, 0, 0, 0, 1}, kOneP);
    expect.add_term({0, 0, 1, 1, 0}, kOneP);
    CHECK(F1 == expect);
    CHECK(F2.coefficient({0, 1, 0, 0, 1}) == kOneP);
    CHECK(F2.coefficient({0, 0, 2, 0, 0}) == kOneP);
    CHECK(F2.coefficient({0, 0, 0, 2, 0}) == kOneP);
    CHECK(is_zero(F2.coefficient({0, 0, 1, 1, 0})));
}

TEST_CASE("restrict_to_fiber agrees with substitution into the equations")
{
    for (int n = 1; n <= 4; ++n)
        for (bool normalized : {false, true}) {
            auto q = sample_surface_q(n, 11 + n, normalized);
            auto p = sample_surface_p(n, 11 + n, kDefaultPrime, normalized);
            for (long long a : {-3, 0, 2, 5}) {
                Rational qa = make_rational(a);
                CHECK(same_conic(restrict_to_fiber(q, qa, [](const Rational& c) { return c; }),
                                 conic_by_substitution(q, qa)));
                Fp pa(kDefaultPrime, a * 1000003);
                CHECK(same_conic(restrict_to_fiber(p, pa, [](const Fp& c) { return c; }),
                                 conic_by_substitution(p, pa)));
            }
        }
}

TEST_CASE("restrict_to_fiber examples")
{
    // Normalized: z^2 - a zt + t^2 + g_n(1,a) zu + gh_n(1,a) tu + g_2n(1,a) u^2.
    auto s = sample_surface_q(2, 5, true);
    auto c = restrict_symbolic(s);
    const UPoly<Rational> a = UPoly<Rational>::x(Rational(1));
    CHECK(c.zz == UPoly<Rational>::constant(Rational(1)));
    CHECK(c.tt == UPoly<Rational>::constant(Rational(1)));
    CHECK(c.zt == -a);
    CHECK(c.zu == form_at_y(s.g_n, Rational(1)));
    CHECK(c.uu(Rational(3)) == s.g_2n[0] * 81 + s.g_2n[1] * 27 + s.g_2n[2] * 9 + s.g_2n[3] * 3 + s.g_2n[4]);

    // All auxiliary forms zero and alpha = 0: z(a1 z + b1 t).
    auto g = sample_surface_q(3, 2, false);
    for (auto* v : {&g.f_n, &g.fh_n, &g.f_2n, &g.g_n, &g.gh_n, &g.g_2n})
        for (auto& x : *v) x = 0;
    auto c0 = restrict_to_fiber(g, Rational(0), [](const Rational& x) { return x; });
    CHECK(c0.zz == g.a1);
    CHECK(c0.zt == g.b1);
    CHECK(is_zero(c0.tt));
    CHECK(is_zero(c0.uu));
    CHECK(is_zero(c0.zu));
    CHECK(is_zero(c0.tu));

    // Symbolic coefficients have degree <= 2n+1.
    for (int n = 1; n <= 6; ++n) {
        auto sc = restrict_symbolic(sample_surface_p(n, n, kDefaultPrime, false));
        for (const auto* p : {&sc.zz, &sc.tt, &sc.uu, &sc.zt, &sc.zu, &sc.tu}) CHECK(p->degree() <= 2 * n + 1);
        CHECK(sc.uu.degree() == 2 * n + 1);
    }
}

TEST_CASE("gram_matrix halves the mixed coefficients")
{
    auto g = gram_matrix(qconic(1, 1, 0, -3, 0, 0));
    CHECK(g[0][1] == make_rational(-3, 2));
    CHECK(g[1][0] == make_rational(-3, 2));
    CHECK(g[2][2] == 0);
    auto zt = gram_matrix(qconic(0, 0, 0, 1, 0, 0));
    CHECK(zt[0][1] == make_rational(1, 2));
    CHECK(zt[0][0] == 0);
    CHECK(det3(zt) == 0);
    auto full = gram_matrix(qconic(1, 1, 7, -2, 4, 6));
    Matrix3<Rational> expect{{{1, -1, 2}, {-1, 1, 3}, {2, 3, 7}}};
    CHECK(full == expect);
    auto raw = unhalved_matrix(qconic(1, 1, 7, -2, 4, 6));
    CHECK(raw[0][1] == -2);
    CHECK(raw[1][2] == 6);

    // v^T G v reproduces the form.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = [&] { return make_rational(static_cast<long long>(rng() % 21) - 10, 1 + rng() % 4); };
        auto c = make_conic<Rational>(r(), r(), r(), r(), r(), r());
        auto m = gram_matrix(c);
        Rational v[3] = {r(), r(), r()};
        Rational q = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += v[i] * m[i][j] * v[j];
        Rational direct = c.zz * v[0] * v[0] + c.tt * v[1] * v[1] + c.uu * v[2] * v[2] + c.zt * v[0] * v[1] +
                          c.zu * v[0] * v[2] + c.tu * v[1] * v[2];
        CHECK(q == direct);
    }
}

TEST_CASE("reducibility_discriminant")
{
    // Normalized, zero auxiliaries, g_2n = c: c (1 - a^2/4), roots +-2 for every n.
    for (int n = 1; n <= 6; ++n)
        for (long long c : {-1LL, 3LL}) {
            auto D = reducibility_discriminant(normalized_constant(n, c));
            CHECK(D == UPoly<Rational>(Rational(1), {make_rational(c), Rational(0), make_rational(-c, 4)}));
            auto roots = rational_roots(D);
            REQUIRE(roots);
            CHECK(*roots == std::vector<Rational>{-2, 2});
        }
    CHECK(emit_terms(reducibility_discriminant(normalized_constant(2, -1))) == "-1 0\n1/4 2\n");

    // Seeded F_p discriminants: nonzero with degree <= 2n+2 in the normalized chart.
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto D = reducibility_discriminant(sample_surface_p(n, seed, kDefaultPrime, true));
            CHECK_FALSE(D.is_zero());
            CHECK(D.degree() <= 2 * n + 2);
            CHECK(D.degree() == 2 * n + 2);
        }

    // In the general chart the bound is 2n+3 and is attained for random coefficients.
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto D = reducibility_discriminant(sample_surface_p(n, seed, kDefaultPrime, false));
            CHECK(D.degree() == 2 * n + 3);
        }

    // A pencil whose conic is zt for every alpha has an identically zero determinant.
    CiCoefficients<Rational> zt;
    zt.n = 1;
    zt.a1 = 0;
    zt.b1 = 1;
    zt.a2 = 0;
    zt.b2 = 0;
    zt.f_n = zt.fh_n = zt.g_n = zt.gh_n = {0, 0};
    zt.f_2n = zt.g_2n = {0, 0, 0};
    CHECK_THROWS_WITH(reducibility_discriminant(zt), doctest::Contains("degenerate pencil"));
}

TEST_CASE("determinant verdict is scaling invariant")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = [&] { return make_rational(static_cast<long long>(rng() % 7) - 3); };
        auto c = make_conic<Rational>(r(), r(), r(), r(), r(), r());
        Rational lambda = make_rational(1 + rng() % 5, 1 + rng() % 3);
        auto scaled = c.map<Rational>([&](const Rational& x) { return Rational(x * lambda); });
        Rational d = det3(gram_matrix(c)), ds = det3(gram_matrix(scaled));
        CHECK(is_zero(d) == is_zero(ds));
        CHECK(ds == d * lambda * lambda * lambda);
    }
}

TEST_CASE("factor_reducible examples")
{
    auto zt = factor_reducible(qconic(0, 0, 0, 1, 0, 0));
    CHECK_FALSE(zt.extended);
    CHECK(line_set(zt) == std::set<std::string>{"(1)*z + (0)*t + (0)*u", "(0)*z + (1)*t + (0)*u"});
    CHECK(product_matches(qconic(0, 0, 0, 1, 0, 0), zt));

    // (z - t)^2 - u^2 = (z - t - u)(z - t + u)
    auto c = qconic(1, 1, -1, -2, 0, 0);
    auto f = factor_reducible(c);
    CHECK_FALSE(f.extended);
    CHECK(line_set(f) == std::set<std::string>{"(1)*z + (-1)*t + (-1)*u", "(1)*z + (-1)*t + (1)*u"});
    CHECK(product_matches(c, f));
    CHECK_FALSE(proportional(f.first, f.second));

    // The same conic from the normalized pencil at the root a = 2.
    auto s = normalized_constant(3, -1);
    auto at2 = restrict_to_fiber(s, Rational(2), [](const Rational& x) { return x; });
    CHECK(same_conic(at2, c));

    // (z - t)^2 + u^2 needs sqrt(-1).
    auto c2 = qconic(1, 1, 1, -2, 0, 0);
    auto f2 = factor_reducible(c2);
    CHECK(f2.extended);
    CHECK(f2.field->modulus.degree() == 2);
    CHECK(product_matches(c2, f2));
    CHECK_FALSE(proportional(f2.first, f2.second));

    // Zero diagonal with zu = 0: 2 t (z/2 + u/2) style.
    auto c3 = qconic(0, 0, 0, 3, 0, 5);
    auto f3 = factor_reducible(c3);
    CHECK(product_matches(c3, f3));

    CHECK_THROWS_WITH(factor_reducible(qconic(1, 1, 0, -2, 0, 0)), doctest::Contains("proportional factors"));
    CHECK_THROWS_WITH(factor_reducible(qconic(1, 1, 1, 0, 0, 0)), doctest::Contains("irreducible conic"));
}

TEST_CASE("factor_reducible recovers random products of lines")
{
    std::mt19937_64 rng(31);
    auto r = [&] { return random_like(kOneP, rng); };
    int checked = 0;
    while (checked < 100) {
        LinearForm<Fp> a{r(), r(), r()}, b{r(), r(), r()};
        if (rng() % 3 == 0) a.z = zero_like(kOneP);
        if (rng() % 4 == 0) b.t = zero_like(kOneP);
        if (proportional(a, b)) continue;
        ConicForm<Fp> c{a.z * b.z, a.t * b.t, a.u * b.u, a.z * b.t + a.t * b.z, a.z * b.u + a.u * b.z,
                        a.t * b.u + a.u * b.t};
        auto f = factor_reducible(c);
        CHECK(product_matches(c, f));
        CHECK_FALSE(f.extended);
        auto lift = [&](const LinearForm<Fp>& l) {
            return LinearForm<GF>{GF(f.field, l.z), GF(f.field, l.t), GF(f.field, l.u)};
        };
        CHECK(((proportional(f.first, lift(a)) && proportional(f.second, lift(b))) ||
               (proportional(f.first, lift(b)) && proportional(f.second, lift(a)))));
        ++checked;
    }
}

TEST_CASE("verify_LR over F_p in both charts")
{
    for (bool normalized : {true, false})
        for (int n = 1; n <= 4; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto run = verify_LR({n, seed, FieldSpec{}, normalized});
                INFO("n=" << n << " seed=" << seed << " normalized=" << normalized);
                CHECK(run.report.all_pass());
                CHECK(run.degree_bound == discriminant_degree_bound(n, normalized));
                CHECK(run.discriminant_degree <= run.degree_bound);
                CHECK(run.report.payload["lines"].size() == 2);
            }
}

TEST_CASE("n = 1: the two lines meet the chart in one point, by resultant")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto s = sample_surface_p(1, seed, kDefaultPrime, false);
        auto D = reducibility_discriminant(s);
        auto h = smallest_irreducible_factor(D, seed + 1);
        auto kctx = GF::make_context(h, "alpha");
        GF alpha = GF::generator(kctx);
        auto conic = restrict_to_fiber(s, alpha, [&](const Fp& c) { return GF(kctx, c); });
        auto f = factor_reducible(conic);
        // Res_t(l1, l2) on u = 1 is linear in z with leading coefficient k1 l2 - k2 l1.
        const auto& l1 = f.first;
        const auto& l2 = f.second;
        auto lead = l2.t * l1.z - l1.t * l2.z;
        CHECK_FALSE(is_zero(lead));
        auto z0 = -(l2.t * l1.u - l1.t * l2.u) / lead;
        // Back-substitute into whichever line has t; then w from the second equation.
        auto t0 = is_zero(l1.t) ? -(l2.z * z0 + l2.u) / l2.t : -(l1.z * z0 + l1.u) / l1.t;
        using L = Ext<GF>;
        auto [F1, F2] = s.equations();
        auto toL = [&](const Fp& c) { return L(f.field, GF(kctx, c)); };
        L one = toL(kOneP);
        std::vector<L> pt{L(f.field, alpha), one, z0, t0, zero_like(one)};
        pt[kW] = -F2.evaluate(pt, toL);
        CHECK(is_zero(F1.evaluate(pt, toL)));
        CHECK(is_zero(F2.evaluate(pt, toL)));
    }
}

TEST_CASE("verify_LR over Q falls back to F_p when needed")
{
    auto run = verify_LR({2, 0, FieldSpec::parse("q"), false});
    CHECK(run.report.all_pass());
    if (run.fell_back_to_prime) CHECK(run.report.payload["notes"].size() == 1);
    CHECK(FieldSpec::parse("p:101").p == 101);
    CHECK_THROWS(FieldSpec::parse("p:100"));
    CHECK_THROWS(FieldSpec::parse("r"));
    CHECK_THROWS(verify_LR({2, 0, FieldSpec::parse("p:3"), false}));
    auto small = verify_LR({1, 4, FieldSpec::parse("p:10007"), true});
    CHECK(small.report.all_pass());
}

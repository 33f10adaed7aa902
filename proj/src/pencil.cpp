#include "wps/pencil.hpp"

#include <random>

namespace wps {

using nlohmann::json;

namespace {

constexpr int kSampleRetries = 64;

template <class F, class Draw>
CiCoefficients<F> sample_with(int n, bool normalized, const F& one, Draw draw)
{
    if (n < 1) throw std::invalid_argument("pencil needs n >= 1");
    auto form = [&](int d) {
        std::vector<F> v;
        for (int i = 0; i <= d; ++i) v.push_back(draw());
        return v;
    };
    const F zero = zero_like(one);
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        CiCoefficients<F> s;
        s.n = n;
        s.normalized = normalized;
        if (normalized) {
            s.a1 = one;
            s.b1 = zero;
            s.a2 = zero;
            s.b2 = one;
        } else {
            s.a1 = draw();
            s.b1 = draw();
            s.a2 = draw();
            s.b2 = draw();
            s.f_n = form(n);
            s.fh_n = form(n);
            s.f_2n = form(2 * n);
        }
        s.g_n = form(n);
        s.gh_n = form(n);
        s.g_2n = form(2 * n);
        try {
            s.validate();
            return s;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("could not sample coefficients satisfying the invariants");
}

Fp reduce(const Rational& q, std::uint64_t p)
{
    auto red = [p](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return Fp::raw(p, r.get_ui());
    };
    return red(q.get_num()) / red(q.get_den());
}

template <class E>
json matrix_json(const Matrix3<E>& m)
{
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_string(e));
        j.push_back(r);
    }
    return j;
}

template <class E>
json conic_json(const ConicForm<E>& c)
{
    return {{"zz", to_string(c.zz)}, {"tt", to_string(c.tt)}, {"uu", to_string(c.uu)},
            {"zt", to_string(c.zt)}, {"zu", to_string(c.zu)}, {"tu", to_string(c.tu)}};
}

template <class F>
json conic_json(const ConicForm<UPoly<F>>& c, const std::string& var)
{
    return {{"zz", c.zz.to_string(var)}, {"tt", c.tt.to_string(var)}, {"uu", c.uu.to_string(var)},
            {"zt", c.zt.to_string(var)}, {"zu", c.zu.to_string(var)}, {"tu", c.tu.to_string(var)}};
}

// Steps after a root field K = F[X]/(h) with D(alpha) = 0 has been chosen.
template <class F>
void finish_at_root(const CiCoefficients<F>& s, const UPoly<F>& D, const typename Ext<F>::Context& kctx, Report& rep)
{
    using K = Ext<F>;
    using L = Ext<K>;
    const K alpha = K::generator(kctx);
    auto toK = [&](const F& c) { return K(kctx, c); };
    const std::string n_loc = "n=" + std::to_string(s.n);

    rep.add(check_true("root.vanishes", n_loc + ": discriminant vanishes at the chosen parameter",
                       is_zero(D.evaluate_in(alpha, toK))));

    ConicForm<K> conic = restrict_to_fiber(s, alpha, toK);
    Matrix3<K> g = gram_matrix(conic);
    rep.add(check_true("conic.singular", n_loc + ": Gram determinant of the fiber conic is zero", is_zero(det3(g))));
    rep.add(check_equal("conic.rank", n_loc + ": Gram rank of the fiber conic", 2, rank3(g)));
    rep.payload["conic"] = conic_json(conic);
    rep.payload["gram"] = matrix_json(g);
    rep.payload["unhalved_matrix_singular_at_root"] = is_zero(det3(unhalved_matrix(conic)));

    Factorization<K> fac = factor_reducible(conic);
    const auto& lctx = fac.field;
    auto toL = [&](const F& c) { return L(lctx, toK(c)); };
    rep.payload["lines"] = {fac.first.to_string(), fac.second.to_string()};
    rep.payload["line_field"] = {{"extended", fac.extended},
                                 {"modulus", lctx->modulus.to_string("s")}};
    rep.payload["scalar"] = to_string(fac.scalar);

    rep.add(check_true("factor.product", n_loc + ": product of the two lines reproduces the conic",
                       product_matches(conic, fac)));
    rep.add(check_true("factor.distinct", n_loc + ": the two lines are not proportional",
                       !proportional(fac.first, fac.second)));

    // Restrict the surface equations to the fiber directly and compare with the lines.
    auto [F1, F2] = s.equations();
    auto E1 = F1.template map_coefficients<L>(L(lctx, toK(one_like(s.a1))), toL);
    auto E2 = F2.template map_coefficients<L>(E1.one(), toL);
    const L one = E1.one(), zero = zero_like(one);
    const L a = L(lctx, alpha);
    auto cst = [&](const L& v) { return SparsePoly<L>::constant(5, v); };
    SparsePoly<L> on_fiber(5, one);
    if (s.normalized) {
        on_fiber = (E2 - E1.scaled(a)).substitute(kX, cst(one)).substitute(kY, cst(a));
    } else {
        on_fiber = (E1 - E2.scaled(a)).substitute(kX, cst(a)).substitute(kY, cst(one));
    }
    auto affine_line = [&](const LinearForm<L>& l) {
        SparsePoly<L> p(5, one);
        p.add_term({0, 0, 1, 0, 0}, l.z);
        p.add_term({0, 0, 0, 1, 0}, l.t);
        p.add_term({0, 0, 0, 0, 0}, l.u);
        return p;
    };
    SparsePoly<L> lines = (affine_line(fac.first) * affine_line(fac.second)).scaled(fac.scalar);
    rep.add(check_true("surface.fiber", n_loc + ": fiber of the surface equations equals the product of the lines",
                       on_fiber == lines));

    // The two lines meet where both vanish. On the chart (u = 1) solve the 2x2 system;
    // at u = 0 the same invertibility forces z = t = 0, leaving only p_w.
    const auto& l1 = fac.first;
    const auto& l2 = fac.second;
    L det = l1.z * l2.t - l1.t * l2.z;
    int points = 0;
    bool chart_ok = false;
    if (!is_zero(det)) {
        L z0 = (-l1.u * l2.t + l2.u * l1.t) / det;
        L t0 = (-l1.z * l2.u + l2.z * l1.u) / det;
        std::vector<L> pt(5, zero);
        pt[kX] = s.normalized ? one : a;
        pt[kY] = s.normalized ? a : one;
        pt[kZ] = z0;
        pt[kT] = t0;
        // w from the equation whose w-coefficient is 1 on this chart.
        const SparsePoly<L>& lin = s.normalized ? E1 : E2;
        pt[kW] = -lin.evaluate(pt, [](const L& c) { return c; });
        auto id = [](const L& c) { return c; };
        chart_ok = is_zero(E1.evaluate(pt, id)) && is_zero(E2.evaluate(pt, id)) &&
                   is_zero(l1.z * z0 + l1.t * t0 + l1.u) && is_zero(l2.z * z0 + l2.t * t0 + l2.u);
        rep.payload["chart_point"] = {to_string(pt[kX]), to_string(pt[kY]), to_string(z0), to_string(t0),
                                      to_string(pt[kW])};
        if (chart_ok) ++points;
    }
    rep.add(check_true("incidence.chart", n_loc + ": the lines meet in one point of the affine chart on the surface",
                       chart_ok));
    std::vector<L> pw(5, zero);
    pw[kW] = one;
    auto id = [](const L& c) { return c; };
    bool pw_ok = !is_zero(det) && is_zero(E1.evaluate(pw, id)) && is_zero(E2.evaluate(pw, id));
    if (pw_ok) ++points;
    rep.add(check_true("incidence.p_w", n_loc + ": p_w lies on the surface and on both curves", pw_ok));
    rep.add(check_equal("incidence.count", n_loc + ": intersection points of the two curves", 2, points));
}

template <class F>
UPoly<F> discriminant_step(const CiCoefficients<F>& s, PencilRun& run)
{
    UPoly<F> D = reducibility_discriminant(s);
    const std::string var = s.normalized ? "a" : "alpha";
    run.discriminant_degree = D.degree();
    run.degree_bound = discriminant_degree_bound(s.n, s.normalized);
    run.discriminant_terms = emit_terms(D);
    run.report.payload["symbolic_conic"] = conic_json(restrict_symbolic(s), var);
    run.report.payload["discriminant"] = {{"variable", var},
                                          {"degree", D.degree()},
                                          {"bound", run.degree_bound},
                                          {"polynomial", D.to_string(var)}};
    const UPoly<F> unhalved = det3(unhalved_matrix(restrict_symbolic(s)));
    run.report.payload["unhalved_determinant"] = unhalved.to_string(var);
    const std::string loc = "n=" + std::to_string(s.n) + (s.normalized ? ", normalized chart" : ", general chart");
    run.report.add(check_true("discriminant.nonzero", loc + ": discriminant is a nonzero polynomial", !D.is_zero()));
    run.report.add(check_true("discriminant.degree", loc + ": discriminant degree <= " + std::to_string(run.degree_bound),
                              D.degree() <= run.degree_bound, std::to_string(D.degree())));
    return D;
}

void run_prime(const CiCoefficients<Fp>& s, std::uint64_t seed, PencilRun& run)
{
    UPoly<Fp> D = discriminant_step(s, run);
    UPoly<Fp> h = smallest_irreducible_factor(D, seed + 1);
    run.report.payload["root"] = {{"minimal_polynomial", h.to_string("X")}, {"degree", h.degree()}};
    finish_at_root(s, D, GF::make_context(h, "alpha"), run.report);
}

}  // namespace

CiCoefficients<Rational> sample_surface_q(int n, std::uint64_t seed, bool normalized)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    return sample_with<Rational>(n, normalized, Rational(1), [&] { return Rational(dist(rng)); });
}

CiCoefficients<Fp> sample_surface_p(int n, std::uint64_t seed, std::uint64_t p, bool normalized)
{
    if (p < 5) throw std::invalid_argument("field too small: need p >= 5");
    if (!is_prime_u64(p) || p > 0xffffffffULL) throw std::invalid_argument("modulus must be a prime below 2^32");
    std::mt19937_64 rng(seed);
    const Fp one(p, 1);
    return sample_with<Fp>(n, normalized, one, [&] { return random_like(one, rng); });
}

CiCoefficients<Fp> reduce_mod(const CiCoefficients<Rational>& s, std::uint64_t p)
{
    auto r = [p](const Rational& q) { return reduce(q, p); };
    auto rv = [&](const std::vector<Rational>& v) {
        std::vector<Fp> out;
        for (const auto& q : v) out.push_back(r(q));
        return out;
    };
    CiCoefficients<Fp> t{s.n, s.normalized, r(s.a1), r(s.b1), r(s.a2), r(s.b2),
                         rv(s.f_n), rv(s.fh_n), rv(s.f_2n), rv(s.g_n), rv(s.gh_n), rv(s.g_2n)};
    t.validate();
    return t;
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    FieldSpec f;
    if (text == "q" || text == "Q") {
        f.rational = true;
        return f;
    }
    if (text.rfind("p:", 0) != 0) throw std::invalid_argument("field must be q or p:<prime>, got '" + text + "'");
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
        p = std::stoull(text.substr(2), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad prime in '" + text + "'");
    }
    if (used != text.size() - 2 || !is_prime_u64(p)) throw std::invalid_argument("not a prime: '" + text + "'");
    if (p > 0xffffffffULL) throw std::invalid_argument("prime must be below 2^32");
    f.p = p;
    return f;
}

std::string FieldSpec::to_string() const
{
    return rational ? "q" : "p:" + std::to_string(p);
}

int discriminant_degree_bound(int n, bool normalized)
{
    return normalized ? 2 * n + 2 : 2 * n + 3;
}

PencilRun verify_LR(const PencilOptions& opt)
{
    if (opt.n < 1) throw std::invalid_argument("pencil needs n >= 1");
    PencilRun run;
    run.report.command = "pencil";
    run.report.args = {{"n", opt.n}, {"seed", opt.seed}, {"field", opt.field.to_string()},
                       {"normalized", opt.normalized}};
    run.report.payload["notes"] = json::array();
    if (!opt.field.rational) {
        run_prime(sample_surface_p(opt.n, opt.seed, opt.field.p, opt.normalized), opt.seed, run);
        return run;
    }

    CiCoefficients<Rational> s = sample_surface_q(opt.n, opt.seed, opt.normalized);
    UPoly<Rational> D = discriminant_step(s, run);
    auto roots = rational_roots(D);
    if (roots && !roots->empty()) {
        const Rational& r = roots->front();
        run.report.payload["root"] = {{"minimal_polynomial", "X - (" + to_string(r) + ")"}, {"degree", 1}};
        finish_at_root(s, D, QExt::make_context(UPoly<Rational>(Rational(1), {Rational(-r), Rational(1)}), "alpha"),
                       run.report);
        return run;
    }
    if (D.degree() == 2) {
        run.report.payload["root"] = {{"minimal_polynomial", D.monic().to_string("X")}, {"degree", 2}};
        finish_at_root(s, D, QExt::make_context(D, "alpha"), run.report);
        return run;
    }
    // No root in Q or a quadratic extension: continue with the same surface over F_p.
    run.fell_back_to_prime = true;
    run.report.payload["notes"].push_back("discriminant has no root over Q or a quadratic field; reduced mod " +
                                          std::to_string(kDefaultPrime));
    PencilRun inner;
    run_prime(reduce_mod(s, kDefaultPrime), opt.seed, inner);
    run.report.append(inner.report.checks);
    for (const auto& key : {"root", "conic", "gram", "unhalved_matrix_singular_at_root", "lines", "line_field",
                            "scalar", "chart_point"})
        if (inner.report.payload.contains(key)) run.report.payload[key] = inner.report.payload[key];
    return run;
}

}  // namespace wps

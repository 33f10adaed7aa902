#pragma once

#include "wps/algebra.hpp"
#include "wps/report.hpp"
#include "wps/sparse_poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wps {

// Variable order of the surface equations in P(1,1,n,n,2n-1).
enum PencilVar { kX = 0, kY = 1, kZ = 2, kT = 3, kW = 4 };

// Binary form of degree d stored as c[i] = coefficient of x^i y^(d-i).
template <class F>
UPoly<F> form_at_x(const std::vector<F>& c, const F& one)
{
    return UPoly<F>(one, c);  // f(alpha, 1)
}
template <class F>
UPoly<F> form_at_y(const std::vector<F>& c, const F& one)
{
    return UPoly<F>(one, std::vector<F>(c.rbegin(), c.rend()));  // f(1, a)
}

// S_{2n,2n}. General mode:
//   wx + z(a1 z + b1 t) + f_n z + fh_n t + f_2n = 0
//   wy + t(a2 z + b2 t) + g_n z + gh_n t + g_2n = 0
// Normalized mode (the reducible member moved to x = 0):
//   wx + zt = 0
//   wy + z^2 + t^2 + g_n z + gh_n t + g_2n = 0
template <class F>
struct CiCoefficients {
    int n = 1;
    bool normalized = false;
    F a1, b1, a2, b2;  // (1, 0, 0, 1) when normalized
    std::vector<F> f_n, fh_n, f_2n, g_n, gh_n, g_2n;  // f_n, fh_n, f_2n unused when normalized

    void validate() const
    {
        if (n < 1) throw std::invalid_argument("pencil needs n >= 1");
        auto len = [](const std::vector<F>& v, int d, const char* name) {
            if (static_cast<int>(v.size()) != d + 1) throw std::invalid_argument(std::string("wrong length for ") + name);
        };
        len(g_n, n, "g_n");
        len(gh_n, n, "gh_n");
        len(g_2n, 2 * n, "g_2n");
        if (normalized) return;
        len(f_n, n, "f_n");
        len(fh_n, n, "fh_n");
        len(f_2n, 2 * n, "f_2n");
        if (is_zero(a1)) throw std::invalid_argument("a1 must be nonzero");
        if (is_zero(b2)) throw std::invalid_argument("b2 must be nonzero");
        if (is_zero(a1 * b2 - b1 * a2)) throw std::invalid_argument("a1 z + b1 t and a2 z + b2 t are proportional");
    }

    std::array<SparsePoly<F>, 2> equations() const
    {
        const F o = one_like(a1);
        auto var = [&](int i) { return SparsePoly<F>::variable(5, i, o); };
        auto form = [&](const std::vector<F>& c) {
            SparsePoly<F> p(5, o);
            const int d = static_cast<int>(c.size()) - 1;
            for (int i = 0; i <= d; ++i) p.add_term({i, d - i, 0, 0, 0}, c[i]);
            return p;
        };
        auto X = var(kX), Y = var(kY), Z = var(kZ), T = var(kT), W = var(kW);
        if (normalized) {
            return {W * X + Z * T, W * Y + Z * Z + T * T + form(g_n) * Z + form(gh_n) * T + form(g_2n)};
        }
        auto c = [&](const F& v) { return SparsePoly<F>::constant(5, v); };
        return {W * X + Z * (c(a1) * Z + c(b1) * T) + form(f_n) * Z + form(fh_n) * T + form(f_2n),
                W * Y + T * (c(a2) * Z + c(b2) * T) + form(g_n) * Z + form(gh_n) * T + form(g_2n)};
    }
};

// Deterministic sample of a general (or normalized) member. Rationals draw
// small integers; F_p draws uniformly. Throws when p < 5.
CiCoefficients<Rational> sample_surface_q(int n, std::uint64_t seed, bool normalized);
CiCoefficients<Fp> sample_surface_p(int n, std::uint64_t seed, std::uint64_t p, bool normalized);
CiCoefficients<Fp> reduce_mod(const CiCoefficients<Rational>& s, std::uint64_t p);

// Quadratic form zz z^2 + tt t^2 + uu u^2 + zt zt + zu zu + tu tu, u standing for y^n (or x^n).
template <class C>
struct ConicForm {
    C zz, tt, uu, zt, zu, tu;

    template <class D, class Map>
    ConicForm<D> map(Map fn) const
    {
        return {fn(zz), fn(tt), fn(uu), fn(zt), fn(zu), fn(tu)};
    }
};

// Conic of the fiber with coefficients as polynomials in the pencil parameter:
// general mode cuts x = alpha y and returns F1 - alpha F2 on y = 1;
// normalized mode cuts y = a x and returns F2 - a F1 on x = 1.
template <class F>
ConicForm<UPoly<F>> restrict_symbolic(const CiCoefficients<F>& s)
{
    const F o = one_like(s.a1);
    const UPoly<F> X = UPoly<F>::x(o);
    auto c = [&](const F& v) { return UPoly<F>::constant(v); };
    if (s.normalized) {
        return {c(o), c(o), form_at_y(s.g_2n, o), -X, form_at_y(s.g_n, o), form_at_y(s.gh_n, o)};
    }
    return {c(s.a1),
            -(X * c(s.b2)),
            form_at_x(s.f_2n, o) - X * form_at_x(s.g_2n, o),
            c(s.b1) - X * c(s.a2),
            form_at_x(s.f_n, o) - X * form_at_x(s.g_n, o),
            form_at_x(s.fh_n, o) - X * form_at_x(s.gh_n, o)};
}

// Conic at a concrete parameter value in a field E containing F.
template <class F, class E, class Embed>
ConicForm<E> restrict_to_fiber(const CiCoefficients<F>& s, const E& alpha, Embed embed)
{
    return restrict_symbolic(s).template map<E>([&](const UPoly<F>& p) { return p.evaluate_in(alpha, embed); });
}

template <class C>
using Matrix3 = std::array<std::array<C, 3>, 3>;

template <class F>
UPoly<F> halve(const UPoly<F>& p)
{
    return p.scaled(p.one() / from_int(p.one(), 2));
}
template <class E>
E halve(const E& e)
{
    return e / from_int(e, 2);
}

// Symmetric Gram matrix in the basis (z, t, u), off-diagonals halved.
template <class C>
Matrix3<C> gram_matrix(const ConicForm<C>& c)
{
    C a = halve(c.zt), b = halve(c.zu), d = halve(c.tu);
    return {{{c.zz, a, b}, {a, c.tt, d}, {b, d, c.uu}}};
}

// The same matrix with unhalved off-diagonals, kept for comparison.
template <class C>
Matrix3<C> unhalved_matrix(const ConicForm<C>& c)
{
    return {{{c.zz, c.zt, c.zu}, {c.zt, c.tt, c.tu}, {c.zu, c.tu, c.uu}}};
}

template <class C>
C det3(const Matrix3<C>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class E>
int rank3(const Matrix3<E>& m)
{
    if (!is_zero(det3(m))) return 3;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = k + 1; l < 3; ++l)
                    if (!is_zero(m[i][k] * m[j][l] - m[i][l] * m[j][k])) return 2;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!is_zero(e)) return 1;
    return 0;
}

// Determinant of the symbolic Gram matrix; throws "degenerate pencil" when it vanishes identically.
template <class F>
UPoly<F> reducibility_discriminant(const CiCoefficients<F>& s)
{
    UPoly<F> d = det3(gram_matrix(restrict_symbolic(s)));
    if (d.is_zero()) throw std::domain_error("degenerate pencil: discriminant vanishes identically");
    return d;
}

// k z + l t + m u over a field E.
template <class E>
struct LinearForm {
    E z, t, u;
    std::string to_string() const
    {
        return "(" + wps::to_string(z) + ")*z + (" + wps::to_string(t) + ")*t + (" + wps::to_string(u) + ")*u";
    }
};

// conic = scalar * first * second, the lines living in E or E(sqrt d).
template <class E>
struct Factorization {
    typename Ext<E>::Context field;
    bool extended = false;
    Ext<E> scalar;
    LinearForm<Ext<E>> first, second;
};

namespace detail {

template <class E>
Ext<E> lift(const typename Ext<E>::Context& ctx, const E& e)
{
    return Ext<E>(ctx, e);
}

// Divide by the first nonzero coefficient in the order z, t, u.
template <class E>
E normalize_line(LinearForm<E>& l)
{
    for (const E* c : {&l.z, &l.t, &l.u})
        if (!is_zero(*c)) {
            E lead = *c;
            E inv = one_like(lead) / lead;
            l = {l.z * inv, l.t * inv, l.u * inv};
            return lead;
        }
    throw std::logic_error("zero linear form");
}

}  // namespace detail

template <class E>
Factorization<E> factor_reducible(const ConicForm<E>& c)
{
    Matrix3<E> g = gram_matrix(c);
    const int r = rank3(g);
    if (r == 3) throw std::domain_error("irreducible conic");
    if (r < 2) throw std::domain_error("proportional factors: input not quasi-smooth");

    const E zero = zero_like(c.zz), one = one_like(c.zz);
    Factorization<E> out;
    std::array<E, 3> first{zero, zero, zero}, second{zero, zero, zero};
    E scalar = one;
    std::optional<E> root;  // s with s^2 = radicand, when E needs no extension
    E radicand = zero;
    bool needs_sqrt = false;

    int pivot = -1;
    for (int i = 0; i < 3 && pivot < 0; ++i)
        if (!is_zero(g[i][i])) pivot = i;

    std::array<E, 3> ell{zero, zero, zero}, m{zero, zero, zero};
    if (pivot >= 0) {
        // Q = c ell^2 + e m^2 with ell monic in the pivot variable.
        const E cp = g[pivot][pivot];
        for (int j = 0; j < 3; ++j) ell[j] = g[pivot][j] / cp;
        int j = (pivot + 1) % 3, k = (pivot + 2) % 3;
        if (j > k) std::swap(j, k);
        auto rest = [&](int a, int b) -> E { return g[a][b] - g[pivot][a] * g[pivot][b] / cp; };
        E e = zero;
        if (!is_zero(rest(j, j))) {
            e = rest(j, j);
            m[j] = one;
            m[k] = rest(j, k) / e;
        } else {
            e = rest(k, k);
            m[k] = one;
        }
        scalar = cp;
        radicand = -e / cp;
        needs_sqrt = true;
        root = sqrt_of(radicand);
    } else {
        // Zero diagonal: one off-diagonal entry vanishes and Q = 2 v_i (g_ij v_j + g_ik v_k).
        int i = -1;
        for (int a = 0; a < 3 && i < 0; ++a) {
            int j = (a + 1) % 3, k = (a + 2) % 3;
            if (is_zero(g[j][k])) i = a;
        }
        if (i < 0) throw std::logic_error("rank 2 conic without a vanishing off-diagonal entry");
        first[i] = one;
        for (int j = 0; j < 3; ++j)
            if (j != i) second[j] = g[i][j];
        scalar = from_int(one, 2);
    }

    UPoly<E> modulus(one);
    if (needs_sqrt && !root) modulus = UPoly<E>(one, {-radicand, zero, one});
    else if (needs_sqrt) modulus = UPoly<E>(one, {-*root, one});
    else modulus = UPoly<E>(one, {zero, one});
    out.field = Ext<E>::make_context(modulus, "s");
    out.extended = needs_sqrt && !root;
    auto L = [&](const E& e) { return detail::lift<E>(out.field, e); };

    LinearForm<Ext<E>> l1, l2;
    if (needs_sqrt) {
        Ext<E> s = root ? L(*root) : Ext<E>::generator(out.field);
        l1 = {L(ell[0]) - s * L(m[0]), L(ell[1]) - s * L(m[1]), L(ell[2]) - s * L(m[2])};
        l2 = {L(ell[0]) + s * L(m[0]), L(ell[1]) + s * L(m[1]), L(ell[2]) + s * L(m[2])};
    } else {
        l1 = {L(first[0]), L(first[1]), L(first[2])};
        l2 = {L(second[0]), L(second[1]), L(second[2])};
    }
    Ext<E> sc = L(scalar);
    sc = sc * detail::normalize_line(l1);
    sc = sc * detail::normalize_line(l2);
    out.scalar = sc;
    out.first = l1;
    out.second = l2;
    return out;
}

template <class E>
SparsePoly<E> conic_poly(const ConicForm<E>& c)
{
    SparsePoly<E> p(3, one_like(c.zz));
    p.add_term({2, 0, 0}, c.zz);
    p.add_term({0, 2, 0}, c.tt);
    p.add_term({0, 0, 2}, c.uu);
    p.add_term({1, 1, 0}, c.zt);
    p.add_term({1, 0, 1}, c.zu);
    p.add_term({0, 1, 1}, c.tu);
    return p;
}

template <class E>
SparsePoly<E> line_poly(const LinearForm<E>& l)
{
    SparsePoly<E> p(3, one_like(l.z));
    p.add_term({1, 0, 0}, l.z);
    p.add_term({0, 1, 0}, l.t);
    p.add_term({0, 0, 1}, l.u);
    return p;
}

// Exact term-map comparison of conic and scalar * first * second.
template <class E>
bool product_matches(const ConicForm<E>& c, const Factorization<E>& f)
{
    auto lifted = conic_poly(c.template map<Ext<E>>([&](const E& e) { return detail::lift<E>(f.field, e); }));
    auto prod = line_poly(f.first) * line_poly(f.second);
    return lifted == prod.scaled(f.scalar);
}

template <class E>
bool proportional(const LinearForm<E>& a, const LinearForm<E>& b)
{
    return is_zero(a.z * b.t - a.t * b.z) && is_zero(a.z * b.u - a.u * b.z) && is_zero(a.t * b.u - a.u * b.t);
}

// Field of the pencil computation: the rationals or F_p.
struct FieldSpec {
    bool rational = false;
    std::uint64_t p = kDefaultPrime;
    static FieldSpec parse(const std::string& text);  // "q" or "p:<prime>"
    std::string to_string() const;
};

struct PencilOptions {
    int n = 1;
    std::uint64_t seed = 0;
    FieldSpec field;
    bool normalized = false;
};

struct PencilRun {
    Report report;
    int discriminant_degree = -1;
    int degree_bound = 0;
    bool fell_back_to_prime = false;
    std::string discriminant_terms;  // "coef exp" per line
};

// Sample, build the discriminant, pick a root, factor the conic, check the
// factors on the surface and count the intersection points of the two lines.
PencilRun verify_LR(const PencilOptions& opt);

// Degree bound of the discriminant: 2n+2 for the normalized chart, 2n+3 in general.
int discriminant_degree_bound(int n, bool normalized);

template <class F>
std::string emit_terms(const UPoly<F>& p)
{
    std::string s;
    for (int i = 0; i <= p.degree(); ++i)
        if (!is_zero(p.coeff(i))) s += wps::to_string(p.coeff(i)) + " " + std::to_string(i) + "\n";
    return s;
}

}  // namespace wps

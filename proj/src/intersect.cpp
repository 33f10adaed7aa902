#include "wps/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wps {

std::string coordinate_names(std::size_t nvars, std::size_t i)
{
    static const char* four[] = {"x", "y", "z", "t"};
    static const char* five[] = {"x", "y", "z", "t", "w"};
    if (nvars == 4 && i < 4) return four[i];
    if (nvars == 5 && i < 5) return five[i];
    return "x" + std::to_string(i);
}

std::string SurfaceFamily::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    s += "; ";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s + ")";
}

SurfaceFamily make_family(std::vector<int> weights, std::vector<int> degrees)
{
    SurfaceFamily f{WeightVector(std::move(weights)), DegreeSpec(std::move(degrees)), std::nullopt, std::nullopt};
    if (f.weights.size() != f.degrees.size() + 3)
        throw std::invalid_argument("surface needs 4 weights with 1 degree or 5 weights with 2 degrees");
    return f;
}

SurfaceFamily family_S10() { return make_family({1, 2, 3, 5}, {10}); }
SurfaceFamily family_S15() { return make_family({1, 3, 5, 7}, {15}); }
SurfaceFamily family_S6_8() { return make_family({1, 2, 3, 4, 5}, {6, 8}); }
SurfaceFamily family_S2n(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    SurfaceFamily f = make_family({1, 1, n, n, 2 * n - 1}, {2 * n, 2 * n});
    f.n = n;
    return f;
}

std::optional<int> s2n_parameter(const SurfaceFamily& f)
{
    if (f.weights.size() != 5) return std::nullopt;
    int n = f.degrees[0] / 2;
    if (n >= 1 && f.same_surface(family_S2n(n))) return n;
    return std::nullopt;
}

Rational sheaf_product(const SurfaceFamily& f, int m, int k)
{
    if (m < 0 || k < 0) throw std::invalid_argument("sheaf_product needs m, k >= 0");
    mpz_class num = m, den = 1;
    num *= k;
    for (int d : f.degrees) num *= d;
    for (int a : f.weights) den *= a;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational anticanonical_square(const SurfaceFamily& f)
{
    int i = index(f.weights, f.degrees);
    if (i < 1) throw std::invalid_argument("anticanonical_square needs index >= 1");
    return sheaf_product(f, i, i);
}

namespace {

int inverse_mod(int a, int r)
{
    for (int x = 1; x < r; ++x)
        if (a * x % r == 1) return x;
    throw std::domain_error("residue not invertible");
}

}  // namespace

std::pair<int, int> SingularPoint::normalized() const
{
    return {1, inverse_mod(a, r) * b % r};
}

std::string SingularPoint::coordinate_name(std::size_t nvars) const
{
    return "p_" + coordinate_names(nvars, coordinate_index);
}

std::string SingularPoint::type_string() const
{
    return "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<SingularPoint> coordinate_singularities(const SurfaceFamily& f)
{
    const auto& w = f.weights;
    const auto& d = f.degrees;
    const int n = static_cast<int>(w.size());
    std::vector<SingularPoint> out;
    for (int i = 0; i < n; ++i) {
        const int r = w[i];
        if (r < 2) continue;
        bool on_surface = true;
        for (int deg : d)
            if (deg % r == 0) on_surface = false;
        if (!on_surface) continue;

        // Variables eliminated by a tangent monomial x_i^m x_j of each degree.
        std::vector<std::vector<int>> elim(d.size());
        for (std::size_t mu = 0; mu < d.size(); ++mu)
            for (int j = 0; j < n; ++j)
                if (j != i && d[mu] >= w[j] && (d[mu] - w[j]) % r == 0) elim[mu].push_back(j);

        std::vector<int> removed;
        if (d.size() == 1) {
            if (!elim[0].empty()) removed = {elim[0][0]};
        } else {
            for (int e1 : elim[0]) {
                for (int e2 : elim[1])
                    if (e1 != e2) {
                        removed = {e1, e2};
                        break;
                    }
                if (!removed.empty()) break;
            }
        }
        if (removed.empty())
            throw std::runtime_error("tangent-monomial rule cannot select local coordinates at p_" +
                                     coordinate_names(n, i));
        std::vector<int> local;
        for (int j = 0; j < n; ++j)
            if (j != i && std::find(removed.begin(), removed.end(), j) == removed.end()) local.push_back(j);
        SingularPoint p{i, r, w[local[0]] % r, w[local[1]] % r};
        if (std::gcd(p.a, r) != 1 || std::gcd(p.b, r) != 1)
            throw std::runtime_error("non-isolated quotient singularity at p_" + coordinate_names(n, i));
        out.push_back(p);
    }
    return out;
}

namespace s2n {
Rational L1_anticanonical(int n) { return make_rational(2, 2 * n - 1); }
Rational L1_square(int n) { return make_rational(2 - 2 * n, 2 * n - 1); }
Rational L1_L1prime(int n) { return make_rational(2 * n, 2 * n - 1); }
Rational C_anticanonical(int n) { return make_rational(4, 2 * n - 1); }
}  // namespace s2n

namespace {

// H_x.D against the orbifold multiplicity bound at the unique singular point:
// H_x.D must not exceed min(1, bound) for the contradiction to go through.
void hyperplane_checks(std::vector<CheckEntry>& out, const std::string& name, const SurfaceFamily& f,
                       const Rational& hx, int m, const Rational& md, const Rational& bound)
{
    Rational computed = sheaf_product(f, 1, 1);
    out.push_back(check_equal(name + ".Hx.D", name + ": hyperplane section H_x against D ~ -K", hx, computed));
    out.push_back(check_equal(name + ".M.D", name + ": |O(" + std::to_string(m) + ")| against D", md,
                              sheaf_product(f, m, 1)));
    Rational limit = bound < 1 ? bound : Rational(1);
    out.push_back(check_true(name + ".Hx.D.bound", name + ": H_x.D <= min(1, " + to_string(bound) + ")",
                             computed <= limit, to_string(computed)));
}

void s2n_checks(std::vector<CheckEntry>& out, int n)
{
    const SurfaceFamily f = family_S2n(n);
    const std::string tag = "S2n[n=" + std::to_string(n) + "]";
    const Rational C2 = sheaf_product(f, 1, 1);
    const Rational CK = sheaf_product(f, 1, index(f.weights, f.degrees));
    out.push_back(check_equal(tag + ".C.-K", "S_{2n,2n}: pencil member C_a against -K", s2n::C_anticanonical(n), CK));
    out.push_back(check_equal(tag + ".L1.-K", "S_{2n,2n}: L1.(-K) = 2/(2n-1)", make_rational(2, 2 * n - 1),
                              s2n::L1_anticanonical(n)));
    out.push_back(check_equal(tag + ".L1^2", "S_{2n,2n}: L1^2 = (2-2n)/(2n-1)", make_rational(2 - 2 * n, 2 * n - 1),
                              s2n::L1_square(n)));
    out.push_back(check_equal(tag + ".L1.L1'", "S_{2n,2n}: L1.L1' = 2n/(2n-1)", make_rational(2 * n, 2 * n - 1),
                              s2n::L1_L1prime(n)));
    out.push_back(check_equal(tag + ".split.-K", "S_{2n,2n}: L1.(-K) + L1'.(-K) = C.(-K)", CK,
                              2 * s2n::L1_anticanonical(n)));
    out.push_back(check_equal(tag + ".split.square", "S_{2n,2n}: (L1 + L1')^2 = C^2", C2,
                              2 * s2n::L1_square(n) + 2 * s2n::L1_L1prime(n)));
    // The a <= L1'.D / L1'.L1 bound of the support argument.
    out.push_back(check_equal(tag + ".a.bound", "S_{2n,2n}: L1'.D / (L1'.L1) = 1/n", make_rational(1, n),
                              Rational(s2n::L1_anticanonical(n) / s2n::L1_L1prime(n))));
    if (n >= 3) {
        out.push_back(check_true(tag + ".C.D<1", "S_{2n,2n}, n >= 3: C.D = 4/(2n-1) < 1", CK < 1, to_string(CK)));
        out.push_back(check_true(tag + ".L1.D<1", "S_{2n,2n}, n >= 3: L1.D = 2/(2n-1) < 1",
                                 s2n::L1_anticanonical(n) < 1, to_string(s2n::L1_anticanonical(n))));
    }
}

}  // namespace

std::vector<CheckEntry> verify_inline_identities(const SurfaceFamily& f)
{
    std::vector<CheckEntry> out;
    if (f.same_surface(family_S10())) {
        hyperplane_checks(out, "S10", f, make_rational(1, 3), 3, make_rational(1), make_rational(2, 3));
    } else if (f.same_surface(family_S15())) {
        hyperplane_checks(out, "S15", f, make_rational(1, 7), 5, make_rational(5, 7), make_rational(2, 7));
    } else if (f.same_surface(family_S6_8())) {
        hyperplane_checks(out, "S6_8", f, make_rational(2, 5), 2, make_rational(4, 5), make_rational(2, 5));
    } else if (auto n = s2n_parameter(f)) {
        if (*n == 2) {
            out.push_back(check_equal("S4_4.O(2).-K", "S_{4,4}: |O(2)| against D gives 8/3 - 2 alpha",
                                      make_rational(8, 3), sheaf_product(f, 2, 1)));
            out.push_back(check_equal("S4_4.O(1).-K", "S_{4,4}: |O(1)| against D gives 4/3 - alpha",
                                      make_rational(4, 3), sheaf_product(f, 1, 1)));
            out.push_back(check_equal("S4_4.L1.-K", "S_{4,4}: L1.D gives 2/3 - alpha", make_rational(2, 3),
                                      s2n::L1_anticanonical(2)));
            out.push_back(check_equal("S4_4.L1.L1'", "S_{4,4}: L1'.L1 = 4/3", make_rational(4, 3), s2n::L1_L1prime(2)));
            out.push_back(check_equal("S4_4.a.bound", "S_{4,4}: (L1'.D)/(L1'.L1) = 1/2 >= a", make_rational(1, 2),
                                      Rational(s2n::L1_anticanonical(2) / s2n::L1_L1prime(2))));
        }
        s2n_checks(out, *n);
    } else {
        throw std::invalid_argument("no inline vectors for this family");
    }
    return out;
}

}  // namespace wps

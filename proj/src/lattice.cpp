#include "wps/lattice.hpp"

#include "wps/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wps {

using nlohmann::json;

bool QuotientPoint::is_type_11() const
{
    if (r == 1) return true;
    return std::gcd(a, r) == 1 && ((a - b) % r + r) % r == 0;
}

std::string QuotientPoint::to_string() const
{
    return "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Rational SurfaceModel::dot(const ClassVector& u, const ClassVector& v) const
{
    if (u.size() != rank() || v.size() != rank()) throw std::invalid_argument("class vector has wrong rank");
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t k = 0; k < rank(); ++k)
            if (sgn(v[k]) != 0) s += u[i] * gram[i][k] * v[k];
    }
    return s;
}

const ClassVector& SurfaceModel::cls(const std::string& name) const
{
    auto it = tracked.find(name);
    if (it == tracked.end()) throw std::invalid_argument("no tracked class " + name + " on " + label);
    return it->second;
}

void SurfaceModel::validate() const
{
    if (gram.size() != rank() || canonical.size() != rank()) throw std::invalid_argument("model rank mismatch");
    for (std::size_t i = 0; i < rank(); ++i) {
        if (gram[i].size() != rank()) throw std::invalid_argument("model rank mismatch");
        for (std::size_t k = 0; k < i; ++k)
            if (gram[i][k] != gram[k][i]) throw std::invalid_argument("gram matrix must be symmetric");
    }
    for (const auto& [name, v] : tracked)
        if (v.size() != rank()) throw std::invalid_argument("tracked class " + name + " has wrong rank");
}

SurfaceModel weighted_blowup_11(const SurfaceModel& m, int r, const std::string& exceptional,
                                const std::map<std::string, Rational>& strict)
{
    m.validate();
    if (r < 1) throw std::invalid_argument("blow-up index must be positive");
    SurfaceModel out = m;
    if (r > 1) {
        auto it = std::find_if(out.singular_points.begin(), out.singular_points.end(),
                               [&](const QuotientPoint& p) { return p.r == r && p.is_type_11(); });
        if (it == out.singular_points.end())
            throw std::invalid_argument("no 1/" + std::to_string(r) + "(1,1) point on " + m.label);
        out.singular_points.erase(it);
    }
    if (out.tracked.count(exceptional)) throw std::invalid_argument("class name " + exceptional + " already tracked");
    const std::size_t n = m.rank();
    out.basis.push_back(exceptional);
    for (auto& row : out.gram) row.push_back(0);
    out.gram.emplace_back(n + 1, Rational(0));
    out.gram[n][n] = -r;
    out.canonical.push_back(-make_rational(r - 2, r));
    for (auto& [name, v] : out.tracked) {
        auto s = strict.find(name);
        v.push_back(s == strict.end() ? Rational(0) : Rational(-s->second));
    }
    for (const auto& [name, c] : strict)
        if (!m.tracked.count(name)) throw std::invalid_argument("no tracked class " + name + " to transform");
    ClassVector e(n + 1, Rational(0));
    e[n] = 1;
    out.tracked[exceptional] = e;
    out.label = m.label + " + blow-up 1/" + std::to_string(r) + "(1,1)";
    return out;
}

namespace {

// Orthogonal projection away from c, where c^2 = -t, followed by deleting one
// basis index. Pushes forward K and all tracked classes.
SurfaceModel project_away(const SurfaceModel& m, const ClassVector& c, const Rational& t)
{
    const std::size_t n = m.rank();
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;)
        if (sgn(c[i]) != 0) {
            j = i;
            break;
        }
    if (j == n) throw std::invalid_argument("cannot contract the zero class");

    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        ClassVector b(n, Rational(0));
        b[i] = 1;
        x[i] = m.dot(b, c);
    }
    auto coords = [&](const ClassVector& v) {
        ClassVector w;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) w.push_back(v[i] - v[j] * c[i] / c[j]);
        return w;
    };

    SurfaceModel out;
    out.label = m.label;
    out.singular_points = m.singular_points;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        out.basis.push_back(m.basis[i]);
        std::vector<Rational> row;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) row.push_back(m.gram[i][k] + x[i] * x[k] / t);
        out.gram.push_back(std::move(row));
    }
    out.canonical = coords(m.canonical);
    for (const auto& [name, v] : m.tracked) {
        ClassVector w = coords(v);
        auto is_zero_vec = [](const ClassVector& u) {
            return std::all_of(u.begin(), u.end(), [](const Rational& q) { return sgn(q) == 0; });
        };
        // Multiples of the contracted class disappear.
        if (is_zero_vec(w) && !is_zero_vec(v)) continue;
        out.tracked[name] = std::move(w);
    }
    return out;
}

std::string name_of(const SurfaceModel& m, const ClassVector& c)
{
    for (const auto& [name, v] : m.tracked)
        if (v == c) return name;
    return "class";
}

}  // namespace

SurfaceModel contract_minus_one(const SurfaceModel& m, const ClassVector& c)
{
    m.validate();
    if (m.dot(c, c) != -1 || m.dot(m.canonical, c) != -1)
        throw std::invalid_argument("not a contractible (-1)-class: " + name_of(m, c) + " has C^2 = " +
                                    to_string(m.dot(c, c)) + ", K.C = " + to_string(m.dot(m.canonical, c)));
    SurfaceModel out = project_away(m, c, 1);
    out.label = m.label + " / " + name_of(m, c);
    return out;
}

SurfaceModel contract_minus_one(const SurfaceModel& m, const std::string& name)
{
    return contract_minus_one(m, m.cls(name));
}

SurfaceModel contract_negative_section(const SurfaceModel& m, const ClassVector& c, int r)
{
    m.validate();
    if (r < 1) throw std::invalid_argument("section index must be positive");
    if (m.dot(c, c) != -r)
        throw std::invalid_argument("section " + name_of(m, c) + " has C^2 = " + to_string(m.dot(c, c)) +
                                    ", expected " + std::to_string(-r));
    if (m.dot(m.canonical, c) != r - 2)
        throw std::invalid_argument("section " + name_of(m, c) + " is not a smooth rational curve: K.C = " +
                                    to_string(m.dot(m.canonical, c)));
    SurfaceModel out = project_away(m, c, r);
    if (r > 1) out.singular_points.push_back(QuotientPoint{r, 1, 1});
    out.label = m.label + " / " + name_of(m, c) + " -> 1/" + std::to_string(r) + "(1,1)";
    return out;
}

SurfaceModel contract_negative_section(const SurfaceModel& m, const std::string& name, int r)
{
    return contract_negative_section(m, m.cls(name), r);
}

ChainIncidence s2n_incidence(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int k = 2 * n + 4;
    const std::size_t rank = k + 1;
    ChainIncidence inc;
    SurfaceModel& y = inc.y0;
    y.label = "Y_0";
    y.basis.push_back("H");
    for (int i = 1; i <= k; ++i) y.basis.push_back("e" + std::to_string(i));
    y.gram.assign(rank, std::vector<Rational>(rank, Rational(0)));
    y.gram[0][0] = 1;
    for (std::size_t i = 1; i < rank; ++i) y.gram[i][i] = -1;
    y.canonical.assign(rank, Rational(1));
    y.canonical[0] = -3;

    auto vec = [&](int h, std::initializer_list<std::pair<int, int>> es) {
        ClassVector v(rank, Rational(0));
        v[0] = h;
        for (auto [i, c] : es) v[i] += c;
        return v;
    };
    ClassVector E = vec(2, {});
    for (int i = 1; i <= 2 * n + 3; ++i) E[i] = -1;
    y.tracked["E"] = E;
    for (int i = 1; i <= k; ++i) y.tracked["L" + std::to_string(i)] = vec(0, {{i, 1}});
    for (int i = 1; i <= 2 * n + 3; ++i) y.tracked["L" + std::to_string(i) + "'"] = vec(1, {{i, -1}, {k, -1}});
    for (int i = 1; i <= 2 * n + 2; ++i) y.tracked["M" + std::to_string(i)] = vec(1, {{i, -1}, {2 * n + 3, -1}});
    y.tracked["F"] = vec(1, {{2 * n + 3, -1}});

    for (int i = 1; i <= 2 * n - 2; ++i) inc.tau1.push_back("L" + std::to_string(i));
    for (int i = 2 * n - 1; i <= k; ++i) inc.tau2.push_back("L" + std::to_string(i));
    for (int i = 1; i <= 2 * n + 2; ++i) inc.alternate.push_back("M" + std::to_string(i));
    inc.alternate.push_back("L" + std::to_string(k));
    return inc;
}

bool ChainReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

namespace {

ChainStep snapshot(const SurfaceModel& m, std::initializer_list<const char*> names)
{
    ChainStep s{m.label, m.K2(), m.rank(), {}, {}};
    for (const char* name : names)
        if (m.tracked.count(name)) s.self_intersections[name] = m.dot(name, name);
    for (const auto& p : m.singular_points) s.singular_points.push_back(p.to_string());
    return s;
}

template <typename F>
auto at_step(const std::string& step, F&& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        throw std::runtime_error("step " + step + ": " + e.what());
    }
}

Rational det(GramMatrix a)
{
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
        }
    }
    return d;
}

}  // namespace

ChainReport run_chain_S2n(int n)
{
    return run_chain_S2n(n, s2n_incidence(n));
}

ChainReport run_chain_S2n(int n, const ChainIncidence& inc)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int r = 2 * n - 1;
    ChainReport rep;
    rep.n = n;
    const SurfaceModel& y0 = inc.y0;
    y0.validate();
    auto add = [&](std::string id, std::string loc, const Rational& expected, const Rational& computed) {
        rep.checks.push_back(check_equal(std::move(id), std::move(loc), expected, computed));
    };

    at_step("incidence", [&] {
        if (static_cast<int>(inc.tau1.size()) != 2 * n - 2)
            throw std::invalid_argument("tau1 needs " + std::to_string(2 * n - 2) + " curves");
        if (inc.tau2.size() != 6) throw std::invalid_argument("tau2 needs 6 curves");
        if (static_cast<int>(inc.alternate.size()) != 2 * n + 3)
            throw std::invalid_argument("alternate route needs " + std::to_string(2 * n + 3) + " curves");
        for (const auto& c : inc.tau1)
            if (y0.dot(inc.section, c) != 1)
                throw std::invalid_argument("tau1 curve " + c + " has E." + c + " = " + to_string(y0.dot(inc.section, c)) +
                                            ", expected 1");
        for (const auto& c : inc.alternate)
            if (y0.dot(inc.section, c) != 0)
                throw std::invalid_argument("alternate curve " + c + " meets E");
        return 0;
    });

    rep.steps.push_back(snapshot(y0, {"E", "L1", "L1'"}));
    add("Y0.K2", "chain: (-K_{Y_0})^2 = -(2n-5)", -(2 * n - 5), y0.K2());
    add("Y0.rank", "chain: rank Y_0 = 2n+5", 2 * n + 5, static_cast<long>(y0.rank()));
    add("Y0.E2", "chain: E^2 = -(2n-1)", -r, y0.dot(inc.section, inc.section));
    add("Y0.KE", "chain: K_{Y_0}.E = 2n-3 (adjunction)", 2 * n - 3, y0.K_dot(inc.section));

    // The singular surface S and the closed-form intersection numbers on it.
    SurfaceModel S = at_step("S", [&] { return contract_negative_section(y0, inc.section, r); });
    S.label = "S_{2n,2n}";
    rep.steps.push_back(snapshot(S, {"L1", "L1'"}));
    SurfaceFamily fam = family_S2n(n);
    add("S.K2", "S: K^2 = 4/(2n-1) = O(1)^2", anticanonical_square(fam), S.K2());
    if (n >= 2) {
        auto sing = coordinate_singularities(fam);
        bool match = sing.size() == 1 && sing[0].r == r && sing[0].normalized() == std::make_pair(1, 1) &&
                     S.singular_points.size() == 1 && S.singular_points[0] == QuotientPoint{r, 1, 1};
        rep.checks.push_back(check_true("S.sing", "S: single point 1/(2n-1)(1,1) at p_w", match,
                                        S.singular_points.empty() ? "" : S.singular_points[0].to_string()));
    } else {
        rep.checks.push_back(check_true("S.sing", "S: smooth when n = 1", S.singular_points.empty()));
    }
    add("S.L1.-K", "S: L1.(-K) = 2/(2n-1)", s2n::L1_anticanonical(n), -S.K_dot("L1"));
    add("S.L1^2", "S: L1^2 = (2-2n)/(2n-1)", s2n::L1_square(n), S.dot("L1", "L1"));
    add("S.L1.L1'", "S: L1.L1' = 2n/(2n-1)", s2n::L1_L1prime(n), S.dot("L1", "L1'"));
    ClassVector C = S.cls("L1");
    for (std::size_t i = 0; i < C.size(); ++i) C[i] += S.cls("L1'")[i];
    add("S.C.-K", "S: C.(-K) = 4/(2n-1)", s2n::C_anticanonical(n), -S.dot(S.canonical, C));
    add("S.C^2", "S: C^2 = O(1)^2 = 4/(2n-1)", sheaf_product(fam, 1, 1), S.dot(C, C));

    // Blowing the point back up restores Y_0 with all strict transforms.
    std::map<std::string, Rational> strict;
    for (const auto& [name, v] : y0.tracked)
        if (name != inc.section) strict[name] = y0.dot(v, y0.cls(inc.section)) / r;
    SurfaceModel y0b = at_step("blow-up", [&] { return weighted_blowup_11(S, r, inc.section, strict); });
    bool same = y0b.rank() == y0.rank() && y0b.K2() == y0.K2() && y0b.singular_points == y0.singular_points;
    for (const auto& [a, va] : y0.tracked) {
        if (!same) break;
        same = y0b.tracked.count(a) && y0b.K_dot(a) == y0.dot(y0.canonical, va);
        for (const auto& [b, vb] : y0.tracked)
            if (same) same = y0b.dot(a, b) == y0.dot(va, vb);
    }
    rep.checks.push_back(check_true("Y0.roundtrip", "chain: weighted blow-up of S recovers Y_0 intersections", same));
    add("Y0.blowup.K2", "chain: K^2 drops by (r-2)^2/r", S.K2() - make_rational((r - 2) * (r - 2), r), y0b.K2());

    // tau_1: contract L_1..L_{2n-2} onto the cubic surface.
    SurfaceModel y = y0;
    for (const auto& c : inc.tau1) y = at_step("tau1", [&] { return contract_minus_one(y, c); });
    y.label = "Y_{2n-2}";
    rep.steps.push_back(snapshot(y, {"E"}));
    add("Y2n-2.K2", "chain: Y_{2n-2} is a cubic surface, K^2 = 3", 3, y.K2());
    add("tau1(E)^2", "chain: tau_1(E)^2 = -1", -1, y.dot(inc.section, inc.section));
    add("tau1(E).K", "chain: K.tau_1(E) = -1", -1, y.K_dot(inc.section));
    add("Y2n-2.rank", "chain: rank Y_{2n-2} = 7", 7, static_cast<long>(y.rank()));
    const std::size_t rank_cubic = y.rank();

    // tau_2: six more disjoint (-1)-curves down to P^2.
    for (const auto& c : inc.tau2) y = at_step("tau2", [&] { return contract_minus_one(y, c); });
    y.label = "P^2";
    rep.steps.push_back(snapshot(y, {"E"}));
    add("P2.K2", "chain: tau_2 ends on P^2, K^2 = 9", 9, y.K2());
    add("P2.rank", "chain: rank P^2 = 1", 1, static_cast<long>(y.rank()));

    // Alternate route: curves disjoint from E down to F_{2n-1}.
    SurfaceModel f = y0;
    for (const auto& c : inc.alternate) f = at_step("alternate", [&] { return contract_minus_one(f, c); });
    f.label = "F_{2n-1}";
    rep.steps.push_back(snapshot(f, {"E", "F"}));
    add("F.K2", "chain: Hirzebruch surface, K^2 = 8", 8, f.K2());
    add("F.E2", "chain: negative section keeps E^2 = -(2n-1)", -r, f.dot(inc.section, inc.section));
    add("F.rank", "chain: rank F_{2n-1} = 2", 2, static_cast<long>(f.rank()));
    if (f.tracked.count("F")) {
        add("F.fiber^2", "chain: fiber class F^2 = 0", 0, f.dot("F", "F"));
        add("F.fiber.E", "chain: fiber meets the section once", 1, f.dot("F", inc.section));
        add("F.fiber.K", "chain: K.F = -2", -2, f.K_dot("F"));
    }
    add("F.det", "chain: unimodular lattice of F_{2n-1}", -1, det(f.gram));
    rep.notes.push_back("intermediate Hirzebruch surface is F_{2n-1}, matching the section self-intersection -(2n-1); "
                        "the label F_{2n-2} is read as a typo");
    const std::size_t rank_hirzebruch = f.rank();

    SurfaceModel p = at_step("section", [&] { return contract_negative_section(f, inc.section, r); });
    p.label = "P(1,1," + std::to_string(r) + ")";
    rep.steps.push_back(snapshot(p, {}));
    // K^2 of P(1,1,m) is (1+1+m)^2 / m.
    add("P11m.K2", "chain: P(1,1,2n-1) has K^2 = (2n+1)^2/(2n-1)", make_rational((r + 2) * (r + 2), r), p.K2());

    add("rank.routes", "chain: 7 + (2n-2) = 2 + (2n+3) = rank Y_0",
        static_cast<long>(rank_cubic + inc.tau1.size()), static_cast<long>(rank_hirzebruch + inc.alternate.size()));
    add("rank.Y0", "chain: both routes account for rank Y_0", static_cast<long>(y0.rank()),
        static_cast<long>(rank_cubic + inc.tau1.size()));
    return rep;
}

Tau1Probe probe_tau1(int n, const std::vector<int>& m)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    const std::size_t k = 2 * n - 2;
    if (m.size() != k) throw std::invalid_argument("probe needs 2n-2 incidences");
    long sum = 0, sq = 0;
    for (int v : m) {
        sum += v;
        sq += static_cast<long>(v) * v;
    }
    // Basis f, g, e_1..e_k: f^2 = s, g^2 = 1, e_i^2 = -1, all orthogonal.
    // E = f + g - sum m_i e_i, K = lambda g + sum e_i.
    const std::size_t rank = k + 2;
    SurfaceModel y;
    y.label = "probe";
    y.basis = {"f", "g"};
    for (std::size_t i = 1; i <= k; ++i) y.basis.push_back("e" + std::to_string(i));
    y.gram.assign(rank, std::vector<Rational>(rank, Rational(0)));
    y.gram[0][0] = -2 * n + sq;
    y.gram[1][1] = 1;
    for (std::size_t i = 2; i < rank; ++i) y.gram[i][i] = -1;
    y.canonical.assign(rank, Rational(1));
    y.canonical[0] = 0;
    y.canonical[1] = 2 * n - 3 - sum;
    ClassVector E(rank, Rational(0));
    E[0] = 1;
    E[1] = 1;
    for (std::size_t i = 0; i < k; ++i) {
        E[i + 2] = -m[i];
        ClassVector L(rank, Rational(0));
        L[i + 2] = 1;
        y.tracked["L" + std::to_string(i + 1)] = L;
    }
    y.tracked["E"] = E;
    if (y.dot(E, E) != -(2 * n - 1) || y.K_dot("E") != 2 * n - 3) throw std::logic_error("probe model mismatch");
    for (std::size_t i = 1; i <= k; ++i) y = contract_minus_one(y, "L" + std::to_string(i));
    return {y.dot("E", "E"), y.K_dot("E")};
}

json to_json(const SurfaceModel& m)
{
    auto vec = [](const ClassVector& v) {
        json a = json::array();
        for (const auto& q : v) a.push_back(to_string(q));
        return a;
    };
    json g = json::array();
    for (const auto& row : m.gram) g.push_back(vec(row));
    json tracked = json::object();
    for (const auto& [name, v] : m.tracked) tracked[name] = vec(v);
    json sing = json::array();
    for (const auto& p : m.singular_points) sing.push_back(p.to_string());
    return json{{"label", m.label}, {"basis", m.basis}, {"gram", g}, {"canonical", vec(m.canonical)},
                {"K2", to_string(m.K2())}, {"singular_points", sing}, {"tracked", tracked}};
}

json to_json(const ChainReport& r)
{
    json steps = json::array();
    for (const auto& s : r.steps) {
        json self = json::object();
        for (const auto& [name, v] : s.self_intersections) self[name] = to_string(v);
        steps.push_back(json{{"label", s.label}, {"K2", to_string(s.K2)}, {"rank", s.rank},
                             {"self_intersections", self}, {"singular_points", s.singular_points}});
    }
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return json{{"n", r.n}, {"steps", steps}, {"checks", checks}, {"notes", r.notes}};
}

}  // namespace wps

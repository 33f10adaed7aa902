#include "wps/logpair.hpp"

#include <stdexcept>

namespace wps {

using nlohmann::json;

DivisorLedger::DivisorLedger(std::vector<std::string> names, std::vector<Rational> coeffs)
    : components(std::move(names)), coefficients(std::move(coeffs))
{
    if (components.size() != coefficients.size()) throw std::invalid_argument("one coefficient per component");
    intersections.assign(components.size(), std::vector<std::optional<Rational>>(components.size()));
    validate();
}

void DivisorLedger::set_intersection(std::size_t i, std::size_t j, const Rational& v)
{
    if (i >= size() || j >= size()) throw std::out_of_range("component index");
    if (intersections.size() != size())
        intersections.assign(size(), std::vector<std::optional<Rational>>(size()));
    intersections[i][j] = v;
    intersections[j][i] = v;
}

std::optional<Rational> DivisorLedger::total_degree() const
{
    if (!degrees) return std::nullopt;
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += coefficients[i] * (*degrees)[i];
    return s;
}

void DivisorLedger::validate() const
{
    if (coefficients.size() != components.size()) throw std::invalid_argument("one coefficient per component");
    for (const auto& c : coefficients)
        if (c < 0) throw std::invalid_argument("ledger coefficients must be non-negative");
    if (degrees && degrees->size() != size()) throw std::invalid_argument("one degree per component");
    if (!intersections.empty()) {
        if (intersections.size() != size()) throw std::invalid_argument("intersection matrix size");
        for (std::size_t i = 0; i < size(); ++i) {
            if (intersections[i].size() != size()) throw std::invalid_argument("intersection matrix size");
            for (std::size_t j = 0; j < i; ++j)
                if (intersections[i][j] != intersections[j][i])
                    throw std::invalid_argument("intersection matrix must be symmetric");
        }
    }
}

ConvexityResult convexity_mu(const DivisorLedger& D, const DivisorLedger& T)
{
    D.validate();
    T.validate();
    if (D.components != T.components) throw std::invalid_argument("ledgers need the same component list");
    if (D.coefficients == T.coefficients) throw std::invalid_argument("divisors equal");
    auto dd = D.total_degree(), td = T.total_degree();
    if (dd && td && *dd != *td) throw std::invalid_argument("total degrees differ");

    std::optional<Rational> mu;
    for (std::size_t i = 0; i < D.size(); ++i) {
        const Rational& a = D.coefficients[i];
        const Rational& b = T.coefficients[i];
        if (b > a) {
            Rational m = a / (b - a);
            if (!mu || m < *mu) mu = m;
        }
    }
    if (!mu) throw std::invalid_argument("mu unbounded");

    ConvexityResult res{*mu, D, {}};
    for (std::size_t i = 0; i < D.size(); ++i) {
        Rational c = (1 + *mu) * D.coefficients[i] - *mu * T.coefficients[i];
        res.D_mu.coefficients[i] = c;
        if (sgn(c) == 0 && sgn(T.coefficients[i]) > 0) res.dropped.push_back(i);
    }
    return res;
}

Rational lc_multiplicity_threshold(const std::optional<SingularPoint>& p)
{
    if (!p || p->r == 1) return 1;
    return make_rational(1, p->r);
}

AdjunctionResult adjunction_bound(const DivisorLedger& D, std::size_t j, const Rational& a_j, int r)
{
    if (j >= D.size()) throw std::out_of_range("component index");
    if (a_j > 1) throw std::invalid_argument("adjunction needs a_j <= 1");
    if (r < 1) throw std::invalid_argument("index r must be positive");
    AdjunctionResult res{0, false};
    for (std::size_t i = 0; i < D.size(); ++i) {
        Rational c = i == j ? D.coefficients[i] - a_j : D.coefficients[i];
        if (sgn(c) == 0) continue;
        if (D.intersections.size() != D.size() || !D.intersections[j][i])
            throw std::invalid_argument("missing intersection " + D.components[j] + "." + D.components[i]);
        res.lhs += c * *D.intersections[j][i];
    }
    res.holds = res.lhs > make_rational(1, r);
    return res;
}

std::string Interval::to_string() const
{
    return std::string(side == Side::AtMost ? "a <= " : "a > ") + wps::to_string(bound);
}

bool disjoint(const Interval& x, const Interval& y)
{
    if (x.side == y.side) return false;
    const Interval& up = x.side == Interval::Side::AtMost ? x : y;
    const Interval& low = x.side == Interval::Side::AtMost ? y : x;
    return up.bound <= low.bound;
}

DivisorLedger s2n_contradiction_ledger(int n, const Rational& a)
{
    DivisorLedger D({"L1", "Delta"}, {a, 1});
    Rational l1sq = s2n::L1_square(n);
    D.set_intersection(0, 0, l1sq);
    D.set_intersection(0, 1, s2n::L1_anticanonical(n) - a * l1sq);
    return D;
}

ContradictionPattern s2n_contradiction_pattern(int n)
{
    if (n < 2) throw std::invalid_argument("the contradiction pattern needs n >= 2");
    ContradictionPattern p;
    p.pairing = {Interval::Side::AtMost, s2n::L1_anticanonical(n) / s2n::L1_L1prime(n)};
    // lhs is affine in a; solve lhs(a) > 1 at a smooth point of L1.
    Rational c0 = adjunction_bound(s2n_contradiction_ledger(n, 0), 0, 0, 1).lhs;
    Rational c1 = adjunction_bound(s2n_contradiction_ledger(n, 1), 0, 1, 1).lhs - c0;
    if (sgn(c1) <= 0) throw std::logic_error("adjunction bound does not grow with a");
    p.adjunction = {Interval::Side::GreaterThan, (1 - c0) / c1};
    p.disjoint = disjoint(p.pairing, p.adjunction);
    return p;
}

json to_json(const DivisorLedger& D)
{
    json j{{"components", D.components}};
    json c = json::array();
    for (const auto& q : D.coefficients) c.push_back(to_string(q));
    j["coefficients"] = c;
    if (!D.intersections.empty()) {
        json m = json::array();
        for (const auto& row : D.intersections) {
            json r = json::array();
            for (const auto& e : row) r.push_back(e ? json(to_string(*e)) : json(nullptr));
            m.push_back(r);
        }
        j["intersections"] = m;
    }
    if (D.degrees) {
        json d = json::array();
        for (const auto& q : *D.degrees) d.push_back(to_string(q));
        j["degrees"] = d;
    }
    return j;
}

DivisorLedger ledger_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coefficients")) coeffs.push_back(parse_rational(s.get<std::string>()));
    DivisorLedger D(j.at("components").get<std::vector<std::string>>(), std::move(coeffs));
    if (j.contains("intersections")) {
        const auto& m = j.at("intersections");
        if (m.size() != D.size()) throw std::invalid_argument("intersection matrix size");
        for (std::size_t i = 0; i < D.size(); ++i) {
            if (m[i].size() != D.size()) throw std::invalid_argument("intersection matrix size");
            for (std::size_t k = 0; k < D.size(); ++k)
                if (!m[i][k].is_null()) D.intersections[i][k] = parse_rational(m[i][k].get<std::string>());
        }
    }
    if (j.contains("degrees")) {
        std::vector<Rational> d;
        for (const auto& s : j.at("degrees")) d.push_back(parse_rational(s.get<std::string>()));
        D.degrees = d;
    }
    D.validate();
    return D;
}

}  // namespace wps

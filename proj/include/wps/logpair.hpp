#pragma once

#include "wps/intersect.hpp"
#include "wps/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wps {

// D = sum a_i D_i over a named component list.
struct DivisorLedger {
    std::vector<std::string> components;
    std::vector<Rational> coefficients;
    // Symmetric; unknown entries stay empty.
    std::vector<std::vector<std::optional<Rational>>> intersections;
    // Degree of each component against one fixed ample class.
    std::optional<std::vector<Rational>> degrees;

    DivisorLedger() = default;
    DivisorLedger(std::vector<std::string> names, std::vector<Rational> coeffs);

    std::size_t size() const { return components.size(); }
    void set_intersection(std::size_t i, std::size_t j, const Rational& v);
    std::optional<Rational> total_degree() const;
    void validate() const;
};

struct ConvexityResult {
    Rational mu;
    DivisorLedger D_mu;
    std::vector<std::size_t> dropped;  // support components of T with zero coefficient in D_mu
};

ConvexityResult convexity_mu(const DivisorLedger& D, const DivisorLedger& T);

// mult_p(D) must exceed this when (S, D) is not log canonical at p.
Rational lc_multiplicity_threshold(const std::optional<SingularPoint>& p);

struct AdjunctionResult {
    Rational lhs;
    bool holds = false;
};

// lhs = D_j . (D - a_j D_j); holds iff lhs > 1/r.
AdjunctionResult adjunction_bound(const DivisorLedger& D, std::size_t j, const Rational& a_j, int r);

// Half-line {a : a <= bound} or {a : a > bound}.
struct Interval {
    enum class Side { AtMost, GreaterThan };
    Side side;
    Rational bound;
    bool contains(const Rational& a) const { return side == Side::AtMost ? a <= bound : a > bound; }
    std::string to_string() const;
};

bool disjoint(const Interval& x, const Interval& y);

// D = a L1 + Delta on S_{2n,2n}, with L1.Delta fixed by D ~ -K.
DivisorLedger s2n_contradiction_ledger(int n, const Rational& a);

struct ContradictionPattern {
    Interval pairing;    // from L1' . D >= a L1 . L1'
    Interval adjunction; // from adjunction at a point of L1
    bool disjoint = false;
};

ContradictionPattern s2n_contradiction_pattern(int n);

nlohmann::json to_json(const DivisorLedger& D);
DivisorLedger ledger_from_json(const nlohmann::json& j);

}  // namespace wps

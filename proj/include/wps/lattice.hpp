#pragma once

#include "wps/rational.hpp"
#include "wps/report.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace wps {

using ClassVector = std::vector<Rational>;
using GramMatrix = std::vector<std::vector<Rational>>;

// Cyclic quotient point 1/r(a, b).
struct QuotientPoint {
    int r = 1;
    int a = 1;
    int b = 1;
    bool is_type_11() const;
    bool operator==(const QuotientPoint&) const = default;
    std::string to_string() const;
};

struct SurfaceModel {
    std::string label;
    std::vector<std::string> basis;
    GramMatrix gram;
    ClassVector canonical;
    std::vector<QuotientPoint> singular_points;
    // Named curve classes carried through every operation, in basis coordinates.
    std::map<std::string, ClassVector> tracked;

    std::size_t rank() const { return basis.size(); }
    Rational dot(const ClassVector& u, const ClassVector& v) const;
    Rational K2() const { return dot(canonical, canonical); }
    const ClassVector& cls(const std::string& name) const;
    Rational dot(const std::string& a, const std::string& b) const { return dot(cls(a), cls(b)); }
    Rational K_dot(const std::string& name) const { return dot(canonical, cls(name)); }
    void validate() const;
};

// Blow up a 1/r(1,1) point (a smooth point when r = 1). The exceptional class
// is appended with E^2 = -r and K_new = pi^*K - (r-2)/r E. Tracked classes are
// pulled back; strict[name] = c replaces the pullback by pi^*C - c E.
SurfaceModel weighted_blowup_11(const SurfaceModel& m, int r, const std::string& exceptional = "E",
                                const std::map<std::string, Rational>& strict = {});

SurfaceModel contract_minus_one(const SurfaceModel& m, const ClassVector& c);
SurfaceModel contract_minus_one(const SurfaceModel& m, const std::string& name);

// Contract a smooth rational curve with C^2 = -r to a 1/r(1,1) point.
SurfaceModel contract_negative_section(const SurfaceModel& m, const ClassVector& c, int r);
SurfaceModel contract_negative_section(const SurfaceModel& m, const std::string& name, int r);

// Y_0: P^2 blown up at 2n+4 points with
//   E    = 2H - e_1 - ... - e_{2n+3}
//   L_i  = e_i                       (i = 1..2n+4)
//   L_i' = H - e_i - e_{2n+4}        (i = 1..2n+3)
//   M_i  = H - e_i - e_{2n+3}        (i = 1..2n+2)
struct ChainIncidence {
    SurfaceModel y0;
    std::vector<std::string> tau1;       // contracted onto the cubic surface
    std::vector<std::string> tau2;       // cubic surface to P^2
    std::vector<std::string> alternate;  // disjoint from E, down to the Hirzebruch surface
    std::string section = "E";
};

ChainIncidence s2n_incidence(int n);

struct ChainStep {
    std::string label;
    Rational K2;
    std::size_t rank = 0;
    std::map<std::string, Rational> self_intersections;
    std::vector<std::string> singular_points;
};

struct ChainReport {
    int n = 0;
    std::vector<ChainStep> steps;
    std::vector<CheckEntry> checks;
    std::vector<std::string> notes;
    bool all_pass() const;
};

ChainReport run_chain_S2n(int n);
ChainReport run_chain_S2n(int n, const ChainIncidence& incidence);

// Contract 2n-2 disjoint (-1)-curves L_i with E.L_i = m_i from a model where
// E^2 = -(2n-1) and K.E = 2n-3; returns tau_1(E)^2 and K.tau_1(E).
struct Tau1Probe {
    Rational square;
    Rational K_dot;
};
Tau1Probe probe_tau1(int n, const std::vector<int>& m);

nlohmann::json to_json(const SurfaceModel& m);
nlohmann::json to_json(const ChainReport& r);

}  // namespace wps

#pragma once

#include "wps/graded.hpp"
#include "wps/rational.hpp"
#include "wps/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wps {

struct TableId {
    int table = 0;
    int row = 0;
    bool operator==(const TableId&) const = default;
    std::string to_string() const { return "T" + std::to_string(table) + "." + std::to_string(row); }
};

struct SurfaceFamily {
    WeightVector weights;
    DegreeSpec degrees;
    std::optional<TableId> table_id;
    std::optional<int> n;

    std::string to_string() const;  // "(a0,...,an; d1,d2)"
    bool same_surface(const SurfaceFamily& o) const { return weights == o.weights && degrees == o.degrees; }
};

SurfaceFamily make_family(std::vector<int> weights, std::vector<int> degrees);

// The named surfaces that carry inline identities.
SurfaceFamily family_S10();
SurfaceFamily family_S15();
SurfaceFamily family_S6_8();
SurfaceFamily family_S2n(int n);  // (1,1,n,n,2n-1; 2n,2n)
std::optional<int> s2n_parameter(const SurfaceFamily& f);

// O(m).O(k) = m k (prod degrees) / (prod weights)
Rational sheaf_product(const SurfaceFamily& f, int m, int k);
Rational anticanonical_square(const SurfaceFamily& f);

struct SingularPoint {
    int coordinate_index = 0;
    int r = 1;
    int a = 0, b = 0;  // residues of the local coordinate weights mod r

    std::pair<int, int> normalized() const;  // (1, a^{-1} b mod r)
    std::string coordinate_name(std::size_t nvars) const;
    std::string type_string() const;  // "1/r(a,b)"
};

std::vector<SingularPoint> coordinate_singularities(const SurfaceFamily& f);

// Closed-form intersection numbers on S_{2n,2n} for the reducible member L1 + L1'.
namespace s2n {
Rational L1_anticanonical(int n);
Rational L1_square(int n);
Rational L1_L1prime(int n);
Rational C_anticanonical(int n);
}  // namespace s2n

std::vector<CheckEntry> verify_inline_identities(const SurfaceFamily& f);

std::string coordinate_names(std::size_t nvars, std::size_t i);

}  // namespace wps

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wps {

// Weights of a weighted projective space, kept sorted ascending.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> w);
    WeightVector(std::initializer_list<int> w) : WeightVector(std::vector<int>(w)) {}

    std::size_t size() const { return w_.size(); }
    int operator[](std::size_t i) const { return w_[i]; }
    const std::vector<int>& values() const { return w_; }
    auto begin() const { return w_.begin(); }
    auto end() const { return w_.end(); }
    long long sum() const;
    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;
    std::string to_string() const;

private:
    std::vector<int> w_;
};

// Degrees of the defining equations (one for a hypersurface, two for a
// codimension-2 complete intersection), sorted ascending.
class DegreeSpec {
public:
    DegreeSpec() = default;
    explicit DegreeSpec(std::vector<int> d);
    DegreeSpec(std::initializer_list<int> d) : DegreeSpec(std::vector<int>(d)) {}

    std::size_t size() const { return d_.size(); }
    int operator[](std::size_t i) const { return d_[i]; }
    const std::vector<int>& values() const { return d_; }
    auto begin() const { return d_.begin(); }
    auto end() const { return d_.end(); }
    long long sum() const;
    bool operator==(const DegreeSpec&) const = default;
    auto operator<=>(const DegreeSpec&) const = default;
    std::string to_string() const;

private:
    std::vector<int> d_;
};

struct Monomial {
    std::vector<int> exponents;
    bool operator==(const Monomial&) const = default;
};

int weighted_degree(const Monomial& m, std::span<const int> weights);

// All monomials of weighted degree d, in descending lexicographic order of
// exponent vectors (highest power of the first variable first).
std::vector<Monomial> enumerate_monomials(std::span<const int> weights, int d);
inline std::vector<Monomial> enumerate_monomials(const WeightVector& w, int d)
{
    return enumerate_monomials(std::span<const int>(w.values()), d);
}

// Whether some monomial in the given weights has degree d (d = 0 counts).
bool has_monomial(std::span<const int> weights, int d);
// Number of monomials of degree d, saturating at cap.
std::size_t count_monomials(std::span<const int> weights, int d, std::size_t cap = SIZE_MAX);

int index(const WeightVector& w, const DegreeSpec& d);
bool ambient_well_formed(const WeightVector& w);
bool surface_well_formed(const WeightVector& w, const DegreeSpec& d);
bool is_linear_cone(const WeightVector& w, const DegreeSpec& d);

struct QuasiSmoothResult {
    bool quasi_smooth = false;
    // Coordinate subset (bitmask) whose stratum fails, when not quasi-smooth.
    unsigned failing_subset = 0;
    // Strata decided by the randomized Jacobian test rather than by counting.
    std::vector<unsigned> randomized_strata;
    // Seeds tried by the randomized confirmation (complete intersections).
    int seeds_tried = 0;
    std::string reason;
};

QuasiSmoothResult quasi_smooth_report(const WeightVector& w, const DegreeSpec& d, std::uint64_t prime = 0);
bool quasi_smooth_general(const WeightVector& w, const DegreeSpec& d);

std::string subset_string(unsigned mask, std::size_t n);

}  // namespace wps

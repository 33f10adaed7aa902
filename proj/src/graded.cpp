#include "wps/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wps {

namespace {

std::string join(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

WeightVector::WeightVector(std::vector<int> w) : w_(std::move(w))
{
    if (w_.size() != 4 && w_.size() != 5)
        throw std::invalid_argument("weight vector must have length 4 or 5");
    for (int a : w_)
        if (a < 1) throw std::invalid_argument("weights must be positive");
    std::sort(w_.begin(), w_.end());
}

long long WeightVector::sum() const { return std::accumulate(w_.begin(), w_.end(), 0LL); }
std::string WeightVector::to_string() const { return join(w_); }

DegreeSpec::DegreeSpec(std::vector<int> d) : d_(std::move(d))
{
    if (d_.size() != 1 && d_.size() != 2)
        throw std::invalid_argument("degree spec must have length 1 or 2");
    for (int a : d_)
        if (a < 1) throw std::invalid_argument("degrees must be positive");
    std::sort(d_.begin(), d_.end());
}

long long DegreeSpec::sum() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }
std::string DegreeSpec::to_string() const { return join(d_); }

int weighted_degree(const Monomial& m, std::span<const int> weights)
{
    int d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += m.exponents.at(i) * weights[i];
    return d;
}

namespace {

void enumerate_rec(std::span<const int> w, std::size_t i, int rest, std::vector<int>& e, std::vector<Monomial>& out)
{
    if (i + 1 == w.size()) {
        if (rest % w[i] == 0) {
            e[i] = rest / w[i];
            out.push_back({e});
        }
        return;
    }
    for (int k = rest / w[i]; k >= 0; --k) {
        e[i] = k;
        enumerate_rec(w, i + 1, rest - k * w[i], e, out);
    }
    e[i] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::span<const int> weights, int d)
{
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (weights.empty()) {
        if (d == 0) out.push_back({{}});
        return out;
    }
    for (int a : weights)
        if (a < 1) throw std::invalid_argument("weights must be positive");
    std::vector<int> e(weights.size(), 0);
    enumerate_rec(weights, 0, d, e, out);
    return out;
}

bool has_monomial(std::span<const int> weights, int d)
{
    if (d < 0) return false;
    if (d == 0) return true;
    if (weights.empty()) return false;
    std::vector<char> reach(d + 1, 0);
    reach[0] = 1;
    for (int a : weights)
        for (int s = a; s <= d; ++s)
            if (reach[s - a]) reach[s] = 1;
    return reach[d];
}

std::size_t count_monomials(std::span<const int> weights, int d, std::size_t cap)
{
    if (d < 0) return 0;
    std::vector<std::size_t> ways(d + 1, 0);
    ways[0] = 1;
    for (int a : weights)
        for (int s = a; s <= d; ++s) ways[s] = std::min(cap, ways[s] + ways[s - a]);
    return std::min(cap, ways[d]);
}

int index(const WeightVector& w, const DegreeSpec& d)
{
    return static_cast<int>(w.sum() - d.sum());
}

bool ambient_well_formed(const WeightVector& w)
{
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) g = std::gcd(g, w[i]);
        if (g != 1) return false;
    }
    return true;
}

bool surface_well_formed(const WeightVector& w, const DegreeSpec& d)
{
    if (w.size() != d.size() + 3)
        throw std::invalid_argument("surface needs codimension equal to number of degrees");
    if (!ambient_well_formed(w)) return false;
    const std::size_t n = w.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                sub.push_back(w[i]);
                g = std::gcd(g, w[i]);
            }
        if (sub.size() < 2 || g == 1) continue;
        int pure = 0;
        for (int deg : d)
            if (has_monomial(sub, deg)) ++pure;
        if (pure < static_cast<int>(sub.size()) - 1) return false;
    }
    return true;
}

bool is_linear_cone(const WeightVector& w, const DegreeSpec& d)
{
    for (int deg : d)
        for (int a : w)
            if (deg == a) return true;
    return false;
}

std::string subset_string(unsigned mask, std::size_t n)
{
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) {
            s += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
    return s + "}";
}

bool quasi_smooth_general(const WeightVector& w, const DegreeSpec& d)
{
    return quasi_smooth_report(w, d).quasi_smooth;
}

}  // namespace wps

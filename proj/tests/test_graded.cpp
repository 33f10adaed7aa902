#include "doctest.h"

#include "wps/graded.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace wps;

namespace {

// Brute-force count of exponent vectors with weighted degree d.
std::size_t brute_count(const std::vector<int>& w, int d)
{
    std::size_t n = 0;
    std::vector<int> e(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
        if (i == w.size()) {
            n += rest == 0;
            return;
        }
        for (int k = 0; k * w[i] <= rest; ++k) self(self, i + 1, rest - k * w[i]);
    };
    rec(rec, 0, d);
    return n;
}

std::vector<int> E(std::initializer_list<int> v) { return v; }

}  // namespace

TEST_CASE("monomial enumeration")
{
    auto m = enumerate_monomials(WeightVector{1, 2, 3, 5}, 3);
    REQUIRE(m.size() == 3);
    CHECK(m[0].exponents == E({3, 0, 0, 0}));
    CHECK(m[1].exponents == E({1, 1, 0, 0}));
    CHECK(m[2].exponents == E({0, 0, 1, 0}));

    auto m2 = enumerate_monomials(WeightVector{1, 3, 5, 7}, 5);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].exponents == E({5, 0, 0, 0}));
    CHECK(m2[1].exponents == E({2, 1, 0, 0}));
    CHECK(m2[2].exponents == E({0, 0, 1, 0}));

    auto c = enumerate_monomials(WeightVector{2, 3, 5, 9}, 0);
    REQUIRE(c.size() == 1);
    CHECK(c[0].exponents == E({0, 0, 0, 0}));
    CHECK(enumerate_monomials(WeightVector{2, 3, 5, 9}, 1).empty());
}

TEST_CASE("monomial enumeration matches brute force")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(4 + rng() % 2);
        for (auto& a : w) a = 1 + rng() % 9;
        WeightVector wv(w);
        int d = rng() % 40;
        auto mons = enumerate_monomials(wv, d);
        CHECK(mons.size() == brute_count(wv.values(), d));
        CHECK(count_monomials(wv.values(), d) == mons.size());
        CHECK(has_monomial(wv.values(), d) == !mons.empty());
        for (const auto& mon : mons) CHECK(weighted_degree(mon, wv.values()) == d);
        CHECK(std::is_sorted(mons.begin(), mons.end(),
                             [](const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; }));
    }
}

TEST_CASE("index")
{
    CHECK(index(WeightVector{1, 2, 3, 5}, DegreeSpec{10}) == 1);
    CHECK(index(WeightVector{2, 2, 3, 3, 3}, DegreeSpec{6, 6}) == 1);
    CHECK(index(WeightVector{1, 1, 1, 1}, DegreeSpec{4}) == 0);
    CHECK(index(WeightVector{5, 3, 2, 1}, DegreeSpec{10}) == 1);
    CHECK(index(WeightVector{3, 3, 5, 7, 5}, DegreeSpec{12, 10}) == 1);
}

TEST_CASE("ambient well-formedness")
{
    for (int n = 1; n <= 30; ++n) CHECK(ambient_well_formed(WeightVector{1, 1, n, n, 2 * n - 1}));
    CHECK(ambient_well_formed(WeightVector{1, 1, 1, 1}));
    CHECK_FALSE(ambient_well_formed(WeightVector{2, 2, 4, 6}));
    // brute force over all 3-subsets for a few random vectors
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> w(4);
        for (auto& a : w) a = 1 + rng() % 12;
        bool expect = true;
        for (int skip = 0; skip < 4; ++skip) {
            int g = 0;
            for (int i = 0; i < 4; ++i)
                if (i != skip) g = std::gcd(g, w[i]);
            expect = expect && g == 1;
        }
        CHECK(ambient_well_formed(WeightVector(w)) == expect);
    }
}

TEST_CASE("surface well-formedness")
{
    CHECK(surface_well_formed(WeightVector{1, 2, 3, 5}, DegreeSpec{10}));
    CHECK_FALSE(surface_well_formed(WeightVector{1, 2, 3, 4}, DegreeSpec{9}));
    // the reason: no degree-9 monomial in the weight-2 and weight-4 variables
    CHECK_FALSE(has_monomial(std::vector<int>{2, 4}, 9));
    CHECK(surface_well_formed(WeightVector{1, 1, 1, 1, 1}, DegreeSpec{2, 2}));
    CHECK_FALSE(surface_well_formed(WeightVector{2, 2, 4, 6}, DegreeSpec{13}));
}

TEST_CASE("predicates are invariant under weight permutation")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(4);
        for (auto& a : w) a = 1 + rng() % 10;
        int d = std::accumulate(w.begin(), w.end(), 0) - 1;
        WeightVector sorted_w(w);
        std::shuffle(w.begin(), w.end(), rng);
        WeightVector shuffled(w);
        CHECK(shuffled == sorted_w);
        CHECK(ambient_well_formed(shuffled) == ambient_well_formed(sorted_w));
        CHECK(surface_well_formed(shuffled, DegreeSpec{d}) == surface_well_formed(sorted_w, DegreeSpec{d}));
    }
}

TEST_CASE("quasi-smoothness of hypersurfaces")
{
    CHECK(quasi_smooth_general(WeightVector{1, 1, 1, 1}, DegreeSpec{3}));
    CHECK(quasi_smooth_general(WeightVector{1, 2, 3, 5}, DegreeSpec{10}));
    // No degree-12 monomial t^m or t^m times one other variable in P(1,3,4,5).
    CHECK_FALSE(quasi_smooth_general(WeightVector{1, 3, 4, 5}, DegreeSpec{12}));
    for (int m = 0; 5 * m <= 12; ++m)
        for (int other : {1, 3, 4}) CHECK((12 - 5 * m == 0 || 12 - 5 * m != other));
    auto rep = quasi_smooth_report(WeightVector{1, 3, 4, 5}, DegreeSpec{12});
    CHECK(rep.failing_subset == 0b1000u);
    // the general quartic surface is smooth
    CHECK(quasi_smooth_general(WeightVector{1, 1, 1, 1}, DegreeSpec{4}));
    // {z,t} has no pure degree-5 monomial but x z^2 and y t^2 serve as partners
    CHECK(quasi_smooth_general(WeightVector{1, 1, 2, 2}, DegreeSpec{5}));
}

TEST_CASE("quasi-smoothness of complete intersections")
{
    for (int n = 1; n <= 10; ++n)
        CHECK(quasi_smooth_general(WeightVector{1, 1, n, n, 2 * n - 1}, DegreeSpec{2 * n, 2 * n}));
    CHECK(quasi_smooth_general(WeightVector{2, 2, 3, 3, 3}, DegreeSpec{6, 6}));
    CHECK(quasi_smooth_general(WeightVector{1, 2, 3, 4, 5}, DegreeSpec{6, 8}));
    // Contains the line {x = y = z = 0} along which both equations are singular.
    CHECK_FALSE(quasi_smooth_general(WeightVector{1, 1, 1, 3, 3}, DegreeSpec{2, 6}));
    CHECK_FALSE(quasi_smooth_general(WeightVector{1, 1, 3, 4, 6}, DegreeSpec{2, 12}));
}

TEST_CASE("linear cone")
{
    CHECK_FALSE(is_linear_cone(WeightVector{1, 2, 3, 5}, DegreeSpec{10}));
    CHECK(is_linear_cone(WeightVector{1, 2, 3, 4, 5}, DegreeSpec{5, 7}));
    CHECK_FALSE(is_linear_cone(WeightVector{1, 1, 1, 1, 1}, DegreeSpec{2, 2}));
}

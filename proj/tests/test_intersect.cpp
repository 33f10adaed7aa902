#include "doctest.h"

#include "wps/intersect.hpp"

using namespace wps;

namespace {

bool all_pass(const std::vector<CheckEntry>& v)
{
    for (const auto& e : v)
        if (!e.pass) return false;
    return !v.empty();
}

const CheckEntry& find(const std::vector<CheckEntry>& v, const std::string& id)
{
    for (const auto& e : v)
        if (e.id == id) return e;
    throw std::runtime_error("missing check " + id);
}

}  // namespace

TEST_CASE("sheaf products")
{
    CHECK(sheaf_product(family_S10(), 3, 1) == 1);
    CHECK(sheaf_product(family_S15(), 5, 1) == make_rational(5, 7));
    CHECK(sheaf_product(family_S6_8(), 2, 1) == make_rational(4, 5));
    CHECK(sheaf_product(family_S6_8(), 1, 1) == make_rational(2, 5));
    for (int m = 0; m < 5; ++m)
        for (int k = 0; k < 5; ++k) {
            auto f = family_S6_8();
            CHECK(sheaf_product(f, m, k) == sheaf_product(f, k, m));
            CHECK(sheaf_product(f, m + 2, k) == sheaf_product(f, m, k) + sheaf_product(f, 2, k));
        }
}

TEST_CASE("anticanonical squares")
{
    CHECK(anticanonical_square(family_S2n(2)) == make_rational(4, 3));
    CHECK(anticanonical_square(make_family({1, 1, 1, 1}, {3})) == 3);
    CHECK(anticanonical_square(make_family({1, 1, 1, 1, 1}, {2, 2})) == 4);
    CHECK_THROWS(anticanonical_square(make_family({1, 1, 1, 1}, {4})));
    for (int n = 1; n <= 10; ++n) CHECK(anticanonical_square(family_S2n(n)) == make_rational(4, 2 * n - 1));
}

TEST_CASE("coordinate singularities")
{
    auto s = coordinate_singularities(family_S2n(3));
    REQUIRE(s.size() == 1);
    CHECK(s[0].coordinate_index == 4);
    CHECK(s[0].r == 5);
    CHECK(s[0].normalized() == std::pair{1, 1});
    CHECK(s[0].a == 3);
    CHECK(s[0].b == 3);

    CHECK(coordinate_singularities(make_family({1, 1, 1, 1}, {3})).empty());

    auto t = coordinate_singularities(family_S10());
    REQUIRE(t.size() == 1);
    CHECK(t[0].coordinate_index == 2);
    CHECK(t[0].r == 3);
    CHECK(t[0].a == 2);
    CHECK(t[0].b == 2);
    CHECK(t[0].normalized() == std::pair{1, 1});

    CHECK(coordinate_singularities(family_S15()).size() == 1);
    CHECK(coordinate_singularities(family_S15())[0].coordinate_index == 3);
    CHECK(coordinate_singularities(family_S6_8()).size() == 1);
    CHECK(coordinate_singularities(family_S6_8())[0].coordinate_index == 4);
}

TEST_CASE("singular points lie on the general member")
{
    std::vector<SurfaceFamily> fams = {family_S10(), family_S15(), family_S6_8(), make_family({3, 5, 7, 11}, {25}),
                                       make_family({13, 23, 35, 57}, {127}), make_family({11, 29, 39, 49, 59}, {88, 98})};
    for (int n = 1; n <= 10; ++n) fams.push_back(family_S2n(n));
    for (const auto& f : fams)
        for (const auto& p : coordinate_singularities(f)) {
            CHECK(std::gcd(p.a, p.r) == 1);
            CHECK(std::gcd(p.b, p.r) == 1);
            for (int deg : f.degrees) {
                // no pure power x_i^m of degree deg
                std::vector<int> only{f.weights[p.coordinate_index]};
                CHECK(enumerate_monomials(std::span<const int>(only), deg).empty());
            }
        }
}

TEST_CASE("inline identities")
{
    auto s10 = verify_inline_identities(family_S10());
    CHECK(all_pass(s10));
    CHECK(find(s10, "S10.Hx.D").computed == "1/3");
    CHECK(find(s10, "S10.M.D").computed == "1");
    CHECK(find(verify_inline_identities(family_S15()), "S15.Hx.D").computed == "1/7");
    CHECK(find(verify_inline_identities(family_S15()), "S15.M.D").computed == "5/7");
    CHECK(find(verify_inline_identities(family_S6_8()), "S6_8.Hx.D").computed == "2/5");
    CHECK(find(verify_inline_identities(family_S6_8()), "S6_8.M.D").computed == "4/5");
    CHECK(all_pass(verify_inline_identities(family_S15())));
    CHECK(all_pass(verify_inline_identities(family_S6_8())));

    auto s44 = verify_inline_identities(family_S2n(2));
    CHECK(all_pass(s44));
    CHECK(find(s44, "S4_4.O(2).-K").computed == "8/3");
    CHECK(find(s44, "S4_4.O(1).-K").computed == "4/3");
    CHECK(find(s44, "S4_4.L1.-K").computed == "2/3");
    CHECK(find(s44, "S4_4.L1.L1'").computed == "4/3");
    CHECK(find(s44, "S4_4.a.bound").computed == "1/2");

    auto s88 = verify_inline_identities(family_S2n(4));
    CHECK(find(s88, "S2n[n=4].L1.L1'").computed == "8/7");
    CHECK(find(s88, "S2n[n=4].L1^2").computed == "-6/7");
    CHECK(find(s88, "S2n[n=4].C.-K").computed == "4/7");
    for (int n = 1; n <= 10; ++n) CHECK(all_pass(verify_inline_identities(family_S2n(n))));

    CHECK_THROWS_WITH(verify_inline_identities(make_family({3, 5, 7, 11}, {25})), "no inline vectors for this family");
}

TEST_CASE("pencil decomposition consistency by direct arithmetic")
{
    for (int n = 1; n <= 10; ++n) {
        Rational l2 = make_rational(2 - 2 * n, 2 * n - 1), ll = make_rational(2 * n, 2 * n - 1);
        CHECK(l2 + 2 * ll + l2 == sheaf_product(family_S2n(n), 1, 1));
    }
}

#include "wps/classify.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace wps;

namespace {

const ReferenceTables& ref()
{
    static const ReferenceTables t = load_reference_tables();
    return t;
}

bool admissible_recheck(const SurfaceFamily& f)
{
    return index(f.weights, f.degrees) == 1 && ambient_well_formed(f.weights) &&
           surface_well_formed(f.weights, f.degrees) && !is_linear_cone(f.weights, f.degrees) &&
           quasi_smooth_general(f.weights, f.degrees);
}

bool contains(const std::vector<SurfaceFamily>& v, const SurfaceFamily& f)
{
    return std::any_of(v.begin(), v.end(), [&](const SurfaceFamily& g) { return g.same_surface(f); });
}

// Every sorted tuple with max weight <= bound and every degree split, no pruning.
std::set<std::string> brute_force(int bound, int codim)
{
    std::set<std::string> out;
    const int nw = codim + 3;
    std::vector<int> w(nw, 1);
    while (true) {
        int sum = 0;
        for (int a : w) sum += a;
        const int total = sum - 1;
        for (int d1 = 1; d1 <= (codim == 1 ? total : total / 2); ++d1) {
            if (codim == 1 && d1 != total) continue;
            std::vector<int> d = codim == 1 ? std::vector<int>{total} : std::vector<int>{d1, total - d1};
            SurfaceFamily f = make_family(w, d);
            if (is_linear_cone(f.weights, f.degrees) || !surface_well_formed(f.weights, f.degrees)) continue;
            if (quasi_smooth_general(f.weights, f.degrees)) out.insert(f.to_string());
        }
        int i = nw - 1;
        while (i >= 0 && w[i] == bound) --i;
        if (i < 0) break;
        ++w[i];
        for (int j = i + 1; j < nw; ++j) w[j] = w[i];
    }
    return out;
}

}  // namespace

TEST_CASE("reference tables load with the expected shape")
{
    const auto& t = ref();
    CHECK(t.schema == "wps-reference/1");
    CHECK(t.rows.size() == 62);
    int t1 = 0, t2 = 0, par = 0;
    for (const auto& r : t.rows) {
        (r.id.table == 1 ? t1 : t2)++;
        if (r.parametric()) ++par;
        CHECK(r.codim() == r.id.table);
    }
    CHECK(t1 == 23);
    CHECK(t2 == 39);
    CHECK(par == 3);
    CHECK(t.find({1, 1})->parametric());
    CHECK(t.find({2, 37})->parametric());
    CHECK(t.find({2, 38})->parametric());
    CHECK(t.find({2, 40}) == nullptr);
}

TEST_CASE("every reference instance passes the admissibility predicates")
{
    for (const auto& f : ref().instances(10)) {
        INFO(f.to_string());
        CHECK(admissible_recheck(f));
    }
}

TEST_CASE("parametric patterns instantiate and match")
{
    const FamilyPattern t11 = *ref().find({1, 1})->pattern;
    CHECK(t11.instantiate(1).same_surface(make_family({2, 5, 5, 9}, {20})));
    CHECK(t11.match(make_family({2, 5, 5, 9}, {20})) == 1);
    CHECK(t11.match(make_family({2, 3, 3, 5}, {12})) == 0);
    CHECK_FALSE(t11.match(make_family({1, 2, 3, 5}, {10})).has_value());
    const FamilyPattern t238 = *ref().find({2, 38})->pattern;
    CHECK(t238.instantiate(4).same_surface(family_S2n(4)));
    CHECK(t238.to_string() == "(1,1,n,n,2n-1; 2n,2n)");
    CHECK_THROWS(t238.instantiate(0));
}

TEST_CASE("enumerate_candidates small bounds")
{
    auto c8 = enumerate_candidates(8, 1);
    CHECK(contains(c8, make_family({1, 1, 1, 1}, {3})));
    CHECK(contains(c8, make_family({1, 1, 2, 3}, {6})));
    CHECK(contains(c8, make_family({1, 2, 3, 5}, {10})));
    for (const auto& r : ref().rows) {
        if (r.codim() != 1 || r.parametric()) continue;
        int mx = r.fixed->weights[3];
        if (mx <= 8) CHECK(contains(c8, *r.fixed));
    }
    auto c1 = enumerate_candidates(1, 2);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].same_surface(make_family({1, 1, 1, 1, 1}, {2, 2})));
    CHECK(enumerate_candidates(0, 1).empty());
    CHECK(enumerate_candidates(0, 2).empty());
    CHECK_THROWS(enumerate_candidates(5, 3));
}

TEST_CASE("enumeration is sound and sorted")
{
    for (int codim : {1, 2}) {
        auto c = enumerate_candidates(codim == 1 ? 60 : 30, codim);
        for (const auto& f : c) {
            INFO(f.to_string());
            CHECK(admissible_recheck(f));
        }
        for (std::size_t i = 1; i < c.size(); ++i) {
            auto key = [](const SurfaceFamily& f) { return std::make_pair(f.weights, f.degrees); };
            CHECK(key(c[i - 1]) < key(c[i]));
        }
    }
}

TEST_CASE("enumeration agrees with unpruned brute force")
{
    for (auto [bound, codim] : {std::pair{14, 1}, std::pair{9, 2}}) {
        std::set<std::string> fast;
        for (const auto& f : enumerate_candidates(bound, codim)) fast.insert(f.to_string());
        CHECK(fast == brute_force(bound, codim));
    }
}

TEST_CASE("fold_families")
{
    auto pats = ref().patterns();
    auto rows = fold_families({family_S2n(1), family_S2n(2), family_S2n(3)}, pats, &ref());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].parametric());
    CHECK(rows[0].table_id == TableId{2, 38});
    CHECK(rows[0].n_first == 1);
    CHECK(rows[0].n_last == 3);

    rows = fold_families({family_S10()}, pats, &ref());
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].parametric());
    CHECK(rows[0].family.same_surface(family_S10()));
    CHECK(rows[0].table_id == TableId{1, 10});

    rows = fold_families({make_family({2, 5, 5, 9}, {20})}, pats, &ref());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].table_id == TableId{1, 1});
    CHECK(rows[0].n_first == 1);

    // Below n_min the instance stays a plain row with no table id.
    rows = fold_families({make_family({2, 3, 3, 5}, {12})}, pats, &ref());
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].parametric());
    CHECK_FALSE(rows[0].table_id.has_value());

    CHECK_THROWS_WITH_AS(fold_families({family_S2n(1), family_S2n(3)}, pats), doctest::Contains("family gap"),
                         std::runtime_error);
}

TEST_CASE("lct_lookup")
{
    auto v = lct_lookup(ref(), make_family({3, 5, 7, 11}, {25}));
    CHECK(v.kind == LctValue::Kind::Exact);
    CHECK(v.values == std::vector<Rational>{make_rational(21, 10)});

    v = lct_lookup(ref(), family_S2n(2));
    CHECK(v.kind == LctValue::Kind::Exact);
    CHECK(v.values[0] == make_rational(7, 10));

    v = lct_lookup(ref(), family_S15());
    CHECK(v.kind == LctValue::Kind::Branch);
    CHECK(v.labels == std::vector<std::string>{"k", "l"});
    CHECK(v.values == std::vector<Rational>{make_rational(1), make_rational(8, 15)});
    CHECK(v.conditions[0] == "the defining equation of S_{15} contains yzt");

    v = lct_lookup(ref(), make_family({1, 1, 2, 3}, {6}));
    CHECK(v.kind == LctValue::Kind::Branch);
    CHECK(v.values == std::vector<Rational>{make_rational(1), make_rational(5, 6)});

    v = lct_lookup(ref(), make_family({2, 2, 3, 3, 3}, {6, 6}));
    CHECK(v.kind == LctValue::Kind::LowerBound);
    CHECK(v.values[0] == make_rational(6, 5));

    CHECK_THROWS_WITH(lct_lookup(ref(), make_family({2, 3, 3, 5}, {12})), doctest::Contains("not in reference tables"));
}

TEST_CASE("cylinder_verdict examples")
{
    auto v = cylinder_verdict(ref(), family_S2n(1));
    CHECK(v.has_cylinder);
    CHECK(v.justification == Justification::CylinderExistsDp4);
    v = cylinder_verdict(ref(), family_S10());
    CHECK_FALSE(v.has_cylinder);
    CHECK(v.justification == Justification::ThmAbsence);
    v = cylinder_verdict(ref(), make_family({3, 5, 7, 11}, {25}));
    CHECK(v.justification == Justification::LctGe1);
    v = cylinder_verdict(ref(), make_family({1, 1, 4, 4, 7}, {8, 8}));
    CHECK(v.justification == Justification::ThmCylNGe2);
    for (auto f : {make_family({1, 1, 2, 3}, {6}), make_family({1, 1, 1, 1}, {3}), make_family({1, 1, 1, 2}, {4})})
        CHECK(cylinder_verdict(ref(), f).justification == Justification::SmoothLowDegree);
    CHECK_THROWS(cylinder_verdict(ref(), make_family({2, 3, 3, 5}, {12})));
}

TEST_CASE("verdict totality and data integrity")
{
    int with_cylinder = 0, total = 0;
    std::set<std::string> low_lct;
    for (const auto& f : ref().instances(10)) {
        ++total;
        Verdict v = cylinder_verdict(ref(), f);
        CHECK(v.has_cylinder == (v.justification == Justification::CylinderExistsDp4));
        if (v.has_cylinder) {
            ++with_cylinder;
            CHECK(f.same_surface(family_S2n(1)));
        }
        LctValue l = lct_lookup(ref(), f);
        if (v.justification == Justification::LctGe1) CHECK(l.minimum() >= 1);
        if (l.minimum() < 1) {
            CHECK(v.justification != Justification::LctGe1);
            low_lct.insert(f.table_id->to_string());
        }
    }
    CHECK(total == 89);
    CHECK(with_cylinder == 1);
    CHECK(low_lct == std::set<std::string>{"T1.2", "T1.9", "T1.10", "T1.17", "T1.18", "T2.38", "T2.39"});
}

TEST_CASE("verdict guard rejects lct below one")
{
    ReferenceTables t = ref();
    for (auto& r : t.rows)
        if (r.id == TableId{1, 4}) r.lct.values = {make_rational(1, 2)};
    CHECK_THROWS_WITH(cylinder_verdict(t, make_family({3, 5, 7, 11}, {25})), doctest::Contains("justification/data mismatch"));
}

TEST_CASE("compare_with_reference on the reference instances")
{
    for (int codim : {1, 2}) {
        std::vector<SurfaceFamily> inst;
        for (const auto& f : ref().instances(10))
            if (static_cast<int>(f.degrees.size()) == codim) inst.push_back(f);
        auto folded = fold_families(inst, ref().patterns(), &ref());
        CHECK(folded.size() == (codim == 1 ? 23u : 39u));
        CHECK(compare_with_reference(folded, ref(), codim).empty());

        ReferenceTables cut = ref();
        cut.remove(codim == 1 ? TableId{1, 4} : TableId{2, 1});
        auto d = compare_with_reference(fold_families(inst, cut.patterns(), &cut), cut, codim);
        REQUIRE(d.entries.size() == 1);
        CHECK(d.entries[0].kind == DiffEntry::Kind::Extra);
        CHECK(d.entries[0].row == (codim == 1 ? "(3,5,7,11; 25)" : "(2,2,3,3,3; 6,6)"));
    }
}

TEST_CASE("compare_with_reference reports missing rows and early instances")
{
    auto folded = fold_families(enumerate_candidates(30, 1), ref().patterns(), &ref());
    auto d = compare_with_reference(folded, ref(), 1);
    CHECK(d.count(DiffEntry::Kind::Missing) == 8);
    CHECK(d.count(DiffEntry::Kind::Extra) == 1);
    CHECK(d.count(DiffEntry::Kind::RangeMismatch) == 0);
}

TEST_CASE("csv export")
{
    auto rows = fold_families({family_S2n(1), family_S2n(2), family_S10()}, ref().patterns(), &ref());
    std::string csv = to_csv(rows, ref());
    CHECK(csv.rfind(csv_header() + "\n", 0) == 0);
    CHECK(csv.find("T1,10,1 2 3 5,10,,e: 1 | f: 7/10") != std::string::npos);
    CHECK(csv.find("T2,38,1 1 n n 2n-1,2n 2n,1..2,(2n+3)/(4n+2)") != std::string::npos);
}

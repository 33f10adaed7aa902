#pragma once

#include "wps/intersect.hpp"
#include "wps/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wps {

struct LctValue {
    enum class Kind { Exact, LowerBound, Branch };
    Kind kind = Kind::Exact;
    std::vector<Rational> values;
    // Footnote letters and their texts, one per value, for branch entries.
    std::vector<std::string> labels;
    std::vector<std::string> conditions;

    Rational minimum() const;
    std::string to_string() const;
};

std::string kind_name(LctValue::Kind k);

// c0 + c1 n
struct AffineInt {
    long long c0 = 0;
    long long c1 = 0;
    long long at(long long n) const { return c0 + c1 * n; }
    std::string to_string() const;
};

struct FamilyPattern {
    TableId table_id;
    std::vector<AffineInt> weights;
    std::vector<AffineInt> degrees;
    int n_min = 1;

    SurfaceFamily instantiate(int n) const;
    // Parameter n (any integer, not only n >= n_min) at which f is an instance.
    std::optional<int> match(const SurfaceFamily& f) const;
    std::string to_string() const;
};

struct ReferenceRow {
    TableId id;
    std::optional<SurfaceFamily> fixed;
    std::optional<FamilyPattern> pattern;
    LctValue lct;
    // lct = (num.c0 + num.c1 n) / (den.c0 + den.c1 n) for parametric values
    std::optional<std::pair<AffineInt, AffineInt>> lct_formula;

    int codim() const;
    bool parametric() const { return pattern.has_value(); }
    SurfaceFamily instance(int n = 0) const;
    LctValue lct_at(std::optional<int> n) const;
    std::string tuple_string() const;
};

struct ReferenceTables {
    std::string schema;
    std::vector<ReferenceRow> rows;

    const ReferenceRow* find(const TableId& id) const;
    // Row that f is an instance of; parametric rows match for n >= n_min only.
    const ReferenceRow* match(const SurfaceFamily& f, std::optional<int>* n = nullptr) const;
    std::vector<FamilyPattern> patterns() const;
    std::vector<SurfaceFamily> instances(int n_max) const;
    void remove(const TableId& id);
};

std::string default_reference_path();
ReferenceTables load_reference_tables(const std::string& path = "");
ReferenceTables parse_reference_tables(const nlohmann::json& j);

// Every index-one, well-formed, quasi-smooth, non-linear-cone family with
// max weight <= bound, sorted by (weights, degrees).
std::vector<SurfaceFamily> enumerate_candidates(int bound, int codim);

struct TableRow {
    SurfaceFamily family;  // the single instance, or the first instance of a folded family
    std::optional<FamilyPattern> pattern;
    int n_first = 0;
    int n_last = 0;
    std::optional<TableId> table_id;

    bool parametric() const { return pattern.has_value(); }
    std::string tuple_string() const;
};

std::vector<TableRow> fold_families(const std::vector<SurfaceFamily>& rows, const std::vector<FamilyPattern>& patterns,
                                    const ReferenceTables* ref = nullptr);

LctValue lct_lookup(const ReferenceTables& ref, const SurfaceFamily& f);

enum class Justification { CylinderExistsDp4, LctGe1, SmoothLowDegree, ThmAbsence, ThmCylNGe2 };
std::string justification_name(Justification j);

struct Verdict {
    bool has_cylinder = false;
    Justification justification = Justification::LctGe1;
    std::string citation;
};

Verdict cylinder_verdict(const ReferenceTables& ref, const SurfaceFamily& f);

struct DiffEntry {
    enum class Kind { Missing, Extra, RangeMismatch };
    Kind kind;
    std::string row;
    std::string detail;
};

struct ReferenceDiff {
    std::vector<DiffEntry> entries;
    bool empty() const { return entries.empty(); }
    std::size_t count(DiffEntry::Kind k) const;
};

std::string diff_kind_name(DiffEntry::Kind k);

ReferenceDiff compare_with_reference(const std::vector<TableRow>& folded, const ReferenceTables& ref, int codim);

std::string csv_header();
std::string csv_line(const TableRow& row, const ReferenceTables& ref);
std::string to_csv(const std::vector<TableRow>& rows, const ReferenceTables& ref);

nlohmann::json to_json(const LctValue& v);
nlohmann::json to_json(const TableRow& row, const ReferenceTables* ref = nullptr);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ReferenceDiff& d);

}  // namespace wps

#include "wps/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wps {

using nlohmann::json;

std::string TableRow::tuple_string() const
{
    return pattern ? pattern->to_string() : family.to_string();
}

std::vector<TableRow> fold_families(const std::vector<SurfaceFamily>& rows, const std::vector<FamilyPattern>& patterns,
                                    const ReferenceTables* ref)
{
    std::vector<TableRow> out;
    std::map<std::size_t, std::vector<int>> hits;
    for (const auto& f : rows) {
        bool folded = false;
        for (std::size_t p = 0; p < patterns.size() && !folded; ++p) {
            auto n = patterns[p].match(f);
            if (n && *n >= patterns[p].n_min) {
                hits[p].push_back(*n);
                folded = true;
            }
        }
        if (folded) continue;
        TableRow r{f, std::nullopt, 0, 0, std::nullopt};
        r.family.table_id.reset();
        r.family.n.reset();
        if (ref)
            if (const ReferenceRow* m = ref->match(f); m && !m->parametric()) r.table_id = m->id;
        out.push_back(std::move(r));
    }
    for (auto& [p, ns] : hits) {
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (std::size_t i = 1; i < ns.size(); ++i)
            if (ns[i] != ns[i - 1] + 1)
                throw std::runtime_error("family gap: " + patterns[p].table_id.to_string() + " found at n=" +
                                         std::to_string(ns[i - 1]) + " and n=" + std::to_string(ns[i]));
        const FamilyPattern& pat = patterns[p];
        out.push_back(TableRow{pat.instantiate(ns.front()), pat, ns.front(), ns.back(), pat.table_id});
    }
    std::sort(out.begin(), out.end(), [](const TableRow& a, const TableRow& b) {
        auto key = [](const TableRow& r) {
            return std::make_tuple(r.table_id ? 0 : 1, r.table_id ? r.table_id->table : 0, r.table_id ? r.table_id->row : 0,
                                   r.family.weights, r.family.degrees);
        };
        return key(a) < key(b);
    });
    return out;
}

LctValue lct_lookup(const ReferenceTables& ref, const SurfaceFamily& f)
{
    std::optional<int> n;
    const ReferenceRow* row = ref.match(f, &n);
    if (!row) throw std::invalid_argument(f.to_string() + " not in reference tables");
    return row->lct_at(n);
}

std::string justification_name(Justification j)
{
    switch (j) {
    case Justification::CylinderExistsDp4: return "CYLINDER_EXISTS_DP4";
    case Justification::LctGe1: return "LCT_GE_1";
    case Justification::SmoothLowDegree: return "SMOOTH_LOW_DEGREE";
    case Justification::ThmAbsence: return "THM_ABSENCE";
    case Justification::ThmCylNGe2: return "THM_CYL_N_GE_2";
    }
    return "?";
}

Verdict cylinder_verdict(const ReferenceTables& ref, const SurfaceFamily& f)
{
    std::optional<int> n;
    const ReferenceRow* row = ref.match(f, &n);
    if (!row) throw std::invalid_argument(f.to_string() + " not in reference tables");

    if (auto k = s2n_parameter(f)) {
        if (*k == 1)
            return {true, Justification::CylinderExistsDp4,
                    "quartic del Pezzo surface (2,2) in P^4 contains an anticanonical polar cylinder"};
        return {false, Justification::ThmCylNGe2, "S_{2n,2n} has no anticanonical polar cylinder for n >= 2"};
    }
    if (f.same_surface(family_S10()) || f.same_surface(family_S15()) || f.same_surface(family_S6_8()))
        return {false, Justification::ThmAbsence, "S_10, S_15 and S_{6,8} have no anticanonical polar cylinder"};
    if (f.degrees.size() == 1 && coordinate_singularities(f).empty() && anticanonical_square(f) <= 3)
        return {false, Justification::SmoothLowDegree,
                "smooth del Pezzo surfaces of degree <= 3 have no anticanonical polar cylinder"};

    LctValue lct = row->lct_at(n);
    if (lct.minimum() < 1)
        throw std::logic_error("justification/data mismatch: " + row->id.to_string() + " has lct " + lct.to_string());
    return {false, Justification::LctGe1, "lct(S, -K_S) >= 1 excludes anticanonical polar cylinders"};
}

std::size_t ReferenceDiff::count(DiffEntry::Kind k) const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const DiffEntry& e) { return e.kind == k; }));
}

std::string diff_kind_name(DiffEntry::Kind k)
{
    switch (k) {
    case DiffEntry::Kind::Missing: return "missing";
    case DiffEntry::Kind::Extra: return "extra";
    case DiffEntry::Kind::RangeMismatch: return "range_mismatch";
    }
    return "?";
}

ReferenceDiff compare_with_reference(const std::vector<TableRow>& folded, const ReferenceTables& ref, int codim)
{
    ReferenceDiff diff;
    std::vector<bool> used(folded.size(), false);
    for (const auto& r : ref.rows) {
        if (r.codim() != codim) continue;
        bool found = false;
        for (std::size_t i = 0; i < folded.size() && !found; ++i) {
            const TableRow& t = folded[i];
            if (used[i]) continue;
            if (r.pattern && t.pattern && t.pattern->table_id == r.id) {
                found = used[i] = true;
                if (t.n_first != r.pattern->n_min)
                    diff.entries.push_back({DiffEntry::Kind::RangeMismatch, r.id.to_string() + " " + r.tuple_string(),
                                            "first instance at n=" + std::to_string(t.n_first) + ", expected n=" +
                                                std::to_string(r.pattern->n_min)});
            } else if (r.fixed && !t.pattern && t.family.same_surface(*r.fixed)) {
                found = used[i] = true;
            }
        }
        if (!found)
            diff.entries.push_back({DiffEntry::Kind::Missing, r.id.to_string() + " " + r.tuple_string(), "not produced"});
    }
    for (std::size_t i = 0; i < folded.size(); ++i) {
        if (used[i] || static_cast<int>(folded[i].family.degrees.size()) != codim) continue;
        std::string detail = "not in reference tables";
        for (const auto& p : ref.patterns())
            if (auto k = p.match(folded[i].family))
                detail = "instance of " + p.table_id.to_string() + " at n=" + std::to_string(*k) + " outside n >= " +
                         std::to_string(p.n_min);
        diff.entries.push_back({DiffEntry::Kind::Extra, folded[i].tuple_string(), detail});
    }
    return diff;
}

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string lct_text(const TableRow& row, const ReferenceTables& ref)
{
    std::optional<int> n;
    const ReferenceRow* r = ref.match(row.family, &n);
    if (!r) return "";
    if (r->lct_formula)
        return "(" + r->lct_formula->first.to_string() + ")/(" + r->lct_formula->second.to_string() + ")";
    return r->lct.to_string();
}

}  // namespace

std::string csv_header()
{
    return "table,no,weights,degrees,n_range,lct";
}

std::string csv_line(const TableRow& row, const ReferenceTables& ref)
{
    std::ostringstream os;
    std::string w, d;
    if (row.pattern) {
        for (std::size_t i = 0; i < row.pattern->weights.size(); ++i) w += (i ? " " : "") + row.pattern->weights[i].to_string();
        for (std::size_t i = 0; i < row.pattern->degrees.size(); ++i) d += (i ? " " : "") + row.pattern->degrees[i].to_string();
    } else {
        for (std::size_t i = 0; i < row.family.weights.size(); ++i) w += (i ? " " : "") + std::to_string(row.family.weights[i]);
        for (std::size_t i = 0; i < row.family.degrees.size(); ++i) d += (i ? " " : "") + std::to_string(row.family.degrees[i]);
    }
    os << (row.table_id ? "T" + std::to_string(row.table_id->table) : "") << ','
       << (row.table_id ? std::to_string(row.table_id->row) : "") << ',' << w << ',' << d << ','
       << (row.pattern ? std::to_string(row.n_first) + ".." + std::to_string(row.n_last) : "") << ','
       << csv_quote(lct_text(row, ref));
    return os.str();
}

std::string to_csv(const std::vector<TableRow>& rows, const ReferenceTables& ref)
{
    std::string s = csv_header() + "\n";
    for (const auto& r : rows) s += csv_line(r, ref) + "\n";
    return s;
}

json to_json(const LctValue& v)
{
    json j{{"kind", kind_name(v.kind)}};
    json vals = json::array();
    for (const auto& q : v.values) vals.push_back(wps::to_string(q));
    j["values"] = vals;
    if (v.kind == LctValue::Kind::Branch) {
        j["labels"] = v.labels;
        j["conditions"] = v.conditions;
    }
    return j;
}

json to_json(const TableRow& row, const ReferenceTables* ref)
{
    json j{{"weights", row.family.weights.values()}, {"degrees", row.family.degrees.values()}};
    j["table_id"] = row.table_id ? json(row.table_id->to_string()) : json(nullptr);
    if (row.pattern) {
        j["pattern"] = row.pattern->to_string();
        j["n_first"] = row.n_first;
        j["n_last"] = row.n_last;
    }
    if (ref) {
        if (const ReferenceRow* r = ref->match(row.family); r && r->lct_formula)
            j["lct_formula"] = "(" + r->lct_formula->first.to_string() + ")/(" + r->lct_formula->second.to_string() + ")";
        else if (r)
            j["lct"] = to_json(r->lct);
    }
    return j;
}

json to_json(const Verdict& v)
{
    return json{{"has_cylinder", v.has_cylinder},
                {"justification", justification_name(v.justification)},
                {"citation", v.citation}};
}

json to_json(const ReferenceDiff& d)
{
    json a = json::array();
    for (const auto& e : d.entries) a.push_back(json{{"kind", diff_kind_name(e.kind)}, {"row", e.row}, {"detail", e.detail}});
    return a;
}

}  // namespace wps

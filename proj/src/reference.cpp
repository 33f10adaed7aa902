#include "wps/classify.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace wps {

using nlohmann::json;

Rational LctValue::minimum() const
{
    if (values.empty()) throw std::logic_error("empty lct value");
    return *std::min_element(values.begin(), values.end());
}

std::string kind_name(LctValue::Kind k)
{
    switch (k) {
    case LctValue::Kind::Exact: return "exact";
    case LctValue::Kind::LowerBound: return "lower_bound";
    case LctValue::Kind::Branch: return "branch";
    }
    return "?";
}

std::string LctValue::to_string() const
{
    if (kind == Kind::Exact) return wps::to_string(values.at(0));
    if (kind == Kind::LowerBound) return ">=" + wps::to_string(values.at(0));
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += " | ";
        s += (i < labels.size() ? labels[i] : std::to_string(i)) + ": " + wps::to_string(values[i]);
    }
    return s;
}

std::string AffineInt::to_string() const
{
    if (c1 == 0) return std::to_string(c0);
    std::string s = (c1 == 1 ? "" : std::to_string(c1)) + "n";
    if (c0 > 0) s += "+" + std::to_string(c0);
    if (c0 < 0) s += std::to_string(c0);
    return s;
}

SurfaceFamily FamilyPattern::instantiate(int n) const
{
    std::vector<int> w, d;
    for (const auto& a : weights) w.push_back(static_cast<int>(a.at(n)));
    for (const auto& a : degrees) d.push_back(static_cast<int>(a.at(n)));
    for (int v : w)
        if (v < 1) throw std::invalid_argument(table_id.to_string() + " has no instance at n=" + std::to_string(n));
    SurfaceFamily f = make_family(std::move(w), std::move(d));
    f.table_id = table_id;
    f.n = n;
    return f;
}

std::optional<int> FamilyPattern::match(const SurfaceFamily& f) const
{
    if (f.weights.size() != weights.size() || f.degrees.size() != degrees.size()) return std::nullopt;
    std::vector<long long> cands;
    for (const auto& a : weights)
        if (a.c1 != 0)
            for (int v : f.weights)
                if ((v - a.c0) % a.c1 == 0) cands.push_back((v - a.c0) / a.c1);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (long long n : cands) {
        bool positive = std::all_of(weights.begin(), weights.end(), [&](const AffineInt& a) { return a.at(n) >= 1; });
        if (!positive) continue;
        if (instantiate(static_cast<int>(n)).same_surface(f)) return static_cast<int>(n);
    }
    return std::nullopt;
}

std::string FamilyPattern::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + weights[i].to_string();
    s += "; ";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + degrees[i].to_string();
    return s + ")";
}

int ReferenceRow::codim() const
{
    return static_cast<int>(pattern ? pattern->degrees.size() : fixed->degrees.size());
}

SurfaceFamily ReferenceRow::instance(int n) const
{
    if (pattern) return pattern->instantiate(n);
    return *fixed;
}

LctValue ReferenceRow::lct_at(std::optional<int> n) const
{
    if (!lct_formula) return lct;
    if (!n) throw std::invalid_argument(id.to_string() + " lct needs a parameter value");
    LctValue v;
    v.kind = LctValue::Kind::Exact;
    v.values.push_back(make_rational(lct_formula->first.at(*n), lct_formula->second.at(*n)));
    return v;
}

std::string ReferenceRow::tuple_string() const
{
    return pattern ? pattern->to_string() : fixed->to_string();
}

const ReferenceRow* ReferenceTables::find(const TableId& id) const
{
    for (const auto& r : rows)
        if (r.id == id) return &r;
    return nullptr;
}

const ReferenceRow* ReferenceTables::match(const SurfaceFamily& f, std::optional<int>* n) const
{
    for (const auto& r : rows) {
        if (r.fixed && r.fixed->same_surface(f)) {
            if (n) n->reset();
            return &r;
        }
        if (r.pattern) {
            auto k = r.pattern->match(f);
            if (k && *k >= r.pattern->n_min) {
                if (n) *n = k;
                return &r;
            }
        }
    }
    return nullptr;
}

std::vector<FamilyPattern> ReferenceTables::patterns() const
{
    std::vector<FamilyPattern> out;
    for (const auto& r : rows)
        if (r.pattern) out.push_back(*r.pattern);
    return out;
}

std::vector<SurfaceFamily> ReferenceTables::instances(int n_max) const
{
    std::vector<SurfaceFamily> out;
    for (const auto& r : rows) {
        if (r.pattern) {
            for (int n = r.pattern->n_min; n <= n_max; ++n) out.push_back(r.pattern->instantiate(n));
        } else {
            SurfaceFamily f = *r.fixed;
            f.table_id = r.id;
            out.push_back(f);
        }
    }
    return out;
}

void ReferenceTables::remove(const TableId& id)
{
    std::erase_if(rows, [&](const ReferenceRow& r) { return r.id == id; });
}

std::string default_reference_path()
{
    return std::string(WPS_DATA_DIR) + "/reference_tables.json";
}

namespace {

TableId parse_table_id(const json& r)
{
    std::string t = r.at("table").get<std::string>();
    if (t.size() != 2 || t[0] != 'T') throw std::runtime_error("bad table name " + t);
    return TableId{t[1] - '0', r.at("row_no").get<int>()};
}

std::vector<AffineInt> parse_affine_list(const json& a)
{
    std::vector<AffineInt> out;
    for (const auto& e : a) out.push_back(AffineInt{e.at(0).get<long long>(), e.at(1).get<long long>()});
    return out;
}

LctValue parse_lct(const json& j)
{
    LctValue v;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact") v.kind = LctValue::Kind::Exact;
    else if (kind == "lower_bound") v.kind = LctValue::Kind::LowerBound;
    else if (kind == "branch") v.kind = LctValue::Kind::Branch;
    else throw std::runtime_error("unknown lct kind " + kind);
    if (j.contains("values"))
        for (const auto& s : j.at("values")) v.values.push_back(parse_rational(s.get<std::string>()));
    if (j.contains("labels")) v.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("conditions")) v.conditions = j.at("conditions").get<std::vector<std::string>>();
    if (v.kind == LctValue::Kind::Branch) {
        if (v.values.size() < 2 || v.labels.size() != v.values.size() || v.conditions.size() != v.values.size())
            throw std::runtime_error("branch lct needs >= 2 labelled values");
    } else if (v.values.size() > 1) {
        throw std::runtime_error("exact and lower-bound lct carry one value");
    }
    return v;
}

}  // namespace

ReferenceTables parse_reference_tables(const json& j)
{
    ReferenceTables t;
    t.schema = j.at("schema").get<std::string>();
    if (t.schema != "wps-reference/1") throw std::runtime_error("unsupported reference schema " + t.schema);
    for (const auto& r : j.at("rows")) {
        ReferenceRow row;
        row.id = parse_table_id(r);
        row.lct = parse_lct(r.at("lct"));
        if (r.contains("parametric")) {
            const auto& p = r.at("parametric");
            FamilyPattern pat;
            pat.table_id = row.id;
            pat.weights = parse_affine_list(p.at("pattern").at("weights"));
            pat.degrees = parse_affine_list(p.at("pattern").at("degrees"));
            pat.n_min = p.value("n_min", 1);
            row.pattern = pat;
        } else {
            SurfaceFamily f = make_family(r.at("weights").get<std::vector<int>>(), r.at("degrees").get<std::vector<int>>());
            f.table_id = row.id;
            row.fixed = f;
        }
        const auto& l = r.at("lct");
        if (l.contains("formula")) {
            const auto& num = l.at("formula").at("num");
            const auto& den = l.at("formula").at("den");
            row.lct_formula = std::make_pair(AffineInt{num.at(0).get<long long>(), num.at(1).get<long long>()},
                                             AffineInt{den.at(0).get<long long>(), den.at(1).get<long long>()});
        } else if (row.lct.values.empty()) {
            throw std::runtime_error(row.id.to_string() + " has no lct values");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

ReferenceTables load_reference_tables(const std::string& path)
{
    std::string p = path.empty() ? default_reference_path() : path;
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open reference tables " + p);
    return parse_reference_tables(json::parse(in));
}

}  // namespace wps

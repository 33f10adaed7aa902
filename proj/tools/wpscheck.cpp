#include "wps/classify.hpp"
#include "wps/graded.hpp"
#include "wps/intersect.hpp"
#include "wps/lattice.hpp"
#include "wps/pencil.hpp"
#include "wps/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace wps;
using nlohmann::json;

namespace {

enum class Format { Json, Csv, Pretty };

struct Common {
    std::string format = "pretty";
    bool no_meta = false;
    std::string reference;
};

Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "pretty") return Format::Pretty;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::vector<int> parse_list(const std::string& text)
{
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = std::stoi(item, &used);
        if (used != item.size() || x < 1) throw std::invalid_argument("bad entry '" + item + "' in '" + text + "'");
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty list");
    return v;
}

TableId parse_table_id(const std::string& text)
{
    // "T2.38"
    auto dot = text.find('.');
    if (text.size() < 4 || text[0] != 'T' || dot == std::string::npos)
        throw std::invalid_argument("family selector must look like T2.38, got '" + text + "'");
    return {std::stoi(text.substr(1, dot - 1)), std::stoi(text.substr(dot + 1))};
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

void print_checks_csv(const Report& r, std::ostream& os)
{
    os << "id,locator,expected,computed,pass\n";
    for (const auto& c : r.checks)
        os << csv_escape(c.id) << "," << csv_escape(c.locator) << "," << csv_escape(c.expected) << ","
           << csv_escape(c.computed) << "," << (c.pass ? "true" : "false") << "\n";
}

void print_checks_pretty(const Report& r, std::ostream& os)
{
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.locator;
        if (c.pass) os << "  = " << c.computed << "\n";
        else os << "  expected " << c.expected << ", computed " << c.computed << "\n";
    }
    os << r.passed() << "/" << r.checks.size() << " checks passed\n";
}

int finish(const Report& r, const Common& common, double seconds, const std::string& pretty_body = "",
           const std::string& csv_body = "")
{
    switch (parse_format(common.format)) {
    case Format::Json: {
        json j = r.to_json(!common.no_meta);
        if (!common.no_meta) j["meta"]["elapsed_seconds"] = seconds;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        if (!csv_body.empty()) std::cout << csv_body;
        else print_checks_csv(r, std::cout);
        break;
    case Format::Pretty:
        std::cout << pretty_body;
        print_checks_pretty(r, std::cout);
        break;
    }
    return r.all_pass() ? 0 : 2;
}

ReferenceTables reference(const Common& common)
{
    return load_reference_tables(common.reference);
}

int cmd_classify(const Common& common, int bound, int codim)
{
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (codim != 0 && codim != 1 && codim != 2) throw std::invalid_argument("codim must be 1 or 2");
    auto t0 = std::chrono::steady_clock::now();
    ReferenceTables ref = reference(common);
    Report rep;
    rep.command = "classify";
    rep.args = {{"bound", bound}, {"codim", codim}};
    std::string pretty, csv = csv_header() + "\n";
    for (int c : {1, 2}) {
        if (codim != 0 && c != codim) continue;
        auto found = enumerate_candidates(bound, c);
        auto folded = fold_families(found, ref.patterns(), &ref);
        auto diff = compare_with_reference(folded, ref, c);
        std::size_t expected_rows = 0;
        for (const auto& row : ref.rows) expected_rows += row.codim() == c;

        json rows = json::array();
        for (const auto& row : folded) rows.push_back(to_json(row, &ref));
        const std::string key = "codim" + std::to_string(c);
        rep.payload[key] = {{"candidates", found.size()}, {"rows", rows}, {"diff", to_json(diff)}};
        rep.add(check_equal("rows." + key, "table T" + std::to_string(c) + ": number of folded rows",
                            static_cast<long>(expected_rows), static_cast<long>(folded.size())));
        rep.add(check_true("diff." + key, "table T" + std::to_string(c) + ": no missing or extra rows", diff.empty(),
                           std::to_string(diff.entries.size()) + " differences"));

        pretty += "codimension " + std::to_string(c) + ": " + std::to_string(folded.size()) + " rows\n";
        for (const auto& row : folded) {
            pretty += "  " + (row.table_id ? row.table_id->to_string() : std::string("--")) + "  " +
                      row.tuple_string() + "\n";
            csv += csv_line(row, ref) + "\n";
        }
        for (const auto& e : diff.entries)
            pretty += "  diff " + diff_kind_name(e.kind) + " " + e.row + ": " + e.detail + "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, common, secs, pretty, csv);
}

int cmd_check(const Common& common, const std::string& weights, const std::string& degrees)
{
    auto t0 = std::chrono::steady_clock::now();
    SurfaceFamily f = make_family(parse_list(weights), parse_list(degrees));
    Report rep;
    rep.command = "check";
    rep.args = {{"weights", f.weights.values()}, {"degrees", f.degrees.values()}};
    const int idx = index(f.weights, f.degrees);
    auto qs = quasi_smooth_report(f.weights, f.degrees);
    const std::string loc = f.to_string();
    rep.add(check_equal("index", loc + ": sum of weights minus sum of degrees", 1, idx));
    rep.add(check_true("well_formed", loc + ": well-formed", surface_well_formed(f.weights, f.degrees)));
    rep.add(check_true("quasi_smooth", loc + ": quasi-smooth", qs.quasi_smooth));
    rep.add(check_true("not_linear_cone", loc + ": not a linear cone", !is_linear_cone(f.weights, f.degrees)));

    json sing = json::array();
    std::string pretty = loc + "\n  singular points:";
    try {
        for (const auto& p : coordinate_singularities(f)) {
            sing.push_back({{"point", p.coordinate_name(f.weights.size())}, {"type", p.type_string()}});
            pretty += " " + p.coordinate_name(f.weights.size()) + ": " + p.type_string();
        }
        if (sing.empty()) pretty += " none";
    } catch (const std::exception& e) {
        sing = e.what();
        pretty += std::string(" ") + e.what();
    }
    pretty += "\n  K^2 = " + to_string(anticanonical_square(f)) + "\n";
    rep.payload = {{"index", idx},
                   {"anticanonical_square", to_string(anticanonical_square(f))},
                   {"singular_points", sing},
                   {"quasi_smooth_reason", qs.reason}};
    try {
        rep.append(verify_inline_identities(f));
    } catch (const std::invalid_argument&) {
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, common, secs, pretty);
}

int cmd_verdict(const Common& common, const std::vector<std::string>& tuple, const std::string& family,
                std::optional<int> n, bool all, int n_max)
{
    auto t0 = std::chrono::steady_clock::now();
    ReferenceTables ref = reference(common);
    std::vector<SurfaceFamily> targets;
    Report rep;
    rep.command = "verdict";
    if (all) {
        if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
        targets = ref.instances(n_max);
        rep.args = {{"all", true}, {"n_max", n_max}};
    } else if (!family.empty()) {
        const ReferenceRow* row = ref.find(parse_table_id(family));
        if (!row) throw std::invalid_argument("no reference row " + family);
        if (row->parametric() && !n) throw std::invalid_argument(family + " is parametric; pass --n");
        targets.push_back(row->parametric() ? row->instance(*n) : row->instance());
        rep.args = {{"family", family}};
        if (n) rep.args["n"] = *n;
    } else if (tuple.size() == 2) {
        targets.push_back(make_family(parse_list(tuple[0]), parse_list(tuple[1])));
        rep.args = {{"weights", targets[0].weights.values()}, {"degrees", targets[0].degrees.values()}};
    } else {
        throw std::invalid_argument("verdict needs WEIGHTS DEGREES, --family or --all");
    }

    json out = json::array();
    std::string pretty;
    int cylinders = 0;
    bool cylinder_is_quadrics = false;
    for (const auto& f : targets) {
        std::optional<int> pn;
        const ReferenceRow* row = ref.match(f, &pn);
        if (!row) {
            rep.add(check_true("reference", f.to_string() + ": listed in the reference tables", false));
            continue;
        }
        Verdict v = cylinder_verdict(ref, f);
        LctValue lct = lct_lookup(ref, f);
        json j = to_json(v);
        j["surface"] = f.to_string();
        j["table_id"] = row->id.to_string();
        if (pn) j["n"] = *pn;
        j["lct"] = to_json(lct);
        out.push_back(j);
        cylinders += v.has_cylinder;
        if (v.has_cylinder && f.same_surface(make_family({1, 1, 1, 1, 1}, {2, 2}))) cylinder_is_quadrics = true;
        const std::string loc = row->id.to_string() + " " + f.to_string();
        rep.add(check_true("reference", loc + ": listed in the reference tables", true));
        if (v.justification == Justification::LctGe1)
            rep.add(check_true("guard", loc + ": stored lct minimum >= 1", lct.minimum() >= 1, lct.to_string()));
        pretty += loc + "  " + (v.has_cylinder ? "cylinder" : "no cylinder") + "  " +
                  justification_name(v.justification) + "  lct " + lct.to_string() + "\n";
    }
    if (all) {
        rep.add(check_equal("cylinders", "all instances: number with a cylinder", 1, cylinders));
        rep.add(check_true("cylinder.surface", "all instances: the cylinder is (1,1,1,1,1; 2,2)", cylinder_is_quadrics));
        rep.add(check_equal("instances", "all instances: count", 89, static_cast<long>(targets.size())));
    }
    rep.payload = {{"verdicts", out}, {"cylinders", cylinders}};
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, common, secs, pretty);
}

int cmd_chain(const Common& common, int n)
{
    auto t0 = std::chrono::steady_clock::now();
    if (n < 1) throw std::invalid_argument("chain needs n >= 1");
    ChainReport cr = run_chain_S2n(n);
    Report rep;
    rep.command = "chain";
    rep.args = {{"n", n}};
    rep.checks = cr.checks;
    json full = to_json(cr);
    rep.payload = {{"steps", full["steps"]}, {"notes", full["notes"]}};
    std::string pretty;
    for (const auto& s : cr.steps)
        pretty += s.label + "  K^2 = " + to_string(s.K2) + "  rank " + std::to_string(s.rank) + "\n";
    for (const auto& note : cr.notes) pretty += "note: " + note + "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, common, secs, pretty);
}

int cmd_pencil(const Common& common, int n, std::uint64_t seed, std::string field, bool normalized, bool emit_poly)
{
    auto t0 = std::chrono::steady_clock::now();
    if (field.empty()) {
        const char* env = std::getenv("WPSCHECK_PRIME");
        field = env ? std::string("p:") + env : "p:" + std::to_string(kDefaultPrime);
    }
    PencilRun run = verify_LR({n, seed, FieldSpec::parse(field), normalized});
    if (emit_poly) {
        std::cout << run.discriminant_terms;
        return run.report.all_pass() ? 0 : 2;
    }
    std::string pretty = "discriminant degree " + std::to_string(run.discriminant_degree) + " (bound " +
                         std::to_string(run.degree_bound) + ")\n";
    if (run.report.payload.contains("lines"))
        for (const auto& l : run.report.payload["lines"]) pretty += "line: " + l.get<std::string>() + "\n";
    for (const auto& note : run.report.payload["notes"]) pretty += "note: " + note.get<std::string>() + "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(run.report, common, secs, pretty);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks for del Pezzo surfaces in weighted projective spaces"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json, csv or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_flag("--no-meta", common.no_meta, "omit version, timestamp and timing from JSON");
        sub->add_option("--reference", common.reference, "reference table JSON");
    };

    int bound = 150, codim = 0;
    auto* classify = app.add_subcommand("classify", "enumerate surfaces and compare with the reference tables");
    classify->add_option("--bound", bound, "largest weight");
    classify->add_option("--codim", codim, "1 or 2; both when omitted");
    add_common(classify);

    std::string cw, cd;
    auto* check = app.add_subcommand("check", "index, well-formedness, quasi-smoothness and singularities");
    check->add_option("weights", cw, "comma-separated weights")->required();
    check->add_option("degrees", cd, "comma-separated degrees")->required();
    add_common(check);

    std::vector<std::string> vtuple;
    std::string vfamily;
    std::optional<int> vn;
    bool vall = false;
    int vn_max = 10;
    auto* verdict = app.add_subcommand("verdict", "cylinder verdict for one surface, one row or all rows");
    verdict->add_option("tuple", vtuple, "WEIGHTS DEGREES")->expected(0, 2);
    verdict->add_option("--family", vfamily, "reference row such as T2.38");
    verdict->add_option("--n", vn, "parameter of a parametric row");
    verdict->add_flag("--all", vall, "every reference row");
    verdict->add_option("--n-max", vn_max, "largest parameter with --all");
    add_common(verdict);

    int chain_n = 1;
    auto* chain = app.add_subcommand("chain", "blow-up and contraction chain of S_{2n,2n}");
    chain->add_option("--n", chain_n)->required();
    add_common(chain);

    int pn = 1;
    std::uint64_t pseed = 0;
    std::string pfield;
    bool pnorm = false, pemit = false;
    auto* pencil = app.add_subcommand("pencil", "reducible members of the pencil on S_{2n,2n}");
    pencil->add_option("--n", pn)->required();
    pencil->add_option("--seed", pseed);
    pencil->add_option("--field", pfield, "q or p:<prime>; default p:$WPSCHECK_PRIME or p:2147483647");
    pencil->add_flag("--normalized", pnorm, "use the chart wx + zt = 0");
    pencil->add_flag("--emit-poly", pemit, "print the discriminant as 'coef exponent' lines");
    add_common(pencil);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classify) return cmd_classify(common, bound, codim);
        if (*check) return cmd_check(common, cw, cd);
        if (*verdict) return cmd_verdict(common, vtuple, vfamily, vn, vall, vn_max);
        if (*chain) return cmd_chain(common, chain_n);
        if (*pencil) return cmd_pencil(common, pn, pseed, pfield, pnorm, pemit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#pragma once

#include "wps/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wps {

struct CheckEntry {
    std::string id;
    std::string locator;
    std::string expected;
    std::string computed;
    bool pass = false;
};

CheckEntry check_equal(std::string id, std::string locator, const Rational& expected, const Rational& computed);
CheckEntry check_true(std::string id, std::string locator, bool holds, std::string computed = "");
CheckEntry check_equal_text(std::string id, std::string locator, const std::string& expected, const std::string& computed);

struct Report {
    std::string command;
    nlohmann::json args = nlohmann::json::object();
    std::vector<CheckEntry> checks;
    nlohmann::json payload = nlohmann::json::object();

    void add(CheckEntry e) { checks.push_back(std::move(e)); }
    void append(const std::vector<CheckEntry>& es) { checks.insert(checks.end(), es.begin(), es.end()); }
    std::size_t passed() const;
    bool all_pass() const { return passed() == checks.size(); }
    nlohmann::json to_json(bool with_meta) const;
};

nlohmann::json to_json(const CheckEntry& e);

inline constexpr const char* kReportSchema = "wps-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace wps

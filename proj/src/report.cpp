#include "wps/report.hpp"

#include <chrono>
#include <ctime>

namespace wps {

CheckEntry check_equal(std::string id, std::string locator, const Rational& expected, const Rational& computed)
{
    return {std::move(id), std::move(locator), to_string(expected), to_string(computed), expected == computed};
}

CheckEntry check_true(std::string id, std::string locator, bool holds, std::string computed)
{
    return {std::move(id), std::move(locator), "true", computed.empty() ? (holds ? "true" : "false") : std::move(computed),
            holds};
}

CheckEntry check_equal_text(std::string id, std::string locator, const std::string& expected, const std::string& computed)
{
    return {std::move(id), std::move(locator), expected, computed, expected == computed};
}

std::size_t Report::passed() const
{
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
}

nlohmann::json to_json(const CheckEntry& e)
{
    return {{"id", e.id}, {"locator", e.locator}, {"expected", e.expected}, {"computed", e.computed}, {"pass", e.pass}};
}

nlohmann::json Report::to_json(bool with_meta) const
{
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["args"] = args;
    if (with_meta) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["meta"] = {{"version", kToolVersion}, {"generated", buf}};
    }
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back(wps::to_json(c));
    j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", checks.size() - passed()}};
    if (!payload.empty()) j["result"] = payload;
    return j;
}

}  // namespace wps

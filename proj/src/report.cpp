#include "ccn/report.hpp"

namespace ccn {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "fail";
}

void Report::add(std::string name, std::size_t residual, double elapsed_ms, std::string detail) {
    checks.push_back({std::move(name), residual == 0 ? Status::pass : Status::fail, residual, elapsed_ms,
                      std::move(detail)});
}

void Report::add_status(std::string name, Status s, std::string detail, double elapsed_ms) {
    checks.push_back({std::move(name), s, 0, elapsed_ms, std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (CheckRecord c : other.checks) {
        if (!prefix.empty()) c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::ok() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
}

const CheckRecord* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j = {{"name", c.name},
                            {"status", to_string(c.status)},
                            {"residual_nonzeros", c.residual_nonzeros},
                            {"elapsed_ms", c.elapsed_ms}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return {{"checks", arr},
            {"passed", count(Status::pass)},
            {"failed", count(Status::fail)},
            {"inconclusive", count(Status::inconclusive)}};
}

}  // namespace ccn

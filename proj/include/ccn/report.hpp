#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ccn {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct CheckRecord {
    std::string name;
    Status status = Status::pass;
    std::size_t residual_nonzeros = 0;
    double elapsed_ms = 0;
    std::string detail;
};

struct Report {
    std::vector<CheckRecord> checks;

    void add(std::string name, std::size_t residual, double elapsed_ms = 0, std::string detail = {});
    void add_status(std::string name, Status s, std::string detail = {}, double elapsed_ms = 0);
    void append(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t count(Status s) const;
    const CheckRecord* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ccn

#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cringlab {

enum class Status { pass, fail, infeasible, skipped };

std::string_view to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string witness;
    std::string detail;
    double millis = 0.0;
};

/// Ordered list of named checks plus reported values. A report is ok when no
/// check failed or came out infeasible.
class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    /// Each check is timed from the previous check (or construction).
    Check& add(std::string name, Status status, std::string witness = {}, std::string detail = {});
    /// Adds a pass or fail check and returns ok.
    bool expect(bool ok, std::string name, std::string witness = {}, std::string detail = {});
    void note(std::string key, std::string value);
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    const std::string& subject() const { return subject_; }
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }
    const Check* find(std::string_view name) const;
    bool passed(std::string_view name) const;
    std::string value(std::string_view key) const;

    std::string text(bool timing = false) const;
    nlohmann::ordered_json to_json(bool timing = false) const;

private:
    std::string subject_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::string>> notes_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace cringlab

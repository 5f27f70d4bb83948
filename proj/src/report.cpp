#include "cringlab/report.hpp"

#include <algorithm>
#include <cstdio>

namespace cringlab {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::infeasible: return "infeasible";
    case Status::skipped: return "skipped";
    }
    return "?";
}

Check& Report::add(std::string name, Status status, std::string witness, std::string detail)
{
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    checks_.push_back(Check{std::move(name), status, std::move(witness), std::move(detail), ms});
    return checks_.back();
}

bool Report::expect(bool ok, std::string name, std::string witness, std::string detail)
{
    add(std::move(name), ok ? Status::pass : Status::fail, ok ? std::string() : std::move(witness), std::move(detail));
    return ok;
}

void Report::note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks_) {
        Check copy = c;
        if (!prefix.empty()) copy.name = prefix + "." + copy.name;
        checks_.push_back(std::move(copy));
    }
    for (const auto& [k, v] : other.notes_) notes_.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
}

bool Report::ok() const
{
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const Check& c) { return c.status == Status::fail || c.status == Status::infeasible; });
}

const Check* Report::find(std::string_view name) const
{
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::passed(std::string_view name) const
{
    const Check* c = find(name);
    return c != nullptr && c->status == Status::pass;
}

std::string Report::value(std::string_view key) const
{
    for (const auto& [k, v] : notes_)
        if (k == key) return v;
    return {};
}

std::string Report::text(bool timing) const
{
    std::string out;
    if (!subject_.empty()) out += "== " + subject_ + "\n";
    std::size_t width = 0;
    for (const auto& c : checks_) width = std::max(width, c.name.size());
    for (const auto& c : checks_) {
        std::string status(to_string(c.status));
        out += "  [" + status + "]" + std::string(11 - status.size(), ' ') + c.name;
        if (!c.detail.empty() || !c.witness.empty() || timing) out += std::string(width - c.name.size() + 2, ' ');
        if (!c.detail.empty()) out += c.detail;
        if (!c.witness.empty()) out += (c.detail.empty() ? "" : "; ") + std::string("witness ") + c.witness;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.1f ms)", c.millis);
            out += buf;
        }
        out += "\n";
    }
    for (const auto& [k, v] : notes_) out += "  " + k + " = " + v + "\n";
    out += ok() ? "result: ok\n" : "result: FAILED\n";
    return out;
}

nlohmann::ordered_json Report::to_json(bool timing) const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["subject"] = subject_;
    j["ok"] = ok();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = std::string(to_string(c.status));
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (timing) e["millis"] = c.millis;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : notes_) values[k] = v;
    j["values"] = std::move(values);
    return j;
}

}  // namespace cringlab

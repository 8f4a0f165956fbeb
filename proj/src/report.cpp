#include "borel/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "borel/errors.hpp"

namespace borel {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Capped: return "capped";
    }
    throw Error("status_name: bad status");
}

json RunConfig::to_json() const {
    json j;
    j["command"] = command;
    j["n"] = n;
    j["seed"] = seed;
    j["trials"] = trials;
    j["caps"] = {{"max_degree", caps.max_degree},
                 {"timeout_sec", caps.timeout_sec},
                 {"max_basis", caps.max_basis}};
    if (!extra.is_null()) j["flags"] = extra;
    return j;
}

void Report::add(CheckRecord rec) {
    auto at = std::lower_bound(checks_.begin(), checks_.end(), rec.name,
                               [](const CheckRecord& r, const std::string& name) {
                                   return r.name < name;
                               });
    if (at != checks_.end() && at->name == rec.name)
        throw Error("Report: duplicate check name '" + rec.name + "'");
    checks_.insert(at, std::move(rec));
}

int Report::count(CheckStatus s) const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(),
                                          [s](const CheckRecord& r) { return r.status == s; }));
}

int Report::exit_code() const {
    if (count(CheckStatus::Fail) > 0) return 1;
    if (count(CheckStatus::Capped) > 0) return 3;
    return 0;
}

json Report::to_json() const {
    json checks = json::array();
    json timing;
    double total = 0;
    for (const CheckRecord& r : checks_) {
        json c;
        c["name"] = r.name;
        c["status"] = status_name(r.status);
        if (!r.witness.is_null()) c["witness"] = r.witness;
        checks.push_back(std::move(c));
        timing[r.name] = r.seconds;
        total += r.seconds;
    }
    timing["total"] = total;
    json out;
    out["command"] = config_.command;
    out["config"] = config_.to_json();
    out["checks"] = std::move(checks);
    out["summary"] = {{"pass", count(CheckStatus::Pass)},
                      {"fail", count(CheckStatus::Fail)},
                      {"skipped", count(CheckStatus::Skipped)},
                      {"capped", count(CheckStatus::Capped)},
                      {"total", static_cast<int>(checks_.size())}};
    out["exit_code"] = exit_code();
    out["timing"] = std::move(timing); // strip this key before hashing reports
    return out;
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format != "text") throw Error("Report: unknown format '" + format + "'");
    std::ostringstream os;
    os << "# " << config_.command << " n=" << config_.n << " seed=" << config_.seed
       << " trials=" << config_.trials << "\n";
    for (const CheckRecord& r : checks_) {
        os << "[" << status_name(r.status) << "] " << r.name;
        if (r.status != CheckStatus::Pass && !r.witness.is_null())
            os << "  " << r.witness.dump();
        os << "\n";
    }
    os << "summary: pass=" << count(CheckStatus::Pass) << " fail=" << count(CheckStatus::Fail)
       << " skipped=" << count(CheckStatus::Skipped) << " capped=" << count(CheckStatus::Capped)
       << "\n";
    return os.str();
}

CheckRecord timed_check(const std::string& name, const std::function<CheckRecord()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec;
    try {
        rec = body();
    } catch (const CapExceededError& e) {
        rec.status = CheckStatus::Capped;
        rec.witness = json{{"error", e.what()}};
    } catch (const Error& e) {
        rec.status = CheckStatus::Fail;
        rec.witness = json{{"error", e.what()}};
    }
    rec.name = name;
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace borel

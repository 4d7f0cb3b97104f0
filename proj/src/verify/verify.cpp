#include "hydromoments/verify.hpp"

#include "check_util.hpp"
#include "hydromoments/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace hydro::verify {

std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass: return "PASS";
    case Status::warn: return "WARN";
    case Status::fail: return "FAIL";
    }
    return "FAIL";
}

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specfun", "exact", "largedim", "rydberg", "uncertainty", "entropy", "all"};
    return names;
}

Report run_suite(std::string_view suite, int jobs) {
    Report r;
    r.suite = std::string(suite);
    auto add = [&](std::vector<Check> more) {
        r.checks.insert(r.checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    const bool all = suite == "all";
    if (all || suite == "specfun") add(specfun_checks(jobs));
    if (all || suite == "exact") add(exact_checks(jobs));
    if (all || suite == "largedim") add(largedim_checks(jobs));
    if (all || suite == "rydberg") add(rydberg_checks(jobs));
    if (all || suite == "uncertainty") add(uncertainty_checks(jobs));
    if (all || suite == "entropy") add(entropy_checks(jobs));
    if (all) add(limit_checks(jobs));
    if (r.checks.empty())
        throw ValidationError("unknown suite '" + std::string(suite) +
                              "'; expected specfun, exact, largedim, rydberg, uncertainty, entropy or all");
    return r;
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = std::string(to_string(c.status));
        e["observed"] = c.observed;
        e["required"] = c.required;
        e["note"] = c.note;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(1);
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << to_string(c.status) << "  " << c.id << "  observed " << c.observed << "  required " << c.required;
        if (!c.note.empty()) os << "  (" << c.note << ')';
        os << '\n';
    }
    os << "suite " << r.suite << ": " << r.count(Status::pass) << " pass, " << r.count(Status::warn) << " warn, "
       << r.count(Status::fail) << " fail\n";
    return os.str();
}

}  // namespace hydro::verify

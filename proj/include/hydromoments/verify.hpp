#pragma once

#include <string>
#include <string_view>
#include <vector>

// Verification report: every invariant and reproduction check with its observed value and the
// tolerance it is held to. WARN marks a disagreement with a published value that the independent
// routes have adjudicated; FAIL marks a broken identity or an unmet tolerance.
namespace hydro::verify {

enum class Status { pass, warn, fail };
std::string_view to_string(Status s);

struct Check {
    std::string id;
    int criterion = 0;  // acceptance criterion this check belongs to, 0 for supporting checks
    Status status = Status::pass;
    std::string observed;
    std::string required;
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;  // no FAIL
    std::size_t count(Status s) const;
};

const std::vector<std::string>& suite_names();  // specfun exact largedim rydberg uncertainty entropy all
Report run_suite(std::string_view suite, int jobs = 1);

std::string to_json(const Report& r);
std::string to_text(const Report& r);

// Individual suites.
std::vector<Check> specfun_checks(int jobs);
std::vector<Check> exact_checks(int jobs);
std::vector<Check> largedim_checks(int jobs);
std::vector<Check> rydberg_checks(int jobs);
std::vector<Check> uncertainty_checks(int jobs);
std::vector<Check> entropy_checks(int jobs);
std::vector<Check> limit_checks(int jobs);

}  // namespace hydro::verify

// One line per acceptance criterion. A criterion passes when none of its checks FAIL; WARN
// entries (published values that disagree with the adjudicated computation) are listed but do
// not fail the criterion. Tolerances live with the checks in the verification suites.

#include "hydromoments/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

using namespace hydro::verify;

namespace {

const std::map<int, std::string> kTitles{
    {1, "reference table, momentum columns"},
    {2, "reference table, position columns"},
    {3, "oracle equivalence"},
    {4, "large-D convergence order"},
    {5, "f_k identities and remainder"},
    {6, "uncertainty relations"},
    {7, "entropy bounds at D = 3"},
    {8, "fixed-D Rydberg asymptotics"},
    {9, "equilibrium-measure identities"},
    {10, "large-D limits through property suites"},
};

// Runtime budgets in seconds for the criteria that state one.
const std::map<int, double> kBudgets{{1, 1.0}, {3, 10.0}};

}  // namespace

int main() {
    std::map<int, std::vector<Check>> byCriterion;
    std::map<int, double> seconds;
    for (const char* suite : {"exact", "largedim", "rydberg", "uncertainty", "entropy"}) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = run_suite(suite, 0);
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (const auto& c : report.checks) {
            if (c.criterion == 0) continue;
            byCriterion[c.criterion].push_back(c);
            seconds[c.criterion] = std::max(seconds[c.criterion], elapsed);
        }
    }
    for (const auto& c : limit_checks(0)) byCriterion[c.criterion].push_back(c);

    int failed = 0;
    for (const auto& [id, title] : kTitles) {
        const auto& checks = byCriterion[id];
        int fails = 0, warns = 0;
        for (const auto& c : checks) {
            fails += c.status == Status::fail;
            warns += c.status == Status::warn;
        }
        bool overBudget = false;
        if (auto b = kBudgets.find(id); b != kBudgets.end()) overBudget = seconds[id] > b->second;
        const bool pass = !checks.empty() && fails == 0 && !overBudget;
        failed += !pass;
        std::printf("criterion %2d %s  %s (%zu checks, %d warn, %d fail)\n", id, pass ? "PASS" : "FAIL", title.c_str(),
                    checks.size(), warns, fails);
        for (const auto& c : checks)
            if (c.status != Status::pass)
                std::printf("    %s %s: observed %s, required %s%s%s\n", std::string(to_string(c.status)).c_str(),
                            c.id.c_str(), c.observed.c_str(), c.required.c_str(), c.note.empty() ? "" : "; ",
                            c.note.c_str());
        if (auto b = kBudgets.find(id); b != kBudgets.end())
            std::printf("    suite runtime %.2f s (budget %.0f s)\n", seconds[id], b->second);
    }
    std::printf("%d of %zu criteria failed\n", failed, kTitles.size());
    return failed == 0 ? 0 : 1;
}

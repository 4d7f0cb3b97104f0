#include "hydromoments/sweep.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/largedim.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/rydberg.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <optional>
#include <utility>

namespace hydro::sweep {

namespace {

bool moment_exists(const HydrogenicState& s, double alpha, Space space) {
    try {
        if (space == Space::position)
            hydrogenic::check_position_alpha(s, alpha);
        else
            hydrogenic::check_momentum_alpha(s, alpha);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

double exact_value(const HydrogenicState& s, double alpha, Space space) {
    return space == Space::position ? hydrogenic::position_expectation(s, alpha).value
                                    : hydrogenic::momentum_expectation(s, alpha).value;
}

// Method-specific windows, so that a grid never produces cells a method rejects by design.
bool method_applies(SweepMethod m, double alpha, Space space) {
    switch (m) {
    case SweepMethod::rydbergFixedD:
        return space == Space::position ? alpha > -1.5 : (alpha > -1.0 && alpha < 3.0);
    case SweepMethod::rydbergNlGap: return space == Space::momentum;
    default: return true;
    }
}

SweepResult collect(const std::vector<Cell>& cells, std::vector<std::optional<report::CellRecord>>& rows,
                    std::vector<std::string>& errors) {
    // Both Rydberg forms report Method::rydberg, so ties are broken by the sweep method to keep
    // the output independent of cell order.
    std::vector<std::pair<report::CellRecord, SweepMethod>> keyed;
    SweepResult out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (rows[i])
            keyed.emplace_back(std::move(*rows[i]), cells[i].method);
        else
            out.failures.push_back({cells[i], errors[i]});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (report::record_less(a.first, b.first)) return true;
        if (report::record_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    for (auto& k : keyed) out.records.push_back(std::move(k.first));
    return out;
}

void evaluate_into(const std::vector<Cell>& cells, std::size_t i,
                   std::vector<std::optional<report::CellRecord>>& rows, std::vector<std::string>& errors) {
    try {
        rows[i] = evaluate_cell(cells[i]);
    } catch (const std::exception& e) {
        errors[i] = e.what();
    }
}

}  // namespace

std::string_view to_string(SweepMethod m) {
    switch (m) {
    case SweepMethod::exact: return "exact";
    case SweepMethod::largeD: return "large-d";
    case SweepMethod::rydbergFixedD: return "rydberg-fixed-d";
    case SweepMethod::rydbergNlGap: return "rydberg-nl-gap";
    case SweepMethod::oracle: return "oracle";
    }
    return "unknown";
}

SweepMethod parse_sweep_method(const std::string& text) {
    for (SweepMethod m : {SweepMethod::exact, SweepMethod::largeD, SweepMethod::rydbergFixedD,
                          SweepMethod::rydbergNlGap, SweepMethod::oracle})
        if (to_string(m) == text) return m;
    throw ValidationError("method must be one of exact, large-d, rydberg-fixed-d, rydberg-nl-gap, oracle; got '" +
                          text + "'");
}

std::vector<Cell> expand(const Grid& grid) {
    std::vector<Cell> cells;
    for (int n : grid.ns)
        for (int l = 0; l < n; ++l) {
            if (grid.lOnly >= 0 && l != grid.lOnly) continue;
            for (int D : grid.Ds)
                for (double Z : grid.Zs) {
                    const HydrogenicState s{n, l, D, Z};
                    validate(s);
                    for (double alpha : grid.alphas)
                        for (Space space : grid.spaces) {
                            if (!moment_exists(s, alpha, space)) continue;
                            for (SweepMethod m : grid.methods)
                                if (method_applies(m, alpha, space)) cells.push_back({s, alpha, space, m});
                        }
                }
        }
    return cells;
}

report::CellRecord evaluate_cell(const Cell& cell) {
    const auto& s = cell.state;
    report::CellRecord r;
    r.n = s.n;
    r.l = s.l;
    r.D = s.D;
    r.Z = s.Z;
    r.alpha = cell.alpha;
    r.space = cell.space;
    const bool pos = cell.space == Space::position;
    switch (cell.method) {
    case SweepMethod::exact: {
        r.method = Method::exact;
        r.value = exact_value(s, cell.alpha, cell.space);
        return r;
    }
    case SweepMethod::largeD:
        r.method = Method::largeD;
        r.value = pos ? largedim::position_largeD(s, cell.alpha).value : largedim::momentum_largeD(s, cell.alpha).value;
        break;
    case SweepMethod::rydbergFixedD:
        r.method = Method::rydberg;
        r.value = pos ? rydberg::pos_rydberg_fixedD(s, cell.alpha).value
                      : rydberg::mom_rydberg_fixedD(s, cell.alpha).value;
        break;
    case SweepMethod::rydbergNlGap:
        if (pos) throw ValidationError("the nl-gap route is defined for momentum moments only");
        r.method = Method::rydberg;
        r.value = rydberg::mom_rydberg_fixed_nl_gap(s, cell.alpha).value;
        break;
    case SweepMethod::oracle: {
        r.method = Method::oracle;
        const auto f = oracle::Selector::power(cell.alpha);
        const auto q = pos ? oracle::quad_position_moment(s, f) : oracle::quad_momentum_moment(s, f);
        if (!q.converged) throw NumericError("oracle quadrature did not converge for " + describe(s));
        r.value = q.value;
        break;
    }
    }
    r.reference = exact_value(s, cell.alpha, cell.space);
    r.relDeviation = report::relative_deviation(r.value, *r.reference);
    return r;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
    std::exception_ptr first;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < long(count); ++i) {
        try {
            body(std::size_t(i));
        } catch (...) {
#pragma omp critical(hydro_parallel_for_error)
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
}

SweepResult run_serial(const std::vector<Cell>& cells) {
    std::vector<std::optional<report::CellRecord>> rows(cells.size());
    std::vector<std::string> errors(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) evaluate_into(cells, i, rows, errors);
    return collect(cells, rows, errors);
}

SweepResult run_parallel(const std::vector<Cell>& cells, int jobs) {
    std::vector<std::optional<report::CellRecord>> rows(cells.size());
    std::vector<std::string> errors(cells.size());
    const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < long(cells.size()); ++i) evaluate_into(cells, std::size_t(i), rows, errors);
    return collect(cells, rows, errors);
}

SweepResult run(const std::vector<Cell>& cells, int jobs) {
    return jobs == 1 ? run_serial(cells) : run_parallel(cells, jobs);
}

}  // namespace hydro::sweep

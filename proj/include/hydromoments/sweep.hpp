#pragma once

#include "hydromoments/records.hpp"
#include "hydromoments/state.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hydro::sweep {

enum class SweepMethod { exact, largeD, rydbergFixedD, rydbergNlGap, oracle };

std::string_view to_string(SweepMethod m);
SweepMethod parse_sweep_method(const std::string& text);

struct Cell {
    HydrogenicState state;
    double alpha = 0.0;
    Space space = Space::position;
    SweepMethod method = SweepMethod::exact;
};

struct Grid {
    std::vector<int> ns{1, 2, 3};
    std::vector<int> Ds{3, 10, 50};
    std::vector<double> Zs{1.0};
    std::vector<double> alphas{-1.0, 1.0, 2.0};
    std::vector<Space> spaces{Space::position, Space::momentum};
    std::vector<SweepMethod> methods{SweepMethod::exact};
    int lOnly = -1;  // restrict to one l; every l < n otherwise
};

// Cartesian product of the grid, dropping cells outside the moment's existence window or the
// method's domain (the Rydberg forms have their own alpha ranges; the gap form is momentum-only).
std::vector<Cell> expand(const Grid& grid);

// The non-exact methods carry the exact value as reference.
report::CellRecord evaluate_cell(const Cell& cell);

struct CellFailure {
    Cell cell;
    std::string message;
};

struct SweepResult {
    std::vector<report::CellRecord> records;  // sorted by record_less
    std::vector<CellFailure> failures;
};

SweepResult run_serial(const std::vector<Cell>& cells);
// jobs <= 0 uses every available thread.
SweepResult run_parallel(const std::vector<Cell>& cells, int jobs);
SweepResult run(const std::vector<Cell>& cells, int jobs);

// body(i) for i in [0, count), with OpenMP when jobs != 1. The first exception is rethrown
// after the loop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace hydro::sweep

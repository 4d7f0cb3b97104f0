#pragma once

#include "hydromoments/state.hpp"

#include <optional>
#include <string>
#include <vector>

// Published convergence table for (n, l, Z) = (2, 0, 1): D in {50, 250, 500}, alpha in {0, 1, 2, -1}.
namespace hydro::table1 {

struct PrintedCell {
    int D = 50;
    double alpha = 0.0;
    Space space = Space::position;
    double asymptotic = 0.0;
    std::string asymptoticText;  // as printed
    double exact = 0.0;
    std::string exactText;
};

const std::vector<PrintedCell>& printed_cells();

struct TableRow {
    PrintedCell printed;
    double asymptotic = 0.0;  // large-D product form
    double exact = 0.0;       // hypergeometric route
    double oracle = 0.0;      // quadrature of the defining integral
    double asymptoticDeviation = 0.0;
    double exactDeviation = 0.0;
    bool asymptoticMatches = false;  // within half a unit of the last printed digit
    bool exactFlagged = false;       // exact value departs from the printed one beyond 1e-4
};

std::vector<TableRow> compute_table();

// Relative half-unit in the last printed significant digit, e.g. "0.0388" -> 0.5e-4/0.0388.
double printed_tolerance(const std::string& text);

}  // namespace hydro::table1

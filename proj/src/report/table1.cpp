#include "hydromoments/table1.hpp"

#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/largedim.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/records.hpp"

#include <cmath>
#include <cstdlib>

namespace hydro::table1 {

namespace {

PrintedCell cell(int D, double alpha, Space space, const char* asym, const char* exact) {
    return {D, alpha, space, std::strtod(asym, nullptr), asym, std::strtod(exact, nullptr), exact};
}

}  // namespace

const std::vector<PrintedCell>& printed_cells() {
    static const std::vector<PrintedCell> cells = [] {
        constexpr Space r = Space::position, p = Space::momentum;
        return std::vector<PrintedCell>{
            cell(50, 0, r, "1.00199", "1"),          cell(250, 0, r, "1.00199", "1"),
            cell(500, 0, r, "1.00199", "1"),         cell(50, 1, r, "686", "612.5"),
            cell(250, 1, r, "15936", "15562.5"),     cell(500, 1, r, "63123.5", "62375"),
            cell(50, 2, r, "484375", "365766"),      cell(250, 2, r, "2.55859e8", "2.41176e8"),
            cell(500, 2, r, "4e9", "3.88267e9"),     cell(50, -1, r, "0.0016", "0.00160064"),
            cell(250, -1, r, "0.000064", "0.000064001"), cell(500, -1, r, "0.000016", "0.0000160001"),
            cell(50, 0, p, "1", "1"),                cell(250, 0, p, "1", "1"),
            cell(500, 0, p, "1", "1"),               cell(50, 1, p, "0.0388", "0.0380789"),
            cell(250, 1, p, "0.007952", "0.00792065"), cell(500, 1, p, "0.003988", "0.00398008"),
            cell(50, 2, p, "0.0016", "0.00153787"),  cell(250, 2, p, "0.000064", "0.0000634911"),
            cell(500, 2, p, "0.000016", "0.0000159362"), cell(50, -1, p, "27.25", "27.7927"),
            cell(250, -1, p, "127.25", "127.758"),   cell(500, -1, p, "252.25", "252.754"),
        };
    }();
    return cells;
}

double printed_tolerance(const std::string& text) {
    const std::string mantissa = text.substr(0, text.find_first_of("eE"));
    const auto dot = mantissa.find('.');
    const int decimals = dot == std::string::npos ? 0 : int(mantissa.size() - dot - 1);
    const double m = std::fabs(std::strtod(mantissa.c_str(), nullptr));
    return m == 0.0 ? 0.0 : 0.5 * std::pow(10.0, -decimals) / m;
}

std::vector<TableRow> compute_table() {
    std::vector<TableRow> rows;
    for (const auto& c : printed_cells()) {
        const HydrogenicState s{2, 0, c.D, 1.0};
        TableRow row;
        row.printed = c;
        const bool pos = c.space == Space::position;
        row.asymptotic = pos ? largedim::position_largeD(s, c.alpha).value : largedim::momentum_largeD(s, c.alpha).value;
        row.exact = pos ? hydrogenic::position_expectation(s, c.alpha).value
                        : hydrogenic::momentum_expectation(s, c.alpha).value;
        const auto f = oracle::Selector::power(c.alpha);
        row.oracle = (pos ? oracle::quad_position_moment(s, f) : oracle::quad_momentum_moment(s, f)).value;
        row.asymptoticDeviation = report::relative_deviation(row.asymptotic, c.asymptotic);
        row.exactDeviation = report::relative_deviation(row.exact, c.exact);
        row.asymptoticMatches = row.asymptoticDeviation <= printed_tolerance(c.asymptoticText) * (1.0 + 1e-9);
        row.exactFlagged = row.exactDeviation > 1e-4;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hydro::table1

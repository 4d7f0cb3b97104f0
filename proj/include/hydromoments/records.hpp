#pragma once

#include "hydromoments/state.hpp"

#include <optional>
#include <string>
#include <vector>

// Row model shared by the command-line tool and the sweep driver.
namespace hydro::report {

struct CellRecord {
    int n = 1;
    int l = 0;
    int D = 3;
    double Z = 1.0;
    std::optional<double> alpha;  // absent for logarithmic moments
    Space space = Space::position;
    Method method = Method::exact;
    double value = 0.0;
    std::optional<std::string> exactValue;  // "p/q" when evaluated in rational arithmetic
    std::optional<double> reference;
    std::optional<double> relDeviation;
};

// |value - reference| / |reference| (absolute deviation when the reference is 0).
double relative_deviation(double value, double reference);

// 12 significant digits, trailing zeros trimmed, scientific once |exponent| >= 6.
std::string format_number(double x);

std::string csv_header();
std::string to_csv(const CellRecord& r);
std::string to_json(const CellRecord& r);
std::string to_json(const std::vector<CellRecord>& rows);
CellRecord record_from_json(const std::string& text);
std::vector<CellRecord> records_from_json(const std::string& text);

Space parse_space(const std::string& text);
Method parse_method(const std::string& text);

// Ordering by (n, l, D, Z, alpha, space, method); log moments sort after powers.
bool record_less(const CellRecord& a, const CellRecord& b);

}  // namespace hydro::report

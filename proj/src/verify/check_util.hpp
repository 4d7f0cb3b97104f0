#pragma once

#include "hydromoments/records.hpp"
#include "hydromoments/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hydro::verify::detail {

inline double rel(double a, double b) { return report::relative_deviation(a, b); }

inline std::string num(double x) { return report::format_number(x); }

// Observed value against an upper tolerance.
inline Check at_most(std::string id, int criterion, double observed, double tolerance, std::string note = {},
                     Status onMiss = Status::fail) {
    Check c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.observed = num(observed);
    c.required = "<= " + num(tolerance);
    c.status = observed <= tolerance ? Status::pass : onMiss;
    c.note = std::move(note);
    return c;
}

inline Check holds(std::string id, int criterion, bool ok, std::string observed, std::string required,
                   std::string note = {}, Status onMiss = Status::fail) {
    Check c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.status = ok ? Status::pass : onMiss;
    c.observed = std::move(observed);
    c.required = std::move(required);
    c.note = std::move(note);
    return c;
}

// Running maximum with the cell where it occurred.
struct Worst {
    double value = 0.0;
    std::string where;
    void update(double v, const std::string& at) {
        if (std::isnan(value)) return;
        if (std::isnan(v) || v > value) {
            value = v;
            where = at;
        }
    }
};

}  // namespace hydro::verify::detail

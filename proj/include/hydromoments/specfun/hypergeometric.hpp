#pragma once

#include "hydromoments/specfun/rational.hpp"

#include <optional>
#include <vector>

namespace hydro::specfun {

enum class Precision { automatic, floating, rational };

struct HypSpec {
    std::vector<double> numeratorParams;
    std::vector<double> denominatorParams;
    double argument = 1.0;
};

struct HypResult {
    double value = 0.0;
    std::optional<Rational> exact;  // set when the sum was carried out in rational arithmetic
    double conditionNumber = 1.0;   // sum |t_j| / |sum t_j| of the floating pass
    bool escalated = false;         // automatic mode fell back to exact arithmetic
};

// Number of terms minus one of a terminating series (the smallest k with -k a numerator
// parameter). Throws ValidationError naming the parameters when the spec does not terminate
// or a denominator parameter vanishes before termination.
unsigned terminating_degree(const HypSpec& spec);

// Finite sum of a terminating pFq. Floating mode uses compensated summation with incremental
// term ratios. Automatic mode replays the sum exactly when the floating pass is ill-conditioned.
// Rational mode requires every parameter to be a simple rational.
HypResult hyp_terminating(const HypSpec& spec, Precision mode = Precision::automatic);

Rational hyp_terminating_exact(const std::vector<Rational>& numerator,
                               const std::vector<Rational>& denominator, const Rational& argument);

// Gauss 2F1 for z <= 0 (Pfaff transformation into [0, 1)), for 0 <= z < 1 by direct series,
// or for any z when a or b is a non-positive integer.
double gauss_2f1(double a, double b, double c, double z);

// Appell F1(a; b, b'; c; x, y). Double series for max(|x|, |y|) < 0.9, Euler integral
// (requires c > a > 0) otherwise, including the boundary x = 1.
double appell_f1(double a, double b, double bp, double c, double x, double y);

}  // namespace hydro::specfun

#pragma once

#include "hydromoments/specfun/quadrature.hpp"
#include "hydromoments/state.hpp"

#include <functional>

namespace hydro::rydberg {

// Limit of nu/k as n and D grow together; a regime declaration, not a state property.
struct RatioLambda {
    double value = 0.0;
};

// Laguerre parameter 2l+D-2 of the large-(n, D) analysis (not l+(D-1)/2).
double laguerre_parameter(const HydrogenicState& s);
// (2l+D-2)/k for a finite state with k >= 1.
RatioLambda ratio_from_state(const HydrogenicState& s);

enum class MeasureKind { position, momentum };

struct EquilibriumMeasure {
    MeasureKind kind = MeasureKind::position;
    double lambda = 0.0;
    double supportLow = 0.0;
    double supportHigh = 0.0;
    std::function<double(double)> density;
};

// sqrt((x-a)(b-x))/(pi x) on [a, b], a,b = lambda+1 -/+ sqrt(1+2 lambda).
EquilibriumMeasure equilibrium_position(RatioLambda ratio);
// (1+2 lambda) sqrt(xi^2-x^2)/(pi (1-x^2)) on [-xi, xi], xi = sqrt(lambda+1/4)/(lambda+1/2).
EquilibriumMeasure equilibrium_momentum(RatioLambda ratio);
double xi_of(RatioLambda ratio);

// Integral of f against the measure, after x = a+(b-a) sin^2(theta) or x = xi cos(theta).
specfun::QuadratureResult integrate_measure(const EquilibriumMeasure& m, const std::function<double(double)>& f);

Evaluation pos_rydberg_fixedD(const HydrogenicState& s, double alpha);
Evaluation mom_rydberg_fixedD(const HydrogenicState& s, double alpha);

enum class GapScheme { gaussKronrod, trapezoid };
// Fixed n-l regime; the theta-integral is smooth and periodic, so both schemes converge fast.
Evaluation mom_rydberg_fixed_nl_gap(const HydrogenicState& s, double alpha,
                                    GapScheme scheme = GapScheme::gaussKronrod);

struct LimitingIntegrals {
    double position = 0.0;  // (1/pi) int_a^b x^alpha sqrt((x-a)(b-x)) dx
    double momentum = 0.0;  // ((1+2 lambda)/pi) int (1-t)^(alpha/2-1) (1+t)^(-alpha/2) sqrt(xi^2-t^2) dt
};
LimitingIntegrals limiting_integrals(double alpha, RatioLambda ratio);

// a^alpha (b-a)^2/8 2F1(-alpha, 3/2; 3; (a-b)/a), lambda > 0.
double position_moment_closed_form(double alpha, RatioLambda ratio);

// int_{-xi}^{xi} (1-t)^(alpha/2-1) (1+t)^(-alpha/2) sqrt(xi^2-t^2) dt by quadrature.
double momentum_moment_integral(double alpha, RatioLambda ratio);
// (pi/8) F1(3/2, 1-alpha/2, alpha/2; 3; u, -u), u = 2 xi/(1+xi), as printed.
double momentum_moment_printed(double alpha, RatioLambda ratio);
// 4 xi^2 (1+xi)^(alpha/2-1) (1-xi)^(-alpha/2) (pi/8) F1(3/2, 1-alpha/2, alpha/2; 3; u, -2 xi/(1-xi)),
// from t = -xi + 2 xi x; lambda > 0.
double momentum_moment_derived(double alpha, RatioLambda ratio);

// Joint large-(n, D) moments. printedForm selects the printed final formulas; otherwise the
// limiting measure moments are combined with the exact prefactors of the integral representations.
Evaluation pos_rydberg_largeD(const HydrogenicState& s, double alpha, RatioLambda ratio, bool printedForm);
Evaluation mom_rydberg_largeD(const HydrogenicState& s, double alpha, RatioLambda ratio, bool printedForm);

}  // namespace hydro::rydberg

#pragma once

#include "hydromoments/specfun/hypergeometric.hpp"
#include "hydromoments/state.hpp"

namespace hydro::hydrogenic {

using specfun::Precision;

double energy(const HydrogenicState& s);

// Radial densities normalized as int r^(D-1) rho dr = 1 and int p^(D-1) M^2 dp = 1.
double radial_density_position(const HydrogenicState& s, double r);
double log_radial_density_position(const HydrogenicState& s, double r);
double radial_density_momentum(const HydrogenicState& s, double p);
double log_radial_density_momentum(const HydrogenicState& s, double p);

// <r^alpha> through the terminating 3F2 representation; alpha > -D-2l.
// Rational precision returns the exact value for integer alpha and rational Z.
Evaluation position_expectation(const HydrogenicState& s, double alpha,
                                Precision precision = Precision::automatic);
// Explicit closed forms for alpha in {-4, -3, -2, -1, 1, 2}.
Evaluation position_closed_forms(const HydrogenicState& s, int alpha);
Evaluation log_position_expectation(const HydrogenicState& s);

// <p^alpha> through the terminating 5F4 representation; -D-2l < alpha < D+2l+2.
// Rational precision returns the exact value for even alpha and rational Z.
Evaluation momentum_expectation(const HydrogenicState& s, double alpha,
                                Precision precision = Precision::automatic);
// Explicit closed forms for alpha in {-2, 2, 4, 6}.
Evaluation momentum_closed_forms(const HydrogenicState& s, int alpha);
// Relative deviation between <p^-beta> and eta^(2beta+2) Z^(-2beta-2) <p^(beta+2)>.
double momentum_reflection(const HydrogenicState& s, int beta);
Evaluation log_momentum_expectation(const HydrogenicState& s);

// Validity windows, throwing ValidationError with the violated inequality.
void check_position_alpha(const HydrogenicState& s, double alpha);
void check_momentum_alpha(const HydrogenicState& s, double alpha);

}  // namespace hydro::hydrogenic

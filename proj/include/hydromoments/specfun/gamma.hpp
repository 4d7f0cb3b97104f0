#pragma once

#include "hydromoments/specfun/log_signed.hpp"
#include "hydromoments/specfun/rational.hpp"

namespace hydro::specfun {

double log_gamma(double x);
double digamma(double x);

// log(Gamma(a)/Gamma(b)) for a, b > 0, without forming either Gamma value.
double log_gamma_ratio(double a, double b);

// Rising factorial (a)_j. Exact zero when a is a non-positive integer with |a| < j.
LogSigned pochhammer(double a, unsigned j);
Rational pochhammer(const Rational& a, unsigned j);

// log of the Euler beta function B(a, b), a, b > 0.
double log_beta(double a, double b);

// Hypersphere surface area 2 pi^(D/2) / Gamma(D/2).
double surface_area(int D);
double log_surface_area(int D);

}  // namespace hydro::specfun

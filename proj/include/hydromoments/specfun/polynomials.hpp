#pragma once

#include "hydromoments/specfun/log_signed.hpp"

namespace hydro::specfun {

// Generalized Laguerre L_n^(beta)(x) by the three-term recurrence.
double laguerre(unsigned nDeg, double beta, double x);
// Same value kept in log form with renormalization, for large degree or argument.
LogSigned laguerre_log(unsigned nDeg, double beta, double x);
// sqrt(n! / Gamma(n+beta+1)) L_n^(beta)(x): orthonormal against x^beta e^-x.
LogSigned laguerre_orthonormal(unsigned nDeg, double beta, double x);

// Gegenbauer C_n^(lam)(x) by the three-term recurrence.
double gegenbauer(unsigned nDeg, double lam, double x);
LogSigned gegenbauer_log(unsigned nDeg, double lam, double x);
// Orthonormal against (1-x^2)^(lam-1/2) on [-1, 1].
LogSigned gegenbauer_orthonormal(unsigned nDeg, double lam, double x);

}  // namespace hydro::specfun

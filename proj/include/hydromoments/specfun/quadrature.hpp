#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hydro::specfun {

struct QuadratureResult {
    double value = 0.0;
    double errorEstimate = 0.0;
    std::size_t nodeCount = 0;
    bool converged = false;
    double l1Norm = 0.0;  // integral of |f|, the scale for relative error on oscillating integrands
};

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
    double relTol = 1e-11;
    unsigned maxDepth = 15;
    std::size_t nodeCeiling = 20000;
};

// Adaptive Gauss-Kronrod (31 points) on a finite interval.
QuadratureResult integrate_gk(const Integrand& f, double a, double b,
                              const QuadratureOptions& opt = {});

// Tanh-sinh on a finite interval; tolerates integrable algebraic endpoint singularities.
QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadratureOptions& opt = {});

// Sums panels [breaks[i], breaks[i+1]]. The first and last panels switch to tanh-sinh when
// the corresponding flag is set.
QuadratureResult integrate_panels(const Integrand& f, const std::vector<double>& breaks,
                                  const QuadratureOptions& opt = {}, bool singularLeft = false,
                                  bool singularRight = false);

struct LogWindow {
    double low = 0.0;
    double high = 0.0;
    double logPeak = 0.0;  // maximum of the log-integrand on the scan grid
};

// Scans logf on a uniform grid over [a, b] and returns the region where logf stays within
// `drop` of its maximum, widened by one grid step on each side and clipped to [a, b].
LogWindow find_log_window(const std::function<double(double)>& logf, double a, double b,
                          std::size_t gridPoints = 2000, double drop = 60.0);

// Evenly spaced breakpoints over [low, high].
std::vector<double> uniform_breaks(double low, double high, std::size_t panels);

}  // namespace hydro::specfun

#include "hydromoments/specfun/polynomials.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"

#include <cmath>
#include <numbers>

namespace hydro::specfun {

namespace {

// Runs a three-term recurrence p_{j+1} = (A_j p_j - B_j p_{j-1}), rescaling to keep the
// pair representable; the accumulated scale is returned in log form.
template <class Step>
LogSigned runRecurrence(unsigned nDeg, double p0, double p1, Step step) {
    if (nDeg == 0) return LogSigned::fromValue(p0);
    double prev = p0, cur = p1, logScale = 0.0;
    for (unsigned j = 1; j < nDeg; ++j) {
        const double next = step(j, cur, prev);
        prev = cur;
        cur = next;
        const double mag = std::fabs(cur);
        if (mag > 1e200 || (mag < 1e-200 && mag > 0.0)) {
            const double s = std::log(mag);
            logScale += s;
            const double f = std::exp(-s);
            cur *= f;
            prev *= f;
        }
    }
    LogSigned out = LogSigned::fromValue(cur);
    if (!out.isZero()) out.logAbs += logScale;
    return out;
}

}  // namespace

LogSigned laguerre_log(unsigned nDeg, double beta, double x) {
    return runRecurrence(nDeg, 1.0, 1.0 + beta - x, [&](unsigned j, double cur, double prev) {
        return ((2.0 * j + 1.0 + beta - x) * cur - (j + beta) * prev) / (j + 1.0);
    });
}

double laguerre(unsigned nDeg, double beta, double x) { return laguerre_log(nDeg, beta, x).value(); }

LogSigned laguerre_orthonormal(unsigned nDeg, double beta, double x) {
    if (!(beta > -1.0)) throw ValidationError("orthonormal Laguerre requires beta > -1");
    LogSigned v = laguerre_log(nDeg, beta, x);
    if (!v.isZero()) v.logAbs += 0.5 * (log_gamma(nDeg + 1.0) - log_gamma(nDeg + beta + 1.0));
    return v;
}

LogSigned gegenbauer_log(unsigned nDeg, double lam, double x) {
    return runRecurrence(nDeg, 1.0, 2.0 * lam * x, [&](unsigned j, double cur, double prev) {
        return (2.0 * (j + lam) * x * cur - (j + 2.0 * lam - 1.0) * prev) / (j + 1.0);
    });
}

double gegenbauer(unsigned nDeg, double lam, double x) { return gegenbauer_log(nDeg, lam, x).value(); }

LogSigned gegenbauer_orthonormal(unsigned nDeg, double lam, double x) {
    if (!(lam > 0.0)) throw ValidationError("orthonormal Gegenbauer requires lambda > 0");
    LogSigned v = gegenbauer_log(nDeg, lam, x);
    if (v.isZero()) return v;
    // h_n = pi 2^(1-2 lam) Gamma(n+2 lam) / (n! (n+lam) Gamma(lam)^2)
    const double logNorm = std::log(std::numbers::pi) + (1.0 - 2.0 * lam) * std::log(2.0) +
                           log_gamma(nDeg + 2.0 * lam) - log_gamma(nDeg + 1.0) -
                           std::log(nDeg + lam) - 2.0 * log_gamma(lam);
    v.logAbs -= 0.5 * logNorm;
    return v;
}

}  // namespace hydro::specfun

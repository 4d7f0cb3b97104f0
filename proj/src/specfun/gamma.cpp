#include "hydromoments/specfun/gamma.hpp"

#include "hydromoments/errors.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace hydro::specfun {

namespace {

void requirePositive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw ValidationError(std::string(what) + " requires a positive finite argument, got " +
                              std::to_string(x));
}

bool isNonPositiveInteger(double a) { return a <= 0.0 && a == std::nearbyint(a); }

}  // namespace

double log_gamma(double x) {
    requirePositive(x, "log_gamma");
    return boost::math::lgamma(x);
}

double digamma(double x) {
    requirePositive(x, "digamma");
    return boost::math::digamma(x);
}

double log_gamma_ratio(double a, double b) {
    requirePositive(a, "log_gamma_ratio");
    requirePositive(b, "log_gamma_ratio");
    const double diff = a - b;
    if (diff == std::nearbyint(diff) && std::fabs(diff) <= 64.0) {
        // Integer shift: product of linear factors.
        const int m = static_cast<int>(std::fabs(diff));
        const double base = diff >= 0 ? b : a;
        double prod = 1.0, acc = 0.0;
        for (int i = 0; i < m; ++i) {
            prod *= base + i;
            if (prod > 1e280) {
                acc += std::log(prod);
                prod = 1.0;
            }
        }
        acc += std::log(prod);
        return diff >= 0 ? acc : -acc;
    }
    if (a < 160.0 && b < 160.0) {
        const double r = boost::math::tgamma_ratio(a, b);
        if (std::isfinite(r) && r > 0.0) return std::log(r);
    }
    if (std::fabs(diff) < 0.25 * std::min(a, b)) {
        const double r = boost::math::tgamma_delta_ratio(a, -diff);  // Gamma(a)/Gamma(b)
        if (std::isfinite(r) && r > 0.0) return std::log(r);
    }
    return boost::math::lgamma(a) - boost::math::lgamma(b);
}

LogSigned pochhammer(double a, unsigned j) {
    if (j == 0) return LogSigned::one();
    if (isNonPositiveInteger(a) && -a < static_cast<double>(j)) return LogSigned::zero();
    if (a > 0.0) return LogSigned::fromLog(log_gamma_ratio(a + j, a), 1);
    if (a + j > 0.0 && !isNonPositiveInteger(a)) {
        // Negative non-integer start: finitely many negative factors, then a Gamma ratio.
        LogSigned acc = LogSigned::one();
        double x = a;
        unsigned i = 0;
        for (; i < j && x < 0.0; ++i, x += 1.0) acc *= LogSigned::fromValue(x);
        if (i < j) acc *= LogSigned::fromLog(log_gamma_ratio(x + (j - i), x), 1);
        return acc;
    }
    LogSigned acc = LogSigned::one();
    for (unsigned i = 0; i < j; ++i) acc *= LogSigned::fromValue(a + i);
    return acc;
}

Rational pochhammer(const Rational& a, unsigned j) {
    Rational acc = 1;
    for (unsigned i = 0; i < j; ++i) acc *= a + i;
    return acc;
}

double log_beta(double a, double b) {
    requirePositive(a, "log_beta");
    requirePositive(b, "log_beta");
    return log_gamma_ratio(a, a + b) + log_gamma(b);
}

double log_surface_area(int D) {
    if (D < 1) throw ValidationError("surface_area requires D >= 1");
    return std::log(2.0) + 0.5 * D * std::log(std::numbers::pi) - log_gamma(0.5 * D);
}

double surface_area(int D) { return std::exp(log_surface_area(D)); }

}  // namespace hydro::specfun

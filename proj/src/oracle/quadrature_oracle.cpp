#include "hydromoments/errors.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hydro::oracle {

using specfun::QuadratureOptions;
using specfun::QuadratureResult;

namespace {

QuadratureResult rescale(QuadratureResult r, double logFactor, const QuadratureOptions& opt) {
    const double f = std::exp(logFactor);
    r.value *= f;
    r.errorEstimate *= f;
    r.l1Norm *= f;
    r.converged = std::isfinite(r.value) && r.errorEstimate <= opt.relTol * std::max(r.l1Norm, 1e-300) &&
                  r.nodeCount <= opt.nodeCeiling;
    return r;
}

std::vector<double> withInteriorPoints(std::vector<double> breaks, std::initializer_list<double> extra) {
    const double lo = breaks.front(), hi = breaks.back();
    for (double x : extra)
        if (x > lo && x < hi) breaks.push_back(x);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return breaks;
}

// x^e at an endpoint is only a problem for Gauss-Kronrod when e is not a non-negative integer.
bool singularPower(double e) { return e < 0.0 || e != std::nearbyint(e); }

void requireConverged(const QuadratureResult& r, const char* what, const HydrogenicState& s) {
    if (!r.converged)
        throw NumericError(std::string(what) + " quadrature did not converge for " + describe(s) +
                           " (error estimate " + std::to_string(r.errorEstimate) + ", nodes " +
                           std::to_string(r.nodeCount) + ")");
}

}  // namespace

QuadratureResult quad_position_moment(const HydrogenicState& s, Selector f, const QuadratureOptions& opt) {
    validate(s);
    const double alpha = f.kind == Selector::Kind::power ? f.alpha : 0.0;
    if (!(alpha > -s.D - 2 * s.l))
        throw ValidationError("position moment integral diverges for alpha <= -D-2l");
    const unsigned k = static_cast<unsigned>(s.n - s.l - 1);
    const double beta = 2.0 * s.l + s.D - 2.0;
    const double eta = s.n + (s.D - 3) / 2.0;
    const double scale = eta / (2.0 * s.Z);
    const double power = beta + 1.0 + alpha;  // exponent of x in the weight

    // Normalization of r^(D-1) rho dr = K^2 scale^D x^(beta+1) e^-x L^2 dx.
    const double logNorm = specfun::log_gamma(k + 1.0) - std::log(2.0 * eta) -
                           specfun::log_gamma(k + beta + 1.0);
    auto logWeight = [=](double x) -> double {
        if (x <= 0.0) return power < 0 ? INFINITY : (power == 0 ? 0.0 : -INFINITY);
        const auto lag = specfun::laguerre_log(k, beta, x);
        if (lag.isZero()) return -INFINITY;
        return power * std::log(x) - x + 2.0 * lag.logAbs;
    };
    const double bulk = std::max({4.0 * eta, power, 2.0 * eta + 2.0});
    double xmax = bulk + 60.0 + 15.0 * std::sqrt(bulk + 1.0);
    auto window = specfun::find_log_window(logWeight, 0.0, xmax);
    while (window.high >= xmax) {
        xmax *= 2.0;
        window = specfun::find_log_window(logWeight, 0.0, xmax);
    }
    const double peak = window.logPeak;
    auto breaks = withInteriorPoints(specfun::uniform_breaks(window.low, window.high, 16 + 2 * k),
                                     {2.0 * (s.l + (s.D - 3) / 2.0) + 2.0, 4.0 * eta});
    const bool logMoment = f.kind == Selector::Kind::log;
    auto integrand = [&](double x) {
        const double lw = logWeight(x);
        if (!std::isfinite(lw)) return 0.0;
        const double w = std::exp(lw - peak);
        return logMoment ? w * std::log(scale * x) : w;
    };
    auto r = specfun::integrate_panels(integrand, breaks, opt,
                                       window.low == 0.0 && (logMoment || singularPower(power)), false);
    r = rescale(r, peak + logNorm + alpha * std::log(scale), opt);
    requireConverged(r, "position", s);
    return r;
}

QuadratureResult quad_momentum_moment(const HydrogenicState& s, Selector f, const QuadratureOptions& opt) {
    validate(s);
    const double alpha = f.kind == Selector::Kind::power ? f.alpha : 0.0;
    if (!(alpha > -s.D - 2 * s.l) || !(alpha < s.D + 2 * s.l + 2))
        throw ValidationError("momentum moment integral diverges outside -D-2l < alpha < D+2l+2");
    const unsigned k = static_cast<unsigned>(s.n - s.l - 1);
    const double nu = s.l + (s.D - 1) / 2.0;
    const double eta = s.n + (s.D - 3) / 2.0;
    // 2^(2nu-1) k! (k+nu) Gamma(nu)^2 / (pi Gamma(k+2nu)), times the 2 of the theta Jacobian.
    const double logNorm = 2.0 * nu * std::log(2.0) + specfun::log_gamma(k + 1.0) + std::log(k + nu) +
                           2.0 * specfun::log_gamma(nu) - std::log(std::numbers::pi) -
                           specfun::log_gamma(k + 2.0 * nu);
    const double pi = std::numbers::pi;
    auto logWeight = [=](double th) -> double {
        const double sh = std::sin(0.5 * th), ch = std::sin(0.5 * (pi - th));
        if (sh <= 0.0 || ch <= 0.0) return -INFINITY;
        const double st = 2.0 * sh * ch;
        const double t = (ch - sh) * (ch + sh);
        const auto geg = specfun::gegenbauer_log(k, nu, t);
        if (geg.isZero()) return -INFINITY;
        return 2.0 * nu * std::log(st) + alpha * std::log(sh) + (2.0 - alpha) * std::log(ch) +
               2.0 * geg.logAbs;
    };
    auto window = specfun::find_log_window(logWeight, 0.0, pi);
    const double peak = window.logPeak;
    auto breaks = specfun::uniform_breaks(window.low, window.high, 16 + 2 * k);
    const bool logMoment = f.kind == Selector::Kind::log;
    const double logScale = std::log(s.Z / eta);
    auto integrand = [&](double th) {
        const double lw = logWeight(th);
        if (!std::isfinite(lw)) return 0.0;
        const double w = std::exp(lw - peak);
        if (!logMoment) return w;
        return w * (logScale + std::log(std::tan(0.5 * th)));
    };
    const bool left = window.low == 0.0 && (logMoment || singularPower(2.0 * nu + alpha));
    const bool right = window.high == pi && (logMoment || singularPower(2.0 * nu + 2.0 - alpha));
    auto r = specfun::integrate_panels(integrand, breaks, opt, left, right);
    r = rescale(r, peak + logNorm + alpha * logScale, opt);
    requireConverged(r, "momentum", s);
    return r;
}

}  // namespace hydro::oracle

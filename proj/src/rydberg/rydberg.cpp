#include "hydromoments/rydberg.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <string>

namespace hydro::rydberg {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

void check_ratio(RatioLambda r) {
    if (!std::isfinite(r.value) || r.value < 0.0) throw ValidationError("ratio lambda must be finite and >= 0");
}

void check_positive_ratio(RatioLambda r) {
    check_ratio(r);
    if (r.value == 0.0) throw ValidationError("the closed form needs lambda > 0 (a_lambda vanishes at 0)");
}

Evaluation rydberg_eval(double value, std::string validity) {
    Evaluation ev;
    ev.value = value;
    ev.method = Method::rydberg;
    ev.validity = std::move(validity);
    return ev;
}

specfun::QuadratureResult require(const specfun::QuadratureResult& q, const char* what) {
    if (!q.converged) throw NumericError(std::string(what) + ": quadrature did not converge");
    return q;
}

void check_fixedD_position(double alpha) {
    if (!(alpha > -1.5) || !std::isfinite(alpha))
        throw ValidationError("fixed-D Rydberg position form requires alpha > -3/2");
}

void check_fixedD_momentum(double alpha) {
    if (!(alpha > -1.0 && alpha < 3.0)) throw ValidationError("fixed-D Rydberg momentum form requires -1 < alpha < 3");
}

}  // namespace

double laguerre_parameter(const HydrogenicState& s) { return 2.0 * s.l + s.D - 2.0; }

RatioLambda ratio_from_state(const HydrogenicState& s) {
    validate(s);
    const int k = s.n - s.l - 1;
    if (k < 1) throw ValidationError("ratio nu/k needs at least one radial node");
    return {laguerre_parameter(s) / k};
}

double xi_of(RatioLambda r) {
    check_ratio(r);
    return std::sqrt(r.value + 0.25) / (r.value + 0.5);
}

EquilibriumMeasure equilibrium_position(RatioLambda r) {
    check_ratio(r);
    const double root = std::sqrt(1.0 + 2.0 * r.value);
    EquilibriumMeasure m;
    m.kind = MeasureKind::position;
    m.lambda = r.value;
    // a = lambda+1-sqrt(1+2 lambda) written without cancellation.
    m.supportLow = r.value * r.value / (r.value + 1.0 + root);
    m.supportHigh = r.value + 1.0 + root;
    const double a = m.supportLow, b = m.supportHigh;
    m.density = [a, b](double x) {
        if (x <= a || x >= b) return 0.0;
        return std::sqrt((x - a) * (b - x)) / (pi * x);
    };
    return m;
}

EquilibriumMeasure equilibrium_momentum(RatioLambda r) {
    const double xi = xi_of(r);
    EquilibriumMeasure m;
    m.kind = MeasureKind::momentum;
    m.lambda = r.value;
    m.supportLow = -xi;
    m.supportHigh = xi;
    const double c = (1.0 + 2.0 * r.value) / pi;
    m.density = [xi, c](double x) {
        if (std::fabs(x) >= xi) return 0.0;
        return c * std::sqrt((xi - x) * (xi + x)) / ((1.0 - x) * (1.0 + x));
    };
    return m;
}

specfun::QuadratureResult integrate_measure(const EquilibriumMeasure& m, const std::function<double(double)>& f) {
    if (m.kind == MeasureKind::position) {
        const double a = m.supportLow, w = m.supportHigh - m.supportLow;
        auto g = [&](double th) {
            const double s = std::sin(th), c = std::cos(th);
            const double x = a + w * s * s;
            return f(x) * 2.0 * w * w * s * s * c * c / (pi * x);
        };
        return require(specfun::integrate_panels(g, specfun::uniform_breaks(0.0, pi / 2, 4), {}, a == 0.0, false),
                       "position measure");
    }
    const double xi = m.supportHigh, c = (1.0 + 2.0 * m.lambda) / pi;
    auto g = [&](double th) {
        const double s = std::sin(th);
        const double t = xi * std::cos(th);
        const double oneMinusT2 = (1.0 - xi * xi) + xi * xi * s * s;
        return f(t) * c * xi * xi * s * s / oneMinusT2;
    };
    const bool edge = xi == 1.0;
    return require(specfun::integrate_panels(g, specfun::uniform_breaks(0.0, pi, 6), {}, edge, edge),
                   "momentum measure");
}

Evaluation pos_rydberg_fixedD(const HydrogenicState& s, double alpha) {
    validate(s);
    check_fixedD_position(alpha);
    const double eta = derive_params(s).eta;
    const double logValue = alpha * std::log(eta * eta / s.Z) + (alpha + 1.0) * std::log(2.0) +
                            specfun::log_gamma_ratio(alpha + 1.5, alpha + 2.0) - 0.5 * std::log(pi);
    return rydberg_eval(std::exp(logValue), "alpha > -3/2, n >> 1 at fixed D");
}

Evaluation mom_rydberg_fixedD(const HydrogenicState& s, double alpha) {
    validate(s);
    check_fixedD_momentum(alpha);
    const double eta = derive_params(s).eta;
    const double shape = alpha == 1.0 ? 2.0 / pi : (alpha - 1.0) / std::sin(pi * (alpha - 1.0) / 2.0);
    return rydberg_eval(std::pow(s.Z / eta, alpha) * shape, "-1 < alpha < 3, n >> 1 at fixed D");
}

Evaluation mom_rydberg_fixed_nl_gap(const HydrogenicState& s, double alpha, GapScheme scheme) {
    validate(s);
    const double r3 = std::sqrt(3.0);
    auto g = [alpha, r3](double th) {
        const double c = std::cos(th);
        return std::pow(2.0 - r3 * c, alpha / 2.0) * std::pow(2.0 + r3 * c, 1.0 - alpha / 2.0);
    };
    double integral = 0.0;
    if (scheme == GapScheme::gaussKronrod) {
        integral = require(specfun::integrate_gk(g, 0.0, pi, {1e-13, 15, 20000}), "fixed n-l gap").value;
    } else {
    // Trapezoid on a smooth even periodic integrand; refine until two levels agree.
        double previous = NAN;
        for (unsigned panels = 8; panels <= (1u << 16); panels *= 2) {
            const double h = pi / panels;
            double sum = 0.5 * (g(0.0) + g(pi));
            for (unsigned i = 1; i < panels; ++i) sum += g(i * h);
            integral = sum * h;
            if (std::fabs(integral - previous) <= 1e-15 * std::fabs(integral)) break;
            previous = integral;
        }
    }
    const double eta = derive_params(s).eta;
    return rydberg_eval(std::pow(s.Z / eta, alpha) * integral / (2.0 * pi), "n >> 1 with n-l fixed, bounded D");
}

LimitingIntegrals limiting_integrals(double alpha, RatioLambda ratio) {
    check_ratio(ratio);
    if (ratio.value == 0.0 && !(alpha > -1.5))
        throw ValidationError("position limiting integral diverges at lambda = 0 unless alpha > -3/2");
    if (ratio.value == 0.0 && !(alpha > -1.0 && alpha < 3.0))
        throw ValidationError("momentum limiting integral diverges at lambda = 0 unless -1 < alpha < 3");
    LimitingIntegrals out;
    out.position = integrate_measure(equilibrium_position(ratio), [alpha](double x) { return std::pow(x, alpha + 1.0); }).value;
    out.momentum = (1.0 + 2.0 * ratio.value) / pi * momentum_moment_integral(alpha, ratio);
    return out;
}

double position_moment_closed_form(double alpha, RatioLambda ratio) {
    check_positive_ratio(ratio);
    const auto m = equilibrium_position(ratio);
    const double a = m.supportLow, b = m.supportHigh;
    return std::pow(a, alpha) * (b - a) * (b - a) / 8.0 * specfun::gauss_2f1(-alpha, 1.5, 3.0, (a - b) / a);
}

double momentum_moment_integral(double alpha, RatioLambda ratio) {
    const double xi = xi_of(ratio);
    auto g = [alpha, xi](double th) {
        const double s = std::sin(th), half = std::sin(th / 2.0), halfc = std::cos(th / 2.0);
        // 1 -/+ xi cos(theta) without cancellation near the support edges.
        const double oneMinus = (1.0 - xi) + 2.0 * xi * half * half;
        const double onePlus = (1.0 - xi) + 2.0 * xi * halfc * halfc;
        return std::pow(oneMinus, alpha / 2.0 - 1.0) * std::pow(onePlus, -alpha / 2.0) * xi * xi * s * s;
    };
    const bool edge = xi == 1.0;
    return require(specfun::integrate_panels(g, specfun::uniform_breaks(0.0, pi, 6), {}, edge, edge),
                   "momentum limiting integral")
        .value;
}

double momentum_moment_printed(double alpha, RatioLambda ratio) {
    const double xi = xi_of(ratio);
    const double u = 2.0 * xi / (1.0 + xi);
    return pi / 8.0 * specfun::appell_f1(1.5, 1.0 - alpha / 2.0, alpha / 2.0, 3.0, u, -u);
}

double momentum_moment_derived(double alpha, RatioLambda ratio) {
    check_positive_ratio(ratio);
    const double xi = xi_of(ratio);
    const double u = 2.0 * xi / (1.0 + xi), v = -2.0 * xi / (1.0 - xi);
    const double pre = 4.0 * xi * xi * std::pow(1.0 + xi, alpha / 2.0 - 1.0) * std::pow(1.0 - xi, -alpha / 2.0);
    return pre * pi / 8.0 * specfun::appell_f1(1.5, 1.0 - alpha / 2.0, alpha / 2.0, 3.0, u, v);
}

Evaluation pos_rydberg_largeD(const HydrogenicState& s, double alpha, RatioLambda ratio, bool printedForm) {
    validate(s);
    check_fixedD_position(alpha);
    check_ratio(ratio);
    if (ratio.value == 0.0 && alpha < 0.0) throw ValidationError("a_lambda = 0 at lambda = 0: alpha < 0 is singular");
    // a^alpha (b-a)^2/8 2F1(...), which equals the limiting measure moment; at lambda = 0 only
    // the quadrature route is defined.
    const double moment = ratio.value > 0.0 ? position_moment_closed_form(alpha, ratio)
                                            : limiting_integrals(alpha, ratio).position;
    if (printedForm) {
        const double logPre = (alpha - 1.0) * std::log(2.0 * s.n + s.D) + (alpha + 1.0) * std::log(double(s.n)) -
                              (2.0 * alpha + 3.0) * std::log(2.0) - alpha * std::log(s.Z);
        return rydberg_eval(std::exp(logPre) * 8.0 * moment, "printed joint-limit formula");
    }
    const auto p = derive_params(s);
    if (p.k < 1) throw ValidationError("joint-limit position moment needs k = n-l-1 >= 1");
    const double logPre = alpha * std::log(p.eta / (2.0 * s.Z)) + (alpha + 1.0) * std::log(double(p.k)) -
                          std::log(2.0 * p.eta);
    return rydberg_eval(std::exp(logPre) * moment, "measure-moment route");
}

Evaluation mom_rydberg_largeD(const HydrogenicState& s, double alpha, RatioLambda ratio, bool printedForm) {
    validate(s);
    check_fixedD_momentum(alpha);
    check_ratio(ratio);
    const double scale = std::pow(2.0 * s.Z / (2.0 * s.n + s.D - 3.0), alpha);
    if (printedForm) {
        const double nuLag = laguerre_parameter(s);
        if (!(nuLag > 0.0)) throw ValidationError("printed momentum formula needs 2l+D-2 > 0");
        const double logRatio = 2.0 * (specfun::log_gamma(1.0 + (s.D - 1.0) / 2.0) - specfun::log_gamma(nuLag));
        if (logRatio > 700.0) throw NumericError("printed momentum formula: gamma ratio overflows");
        const double xi = xi_of(ratio), u = 2.0 * xi / (1.0 + xi);
        const double f1 = specfun::appell_f1(1.5, 1.0 - alpha / 2.0, alpha / 2.0, 3.0, u, -u);
        return rydberg_eval(scale * (1.0 + 2.0 * ratio.value) / 8.0 * f1 * std::exp(logRatio),
                            "printed joint-limit formula");
    }
    return rydberg_eval(scale * limiting_integrals(alpha, ratio).momentum, "measure-moment route");
}

}  // namespace hydro::rydberg

#include "hydromoments/largedim.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/specfun/gamma.hpp"

#include <cmath>
#include <sstream>

namespace hydro::largedim {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Evaluation asymptotic(double value, std::string validity) {
    Evaluation ev;
    ev.value = value;
    ev.method = Method::largeD;
    ev.validity = std::move(validity);
    return ev;
}

void require_circular(const HydrogenicState& s) {
    validate(s);
    if (s.l != s.n - 1)
        throw ValidationError("circular-state formula requires l = n-1, got " + describe(s));
}

double positionCorrection1(int l, double alpha) { return (alpha + 1.0) * (alpha + 4.0 * l - 2.0) / 2.0; }

double momentumCoefficient(const HydrogenicState& s, double alpha) {
    return alpha * (alpha - 2.0) * (2.0 * s.n - 2.0 * s.l - 1.0) / 2.0;
}

}  // namespace

Evaluation position_largeD(const HydrogenicState& s, double alpha) {
    hydrogenic::check_position_alpha(s, alpha);
    const double D = s.D;
    const int k = s.n - s.l - 1;
    const double lead = std::pow(D * D / (4.0 * s.Z), alpha);
    const double f1 = 1.0 + positionCorrection1(s.l, alpha) / D;
    const double f2 = 1.0 + (alpha + 1.0) * (alpha + 2.0) * k / D;
    return asymptotic(lead * f1 * f2, "alpha > -D-2l = " + fmt(-D - 2.0 * s.l));
}

Evaluation momentum_largeD(const HydrogenicState& s, double alpha) {
    hydrogenic::check_momentum_alpha(s, alpha);
    const double D = s.D;
    const double value = std::pow(2.0 * s.Z / D, alpha) * (1.0 + momentumCoefficient(s, alpha) / D);
    return asymptotic(value, "-D-2l < alpha < D+2l+2");
}

Evaluation momentum_largeD_eta(const HydrogenicState& s, double alpha) {
    hydrogenic::check_momentum_alpha(s, alpha);
    const auto p = derive_params(s);
    const double value = std::pow(s.Z / p.eta, alpha) * (1.0 + momentumCoefficient(s, alpha) / s.D);
    return asymptotic(value, "-D-2l < alpha < D+2l+2");
}

Evaluation momentum_largeD_nu(const HydrogenicState& s, double alpha) {
    hydrogenic::check_momentum_alpha(s, alpha);
    const auto p = derive_params(s);
    const double value =
        std::pow(s.Z / p.eta, alpha) * (1.0 + alpha * (alpha - 2.0) * (2.0 * p.k + 1.0) / (4.0 * p.nu));
    return asymptotic(value, "-D-2l < alpha < D+2l+2");
}

Expansion position_expansion(const HydrogenicState& s, double alpha) {
    hydrogenic::check_position_alpha(s, alpha);
    const int k = s.n - s.l - 1;
    Expansion e;
    e.leadingScale = std::pow(double(s.D) * s.D / (4.0 * s.Z), alpha);
    e.terms = {{0, 1.0}, {1, positionCorrection1(s.l, alpha) + (alpha + 1.0) * (alpha + 2.0) * k}};
    return e;
}

Expansion momentum_expansion(const HydrogenicState& s, double alpha) {
    hydrogenic::check_momentum_alpha(s, alpha);
    Expansion e;
    e.leadingScale = std::pow(2.0 * s.Z / s.D, alpha);
    e.terms = {{0, 1.0}, {1, momentumCoefficient(s, alpha)}};
    return e;
}

Evaluation log_position_largeD(const HydrogenicState& s) {
    validate(s);
    const double D = s.D;
    const double value = 2.0 * std::log(D) - std::log(4.0 * s.Z) + (5.0 * s.n - s.l - 6.5) / D;
    return asymptotic(value, "D >= 2");
}

Evaluation log_momentum_largeD(const HydrogenicState& s) {
    validate(s);
    const double D = s.D;
    const double value = -(4.0 * s.n - 2.0 * s.l - 4.0) / D - std::log(D) + std::log(2.0 * s.Z);
    return asymptotic(value, "D >= 2");
}

Evaluation circular_position_largeD(const HydrogenicState& s, double alpha) {
    require_circular(s);
    hydrogenic::check_position_alpha(s, alpha);
    const double D = s.D;
    const double value =
        std::pow(D * D / (4.0 * s.Z), alpha) * (1.0 + (alpha + 1.0) * (4.0 * s.n + alpha - 6.0) / (2.0 * D));
    return asymptotic(value, "l = n-1, alpha > -D-2l");
}

Evaluation circular_momentum_largeD(const HydrogenicState& s, double alpha) {
    require_circular(s);
    hydrogenic::check_momentum_alpha(s, alpha);
    const double D = s.D;
    const double value =
        std::pow(2.0 * s.Z / D, alpha) * (1.0 + alpha * (alpha - 2.0) * (2.0 * s.n - 1.0) / (2.0 * D));
    return asymptotic(value, "l = n-1, -D-2l < alpha < D+2l+2");
}

Evaluation circular_log_momentum_largeD_printed(const HydrogenicState& s) {
    require_circular(s);
    const double D = s.D;
    return asymptotic(-1.0 / D - std::log(D / 2.0) + std::log(s.Z), "l = n-1");
}

double hyp3f2_largeD_partial(const HydrogenicState& s, double alpha, unsigned m) {
    validate(s);
    if (m < 1) throw ValidationError("hyp3f2_largeD_partial: m must be >= 1");
    const double a = -(s.n - s.l - 1.0), b = -alpha - 1.0, c = alpha + 2.0;
    const double d = 2.0 * s.l - 1.0 + s.D;
    double term = 1.0, sum = 1.0;
    for (unsigned j = 0; j + 1 < m; ++j) {
        term *= (a + j) * (b + j) * (c + j) / ((d + j) * (1.0 + j) * (1.0 + j));
        if (term == 0.0) break;
        sum += term;
    }
    return sum;
}

double gamma_ratio_expansion(int l, double alpha, int D, int orders) {
    if (!(D + 2 * l - 1 > 0)) throw ValidationError("gamma_ratio_expansion requires D+2l-1 > 0");
    if (orders < 1 || orders > 2)
        throw ValidationError("gamma_ratio_expansion: orders counts retained terms and must be 1 or 2");
    double value = std::pow(double(D), 1.0 + alpha);
    if (orders == 2) value *= 1.0 + positionCorrection1(l, alpha) / D;
    return value;
}

double gamma_ratio_exact(int l, double alpha, int D) {
    if (!(D + 2 * l - 1 > 0) || !(D + 2 * l + alpha > 0))
        throw ValidationError("gamma_ratio_exact requires D+2l-1 > 0 and D+2l+alpha > 0");
    return std::exp(specfun::log_gamma_ratio(D + 2.0 * l + alpha, D + 2.0 * l - 1.0));
}

}  // namespace hydro::largedim

#include "hydromoments/hydrogenic.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/polynomials.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hydro::hydrogenic {

using specfun::Rational;

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

bool isInteger(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

// Rational power with integer exponent.
Rational ipow(const Rational& base, long e) {
    Rational out = 1;
    const Rational b = e >= 0 ? base : Rational(1 / base);
    for (long i = 0; i < std::labs(e); ++i) out *= b;
    out.canonicalize();
    return out;
}

// Gamma(a + m) / Gamma(a) for integer m of either sign.
Rational gammaShift(const Rational& a, long m) {
    if (m >= 0) return specfun::pochhammer(a, static_cast<unsigned>(m));
    return 1 / specfun::pochhammer(a + m, static_cast<unsigned>(-m));
}

std::string positionValidity(const HydrogenicState& s, double alpha) {
    return "alpha > -D-2l (" + fmt(alpha) + " > " + std::to_string(-s.D - 2 * s.l) + ")";
}

std::string momentumValidity(const HydrogenicState& s, double alpha) {
    return "-D-2l < alpha < D+2l+2 (" + std::to_string(-s.D - 2 * s.l) + " < " + fmt(alpha) +
           " < " + std::to_string(s.D + 2 * s.l + 2) + ")";
}

void requireNonzero(double x, const char* what, const HydrogenicState& s) {
    if (std::fabs(x) < 1e-300)
        throw ValidationError(std::string("singular denominator ") + what + " = 0 for state " +
                              describe(s));
}

}  // namespace

void check_position_alpha(const HydrogenicState& s, double alpha) {
    validate(s);
    if (!std::isfinite(alpha) || !(alpha > -s.D - 2 * s.l))
        throw ValidationError("position moment diverges: requires " + positionValidity(s, alpha));
}

void check_momentum_alpha(const HydrogenicState& s, double alpha) {
    validate(s);
    if (!std::isfinite(alpha) || !(alpha > -s.D - 2 * s.l) || !(alpha < s.D + 2 * s.l + 2))
        throw ValidationError("momentum moment diverges: requires " + momentumValidity(s, alpha));
}

double energy(const HydrogenicState& s) {
    const auto p = derive_params(s);
    return -s.Z * s.Z / (2.0 * p.eta * p.eta);
}

double log_radial_density_position(const HydrogenicState& s, double r) {
    const auto p = derive_params(s);
    if (!(r > 0.0)) throw ValidationError("radial density needs r > 0");
    const double beta = 2.0 * s.l + s.D - 2.0;
    const double x = r / p.lengthScale;
    const double logK2 = s.D * std::log(2.0 * s.Z / p.eta) + specfun::log_gamma(p.k + 1.0) -
                         std::log(2.0 * p.eta) - specfun::log_gamma(s.n + s.l + s.D - 2.0);
    const auto lag = specfun::laguerre_log(static_cast<unsigned>(p.k), beta, x);
    if (lag.isZero()) return -INFINITY;
    return logK2 + 2.0 * s.l * std::log(x) - x + 2.0 * lag.logAbs;
}

double radial_density_position(const HydrogenicState& s, double r) {
    return std::exp(log_radial_density_position(s, r));
}

double log_radial_density_momentum(const HydrogenicState& s, double p) {
    const auto d = derive_params(s);
    if (!(p > 0.0)) throw ValidationError("momentum density needs p > 0");
    const double u = d.eta * p / s.Z;  // eta * p~
    const double u2 = u * u;
    const double t = (1.0 - u2) / (1.0 + u2);
    const double logKp2 = -s.D * std::log(s.Z) + (4.0 * d.grandL + 6.0) * std::log(2.0) +
                          specfun::log_gamma(d.k + 1.0) + 2.0 * specfun::log_gamma(d.grandL + 1.0) +
                          (s.D + 1.0) * std::log(d.eta) - std::log(2.0 * std::numbers::pi) -
                          specfun::log_gamma(s.n + s.l + s.D - 2.0);
    const auto geg = specfun::gegenbauer_log(static_cast<unsigned>(d.k), d.grandL + 1.0, t);
    if (geg.isZero()) return -INFINITY;
    return logKp2 + 2.0 * s.l * std::log(u) - (2.0 * d.grandL + 4.0) * std::log1p(u2) +
           2.0 * geg.logAbs;
}

double radial_density_momentum(const HydrogenicState& s, double p) {
    return std::exp(log_radial_density_momentum(s, p));
}

Evaluation position_expectation(const HydrogenicState& s, double alpha, Precision precision) {
    check_position_alpha(s, alpha);
    const auto p = derive_params(s);
    Evaluation ev;
    ev.method = Method::exact;
    ev.validity = positionValidity(s, alpha);
    if (alpha == 0.0) {
        ev.value = 1.0;
        if (precision == Precision::rational) ev.exact = Rational(1);
        return ev;
    }
    const specfun::HypSpec spec{{-double(p.k), -alpha - 1.0, alpha + 2.0}, {2.0 * p.grandL + 2.0, 1.0}, 1.0};
    const bool exactPossible = isInteger(alpha) && specfun::isSimpleRational(s.Z);
    if (precision == Precision::rational && exactPossible) {
        const long a = std::lround(alpha);
        const Rational eta = exact_eta(s), L = exact_grand_l(s), Z = specfun::toRational(s.Z);
        Rational pref = ipow(eta, a - 1) / (ipow(Rational(2), a + 1) * ipow(Z, a)) *
                        gammaShift(2 * L + 2, a + 1);
        const auto h = specfun::hyp_terminating(spec, Precision::rational);
        Rational value = pref * *h.exact;
        value.canonicalize();
        ev.exact = value;
        ev.value = value.get_d();
        return ev;
    }
    const double logPref = (alpha - 1.0) * std::log(p.eta) - (alpha + 1.0) * std::log(2.0) -
                           alpha * std::log(s.Z) +
                           specfun::log_gamma_ratio(2.0 * p.grandL + alpha + 3.0, 2.0 * p.grandL + 2.0);
    const auto h = specfun::hyp_terminating(
        spec, precision == Precision::rational ? Precision::automatic : precision);
    ev.value = std::exp(logPref) * h.value;
    if (!std::isfinite(ev.value)) throw NumericError("position moment overflowed for " + describe(s));
    return ev;
}

Evaluation position_closed_forms(const HydrogenicState& s, int alpha) {
    check_position_alpha(s, alpha);
    const auto p = derive_params(s);
    const double eta = p.eta, L = p.grandL, Z = s.Z;
    Evaluation ev;
    ev.method = Method::closedForm;
    ev.validity = positionValidity(s, alpha);
    switch (alpha) {
        case -1: ev.value = Z / (eta * eta); break;
        case 1: ev.value = (3 * eta * eta - L * (L + 1)) / (2 * Z); break;
        case 2: ev.value = eta * eta * (5 * eta * eta + 1 - 3 * L * (L + 1)) / (2 * Z * Z); break;
        case -2:
            requireNonzero(L + 0.5, "L+1/2", s);
            ev.value = Z * Z / (eta * eta * eta * (L + 0.5));
            break;
        case -3:
            requireNonzero(L, "L", s);
            requireNonzero(L + 0.5, "L+1/2", s);
            requireNonzero(L + 1, "L+1", s);
            ev.value = Z * Z * Z / (eta * eta * eta * L * (L + 0.5) * (L + 1));
            break;
        case -4:
            requireNonzero(L - 0.5, "L-1/2", s);
            requireNonzero(L, "L", s);
            requireNonzero(L + 0.5, "L+1/2", s);
            requireNonzero(L + 1, "L+1", s);
            requireNonzero(L + 1.5, "L+3/2", s);
            ev.value = std::pow(Z, 4) * (3 * eta * eta - L * (L + 1)) /
                       (2 * std::pow(eta, 5) * (L - 0.5) * L * (L + 0.5) * (L + 1) * (L + 1.5));
            break;
        default:
            throw ValidationError("position closed forms exist for alpha in {-4,-3,-2,-1,1,2}, got " +
                                  std::to_string(alpha));
    }
    return ev;
}

Evaluation log_position_expectation(const HydrogenicState& s) {
    const auto p = derive_params(s);
    Evaluation ev;
    ev.method = Method::exact;
    ev.validity = "all states";
    ev.value = std::log(p.eta) + (2.0 * s.n - 2.0 * s.l - 1.0) / (2.0 * s.n + s.D - 3.0) +
               specfun::digamma(s.n + s.l + s.D - 2.0) - std::log(2.0 * s.Z);
    return ev;
}

Evaluation momentum_expectation(const HydrogenicState& s, double alpha, Precision precision) {
    check_momentum_alpha(s, alpha);
    const auto p = derive_params(s);
    Evaluation ev;
    ev.method = Method::exact;
    ev.validity = momentumValidity(s, alpha);
    if (alpha == 0.0) {
        ev.value = 1.0;
        if (precision == Precision::rational) ev.exact = Rational(1);
        return ev;
    }
    const double nu = p.nu, k = p.k;
    const double a1 = nu + (alpha + 1.0) / 2.0, a2 = nu + (3.0 - alpha) / 2.0;
    const specfun::HypSpec spec{{-k, k + 2 * nu, nu, a1, a2}, {2 * nu, nu + 0.5, nu + 1, nu + 1.5}, 1.0};
    const bool exactPossible = isInteger(alpha / 2.0) && specfun::isSimpleRational(s.Z);
    if (precision == Precision::rational && exactPossible) {
        const long m = std::lround(alpha / 2.0);
        const Rational eta = exact_eta(s), Z = specfun::toRational(s.Z);
        const Rational nuQ = exact_grand_l(s) + 1;
        const Rational kQ(p.k);
        // G = Gamma(nu+1/2+m) Gamma(nu+3/2-m) / (Gamma(nu+1/2) Gamma(nu+3/2))
        const Rational G = gammaShift(nuQ + Rational(1, 2), m) * gammaShift(nuQ + Rational(3, 2), -m);
        Rational pref = ipow(Z / eta, 2 * m) * (kQ + nuQ) * specfun::pochhammer(2 * nuQ, p.k) /
                        (specfun::factorial(p.k) * nuQ) * G;
        const auto h = specfun::hyp_terminating(spec, Precision::rational);
        Rational value = pref * *h.exact;
        value.canonicalize();
        ev.exact = value;
        ev.value = value.get_d();
        return ev;
    }
    const double logPref = alpha * (std::log(s.Z) - std::log(p.eta)) + std::log(k + nu) +
                           specfun::pochhammer(2 * nu, p.k).logAbs - specfun::log_gamma(k + 1.0) -
                           std::log(nu) + specfun::log_gamma_ratio(a1, nu + 0.5) +
                           specfun::log_gamma_ratio(a2, nu + 1.5);
    const auto h = specfun::hyp_terminating(
        spec, precision == Precision::rational ? Precision::automatic : precision);
    ev.value = std::exp(logPref) * h.value;
    if (!std::isfinite(ev.value)) throw NumericError("momentum moment overflowed for " + describe(s));
    return ev;
}

Evaluation momentum_closed_forms(const HydrogenicState& s, int alpha) {
    check_momentum_alpha(s, alpha);
    const auto p = derive_params(s);
    const double eta = p.eta, L = p.grandL, Z = s.Z;
    const double k = p.k, nu = p.nu;
    Evaluation ev;
    ev.method = Method::closedForm;
    ev.validity = momentumValidity(s, alpha);
    switch (alpha) {
        case -2:
            requireNonzero(2 * L + 1, "2L+1", s);
            ev.value = eta * eta / (Z * Z) * (8 * eta - 3 * (2 * L + 1)) / (2 * L + 1);
            break;
        case 2: ev.value = Z * Z / (eta * eta); break;
        case 4:
            requireNonzero(2 * L + 1, "2L+1", s);
            ev.value = std::pow(Z / eta, 4) * (8 * eta - 3 * (2 * L + 1)) / (2 * L + 1);
            break;
        case 6:
            requireNonzero(2 * L + 3, "2L+3", s);
            requireNonzero(2 * L + 1, "2L+1", s);
            requireNonzero(2 * L - 1, "2L-1", s);
            ev.value = std::pow(Z / eta, 6) * (4 * k + 2 * nu + 1) *
                       (16 * k * k + 40 * nu * k - 4 * k + 4 * nu * nu + 16 * nu + 15) /
                       ((2 * L + 3) * (2 * L + 1) * (2 * L - 1));
            break;
        default:
            throw ValidationError("momentum closed forms exist for alpha in {-2,2,4,6}, got " +
                                  std::to_string(alpha));
    }
    return ev;
}

double momentum_reflection(const HydrogenicState& s, int beta) {
    if (beta < 0) throw ValidationError("reflection needs beta >= 0");
    const auto p = derive_params(s);
    const double lhs = momentum_expectation(s, -beta).value;
    const double rhs = std::pow(p.eta, 2.0 * beta + 2.0) * std::pow(s.Z, -2.0 * beta - 2.0) *
                       momentum_expectation(s, beta + 2.0).value;
    return std::fabs(lhs - rhs) / std::fabs(lhs);
}

Evaluation log_momentum_expectation(const HydrogenicState& s) {
    const auto p = derive_params(s);
    const double m = 2.0 * s.n + s.D - 3.0;
    if (m * m == 1.0)
        throw ValidationError("log momentum moment has a degenerate denominator (2n+D-3)^2 = 1 for " +
                              describe(s));
    Evaluation ev;
    ev.method = Method::exact;
    ev.validity = "(2n+D-3)^2 != 1";
    ev.value = -std::log(p.eta) + (2.0 * s.l + s.D - 2.0) * m / (m * m - 1.0) - 1.0 + std::log(s.Z);
    return ev;
}

}  // namespace hydro::hydrogenic

#include "hydromoments/entropy.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/polynomials.hpp"
#include "hydromoments/specfun/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace hydro::entropy {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Radial problem in an integration variable y: density log rho(y), log of the measure
// r^(D-1) dr/dy, and the polynomial whose zeros are the radial nodes.
struct RadialModel {
    double low = 0.0;
    double high = 0.0;
    std::function<double(double)> logRho;
    std::function<double(double)> logJacobian;
    std::function<double(double)> nodePolynomial;
};

RadialModel position_model(const HydrogenicState& s, double q) {
    const auto p = derive_params(s);
    RadialModel m;
    m.low = 0.0;
    m.high = (4.0 * (2.0 * p.k + s.D + 2.0) + 80.0) / std::min(q, 1.0);
    m.logRho = [s, scale = p.lengthScale](double x) {
        return x > 0.0 ? hydrogenic::log_radial_density_position(s, scale * x) : -kInf;
    };
    m.logJacobian = [D = s.D, logScale = std::log(p.lengthScale)](double x) {
        return x > 0.0 ? D * logScale + (D - 1.0) * std::log(x) : -kInf;
    };
    m.nodePolynomial = [k = unsigned(p.k), beta = 2.0 * s.l + s.D - 2.0](double x) {
        return specfun::laguerre(k, beta, x);
    };
    return m;
}

// theta with cos(theta) = (1-u^2)/(1+u^2), u = eta p/Z.
RadialModel momentum_model(const HydrogenicState& s) {
    const auto p = derive_params(s);
    RadialModel m;
    m.low = 0.0;
    m.high = pi;
    const double scale = s.Z / p.eta;
    m.logRho = [s, scale](double th) {
        if (!(th > 0.0 && th < pi)) return -kInf;
        const double mom = scale * std::tan(th / 2.0);
        return std::isfinite(mom) ? hydrogenic::log_radial_density_momentum(s, mom) : -kInf;
    };
    m.logJacobian = [D = s.D, scale](double th) {
        if (!(th > 0.0 && th < pi)) return -kInf;
        const double c = std::cos(th / 2.0);
        return (D - 1.0) * std::log(scale * std::tan(th / 2.0)) + std::log(scale / 2.0) - 2.0 * std::log(c);
    };
    m.nodePolynomial = [k = unsigned(p.k), lam = p.grandL + 1.0](double th) {
        return specfun::gegenbauer(k, lam, std::cos(th));
    };
    return m;
}

RadialModel model_for(const HydrogenicState& s, Space space, double q) {
    return space == Space::position ? position_model(s, q) : momentum_model(s);
}

std::vector<double> node_breaks(const RadialModel& m, double low, double high) {
    std::vector<double> breaks{low};
    constexpr int grid = 4000;
    const double h = (high - low) / grid;
    double previous = m.nodePolynomial(low + 0.5 * h);
    for (int i = 1; i < grid; ++i) {
        const double y = low + (i + 0.5) * h;
        const double value = m.nodePolynomial(y);
        if (value == 0.0) {
            breaks.push_back(y);
        } else if (previous != 0.0 && std::signbit(value) != std::signbit(previous)) {
            boost::uintmax_t iterations = 200;
            const auto bracket = boost::math::tools::toms748_solve(
                m.nodePolynomial, y - h, y, boost::math::tools::eps_tolerance<double>(50), iterations);
            breaks.push_back(0.5 * (bracket.first + bracket.second));
        }
        previous = value;
    }
    breaks.push_back(high);
    return breaks;
}

// Integral of f over [low, high] split at the radial nodes; tanh-sinh copes with the
// logarithmic endpoint behaviour of rho log rho at a node.
double integrate_segments(const std::function<double(double)>& f, const std::vector<double>& breaks,
                          const char* what) {
    double total = 0.0;
    specfun::QuadratureOptions opt;
    opt.relTol = 1e-12;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        const auto r = specfun::integrate_tanh_sinh(f, breaks[i], breaks[i + 1], opt);
        if (!r.converged && r.errorEstimate > 1e-9 * std::max(1.0, r.l1Norm))
            throw NumericError(std::string(what) + ": entropy quadrature did not converge");
        total += r.value;
    }
    return total;
}

struct LogIntegral {
    double logValue;
};

// log of int exp(logJacobian + q logRho) dy, factoring out the peak.
double log_power_integral(const RadialModel& m, double q, double& shannonPart, bool wantShannon) {
    auto logIntegrand = [&](double y) { return m.logJacobian(y) + q * m.logRho(y); };
    const auto window = specfun::find_log_window(logIntegrand, m.low, m.high, 4000, 80.0);
    const auto breaks = node_breaks(m, window.low, window.high);
    const double peak = window.logPeak;
    const double integral = integrate_segments(
        [&](double y) {
            const double v = logIntegrand(y) - peak;
            return std::isfinite(v) ? std::exp(v) : 0.0;
        },
        breaks, "entropic moment");
    if (wantShannon) {
        shannonPart = -integrate_segments(
            [&](double y) {
                const double lr = m.logRho(y);
                const double lw = m.logJacobian(y) + lr;
                return std::isfinite(lw) ? std::exp(lw) * lr : 0.0;
            },
            breaks, "Shannon entropy");
    }
    return peak + std::log(integral);
}

void require_l0(const HydrogenicState& s) {
    validate(s);
    if (s.l != 0)
        throw ValidationError("entropies are computed for l = 0 states only; got " + describe(s));
}

void require_q(double q) {
    if (!(q > 0.0) || q == 1.0 || !std::isfinite(q)) throw ValidationError("entropic order q must be > 0 and != 1");
}

double moment(const HydrogenicState& s, double a, Space space) {
    return space == Space::position ? hydrogenic::position_expectation(s, a).value
                                    : hydrogenic::momentum_expectation(s, a).value;
}

std::optional<EntropyValue> entropy_if_available(const HydrogenicState& s, Kind kind, double q, Space space) {
    if (s.l != 0) return std::nullopt;
    return entropy_quadrature(s, kind, q, space);
}

// log of L_{1|2} <x^a>^(-D(q-1)/a), a = +/- alpha.
double log_moment_bound(const HydrogenicState& s, double q, double alpha, int momentSign, Space space) {
    if (!(alpha > 0.0)) throw ValidationError("bound parameter alpha must be > 0");
    if (momentSign != 1 && momentSign != -1) throw ValidationError("moment sign must be +1 or -1");
    const double a = momentSign * alpha;
    const double logL = momentSign > 0 ? log_l1(q, alpha, s.D) : log_l2(q, alpha, s.D);
    return logL - s.D * (q - 1.0) / a * std::log(moment(s, a, space));
}

}  // namespace

std::string_view to_string(Kind k) {
    switch (k) {
    case Kind::shannon: return "shannon";
    case Kind::renyi: return "renyi";
    case Kind::tsallis: return "tsallis";
    }
    return "unknown";
}

std::string_view to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

double log_entropic_moment(const HydrogenicState& s, double q, Space space) {
    require_l0(s);
    if (!(q > 0.0)) throw ValidationError("entropic order q must be > 0");
    double unused = 0.0;
    const double logRadial = log_power_integral(model_for(s, space, q), q, unused, false);
    return logRadial + (1.0 - q) * specfun::log_surface_area(s.D);
}

EntropyValue entropy_quadrature(const HydrogenicState& s, Kind kind, double q, Space space) {
    require_l0(s);
    EntropyValue e;
    e.kind = kind;
    e.space = space;
    e.q = kind == Kind::shannon ? 1.0 : q;
    const double logOmega = specfun::log_surface_area(s.D);
    if (kind == Kind::shannon) {
        double shannon = 0.0;
        const double logMass = log_power_integral(model_for(s, space, 1.0), 1.0, shannon, true);
        if (std::fabs(logMass) > 1e-8) {
            std::ostringstream os;
            os << "radial density of " << describe(s) << " integrates to " << std::exp(logMass);
            throw NumericError(os.str());
        }
        e.value = shannon + logOmega;
        return e;
    }
    require_q(q);
    const double logW = log_entropic_moment(s, q, space);
    e.value = kind == Kind::renyi ? logW / (1.0 - q) : -std::expm1(logW) / (q - 1.0);
    return e;
}

double a0(double alpha, int D) {
    if (!(alpha > 0.0)) throw ValidationError("A0 needs alpha > 0");
    const double r = D / alpha;
    return r + std::log(2.0) + D / 2.0 * std::log(pi) - std::log(alpha) + r * std::log(alpha / D) +
           specfun::log_gamma(r) - specfun::log_gamma(D / 2.0);
}

double log_l1(double q, double alpha, int D) {
    require_q(q);
    if (!(alpha > 0.0)) throw ValidationError("L1 needs alpha > 0");
    const double Dq = D * (q - 1.0), denom = Dq + alpha * q;
    const double common = std::log(alpha) + specfun::log_gamma(D / 2.0) - std::log(2.0) - D / 2.0 * std::log(pi);
    if (q > 1.0) {
        return std::log(q * alpha / denom) +
               (q - 1.0) * (common + D / alpha * std::log(Dq / denom) - specfun::log_beta(q / (q - 1.0), D / alpha));
    }
    if (!(denom > 0.0)) {
        std::ostringstream os;
        os << "L1 with q < 1 requires q > D/(D+alpha) = " << D / (D + alpha);
        throw ValidationError(os.str());
    }
    return std::log(q * alpha / denom) +
           (q - 1.0) * (common + D / alpha * std::log(-Dq / denom) -
                        specfun::log_beta(D / alpha, 1.0 / (1.0 - q) - D / alpha));
}

double log_l2(double q, double alpha, int D) {
    require_q(q);
    const double Dq = D * (q - 1.0), denom = Dq - alpha * q;
    if (!(q > 1.0) || !(alpha > 0.0) || !(denom > 0.0)) {
        std::ostringstream os;
        os << "L2 requires q > 1 and alpha < D(q-1)/q = " << (q > 1.0 ? Dq / q : 0.0);
        throw ValidationError(os.str());
    }
    const double common = std::log(alpha) + specfun::log_gamma(D / 2.0) - std::log(2.0) - D / 2.0 * std::log(pi);
    return std::log(q * alpha / denom) +
           (q - 1.0) * (common + D / alpha * std::log(denom / Dq) -
                        specfun::log_beta(D / alpha - 1.0 / (q - 1.0), q / (q - 1.0)));
}

BoundReport bound_shannon_upper(const HydrogenicState& s, double alpha, Space space) {
    validate(s);
    if (!(alpha > 0.0)) throw ValidationError("Shannon bound needs alpha > 0");
    BoundReport r;
    r.inputs = {1.0, alpha, +1};
    r.direction = Direction::upper;
    r.boundValue = a0(alpha, s.D) + s.D / alpha * std::log(moment(s, alpha, space));
    r.entropy = entropy_if_available(s, Kind::shannon, 1.0, space);
    if (r.entropy) r.satisfied = r.entropy->value <= r.boundValue + 1e-9;
    return r;
}

BoundReport bound_renyi_upper(const HydrogenicState& s, double q, double alpha, int momentSign, Space space) {
    validate(s);
    require_q(q);
    BoundReport r;
    r.inputs = {q, alpha, momentSign};
    r.direction = Direction::upper;
    r.boundValue = log_moment_bound(s, q, alpha, momentSign, space) / (1.0 - q);
    r.entropy = entropy_if_available(s, Kind::renyi, q, space);
    if (r.entropy) r.satisfied = r.entropy->value <= r.boundValue + 1e-9;
    return r;
}

BoundReport bound_tsallis_lower(const HydrogenicState& s, double q, double alpha, int momentSign, Space space) {
    validate(s);
    require_q(q);
    BoundReport r;
    r.inputs = {q, alpha, momentSign};
    r.direction = Direction::upper;
    const double logB = log_moment_bound(s, q, alpha, momentSign, space);
    r.momentBound = std::exp(logB);
    r.boundValue = -std::expm1(logB) / (q - 1.0);
    r.entropy = entropy_if_available(s, Kind::tsallis, q, space);
    if (r.entropy) {
        r.momentValue = 1.0 + (1.0 - q) * r.entropy->value;
        r.satisfied = r.entropy->value <= r.boundValue + 1e-9;
    }
    return r;
}

AsymptoticTerms asymptotic_bound_terms(const HydrogenicState& s, double alpha, double q) {
    validate(s);
    if (!(alpha > 0.0)) throw ValidationError("asymptotic bound terms need alpha > 0");
    const double D = s.D, k = s.n - s.l - 1.0, l = s.l;
    auto a1At = [&](double a) {
        return (1.0 + (a + 1.0) * (a + 4.0 * l - 2.0) / (2.0 * D)) * (1.0 + (a + 1.0) * (a + 2.0) * k / D);
    };
    const double a1Arg = a1At(alpha);
    if (!(a1Arg > 0.0)) throw ValidationError("A1 is undefined: its correction product is not positive");
    AsymptoticTerms t;
    t.a0Exact = a0(alpha, s.D);
    t.a0Asymptotic = -(D - 1.0) / 2.0 * std::log(D / 2.0) + std::log(pi * std::numbers::e) * D / 2.0 -
                     0.5 * std::log(D / alpha) + std::log(2.0 / alpha);
    t.a1 = std::log(a1Arg);
    if (a1At(-alpha) > 0.0) t.a1Negative = std::log(a1At(-alpha));
    t.a2 = 3.0 * D * std::log(D) + std::log(pi * std::numbers::e / 8.0) * D / 2.0 + 0.5 * std::log(alpha / 2.0);
    const double logZ = std::log(s.Z);
    t.shannonAssembled = t.a0Asymptotic + 2.0 * D * std::log(D / 2.0) - D * logZ + D / alpha * t.a1;
    t.shannonSplit = t.a2 + D / alpha * t.a1 - D * logZ + std::log(2.0 / alpha);
    t.shannonPrinted = 3.0 * D * std::log(D) + (0.5 * std::log(pi * std::numbers::e / 8.0) - logZ + t.a1 / alpha) * D -
                       0.5 * std::log(alpha / 2.0);
    if (q == 1.0) return t;
    require_q(q);
    double logL1 = NAN;
    try {
        logL1 = log_l1(q, alpha, s.D);
    } catch (const ValidationError&) {
    }
    if (std::isfinite(logL1)) {
        t.renyiAssembled = logL1 / (1.0 - q) + 2.0 * D * std::log(D / 2.0) - D * logZ + D / alpha * t.a1;
        t.tsallisAssembled =
            std::exp(logL1 - D * (q - 1.0) * std::log(D * D / (4.0 * s.Z)) - t.a1 * D * (q - 1.0) / alpha);
    }
    if (q > 1.0) {
        const double r = q / (q - 1.0);
        t.a3 = std::log(r) + (1.0 - q) * specfun::log_gamma(r) + (1.0 - q) / 2.0 * std::log(2.0 / pi);
        t.renyiPrinted = (3.0 * D - 1.0) / 2.0 * std::log(D) +
                         (0.5 * std::log(pi * std::numbers::e / 8.0) - logZ + t.a1 / alpha) * D + *t.a3 / (1.0 - q);
        t.logA5 = std::log(r) +
                  (1.0 - q) / 2.0 *
                      ((3.0 * D - 1.0) * std::log(D) - (3.0 * D + 2.0) * std::log(2.0) - (D + 1.0) * std::log(pi) -
                       2.0 * D * logZ) +
                  (1.0 - q) * D / 2.0 - q * std::log(alpha) + (1.0 - q) * specfun::log_gamma(r);
        if (t.a1 > 0.0) t.tsallisPrinted = std::exp(*t.logA5 - D * (q - 1.0) / alpha * std::log(t.a1));
    }
    return t;
}

}  // namespace hydro::entropy

#include "hydromoments/uncertainty.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/largedim.hpp"
#include "hydromoments/specfun/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hydro::uncertainty {

using specfun::Rational;

std::string_view to_string(BoundKind k) {
    switch (k) {
    case BoundKind::kennard: return "kennard";
    case BoundKind::centralRefined: return "central-refined";
    case BoundKind::logGeneral: return "log-general";
    case BoundKind::logRefined: return "log-refined";
    }
    return "unknown";
}

UncertaintyRecord make_record(double value, double bound, BoundKind kind) {
    UncertaintyRecord r;
    r.productValue = value;
    r.bound = bound;
    r.margin = value - bound;
    r.boundKind = kind;
    r.satisfied = r.margin >= -1e-12 * std::max(1.0, std::fabs(bound));
    return r;
}

Evaluation heisenberg_product_exact(const HydrogenicState& s, double alpha, double beta) {
    const auto r = hydrogenic::position_expectation(s, alpha);
    const auto p = hydrogenic::momentum_expectation(s, beta);
    Evaluation ev;
    ev.method = Method::exact;
    ev.value = r.value * p.value;
    ev.validity = r.validity + "; " + p.validity;
    if (alpha == 2.0 && beta == 2.0) {
        const double closed = heisenberg_r2p2_closed_form(s);
        std::ostringstream os;
        os << "; closed-form cross-check deviation " << std::fabs(closed - ev.value) / ev.value;
        ev.validity += os.str();
    }
    return ev;
}

double heisenberg_r2p2_closed_form(const HydrogenicState& s) {
    validate(s);
    const double D = s.D, n = s.n, l = s.l;
    return D * D / 4.0 * (1.0 + (10 * n - 6 * l - 9) / D + (10 * n * (n - 3) - 6 * l * (l - 2) + 20) / (D * D));
}

Rational heisenberg_r2p2_closed_form_exact(const HydrogenicState& s) {
    validate(s);
    const long D = s.D, n = s.n, l = s.l;
    using specfun::makeRational;
    Rational value = makeRational(D * D, 4) * (1 + makeRational(10 * n - 6 * l - 9, D) +
                                               makeRational(10 * n * (n - 3) - 6 * l * (l - 2) + 20, D * D));
    value.canonicalize();
    return value;
}

Rational heisenberg_r2p2_exact(const HydrogenicState& s) {
    const auto r = hydrogenic::position_expectation(s, 2.0, specfun::Precision::rational);
    const auto p = hydrogenic::momentum_expectation(s, 2.0, specfun::Precision::rational);
    if (!r.exact || !p.exact) throw ValidationError("exact product needs a rational nuclear charge");
    Rational value = *r.exact * *p.exact;
    value.canonicalize();
    return value;
}

Evaluation heisenberg_product_largeD(const HydrogenicState& s, double alpha, double beta) {
    const auto r = largedim::position_largeD(s, alpha);
    const double D = s.D;
    hydrogenic::check_momentum_alpha(s, beta);
    const double p = std::pow(D / (2.0 * s.Z), -beta) *
                     (1.0 + (beta - 2.0) * beta * (2.0 * s.n - 2.0 * s.l - 1.0) / (2.0 * D));
    Evaluation ev;
    ev.method = Method::largeD;
    ev.value = r.value * p;
    ev.validity = "alpha > -D-2l, -D-2l < beta < D+2l+2";
    return ev;
}

Evaluation circular_heisenberg_product_largeD_printed(const HydrogenicState& s, double alpha, double beta) {
    validate(s);
    if (s.l != s.n - 1) throw ValidationError("circular-state formula requires l = n-1, got " + describe(s));
    hydrogenic::check_position_alpha(s, alpha);
    hydrogenic::check_momentum_alpha(s, beta);
    const double D = s.D;
    Evaluation ev;
    ev.method = Method::largeD;
    ev.value = std::pow(D * D / (4.0 * s.Z), alpha) * std::pow(D / (2.0 * s.Z), -beta) *
               (1.0 + (alpha + 1.0) * (4.0 * s.n - 6.0) / (2.0 * D)) * (1.0 + beta * (beta - 2.0) / (2.0 * D));
    ev.validity = "l = n-1 (printed circular form)";
    return ev;
}

UncertaintyRecord check_heisenberg_bound(const HydrogenicState& s, BoundKind kind) {
    const double value = heisenberg_product_exact(s, 2.0, 2.0).value;
    double bound = 0.0;
    if (kind == BoundKind::kennard)
        bound = s.D * double(s.D) / 4.0;
    else if (kind == BoundKind::centralRefined)
        bound = std::pow(s.D / 2.0 + s.l, 2);
    else
        throw ValidationError("Heisenberg check takes the kennard or central-refined bound");
    return make_record(value, bound, kind);
}

double log_bound(const HydrogenicState& s, BoundKind kind) {
    validate(s);
    if (kind == BoundKind::logGeneral) return specfun::digamma(s.D / 4.0) + std::log(2.0);
    if (kind == BoundKind::logRefined) return specfun::digamma((s.D + 2.0 * s.l) / 4.0) + std::log(2.0);
    throw ValidationError("log-sum check takes the log-general or log-refined bound");
}

UncertaintyRecord log_uncertainty_sum(const HydrogenicState& s, BoundKind kind) {
    const double sum =
        hydrogenic::log_position_expectation(s).value + hydrogenic::log_momentum_expectation(s).value;
    return make_record(sum, log_bound(s, kind), kind);
}

Evaluation log_uncertainty_sum_largeD(const HydrogenicState& s) {
    validate(s);
    Evaluation ev;
    ev.method = Method::largeD;
    ev.value = std::log(s.D / 2.0) + (s.n + s.l - 2.5) / s.D;
    ev.validity = "D >> 1";
    return ev;
}

namespace {

double log_sum_common(const HydrogenicState& s) {
    validate(s);
    const double m = 2.0 * s.n + s.D - 3.0;
    if (m * m == 1.0) throw ValidationError("log-sum closed form is singular at (2n+D-3)^2 = 1");
    return (2.0 * s.n - 2.0 * s.l - 1.0) / m + m * (2.0 * s.l + s.D - 2.0) / (m * m - 1.0) - std::log(2.0) - 1.0;
}

}  // namespace

double log_sum_closed_form(const HydrogenicState& s) {
    return log_sum_common(s) + specfun::digamma(s.n + s.l + s.D - 2.0);
}

double log_sum_closed_form_printed(const HydrogenicState& s) {
    return log_sum_common(s) + specfun::digamma(s.n + 1.0 + s.D - 2.0);
}

}  // namespace hydro::uncertainty

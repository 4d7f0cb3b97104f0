#include "hydromoments/specfun/hypergeometric.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hydro::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool isNonPositiveInteger(double a) { return a <= 0.0 && a == std::nearbyint(a); }

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

std::string describe(const HypSpec& spec) {
    std::ostringstream os;
    os << spec.numeratorParams.size() << "F" << spec.denominatorParams.size() << "(";
    for (std::size_t i = 0; i < spec.numeratorParams.size(); ++i)
        os << (i ? ", " : "") << spec.numeratorParams[i];
    os << "; ";
    for (std::size_t i = 0; i < spec.denominatorParams.size(); ++i)
        os << (i ? ", " : "") << spec.denominatorParams[i];
    os << "; " << spec.argument << ")";
    return os.str();
}

struct FloatingPass {
    double value;
    double absSum;
};

FloatingPass sumFloating(const HypSpec& spec, unsigned k) {
    CompensatedSum s;
    double absSum = 1.0;
    double term = 1.0;
    s.add(term);
    for (unsigned j = 0; j < k; ++j) {
        double ratio = spec.argument / (j + 1.0);
        for (double a : spec.numeratorParams) ratio *= a + j;
        for (double b : spec.denominatorParams) ratio /= b + j;
        term *= ratio;
        s.add(term);
        absSum += std::fabs(term);
    }
    return {s.value(), absSum};
}

Rational sumExact(const HypSpec& spec, unsigned k) {
    std::vector<Rational> num, den;
    for (double a : spec.numeratorParams) num.push_back(toRational(a));
    for (double b : spec.denominatorParams) den.push_back(toRational(b));
    Rational z = toRational(spec.argument);
    Rational sum = 1, term = 1;
    for (unsigned j = 0; j < k; ++j) {
        Rational ratio = z / (j + 1);
        for (const auto& a : num) ratio *= a + j;
        for (const auto& b : den) ratio /= b + j;
        term *= ratio;
        term.canonicalize();
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

double series2f1(double a, double b, double c, double z) {
    CompensatedSum s;
    double term = 1.0;
    s.add(term);
    constexpr long kMaxTerms = 20'000'000;
    for (long j = 0; j < kMaxTerms; ++j) {
        const double ratio = (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
        term *= ratio;
        s.add(term);
        const double r = std::max(std::fabs(ratio), std::fabs(z));
        if (term == 0.0) return s.value();
        if (r < 1.0 && j > 2 &&
            std::fabs(term) * r / (1.0 - r) <= 1e-17 * std::fabs(s.value()))
            return s.value();
    }
    std::ostringstream os;
    os << "2F1(" << a << ", " << b << "; " << c << "; " << z << ") series did not converge";
    throw NumericError(os.str());
}

}  // namespace

unsigned terminating_degree(const HypSpec& spec) {
    std::optional<unsigned> k;
    for (double a : spec.numeratorParams)
        if (isNonPositiveInteger(a)) {
            const auto deg = static_cast<unsigned>(-a);
            if (!k || deg < *k) k = deg;
        }
    if (!k) {
        if (spec.argument == 0.0) return 0;
        throw ValidationError("non-terminating series " + describe(spec) +
                              ": no numerator parameter is a non-positive integer");
    }
    for (double b : spec.denominatorParams)
        if (isNonPositiveInteger(b) && -b < static_cast<double>(*k)) {
            std::ostringstream os;
            os << "denominator parameter " << b << " of " << describe(spec)
               << " vanishes before the series terminates at degree " << *k;
            throw ValidationError(os.str());
        }
    return *k;
}

HypResult hyp_terminating(const HypSpec& spec, Precision mode) {
    const unsigned k = terminating_degree(spec);
    if (mode == Precision::rational) {
        auto check = [&](double x) {
            if (!isSimpleRational(x))
                throw ValidationError("rational mode needs rational parameters; " +
                                      std::to_string(x) + " in " + describe(spec) + " is not");
        };
        for (double a : spec.numeratorParams) check(a);
        for (double b : spec.denominatorParams) check(b);
        check(spec.argument);
        Rational q = sumExact(spec, k);
        return {q.get_d(), q, 1.0, false};
    }
    const FloatingPass pass = sumFloating(spec, k);
    // Overflowing terms (k in the hundreds) leave the floating pass meaningless.
    const bool finite = std::isfinite(pass.value) && std::isfinite(pass.absSum);
    const double cond = pass.value == 0.0 || !finite ? std::numeric_limits<double>::infinity()
                                                     : pass.absSum / std::fabs(pass.value);
    HypResult out{pass.value, std::nullopt, cond, false};
    if (mode == Precision::floating) return out;
    const double ops = static_cast<double>(spec.numeratorParams.size() +
                                           spec.denominatorParams.size() + 2);
    const double predicted = kEps * cond * (1.0 + ops * std::sqrt(static_cast<double>(k)));
    if (predicted > 5e-14 && k > 0) {
        Rational q = sumExact(spec, k);
        out.value = q.get_d();
        out.exact = q;
        out.escalated = true;
    }
    return out;
}

Rational hyp_terminating_exact(const std::vector<Rational>& numerator,
                               const std::vector<Rational>& denominator, const Rational& argument) {
    std::optional<unsigned long> k;
    for (const auto& a : numerator)
        if (a <= 0 && a.get_den() == 1) {
            const unsigned long deg = mpz_class(-a.get_num()).get_ui();
            if (!k || deg < *k) k = deg;
        }
    if (!k) throw ValidationError("non-terminating series in exact evaluation");
    for (const auto& b : denominator)
        if (b <= 0 && b.get_den() == 1 && mpz_class(-b.get_num()).get_ui() < *k)
            throw ValidationError("denominator parameter vanishes before termination");
    Rational sum = 1, term = 1;
    for (unsigned long j = 0; j < *k; ++j) {
        Rational ratio = argument / Rational(static_cast<long>(j + 1));
        for (const auto& a : numerator) ratio *= a + static_cast<long>(j);
        for (const auto& b : denominator) ratio /= b + static_cast<long>(j);
        term *= ratio;
        term.canonicalize();
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

double gauss_2f1(double a, double b, double c, double z) {
    if (isNonPositiveInteger(c)) throw ValidationError("2F1: c must not be a non-positive integer");
    if (z == 0.0) return 1.0;
    if (isNonPositiveInteger(a) || isNonPositiveInteger(b)) {
        const unsigned k = static_cast<unsigned>(
            -(isNonPositiveInteger(a) && isNonPositiveInteger(b) ? std::max(a, b)
              : isNonPositiveInteger(a)                          ? a
                                                                 : b));
        if (isNonPositiveInteger(c) || (c < 0 && -c < k))
            throw ValidationError("2F1: denominator vanishes before termination");
        return hyp_terminating({{a, b}, {c}, z}).value;
    }
    if (z < 0.0) {
        const double w = z / (z - 1.0);
        if (isNonPositiveInteger(c - a) && !isNonPositiveInteger(c - b))
            return std::pow(1.0 - z, -b) * gauss_2f1(c - a, b, c, w);
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, w);
    }
    if (z < 1.0) return series2f1(a, b, c, z);
    throw ValidationError("2F1: non-terminating series with z >= 1 is outside the supported domain");
}

double appell_f1(double a, double b, double bp, double c, double x, double y) {
    if (x == 0.0 && y == 0.0) return 1.0;
    if (isNonPositiveInteger(c)) throw ValidationError("F1: c must not be a non-positive integer");
    const double span = std::max(std::fabs(x), std::fabs(y));
    const bool integralAvailable = c > a && a > 0.0 && x <= 1.0 && y <= 1.0;
    if (span >= 0.9 && integralAvailable) {
        // Euler integral with t = sin^2(phi); 1 - x t is formed as (1-x) + x cos^2(phi).
        const double logNorm = -log_beta(a, c - a);
        auto f = [=](double phi) {
            const double s = std::sin(phi), co = std::cos(phi);
            if (s <= 0.0 || co <= 0.0) return 0.0;
            const double c2 = co * co;
            const double ux = (1.0 - x) + x * c2, uy = (1.0 - y) + y * c2;
            if (ux <= 0.0 || uy <= 0.0) return 0.0;
            const double lg = logNorm + (2 * a - 1) * std::log(s) + (2 * (c - a) - 1) * std::log(co) -
                              b * std::log(ux) - bp * std::log(uy);
            return 2.0 * std::exp(lg);
        };
        QuadratureOptions opt;
        opt.relTol = 1e-13;
        opt.nodeCeiling = 200000;
        auto r = integrate_tanh_sinh(f, 0.0, std::numbers::pi / 2, opt);
        if (!std::isfinite(r.value) || r.errorEstimate > 1e-9 * std::max(1e-300, r.l1Norm))
            throw NumericError("F1 Euler integral did not converge");
        return r.value;
    }
    if (span >= 1.0)
        throw ValidationError("F1: |x| or |y| >= 1 needs the integral form, which requires c > a > 0");

    // Double series, summed row by row: F1 = sum_m rowCoeff_m * 2F1-like inner series.
    CompensatedSum total;
    double rowCoeff = 1.0;
    int quietRows = 0;
    constexpr int kMaxRows = 200000;
    for (int m = 0; m < kMaxRows; ++m) {
        CompensatedSum inner;
        double term = 1.0;
        inner.add(term);
        const double am = a + m, cm = c + m;
        for (int n = 0;; ++n) {
            if (n > 2'000'000) throw NumericError("F1 series: inner sum failed to contract");
            const double ratio = (am + n) * (bp + n) / ((cm + n) * (n + 1.0)) * y;
            term *= ratio;
            inner.add(term);
            const double r = std::max(std::fabs(ratio), std::fabs(y));
            if (term == 0.0) break;
            if (r < 1.0 && n > 2 && std::fabs(term) * r / (1.0 - r) <= 1e-17 * std::fabs(inner.value()))
                break;
        }
        const double contribution = rowCoeff * inner.value();
        total.add(contribution);
        const double rowRatio = (a + m) * (b + m) / ((c + m) * (m + 1.0)) * x;
        const double r = std::max(std::fabs(rowRatio), std::fabs(x));
        if (rowRatio == 0.0) break;
        if (r < 1.0 && std::fabs(contribution) * r / (1.0 - r) <= 1e-16 * std::fabs(total.value())) {
            if (++quietRows >= 3) break;
        } else {
            quietRows = 0;
        }
        rowCoeff *= rowRatio;
        if (m == kMaxRows - 1) throw NumericError("F1 series: outer sum failed to contract");
    }
    return total.value();
}

}  // namespace hydro::specfun

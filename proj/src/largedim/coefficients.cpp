#include "hydromoments/largedim.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"

#include <cmath>
#include <vector>

namespace hydro::largedim {

namespace {

using specfun::makeRational;

template <class T>
T constant(long p, long q);
template <>
double constant<double>(long p, long q) {
    return double(p) / double(q);
}
template <>
Rational constant<Rational>(long p, long q) {
    return makeRational(p, q);
}

template <class T>
T rising(const T& a, unsigned j) {
    T r = constant<T>(1, 1);
    for (unsigned i = 0; i < j; ++i) r *= a + T(i);
    return r;
}

template <class T>
T choose(unsigned n, unsigned k);
template <>
double choose<double>(unsigned n, unsigned k) {
    return std::round(std::exp(specfun::log_gamma(n + 1.0) - specfun::log_gamma(k + 1.0) -
                               specfun::log_gamma(n - k + 1.0)));
}
template <>
Rational choose<Rational>(unsigned n, unsigned k) {
    return specfun::binomial(n, k);
}

template <class T>
T fact(unsigned n) {
    T r = constant<T>(1, 1);
    for (unsigned i = 2; i <= n; ++i) r *= T(i);
    return r;
}

// Neumaier summation; exact types accumulate directly.
template <class T>
struct Accumulator {
    T sum = constant<T>(0, 1);
    void add(const T& x) { sum += x; }
    T value() const { return sum; }
};
template <>
struct Accumulator<double> {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

template <class T>
T d_product(unsigned j, const T& nu, const T& alpha) {
    const T half = constant<T>(1, 2);
    const T p = alpha * (alpha - T(2)) / T(4);
    T value = nu / (nu + T(j));
    for (unsigned i = 1; i <= j; ++i) value *= T(1) - p / ((nu + T(i) + half) * (nu + T(i) - half));
    return value;
}

template <class T>
std::vector<T> d_values(unsigned k, const T& nu, const T& alpha) {
    std::vector<T> d;
    d.reserve(k + 1);
    for (unsigned j = 0; j <= k; ++j) d.push_back(d_product(j, nu, alpha));
    return d;
}

template <class T>
T nabla(unsigned n, unsigned k, const std::vector<T>& d) {
    Accumulator<T> acc;
    for (unsigned j = 0; j <= n; ++j) {
        const T term = choose<T>(n, j) * d[k - j];
        acc.add(j % 2 ? T(-term) : term);
    }
    return acc.value();
}

template <class T>
T fk_direct_impl(unsigned k, const T& nu, const T& alpha) {
    const auto d = d_values(k, nu, alpha);
    const T twoNu = T(2) * nu;
    Accumulator<T> acc;
    for (unsigned j = 0; j <= k; ++j) {
        const T term = choose<T>(k, j) * rising(T(twoNu + T(j)), k) * d[j];
        acc.add(j % 2 ? T(-term) : term);
    }
    return acc.value() / rising(twoNu, k);
}

template <class T>
T fk_prop1_impl(unsigned k, const T& nu, const T& alpha) {
    const auto d = d_values(k, nu, alpha);
    const T twoNu = T(2) * nu;
    Accumulator<T> acc;
    for (unsigned i = 0; i <= k; ++i)
        acc.add(choose<T>(k, i) * nabla(i, k, d) / (fact<T>(i) * rising(twoNu, k - i)));
    const T value = fact<T>(k) * acc.value();
    return k % 2 ? T(-value) : value;
}

void require_nu(double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("nu must be positive");
}

void require_nu(const Rational& nu) {
    if (sgn(nu) <= 0) throw ValidationError("nu must be positive");
}

bool use_exact(double nu, double alpha, Precision precision, const char* what) {
    const bool simple = specfun::isSimpleRational(nu) && specfun::isSimpleRational(alpha);
    if (precision == Precision::rational && !simple)
        throw ValidationError(std::string(what) + ": rational precision needs simple rational nu and alpha");
    return precision == Precision::rational || (precision == Precision::automatic && simple);
}

}  // namespace

Rational d_sequence_exact(unsigned j, const Rational& nu, const Rational& alpha) {
    require_nu(nu);
    return d_product(j, nu, alpha);
}

Rational d_sequence_pochhammer_exact(unsigned j, const Rational& nu, const Rational& alpha) {
    require_nu(nu);
    const Rational half = makeRational(1, 2);
    const Rational num = specfun::pochhammer(Rational(nu + (alpha + 1) / 2), j) *
                         specfun::pochhammer(Rational(nu + (3 - alpha) / 2), j);
    const Rational den =
        specfun::pochhammer(Rational(nu + half), j) * specfun::pochhammer(Rational(nu + 3 * half), j);
    return nu / (nu + j) * num / den;
}

DSequenceEntry d_sequence(unsigned j, double nu, double alpha, Precision precision) {
    require_nu(nu);
    DSequenceEntry e;
    e.j = j;
    e.productForm = d_product(j, nu, alpha);
    const auto a = specfun::pochhammer(nu + (alpha + 1.0) / 2.0, j);
    const auto b = specfun::pochhammer(nu + (3.0 - alpha) / 2.0, j);
    const auto c = specfun::pochhammer(nu + 0.5, j);
    const auto d = specfun::pochhammer(nu + 1.5, j);
    e.pochhammerForm = nu / (nu + j) * ((a * b) / (c * d)).value();
    e.value = e.productForm;
    if (precision != Precision::floating && specfun::isSimpleRational(nu) && specfun::isSimpleRational(alpha)) {
        const Rational qn = specfun::toRational(nu), qa = specfun::toRational(alpha);
        Rational product = d_sequence_exact(j, qn, qa);
        if (product != d_sequence_pochhammer_exact(j, qn, qa))
            throw NumericError("d_sequence: product and Pochhammer forms disagree in exact arithmetic");
        e.value = specfun::toDouble(product);
        e.exact = std::move(product);
    } else if (precision == Precision::rational) {
        throw ValidationError("d_sequence: rational precision needs simple rational nu and alpha");
    }
    return e;
}

double backward_difference(unsigned n, unsigned k, double nu, double alpha) {
    require_nu(nu);
    if (n > k) throw ValidationError("backward difference order exceeds k");
    if (specfun::isSimpleRational(nu) && specfun::isSimpleRational(alpha))
        return specfun::toDouble(
            backward_difference_exact(n, k, specfun::toRational(nu), specfun::toRational(alpha)));
    return nabla(n, k, d_values(k, nu, alpha));
}

Rational backward_difference_exact(unsigned n, unsigned k, const Rational& nu, const Rational& alpha) {
    require_nu(nu);
    if (n > k) throw ValidationError("backward difference order exceeds k");
    return nabla(n, k, d_values(k, nu, alpha));
}

Rational fk_direct_exact(unsigned k, const Rational& nu, const Rational& alpha) {
    require_nu(nu);
    return fk_direct_impl(k, nu, alpha);
}

Rational fk_prop1_exact(unsigned k, const Rational& nu, const Rational& alpha) {
    require_nu(nu);
    return fk_prop1_impl(k, nu, alpha);
}

double fk_direct(unsigned k, double nu, double alpha, Precision precision) {
    require_nu(nu);
    if (use_exact(nu, alpha, precision, "fk_direct"))
        return specfun::toDouble(fk_direct_exact(k, specfun::toRational(nu), specfun::toRational(alpha)));
    return fk_direct_impl(k, nu, alpha);
}

double fk_prop1(unsigned k, double nu, double alpha, Precision precision) {
    require_nu(nu);
    if (use_exact(nu, alpha, precision, "fk_prop1"))
        return specfun::toDouble(fk_prop1_exact(k, specfun::toRational(nu), specfun::toRational(alpha)));
    return fk_prop1_impl(k, nu, alpha);
}

double fk_asymptotic(unsigned k, double nu, double alpha) {
    require_nu(nu);
    const double lead = std::exp(specfun::log_gamma(k + 1.0) - k * std::log(2.0 * nu));
    return lead * (1.0 - k * (k + 3.0 + 2.0 * alpha * (2.0 - alpha)) / (4.0 * nu));
}

Rational pochhammer_shift_lhs(const Rational& a, unsigned j, unsigned k) {
    if (sgn(a) <= 0) throw ValidationError("pochhammer shift identity requires a > 0");
    return specfun::pochhammer(Rational(a + j), k) / specfun::pochhammer(a, k);
}

Rational pochhammer_shift_rhs(const Rational& a, unsigned j, unsigned k) {
    if (sgn(a) <= 0) throw ValidationError("pochhammer shift identity requires a > 0");
    Rational sum = 0;
    for (unsigned i = 0; i <= std::min(j, k); ++i)
        sum += specfun::binomial(j, i) / (specfun::factorial(k - i) * specfun::pochhammer(a, i));
    return specfun::factorial(k) * sum;
}

}  // namespace hydro::largedim

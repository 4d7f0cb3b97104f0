#include "hydromoments/errors.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"

namespace hydro::oracle {

using specfun::Rational;

namespace {

// Gamma at an integer or half-integer argument, as coef * sqrt(pi)^sqrtPiPower.
struct HalfGamma {
    Rational coef = 1;
    int sqrtPiPower = 0;

    HalfGamma operator*(const HalfGamma& o) const { return {coef * o.coef, sqrtPiPower + o.sqrtPiPower}; }
    HalfGamma operator/(const HalfGamma& o) const { return {coef / o.coef, sqrtPiPower - o.sqrtPiPower}; }
};

HalfGamma gammaAt(const Rational& x) {
    Rational twice = 2 * x;
    twice.canonicalize();
    if (twice.get_den() != 1) throw ValidationError("rational replay needs integer or half-integer Gamma arguments");
    if (x <= 0 && x.get_den() == 1) throw ValidationError("Gamma pole in rational replay");
    // Shift the argument into [1/2, 1] or 1, then walk back up with the recurrence.
    Rational base = x;
    Rational correction = 1;
    while (base > 1) {
        base -= 1;
        correction *= base;
    }
    while (base < specfun::makeRational(1, 2)) {
        correction /= base;
        base += 1;
    }
    if (base == 1) return {correction, 0};
    return {correction, 1};  // Gamma(1/2) = sqrt(pi)
}

Rational ipow(const Rational& b, long e) {
    Rational out = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
    if (e < 0) out = 1 / out;
    out.canonicalize();
    return out;
}

long requireInteger(const Rational& a, const char* what) {
    Rational q = a;
    q.canonicalize();
    if (q.get_den() != 1) throw ValidationError(std::string("non-rational result: ") + what);
    return q.get_num().get_si();
}

Rational exactZ(const HydrogenicState& s) {
    if (!specfun::isSimpleRational(s.Z)) throw ValidationError("rational replay needs a rational Z");
    return specfun::toRational(s.Z);
}

Rational dTerm(unsigned j, const Rational& nu, const Rational& alpha) {
    const Rational p = alpha * (alpha - 2) / 4;
    Rational d = nu / (nu + j);
    for (unsigned i = 1; i <= j; ++i) d *= 1 - p / ((nu + i + specfun::makeRational(1, 2)) * (nu + i - specfun::makeRational(1, 2)));
    d.canonicalize();
    return d;
}

}  // namespace

Rational replay_position_moment(const HydrogenicState& s, const Rational& alpha) {
    validate(s);
    const long a = requireInteger(alpha, "position replay needs an integer alpha");
    if (a <= -s.D - 2 * s.l) throw ValidationError("position moment diverges for alpha <= -D-2l");
    const Rational eta = specfun::makeRational(2 * s.n + s.D - 3, 2);
    const Rational L = specfun::makeRational(2 * s.l + s.D - 3, 2), Z = exactZ(s);
    const Rational twoL = 2 * L;
    const HalfGamma ratio = gammaAt(twoL + a + 3) / gammaAt(twoL + 2);
    const Rational pref = ipow(eta, a - 1) / (ipow(Rational(2), a + 1) * ipow(Z, a)) * ratio.coef;
    const Rational f = specfun::hyp_terminating_exact({Rational(-(s.n - s.l - 1)), Rational(-a - 1), Rational(a + 2)},
                                                      {twoL + 2, Rational(1)}, Rational(1));
    Rational out = pref * f;
    out.canonicalize();
    return out;
}

Rational replay_momentum_moment(const HydrogenicState& s, const Rational& alpha) {
    validate(s);
    const long a = requireInteger(alpha, "momentum replay needs an integer alpha");
    if (a % 2 != 0) throw ValidationError("non-rational result: momentum replay needs an even alpha");
    if (a <= -s.D - 2 * s.l || a >= s.D + 2 * s.l + 2)
        throw ValidationError("momentum moment diverges outside -D-2l < alpha < D+2l+2");
    const Rational eta = specfun::makeRational(2 * s.n + s.D - 3, 2), Z = exactZ(s);
    const Rational nu = specfun::makeRational(2 * s.l + s.D - 1, 2);
    const long k = s.n - s.l - 1;
    const Rational half = specfun::makeRational(1, 2);
    const Rational a1 = nu + specfun::makeRational(a + 1, 2), a2 = nu + specfun::makeRational(3 - a, 2);
    // 2^(1-2nu) sqrt(pi) (k+nu) Gamma(k+2nu) Gamma(a1) Gamma(a2) / (k! Gamma(nu+1/2)^2 Gamma(nu+1) Gamma(nu+3/2))
    HalfGamma g = HalfGamma{1, 1} * gammaAt(k + 2 * nu) * gammaAt(a1) * gammaAt(a2) /
                  (gammaAt(nu + half) * gammaAt(nu + half) * gammaAt(nu + 1) * gammaAt(nu + 1 + half));
    if (g.sqrtPiPower != 0) throw ValidationError("non-rational result in momentum replay");
    const long twoNu = requireInteger(2 * nu, "2 nu");
    const Rational pref = ipow(Rational(2), 1 - twoNu) * ipow(Z / eta, a) * (k + nu) * g.coef /
                          specfun::factorial(static_cast<unsigned>(k));
    const Rational f = specfun::hyp_terminating_exact({Rational(-k), k + 2 * nu, nu, a1, a2},
                                                      {2 * nu, nu + half, nu + 1, nu + 1 + half}, Rational(1));
    Rational out = pref * f;
    out.canonicalize();
    return out;
}

Rational replay_fk_direct(unsigned k, const Rational& nu, const Rational& alpha) {
    if (nu <= 0) throw ValidationError("f_k needs nu > 0");
    Rational sum = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = specfun::binomial(k, j) * specfun::pochhammer(2 * nu + j, k) * dTerm(j, nu, alpha);
        sum += (j % 2 ? -term : term);
    }
    Rational out = sum / specfun::pochhammer(2 * nu, k);
    out.canonicalize();
    return out;
}

Rational replay_fk_prop1(unsigned k, const Rational& nu, const Rational& alpha) {
    if (nu <= 0) throw ValidationError("f_k needs nu > 0");
    std::vector<Rational> d(k + 1);
    for (unsigned j = 0; j <= k; ++j) d[j] = dTerm(j, nu, alpha);
    Rational sum = 0;
    for (unsigned i = 0; i <= k; ++i) {
        Rational nabla = 0;  // backward difference of order i at index k
        for (unsigned j = 0; j <= i; ++j) {
            Rational t = specfun::binomial(i, j) * d[k - j];
            nabla += (j % 2 ? -t : t);
        }
        sum += specfun::binomial(k, i) * nabla / (specfun::factorial(i) * specfun::pochhammer(2 * nu, k - i));
    }
    Rational out = specfun::factorial(k) * sum;
    if (k % 2) out = -out;
    out.canonicalize();
    return out;
}

Expression parse_expression(std::string_view id) {
    if (id == "position") return Expression::positionMoment;
    if (id == "momentum") return Expression::momentumMoment;
    if (id == "fk-direct") return Expression::fkDirect;
    if (id == "fk-prop1") return Expression::fkProp1;
    throw ValidationError("unknown replay expression '" + std::string(id) +
                          "' (expected position, momentum, fk-direct or fk-prop1)");
}

Rational rational_replay(Expression id, const HydrogenicState& s, const Rational& alpha) {
    validate(s);
    const Rational nu = specfun::makeRational(2 * s.l + s.D - 1, 2);
    const auto k = static_cast<unsigned>(s.n - s.l - 1);
    switch (id) {
        case Expression::positionMoment: return replay_position_moment(s, alpha);
        case Expression::momentumMoment: return replay_momentum_moment(s, alpha);
        case Expression::fkDirect: return replay_fk_direct(k, nu, alpha);
        case Expression::fkProp1: return replay_fk_prop1(k, nu, alpha);
    }
    throw ValidationError("unknown replay expression");
}

}  // namespace hydro::oracle

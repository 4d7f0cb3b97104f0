#pragma once

#include "hydromoments/specfun/quadrature.hpp"
#include "hydromoments/specfun/rational.hpp"
#include "hydromoments/state.hpp"

#include <string_view>

// Independent ground truth: quadrature of the defining integrals and exact replays of the
// closed forms. Shares only specfun primitives with the formula modules.
namespace hydro::oracle {

struct Selector {
    enum class Kind { power, log } kind = Kind::power;
    double alpha = 0.0;

    static Selector power(double a) { return {Kind::power, a}; }
    static Selector logarithm() { return {Kind::log, 0.0}; }
};

// <f(r)> = int r^(D-1) f(r) rho(r) dr in the variable x = r / lengthScale.
specfun::QuadratureResult quad_position_moment(const HydrogenicState& s, Selector f,
                                               const specfun::QuadratureOptions& opt = {});

// <f(p)> through the Gegenbauer t-integral with t = cos(theta).
specfun::QuadratureResult quad_momentum_moment(const HydrogenicState& s, Selector f,
                                               const specfun::QuadratureOptions& opt = {});

// Exact replays. Position needs integer alpha, momentum even alpha, Z rational.
specfun::Rational replay_position_moment(const HydrogenicState& s, const specfun::Rational& alpha);
specfun::Rational replay_momentum_moment(const HydrogenicState& s, const specfun::Rational& alpha);
// f_k(nu) by its defining alternating sum and by the backward-difference form.
specfun::Rational replay_fk_direct(unsigned k, const specfun::Rational& nu, const specfun::Rational& alpha);
specfun::Rational replay_fk_prop1(unsigned k, const specfun::Rational& nu, const specfun::Rational& alpha);

enum class Expression { positionMoment, momentumMoment, fkDirect, fkProp1 };
Expression parse_expression(std::string_view id);

// Dispatches on the expression id. For the f_k expressions, k = n-l-1 and nu = l+(D-1)/2 of the state.
specfun::Rational rational_replay(Expression id, const HydrogenicState& s, const specfun::Rational& alpha);

}  // namespace hydro::oracle

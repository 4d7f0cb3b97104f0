#pragma once

#include "hydromoments/specfun/hypergeometric.hpp"
#include "hydromoments/specfun/rational.hpp"
#include "hydromoments/state.hpp"

#include <optional>
#include <vector>

namespace hydro::largedim {

using specfun::Precision;
using specfun::Rational;

struct ExpansionTerm {
    unsigned order = 0;  // power of 1/D
    double coefficient = 0.0;
};

struct Expansion {
    double leadingScale = 1.0;  // (D^2/4Z)^alpha or (2Z/D)^alpha
    std::vector<ExpansionTerm> terms;
};

// Product forms as printed, evaluated without re-expansion.
Evaluation position_largeD(const HydrogenicState& s, double alpha);
Evaluation momentum_largeD(const HydrogenicState& s, double alpha);
// (Z/eta)^alpha (1 + alpha(alpha-2)(2n-2l-1)/(2D)): same correction with the eta prefactor.
Evaluation momentum_largeD_eta(const HydrogenicState& s, double alpha);
// (Z/eta)^alpha (1 + alpha(alpha-2)(2k+1)/(4nu)).
Evaluation momentum_largeD_nu(const HydrogenicState& s, double alpha);

// Leading scale and 1/D coefficient of the re-expanded product forms.
Expansion position_expansion(const HydrogenicState& s, double alpha);
Expansion momentum_expansion(const HydrogenicState& s, double alpha);

Evaluation log_position_largeD(const HydrogenicState& s);
Evaluation log_momentum_largeD(const HydrogenicState& s);

// Circular states (l = n-1).
Evaluation circular_position_largeD(const HydrogenicState& s, double alpha);
Evaluation circular_momentum_largeD(const HydrogenicState& s, double alpha);
// Printed circular <log p> with coefficient -1/D; inconsistent with the general formula for n > 1.
Evaluation circular_log_momentum_largeD_printed(const HydrogenicState& s);

// First m terms of the 3F2 kernel of <r^alpha>.
double hyp3f2_largeD_partial(const HydrogenicState& s, double alpha, unsigned m);

// D^(1+alpha) (1 + (alpha+1)(alpha+4l-2)/(2D)); orders = number of retained terms (1 or 2).
double gamma_ratio_expansion(int l, double alpha, int D, int orders);
// Gamma(D+2l+alpha) / Gamma(D+2l-1).
double gamma_ratio_exact(int l, double alpha, int D);

struct DSequenceEntry {
    unsigned j = 0;
    double value = 0.0;
    std::optional<Rational> exact;
    double productForm = 0.0;     // product over i of (1 - p/((nu+i+1/2)(nu+i-1/2)))
    double pochhammerForm = 0.0;  // ratio of Pochhammer symbols
};

// d_j(nu) in both printed forms; rational precision fills `exact` (both forms must agree).
DSequenceEntry d_sequence(unsigned j, double nu, double alpha, Precision precision = Precision::automatic);
Rational d_sequence_exact(unsigned j, const Rational& nu, const Rational& alpha);
Rational d_sequence_pochhammer_exact(unsigned j, const Rational& nu, const Rational& alpha);

// Backward difference nabla^n d_k, n <= k.
double backward_difference(unsigned n, unsigned k, double nu, double alpha);
Rational backward_difference_exact(unsigned n, unsigned k, const Rational& nu, const Rational& alpha);

// f_k(nu). Automatic precision evaluates exactly when nu and alpha are simple rationals,
// since the alternating sums lose about log10((2 nu)^k) digits in floating point.
double fk_direct(unsigned k, double nu, double alpha, Precision precision = Precision::automatic);
double fk_prop1(unsigned k, double nu, double alpha, Precision precision = Precision::automatic);
double fk_asymptotic(unsigned k, double nu, double alpha);
Rational fk_direct_exact(unsigned k, const Rational& nu, const Rational& alpha);
Rational fk_prop1_exact(unsigned k, const Rational& nu, const Rational& alpha);

// Both sides of (a+j)_k/(a)_k = k! sum_i C(j,i) / ((k-i)! (a)_i).
Rational pochhammer_shift_lhs(const Rational& a, unsigned j, unsigned k);
Rational pochhammer_shift_rhs(const Rational& a, unsigned j, unsigned k);

enum class MomentumForm { printedD, eta, nu };

struct ConvergenceRow {
    int D = 0;
    double exact = 0.0;
    double asymptotic = 0.0;
    double residual = 0.0;  // |exact - asymptotic| / |exact|
};

struct ConvergenceReport {
    int n = 1;
    int l = 0;
    double Z = 1.0;
    double alpha = 0.0;
    Space space = Space::position;
    MomentumForm form = MomentumForm::printedD;
    std::vector<ConvergenceRow> rows;
    std::vector<double> ratios;  // residual(D) / residual(2D) for consecutive doublings
    double fittedOrder = 0.0;    // least-squares slope of -log residual against log D
    bool degenerate = false;     // vanishing correction or identically zero residual
    std::string note;
};

// Residuals of the large-D forms against the exact values over the D grid (doubling steps).
ConvergenceReport convergence_order(int n, int l, double Z, double alpha, Space space,
                                    const std::vector<int>& Ds,
                                    MomentumForm form = MomentumForm::printedD);

}  // namespace hydro::largedim

#pragma once

#include "hydromoments/specfun/rational.hpp"
#include "hydromoments/state.hpp"

namespace hydro::uncertainty {

enum class BoundKind { kennard, centralRefined, logGeneral, logRefined };
std::string_view to_string(BoundKind k);

struct UncertaintyRecord {
    double productValue = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // productValue - bound
    BoundKind boundKind = BoundKind::centralRefined;
    bool satisfied = false;  // margin >= -1e-12 max(1, |bound|)
};

UncertaintyRecord make_record(double value, double bound, BoundKind kind);

// <r^alpha><p^beta> as the product of the two exact moments.
Evaluation heisenberg_product_exact(const HydrogenicState& s, double alpha, double beta);
// D^2/4 {1 + (10n-6l-9)/D + [10n(n-3)-6l(l-2)+20]/D^2}.
double heisenberg_r2p2_closed_form(const HydrogenicState& s);
specfun::Rational heisenberg_r2p2_closed_form_exact(const HydrogenicState& s);
// Exact rational <r^2><p^2> from the rational moment replays.
specfun::Rational heisenberg_r2p2_exact(const HydrogenicState& s);

// Product of the large-D position and momentum corrections; also used for circular states.
Evaluation heisenberg_product_largeD(const HydrogenicState& s, double alpha, double beta);
// Printed circular variant with (alpha+1)(4n-6)/(2D); disagrees with the general form at l = n-1.
Evaluation circular_heisenberg_product_largeD_printed(const HydrogenicState& s, double alpha, double beta);

UncertaintyRecord check_heisenberg_bound(const HydrogenicState& s, BoundKind kind = BoundKind::centralRefined);

double log_bound(const HydrogenicState& s, BoundKind kind);
UncertaintyRecord log_uncertainty_sum(const HydrogenicState& s, BoundKind kind = BoundKind::logRefined);
// log(D/2) + (n+l-5/2)/D.
Evaluation log_uncertainty_sum_largeD(const HydrogenicState& s);

// Closed form of the exact log sum with psi(n+l+D-2), which is what the component formulas give.
double log_sum_closed_form(const HydrogenicState& s);
// Same with the printed psi(n+1+D-2); agrees only when l = 1.
double log_sum_closed_form_printed(const HydrogenicState& s);

}  // namespace hydro::uncertainty

#include "hydromoments/largedim.hpp"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"

#include <cmath>

namespace hydro::largedim {

namespace {

bool vanishing_correction(Space space, double alpha) {
    if (space == Space::position) return alpha + 1.0 == 0.0;
    return alpha == 0.0 || alpha == 2.0;
}

double asymptotic_value(const HydrogenicState& s, double alpha, Space space, MomentumForm form) {
    if (space == Space::position) return position_largeD(s, alpha).value;
    switch (form) {
    case MomentumForm::eta: return momentum_largeD_eta(s, alpha).value;
    case MomentumForm::nu: return momentum_largeD_nu(s, alpha).value;
    default: return momentum_largeD(s, alpha).value;
    }
}

}  // namespace

ConvergenceReport convergence_order(int n, int l, double Z, double alpha, Space space,
                                    const std::vector<int>& Ds, MomentumForm form) {
    if (Ds.size() < 2) throw ValidationError("convergence_order needs at least two dimensions");
    ConvergenceReport report;
    report.n = n;
    report.l = l;
    report.Z = Z;
    report.alpha = alpha;
    report.space = space;
    report.form = form;

    for (int D : Ds) {
        const HydrogenicState s{n, l, D, Z};
        ConvergenceRow row;
        row.D = D;
        row.exact = space == Space::position ? hydrogenic::position_expectation(s, alpha).value
                                             : hydrogenic::momentum_expectation(s, alpha).value;
        row.asymptotic = asymptotic_value(s, alpha, space, form);
        row.residual = std::fabs(row.exact - row.asymptotic) / std::fabs(row.exact);
        report.rows.push_back(row);
    }

    // Residuals at roundoff level mean the asymptotic form is exact for this cell.
    constexpr double roundoff = 1e-13;
    bool zeroResidual = false;
    for (const auto& r : report.rows) zeroResidual = zeroResidual || r.residual <= roundoff;
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i)
        report.ratios.push_back(report.rows[i + 1].residual > 0.0
                                    ? report.rows[i].residual / report.rows[i + 1].residual
                                    : INFINITY);

    if (vanishing_correction(space, alpha)) {
        report.degenerate = true;
        report.note = "degenerate correction: the 1/D term vanishes for this alpha";
        return report;
    }
    if (zeroResidual) {
        report.degenerate = true;
        report.note = "degenerate correction: residual vanishes identically (at roundoff level)";
        return report;
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = double(report.rows.size());
    for (const auto& r : report.rows) {
        const double x = std::log(double(r.D)), y = -std::log(r.residual);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    report.fittedOrder = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return report;
}

}  // namespace hydro::largedim

#include "check_util.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"
#include "hydromoments/specfun/polynomials.hpp"
#include "hydromoments/specfun/quadrature.hpp"
#include "hydromoments/sweep.hpp"
#include "hydromoments/table1.hpp"

#include <mutex>
#include <numbers>

namespace hydro::verify {

using namespace detail;

namespace {

constexpr double kTableMomentumTol = 5e-6;
constexpr double kQuadratureTol = 1e-9;
constexpr double kReplayTol = 1e-12;
constexpr double kRoundoff = 1e-13;
constexpr std::size_t kNodeCeiling = 20000;

std::string cell_name(const HydrogenicState& s, double alpha, Space sp) {
    return describe(s) + " alpha=" + num(alpha) + " " + std::string(to_string(sp));
}

}  // namespace

std::vector<Check> specfun_checks(int) {
    using namespace specfun;
    const double pi = std::numbers::pi;
    std::vector<Check> out;
    out.push_back(at_most("specfun.log_gamma.half", 0, rel(log_gamma(0.5), 0.5 * std::log(pi)), kRoundoff));
    out.push_back(at_most("specfun.digamma.one", 0, rel(digamma(1.0), -std::numbers::egamma), kRoundoff));
    out.push_back(at_most("specfun.log_gamma_ratio.large", 0,
                          std::fabs(log_gamma_ratio(1000.5, 1000.0) - (std::lgamma(1000.5) - std::lgamma(1000.0))),
                          1e-11));
    {
        const double b = 2.5, c = 4.5;
        double expected = 1.0;
        for (int j = 0; j < 5; ++j) expected *= (c - b + j) / (c + j);
        out.push_back(at_most("specfun.hyp.chu_vandermonde", 0,
                              rel(hyp_terminating({{-5.0, b}, {c}, 1.0}).value, expected), kRoundoff));
    }
    out.push_back(at_most("specfun.gauss_2f1.log", 0, rel(gauss_2f1(1, 1, 2, 0.5), 2 * std::log(2.0)), 1e-12));
    out.push_back(at_most("specfun.appell_f1.reduction", 0,
                          rel(appell_f1(1.5, 1.0, 0.7, 3.0, 0.4, 0.0), gauss_2f1(1.5, 1.0, 3.0, 0.4)), 1e-10));
    {
        const double beta = 1.5, x = 0.7;
        const double expected = (x * x - 2 * (beta + 2) * x + (beta + 1) * (beta + 2)) / 2;
        out.push_back(at_most("specfun.laguerre.degree2", 0, rel(laguerre(2, beta, x), expected), kRoundoff));
        const double lam = 2.5;
        out.push_back(at_most("specfun.gegenbauer.degree2", 0,
                              rel(gegenbauer(2, lam, x), 2 * lam * (lam + 1) * x * x - lam), kRoundoff));
    }
    out.push_back(at_most("specfun.quadrature.tanh_sinh",
                          0, rel(integrate_tanh_sinh([](double t) { return std::sqrt(t); }, 0, 1).value, 2.0 / 3), 1e-12));
    out.push_back(at_most("specfun.quadrature.gauss_kronrod", 0,
                          rel(integrate_gk([](double t) { return std::exp(t); }, 0, 1).value, std::numbers::e - 1), 1e-12));
    out.push_back(holds("specfun.rational.canonical", 0,
                        makeRational(6, 4) == makeRational(3, 2) && parseRational("-0.5") == makeRational(-1, 2),
                        toString(makeRational(6, 4)), "3/2"));
    return out;
}

std::vector<Check> exact_checks(int jobs) {
    std::vector<Check> out;
    const auto table = table1::compute_table();

    // Criterion 1: momentum column.
    Worst momExact, momAsym;
    bool momAsymOk = true;
    for (const auto& row : table) {
        if (row.printed.space != Space::momentum) continue;
        const std::string at = "D=" + std::to_string(row.printed.D) + " alpha=" + num(row.printed.alpha);
        momExact.update(row.exactDeviation, at);
        momAsym.update(row.asymptoticDeviation, at);
        momAsymOk = momAsymOk && row.asymptoticMatches;
    }
    out.push_back(at_most("table1.momentum.exact", 1, momExact.value, kTableMomentumTol, "worst at " + momExact.where));
    out.push_back(holds("table1.momentum.asymptotic", 1, momAsymOk, num(momAsym.value),
                        "within half a unit of the last printed digit", "worst at " + momAsym.where));

    // Criterion 2: position column.
    bool posAsymOk = true;
    Worst posAsym;
    std::vector<std::string> alphaZeroMisses;
    for (const auto& row : table) {
        if (row.printed.space != Space::position) continue;
        const std::string at = "D=" + std::to_string(row.printed.D) + " alpha=" + num(row.printed.alpha);
        if (row.printed.alpha == 0.0) {
            if (!row.asymptoticMatches) alphaZeroMisses.push_back(at + ": " + num(row.asymptotic));
            continue;
        }
        posAsym.update(row.asymptoticDeviation, at);
        posAsymOk = posAsymOk && row.asymptoticMatches;
    }
    out.push_back(holds("table1.position.asymptotic", 2, posAsymOk, num(posAsym.value),
                        "within half a unit of the last printed digit", "alpha != 0 rows; worst at " + posAsym.where));
    {
        std::string note = "printed 1.00199 on every alpha = 0 row; product form gives";
        for (const auto& m : alphaZeroMisses) note += " " + m;
        out.push_back(holds("table1.position.asymptotic.alpha0", 2, alphaZeroMisses.empty(),
                            std::to_string(alphaZeroMisses.size()) + " rows differ", "printed value", note,
                            Status::warn));
    }
    Worst routes;
    std::vector<std::string> flagged;
    for (const auto& row : table) {
        if (row.printed.space != Space::position) continue;
        const HydrogenicState s{2, 0, row.printed.D, 1.0};
        const std::string at = "D=" + std::to_string(row.printed.D) + " alpha=" + num(row.printed.alpha);
        routes.update(rel(row.oracle, row.exact), at);
        const int a = int(row.printed.alpha);
        if (a == 1 || a == 2 || a == -1) routes.update(rel(hydrogenic::position_closed_forms(s, a).value, row.exact), at);
        if (row.exactFlagged) flagged.push_back(at + " computed " + num(row.exact) + " printed " + row.printed.exactText);
    }
    out.push_back(at_most("table1.position.exact.routes", 2, routes.value, kQuadratureTol,
                          "closed form, hypergeometric and quadrature agree; worst at " + routes.where));
    {
        std::string note;
        for (const auto& f : flagged) note += (note.empty() ? "" : "; ") + f;
        out.push_back(holds("table1.position.exact.vs-printed", 2, flagged.empty(),
                            std::to_string(flagged.size()) + " cells beyond 1e-4", "printed value", note, Status::warn));
    }

    // Criterion 3: oracle equivalence grid.
    struct GridCell {
        HydrogenicState s;
        double alpha;
        Space space;
    };
    std::vector<GridCell> grid;
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 10, 50, 200})
                for (double a : {-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
                    const HydrogenicState s{n, l, D, 1.0};
                    if (a > -D - 2 * l) grid.push_back({s, a, Space::position});
                    if (a > -D - 2 * l && a < D + 2 * l + 2) grid.push_back({s, a, Space::momentum});
                }
    std::mutex guard;
    Worst quadPos, quadMom, replay;
    std::size_t maxNodes = 0, replayed = 0;
    bool allConverged = true;
    sweep::parallel_for(grid.size(), jobs, [&](std::size_t i) {
        const auto& g = grid[i];
        const bool pos = g.space == Space::position;
        const double exact = pos ? hydrogenic::position_expectation(g.s, g.alpha).value
                                 : hydrogenic::momentum_expectation(g.s, g.alpha).value;
        const auto f = oracle::Selector::power(g.alpha);
        const auto q = pos ? oracle::quad_position_moment(g.s, f) : oracle::quad_momentum_moment(g.s, f);
        std::optional<double> replayDev;
        const bool replayable = pos ? g.alpha == std::floor(g.alpha) : (g.alpha == 2.0 || g.alpha == -2.0);
        if (replayable) {
            const auto a = specfun::makeRational(long(g.alpha), 1);
            const auto exactQ = pos ? oracle::replay_position_moment(g.s, a) : oracle::replay_momentum_moment(g.s, a);
            replayDev = rel(exact, specfun::toDouble(exactQ));
        }
        std::lock_guard lock(guard);
        (pos ? quadPos : quadMom).update(rel(q.value, exact), cell_name(g.s, g.alpha, g.space));
        maxNodes = std::max(maxNodes, q.nodeCount);
        allConverged = allConverged && q.converged;
        if (replayDev) {
            ++replayed;
            replay.update(*replayDev, cell_name(g.s, g.alpha, g.space));
        }
    });
    out.push_back(at_most("oracle.quadrature.position", 3, quadPos.value, kQuadratureTol, "worst at " + quadPos.where));
    out.push_back(at_most("oracle.quadrature.momentum", 3, quadMom.value, kQuadratureTol, "worst at " + quadMom.where));
    out.push_back(holds("oracle.quadrature.budget", 3, allConverged && maxNodes <= kNodeCeiling,
                        std::to_string(maxNodes) + " nodes", "converged within " + std::to_string(kNodeCeiling) + " nodes"));
    out.push_back(at_most("oracle.rational-replay", 3, replay.value, kReplayTol,
                          std::to_string(replayed) + " integer-order cells; worst at " + replay.where));
    out.push_back(holds("oracle.rational-replay.example", 3,
                        oracle::replay_position_moment({2, 0, 50, 1.0}, 1) == specfun::makeRational(1375, 2),
                        specfun::toString(oracle::replay_position_moment({2, 0, 50, 1.0}, 1)), "1375/2"));

    // Normalization on a wide grid.
    Worst norm;
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {2, 3, 7, 40, 300}) {
                const HydrogenicState s{n, l, D, 1.7};
                norm.update(std::fabs(hydrogenic::position_expectation(s, 0).value - 1), describe(s));
                norm.update(std::fabs(hydrogenic::momentum_expectation(s, 0).value - 1), describe(s));
            }
    out.push_back(at_most("exact.normalization", 0, norm.value, 1e-12, "worst at " + norm.where));
    return out;
}

}  // namespace hydro::verify

#include "hydromoments/specfun/quadrature.hpp"

#include "hydromoments/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hydro::specfun {

namespace {

bool acceptable(const QuadratureResult& r, double relTol) {
    const double scale = std::max(r.l1Norm, std::numeric_limits<double>::min());
    return std::isfinite(r.value) && r.errorEstimate <= relTol * scale;
}

}  // namespace

QuadratureResult integrate_gk(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
    QuadratureResult r;
    if (a == b) {
        r.converged = true;
        return r;
    }
    std::size_t count = 0;
    auto counted = [&](double x) {
        ++count;
        return f(x);
    };
    double err = 0.0, l1 = 0.0;
    r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        counted, a, b, opt.maxDepth, opt.relTol, &err, &l1);
    r.errorEstimate = err;
    r.l1Norm = l1;
    r.nodeCount = count;
    r.converged = acceptable(r, opt.relTol) && count <= opt.nodeCeiling;
    return r;
}

QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadratureOptions& opt) {
    QuadratureResult r;
    if (a == b) {
        r.converged = true;
        return r;
    }
    std::size_t count = 0;
    auto counted = [&](double x) {
        ++count;
        const double v = f(x);
        return std::isfinite(v) ? v : 0.0;
    };
    boost::math::quadrature::tanh_sinh<double> integrator(12);
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    try {
        r.value = integrator.integrate(counted, a, b, opt.relTol, &err, &l1, &levels);
    } catch (const std::exception& e) {
        throw NumericError(std::string("tanh-sinh quadrature failed: ") + e.what());
    }
    r.errorEstimate = err;
    r.l1Norm = l1;
    r.nodeCount = count;
    r.converged = acceptable(r, opt.relTol) && count <= opt.nodeCeiling;
    return r;
}

QuadratureResult integrate_panels(const Integrand& f, const std::vector<double>& breaks,
                                  const QuadratureOptions& opt, bool singularLeft,
                                  bool singularRight) {
    QuadratureResult total;
    total.converged = true;
    if (breaks.size() < 2) return total;
    double sum = 0.0, carry = 0.0;
    const std::size_t panels = breaks.size() - 1;
    for (std::size_t i = 0; i < panels; ++i) {
        const bool singular = (i == 0 && singularLeft) || (i + 1 == panels && singularRight);
        QuadratureResult p = singular ? integrate_tanh_sinh(f, breaks[i], breaks[i + 1], opt)
                                      : integrate_gk(f, breaks[i], breaks[i + 1], opt);
        if (singular && !p.converged) {
            // Tanh-sinh estimates can stall on panels that are smooth after all.
            const QuadratureResult alt = integrate_gk(f, breaks[i], breaks[i + 1], opt);
            const std::size_t spent = p.nodeCount;
            if (alt.errorEstimate < p.errorEstimate) p = alt;
            p.nodeCount = spent + alt.nodeCount;
        }
        const double t = sum + p.value;
        carry += std::fabs(sum) >= std::fabs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
        sum = t;
        total.errorEstimate += p.errorEstimate;
        total.l1Norm += p.l1Norm;
        total.nodeCount += p.nodeCount;
    }
    total.value = sum + carry;
    total.converged = acceptable(total, opt.relTol) && total.nodeCount <= opt.nodeCeiling;
    return total;
}

LogWindow find_log_window(const std::function<double(double)>& logf, double a, double b,
                          std::size_t gridPoints, double drop) {
    gridPoints = std::max<std::size_t>(gridPoints, 3);
    std::vector<double> xs(gridPoints), vals(gridPoints);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gridPoints; ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(gridPoints - 1);
        vals[i] = logf(xs[i]);
        if (std::isfinite(vals[i])) peak = std::max(peak, vals[i]);
    }
    if (!std::isfinite(peak)) throw NumericError("integrand vanishes on the whole scan grid");
    std::size_t first = gridPoints, last = 0;
    for (std::size_t i = 0; i < gridPoints; ++i) {
        const double v = vals[i];
        const bool inside = (std::isinf(v) && v > 0) || (std::isfinite(v) && v > peak - drop);
        if (inside) {
            first = std::min(first, i);
            last = std::max(last, i);
        }
    }
    LogWindow w;
    w.low = xs[first == 0 ? 0 : first - 1];
    w.high = xs[std::min(last + 1, gridPoints - 1)];
    w.logPeak = peak;
    return w;
}

std::vector<double> uniform_breaks(double low, double high, std::size_t panels) {
    panels = std::max<std::size_t>(panels, 1);
    std::vector<double> out(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i)
        out[i] = low + (high - low) * static_cast<double>(i) / static_cast<double>(panels);
    out.back() = high;
    return out;
}

}  // namespace hydro::specfun

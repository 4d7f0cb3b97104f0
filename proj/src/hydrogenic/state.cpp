#include "hydromoments/state.hpp"

#include "hydromoments/errors.hpp"

#include <cmath>
#include <sstream>

namespace hydro {

void validate(const HydrogenicState& s) {
    if (s.n < 1) throw ValidationError("n >= 1 required, got n=" + std::to_string(s.n));
    if (s.l < 0 || s.l > s.n - 1)
        throw ValidationError("0 <= l <= n-1 required, got n=" + std::to_string(s.n) +
                              ", l=" + std::to_string(s.l));
    if (s.D < 2) throw ValidationError("D >= 2 required, got D=" + std::to_string(s.D));
    if (!(s.Z > 0.0) || !std::isfinite(s.Z))
        throw ValidationError("Z > 0 required, got Z=" + std::to_string(s.Z));
}

DerivedParams derive_params(const HydrogenicState& s) {
    validate(s);
    DerivedParams p;
    p.eta = s.n + (s.D - 3) / 2.0;
    p.grandL = s.l + (s.D - 3) / 2.0;
    p.lengthScale = p.eta / (2.0 * s.Z);
    p.k = s.n - s.l - 1;
    p.nu = s.l + (s.D - 1) / 2.0;
    return p;
}

specfun::Rational exact_eta(const HydrogenicState& s) {
    specfun::Rational q(2 * s.n + s.D - 3, 2);
    q.canonicalize();
    return q;
}

specfun::Rational exact_grand_l(const HydrogenicState& s) {
    specfun::Rational q(2 * s.l + s.D - 3, 2);
    q.canonicalize();
    return q;
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::closedForm: return "closed-form";
        case Method::largeD: return "large-d";
        case Method::rydberg: return "rydberg";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

std::string_view to_string(Space s) { return s == Space::position ? "position" : "momentum"; }

std::string describe(const HydrogenicState& s) {
    std::ostringstream os;
    os << "(n=" << s.n << ", l=" << s.l << ", D=" << s.D << ", Z=" << s.Z << ")";
    return os.str();
}

}  // namespace hydro

#pragma once

#include "hydromoments/specfun/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hydro {

// Quantum numbers (n, l), dimension D and nuclear charge Z. Radial quantities do not depend on
// the magnetic hyperquantum numbers, so those are not stored.
struct HydrogenicState {
    int n = 1;
    int l = 0;
    int D = 3;
    double Z = 1.0;
};

// Throws ValidationError unless 0 <= l <= n-1, D >= 2 and Z > 0.
void validate(const HydrogenicState& s);

struct DerivedParams {
    double eta = 0.0;          // n + (D-3)/2
    double grandL = 0.0;       // l + (D-3)/2
    double lengthScale = 0.0;  // eta / (2Z)
    int k = 0;                 // n - l - 1, number of radial nodes
    double nu = 0.0;           // l + (D-1)/2 = grandL + 1
};

DerivedParams derive_params(const HydrogenicState& s);

// eta and L as exact half-integers, for rational replays.
specfun::Rational exact_eta(const HydrogenicState& s);
specfun::Rational exact_grand_l(const HydrogenicState& s);

enum class Method { exact, closedForm, largeD, rydberg, oracle };
std::string_view to_string(Method m);

enum class Space { position, momentum };
std::string_view to_string(Space s);

struct Evaluation {
    double value = 0.0;
    Method method = Method::exact;
    std::string validity;                    // the precondition that was checked
    std::optional<specfun::Rational> exact;  // exact value when evaluated in rational arithmetic
};

std::string describe(const HydrogenicState& s);

}  // namespace hydro

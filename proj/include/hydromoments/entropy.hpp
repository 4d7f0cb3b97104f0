#pragma once

#include "hydromoments/state.hpp"

#include <optional>
#include <string_view>

namespace hydro::entropy {

enum class Kind { shannon, renyi, tsallis };
std::string_view to_string(Kind k);

struct EntropyValue {
    Kind kind = Kind::shannon;
    double q = 1.0;  // ignored for shannon
    Space space = Space::position;
    double value = 0.0;
};

// Full-space entropy of an l = 0 state from its radial density. Throws ValidationError for l > 0.
EntropyValue entropy_quadrature(const HydrogenicState& s, Kind kind, double q, Space space);
// log of the entropic moment W_q = int rho^q over R^D (l = 0).
double log_entropic_moment(const HydrogenicState& s, double q, Space space);

enum class Direction { upper, lower };
std::string_view to_string(Direction d);

struct BoundInputs {
    double q = 1.0;
    double alpha = 0.0;
    int momentSign = +1;  // +1 uses <x^alpha>, -1 uses <x^-alpha>
};

struct BoundReport {
    std::optional<EntropyValue> entropy;  // absent when l > 0
    double boundValue = 0.0;
    Direction direction = Direction::upper;
    BoundInputs inputs;
    std::optional<bool> satisfied;  // absent when the entropy is not available
    // Tsallis bounds: the same inequality stated on W_q = 1 + (1-q) T_q.
    std::optional<double> momentValue;
    std::optional<double> momentBound;
};

// A0(alpha, D) = D/alpha + log[(2 pi^(D/2)/alpha) (alpha/D)^(D/alpha) Gamma(D/alpha)/Gamma(D/2)].
double a0(double alpha, int D);
// log L1(q, alpha, D); q > 1 as printed, 0 < q < 1 through the matching extremal family
// (requires q > D/(D+alpha)).
double log_l1(double q, double alpha, int D);
// log L2(q, alpha, D); requires q > 1 and alpha < D(q-1)/q.
double log_l2(double q, double alpha, int D);

BoundReport bound_shannon_upper(const HydrogenicState& s, double alpha, Space space);
BoundReport bound_renyi_upper(const HydrogenicState& s, double q, double alpha, int momentSign, Space space);
// W_q >= L <x^a>^(-D(q-1)/a) for q > 1 (<= for q < 1), reported as the upper bound
// T_q <= (1 - L <x^a>^(-D(q-1)/a))/(q-1), which holds in both cases.
BoundReport bound_tsallis_lower(const HydrogenicState& s, double q, double alpha, int momentSign, Space space);

struct AsymptoticTerms {
    double a0Exact = 0.0;
    double a0Asymptotic = 0.0;  // -(D-1)/2 log(D/2) + log(pi e) D/2 - log(D/alpha)/2 + log(2/alpha)
    double a1 = 0.0;            // log of the two position correction factors
    std::optional<double> a1Negative;  // A1(-alpha, D) when its argument is positive
    double a2 = 0.0;                   // 3D log D + log(pi e/8) D/2 + log(alpha/2)/2
    std::optional<double> a3;          // q > 1
    std::optional<double> logA5;       // q > 1
    double shannonAssembled = 0.0;     // a0Asymptotic + 2D log(D/2) - D log Z + (D/alpha) a1
    double shannonSplit = 0.0;         // A2 + (D/alpha) A1 - D log Z + log(2/alpha)
    double shannonPrinted = 0.0;       // 3D log D + [log(pi e/8)/2 - log Z + A1/alpha] D - log(alpha/2)/2
    std::optional<double> renyiAssembled;  // log L1/(1-q) + 2D log(D/2) - D log Z + (D/alpha) A1
    std::optional<double> renyiPrinted;    // (3D-1)/2 log D + [...] D + A3/(1-q)
    std::optional<double> tsallisAssembled;  // L1 (D^2/4Z)^(-D(q-1)) exp(-A1 D(q-1)/alpha), bound on W_q
    std::optional<double> tsallisPrinted;    // A5 A1^(-D(q-1)/alpha), only when A1 > 0
};

AsymptoticTerms asymptotic_bound_terms(const HydrogenicState& s, double alpha, double q);

}  // namespace hydro::entropy

#pragma once

// Exact exponent arithmetic for the convexity/subconvexity chain. Everything
// here is rational; any floating tolerance would mask sign errors.
//
//   convexity:  d/2
//   theta:      (2 delta0 + 1)/3            for 11/18 < delta0 < 1
//   subconvex:  (d - 1 + theta)/2,          gap to convexity = (1 - theta)/2
//   beta':      1 + eps/(2d - 2)            (d >= 2; undefined at d = 1)
//   H:          x^{(2 delta0 + 1)/3}        balancing (1/H) x^{2 delta0 + 1} = H^2

#include <cmath>
#include <stdexcept>

#include "padiclab/rational.hpp"

namespace padiclab {

struct BoundsConfig {
    int d = 2;                      // degree of the base field
    Rational delta0{7, 10};         // in (11/18, 1)
    Rational epsilon{1, 10};        // > 0
};

inline const Rational kDelta0Lo = Rational(11, 18);
inline const Rational kDelta0Hi = Rational(1);

// open-interval membership; boundary values are allowed in the ops below for
// limit reporting but are flagged non-admissible here
inline bool delta0_admissible(const Rational& delta0) {
    return kDelta0Lo < delta0 && delta0 < kDelta0Hi;
}

inline void require_delta0_in_closed_range(const Rational& delta0, const char* where) {
    if (delta0 < kDelta0Lo || delta0 > kDelta0Hi)
        throw std::domain_error(std::string(where) + ": delta0 outside [11/18, 1]");
}

inline Rational convexity_exponent(int d) {
    if (d < 1) throw std::domain_error("convexity_exponent: d >= 1 required");
    return Rational(d, 2);
}

inline Rational theta(const Rational& delta0) {
    require_delta0_in_closed_range(delta0, "theta");
    return (Rational(2) * delta0 + Rational(1)) / Rational(3);
}

inline Rational subconvex_exponent(int d, const Rational& delta0) {
    if (d < 1) throw std::domain_error("subconvex_exponent: d >= 1 required");
    return (Rational(d - 1) + theta(delta0)) / Rational(2);
}

// convexity - subconvex, always (1 - theta)/2
inline Rational subconvex_savings(const Rational& delta0) {
    return (Rational(1) - theta(delta0)) / Rational(2);
}

inline Rational beta_prime_choice(int d, const Rational& epsilon) {
    if (d < 2)
        throw std::domain_error("beta_prime_choice: d = 1 rejected (eps/(2d-2) undefined)");
    if (!(Rational(0) < epsilon)) throw std::domain_error("beta_prime_choice: eps > 0 required");
    return Rational(1) + epsilon / Rational(2 * (d - 1));
}

// H = x^{(2 delta0 + 1)/3}; (1/H) x^{2 delta0 + 1} = H^2 to rounding
inline double optimal_H(double x, const Rational& delta0) {
    if (x <= 0.0) throw std::domain_error("optimal_H: x > 0 required");
    require_delta0_in_closed_range(delta0, "optimal_H");
    return std::pow(x, theta(delta0).to_double());
}

} // namespace padiclab

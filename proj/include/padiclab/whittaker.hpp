#pragma once

// Spherical Whittaker values from Satake parameters, the two-factor local
// L-factor, and the Mellin identity
//   sum_{n>=0} q^{-ns} (a^{n+1}-b^{n+1})/(a-b) = 1/((1-a q^{-s})(1-b q^{-s})).

#include <complex>
#include <cmath>

#include "padiclab/numeric.hpp"

namespace padiclab {

struct SatakeParams {
    cplx alpha;
    cplx beta;
    bool tempered = false; // |alpha| = |beta| = 1 when set

    double radius() const { return std::max(std::abs(alpha), std::abs(beta)); }
};

inline SatakeParams tempered_pair(double theta) {
    return SatakeParams{std::polar(1.0, theta), std::polar(1.0, -theta), true};
}

// W(diag(y,1)) as a function of n = ord(y):
//   (alpha^{n+1} - beta^{n+1}) / (alpha - beta) for n >= 0, 0 otherwise,
// with the limit (n+1) alpha^n when the parameters coincide.
inline cplx whittaker_value(const SatakeParams& sp, long long n) {
    if (n < 0) return cplx(0.0, 0.0);
    if (std::abs(sp.alpha - sp.beta) < 1e-12) {
        cplx an(1.0, 0.0);
        for (long long i = 0; i < n; ++i) an *= sp.alpha;
        return static_cast<double>(n + 1) * an;
    }
    cplx a = std::pow(sp.alpha, static_cast<double>(n + 1));
    cplx b = std::pow(sp.beta, static_cast<double>(n + 1));
    return (a - b) / (sp.alpha - sp.beta);
}

// (1 - alpha q^{-s})^{-1} (1 - beta q^{-s})^{-1}
inline cplx local_L(const SatakeParams& sp, double q, cplx s_sample) {
    cplx qs = q_pow(q, -s_sample);
    return guarded_inverse(1.0 - sp.alpha * qs, "local_L") *
           guarded_inverse(1.0 - sp.beta * qs, "local_L");
}

struct SeriesValue {
    cplx value;
    double tail_bound;
};

// Truncated Mellin transform of the Whittaker function plus a closed-form
// tail bound from |W(n)| <= (n+1) r^n.
inline SeriesValue mellin_whittaker(const SatakeParams& sp, double q, cplx s_sample, long long L) {
    double rho = sp.radius() * std::abs(q_pow(q, -s_sample));
    if (rho >= 1.0) throw divergent_region_error("mellin_whittaker: r*|q^{-s}| >= 1");
    cplx qs = q_pow(q, -s_sample);
    cplx term(1.0, 0.0); // q^{-ns} at n=0
    cplx acc(0.0, 0.0);
    for (long long n = 0; n <= L; ++n) {
        acc += term * whittaker_value(sp, n);
        term *= qs;
    }
    return SeriesValue{acc, tail_linear(rho, L)};
}

} // namespace padiclab

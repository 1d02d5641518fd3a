#pragma once

// Archimedean machinery: the gamma ratios A (complex places) and G_v, the
// leading terms of the archimedean kernels, and the analytic conductor
//   Q(chi, t) = prod_{v real} (1 + |t+t_v|) * prod_{v cplx} (1 + l_v^2 + 4(t+t_v)^2).
//
// Only main terms are computed; the 1 + O(...) error factors of the quoted
// asymptotics are not modeled.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "padiclab/gamma.hpp"
#include "padiclab/numeric.hpp"

namespace padiclab {

enum class PlaceKind { Real, Complex };

struct ArchPlaceParams {
    PlaceKind kind = PlaceKind::Complex;
    double t = 0.0;        // central sample
    double t_v = 0.0;      // parameter of the local component chi_v
    long long ell_v = 0;   // 0 at real places
    cplx mu1{0.0, 0.0};
    cplx mu2{0.0, 0.0};
    cplx w{2.0, 0.0};
};

// Generic ratio-of-gammas evaluator: 2^{pow2(s',w)} * prod Gamma(num_i) / prod Gamma(den_j)
// with each argument affine in (s', w). The B-ratio at real places is supplied
// through this engine by the caller; the paper never displays it explicitly.
struct AffineArg {
    cplx coef_w{0.0, 0.0};
    cplx coef_sp{0.0, 0.0};
    cplx constant{0.0, 0.0};

    cplx at(cplx s_prime, cplx w) const { return coef_w * w + coef_sp * s_prime + constant; }
};

struct GammaRatioSpec {
    AffineArg pow2;                  // exponent of 2
    std::vector<AffineArg> numerator;
    std::vector<AffineArg> denominator;

    cplx eval(cplx s_prime, cplx w) const {
        // accumulate gamma logs in sorted order: permuting an argument
        // multiset (the A-ratio symmetries) then reproduces the value bitwise
        std::vector<cplx> logs;
        logs.reserve(numerator.size() + denominator.size());
        for (const auto& a : numerator) logs.push_back(log_gamma(a.at(s_prime, w)));
        for (const auto& a : denominator) logs.push_back(-log_gamma(a.at(s_prime, w)));
        std::sort(logs.begin(), logs.end(), [](cplx l, cplx r) {
            return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
        });
        cplx lg(0.0, 0.0);
        for (cplx v : logs) lg += v;
        return std::exp(pow2.at(s_prime, w) * std::log(2.0) + lg);
    }
};

// A(s', w, mu1, mu2) =
//   2^{4w-4s'-4} Gamma(w+s'+i mu1+i conj(mu2)) Gamma(w+s'-i mu1+i conj(mu2))
//                Gamma(w+s'+i mu1-i conj(mu2)) Gamma(w+s'-i mu1-i conj(mu2))
//   / Gamma(2w+2s')
inline GammaRatioSpec a_ratio_spec(cplx mu1, cplx mu2) {
    const cplx i(0.0, 1.0);
    cplx m1 = i * mu1, m2 = i * std::conj(mu2);
    GammaRatioSpec spec;
    spec.pow2 = AffineArg{cplx(4.0, 0.0), cplx(-4.0, 0.0), cplx(-4.0, 0.0)};
    spec.numerator = {
        AffineArg{1.0, 1.0, m1 + m2},
        AffineArg{1.0, 1.0, -m1 + m2},
        AffineArg{1.0, 1.0, m1 - m2},
        AffineArg{1.0, 1.0, -m1 - m2},
    };
    spec.denominator = {AffineArg{2.0, 2.0, 0.0}};
    return spec;
}

inline cplx gamma_ratio_A(cplx s_prime, cplx w, cplx mu1, cplx mu2) {
    return a_ratio_spec(mu1, mu2).eval(s_prime, w);
}

// G_v(s; s', w):
//  real:    pi^{-s'} Gamma((s'+1-s)/2) Gamma((s'+w-s)/2) Gamma((s'+s)/2) Gamma((s'+w+s-1)/2)
//                    / (Gamma(w/2) Gamma(s'+w/2))
//  complex: 2 pi^{-2s'} Gamma(s'+1-s) Gamma(s'+w-s) Gamma(s'+s) Gamma(s'+w+s-1)
//                    / (Gamma(w) Gamma(2s'+w))
inline cplx gamma_ratio_G(PlaceKind kind, cplx s, cplx s_prime, cplx w) {
    if (kind == PlaceKind::Real) {
        cplx lg = log_gamma((s_prime + 1.0 - s) / 2.0) + log_gamma((s_prime + w - s) / 2.0) +
                  log_gamma((s_prime + s) / 2.0) + log_gamma((s_prime + w + s - 1.0) / 2.0) -
                  log_gamma(w / 2.0) - log_gamma(s_prime + w / 2.0);
        return std::exp(-s_prime * std::log(kPi) + lg);
    }
    cplx lg = log_gamma(s_prime + 1.0 - s) + log_gamma(s_prime + w - s) +
              log_gamma(s_prime + s) + log_gamma(s_prime + w + s - 1.0) -
              log_gamma(w) - log_gamma(2.0 * s_prime + w);
    return 2.0 * std::exp(-2.0 * s_prime * std::log(kPi) + lg);
}

// Local factor of the analytic conductor at one archimedean place.
inline double conductor_place_factor(const ArchPlaceParams& place) {
    double u = place.t + place.t_v;
    if (place.kind == PlaceKind::Real) return 1.0 + std::abs(u);
    double l2 = static_cast<double>(place.ell_v) * static_cast<double>(place.ell_v);
    return 1.0 + l2 + 4.0 * u * u;
}

inline double analytic_conductor(const std::vector<ArchPlaceParams>& places, double t) {
    double acc = 1.0;
    for (auto pl : places) {
        pl.t = t;
        acc *= conductor_place_factor(pl);
    }
    return acc;
}

// Main term of the archimedean kernel at one place:
//   complex: pi^{-2s'+1} A(s',w,mu1,mu2) (1+l_v^2+4(t+t_v)^2)^{-w}
//   real:    B(s',w,mu1,mu2) (1+|t+t_v|)^{-w}, B supplied as a gamma-factor list
inline cplx k_inf_leading(const ArchPlaceParams& place, cplx s_prime,
                          const GammaRatioSpec* b_ratio = nullptr) {
    double qf = conductor_place_factor(place);
    cplx decay = std::exp(-place.w * std::log(qf));
    if (place.kind == PlaceKind::Complex) {
        cplx a = gamma_ratio_A(s_prime, place.w, place.mu1, place.mu2);
        return std::exp((1.0 - 2.0 * s_prime) * std::log(kPi)) * a * decay;
    }
    if (b_ratio == nullptr)
        throw std::invalid_argument("k_inf_leading: real place requires a user-supplied B gamma-factor list");
    return b_ratio->eval(s_prime, place.w) * decay;
}

} // namespace padiclab

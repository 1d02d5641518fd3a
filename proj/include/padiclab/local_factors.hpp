#pragma once

// The star non-archimedean evaluations at the deformed finite place: the
// kernel K_{v1}(w', chi), the unipotent integral of phi, the cuspidal and
// continuous-part local factors, and the auxiliary constants C', M1, M2 --
// each closed form paired with a shell-enumeration oracle.
//
// Conventions. The oracles integrate with multiplicative shell measure 1
// (unit averages) in y, y', t and the field's additive convention in x.
// Under UNIT_ADDITIVE (meas_add(o) = 1) every oracle here reproduces its
// closed form at ratio 1.
//
// A note on the cuspidal/continuous closed forms. The source display for the
// middle term sums the y-shells from ord(y) = -m instead of from the shell
// condition ord(y) >= -ord(x) = m (support-clamped at 0), which breaks the
// elementary Re(s') -> +inf limit: the printed form tends to 1/q - q^{-w'},
// the integral to 1 - q^{-w'}. `closed` mode therefore evaluates the
// support-clamped forms
//     cusp:  U(w') * [ L(s'+1/2) - q^{1-w'} L(s'+w'-1/2) ]
//     cont:  U(w') * [ L(s+s',chi) L(s'+1-s,conj chi)
//                      - q^{1-w'} L(s+s'+w'-1,chi) L(s'+w'-s,conj chi) ]
// with U(w') = (1-q^{-w'})/(1-q^{1-w'}) the unipotent integral; the printed
// displays stay available as explicit variants so the oracle can adjudicate.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "padiclab/characters.hpp"
#include "padiclab/local_field.hpp"
#include "padiclab/numeric.hpp"
#include "padiclab/whittaker.hpp"

namespace padiclab {

// phi on the unipotent coordinate: 1 on o, |x|^{-w'} off o
struct PhiProfile {
    cplx w_prime;

    cplx eval(long long q, int ord) const {
        if (ord >= 0) return cplx(1.0, 0.0);
        // |x| = q^{-ord}; |x|^{-w'} = q^{ord * w'}
        return q_pow(static_cast<double>(q), -static_cast<double>(ord) * w_prime);
    }
};

struct ParamPoint {
    cplx s{0.5, 0.0};
    cplx s_prime{0.0, 0.0};
    cplx w_prime{2.0, 0.0};
};

// ---------------------------------------------------------------------------
// K_{v1}
// ---------------------------------------------------------------------------

// q^{1-Nw'}/(q-1) * (1 - |a|^2|b|^2 q^{-2w'}) /
//   ((1-|a|^2 q^{-w'})(1-|b|^2 q^{-w'})(1-conj(a)b q^{-w'})(1-a conj(b) q^{-w'}))
inline cplx k_v1_closed(const SatakeParams& sp, double q, int N, cplx w_prime) {
    cplx qw = q_pow(q, -w_prime);
    double a2 = std::norm(sp.alpha), b2 = std::norm(sp.beta);
    cplx numer = 1.0 - a2 * b2 * qw * qw;
    cplx value = numer;
    value *= guarded_inverse(1.0 - a2 * qw, "k_v1_closed");
    value *= guarded_inverse(1.0 - b2 * qw, "k_v1_closed");
    value *= guarded_inverse(1.0 - std::conj(sp.alpha) * sp.beta * qw, "k_v1_closed");
    value *= guarded_inverse(1.0 - sp.alpha * std::conj(sp.beta) * qw, "k_v1_closed");
    cplx prefactor = q_pow(q, 1.0 - static_cast<double>(N) * w_prime) / (q - 1.0);
    return prefactor * value;
}

// q/(q-1) * q^{-Nw'} * sum_{l=0}^{L} q^{-l w'} |W(l)|^2, with tail bound from
// |W(l)|^2 <= (l+1)^2 r^{2l}
inline SeriesValue k_v1_series(const SatakeParams& sp, double q, int N, cplx w_prime, long long L) {
    double r = sp.radius();
    double rho = r * r * std::abs(q_pow(q, -w_prime));
    if (rho >= 1.0) throw divergent_region_error("k_v1_series: |q^{-w'}| r^2 >= 1");
    cplx qw = q_pow(q, -w_prime);
    cplx term(1.0, 0.0), acc(0.0, 0.0);
    for (long long l = 0; l <= L; ++l) {
        acc += term * std::norm(whittaker_value(sp, l));
        term *= qw;
    }
    cplx prefactor = (q / (q - 1.0)) * q_pow(q, -static_cast<double>(N) * w_prime);
    return SeriesValue{prefactor * acc, std::abs(prefactor) * tail_quadratic(rho, L)};
}

// Shell-enumeration oracle for the K_{v1} triple integral
//   int int chi(y)|y|^s chi^{-1}(y')|y'|^{1-s} W(y) conj(W)(y')
//       [ int conj(psi)(x(y-y')) phi(x) dx ] dy dy'.
// The inner unit averages over a fixed shell triple factor exactly as
// Gamma(ord(xy)) * conj(Gamma(ord(xy'))) with
// Gamma(l) = int_{o^x} chi(u) conj(psi)(p^l u) du, computed by direct
// summation at modulus p^{max(N,-l)}. Shells whose Gamma-modulus would
// exceed the unit budget are dropped: they carry Gamma values that the
// shell-wise vanishing suite certifies to be zero (x-shells are limited by
// the criterion ord(x) = -ord(y) - N).
inline SeriesValue k_v1_bruteforce(const LocalFieldModel& field, const SatakeParams& sp,
                                   const MultCharacter& chi, const ParamPoint& point,
                                   long long L, std::uint64_t unit_budget = 4'000'000) {
    if (point.w_prime.real() <= 1.0)
        throw divergent_region_error("k_v1_bruteforce: Re(w') > 1 required");
    int N = chi.conductor();
    if (N < 1 || N != chi.modulus_exp())
        throw std::invalid_argument("k_v1_bruteforce: primitive character of conductor N >= 1 required");

    double q = static_cast<double>(field.q());
    double r = sp.radius();
    double sigma_w = point.w_prime.real();
    double rho = r * r * std::pow(q, -sigma_w);
    if (rho >= 1.0) throw divergent_region_error("k_v1_bruteforce: divergent shell sum");

    // Gamma table over every l = ord(xy) reachable in the truncated sum
    int band = 2;
    while (band < 8 && pow_u64(static_cast<std::uint64_t>(field.p()), N + band + 1) <= 60000) ++band;
    long long Ln = L + band + 2;     // y-shell cap
    long long m_lo = -(N + L);       // deepest x-shell
    int l_lo = static_cast<int>(m_lo);          // most negative ord(xy) (at n = 0)
    int l_hi = static_cast<int>(Ln) + 2;        // x-shells up to ord = 2 are included
    std::uint64_t cost = 0;
    std::map<int, cplx> gamma_table;
    for (int l = l_lo; l <= l_hi; ++l) {
        int K = std::max({N, -l, 1});
        if (K > N + band) continue; // dropped: certified-vanishing band
        cost += pow_u64(static_cast<std::uint64_t>(field.p()), K);
        if (cost > unit_budget) throw budget_exceeded_error("k_v1_bruteforce: unit budget exceeded");
        gamma_table[l] = gauss_shell_integral(chi, l);
    }
    auto gamma_at = [&](long long l) -> cplx {
        auto it = gamma_table.find(static_cast<int>(l));
        return it == gamma_table.end() ? cplx(0.0, 0.0) : it->second;
    };

    cplx qs = q_pow(q, -point.s);
    cplx q1s = q_pow(q, -(1.0 - point.s));
    cplx z = chi.z();
    std::vector<cplx> contributions;
    for (long long m = m_lo; m <= 2; ++m) {
        // y-side: sum_n z^n q^{-ns} W(n) Gamma(m+n)
        cplx y_sum(0.0, 0.0), zn(1.0, 0.0), qsn(1.0, 0.0);
        // y'-side: sum_n z^{-n} q^{-n(1-s)} conj(W(n)) conj(Gamma(m+n))
        cplx yp_sum(0.0, 0.0), zpn(1.0, 0.0), q1sn(1.0, 0.0);
        for (long long n = 0; n <= Ln; ++n) {
            cplx w = whittaker_value(sp, n);
            cplx g = gamma_at(m + n);
            y_sum += zn * qsn * w * g;
            yp_sum += std::conj(zn) * q1sn * std::conj(w) * std::conj(g);
            zn *= z;
            qsn *= qs;
            q1sn *= q1s;
        }
        double meas = field.shell_measure(static_cast<int>(m), MeasureMode::Additive).to_double();
        cplx phi_weight = (m >= 0) ? cplx(1.0, 0.0)
                                   : q_pow(q, -static_cast<double>(-m) * point.w_prime);
        contributions.push_back(meas * phi_weight * y_sum * yp_sum);
    }
    cplx value = pairwise_sum(std::move(contributions));

    // truncation tail: surviving terms are bounded by the k_v1_series shape
    double tail = 2.0 * std::pow(q, static_cast<double>(N) * (1.0 - sigma_w)) *
                  tail_quadratic(rho, L);
    return SeriesValue{value, tail};
}

// ---------------------------------------------------------------------------
// Unipotent integral of phi
// ---------------------------------------------------------------------------

inline cplx unipotent_closed(double q, cplx w_prime) {
    cplx c = q_pow(q, 1.0 - w_prime);
    return (1.0 - q_pow(q, -w_prime)) * guarded_inverse(1.0 - c, "unipotent_closed");
}

// 1 + (q-1)/q * sum_{m>=1} q^{m(1-w')}
inline SeriesValue unipotent_series(double q, cplx w_prime, long long L) {
    cplx c = q_pow(q, 1.0 - w_prime);
    double rho = std::abs(c);
    if (rho >= 1.0) throw divergent_region_error("unipotent_series: Re(w') > 1 required");
    cplx acc(0.0, 0.0), term = c;
    for (long long m = 1; m <= L; ++m) {
        acc += term;
        term *= c;
    }
    double conv = (q - 1.0) / q;
    return SeriesValue{1.0 + conv * acc, conv * tail_geometric(rho, L)};
}

// ---------------------------------------------------------------------------
// Cuspidal local factor at v1
// ---------------------------------------------------------------------------

// support-clamped three-term form:
//   L1 + (q-1) q^{1-w'} / (q (1-q^{1-w'})) * (L1 - L2) - q^{-w'} L2
// (equivalently U(w') (L1 - q^{1-w'} L2)), L1 = Euler factor at q^{-s'},
// L2 at q^{1-w'-s'}.
inline cplx cuspidal_closed(const SatakeParams& sp, double q, cplx s_prime, cplx w_prime) {
    cplx L1 = local_L(sp, q, s_prime);
    cplx L2 = local_L(sp, q, s_prime + w_prime - 1.0);
    cplx c = q_pow(q, 1.0 - w_prime);
    cplx mid = (q - 1.0) / q * c * guarded_inverse(1.0 - c, "cuspidal_closed") * (L1 - L2);
    return L1 + mid - q_pow(q, -w_prime) * L2;
}

// the display as printed in the source (middle term summed from ord(y) = -m)
inline cplx cuspidal_closed_as_printed(const SatakeParams& sp, double q, cplx s_prime, cplx w_prime) {
    cplx L1 = local_L(sp, q, s_prime);
    cplx L2 = local_L(sp, q, s_prime + w_prime - 1.0);
    cplx ab = sp.alpha * sp.beta;
    if (std::abs(ab) < kPoleGuard) throw pole_error("cuspidal_closed_as_printed: alpha*beta ~ 0");
    cplx numer = (q - 1.0) * (q_pow(q, -w_prime) - q_pow(q, 1.0 - 2.0 * w_prime + 2.0 * s_prime) / ab);
    cplx d1 = 1.0 - q_pow(q, 1.0 - w_prime + s_prime) / sp.alpha;
    cplx d2 = 1.0 - q_pow(q, 1.0 - w_prime + s_prime) / sp.beta;
    cplx mid = numer * guarded_inverse(d1, "cuspidal_closed_as_printed") *
               guarded_inverse(d2, "cuspidal_closed_as_printed") * L1;
    return L1 + mid - q_pow(q, -w_prime) * L2;
}

// Shell oracle for int_k int_{k^x} conj(psi)(xy) |y|^{s'} W(y) phi(x) dy dx.
// y-shells enter through the three-case psi shell integral.
inline SeriesValue cuspidal_bruteforce(const LocalFieldModel& field, const SatakeParams& sp,
                                       cplx s_prime, cplx w_prime,
                                       long long Lx = 24, long long Ly = 64) {
    double q = static_cast<double>(field.q());
    double r = sp.radius();
    double rho_y = r * std::abs(q_pow(q, -s_prime));
    if (rho_y >= 1.0) throw divergent_region_error("cuspidal_bruteforce: y-series divergent");
    double rho_x = std::pow(q, 1.0 - w_prime.real()) * rho_y;
    if (rho_x >= 1.0) throw divergent_region_error("cuspidal_bruteforce: x-shell sum divergent");

    cplx qs = q_pow(q, -s_prime);
    double meas_o = field.ball_measure(0).to_double();
    double shell_conv = (q - 1.0) / q *
                        (field.convention() == MeasureConvention::Paper313 ? q / (q - 1.0) : 1.0);
    // shell_conv equals meas_add({ord = -m}) / q^m for m >= 1

    double tail = 0.0;
    std::vector<cplx> contributions;

    // x in o: psi trivial on the support of W
    {
        cplx acc(0.0, 0.0), term(1.0, 0.0);
        for (long long n = 0; n <= Ly; ++n) {
            acc += term * whittaker_value(sp, n);
            term *= qs;
        }
        contributions.push_back(meas_o * acc);
        tail += meas_o * tail_linear(rho_y, Ly);
    }

    // x-shells ord(x) = -m, m >= 1
    for (long long m = 1; m <= Lx; ++m) {
        cplx weight = shell_conv * q_pow(q, static_cast<double>(m) * (1.0 - w_prime));
        cplx inner(0.0, 0.0);
        cplx term = std::pow(qs, static_cast<double>(m));
        for (long long n = m; n <= Ly; ++n) { // psi shell value 1
            inner += term * whittaker_value(sp, n);
            term *= qs;
        }
        inner -= (1.0 / (q - 1.0)) * std::pow(qs, static_cast<double>(m - 1)) *
                 whittaker_value(sp, m - 1); // psi shell value -1/(q-1) at n = m-1
        contributions.push_back(weight * inner);
        tail += std::abs(weight) * tail_linear(rho_y, Ly);
    }

    // x-shells beyond Lx: |inner(m)| <= (m+1) rho_y^{m-1} K1
    double K1 = rho_y / (1.0 - rho_y) + rho_y * rho_y / ((1.0 - rho_y) * (1.0 - rho_y)) +
                1.0 / (q - 1.0);
    tail += shell_conv * (K1 / rho_y) * tail_linear(rho_x, Lx);

    return SeriesValue{pairwise_sum(std::move(contributions)), tail};
}

// ---------------------------------------------------------------------------
// Continuous-part local factor at v1 (unramified twist z at the place)
// ---------------------------------------------------------------------------

enum class ContinuousVariant {
    Corrected,    // support-clamped evaluation
    PrintedPlus,  // bracket with q^{-w'+s+s'} as displayed
    PrintedMinus  // the q^{-w'-s+s'} reading of the substituted display
};

inline const char* variant_name(ContinuousVariant v) {
    switch (v) {
        case ContinuousVariant::Corrected: return "corrected";
        case ContinuousVariant::PrintedPlus: return "printed-plus";
        default: return "printed-minus";
    }
}

inline cplx continuous_closed(double q, cplx z, const ParamPoint& pt, ContinuousVariant variant) {
    cplx s = pt.s, sp = pt.s_prime, wp = pt.w_prime;
    auto L_chi = [&](cplx u) { return guarded_inverse(1.0 - z * q_pow(q, -u), "continuous_closed"); };
    auto L_chibar = [&](cplx u) {
        return guarded_inverse(1.0 - std::conj(z) * q_pow(q, -u), "continuous_closed");
    };

    if (variant == ContinuousVariant::Corrected) {
        cplx c = q_pow(q, 1.0 - wp);
        cplx unip = (1.0 - q_pow(q, -wp)) * guarded_inverse(1.0 - c, "continuous_closed");
        cplx first = L_chi(s + sp) * L_chibar(sp + 1.0 - s);
        cplx second = L_chi(s + sp + wp - 1.0) * L_chibar(sp + wp - s);
        return unip * (first - c * second);
    }

    double sign = (variant == ContinuousVariant::PrintedPlus) ? 1.0 : -1.0;
    cplx first = L_chi(s + sp) * L_chibar(sp + 1.0 - s);
    cplx e1 = q_pow(q, -wp + sign * s + sp);
    cplx d1 = 1.0 - q_pow(q, 1.0 - wp + sign * s + sp);
    cplx d2 = 1.0 - q_pow(q, -(s + sp));
    cplx d3 = 1.0 - q_pow(q, 1.0 - wp - s - sp);
    cplx bracket = (q - 1.0) * e1 * guarded_inverse(d1, "continuous_closed") *
                       guarded_inverse(d2, "continuous_closed") -
                   q_pow(q, -wp) * guarded_inverse(d3, "continuous_closed");
    return first + L_chibar(1.0 - 2.0 * s) * bracket;
}

// x-in-o sub-block of the continuous oracle: psi is trivial there, so the
// t- and y-series decouple and the block reproduces L(s+s',chi) L(s'+1-s,conj chi)
// times meas_add(o).
inline SeriesValue continuous_x_in_o_block(const LocalFieldModel& field, cplx z,
                                           const ParamPoint& pt, long long Lyt = 64) {
    double q = static_cast<double>(field.q());
    cplx A = std::conj(z) * q_pow(q, -(pt.s_prime + 1.0 - pt.s));
    cplx B = z * q_pow(q, -(pt.s + pt.s_prime));
    double rho_a = std::abs(A), rho_b = std::abs(B);
    if (std::max(rho_a, rho_b) >= 1.0)
        throw divergent_region_error("continuous_x_in_o_block: series divergent");
    cplx sa(0.0, 0.0), sb(0.0, 0.0), ta(1.0, 0.0), tb(1.0, 0.0);
    for (long long k = 0; k <= Lyt; ++k) {
        sa += ta;
        sb += tb;
        ta *= A;
        tb *= B;
    }
    double meas_o = field.ball_measure(0).to_double();
    double tail = meas_o * (tail_geometric(rho_a, Lyt) / (1.0 - rho_b) +
                            tail_geometric(rho_b, Lyt) / (1.0 - rho_a));
    return SeriesValue{meas_o * sa * sb, tail};
}

// Shell oracle for the triple integral
//   int_x phi(x) int_{t in o} conj(chi)(t) |t|^{s'+1-s}
//       int_{y in o} conj(psi)(xyt) chi(y) |y|^{s+s'} dy dt dx.
inline SeriesValue continuous_bruteforce(const LocalFieldModel& field, cplx z,
                                         const ParamPoint& pt,
                                         long long Lx = 24, long long Lyt = 48) {
    double q = static_cast<double>(field.q());
    cplx A = std::conj(z) * q_pow(q, -(pt.s_prime + 1.0 - pt.s)); // t-shell weight
    cplx B = z * q_pow(q, -(pt.s + pt.s_prime));                  // y-shell weight
    double rho_a = std::abs(A), rho_b = std::abs(B);
    double rho = std::max(rho_a, rho_b);
    if (rho >= 1.0) throw divergent_region_error("continuous_bruteforce: t/y series divergent");
    double rho_x = std::pow(q, 1.0 - pt.w_prime.real()) * rho;
    if (rho_x >= 1.0) throw divergent_region_error("continuous_bruteforce: x-shell sum divergent");

    double meas_o = field.ball_measure(0).to_double();
    double shell_conv = (q - 1.0) / q *
                        (field.convention() == MeasureConvention::Paper313 ? q / (q - 1.0) : 1.0);

    // powers of A and B
    std::vector<cplx> Ar(Lyt + 1), Bn(Lyt + 1);
    Ar[0] = Bn[0] = cplx(1.0, 0.0);
    for (long long k = 1; k <= Lyt; ++k) {
        Ar[k] = Ar[k - 1] * A;
        Bn[k] = Bn[k - 1] * B;
    }

    double tail = 0.0;
    std::vector<cplx> contributions;

    // x in o: psi trivial, the double series factors
    {
        cplx sa(0.0, 0.0), sb(0.0, 0.0);
        for (long long k = 0; k <= Lyt; ++k) {
            sa += Ar[k];
            sb += Bn[k];
        }
        contributions.push_back(meas_o * sa * sb);
        tail += meas_o * (tail_geometric(rho_a, Lyt) / (1.0 - rho_b) +
                          tail_geometric(rho_b, Lyt) / (1.0 - rho_a));
    }

    // x-shells ord(x) = -m, m >= 1
    for (long long m = 1; m <= Lx; ++m) {
        cplx weight = shell_conv * q_pow(q, static_cast<double>(m) * (1.0 - pt.w_prime));
        cplx inner(0.0, 0.0);
        for (long long n = 0; n <= Lyt; ++n) {
            for (long long rr = 0; rr <= Lyt; ++rr) {
                long long l = n + rr - m; // ord(xyt)
                if (l >= 0) inner += Bn[n] * Ar[rr];
                else if (l == -1) inner -= Bn[n] * Ar[rr] / (q - 1.0);
            }
        }
        contributions.push_back(weight * inner);
        tail += std::abs(weight) * 2.0 * (tail_geometric(rho_a, Lyt) / (1.0 - rho_b) +
                                          tail_geometric(rho_b, Lyt) / (1.0 - rho_a));
    }

    // x-shells beyond Lx
    double K1 = rho / (1.0 - rho) + rho * rho / ((1.0 - rho) * (1.0 - rho)) + 1.0 / (q - 1.0);
    tail += shell_conv * (K1 / rho) * tail_linear(rho_x, Lx);

    return SeriesValue{pairwise_sum(std::move(contributions)), tail};
}

// ---------------------------------------------------------------------------
// Section-5 constants
// ---------------------------------------------------------------------------

// M1(w') = (q-1)(q^{-w'} - q^{1-2w'}/(ab)) / ((1-a^{-1}q^{1-w'})(1-b^{-1}q^{1-w'})) * L(1/2)
//          - q^{-w'} L((2w'-1)/2)
inline cplx m1_term(const SatakeParams& sp, double q, cplx w_prime) {
    cplx ab = sp.alpha * sp.beta;
    if (std::abs(ab) < kPoleGuard) throw pole_error("m1_term: alpha*beta ~ 0");
    cplx L_half = local_L(sp, q, cplx(0.0, 0.0));              // L(1/2, .) = Euler factor at q^0
    cplx L_w = local_L(sp, q, w_prime - 1.0);                  // L((2w'-1)/2, .) at q^{1-w'}
    cplx numer = (q - 1.0) * (q_pow(q, -w_prime) - q_pow(q, 1.0 - 2.0 * w_prime) / ab);
    cplx d1 = 1.0 - q_pow(q, 1.0 - w_prime) / sp.alpha;
    cplx d2 = 1.0 - q_pow(q, 1.0 - w_prime) / sp.beta;
    return numer * guarded_inverse(d1, "m1_term") * guarded_inverse(d2, "m1_term") * L_half -
           q_pow(q, -w_prime) * L_w;
}

// M2(w') = (q-1) q^{1-w'-s} / ((1-q^{2-w'-s})(1-q^{s-1})) - q^{-w'} / (1-q^{-w'+s})
inline cplx m2_bracket(double q, cplx s, cplx w_prime) {
    cplx t1 = (q - 1.0) * q_pow(q, 1.0 - w_prime - s) *
              guarded_inverse(1.0 - q_pow(q, 2.0 - w_prime - s), "m2_bracket") *
              guarded_inverse(1.0 - q_pow(q, s - 1.0), "m2_bracket");
    cplx t2 = q_pow(q, -w_prime) * guarded_inverse(1.0 - q_pow(q, s - w_prime), "m2_bracket");
    return t1 - t2;
}

// C' = q/(q-1) * (1-|a|^2|b|^2 q^{-2w'}) / (four-factor product);
// satisfies k_v1_closed(N, w') = C' q^{-N w'} for every N.
inline cplx c_prime_constant(const SatakeParams& sp, double q, cplx w_prime) {
    cplx qw = q_pow(q, -w_prime);
    double a2 = std::norm(sp.alpha), b2 = std::norm(sp.beta);
    cplx value = 1.0 - a2 * b2 * qw * qw;
    value *= guarded_inverse(1.0 - a2 * qw, "c_prime_constant");
    value *= guarded_inverse(1.0 - b2 * qw, "c_prime_constant");
    value *= guarded_inverse(1.0 - std::conj(sp.alpha) * sp.beta * qw, "c_prime_constant");
    value *= guarded_inverse(1.0 - sp.alpha * std::conj(sp.beta) * qw, "c_prime_constant");
    return (q / (q - 1.0)) * value;
}

} // namespace padiclab

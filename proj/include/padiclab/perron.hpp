#pragma once

// Numerical Perron machinery for finite Dirichlet polynomials in (q^N)^{-w}:
// truncated contour integrals with the classical error bound
//   (1/2 pi i) int_{b-iS}^{b+iS} x^w / w dw
//       = [x > 1] + x^b O(min{1, 1/(S |log x|)}),
// partial-sum recovery, the window-set count of the Theorem-6.1 geometry,
// and the smoothing/mean-square demonstrations.
//
// Quadrature: fixed panelization of the vertical segment, Gauss-Legendre 15
// with an embedded 7-point error estimate, bisection where the estimate
// exceeds 1e-10 per unit height. Panel order and the pairwise reduction are
// fixed, so results are bit-reproducible for a given input.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "padiclab/numeric.hpp"

namespace padiclab {

struct ToyDirichletSeries {
    long long q = 2;
    std::map<int, double> coefficients; // N -> a_N, N >= 1, a_N >= 0

    cplx value(cplx w) const {
        cplx acc(0.0, 0.0);
        for (const auto& [N, a] : coefficients)
            acc += a * q_pow(static_cast<double>(q), -w * static_cast<double>(N));
        return acc;
    }

    // sum of a_N over q^N <= x (exact at the resolution of log comparisons;
    // callers keep x multiplicatively away from the jump points q^N)
    double partial_sum(double x) const {
        double acc = 0.0;
        double lx = std::log(x), lq = std::log(static_cast<double>(q));
        for (const auto& [N, a] : coefficients)
            if (static_cast<double>(N) * lq <= lx) acc += a;
        return acc;
    }

    bool empty() const {
        for (const auto& [N, a] : coefficients)
            if (a != 0.0) return false;
        return true;
    }
};

struct PerronParams {
    double x = 2.0;
    double beta_prime = 1.5;
    double S = 100.0;
    double delta0 = 0.7;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirrored)
struct GL15 {
    static constexpr int n = 8;
    static constexpr double x[8] = {
        0.0,
        0.2011940939974345223006283,
        0.3941513470775633698972074,
        0.5709721726085388475372267,
        0.7244177313601700474161861,
        0.8482065834104272162006483,
        0.9372733924007059043077589,
        0.9879925180204854284895657,
    };
    static constexpr double w[8] = {
        0.2025782419255612728806202,
        0.1984314853271115764561183,
        0.1861610000155622110268006,
        0.1662692058169939335532009,
        0.1395706779261543144478048,
        0.1071592204671719350118695,
        0.0703660474881081247092674,
        0.0307532419961172683546284,
    };
};

// embedded 7-point rule reusing the odd GL15 nodes
struct GL7 {
    static constexpr int n = 4;
    static constexpr double x[4] = {
        0.0,
        0.4058451513773971669066064,
        0.7415311855993944398638648,
        0.9491079123427585245261897,
    };
    static constexpr double w[4] = {
        0.4179591836734693877551020,
        0.3818300505051189449503698,
        0.2797053914892766679014678,
        0.1294849661688696932706114,
    };
};

template <typename Rule, typename F>
cplx quad_rule(const F& f, double a, double b) {
    double h = 0.5 * (b - a), c = 0.5 * (a + b);
    cplx acc = Rule::w[0] * f(c);
    for (int i = 1; i < Rule::n; ++i)
        acc += Rule::w[i] * (f(c + h * Rule::x[i]) + f(c - h * Rule::x[i]));
    return acc * h;
}

template <typename F>
void adaptive_panel(const F& f, double a, double b, double tol_per_unit, int depth,
                    std::vector<cplx>& out) {
    cplx v15 = quad_rule<GL15>(f, a, b);
    cplx v7 = quad_rule<GL7>(f, a, b);
    if (std::abs(v15 - v7) <= tol_per_unit * (b - a) || depth >= 24) {
        out.push_back(v15);
        return;
    }
    double mid = 0.5 * (a + b);
    adaptive_panel(f, a, mid, tol_per_unit, depth + 1, out);
    adaptive_panel(f, mid, b, tol_per_unit, depth + 1, out);
}

} // namespace detail

// (1 / 2 pi i) int_{c - iS}^{c + iS} F(w) dw along the vertical segment.
// osc_scale is the largest |log x| in play; it sets the base panel width.
template <typename F>
cplx contour_integral(const F& integrand, double c, double S, double osc_scale,
                      double tol_per_unit = 1e-10) {
    double panel = std::clamp(4.0 / (1.0 + osc_scale), 1.0 / 64.0, 2.0);
    long long n_panels = std::max<long long>(1, static_cast<long long>(std::ceil(2.0 * S / panel)));
    double h = 2.0 * S / static_cast<double>(n_panels);
    std::vector<cplx> parts;
    parts.reserve(static_cast<std::size_t>(n_panels));
    auto f = [&](double tau) { return integrand(cplx(c, tau)); };
    for (long long k = 0; k < n_panels; ++k) {
        double a = -S + h * static_cast<double>(k);
        detail::adaptive_panel(f, a, a + h, tol_per_unit, 0, parts);
    }
    // int f(c + i tau) i d tau / (2 pi i) = (1/2pi) int f d tau
    return pairwise_sum(std::move(parts)) / (2.0 * kPi);
}

// Truncated Perron indicator. Post: |result - [x>1]| <= 2 x^b min(1, 1/(S|log x|))
// plus quadrature tolerance.
inline cplx perron_indicator(double x, double beta_prime, double S) {
    if (x <= 0.0) throw std::domain_error("perron_indicator: x > 0 required");
    if (std::abs(std::log(x)) < 1e-9)
        throw std::domain_error("perron_indicator: x = 1 rejected (bound is singular)");
    if (beta_prime <= 1.0) throw std::domain_error("perron_indicator: beta' > 1 required");
    double lx = std::log(x);
    auto f = [&](cplx w) { return std::exp(w * lx) / w; };
    return contour_integral(f, beta_prime, S, std::abs(lx));
}

inline double perron_indicator_bound(double x, double beta_prime, double S) {
    double lx = std::abs(std::log(x));
    return 2.0 * std::pow(x, beta_prime) * std::min(1.0, 1.0 / (S * lx));
}

// Truncated contour value of (1/2 pi i) int Z(w) x^w / w dw on Re(w) = beta'.
inline double perron_partial_sum(const ToyDirichletSeries& Z, double x, double beta_prime,
                                 double S) {
    if (x <= 0.0) throw std::domain_error("perron_partial_sum: x > 0 required");
    double lq = std::log(static_cast<double>(Z.q));
    double osc = std::abs(std::log(x));
    for (const auto& [N, a] : Z.coefficients) {
        (void)a;
        double l = std::log(x) - static_cast<double>(N) * lq;
        if (std::abs(l) < 1e-9)
            throw std::domain_error("perron_partial_sum: x on a jump point q^N");
        osc = std::max(osc, std::abs(l));
    }
    double lx = std::log(x);
    auto f = [&](cplx w) { return Z.value(w) * std::exp(w * lx) / w; };
    return contour_integral(f, beta_prime, S, osc).real();
}

// finite-sum form of the E(x, S) bound
inline double perron_partial_sum_bound(const ToyDirichletSeries& Z, double x, double beta_prime,
                                       double S) {
    double acc = 0.0;
    double lq = std::log(static_cast<double>(Z.q));
    for (const auto& [N, a] : Z.coefficients) {
        double ratio = x / std::pow(static_cast<double>(Z.q), static_cast<double>(N));
        double l = std::abs(std::log(x) - static_cast<double>(N) * lq);
        acc += a * std::pow(ratio, beta_prime) * std::min(1.0, 1.0 / (S * l));
    }
    return acc;
}

// Count of integers N with x e^{-1/sqrt(S)} <= q^N <= x e^{1/sqrt(S)}; always
// at most floor(2/(sqrt(S) log q)) + 1.
struct WindowCount {
    long long count;
    long long bound;
};

inline WindowCount window_set_count(double x, double S, long long q) {
    if (x <= 0.0 || S <= 0.0 || q < 2)
        throw std::domain_error("window_set_count: x, S > 0 and q >= 2 required");
    double lq = std::log(static_cast<double>(q));
    double half = 1.0 / std::sqrt(S);
    double lo = (std::log(x) - half) / lq;
    double hi = (std::log(x) + half) / lq;
    long long nlo = static_cast<long long>(std::ceil(lo));
    long long nhi = static_cast<long long>(std::floor(hi));
    nlo = std::max<long long>(nlo, 0); // conductor exponents are non-negative
    long long count = nhi >= nlo ? nhi - nlo + 1 : 0;
    long long bound = static_cast<long long>(std::floor(2.0 / (std::sqrt(S) * lq))) + 1;
    return WindowCount{count, bound};
}

// E(x) = (1/2 pi i) int_{d0 - i inf}^{d0 + i inf} Z(w) x^w / w dw, truncated at
// height S; convergence is checked by comparing against the half-height value.
struct EOfX {
    double value;
    bool converged;
    double doubling_delta;
};

inline EOfX e_of_x(const ToyDirichletSeries& Z, double x, double delta0, double S,
                   double tol = 1e-6) {
    if (!(delta0 > 11.0 / 18.0 && delta0 < 1.0))
        throw std::domain_error("e_of_x: delta0 in (11/18, 1) required");
    if (Z.empty()) return EOfX{0.0, true, 0.0};
    double osc = std::abs(std::log(x));
    double lq = std::log(static_cast<double>(Z.q));
    for (const auto& [N, a] : Z.coefficients) {
        (void)a;
        osc = std::max(osc, std::abs(std::log(x) - static_cast<double>(N) * lq));
    }
    double lx = std::log(x);
    auto f = [&](cplx w) { return Z.value(w) * std::exp(w * lx) / w; };
    double full = contour_integral(f, delta0, S, osc).real();
    double half = contour_integral(f, delta0, S / 2.0, osc).real();
    double delta = std::abs(full - half);
    return EOfX{full, delta <= tol * (1.0 + std::abs(full)), delta};
}

// Least-squares slope of log int_0^x |E|^2 dt against log x over a grid.
struct MeanSquareFit {
    double slope;
    double residual;
    bool degenerate;
};

inline MeanSquareFit mean_square_bound_demo(const ToyDirichletSeries& Z, double delta0,
                                            const std::vector<double>& x_grid,
                                            double S = 400.0) {
    if (Z.empty() || x_grid.size() < 3) return MeanSquareFit{0.0, 0.0, true};

    // cumulative trapezoid of |E|^2 on a refinement of the grid
    std::vector<double> ts, e2;
    double t_lo = x_grid.front() / 4.0;
    double t_hi = x_grid.back();
    int samples = 160;
    for (int i = 0; i <= samples; ++i) {
        double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / samples);
        // nudge off jump points
        double lq = std::log(static_cast<double>(Z.q));
        for (const auto& [N, a] : Z.coefficients) {
            (void)a;
            if (std::abs(std::log(t) - static_cast<double>(N) * lq) < 1e-7) t *= 1.0 + 1e-6;
        }
        ts.push_back(t);
        double e = e_of_x(Z, t, delta0, S).value;
        e2.push_back(e * e);
    }
    std::vector<double> cum(ts.size(), 0.0);
    for (std::size_t i = 1; i < ts.size(); ++i)
        cum[i] = cum[i - 1] + 0.5 * (e2[i] + e2[i - 1]) * (ts[i] - ts[i - 1]);

    // log-log fit at the requested grid points
    std::vector<double> lx, ly;
    for (double x : x_grid) {
        auto it = std::lower_bound(ts.begin(), ts.end(), x);
        std::size_t idx = std::min<std::size_t>(ts.size() - 1, static_cast<std::size_t>(it - ts.begin()));
        if (cum[idx] <= 0.0) continue;
        lx.push_back(std::log(x));
        ly.push_back(std::log(cum[idx]));
    }
    if (lx.size() < 3) return MeanSquareFit{0.0, 0.0, true};
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) return MeanSquareFit{0.0, 0.0, true};
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    double res = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double d = ly[i] - (slope * lx[i] + intercept);
        res += d * d;
    }
    return MeanSquareFit{slope, std::sqrt(res / n), false};
}

} // namespace padiclab

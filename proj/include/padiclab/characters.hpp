#pragma once

// Additive character psi, ramified multiplicative characters of exact
// conductor p^N, shell integrals of psi, and Gauss sums.
//
// psi(x) = exp(2*pi*i * frac_p(x)): trivial on o, nontrivial on p^{-1}o.
//
// Characters are built from explicit generators of (Z/p^N)^x (a primitive
// root for odd p, the pair {-1, 5} for p = 2, N >= 3) and carry their phase
// as an integer numerator over the group exponent, so triviality tests and
// conductor detection are exact integer arithmetic.
//
// All o^x-integrals here use the "average over units" reading of
// meas^x(o^x) = 1; that is the convention under which the Gauss-sum modulus
// comes out as q^{2-N}/(q-1)^2.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "padiclab/local_field.hpp"
#include "padiclab/numeric.hpp"
#include "padiclab/rational.hpp"

namespace padiclab {

// ---------------------------------------------------------------------------
// Additive character
// ---------------------------------------------------------------------------

inline cplx psi_eval(const LocalFieldModel& field, const PadicApprox& x) {
    if (x.is_zero || x.ord >= 0) return cplx(1.0, 0.0);
    int k = -x.ord;
    if (k > field.depth())
        throw depth_exceeded_error("psi_eval: needs unit mod p^" + std::to_string(k) +
                                   " but depth M = " + std::to_string(field.depth()));
    std::uint64_t pk = pow_u64(static_cast<std::uint64_t>(field.p()), k);
    std::uint64_t r = x.unit % pk;
    double frac = static_cast<double>(r) / static_cast<double>(pk);
    return std::polar(1.0, 2.0 * kPi * frac);
}

// int_{o^x} conj(psi)(p^l u) du with meas^x(o^x) = 1:
//   1 for l >= 0,  -1/(q-1) for l = -1,  0 for l <= -2.
struct ShellPsiIntegral {
    Rational exact;
    cplx brute; // average over an explicit shell enumeration, for cross-check
};

inline Rational shell_psi_exact(long long q, int ell) {
    if (ell >= 0) return Rational(1);
    if (ell == -1) return Rational(-1, q - 1);
    return Rational(0);
}

inline cplx shell_psi_brute(const LocalFieldModel& field, int ell) {
    // average of conj(psi(p^ell * u)) over the units at depth max(1, -ell)
    int k = std::max(1, -ell);
    if (k > field.depth())
        throw depth_exceeded_error("shell_psi_brute: depth too small");
    std::uint64_t pk = pow_u64(static_cast<std::uint64_t>(field.p()), k);
    cplx acc(0.0, 0.0);
    std::uint64_t count = 0;
    for (std::uint64_t u = 1; u < pk; ++u) {
        if (u % static_cast<std::uint64_t>(field.p()) == 0) continue;
        acc += std::conj(psi_eval(field, PadicApprox{false, ell, u}));
        ++count;
    }
    return acc / static_cast<double>(count);
}

inline ShellPsiIntegral shell_psi_integral(const LocalFieldModel& field, int ell) {
    return ShellPsiIntegral{shell_psi_exact(field.q(), ell), shell_psi_brute(field, ell)};
}

// ---------------------------------------------------------------------------
// Multiplicative characters of (o/p^N)^x with unramified twist z = chi(p)
// ---------------------------------------------------------------------------

class MultCharacter {
public:
    // trivial character (N = 0) with twist z
    explicit MultCharacter(long long p, cplx z = cplx(1.0, 0.0))
        : p_(p), modulus_exp_(0), modulus_(1), phase_den_(1), phase_(1, 0), z_(z), conductor_(0) {}

    MultCharacter(long long p, int modulus_exp, std::uint64_t modulus, long long phase_den,
                  std::vector<long long> phase, cplx z)
        : p_(p), modulus_exp_(modulus_exp), modulus_(modulus), phase_den_(phase_den),
          phase_(std::move(phase)), z_(z) {
        conductor_ = scan_conductor();
    }

    long long p() const { return p_; }
    int modulus_exp() const { return modulus_exp_; }
    std::uint64_t modulus() const { return modulus_; }
    cplx z() const { return z_; }
    void set_z(cplx z) { z_ = z; }
    int conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_exp_; }
    bool is_trivial_on_units() const { return conductor_ == 0; }

    // chi on a unit residue (any representative; reduced mod p^N internally)
    cplx eval_unit(std::uint64_t u) const {
        long long ph = phase_at(u);
        return std::polar(1.0, 2.0 * kPi * static_cast<double>(ph) / static_cast<double>(phase_den_));
    }

    // integer phase numerator of chi(u) over phase_den(); exact
    long long phase_at(std::uint64_t u) const {
        std::uint64_t r = u % modulus_;
        if (modulus_ == 1) return 0;
        if (r % static_cast<std::uint64_t>(p_) == 0)
            throw std::domain_error("MultCharacter: non-unit argument");
        return phase_[r];
    }

    long long phase_den() const { return phase_den_; }

    // chi(p^n u) = z^n chi(u)
    cplx eval(const PadicApprox& x) const {
        if (x.is_zero) throw std::domain_error("MultCharacter: chi(0) undefined");
        cplx zp(1.0, 0.0);
        for (int i = 0; i < std::abs(x.ord); ++i) zp *= z_;
        if (x.ord < 0) zp = cplx(1.0, 0.0) / zp;
        return zp * eval_unit(x.unit);
    }

    cplx eval_minus_one() const {
        if (modulus_ == 1) return cplx(1.0, 0.0);
        return eval_unit(modulus_ - 1);
    }

    MultCharacter conjugate() const {
        std::vector<long long> ph(phase_.size(), 0);
        for (std::size_t i = 0; i < phase_.size(); ++i)
            ph[i] = (phase_den_ - phase_[i]) % phase_den_;
        return MultCharacter(p_, modulus_exp_, modulus_, phase_den_, std::move(ph), std::conj(z_));
    }

private:
    // smallest N' with chi trivial on 1 + p^{N'} o (exact scan on the phase table)
    int scan_conductor() const {
        for (int np = 0; np <= modulus_exp_; ++np) {
            std::uint64_t step = pow_u64(static_cast<std::uint64_t>(p_), np);
            bool trivial = true;
            for (std::uint64_t u = 1; u < modulus_; u += step) {
                if (u % static_cast<std::uint64_t>(p_) == 0) continue; // u=1+kp^{np} is a unit anyway
                if (phase_[u] != 0) { trivial = false; break; }
            }
            if (trivial) return np;
        }
        return modulus_exp_;
    }

    long long p_;
    int modulus_exp_;
    std::uint64_t modulus_;
    long long phase_den_;             // group exponent; chi(u) = e^{2 pi i phase[u] / phase_den}
    std::vector<long long> phase_;    // indexed by residue mod p^N; meaningful at units
    cplx z_;
    int conductor_;
};

// the op form of conductor detection: fresh triviality scan
inline int conductor(const MultCharacter& chi) {
    for (int np = 0; np <= chi.modulus_exp(); ++np) {
        std::uint64_t step = pow_u64(static_cast<std::uint64_t>(chi.p()), np);
        bool trivial = true;
        for (std::uint64_t u = 1; u < chi.modulus(); u += step) {
            if (u % static_cast<std::uint64_t>(chi.p()) == 0) continue;
            if (chi.phase_at(u) != 0) { trivial = false; break; }
        }
        if (trivial) return np;
    }
    return chi.modulus_exp();
}

// ---------------------------------------------------------------------------
// Character group construction
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// order of u in (Z/m)^x by brute multiplication (moduli here are tiny)
inline std::uint64_t element_order(std::uint64_t u, std::uint64_t m) {
    std::uint64_t x = u % m, k = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * u) % m);
        ++k;
    }
    return k;
}

// primitive root mod p^N for odd p: a primitive root mod p^2 works for all N
inline std::uint64_t primitive_root(long long p, int N) {
    std::uint64_t m = pow_u64(static_cast<std::uint64_t>(p), std::min(N, 2));
    std::uint64_t target = unit_group_order(p, std::min(N, 2));
    for (std::uint64_t g = 2; g < m; ++g) {
        if (g % static_cast<std::uint64_t>(p) == 0) continue;
        if (element_order(g, m) == target) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

} // namespace detail

// Complete, duplicate-free enumeration of the characters of (Z/p^N)^x,
// each carrying unramified twist z (default 1). primitive_only keeps
// conductor == N; the count is then phi(p^N) - phi(p^{N-1}).
inline std::vector<MultCharacter> enumerate_characters(long long p, int N, bool primitive_only,
                                                       cplx z = cplx(1.0, 0.0)) {
    if (!is_prime(p)) throw std::invalid_argument("enumerate_characters: p must be prime");
    if (N < 0) throw std::invalid_argument("enumerate_characters: N >= 0 required");
    std::vector<MultCharacter> out;
    if (N == 0) {
        MultCharacter triv(p, z);
        if (!primitive_only) out.push_back(triv);
        else out.push_back(triv); // conductor 0 == N, the trivial character is primitive at level 0
        return out;
    }

    std::uint64_t modulus = pow_u64(static_cast<std::uint64_t>(p), N);
    std::uint64_t phi = unit_group_order(p, N);

    if (p == 2 && N == 1) {
        // (Z/2)^x is trivial: exactly the one character, never primitive for N=1
        std::vector<long long> ph(modulus, 0);
        MultCharacter chi(p, N, modulus, 1, std::move(ph), z);
        if (!primitive_only || chi.is_primitive()) out.push_back(chi);
        return out;
    }

    if (p != 2) {
        std::uint64_t g = detail::primitive_root(p, N);
        // dlog table: residue -> exponent j with g^j = residue
        std::vector<long long> dlog(modulus, -1);
        std::uint64_t x = 1;
        for (std::uint64_t j = 0; j < phi; ++j) {
            dlog[x] = static_cast<long long>(j);
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * g) % modulus);
        }
        for (std::uint64_t k = 0; k < phi; ++k) {
            std::vector<long long> ph(modulus, 0);
            for (std::uint64_t u = 1; u < modulus; ++u) {
                if (u % static_cast<std::uint64_t>(p) == 0) continue;
                ph[u] = static_cast<long long>((k * static_cast<std::uint64_t>(dlog[u])) % phi);
            }
            MultCharacter chi(p, N, modulus, static_cast<long long>(phi), std::move(ph), z);
            if (!primitive_only || chi.is_primitive()) out.push_back(chi);
        }
        return out;
    }

    if (N == 2) {
        // (Z/4)^x = {1,3} generated by -1
        for (int k = 0; k < 2; ++k) {
            std::vector<long long> ph(modulus, 0);
            ph[3] = k; // chi(3) = (-1)^k as phase k/2
            MultCharacter chi(p, N, modulus, 2, std::move(ph), z);
            if (!primitive_only || chi.is_primitive()) out.push_back(chi);
        }
        return out;
    }

    // p = 2, N >= 3: (Z/2^N)^x = <-1> x <5>, orders 2 and 2^{N-2}
    std::uint64_t half_order = pow_u64(2, N - 2);
    std::vector<long long> sign_part(modulus, -1), five_part(modulus, -1);
    for (std::uint64_t a = 0; a < 2; ++a) {
        std::uint64_t base = (a == 0) ? 1 : modulus - 1;
        std::uint64_t x = base;
        for (std::uint64_t b = 0; b < half_order; ++b) {
            sign_part[x] = static_cast<long long>(a);
            five_part[x] = static_cast<long long>(b);
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * 5) % modulus);
        }
    }
    long long den = static_cast<long long>(2 * half_order); // common phase denominator 2^{N-1}
    for (std::uint64_t k0 = 0; k0 < 2; ++k0) {
        for (std::uint64_t k1 = 0; k1 < half_order; ++k1) {
            std::vector<long long> ph(modulus, 0);
            for (std::uint64_t u = 1; u < modulus; u += 2) {
                // phase = k0*a/2 + k1*b/2^{N-2} over common denominator 2^{N-1}
                long long t = static_cast<long long>(k0) * sign_part[u] * (den / 2) +
                              static_cast<long long>(k1) * five_part[u] * 2;
                ph[u] = ((t % den) + den) % den;
            }
            MultCharacter chi(p, N, modulus, den, std::move(ph), z);
            if (!primitive_only || chi.is_primitive()) out.push_back(chi);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauss sums and shell-wise vanishing
// ---------------------------------------------------------------------------

// g(chi, psi) = int_{o^x} chi(x) conj(psi)(x / p^N) dx, meas^x(o^x) = 1
// (average over units mod p^N). Requires chi primitive of conductor N >= 1.
inline cplx gauss_sum(const MultCharacter& chi) {
    int N = chi.modulus_exp();
    if (N < 1 || chi.conductor() != N)
        throw std::invalid_argument("gauss_sum: character must be primitive of conductor N >= 1");
    std::uint64_t modulus = chi.modulus();
    cplx acc(0.0, 0.0);
    std::uint64_t count = 0;
    for (std::uint64_t u = 1; u < modulus; ++u) {
        if (u % static_cast<std::uint64_t>(chi.p()) == 0) continue;
        double ang = -2.0 * kPi * static_cast<double>(u) / static_cast<double>(modulus);
        acc += chi.eval_unit(u) * std::polar(1.0, ang);
        ++count;
    }
    return acc / static_cast<double>(count);
}

// Gamma(l) = int_{o^x} chi(u) conj(psi)(p^l u) du  (unit average).
// Vanishes unless l = -N (for ramified chi); reduces to the psi shell
// integral for unramified chi. Computed by direct summation at the exact
// modulus p^{max(N, -l, 1)}.
inline cplx gauss_shell_integral(const MultCharacter& chi, int ell) {
    long long p = chi.p();
    int K = std::max({chi.modulus_exp(), -ell, 1});
    std::uint64_t pk = pow_u64(static_cast<std::uint64_t>(p), K);
    std::uint64_t pell = (ell < 0) ? pow_u64(static_cast<std::uint64_t>(p), -ell) : 1;
    cplx acc(0.0, 0.0);
    std::uint64_t count = 0;
    for (std::uint64_t u = 1; u < pk; ++u) {
        if (u % static_cast<std::uint64_t>(p) == 0) continue;
        cplx val = chi.eval_unit(u);
        if (ell < 0) {
            double ang = -2.0 * kPi * static_cast<double>(u % pell) / static_cast<double>(pell);
            val *= std::polar(1.0, ang);
        }
        acc += val;
        ++count;
    }
    return acc / static_cast<double>(count);
}

// Inner Gauss integral int_{o^x} conj(psi)(x y eta) chi(y eta) d eta for
// x, y on fixed shells: vanishes unless ord(xy) = -N, where its modulus
// equals |g(chi, psi)|.
inline cplx shellwise_vanishing(const MultCharacter& chi, int x_ord, int y_ord) {
    if (chi.conductor() < 1)
        throw std::invalid_argument("shellwise_vanishing: ramified character required");
    cplx ztw(1.0, 0.0);
    for (int i = 0; i < std::abs(y_ord); ++i) ztw *= chi.z();
    if (y_ord < 0) ztw = cplx(1.0, 0.0) / ztw;
    return ztw * gauss_shell_integral(chi, x_ord + y_ord);
}

} // namespace padiclab

#pragma once

// Finite-precision model of Q_p: elements are known modulo p^M relative to
// their leading shell, x = p^ord * u with u a unit residue mod p^M.
//
// Two additive Haar normalizations coexist in the source material, so the
// convention is an explicit field attribute:
//   UNIT_ADDITIVE : meas_add(o) = 1,        shell {ord=n} has measure q^{-n}(1-1/q)
//   PAPER_313     : meas_add(o) = q/(q-1),  shell {ord=n} has measure q^{-n}
// The multiplicative measure gives every shell {ord=n} measure 1 in both.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "padiclab/numeric.hpp"
#include "padiclab/rational.hpp"

namespace padiclab {

enum class MeasureConvention {
    UnitAdditive, // meas_add(o) = 1
    Paper313      // meas_add(o) = q/(q-1)
};

enum class MeasureMode { Additive, Multiplicative };

inline const char* convention_name(MeasureConvention c) {
    return c == MeasureConvention::UnitAdditive ? "unit-additive" : "paper-3.1.3";
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// phi(p^k) for prime p
inline std::uint64_t unit_group_order(long long p, int k) {
    if (k <= 0) return 1;
    return pow_u64(static_cast<std::uint64_t>(p), k - 1) * static_cast<std::uint64_t>(p - 1);
}

struct PadicApprox {
    bool is_zero = true;
    int ord = 0;            // valuation; meaningful only when !is_zero
    std::uint64_t unit = 0; // unit residue mod p^M
};

class LocalFieldModel {
public:
    LocalFieldModel(long long p, int working_depth,
                    MeasureConvention convention = MeasureConvention::UnitAdditive)
        : p_(p), depth_(working_depth), convention_(convention) {
        if (!is_prime(p)) throw std::invalid_argument("LocalFieldModel: p must be prime");
        if (working_depth < 1) throw std::invalid_argument("LocalFieldModel: depth M >= 1 required");
        modulus_ = pow_u64(static_cast<std::uint64_t>(p), depth_);
    }

    long long p() const { return p_; }
    long long q() const { return p_; } // residue cardinality; q = p over Q_p
    int depth() const { return depth_; }
    std::uint64_t unit_modulus() const { return modulus_; }
    MeasureConvention convention() const { return convention_; }

    // Haar measure of the shell {x : ord(x) = n}
    Rational shell_measure(int n, MeasureMode mode) const {
        return shell_measure(n, mode, convention_);
    }

    Rational shell_measure(int n, MeasureMode mode, MeasureConvention conv) const {
        if (mode == MeasureMode::Multiplicative) return Rational(1);
        Rational qn = Rational::int_pow(p_, -n);
        if (conv == MeasureConvention::Paper313) return qn;
        return qn * Rational(p_ - 1, p_);
    }

    // meas_add({x : ord(x) >= n}) in the field's convention
    Rational ball_measure(int n) const {
        Rational qn = Rational::int_pow(p_, -n);
        if (convention_ == MeasureConvention::Paper313) return qn * Rational(p_, p_ - 1);
        return qn;
    }

    // {p^n u : u in (Z/p^M)^x}, each carrying weight shell_measure(n)/phi(p^M)
    std::vector<PadicApprox> enumerate_shell(int n) const {
        std::vector<PadicApprox> out;
        out.reserve(unit_group_order(p_, depth_));
        for (std::uint64_t u = 1; u < modulus_; ++u) {
            if (u % static_cast<std::uint64_t>(p_) == 0) continue;
            out.push_back(PadicApprox{false, n, u});
        }
        if (modulus_ == 1) out.push_back(PadicApprox{false, n, 0}); // degenerate M=0 never occurs (M>=1)
        return out;
    }

    PadicApprox zero() const { return PadicApprox{}; }

    PadicApprox from_integer(long long v) const {
        if (v == 0) return zero();
        bool neg = v < 0;
        unsigned long long a = neg ? static_cast<unsigned long long>(-(v + 1)) + 1ull
                                   : static_cast<unsigned long long>(v);
        int ord = 0;
        while (a % static_cast<unsigned long long>(p_) == 0) {
            a /= static_cast<unsigned long long>(p_);
            ++ord;
        }
        std::uint64_t u = a % modulus_;
        if (neg) u = (modulus_ - u) % modulus_;
        return PadicApprox{false, ord, u};
    }

    PadicApprox from_rational(long long num, long long den) const {
        if (den == 0) throw std::domain_error("from_rational: zero denominator");
        if (num == 0) return zero();
        PadicApprox n = from_integer(num);
        PadicApprox d = from_integer(den);
        return PadicApprox{false, n.ord - d.ord,
                           mulmod(n.unit, unit_inverse(d.unit))};
    }

    PadicApprox mul(const PadicApprox& a, const PadicApprox& b) const {
        if (a.is_zero || b.is_zero) return zero();
        return PadicApprox{false, a.ord + b.ord, mulmod(a.unit, b.unit)};
    }

    // |x| = q^{-ord}
    Rational norm(const PadicApprox& x) const {
        if (x.is_zero) throw std::domain_error("norm: zero input");
        return Rational::int_pow(p_, -x.ord);
    }

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
        return (static_cast<unsigned __int128>(a) * b) % modulus_;
    }

    std::uint64_t unit_inverse(std::uint64_t a) const {
        // extended Euclid mod p^M
        long long m = static_cast<long long>(modulus_);
        long long r0 = m, r1 = static_cast<long long>(a % modulus_);
        long long t0 = 0, t1 = 1;
        while (r1 != 0) {
            long long qq = r0 / r1;
            long long r2 = r0 - qq * r1;
            long long t2 = t0 - qq * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        if (r0 != 1) throw std::domain_error("unit_inverse: not a unit");
        return static_cast<std::uint64_t>((t0 % m + m) % m);
    }

private:
    long long p_;
    int depth_;
    MeasureConvention convention_;
    std::uint64_t modulus_; // p^M
};

} // namespace padiclab

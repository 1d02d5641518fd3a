#pragma once

// Shared numeric helpers: complex parsing/printing, closed-form series tails,
// pole-proximity guards, and the error taxonomy used across the library.

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <sstream>
#include <vector>

namespace padiclab {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi_v<double>;

// Denominator factors closer to zero than this are treated as poles.
inline constexpr double kPoleGuard = 1e-6;

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};
struct divergent_region_error : std::domain_error {
    explicit divergent_region_error(const std::string& what) : std::domain_error(what) {}
};
struct depth_exceeded_error : std::domain_error {
    explicit depth_exceeded_error(const std::string& what) : std::domain_error(what) {}
};
struct budget_exceeded_error : std::runtime_error {
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

inline cplx guarded_inverse(cplx denom, const char* where) {
    if (std::abs(denom) < kPoleGuard) throw pole_error(std::string(where) + ": denominator factor within pole guard");
    return 1.0 / denom;
}

// q^e for complex e, via exp(e log q)
inline cplx q_pow(double q, cplx e) { return std::exp(e * std::log(q)); }

// sum_{n>L} (n+1) rho^n, 0 <= rho < 1
inline double tail_linear(double rho, long long L) {
    if (rho < 0 || rho >= 1) throw divergent_region_error("tail_linear: rho outside [0,1)");
    if (rho == 0) return 0.0;
    double t = std::pow(rho, static_cast<double>(L + 1));
    double om = 1.0 - rho;
    return t * ((L + 2) / om + rho / (om * om));
}

// sum_{n>L} (n+1)^2 rho^n, 0 <= rho < 1
inline double tail_quadratic(double rho, long long L) {
    if (rho < 0 || rho >= 1) throw divergent_region_error("tail_quadratic: rho outside [0,1)");
    if (rho == 0) return 0.0;
    double t = std::pow(rho, static_cast<double>(L + 1));
    double om = 1.0 - rho;
    double a = static_cast<double>(L + 2);
    // sum_{j>=0} (a+j)^2 rho^j = a^2/(1-rho) + 2a rho/(1-rho)^2 + rho(1+rho)/(1-rho)^3
    return t * (a * a / om + 2.0 * a * rho / (om * om) + rho * (1.0 + rho) / (om * om * om));
}

// sum_{n>L} rho^n
inline double tail_geometric(double rho, long long L) {
    if (rho < 0 || rho >= 1) throw divergent_region_error("tail_geometric: rho outside [0,1)");
    return std::pow(rho, static_cast<double>(L + 1)) / (1.0 - rho);
}

// Deterministic pairwise reduction; used where the accumulation order is part
// of the reproducibility contract.
inline double pairwise_sum(std::vector<double> v) {
    if (v.empty()) return 0.0;
    while (v.size() > 1) {
        std::size_t half = (v.size() + 1) / 2;
        for (std::size_t i = 0; i + half < v.size(); ++i) v[i] += v[i + half];
        v.resize(half);
    }
    return v[0];
}

inline cplx pairwise_sum(std::vector<cplx> v) {
    if (v.empty()) return cplx(0.0, 0.0);
    while (v.size() > 1) {
        std::size_t half = (v.size() + 1) / 2;
        for (std::size_t i = 0; i + half < v.size(); ++i) v[i] += v[i + half];
        v.resize(half);
    }
    return v[0];
}

inline std::string format_double(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}

// "re,im" — the CLI value syntax for complex numbers
inline std::string format_complex(cplx z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

// Parse "a+bi" style complex literals: "1", "-2.5", "i", "-i", "1+2i",
// "0.5-1e-3i". Used for --satake and friends.
inline cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_complex: empty");
    if (s == "i") return cplx(0, 1);
    if (s == "-i") return cplx(0, -1);
    if (s == "+i") return cplx(0, 1);

    // split at the last top-level +/- that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto parse_real = [](const std::string& t) {
        std::size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("parse_complex: trailing junk in '" + t + "'");
        return v;
    };
    if (s.back() == 'i' || s.back() == 'I') {
        std::string imag_part, real_part;
        if (split == std::string::npos) {
            imag_part = s.substr(0, s.size() - 1);
        } else {
            real_part = s.substr(0, split);
            imag_part = s.substr(split, s.size() - split - 1);
        }
        if (imag_part.empty() || imag_part == "+") imag_part = "1";
        else if (imag_part == "-") imag_part = "-1";
        double re = real_part.empty() ? 0.0 : parse_real(real_part);
        return cplx(re, parse_real(imag_part));
    }
    return cplx(parse_real(s), 0.0);
}

// Comma-separated complex pair, e.g. "i,-i"
inline std::pair<cplx, cplx> parse_complex_pair(const std::string& text) {
    // the separator is the comma outside of any sign context: complex entries
    // themselves contain no commas
    std::size_t pos = text.find(',');
    if (pos == std::string::npos) throw std::invalid_argument("expected 'a+bi,c+di' pair: " + text);
    return {parse_complex(text.substr(0, pos)), parse_complex(text.substr(pos + 1))};
}

} // namespace padiclab

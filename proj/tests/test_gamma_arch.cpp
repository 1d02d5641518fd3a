#include <catch_amalgamated.hpp>

#include <random>

#include "padiclab/archimedean.hpp"
#include "padiclab/gamma.hpp"

using namespace padiclab;

TEST_CASE("log-gamma: classical values and poles") {
    CHECK(std::abs(gamma_fn(cplx(0.5, 0)) - cplx(std::sqrt(kPi), 0)) < 1e-12);
    CHECK(std::abs(gamma_fn(cplx(1, 0)) - cplx(1, 0)) < 1e-13);
    CHECK(std::abs(gamma_fn(cplx(5, 0)) - cplx(24, 0)) < 1e-11);
    CHECK(std::abs(gamma_fn(cplx(1.5, 0)) - cplx(std::sqrt(kPi) / 2.0, 0)) < 1e-13);
    CHECK_THROWS_AS(log_gamma(cplx(0, 0)), pole_error);
    CHECK_THROWS_AS(log_gamma(cplx(-3, 0)), pole_error);
}

TEST_CASE("log-gamma recurrence, reflection and duplication on the working strip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> re(0.1, 30.0), im(-50.0, 50.0);
    for (int i = 0; i < 120; ++i) {
        cplx z(re(rng), im(rng));
        cplx lhs = gamma_fn(z + 1.0), rhs = z * gamma_fn(z);
        INFO("z=" << z.real() << "+" << z.imag() << "i");
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));

        cplx dl = gamma_fn(z) * gamma_fn(z + 0.5);
        cplx dr = std::exp((1.0 - 2.0 * z) * std::log(2.0)) * std::sqrt(kPi) * gamma_fn(2.0 * z);
        CHECK(std::abs(dl - dr) < 1e-10 * std::abs(dr));
    }
    // reflection region sanity: Gamma(0.25) Gamma(0.75) = pi / sin(pi/4)
    cplx refl = gamma_fn(cplx(0.25, 0)) * gamma_fn(cplx(0.75, 0));
    CHECK(std::abs(refl - cplx(kPi / std::sin(kPi / 4.0), 0)) < 1e-11);
}

TEST_CASE("A-ratio: symmetry is exact, worked value 8/3") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.3, 3.0), mu(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
        cplx sp(u(rng), 0.1 * u(rng)), w(u(rng) + 1.0, 0.0);
        cplx mu1(mu(rng), 0.2 * mu(rng)), mu2(mu(rng), 0.2 * mu(rng));
        cplx a = gamma_ratio_A(sp, w, mu1, mu2);
        CHECK(gamma_ratio_A(sp, w, -mu1, mu2) == a); // same factor multiset, bitwise
        CHECK(gamma_ratio_A(sp, w, mu1, -mu2) == a);
    }
    cplx worked = gamma_ratio_A(cplx(0, 0), cplx(2, 0), cplx(0, 0), cplx(0, 0));
    CHECK(std::abs(worked - cplx(8.0 / 3.0, 0)) < 1e-10 * (8.0 / 3.0));

    // mu1 = mu2 = 0 collapse: 2^{4w-4s'-4} Gamma(w+s')^4 / Gamma(2w+2s')
    cplx sp(0.4, 0.0), w(1.7, 0.0);
    cplx collapse = std::pow(2.0, 4 * 1.7 - 4 * 0.4 - 4) * std::pow(gamma_fn(w + sp), 4) /
                    gamma_fn(2.0 * (w + sp));
    CHECK(std::abs(gamma_ratio_A(sp, w, cplx(0, 0), cplx(0, 0)) - collapse) <
          1e-11 * std::abs(collapse));
}

TEST_CASE("G-ratio: worked value pi^2/2 and the s <-> 1-s exchange at s'=0") {
    cplx worked = gamma_ratio_G(PlaceKind::Complex, cplx(0.5, 0), cplx(0, 0), cplx(2, 0));
    CHECK(std::abs(worked - cplx(kPi * kPi / 2.0, 0)) < 1e-10 * std::abs(worked));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> su(0.15, 0.85), wu(1.2, 4.0);
    for (int i = 0; i < 25; ++i) {
        cplx s(su(rng), 0.4 * su(rng)), w(wu(rng), 0.0);
        cplx lhs = gamma_ratio_G(PlaceKind::Real, s, cplx(0, 0), w);
        cplx rhs = gamma_ratio_G(PlaceKind::Real, 1.0 - s, cplx(0, 0), w);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
    }

    // gamma pole when s' + s hits 0
    CHECK_THROWS_AS(gamma_ratio_G(PlaceKind::Complex, cplx(0.3, 0), cplx(-0.3, 0), cplx(2, 0)),
                    pole_error);
}

TEST_CASE("analytic conductor") {
    CHECK(analytic_conductor({}, 0.0) == 1.0);

    ArchPlaceParams rp;
    rp.kind = PlaceKind::Real;
    rp.t_v = 3.0;
    CHECK(analytic_conductor({rp}, 0.0) == 4.0);

    ArchPlaceParams cp;
    cp.kind = PlaceKind::Complex;
    cp.ell_v = 2;
    cp.t_v = 1.0;
    CHECK(analytic_conductor({cp}, 0.0) == 9.0);

    CHECK(analytic_conductor({rp, cp}, 0.0) == 36.0);
    CHECK(analytic_conductor({rp}, 1.0) == 5.0); // t enters through t + t_v
}

TEST_CASE("archimedean kernel leading terms") {
    ArchPlaceParams place;
    place.kind = PlaceKind::Complex;
    place.w = cplx(1.6, 0.0);
    place.t = 0.7;
    place.t_v = 0.4;
    place.ell_v = 3;
    cplx s_prime(0.3, 0.0);

    cplx lead = k_inf_leading(place, s_prime);
    cplx a = gamma_ratio_A(s_prime, place.w, place.mu1, place.mu2);
    double qf = conductor_place_factor(place);
    cplx expected = std::exp((1.0 - 2.0 * s_prime) * std::log(kPi)) * a *
                    std::exp(-place.w * std::log(qf));
    CHECK(std::abs(lead - expected) < 1e-13 * std::abs(expected));

    // doubling u = |t+t_v| at a real place rescales by ((1+2u)/(1+u))^{-w}
    GammaRatioSpec b;
    b.numerator = {AffineArg{1.0, 1.0, 0.0}, AffineArg{1.0, 1.0, 0.5}};
    b.denominator = {AffineArg{2.0, 2.0, 0.0}};
    ArchPlaceParams real1;
    real1.kind = PlaceKind::Real;
    real1.w = cplx(1.4, 0.0);
    real1.t = 0.0;
    real1.t_v = 0.9;
    ArchPlaceParams real2 = real1;
    real2.t_v = 1.8;
    cplx r1 = k_inf_leading(real1, s_prime, &b);
    cplx r2 = k_inf_leading(real2, s_prime, &b);
    double u = 0.9;
    cplx expected_ratio = std::exp(-real1.w * std::log((1.0 + 2.0 * u) / (1.0 + u)));
    CHECK(std::abs(r2 / r1 - expected_ratio) < 1e-12);

    // real place requires the user-supplied B list
    CHECK_THROWS_AS(k_inf_leading(real1, s_prime), std::invalid_argument);

    // complex place, ell_v -> 2 ell_v tends to 4^{-w} for large ell_v
    ArchPlaceParams big = place;
    big.t = 0.0;
    big.t_v = 0.0;
    big.ell_v = 4000;
    ArchPlaceParams big2 = big;
    big2.ell_v = 8000;
    cplx ratio = k_inf_leading(big2, s_prime) / k_inf_leading(big, s_prime);
    cplx four_pow = std::exp(-big.w * std::log(4.0));
    CHECK(std::abs(ratio - four_pow) < 1e-5);
}

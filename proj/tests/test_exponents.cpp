#include <catch_amalgamated.hpp>

#include <random>

#include "padiclab/exponents.hpp"

using namespace padiclab;

TEST_CASE("convexity exponent d/2") {
    CHECK(convexity_exponent(1) == Rational(1, 2));
    CHECK(convexity_exponent(2) == Rational(1));
    CHECK(convexity_exponent(3) == Rational(3, 2));
    CHECK_THROWS_AS(convexity_exponent(0), std::domain_error);
}

TEST_CASE("theta: exact values, boundary handling, monotonicity") {
    CHECK(theta(Rational(11, 18)) == Rational(20, 27));
    CHECK(theta(Rational(1)) == Rational(1));
    CHECK(theta(Rational(7, 10)) == Rational(4, 5));
    CHECK_THROWS_AS(theta(Rational(1, 2)), std::domain_error);
    CHECK_THROWS_AS(theta(Rational(11, 10)), std::domain_error);

    CHECK_FALSE(delta0_admissible(Rational(11, 18))); // boundary is flagged
    CHECK(delta0_admissible(Rational(7, 10)));

    Rational prev = theta(Rational(11, 18));
    for (int k = 1; k <= 50; ++k) {
        Rational d0 = Rational(11, 18) + Rational(k, 51) * (Rational(1) - Rational(11, 18));
        Rational t = theta(d0);
        CHECK(prev < t);
        CHECK(Rational(20, 27) <= t);
        CHECK(t <= Rational(1));
        prev = t;
    }
}

TEST_CASE("subconvex exponent and the exact gap") {
    CHECK(subconvex_exponent(1, Rational(7, 10)) == Rational(2, 5));
    CHECK(subconvex_exponent(1, Rational(7, 10)) < convexity_exponent(1));
    // d = 2, delta0 -> 1: exponent tends to 1 (no saving at the boundary)
    CHECK(subconvex_exponent(2, Rational(1)) == Rational(1));

    for (int d : {1, 2, 3, 5}) {
        Rational prev_saving(1);
        for (int k = 1; k <= 50; ++k) {
            Rational d0 = Rational(11, 18) + Rational(k, 51) * (Rational(1) - Rational(11, 18));
            Rational sub = subconvex_exponent(d, d0);
            Rational conv = convexity_exponent(d);
            CHECK(sub < conv);
            CHECK(conv - sub == (Rational(1) - theta(d0)) / Rational(2));
            CHECK(conv - sub == subconvex_savings(d0));
            // savings decrease in delta0
            CHECK(subconvex_savings(d0) < prev_saving);
            prev_saving = subconvex_savings(d0);
        }
    }
}

TEST_CASE("beta prime choice") {
    CHECK(beta_prime_choice(2, Rational(1, 10)) == Rational(21, 20));
    CHECK(beta_prime_choice(3, Rational(2, 10)) == Rational(21, 20));
    CHECK(beta_prime_choice(2, Rational(1, 1000000000)) ==
          Rational(1) + Rational(1, 2000000000));
    CHECK_THROWS_AS(beta_prime_choice(1, Rational(1, 10)), std::domain_error);
    CHECK_THROWS_AS(beta_prime_choice(2, Rational(0)), std::domain_error);
    CHECK(Rational(1) < beta_prime_choice(5, Rational(1, 7)));
}

TEST_CASE("optimal H balances (1/H) x^{2 delta0 + 1} = H^2") {
    CHECK(optimal_H(1.0, Rational(7, 10)) == 1.0);
    CHECK(std::abs(optimal_H(1e6, Rational(7, 10)) - std::pow(10.0, 4.8)) < 1e-8 * std::pow(10.0, 4.8));

    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> xu(0.0, 8.0), du(0.62, 0.99);
    for (int i = 0; i < 50; ++i) {
        double x = std::pow(10.0, xu(rng));
        Rational d0 = Rational(static_cast<long long>(du(rng) * 1e6), 1000000);
        if (!delta0_admissible(d0)) continue;
        double H = optimal_H(x, d0);
        double lhs = std::pow(x, 2.0 * d0.to_double() + 1.0) / H;
        double rhs = H * H;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
    CHECK_THROWS_AS(optimal_H(-2.0, Rational(7, 10)), std::domain_error);
}

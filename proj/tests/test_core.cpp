#include <catch_amalgamated.hpp>

#include "padiclab/local_field.hpp"
#include "padiclab/characters.hpp"
#include "padiclab/rational.hpp"

using namespace padiclab;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 2) - Rational(1, 2)) == Rational(1));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 2) / Rational(1, 6)) == Rational(3));
    CHECK(Rational::int_pow(3, -2) == Rational(1, 9));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(11, 18) < Rational(7, 10));
}

TEST_CASE("shell measures under both Haar conventions") {
    LocalFieldModel f3u(3, 4, MeasureConvention::UnitAdditive);
    LocalFieldModel f3p(3, 4, MeasureConvention::Paper313);

    // multiplicative shells always carry measure 1
    CHECK(f3u.shell_measure(0, MeasureMode::Multiplicative) == Rational(1));
    CHECK(f3p.shell_measure(5, MeasureMode::Multiplicative) == Rational(1));
    CHECK(f3u.shell_measure(-2, MeasureMode::Multiplicative) == Rational(1));

    // paper-3.1.3: meas(o^x) = mu(o) - mu(m) = 3/2 - 1/2 = 1
    CHECK(f3p.shell_measure(0, MeasureMode::Additive) == Rational(1));
    CHECK(f3p.ball_measure(0) == Rational(3, 2));
    CHECK(f3p.ball_measure(1) == Rational(1, 2));

    // unit-additive: shell {ord=1} has measure (1/3)(1 - 1/3) = 2/9
    CHECK(f3u.shell_measure(1, MeasureMode::Additive) == Rational(2, 9));
    CHECK(f3u.ball_measure(0) == Rational(1));
}

TEST_CASE("additive shell measures telescope to ball measures") {
    for (long long p : {2LL, 5LL}) {
        for (auto conv : {MeasureConvention::UnitAdditive, MeasureConvention::Paper313}) {
            LocalFieldModel f(p, 3, conv);
            // sum over n in [-L, L] equals meas{q^{-L} <= |x| <= q^L} = ball(-L) - ball(L+1)
            int L = 6;
            Rational acc(0);
            for (int n = -L; n <= L; ++n) acc += f.shell_measure(n, MeasureMode::Additive);
            CHECK(acc == f.ball_measure(-L) - f.ball_measure(L + 1));
            // unit-additive: partial sum over n >= 0 is 1 - q^{-(L+1)} exactly
            if (conv == MeasureConvention::UnitAdditive) {
                Rational head(0);
                for (int n = 0; n <= L; ++n) head += f.shell_measure(n, MeasureMode::Additive);
                CHECK(head + Rational::int_pow(p, -(L + 1)) == Rational(1));
            }
        }
    }
}

TEST_CASE("shell enumeration") {
    LocalFieldModel f2(2, 2);
    auto s = f2.enumerate_shell(0);
    REQUIRE(s.size() == 2); // units mod 4: {1, 3}
    CHECK(s[0].unit == 1);
    CHECK(s[1].unit == 3);

    LocalFieldModel f3(3, 1);
    auto t = f3.enumerate_shell(-1); // {1/3, 2/3}
    REQUIRE(t.size() == 2);
    CHECK(t[0].ord == -1);

    LocalFieldModel f5(5, 2);
    CHECK(f5.enumerate_shell(0).size() == 20); // phi(25)
}

TEST_CASE("p-adic approximations and norms") {
    LocalFieldModel f5(5, 3);
    auto x = f5.from_integer(50); // 2 * 5^2
    CHECK(x.ord == 2);
    CHECK(f5.norm(x) == Rational(1, 25));

    LocalFieldModel f2(2, 3);
    CHECK(f2.norm(f2.from_integer(1)) == Rational(1));
    LocalFieldModel f3(3, 3);
    CHECK(f3.norm(f3.from_rational(1, 9)) == Rational(9));
    CHECK_THROWS_AS(f3.norm(f3.zero()), std::domain_error);

    // multiplicativity |xy| = |x||y|
    auto a = f3.from_rational(2, 3), b = f3.from_integer(6);
    CHECK(f3.norm(f3.mul(a, b)) == f3.norm(a) * f3.norm(b));
}

TEST_CASE("additive character psi") {
    LocalFieldModel f3(3, 4);
    CHECK(std::abs(psi_eval(f3, f3.from_integer(1)) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(psi_eval(f3, f3.from_rational(1, 3)) - std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-15);

    LocalFieldModel f2(2, 4);
    CHECK(std::abs(psi_eval(f2, f2.from_rational(3, 4)) - cplx(0, -1)) < 1e-14);

    // psi(x + y) = psi(x) psi(y): test via 1/3 + 2/3 = 1 -> product of thirds is 1
    cplx prod = psi_eval(f3, f3.from_rational(1, 3)) * psi_eval(f3, f3.from_rational(2, 3));
    CHECK(std::abs(prod - cplx(1, 0)) < 1e-14);

    // nontrivial on p^{-1} o
    bool nontrivial = false;
    for (const auto& x : f3.enumerate_shell(-1))
        nontrivial = nontrivial || std::abs(psi_eval(f3, x) - cplx(1, 0)) > 0.1;
    CHECK(nontrivial);

    CHECK_THROWS_AS(psi_eval(f3, f3.from_rational(1, 3 * 3 * 3 * 3 * 3)), depth_exceeded_error);
}

TEST_CASE("psi shell integrals: three cases, brute vs exact") {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        LocalFieldModel f(p, 6);
        for (int ell = -4; ell <= 2; ++ell) {
            auto v = shell_psi_integral(f, ell);
            INFO("p=" << p << " ell=" << ell);
            CHECK(std::abs(v.brute - cplx(v.exact.to_double(), 0.0)) < 1e-12);
        }
        CHECK(shell_psi_exact(p, 0) == Rational(1));
        CHECK(shell_psi_exact(p, -1) == Rational(-1, p - 1));
        CHECK(shell_psi_exact(p, -2) == Rational(0));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "zetalab/identities.hpp"
#include "zetalab/specfun.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = 3.14159265358979323846;
const TruncationPolicy kPolicy;
const QuadraturePolicy kQPolicy;
} // namespace

TEST_CASE("parity class dispatch") {
    CHECK(classify({2, 0, 1.0}) == ParityClass::EvenEven);
    CHECK(classify({2, 3, 1.0}) == ParityClass::EvenOdd);
    CHECK(classify({2, -1, 1.0}) == ParityClass::EvenNegOne);
    CHECK(classify({3, 1, 1.0}) == ParityClass::OddOdd);
    CHECK(classify({1, -3, 1.0}) == ParityClass::OddOdd);
    CHECK(classify({3, -1, 1.0}) == ParityClass::OddNegOne);
    CHECK(classify({2, -4, 1.0}) == ParityClass::EvenEven);
    CHECK_THROWS_AS(classify({3, 2, 1.0}), DomainError);
    CHECK_THROWS_AS(classify({1, 0, 1.0}), DomainError);
    CHECK_THROWS_AS(classify({2, 0, -1.0}), DomainError);
    CHECK_THROWS_AS(classify({0, 0, 1.0}), DomainError);
}

TEST_CASE("x_of_j modulus and angle") {
    const IdentityCase c{3, 1, 2.0};
    const PolarArg z = x_of_j(c, 5, 2);
    CHECK(z.modulus ==
          doctest::Approx(std::pow(2.0 * kPi, 4) * 5.0 / (27.0 * 2.0)).epsilon(1e-15));
    CHECK(z.angle == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK_THROWS_AS(x_of_j(c, 1, 3), DomainError);  // |j| > k-1
    CHECK_THROWS_AS(x_of_j(c, 1, 1), DomainError);  // wrong parity
    CHECK_NOTHROW(x_of_j(c, 1, -2));
}

TEST_CASE("residue terms at reference points") {
    // r = 0: -zeta(0)/2 = 1/4;  r = 1: -zeta(-1)/2 = 1/24
    CHECK(residue_0({2, 0, 1.0}) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(residue_0({2, 1, 1.0}) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    CHECK_THROWS_AS(residue_0({2, -1, 1.0}), DomainError);

    // k=2, r=0: (1/2) Gamma(1/2) zeta(1/2) x^{-1/2}
    const double x = 1.7;
    CHECK(residue_1_over_k({2, 0, x}) ==
          doctest::Approx(0.5 * std::sqrt(kPi) * zeta_real(0.5) / std::sqrt(x))
              .epsilon(1e-13));

    // k=2, r=0: zeta(2)/x;  k=2, r=1: zeta(4)/x^2
    CHECK(residue_1_plus_r({2, 0, x}) ==
          doctest::Approx(kPi * kPi / (6.0 * x)).epsilon(1e-13));
    CHECK(residue_1_plus_r({2, 1, x}) ==
          doctest::Approx(std::pow(kPi, 4) / (90.0 * x * x)).epsilon(1e-13));
    // k=1, r=-3: zeta'(-2) x^2 / 2 = -zeta(3) x^2 / (8 pi^2)
    CHECK(residue_1_plus_r({1, -3, x}) ==
          doctest::Approx(-zeta_real(3.0) * x * x / (8.0 * kPi * kPi))
              .epsilon(1e-13));

    // r = -1 log residue
    CHECK(residue_log({2, -1, x}) ==
          doctest::Approx(0.5 * std::log(x / (4.0 * kPi * kPi))).epsilon(1e-14));
    CHECK_THROWS_AS(residue_log({2, 0, x}), DomainError);

    // Bernoulli residue sum: k=1, r=-3, x=2pi gives pi^3/30
    CHECK(residue_R_odd({1, -3, 2.0 * kPi}) ==
          doctest::Approx(std::pow(kPi, 3) / 30.0).epsilon(1e-13));
    CHECK(residue_R_odd({3, 1, 1.0}) == 0.0);
}

TEST_CASE("two-real-variable trig lemmas at random points") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> da(0.05, 4.0), du(-1.2, 1.2),
        dv(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const double a = da(rng), u = du(rng), v = dv(rng);
        const std::complex<double> den =
            std::exp(a * std::exp(std::complex<double>(0, -u))) - 1.0;
        const std::complex<double> num = std::exp(std::complex<double>(0, u * v));
        const double denom =
            std::cosh(a * std::cos(u)) - std::cos(a * std::sin(u));
        // 2 Re( e^{iuv} / (exp(a e^{-iu}) - 1) )
        const double lhs1 = 2.0 * (num / den).real();
        const double rhs1 = (std::cos(a * std::sin(u) + u * v) -
                             std::exp(-a * std::cos(u)) * std::cos(u * v)) /
                            denom;
        CHECK(std::abs(lhs1 - rhs1) < 1e-12 * std::max(1.0, std::abs(rhs1)));
        // 2 Re( i e^{iuv} / (exp(a e^{-iu}) - 1) )
        const double lhs2 =
            2.0 * (std::complex<double>(0, 1) * num / den).real();
        const double rhs2 = (-std::sin(u * v + a * std::sin(u)) +
                             std::exp(-a * std::cos(u)) * std::sin(u * v)) /
                            denom;
        CHECK(std::abs(lhs2 - rhs2) < 1e-12 * std::max(1.0, std::abs(rhs2)));
    }
}

TEST_CASE("Dirichlet-kernel expansion of sin(ks)/sin(s) and variants") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> re(-1.0, 1.0), im(-1.0, 1.0);
    auto double_primed = [](int k, auto f) {
        std::complex<double> acc(0, 0);
        for (int j = -(k - 1); j <= k - 1; j += 2)
            acc += f(j);
        return acc;
    };
    const std::complex<double> I(0, 1);
    for (int i = 0; i < 200; ++i) {
        const std::complex<double> s(re(rng), im(rng));
        for (int k : {1, 2, 3, 4, 5}) {
            const auto lhs = std::sin(double(k) * s) / std::sin(s);
            const auto rhs = double_primed(
                k, [&](int j) { return std::exp(I * double(j) * s); });
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
        for (int k : {2, 4}) {
            const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
            const auto lhs = std::sin(double(k) * s) / std::cos(s);
            const auto rhs =
                sign * double_primed(k, [&](int j) {
                    return std::pow(I, j) * std::exp(I * double(j) * s);
                });
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
        for (int k : {1, 3, 5}) {
            const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            const auto lhs = std::cos(double(k) * s) / std::cos(s);
            const auto rhs =
                sign * double_primed(k, [&](int j) {
                    return std::pow(I, j) * std::exp(-I * double(j) * s);
                });
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("G-series imaginary accumulation stays below 1e-12 relative") {
    for (const IdentityCase c :
         {IdentityCase{2, 0, 1.0}, IdentityCase{2, 1, 1.0},
          IdentityCase{3, 1, 1.0}, IdentityCase{4, 0, 2.0}}) {
        double leak = 0.0;
        rhs_g_series(c, kPolicy, kQPolicy, &leak);
        CHECK(leak <= 1e-12);
    }
    for (const IdentityCase c : {IdentityCase{2, -1, 1.0}, IdentityCase{3, -1, 2.0}}) {
        double leak = 0.0;
        rhs_log_series(c, kPolicy, &leak);
        CHECK(leak <= 1e-12);
    }
}

TEST_CASE("verify: Schloemilch case k=r=1 at x=2pi") {
    const VerificationReport rep = verify({1, 1, 2.0 * kPi}, kPolicy, kQPolicy);
    CHECK(rep.abs_residual < 1e-12);
    CHECK(rep.lhs.value ==
          doctest::Approx(1.0 / 24.0 - 1.0 / (8.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("verify report structure") {
    const VerificationReport rep = verify({2, 0, 1.0}, kPolicy, kQPolicy);
    CHECK(rep.rhs_terms.count("residue_0") == 1);
    CHECK(rep.rhs_terms.count("residue_1_over_k") == 1);
    CHECK(rep.rhs_terms.count("residue_1_plus_r") == 1);
    CHECK(rep.rhs_terms.count("g_series") == 1);
    CHECK(rep.rhs_terms.at("residue_0") == doctest::Approx(0.25));
    double total = 0.0;
    for (const auto& [k, v] : rep.rhs_terms)
        total += v;
    CHECK(total == doctest::Approx(rep.rhs_total).epsilon(1e-15));
    CHECK_THROWS_AS(verify({3, 0, 1.0}, kPolicy, kQPolicy), DomainError);
}

TEST_CASE("zeta(1/2) via the alpha-beta identity") {
    const double ref = -1.4603545088095868;
    for (double alpha : {1.0, 10.0})
        CHECK(zeta_half_via_ramanujan(alpha, kPolicy) ==
              doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("Wigert RHS equals direct summation") {
    for (int k : {2, 4})
        for (double x : {1.0, 5.0}) {
            const double direct = lambert_sum({k, 0}, x, kPolicy).value;
            CHECK(std::abs(wigert_rhs(k, x, kPolicy) - direct) < 1e-9);
        }
    CHECK_THROWS_AS(wigert_rhs(3, 1.0, kPolicy), DomainError);
}

TEST_CASE("zeta(-1/2) identity and solved value") {
    const auto rep = zeta_minus_half_identity(2.0, kPolicy);
    CHECK(rep.abs_residual < 1e-10);
    CHECK(rep.rhs_terms.at("zeta_minus_half_solved") ==
          doctest::Approx(-0.2078862249773545).epsilon(1e-9));
}

TEST_CASE("odd zeta identity residuals") {
    for (int m : {1, 2})
        for (double x : {1.0, 2.0 * kPi}) {
            const auto rep = ramanujan_odd_zeta_check(m, x, kPolicy);
            CHECK(rep.abs_residual < 1e-12);
        }
}

TEST_CASE("Eisenstein, Dedekind, Schloemilch identities") {
    CHECK(eisenstein_identity(1, 1.0).abs_residual < 1e-13);
    CHECK(eisenstein_identity(3, kPi).abs_residual < 1e-13);
    CHECK(dedekind_identity(0.5).abs_residual < 1e-13);
    CHECK(dedekind_identity(kPi).abs_residual < 1e-15); // alpha = beta
    CHECK(schlomilch_identity(1.0).abs_residual < 1e-13);
    CHECK(schlomilch_identity(kPi).abs_residual < 1e-13);
}

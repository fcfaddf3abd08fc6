// Acceptance suite: one pass/fail line per criterion, all tolerances
// pinned in code.  Exit status is non-zero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "zetalab/identities.hpp"
#include "zetalab/oracle.hpp"
#include "zetalab/specfun.hpp"

using namespace zetalab;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

void report(int number, const char* name, bool pass) {
    std::printf("criterion %2d [%s] %s\n", number, pass ? "PASS" : "FAIL",
                name);
    if (!pass)
        ++g_failures;
}

TruncationPolicy tight_policy() {
    TruncationPolicy p;
    p.abs_tol = 1e-15;
    p.rel_tol = 1e-15;
    return p;
}

} // namespace

int main() {
    const TruncationPolicy tight = tight_policy();
    const TruncationPolicy series = [] {
        TruncationPolicy p;
        p.abs_tol = 1e-11;
        p.rel_tol = 1e-11;
        return p;
    }();
    const QuadraturePolicy quad; // tol 1e-12
    const auto refs = oracle::reference_constants();

    // 1. closed-form value of sum n/(e^{2 pi n} - 1), tol 1e-12
    {
        const double got = lambert_sum({1, 1}, 2.0 * kPi, tight).value;
        const double want = 1.0 / 24.0 - 1.0 / (8.0 * kPi);
        report(1, "sum n/(e^{2 pi n}-1) = 1/24 - 1/(8 pi) to 1e-12",
               std::abs(got - want) < 1e-12);
    }

    // 2. eta-log identity residual < 1e-12 at alpha in {0.5, 2, pi};
    //    exact symmetry at alpha = pi (both sides 0 within 1e-15)
    {
        bool ok = true;
        for (double a : {0.5, 2.0, kPi})
            ok = ok && dedekind_identity(a).abs_residual < 1e-12;
        const auto sym = dedekind_identity(kPi);
        ok = ok && std::abs(sym.lhs.value) < 1e-15 &&
             std::abs(sym.rhs_total) < 1e-15;
        report(2, "eta-log identity < 1e-12 at {0.5, 2, pi}, exact at pi", ok);
    }

    // 3. zeta(1/2) to 1e-9 at three alpha values, pairwise to 1e-9
    {
        std::vector<double> vals;
        for (double a : {1.0, 2.0 * std::pow(kPi, 1.5), 10.0})
            vals.push_back(zeta_half_via_ramanujan(a, tight));
        bool ok = true;
        for (double v : vals)
            ok = ok && std::abs(v - refs.at("zeta_half")) < 1e-9;
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j)
                ok = ok && std::abs(vals[i] - vals[j]) < 1e-9;
        report(3, "zeta(1/2) via identity, 1e-9 vs oracle and pairwise", ok);
    }

    // 4. Wigert RHS vs direct summation, k in {2,4}, x in {1,5}, 1e-8
    {
        bool ok = true;
        for (int k : {2, 4})
            for (double x : {1.0, 5.0}) {
                const double direct = lambert_sum({k, 0}, x, tight).value;
                ok = ok && std::abs(wigert_rhs(k, x, tight) - direct) < 1e-8;
            }
        report(4, "zeta(1/k) formula matches direct sum to 1e-8", ok);
    }

    // 5. zeta(-1/2) identity residual < 1e-9; solved value to 1e-8
    {
        bool ok = true;
        for (double a : {1.0, 2.0 * std::pow(kPi, 1.5), 5.0}) {
            const auto rep = zeta_minus_half_identity(a, tight);
            ok = ok && rep.abs_residual < 1e-9 &&
                 std::abs(rep.rhs_terms.at("zeta_minus_half_solved") -
                          refs.at("zeta_minus_half")) < 1e-8;
        }
        report(5, "zeta(-1/2) identity < 1e-9, solved value to 1e-8", ok);
    }

    // 6. odd-zeta identity residual < 1e-11 for m in {1,2,3}, x in {2pi,1};
    //    the m=1, x=2pi rearrangement reproduces zeta(3) to 1e-10
    {
        bool ok = true;
        for (int m : {1, 2, 3})
            for (double x : {2.0 * kPi, 1.0})
                ok = ok &&
                     ramanujan_odd_zeta_check(m, x, tight).abs_residual < 1e-11;
        // solve the m=1, x=2pi instance for zeta(3):
        // lhs - rhs = 0 with zeta(3) appearing on both sides; isolate it
        const int m = 1;
        const double x = 2.0 * kPi;
        const double near = lambert_sum({1, -3}, x, tight).value;
        const double far = lambert_sum({1, -3}, 4.0 * kPi * kPi / x, tight).value;
        const auto rep = ramanujan_odd_zeta_check(m, x, tight);
        const double bern_half = rep.rhs_terms.at("bernoulli_sum");
        // lhs = near + z/2, rhs = -(z/2 + far) + bern_half  (m odd, x=2pi)
        const double z3 = (-far + bern_half - near);
        ok = ok && std::abs(z3 - refs.at("zeta_3")) < 1e-10;
        report(6, "odd-zeta identity < 1e-11; zeta(3) to 1e-10", ok);
    }

    // 7. Eisenstein identity < 1e-12 for m in {1,2,3}, alpha in {1, pi};
    //    exact weight-6 value: sum n^5/(e^{2 pi n}-1) = 1/504 to 1e-13
    //    (the weight-6 instance is the one with a rational closed form)
    {
        bool ok = true;
        for (int m : {1, 2, 3})
            for (double a : {1.0, kPi})
                ok = ok && eisenstein_identity(m, a).abs_residual < 1e-12;
        const double got = lambert_sum({1, 5}, 2.0 * kPi, tight).value;
        ok = ok && std::abs(got - 1.0 / 504.0) < 1e-13;
        report(7, "Eisenstein identity < 1e-12; n^5 sum = 1/504 to 1e-13", ok);
    }

    // 8. general transformation via Mellin-Barnes quadrature, ten cases,
    //    residual < 1e-8, each under 60 s
    {
        struct Case { int k, r; double x; };
        const std::vector<Case> cases{
            {2, 0, 1.0}, {2, 2, 1.0}, {2, 4, 2.0}, {4, 0, 1.0}, {2, 1, 1.0},
            {2, 3, 2.0}, {3, 1, 1.0}, {3, -3, 2.0}, {2, -1, 1.0}, {3, -1, 1.0}};
        bool ok = true;
        for (const Case c : cases) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto rep = verify({c.k, c.r, c.x}, series, quad);
            const double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
            ok = ok && rep.abs_residual < 1e-8 && secs < 60.0;
        }
        report(8, "ten general cases verify < 1e-8 in < 60 s each", ok);
    }

    // 9. Meijer-G cross-validation: closed progression vs quadrature to
    //    1e-9 on the module grid; Bessel-K reduction to 1e-9
    {
        bool ok = true;
        for (int k : {1, 2, 3, 4})
            for (double b : {0.0, -1.0 / k, -1.0}) {
                std::vector<double> bs;
                for (int l = 0; l < k; ++l)
                    bs.push_back(b + double(l) / k);
                for (Complex zc : {Complex(0.5, 0.0), Complex(1.0, 1.0),
                                   Complex(3.0, 0.0)}) {
                    const PolarArg z{std::abs(zc), std::arg(zc)};
                    const Complex want = eval_closed_progression(b, k, z);
                    const Complex got = eval_mb(GSpec{k, bs, z}, quad);
                    ok = ok && std::abs(got - want) <
                                   1e-9 * std::max(1.0, std::abs(want));
                }
            }
        for (double zv : {0.25, 1.0, 4.0})
            for (int nu2 : {1, 3}) {
                const double nu = nu2 / 2.0;
                const Complex got =
                    eval_mb(GSpec{2, {nu / 2.0, -nu / 2.0}, PolarArg{zv, 0.0}},
                            quad);
                const Complex want = 2.0 * bessel_k_half(
                    nu2, Complex(2.0 * std::sqrt(zv), 0.0));
                ok = ok && std::abs(got - want) < 1e-9;
            }
        report(9, "Meijer-G closed form and Bessel reduction to 1e-9", ok);
    }

    // 10. independent Mellin-inversion oracle agrees with lambert_sum to
    //     1e-6 on the three module cases
    {
        struct Case { int k, r; double x; };
        bool ok = true;
        for (const Case c : {Case{1, 1, 2.0 * kPi}, Case{2, 0, 1.0},
                             Case{2, 1, 2.0}}) {
            const double series_v = lambert_sum({c.k, c.r}, c.x, tight).value;
            const double integral = oracle::mellin_inversion({c.k, c.r}, c.x);
            ok = ok && std::abs(series_v - integral) < 1e-6;
        }
        report(10, "Mellin-inversion oracle agrees to 1e-6", ok);
    }

    // 11. property suites: sieve vs brute force (n <= 5000); the two
    //     trig lemmas at 500 random points to 1e-12; the Dirichlet-kernel
    //     lemma at 200 random points to 1e-12; Gamma reflection /
    //     multiplication and zeta functional-equation invariants
    {
        bool ok = true;
        std::mt19937 rng(31415);
        for (int k : {1, 2, 3})
            for (int r = -3; r <= 3; ++r) {
                const DivisorSpec spec{k, r};
                const auto dt = sieve_d(spec, 5000);
                for (std::int64_t n = 1; n <= 5000; n += 101)
                    ok = ok && std::abs(dt[n] - oracle::brute_divisor_d(
                                                    spec, n)) <
                                   1e-9 * std::max(1.0, dt[n]);
            }
        std::uniform_real_distribution<double> da(0.05, 4.0), du(-1.2, 1.2),
            dv(-5.0, 5.0);
        for (int i = 0; i < 500; ++i) {
            const double a = da(rng), u = du(rng), v = dv(rng);
            const Complex den = std::exp(a * std::exp(Complex(0, -u))) - 1.0;
            const Complex num = std::exp(Complex(0, u * v));
            const double denom =
                std::cosh(a * std::cos(u)) - std::cos(a * std::sin(u));
            const double r1 = (std::cos(a * std::sin(u) + u * v) -
                               std::exp(-a * std::cos(u)) * std::cos(u * v)) /
                              denom;
            const double r2 = (-std::sin(u * v + a * std::sin(u)) +
                               std::exp(-a * std::cos(u)) * std::sin(u * v)) /
                              denom;
            ok = ok && std::abs(2.0 * (num / den).real() - r1) <
                           1e-12 * std::max(1.0, std::abs(r1));
            ok = ok && std::abs(2.0 * (Complex(0, 1) * num / den).real() - r2) <
                           1e-12 * std::max(1.0, std::abs(r2));
        }
        std::uniform_real_distribution<double> ds(-1.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const Complex s(ds(rng), ds(rng));
            for (int k : {2, 3, 4, 5}) {
                Complex acc(0, 0);
                for (int j = -(k - 1); j <= k - 1; j += 2)
                    acc += std::exp(Complex(0, double(j)) * s);
                const Complex lhs = std::sin(double(k) * s) / std::sin(s);
                ok = ok && std::abs(lhs - acc) <
                               1e-12 * std::max(1.0, std::abs(acc));
            }
        }
        std::uniform_real_distribution<double> re(-8.0, 8.0), im(-20.0, 20.0);
        int n_ref = 0;
        while (n_ref < 200) {
            const Complex s(re(rng), im(rng));
            if (std::abs(s.real() - std::round(s.real())) < 1e-3 ||
                std::abs(std::sin(kPi * s)) < 1e-6)
                continue;
            const Complex want = kPi / std::sin(kPi * s);
            ok = ok && std::abs(gamma(s) * gamma(1.0 - s) - want) <
                           1e-11 * std::abs(want);
            ++n_ref;
        }
        std::uniform_real_distribution<double> rm(0.2, 4.0), imm(-6.0, 6.0);
        for (int k : {2, 3, 5})
            for (int i = 0; i < 50; ++i) {
                const Complex s(rm(rng), imm(rng));
                Complex prod(1.0, 0.0);
                for (int l = 0; l < k; ++l)
                    prod *= gamma(s + double(l) / k);
                const Complex want = std::pow(2.0 * kPi, (k - 1) / 2.0) *
                                     std::pow(Complex(k, 0),
                                              0.5 - double(k) * s) *
                                     gamma(double(k) * s);
                ok = ok && std::abs(prod - want) < 1e-10 * std::abs(want);
            }
        std::uniform_real_distribution<double> dneg(-30.0, -0.01);
        for (int i = 0; i < 100; ++i) {
            const double s = dneg(rng);
            const double want = std::pow(2.0, s) * std::pow(kPi, s - 1.0) *
                                std::sin(kPi * s / 2.0) *
                                gamma(Complex(1.0 - s, 0)).real() *
                                zeta_real(1.0 - s);
            ok = ok && std::abs(zeta_real(s) - want) <
                           1e-11 * std::max(1.0, std::abs(want));
        }
        report(11, "property suites (sieve, trig, kernel, gamma, zeta)", ok);
    }

    // 12. Dirichlet-series identities within 1e-7 tail estimate
    {
        bool ok = true;
        struct Case { int k, r; double s; };
        for (const Case c : {Case{1, 0, 3.0}, Case{2, 1, 4.5},
                             Case{3, -2, 2.5}}) {
            const double target = zeta_real(c.k * c.s) * zeta_real(c.s - c.r);
            ok = ok && std::abs(dirichlet_partial({c.k, c.r}, c.s, 200000) -
                                target) < 1e-7;
        }
        const double starget = zeta_real(2 * 3.0 - 1.0) * zeta_real(3.0 + 1.0);
        ok = ok && std::abs(dirichlet_partial({2, 1}, 3.0, 200000, true) -
                            starget) < 1e-7;
        report(12, "Dirichlet partial sums match zeta products to 1e-7", ok);
    }

    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED"
                                        : "SOME CRITERIA FAILED");
    return g_failures == 0 ? 0 : 1;
}

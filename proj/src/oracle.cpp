#include "zetalab/oracle.hpp"

#include <cmath>
#include <complex>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab {
namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

double mellin_inversion(const DivisorSpec& spec, double x,
                        const OracleConfig& cfg) {
    if (x <= 0.0)
        throw DomainError("mellin_inversion: x must be positive");
    // Poles of the integrand sit at s = 1/k, s = 1 + r, s = 0 and to the
    // left; stay strictly right of all of them.
    double c = cfg.line_c;
    if (c == 0.0)
        c = std::max(1.0 / spec.k, 1.0 + spec.r) + 0.75;
    const double h = cfg.step_h;
    const std::int64_t nsteps = std::llround(cfg.height_T / h);
    const double logx = std::log(x);
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t i = -nsteps; i <= nsteps; ++i) {
        const double t = i * h;
        const std::complex<double> s(c, t);
        std::complex<double> f = std::exp(log_gamma(s) - s * logx) *
                                 zeta_complex(double(spec.k) * s) *
                                 zeta_complex(s - double(spec.r));
        if (std::llabs(i) == nsteps)
            f *= 0.5;
        acc += f;
    }
    return (acc * h / (2.0 * kPi)).real();
}

double brute_divisor_d(const DivisorSpec& spec, std::int64_t n) {
    if (n < 1)
        throw DomainError("brute_divisor_d: n must be >= 1");
    double total = 0.0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        // contributes when d is a perfect k-th power d = e^k
        const double e = std::round(std::pow(double(d), 1.0 / spec.k));
        std::int64_t ek = 1;
        bool ok = true;
        for (int q = 0; q < spec.k; ++q) {
            ek *= std::int64_t(e);
            if (ek > d) { ok = false; break; }
        }
        if (!ok || ek != d)
            continue;
        total += std::pow(double(n) / d, double(spec.r));
    }
    return total;
}

double brute_divisor_s(const DivisorSpec& spec, std::int64_t n) {
    if (n < 1)
        throw DomainError("brute_divisor_s: n must be >= 1");
    double total = 0.0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        std::int64_t dk = 1;
        bool fits = true;
        for (int q = 0; q < spec.k; ++q) {
            if (dk > n / d) { fits = false; break; }
            dk *= d;
        }
        if (!fits || dk > n || n % dk != 0)
            continue;
        total += std::pow(double(n) / dk, -double(spec.r)) *
                 std::pow(double(d), spec.k - 1.0);
    }
    return total;
}

namespace {

// Local alternating-series evaluator for zeta(s), s real, s != 1,
// written independently of zetalab::zeta_real (different n, different
// coefficient recursion order).
double local_zeta(double s) {
    const int n = 64;
    // binomial-weighted Chebyshev coefficients d_k
    double d = std::pow(3.0 + 2.0 * std::sqrt(2.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, eta = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        eta += c / std::pow(k + 1.0, s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    eta /= d;
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

} // namespace

std::map<std::string, double> reference_constants() {
    std::map<std::string, double> out;
    out["zeta_half"] = local_zeta(0.5);
    out["zeta_3"] = local_zeta(3.0);
    out["zeta_5"] = local_zeta(5.0);
    out["zeta_7"] = local_zeta(7.0);
    // zeta(-1/2) from the reflection formula using zeta(3/2) and the
    // standard-library real gamma.
    out["zeta_minus_half"] = std::pow(2.0, -0.5) * std::pow(kPi, -1.5) *
                             std::sin(-kPi / 4.0) * std::tgamma(1.5) *
                             local_zeta(1.5);
    // Euler-Mascheroni via the harmonic expansion with Bernoulli tail.
    {
        const int N = 40;
        double g = -std::log(double(N));
        for (int i = 1; i <= N; ++i)
            g += 1.0 / i;
        g -= 1.0 / (2.0 * N);
        const double n2 = double(N) * N;
        g += 1.0 / (12.0 * n2) - 1.0 / (120.0 * n2 * n2) +
             1.0 / (252.0 * n2 * n2 * n2);
        out["euler_gamma"] = g;
    }
    return out;
}

} // namespace oracle
} // namespace zetalab

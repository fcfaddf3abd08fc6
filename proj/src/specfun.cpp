#include "zetalab/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

namespace zetalab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, 9 terms.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 &&
           s.real() == std::floor(s.real());
}

// log of the Lanczos series; stays near log(1) on the half-plane we use.
Complex lanczos_series_log(Complex s) {
    Complex a(kLanczos[0], 0.0);
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        a += kLanczos[i] / (s + Complex(double(i) - 1.0, 0.0));
    return std::log(a);
}

// log Gamma for Re s >= 1/2, principal on the positive real axis and
// continuous along vertical lines (the series stays in the right
// half-plane, so no branch jumps occur in log(a)).
Complex log_gamma_right(Complex s) {
    const Complex t = s + Complex(6.5, 0.0); // s + g - 0.5
    return 0.5 * std::log(2.0 * kPi) + (s - 0.5) * std::log(t) - t +
           lanczos_series_log(s);
}

// log(sin(pi s)) computed without overflow for large |Im s|.
Complex log_sin_pi(Complex s) {
    const double y = s.imag();
    if (y >= 0.0) {
        // sin(pi s) = e^{-i pi s} (e^{2 i pi s} - 1) / (2i)
        const Complex w = std::exp(Complex(0.0, 2.0 * kPi) * s);
        return Complex(0.0, -kPi) * s + std::log(w - 1.0) -
               std::log(Complex(0.0, 2.0));
    }
    return std::conj(log_sin_pi(std::conj(s)));
}

} // namespace

Complex log_gamma(Complex s) {
    if (is_nonpositive_integer(s))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (s.real() >= 0.5)
        return log_gamma_right(s);
    // Reflection in log space: log pi - log sin(pi s) - log Gamma(1-s).
    return std::log(kPi) - log_sin_pi(s) - log_gamma_right(1.0 - s);
}

Complex gamma(Complex s) {
    if (is_nonpositive_integer(s))
        throw PoleError("gamma: pole at non-positive integer");
    if (s.real() >= 0.5)
        return std::exp(log_gamma_right(s));
    // For moderate imaginary part the direct reflection is the most
    // accurate; fall back to log space when sin(pi s) would overflow.
    if (std::abs(s.imag()) < 30.0)
        return kPi / (std::sin(kPi * s) * std::exp(log_gamma_right(1.0 - s)));
    return std::exp(log_gamma(s));
}

namespace {

// Cohen-Villegas-Zagier acceleration of the alternating eta series.
double eta_accelerated(double s, int n = 56) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(double(k + 1), -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

} // namespace

double zeta_real(double s) {
    if (s == 1.0)
        throw PoleError("zeta_real: pole at s = 1");
    if (s >= 0.5) { // includes s = 1/2, the fixed point of the reflection
        // eta(s) = (1 - 2^{1-s}) zeta(s); the prefactor is bounded away
        // from zero on s > 1/2, s != 1.
        return eta_accelerated(s) / (1.0 - std::pow(2.0, 1.0 - s));
    }
    if (s == std::floor(s)) {
        // zeta(-n) = (-1)^n B_{n+1}/(n+1); avoids the 0*inf ambiguity the
        // functional equation develops at the integers.
        const int n = int(-s);
        if (n % 2 == 0 && n >= 2)
            return 0.0;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * bernoulli_d(n + 1) / double(n + 1);
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           std::exp(log_gamma_right(Complex(1.0 - s, 0.0))).real() *
           zeta_real(1.0 - s);
}

Complex zeta_complex(Complex s) {
    if (s == Complex(1.0, 0.0))
        throw PoleError("zeta_complex: pole at s = 1");
    if (s.real() < -0.5) {
        // Euler-Maclaurin cancels catastrophically far left of the
        // critical strip; reflect instead.  All factors in log space to
        // survive large |Im s|.
        const Complex log_chi = s * std::log(2.0) +
                                (s - 1.0) * std::log(kPi) +
                                log_sin_pi(s / 2.0) +
                                log_gamma(1.0 - s);
        return std::exp(log_chi) * zeta_complex(1.0 - s);
    }
    // Euler-Maclaurin with N growing with |Im s|.
    const int N = std::max(30, int(std::ceil(2.0 * std::abs(s.imag()))) + 10);
    Complex sum(0.0, 0.0);
    for (int n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(double(n)));
    const Complex nms = std::exp(-s * std::log(double(N))); // N^{-s}
    sum += 0.5 * nms;
    sum += nms * double(N) / (s - 1.0); // N^{1-s}/(s-1)
    // Correction terms  B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    Complex rising = s;            // s (s+1) ... (s + 2j - 2)
    Complex npow = nms / double(N); // N^{-s-2j+1}, starts at j = 1
    for (int j = 1; j <= 14; ++j) {
        const Complex term =
            bernoulli_d(2 * j) / std::tgamma(2.0 * j + 1.0) * rising * npow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
        rising *= (s + Complex(2.0 * j - 1.0, 0.0)) *
                  (s + Complex(2.0 * j, 0.0));
        npow /= double(N) * double(N);
    }
    return sum;
}

namespace {

std::vector<BigRational> build_bernoulli_table(int up_to) {
    using boost::multiprecision::cpp_int;
    std::vector<BigRational> table(std::size_t(up_to) + 1);
    table[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        if (n % 2 == 1 && n >= 3) {
            table[n] = 0;
            continue;
        }
        // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j
        BigRational acc = 0;
        cpp_int binom = 1; // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            acc += BigRational(binom) * table[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        table[n] = -acc / (n + 1);
    }
    return table;
}

} // namespace

const BigRational& bernoulli(int n) {
    if (n < 0)
        throw DomainError("bernoulli: negative index");
    static const std::vector<BigRational> table = build_bernoulli_table(256);
    if (n < int(table.size()))
        return table[std::size_t(n)];
    // Rarely exercised; extend on demand behind a lock.
    static std::mutex mu;
    static std::vector<BigRational> extra;
    std::lock_guard<std::mutex> lock(mu);
    if (int(extra.size()) <= n)
        extra = build_bernoulli_table(n);
    return extra[std::size_t(n)];
}

double bernoulli_d(int n) { return bernoulli(n).convert_to<double>(); }

double zeta_prime_neg_even(int M) {
    if (M >= 0 || M % 2 != 0)
        throw DomainError("zeta_prime_neg_even: argument must be a negative even integer");
    const int t = -M / 2;
    double factorial = 1.0;
    for (int i = 2; i <= 2 * t; ++i)
        factorial *= i;
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial * zeta_real(2.0 * t + 1.0) /
           (2.0 * std::pow(2.0 * kPi, 2.0 * t));
}

} // namespace zetalab

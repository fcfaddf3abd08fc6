#include "zetalab/arith.hpp"

#include <cmath>
#include <cstdlib>

namespace zetalab {

namespace {

constexpr double kExactLimit = 9.007199254740992e15; // 2^53

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i)
        v *= base;
    return v;
}

void check_exact(const DivisorSpec& spec, double value) {
    if (spec.r >= 0 && std::abs(value) >= kExactLimit)
        throw OverflowError("divisor function value exceeds exact integer range");
}

// Largest d with d^k <= n.
std::int64_t kth_root_floor(std::int64_t n, int k) {
    if (k == 1)
        return n;
    std::int64_t d = std::int64_t(std::floor(std::pow(double(n), 1.0 / k)));
    while (d > 1 && ipow(d, k) > n)
        --d;
    while (ipow(d + 1, k) <= n)
        ++d;
    return d;
}

} // namespace

double divisor_d(const DivisorSpec& spec, std::int64_t n) {
    if (n < 1)
        throw DomainError("divisor_d: n must be >= 1");
    double sum = 0.0;
    const std::int64_t dmax = kth_root_floor(n, spec.k);
    for (std::int64_t d = 1; d <= dmax; ++d) {
        const std::int64_t dk = ipow(d, spec.k);
        if (n % dk == 0)
            sum += std::pow(double(n / dk), double(spec.r));
    }
    check_exact(spec, sum);
    return sum;
}

double divisor_s(const DivisorSpec& spec, std::int64_t n) {
    if (n < 1)
        throw DomainError("divisor_s: n must be >= 1");
    double sum = 0.0;
    const std::int64_t dmax = kth_root_floor(n, spec.k);
    for (std::int64_t d = 1; d <= dmax; ++d) {
        const std::int64_t dk = ipow(d, spec.k);
        if (n % dk == 0)
            sum += std::pow(double(n / dk), double(-spec.r)) *
                   std::pow(double(d), double(spec.k - 1));
    }
    if (spec.r <= 0 && std::abs(sum) >= kExactLimit)
        throw OverflowError("divisor_s value exceeds exact integer range");
    return sum;
}

std::vector<double> sieve_d(const DivisorSpec& spec, std::int64_t N) {
    if (N < 1)
        throw DomainError("sieve_d: N must be >= 1");
    std::vector<double> table(std::size_t(N) + 1, 0.0);
    for (std::int64_t d = 1; ipow(d, spec.k) <= N; ++d) {
        const std::int64_t dk = ipow(d, spec.k);
        for (std::int64_t m = 1; m * dk <= N; ++m)
            table[std::size_t(m * dk)] += std::pow(double(m), double(spec.r));
    }
    for (std::size_t n = 1; n < table.size(); ++n)
        check_exact(spec, table[n]);
    return table;
}

std::vector<double> sieve_s(const DivisorSpec& spec, std::int64_t N) {
    if (N < 1)
        throw DomainError("sieve_s: N must be >= 1");
    std::vector<double> table(std::size_t(N) + 1, 0.0);
    for (std::int64_t d = 1; ipow(d, spec.k) <= N; ++d) {
        const std::int64_t dk = ipow(d, spec.k);
        const double dpow = std::pow(double(d), double(spec.k - 1));
        for (std::int64_t m = 1; m * dk <= N; ++m)
            table[std::size_t(m * dk)] +=
                std::pow(double(m), double(-spec.r)) * dpow;
    }
    return table;
}

namespace {

// Integral tail majorant: D_{k,r}(n) <= d(n) n^{max(r,0)} <= n^{1+max(r,0)},
// so  sum_{n>N} D_{k,r}(n) e^{-nx} <= int_N^inf t^p e^{-tx} dt
//                                   = p! e^{-Nx}/x^{p+1} sum_{i<=p} (Nx)^i/i!.
double integral_tail(std::int64_t N, int p, double x) {
    double sum = 0.0, term = 1.0; // (Nx)^i / i!
    const double nx = double(N) * x;
    for (int i = 0; i <= p; ++i) {
        sum += term;
        term *= nx / double(i + 1);
    }
    double pfact = 1.0;
    for (int i = 2; i <= p; ++i)
        pfact *= i;
    return pfact * std::exp(-nx) * sum / std::pow(x, double(p + 1));
}

} // namespace

SumResult lambert_sum(const DivisorSpec& spec, double x,
                      const TruncationPolicy& policy) {
    if (x <= 0.0)
        throw DomainError("lambert_sum: x must be positive");
    const int p = 1 + std::max(spec.r, 0);
    SumResult res;
    for (std::int64_t n = 1; n <= policy.max_terms; ++n) {
        const double term = divisor_d(spec, n) * std::exp(-double(n) * x);
        res.value += term;
        res.terms_used = n;
        double tail;
        if (policy.tail_bound_mode == TruncationPolicy::TailMode::integral) {
            tail = integral_tail(n, p, x);
        } else {
            const double q = std::exp(-x) *
                             std::pow(1.0 + 1.0 / double(n), double(p));
            tail = (q < 1.0) ? std::abs(term) * q / (1.0 - q) : INFINITY;
        }
        if (n >= 2 && tail <= std::max(policy.abs_tol,
                                       policy.rel_tol * std::abs(res.value))) {
            res.tail_bound = tail;
            return res;
        }
    }
    throw ConvergenceError("lambert_sum: max_terms reached before tolerance");
}

namespace {

// d^r/dw^r (1/(e^w - 1)) = (-1)^r sum_{j=1}^{r+1} (j-1)! S(r+1, j) / (e^w - 1)^j
// with S the Stirling numbers of the second kind.
std::vector<double> stirling2_row(int n) {
    std::vector<double> row(std::size_t(n) + 1, 0.0), next;
    row[0] = 1.0; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        next.assign(std::size_t(n) + 1, 0.0);
        for (int j = 1; j <= i; ++j)
            next[std::size_t(j)] =
                double(j) * row[std::size_t(j)] + row[std::size_t(j - 1)];
        row = next;
    }
    return row;
}

} // namespace

SumResult lambert_sum_derivative_form(const DivisorSpec& spec, double x,
                                      const TruncationPolicy& policy) {
    if (spec.r < 0)
        throw DomainError("lambert_sum_derivative_form: r must be >= 0");
    if (x <= 0.0)
        throw DomainError("lambert_sum_derivative_form: x must be positive");
    const int r = spec.r;
    const auto s2 = stirling2_row(r + 1);
    std::vector<double> coeff(std::size_t(r) + 2, 0.0);
    double fact = 1.0;
    for (int j = 1; j <= r + 1; ++j) {
        coeff[std::size_t(j)] = fact * s2[std::size_t(j)];
        fact *= j;
    }
    // (-1)^r n^{-kr} d^r/dx^r (1/(e^{n^k x}-1))
    //   = sum_{j=1}^{r+1} (j-1)! S(r+1,j) / (e^{n^k x}-1)^j    (the n^{kr}
    // from the chain rule cancels the n^{-kr} prefactor exactly).
    SumResult res;
    for (std::int64_t n = 1; n <= policy.max_terms; ++n) {
        const double w = std::pow(double(n), double(spec.k)) * x;
        if (w > 745.0) { // e^{-w} underflows; series is done
            res.terms_used = n;
            res.tail_bound = 5e-324;
            return res;
        }
        const double em1 = std::expm1(w);
        double term = 0.0, powj = 1.0;
        for (int j = 1; j <= r + 1; ++j) {
            powj *= em1;
            term += coeff[std::size_t(j)] / powj;
        }
        res.value += term;
        res.terms_used = n;
        // Terms decay at least geometrically with ratio e^{-(w(n+1)-w(n))}.
        const double w_next = std::pow(double(n + 1), double(spec.k)) * x;
        const double q = std::exp(-(w_next - w));
        const double tail = std::abs(term) * q / (1.0 - q);
        if (n >= 2 && tail <= std::max(policy.abs_tol,
                                       policy.rel_tol * std::abs(res.value))) {
            res.tail_bound = tail;
            return res;
        }
    }
    throw ConvergenceError(
        "lambert_sum_derivative_form: max_terms reached before tolerance");
}

double dirichlet_partial(const DivisorSpec& spec, double s, std::int64_t N,
                         bool s_form) {
    const double lower =
        s_form ? std::max(1.0, 1.0 - spec.r)
               : std::max(1.0 / spec.k, 1.0 + spec.r);
    if (s <= lower)
        throw DomainError("dirichlet_partial: s outside convergence half-plane");
    const auto table = s_form ? sieve_s(spec, N) : sieve_d(spec, N);
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n)
        sum += table[std::size_t(n)] * std::pow(double(n), -s);
    return sum;
}

} // namespace zetalab

#ifndef ZETALAB_ARITH_HPP
#define ZETALAB_ARITH_HPP

#include <cstdint>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

/// Parameters (k, r) of the divisor functions
///   D_{k,r}(n) = sum over d with d^k | n of (n/d^k)^r
///   S_{k,r}(n) = sum over d with d^k | n of (n/d^k)^{-r} d^{k-1}
struct DivisorSpec {
    int k = 1;
    int r = 0;
};

struct TruncationPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::int64_t max_terms = 4'000'000;
    enum class TailMode { geometric, integral };
    TailMode tail_bound_mode = TailMode::integral;
};

struct SumResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

double divisor_d(const DivisorSpec& spec, std::int64_t n);
double divisor_s(const DivisorSpec& spec, std::int64_t n);

/// Table of divisor_d(spec, n) for n = 1..N (index 0 unused).
std::vector<double> sieve_d(const DivisorSpec& spec, std::int64_t N);
std::vector<double> sieve_s(const DivisorSpec& spec, std::int64_t N);

/// sum_{n>=1} D_{k,r}(n) e^{-n x}, truncated with a certified tail bound.
SumResult lambert_sum(const DivisorSpec& spec, double x,
                      const TruncationPolicy& policy);

/// Same series through the closed form of the r-th derivative of
/// 1/(e^{n^k x} - 1); requires r >= 0.
SumResult lambert_sum_derivative_form(const DivisorSpec& spec, double x,
                                      const TruncationPolicy& policy);

/// Partial Dirichlet sum sum_{n<=N} coeff(n) n^{-s}, where coeff is
/// D_{k,r} (s_form = false) or S_{k,r} (s_form = true).
double dirichlet_partial(const DivisorSpec& spec, double s, std::int64_t N,
                         bool s_form = false);

} // namespace zetalab

#endif

#ifndef ZETALAB_SPECFUN_HPP
#define ZETALAB_SPECFUN_HPP

#include <complex>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetalab/errors.hpp"

namespace zetalab {

using Complex = std::complex<double>;
using BigRational = boost::multiprecision::cpp_rational;

/// Complex gamma function (Lanczos, reflection for Re s < 1/2).
/// Throws PoleError at non-positive integers.
Complex gamma(Complex s);

/// Log-gamma, branch continuous along vertical lines with Re s > 0,
/// normalized so that log_gamma is real on the positive real axis.
Complex log_gamma(Complex s);

/// Riemann zeta for real s != 1.  Accelerated alternating series for
/// s > 1/2, functional equation below.
double zeta_real(double s);

/// Riemann zeta for complex s != 1 via Euler-Maclaurin summation.
Complex zeta_complex(Complex s);

/// Exact Bernoulli number B_n (B_1 = -1/2 convention of z/(e^z-1)).
/// Values up to n = 256 are cached; larger n are computed on demand.
const BigRational& bernoulli(int n);

/// B_n rounded to double.
double bernoulli_d(int n);

/// zeta'(M) for even negative M = -2t, via
///   zeta'(-2t) = (-1)^t (2t)! zeta(2t+1) / (2 (2pi)^{2t}).
double zeta_prime_neg_even(int M);

} // namespace zetalab

#endif

#ifndef ZETALAB_IDENTITIES_HPP
#define ZETALAB_IDENTITIES_HPP

#include <map>
#include <string>

#include "zetalab/arith.hpp"
#include "zetalab/meijerg.hpp"

namespace zetalab {

/// One instance of the transformation identity for
/// sum_n D_{k,r}(n) e^{-nx}.
struct IdentityCase {
    int k = 1;
    int r = 0;
    double x = 1.0;
};

/// The five supported parity classes.  (k odd, r even) is rejected: the
/// integrand then has infinitely many uncancelled poles and no
/// transformation formula of this shape exists.
enum class ParityClass {
    EvenEven,   // k even, r even
    EvenOdd,    // k even, r odd, r != -1
    EvenNegOne, // k even, r = -1
    OddOdd,     // k odd, r odd, r != -1
    OddNegOne,  // k odd, r = -1
};

ParityClass classify(const IdentityCase& c);

/// Argument of the Meijer G term:
///   X(j) = (2 pi)^{k+1} n / (k^k x) * e^{-i pi j / 2},
/// for j in the double-primed range |j| <= k-1, j = k-1 (mod 2).
PolarArg x_of_j(const IdentityCase& c, std::int64_t n, int j);

/// Residue at s = 0 (simple-pole classes): -zeta(-r)/2.
double residue_0(const IdentityCase& c);

/// Residue at s = 1/k: (1/k) Gamma(1/k) zeta(1/k - r) x^{-1/k}.
double residue_1_over_k(const IdentityCase& c);

/// Residue at s = 1+r:  r! zeta(k(1+r)) x^{-(1+r)} for r >= 0, and
/// (-1)^{1+r}/(-(1+r))! * k zeta'(k(1+r)) x^{-(1+r)} for r < 0.
double residue_1_plus_r(const IdentityCase& c);

/// Double-pole residue at s = 0 for the r = -1 classes:
/// (1/2) log(x / (2 pi)^k).
double residue_log(const IdentityCase& c);

/// Finite Bernoulli residue sum R of the (k odd, r odd) theorem:
/// 0 for r >= 1, the exact-rational double sum for r <= -3.
double residue_R_odd(const IdentityCase& c);

/// The Meijer-G series term of the theorems with r != -1.  Conjugate
/// (j, -j) pairs are combined into real contributions; if imag_leak is
/// non-null it receives the imaginary accumulation observed before
/// pairing, relative to the accumulated term magnitude.
SumResult rhs_g_series(const IdentityCase& c, const TruncationPolicy& policy,
                       const QuadraturePolicy& qpolicy,
                       double* imag_leak = nullptr);

/// The log series of the r = -1 theorems (without the residue terms).
SumResult rhs_log_series(const IdentityCase& c, const TruncationPolicy& policy,
                         double* imag_leak = nullptr);

struct VerificationReport {
    SumResult lhs;
    double rhs_total = 0.0;
    std::map<std::string, double> rhs_terms;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
};

/// Evaluate both sides of the identity for the case's parity class and
/// report the residual.  Reports, never asserts.
VerificationReport verify(const IdentityCase& c, const TruncationPolicy& policy,
                          const QuadraturePolicy& qpolicy);

/// zeta(1/2) from Ramanujan's identity at parameter alpha
/// (beta = 4 pi^3 / alpha).
double zeta_half_via_ramanujan(double alpha, const TruncationPolicy& policy);

/// RHS of Wigert's formula for sum_n 1/(e^{n^k x} - 1), k >= 2 even.
double wigert_rhs(int k, double x, const TruncationPolicy& policy);

/// Residual report for the zeta(-1/2) identity at parameter alpha.
/// rhs_terms["zeta_minus_half_solved"] carries the value of zeta(-1/2)
/// implied by the identity.
VerificationReport zeta_minus_half_identity(double alpha,
                                            const TruncationPolicy& policy);

/// Residual report for Ramanujan's odd-zeta formula at (m, x).
VerificationReport ramanujan_odd_zeta_check(int m, double x,
                                            const TruncationPolicy& policy);

/// Eisenstein-type identity at (m, alpha), beta = pi^2 / alpha.
VerificationReport eisenstein_identity(int m, double alpha);

/// Dedekind-eta log transformation at alpha, beta = pi^2 / alpha.
VerificationReport dedekind_identity(double alpha);

/// Schloemilch's identity at alpha, beta = pi^2 / alpha.
VerificationReport schlomilch_identity(double alpha);

} // namespace zetalab

#endif

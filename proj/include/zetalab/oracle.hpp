#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zetalab/arith.hpp"

namespace zetalab {
namespace oracle {

// Independent cross-checks: these deliberately avoid the fast paths of
// the main library (different quadrature, brute-force divisor counting,
// separately-written constant evaluators).

struct OracleConfig {
    double line_c = 0.0;  // 0 = choose automatically
    double height_T = 48.0;
    double step_h = 0.05;
    std::int64_t series_cap = 2'000'000;
};

// Evaluates sum_n S_{k,r}(n) e^{-nx} as the Mellin inversion integral
// (1/2πi) ∫ Γ(s) ζ(ks) ζ(s−r) x^{−s} ds along Re s = c, with c to the
// right of every pole. Trapezoid rule, no pole subtraction.
double mellin_inversion(const DivisorSpec& spec, double x,
                        const OracleConfig& cfg = {});

// O(n) per-value divisor sums by direct divisor enumeration.
double brute_divisor_d(const DivisorSpec& spec, std::int64_t n);
double brute_divisor_s(const DivisorSpec& spec, std::int64_t n);

// High-accuracy reference constants computed with locally-written code
// (independent of zetalab::zeta_real): keys zeta_half, zeta_minus_half,
// zeta_3, zeta_5, zeta_7, euler_gamma.
std::map<std::string, double> reference_constants();

} // namespace oracle
} // namespace zetalab

#include "zetalab/identities.hpp"

#include <cmath>

namespace zetalab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double parity_sign(long e) { return (((e % 2) + 2) % 2 == 0) ? 1.0 : -1.0; }

Complex i_pow(int j) {
    switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

void require_x(const IdentityCase& c) {
    if (c.x <= 0.0)
        throw DomainError("identity case: x must be positive");
}

} // namespace

ParityClass classify(const IdentityCase& c) {
    if (c.k < 1)
        throw DomainError("identity case: k must be >= 1");
    require_x(c);
    const bool k_even = c.k % 2 == 0;
    if (c.r == -1)
        return k_even ? ParityClass::EvenNegOne : ParityClass::OddNegOne;
    const bool r_odd = ((c.r % 2) + 2) % 2 == 1;
    if (k_even)
        return r_odd ? ParityClass::EvenOdd : ParityClass::EvenEven;
    if (r_odd)
        return ParityClass::OddOdd;
    throw DomainError("unsupported parity class: k odd with r even has no "
                      "transformation formula of this shape");
}

PolarArg x_of_j(const IdentityCase& c, std::int64_t n, int j) {
    if (std::abs(j) > c.k - 1 ||
        (((j - (c.k - 1)) % 2) + 2) % 2 != 0)
        throw DomainError("x_of_j: j outside the double-primed range");
    PolarArg z;
    z.modulus = std::pow(kTwoPi, c.k + 1) * double(n) /
                (std::pow(double(c.k), double(c.k)) * c.x);
    z.angle = -kPi * j / 2.0;
    return z;
}

double residue_0(const IdentityCase& c) {
    if (c.r == -1)
        throw DomainError("residue_0: not defined for r = -1");
    return -0.5 * zeta_real(-double(c.r));
}

double residue_1_over_k(const IdentityCase& c) {
    require_x(c);
    return gamma(Complex(1.0 / c.k, 0.0)).real() / c.k *
           zeta_real(1.0 / c.k - c.r) * std::pow(c.x, -1.0 / c.k);
}

double residue_1_plus_r(const IdentityCase& c) {
    if (c.r == -1)
        throw DomainError("residue_1_plus_r: not defined for r = -1");
    require_x(c);
    const double xp = std::pow(c.x, -double(1 + c.r));
    if (c.r >= 0) {
        double rfact = 1.0;
        for (int i = 2; i <= c.r; ++i)
            rfact *= i;
        return rfact * zeta_real(double(c.k) * (1.0 + c.r)) * xp;
    }
    // 1+r is a negative integer; zeta(k(1+r)) has a trivial zero there
    // and the pole of Gamma leaves k zeta'(k(1+r)) behind.
    double fact = 1.0;
    for (int i = 2; i <= -(1 + c.r); ++i)
        fact *= i;
    return parity_sign(1 + c.r) / fact * c.k *
           zeta_prime_neg_even(c.k * (1 + c.r)) * xp;
}

double residue_log(const IdentityCase& c) {
    if (c.r != -1)
        throw DomainError("residue_log: only defined for r = -1");
    require_x(c);
    return 0.5 * std::log(c.x / std::pow(kTwoPi, double(c.k)));
}

double residue_R_odd(const IdentityCase& c) {
    const ParityClass cls = classify(c);
    if (cls != ParityClass::OddOdd)
        throw DomainError("residue_R_odd: requires k odd, r odd, r != -1");
    if (c.r >= 1)
        return 0.0;
    // Sum of the residues of Gamma(s) zeta(ks) zeta(s-r) x^{-s} at the
    // odd negative integers s = -1, -3, ..., r.  zeta at odd negative
    // integers comes from exact Bernoulli rationals, zeta at the
    // remaining (non-negative even) points from zeta_real.
    double total = 0.0;
    double fact = 1.0; // (2i+1)!
    for (int i = 0; i <= -(1 + c.r) / 2; ++i) {
        if (i > 0)
            fact *= (2 * i) * (2 * i + 1);
        const int a = c.k * (2 * i + 1); // zeta(-a), a odd since k odd
        const BigRational zeta_neg =
            -bernoulli(a + 1) / (a + 1); // zeta(-a) exact
        const double z2 = zeta_real(double(-2 * i - 1 - c.r));
        total += -1.0 / fact * zeta_neg.convert_to<double>() * z2 *
                 std::pow(c.x, double(2 * i + 1));
    }
    return total;
}

SumResult rhs_g_series(const IdentityCase& c, const TruncationPolicy& policy,
                       const QuadraturePolicy& qpolicy, double* imag_leak) {
    const ParityClass cls = classify(c);
    if (cls == ParityClass::EvenNegOne || cls == ParityClass::OddNegOne)
        throw DomainError("rhs_g_series: r = -1 uses rhs_log_series");

    const int k = c.k, r = c.r;
    std::vector<double> b{double(r)};
    for (int l = 1; l < k; ++l)
        b.push_back(-double(l) / k);
    MellinBarnesGrid grid(k, b, qpolicy);

    const long sign_exp = (cls == ParityClass::EvenEven)
                              ? (long(k) + r - 2) / 2
                              : (2L * k + r - 1) / 2;
    const double prefactor = parity_sign(sign_exp) *
                             std::pow(kTwoPi, (k + 1 - 2.0 * r) / 2.0) /
                             (c.x * std::pow(double(k), k - 0.5));
    const bool minus_j = (cls == ParityClass::OddOdd);
    const double scale =
        std::pow(kTwoPi, k + 1.0) / (std::pow(double(k), double(k)) * c.x);
    const DivisorSpec s_spec{k, r};
    const double tol_inner =
        std::max(policy.abs_tol, 1e-15) / (std::abs(prefactor) * 2.0 * k);

    double total = 0.0, tail_total = 0.0, leak = 0.0, leak_scale = 0.0;
    std::int64_t terms = 0;
    for (int j = k - 1; j >= 0; j -= 2) {
        // Evaluate the j-term of the paired sum; its mirror (-j) is the
        // exact conjugate, so the pair contributes 2 Re (j > 0) or the
        // real part alone (j = 0, odd k only).
        const double angle = (minus_j ? 1.0 : -1.0) * kPi * j / 2.0;
        const Complex w = (cls == ParityClass::EvenEven) ? Complex(1.0, 0.0)
                                                         : i_pow(j);
        Complex jsum(0.0, 0.0);
        double prev_mag = 0.0, tail_j = INFINITY;
        std::int64_t n_used = 0;
        for (std::int64_t n = 1;; ++n) {
            if (n > policy.max_terms)
                throw ConvergenceError("rhs_g_series: n-series did not converge");
            const PolarArg z{scale * double(n), angle};
            const Complex g = grid.eval(z);
            const Complex contrib = divisor_s(s_spec, n) * (w * g);
            jsum += contrib;
            ++terms;
            n_used = n;
            const double mag = std::abs(contrib);
            if (n >= 3 && mag < tol_inner && prev_mag < tol_inner) {
                const double rho = (prev_mag > 0.0) ? mag / prev_mag : 0.0;
                if (rho < 1.0) {
                    tail_j = mag * rho / (1.0 - rho);
                    if (tail_j < tol_inner)
                        break;
                }
            }
            prev_mag = mag;
        }
        if (imag_leak) {
            // Re-evaluate the mirror term explicitly to measure how well
            // conjugation symmetry holds before pairing.
            Complex mirror(0.0, 0.0);
            const Complex wm = (cls == ParityClass::EvenEven)
                                   ? Complex(1.0, 0.0)
                                   : i_pow(-j);
            for (std::int64_t n = 1; n <= n_used; ++n) {
                const PolarArg z{scale * double(n), -angle};
                mirror += divisor_s(s_spec, n) * (wm * grid.eval(z));
            }
            leak += (j > 0) ? std::abs((jsum + mirror).imag())
                            : std::abs(jsum.imag());
            leak_scale += (j > 0) ? std::abs(jsum) + std::abs(mirror)
                                  : std::abs(jsum);
        }
        total += (j > 0) ? 2.0 * jsum.real() : jsum.real();
        tail_total += ((j > 0) ? 2.0 : 1.0) * tail_j;
    }
    if (imag_leak)
        *imag_leak = leak / std::max(leak_scale, 1e-300);
    SumResult res;
    res.value = prefactor * total;
    res.tail_bound = std::abs(prefactor) * tail_total;
    res.terms_used = terms;
    return res;
}

SumResult rhs_log_series(const IdentityCase& c, const TruncationPolicy& policy,
                         double* imag_leak) {
    const ParityClass cls = classify(c);
    if (cls != ParityClass::EvenNegOne && cls != ParityClass::OddNegOne)
        throw DomainError("rhs_log_series: only defined for r = -1");
    const int k = c.k;
    const bool k_even = (cls == ParityClass::EvenNegOne);
    const double mu = std::pow(kTwoPi, 1.0 + 1.0 / k) * std::pow(c.x, -1.0 / k);

    double total = 0.0, tail_total = 0.0, leak = 0.0, leak_scale = 0.0;
    std::int64_t terms = 0;
    for (int j = k - 1; j >= 0; j -= 2) {
        // k even: phase e^{-i pi j/(2k)}; k odd: phase e^{+i pi j/(2k)}.
        const double phase = (k_even ? -1.0 : 1.0) * kPi * j / (2.0 * k);
        const double decay = std::cos(kPi * j / (2.0 * k)); // > 0 for |j| <= k-1
        Complex lsum(0.0, 0.0);
        double tail_j = INFINITY;
        for (std::int64_t m = 1;; ++m) {
            if (m > policy.max_terms)
                throw ConvergenceError("rhs_log_series: m-series did not converge");
            const double radial = mu * std::pow(double(m), 1.0 / k);
            const Complex inner =
                std::exp(-radial * Complex(std::cos(phase), std::sin(phase)));
            lsum += std::log(1.0 - inner);
            ++terms;
            const double mag = std::exp(-decay * radial);
            if (m >= 2 && mag < policy.abs_tol / 10.0) {
                // log(1-y) ~ -y; geometric in e^{-c m^{1/k}}
                tail_j = 2.0 * mag;
                break;
            }
        }
        if (imag_leak) {
            // the j > 0 pairs cancel imaginary parts exactly by
            // conjugation; only the lone j = 0 term can leak
            leak += (j > 0) ? 0.0 : std::abs(lsum.imag());
            leak_scale += std::abs(lsum);
        }
        const double pair = (j > 0) ? 2.0 * lsum.real() : lsum.real();
        // k even: (-1)^k e^{i pi j} = -1 on odd j.   k odd: leading minus.
        total += -pair;
        tail_total += ((j > 0) ? 2.0 : 1.0) * tail_j;
    }
    if (imag_leak)
        *imag_leak = leak / std::max(leak_scale, 1e-300);
    SumResult res;
    res.value = total;
    res.tail_bound = tail_total;
    res.terms_used = terms;
    return res;
}

VerificationReport verify(const IdentityCase& c, const TruncationPolicy& policy,
                          const QuadraturePolicy& qpolicy) {
    const ParityClass cls = classify(c);
    VerificationReport rep;
    rep.lhs = lambert_sum(DivisorSpec{c.k, c.r}, c.x, policy);
    auto& t = rep.rhs_terms;
    t = {{"residue_0", 0.0},        {"residue_1_over_k", 0.0},
         {"residue_1_plus_r", 0.0}, {"residue_R", 0.0},
         {"residue_log", 0.0},      {"g_series", 0.0}};
    t["residue_1_over_k"] = residue_1_over_k(c);
    switch (cls) {
    case ParityClass::EvenEven:
    case ParityClass::EvenOdd:
    case ParityClass::OddOdd: {
        t["residue_0"] = residue_0(c);
        t["residue_1_plus_r"] = residue_1_plus_r(c);
        if (cls == ParityClass::OddOdd)
            t["residue_R"] = residue_R_odd(c);
        t["g_series"] = rhs_g_series(c, policy, qpolicy).value;
        break;
    }
    case ParityClass::EvenNegOne:
        t["residue_log"] = residue_log(c);
        t["g_series"] = rhs_log_series(c, policy).value;
        break;
    case ParityClass::OddNegOne:
        t["residue_log"] = residue_log(c);
        // residue of the integrand at s = -1: zeta(-k) x / 2.
        t["residue_R"] = zeta_real(-double(c.k)) * c.x / 2.0;
        t["g_series"] = rhs_log_series(c, policy).value;
        break;
    }
    rep.rhs_total = 0.0;
    for (const auto& [name, value] : t)
        rep.rhs_total += value;
    rep.abs_residual = std::abs(rep.lhs.value - rep.rhs_total);
    const double denom = std::max(std::abs(rep.lhs.value), std::abs(rep.rhs_total));
    rep.rel_residual = denom > 0.0 ? rep.abs_residual / denom : rep.abs_residual;
    return rep;
}

double zeta_half_via_ramanujan(double alpha, const TruncationPolicy& policy) {
    if (alpha <= 0.0)
        throw DomainError("zeta_half_via_ramanujan: alpha must be positive");
    const double beta = 4.0 * kPi * kPi * kPi / alpha;
    const SumResult lhs = lambert_sum(DivisorSpec{2, 0}, alpha, policy);
    double trig = 0.0;
    for (std::int64_t m = 1;; ++m) {
        if (m > policy.max_terms)
            throw ConvergenceError("zeta_half_via_ramanujan: series did not converge");
        const double s = std::sqrt(double(m) * beta);
        const double num = std::cos(s) - std::sin(s) - std::exp(-s);
        const double den = std::sqrt(double(m)) * (std::cosh(s) - std::cos(s));
        trig += num / den;
        if (4.0 * std::exp(-s) < policy.abs_tol)
            break;
    }
    return 4.0 * kPi / std::sqrt(beta) *
               (lhs.value - 0.25 - kPi * kPi / (6.0 * alpha)) -
           trig;
}

namespace {

// Lbar_k(w) = sum_m m^{1/k-1} / (exp(w m^{1/k}) - 1), Re w > 0.
Complex wigert_lbar(int k, Complex w, const TruncationPolicy& policy) {
    Complex sum(0.0, 0.0);
    for (std::int64_t m = 1;; ++m) {
        if (m > policy.max_terms)
            throw ConvergenceError("wigert_rhs: L-bar series did not converge");
        const double root = std::pow(double(m), 1.0 / k);
        sum += std::pow(double(m), 1.0 / k - 1.0) / (std::exp(w * root) - 1.0);
        if (2.0 * std::exp(-w.real() * root) < policy.abs_tol)
            break;
    }
    return sum;
}

} // namespace

double wigert_rhs(int k, double x, const TruncationPolicy& policy) {
    if (k < 2 || k % 2 != 0)
        throw DomainError("wigert_rhs: k must be even and >= 2");
    if (x <= 0.0)
        throw DomainError("wigert_rhs: x must be positive");
    double total = zeta_real(double(k)) / x +
                   gamma(Complex(1.0 / k, 0.0)).real() / k *
                       zeta_real(1.0 / k) * std::pow(x, -1.0 / k) +
                   0.25;
    const double w0 = kTwoPi * std::pow(kTwoPi / x, 1.0 / k);
    double phased = 0.0;
    for (int j = 0; j <= k / 2 - 1; ++j) {
        const double u = kPi * (2 * j + 1) / (2.0 * k);
        const Complex warg = w0 * Complex(std::cos(u), -std::sin(u));
        const Complex phase(std::cos(u * (k - 1)), std::sin(u * (k - 1)));
        phased += 2.0 * (phase * wigert_lbar(k, warg, policy)).real();
    }
    total += parity_sign(k / 2 - 1) / k * std::pow(kTwoPi / x, 1.0 / k) * phased;
    return total;
}

VerificationReport zeta_minus_half_identity(double alpha,
                                            const TruncationPolicy& policy) {
    if (alpha <= 0.0)
        throw DomainError("zeta_minus_half_identity: alpha must be positive");
    const double beta = 4.0 * kPi * kPi * kPi / alpha;
    VerificationReport rep;
    // LHS: sum_n (1/n^2) d/d alpha (1/(1 - e^{n^2 alpha}))
    //    = sum_n e^{n^2 alpha} / (e^{n^2 alpha} - 1)^2, via the closed-form
    // derivative (no numerical differentiation).
    double lhs = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t n = 1;; ++n) {
        const double w = double(n) * double(n) * alpha;
        if (w > 700.0)
            break;
        const double em1 = std::expm1(w);
        lhs += (em1 + 1.0) / (em1 * em1);
        ++terms;
        if (n >= 2 && 2.0 * std::exp(-w) < policy.abs_tol)
            break;
    }
    rep.lhs = SumResult{lhs, policy.abs_tol, terms};

    double series = 0.0;
    for (std::int64_t m = 1;; ++m) {
        if (m > policy.max_terms)
            throw ConvergenceError("zeta_minus_half_identity: series did not converge");
        const double s = std::sqrt(double(m) * beta);
        if (s > 700.0)
            break;
        const double ch = std::cosh(s), co = std::cos(s);
        const double sh = std::sinh(s), si = std::sin(s);
        const double part1 = (co + si - std::exp(-s)) / (s * (ch - co));
        const double d2 = (co * ch - 1.0) * (co * ch - 1.0) + si * sh * si * sh;
        const double part2 = 2.0 * si * sh / d2;
        series += (part1 + part2) / double(m);
        if (6.0 * std::exp(-s) / double(m) < policy.abs_tol)
            break;
    }
    const double series_term = -kPi / (4.0 * alpha) * series;
    const double constant = 1.0 / 24.0;
    const double r2 = std::pow(kPi, 4.0) / (90.0 * alpha * alpha);
    const double zcoef = std::sqrt(beta) / (4.0 * kPi);
    rep.rhs_terms["constant"] = constant;
    rep.rhs_terms["zeta_term"] = zcoef * zeta_real(-0.5);
    rep.rhs_terms["residue_1_plus_r"] = r2;
    rep.rhs_terms["series"] = series_term;
    rep.rhs_terms["zeta_minus_half_solved"] =
        (lhs - constant - r2 - series_term) / zcoef;
    rep.rhs_total = constant + rep.rhs_terms["zeta_term"] + r2 + series_term;
    rep.abs_residual = std::abs(lhs - rep.rhs_total);
    rep.rel_residual = rep.abs_residual / std::max(std::abs(lhs), 1e-300);
    return rep;
}

VerificationReport ramanujan_odd_zeta_check(int m, double x,
                                            const TruncationPolicy& policy) {
    if (m < 1)
        throw DomainError("ramanujan_odd_zeta_check: m must be >= 1");
    if (x <= 0.0)
        throw DomainError("ramanujan_odd_zeta_check: x must be positive");
    const double z = zeta_real(2.0 * m + 1.0);
    const DivisorSpec spec{1, -(2 * m + 1)};
    const SumResult near = lambert_sum(spec, x, policy);
    const SumResult far = lambert_sum(spec, 4.0 * kPi * kPi / x, policy);
    VerificationReport rep;
    rep.lhs = SumResult{near.value + 0.5 * z,
                        near.tail_bound, near.terms_used};
    const double sgn = parity_sign(m);
    const double mirror = sgn * std::pow(x / kTwoPi, 2.0 * m) *
                          (0.5 * z + far.value);
    // Bernoulli sum with exact rational coefficients.
    double bern = 0.0;
    for (int i = 0; i <= m + 1; ++i) {
        BigRational coef = bernoulli(2 * i) * bernoulli(2 * m + 2 - 2 * i);
        BigRational fact = 1;
        for (int q = 2; q <= 2 * i; ++q)
            fact *= q;
        for (int q = 2; q <= 2 * m + 2 - 2 * i; ++q)
            fact *= q;
        coef /= fact;
        const double term = parity_sign(i + 1) * coef.convert_to<double>() *
                            std::pow(x, 2.0 * m + 1.0) *
                            std::pow(kTwoPi / x, 2.0 * i);
        bern += term;
    }
    rep.rhs_terms["mirror_sum"] = mirror;
    rep.rhs_terms["bernoulli_sum"] = 0.5 * bern;
    rep.rhs_total = mirror + 0.5 * bern;
    rep.abs_residual = std::abs(rep.lhs.value - rep.rhs_total);
    rep.rel_residual =
        rep.abs_residual / std::max(std::abs(rep.lhs.value), 1e-300);
    return rep;
}

VerificationReport eisenstein_identity(int m, double alpha) {
    if (m < 1)
        throw DomainError("eisenstein_identity: m must be >= 1");
    if (alpha <= 0.0)
        throw DomainError("eisenstein_identity: alpha must be positive");
    const double beta = kPi * kPi / alpha;
    TruncationPolicy policy;
    policy.abs_tol = 1e-15;
    const DivisorSpec spec{1, 2 * m + 1};
    const SumResult a = lambert_sum(spec, 2.0 * alpha, policy);
    const SumResult b = lambert_sum(spec, 2.0 * beta, policy);
    const double am = std::pow(alpha, m + 1.0);
    const double bm = parity_sign(m + 1) * std::pow(beta, m + 1.0); // (-beta)^{m+1}
    VerificationReport rep;
    rep.lhs = SumResult{am * a.value - bm * b.value,
                        am * a.tail_bound + std::abs(bm) * b.tail_bound,
                        a.terms_used + b.terms_used};
    rep.rhs_terms["bernoulli_term"] =
        (am - bm) * bernoulli_d(2 * m + 2) / (4.0 * m + 4.0);
    rep.rhs_total = rep.rhs_terms["bernoulli_term"];
    rep.abs_residual = std::abs(rep.lhs.value - rep.rhs_total);
    rep.rel_residual =
        rep.abs_residual / std::max(std::abs(rep.rhs_total), 1e-300);
    return rep;
}

VerificationReport dedekind_identity(double alpha) {
    if (alpha <= 0.0)
        throw DomainError("dedekind_identity: alpha must be positive");
    const double beta = kPi * kPi / alpha;
    TruncationPolicy policy;
    policy.abs_tol = 1e-16;
    const DivisorSpec spec{1, -1};
    const SumResult a = lambert_sum(spec, 2.0 * alpha, policy);
    const SumResult b = lambert_sum(spec, 2.0 * beta, policy);
    VerificationReport rep;
    rep.lhs = SumResult{a.value - b.value, a.tail_bound + b.tail_bound,
                        a.terms_used + b.terms_used};
    rep.rhs_terms["linear_term"] = (beta - alpha) / 12.0;
    rep.rhs_terms["log_term"] = 0.25 * std::log(alpha / beta);
    rep.rhs_total = rep.rhs_terms["linear_term"] + rep.rhs_terms["log_term"];
    rep.abs_residual = std::abs(rep.lhs.value - rep.rhs_total);
    rep.rel_residual =
        rep.abs_residual / std::max(std::abs(rep.rhs_total), 1e-300);
    return rep;
}

VerificationReport schlomilch_identity(double alpha) {
    if (alpha <= 0.0)
        throw DomainError("schlomilch_identity: alpha must be positive");
    const double beta = kPi * kPi / alpha;
    TruncationPolicy policy;
    policy.abs_tol = 1e-16;
    const DivisorSpec spec{1, 1};
    const SumResult a = lambert_sum(spec, 2.0 * alpha, policy);
    const SumResult b = lambert_sum(spec, 2.0 * beta, policy);
    VerificationReport rep;
    rep.lhs = SumResult{alpha * a.value + beta * b.value,
                        alpha * a.tail_bound + beta * b.tail_bound,
                        a.terms_used + b.terms_used};
    rep.rhs_terms["linear_term"] = (alpha + beta) / 24.0;
    rep.rhs_terms["constant"] = -0.25;
    rep.rhs_total = rep.rhs_terms["linear_term"] + rep.rhs_terms["constant"];
    rep.abs_residual = std::abs(rep.lhs.value - rep.rhs_total);
    rep.rel_residual =
        rep.abs_residual / std::max(std::abs(rep.rhs_total), 1e-300);
    return rep;
}

} // namespace zetalab

#include "zetalab/meijerg.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMaxHeight = 400.0;
} // namespace

Complex PolarArg::value() const {
    return Complex(modulus * std::cos(angle), modulus * std::sin(angle));
}

MellinBarnesGrid::MellinBarnesGrid(int order_k, std::vector<double> b_params,
                                   const QuadraturePolicy& policy)
    : k_(order_k), b_(std::move(b_params)), h_(policy.step_h),
      tol_(policy.tol), fixed_height_(policy.height_T > 0.0) {
    if (k_ < 1 || int(b_.size()) != k_)
        throw DomainError("MellinBarnesGrid: b_params length must equal order_k");
    const double bmin = *std::min_element(b_.begin(), b_.end());
    c_ = policy.abscissa_c > 0.0 ? policy.abscissa_c
                                 : std::max(0.0, -bmin) + 0.75;
    if (c_ + bmin <= 0.0)
        throw DomainError("MellinBarnesGrid: abscissa not right of all poles");

    // The integrand decays like e^{-(k pi/2 - |arg z|)|T|}; the slowest
    // admissible decay over the identity series is pi/2 (at
    // |arg z| = (k-1) pi/2), so size the grid against that rate.
    const double theta_worst = (k_ - 1) * kPi / 2.0;
    auto prod_at = [&](double t) {
        Complex lg(0.0, 0.0);
        for (double b : b_)
            lg += log_gamma(Complex(c_ + b, t));
        return std::exp(lg);
    };
    double T = policy.height_T > 0.0 ? policy.height_T : 10.0;
    auto fill_to = [&](double target) {
        const std::size_t need = std::size_t(std::ceil(target / h_)) + 1;
        while (half_.size() < need)
            half_.push_back(prod_at(double(half_.size()) * h_));
    };
    fill_to(T);
    if (policy.height_T <= 0.0) {
        // Grow until the analytic tail bound, with the worst-case
        // arg-z growth factored in, is far below tolerance.
        for (;;) {
            const double t_end = double(half_.size() - 1) * h_;
            const double tail = std::abs(half_.back()) *
                                std::exp(theta_worst * t_end) / (kPi / 2.0);
            if (tail < tol_ / 10.0 || t_end >= kMaxHeight)
                break;
            fill_to(t_end * 1.5);
        }
    }
    t_max_ = double(half_.size() - 1) * h_;
    // Mirror: Gamma products at -T are conjugates of those at +T.
    gamma_prod_.resize(2 * half_.size() - 1);
    const std::size_t mid = half_.size() - 1;
    for (std::size_t i = 0; i < half_.size(); ++i) {
        gamma_prod_[mid + i] = half_[i];
        gamma_prod_[mid - i] = std::conj(half_[i]);
    }
}

void MellinBarnesGrid::grow_to(double target) const {
    const std::size_t need = std::size_t(std::ceil(target / h_)) + 1;
    while (half_.size() < need) {
        Complex lg(0.0, 0.0);
        const double t = double(half_.size()) * h_;
        for (double b : b_)
            lg += log_gamma(Complex(c_ + b, t));
        half_.push_back(std::exp(lg));
    }
    t_max_ = double(half_.size() - 1) * h_;
    gamma_prod_.resize(2 * half_.size() - 1);
    const std::size_t mid = half_.size() - 1;
    for (std::size_t i = 0; i < half_.size(); ++i) {
        gamma_prod_[mid + i] = half_[i];
        gamma_prod_[mid - i] = std::conj(half_[i]);
    }
}

Complex MellinBarnesGrid::eval(const PolarArg& z) const {
    const double theta = z.angle;
    if (std::abs(theta) >= k_ * kPi / 2.0)
        throw DomainError("eval_mb: |arg z| must be below k pi / 2");
    const double decay_rate = k_ * kPi / 2.0 - std::abs(theta);
    // Arguments closer to the sector boundary than the worst case the
    // grid was sized for need a taller contour; extend it on demand.
    if (!fixed_height_) {
        while (t_max_ < kMaxHeight &&
               std::abs(gamma_prod_.back()) * std::pow(z.modulus, -c_) *
                       std::exp(std::abs(theta) * t_max_) /
                       (decay_rate * kPi) >
                   tol_ / 2.0)
            grow_to(t_max_ * 1.5);
    }
    // Integrand along s = c + it:  gamma_prod(t) * exp(-(c + it) log z)
    //   = gamma_prod(t) * e^{-c ln|z| + t theta} e^{-i(t ln|z| + c theta)}.
    // Each node's phase is computed directly (not by a multiplicative
    // recurrence) so that eval at -theta is the exact numerical
    // conjugate of eval at +theta; the identity series relies on that
    // cancellation when it pairs (j, -j) terms.
    // Nodes are summed in (t, -t) pairs, innermost first, so that the
    // result at -theta is the exact numerical conjugate of the result
    // at +theta and the t = 0 contribution of a real argument is
    // exactly real.
    const double log_m = std::log(z.modulus);
    const std::size_t m = gamma_prod_.size();
    const std::size_t mid = (m - 1) / 2;
    auto node = [&](std::size_t i) {
        const double t = (double(i) - double(mid)) * h_;
        const double amp = std::exp(-c_ * log_m + t * theta);
        const double phase = -(t * log_m + c_ * theta);
        const Complex w(amp * std::cos(phase), amp * std::sin(phase));
        return gamma_prod_[i] * w;
    };
    Complex sum = node(mid);
    for (std::size_t d = 1; d <= mid; ++d) {
        const Complex pair = node(mid + d) + node(mid - d);
        sum += (d == mid) ? 0.5 * pair : pair;
    }
    const Complex value = sum * (h_ / kTwoPi);
    // Tail beyond the grid: |f| at the endpoint divided by the decay rate.
    const double endpoint =
        std::abs(gamma_prod_.back()) * std::pow(z.modulus, -c_) *
        std::exp(std::abs(theta) * t_max_);
    const double tail = endpoint / decay_rate / kPi;
    if (tail > tol_)
        throw ConvergenceError("eval_mb: tail estimate exceeds tolerance at grid height");
    return value;
}

double MellinBarnesGrid::envelope(double theta) const {
    double acc = 0.0;
    const std::size_t mid = (gamma_prod_.size() - 1) / 2;
    for (std::size_t i = 0; i < gamma_prod_.size(); ++i) {
        const double t = (double(i) - double(mid)) * h_;
        acc += std::abs(gamma_prod_[i]) * std::exp(theta * t);
    }
    return acc * h_ / kTwoPi;
}

Complex eval_mb(const GSpec& spec, const QuadraturePolicy& policy) {
    MellinBarnesGrid grid(spec.order_k, spec.b_params, policy);
    return grid.eval(spec.argument);
}

Complex eval_closed_progression(double b, int order_k, const PolarArg& z) {
    const int k = order_k;
    if (std::abs(z.angle) >= k * kPi / 2.0)
        throw DomainError("eval_closed_progression: |arg z| must be below k pi / 2");
    const Complex log_z(std::log(z.modulus), z.angle);
    const Complex zb = std::exp(b * log_z);
    // principal k-th root: modulus^{1/k} e^{i angle / k}
    const Complex root = std::pow(z.modulus, 1.0 / k) *
                         std::exp(Complex(0.0, z.angle / k));
    return std::pow(kTwoPi, (k - 1) / 2.0) / std::sqrt(double(k)) * zb *
           std::exp(-double(k) * root);
}

Complex bessel_k_half(int nu_times_2, Complex w) {
    if (w.real() <= 0.0)
        throw DomainError("bessel_k_half: Re w must be positive");
    const Complex base = std::sqrt(kPi / (2.0 * w)) * std::exp(-w);
    switch (nu_times_2) {
    case 1:
        return base;
    case 3:
        return base * (1.0 + 1.0 / w);
    default:
        throw DomainError("bessel_k_half: only nu = 1/2 and 3/2 supported");
    }
}

} // namespace zetalab

#ifndef ZETALAB_MEIJERG_HPP
#define ZETALAB_MEIJERG_HPP

#include <vector>

#include "zetalab/specfun.hpp"

namespace zetalab {

/// Complex argument carried as modulus plus explicit angle so that
/// angles beyond pi stay representable (|arg z| < k pi/2 can exceed pi
/// for k >= 3).
struct PolarArg {
    double modulus = 1.0;
    double angle = 0.0;

    Complex value() const;
};

/// A Meijer G^{k,0}_{0,k} instance.
struct GSpec {
    int order_k = 1;
    std::vector<double> b_params;
    PolarArg argument;
};

struct QuadraturePolicy {
    double abscissa_c = 0.0; // <= 0 means "choose automatically"
    double height_T = 0.0;   // 0 means "grow until the tail bound holds"
    double step_h = 0.05;
    double tol = 1e-12;
};

/// Gamma-factor products sampled along the vertical line Re s = c.
/// Building the grid is the expensive part; evaluating the quadrature
/// for a particular argument z reuses it, which is what makes per-n
/// evaluation of the G-series cheap.
class MellinBarnesGrid {
  public:
    MellinBarnesGrid(int order_k, std::vector<double> b_params,
                     const QuadraturePolicy& policy);

    /// (1/2 pi i) int Prod_j Gamma(s + b_j) z^{-s} ds along Re s = c.
    /// Throws DomainError when |arg z| >= k pi / 2, ConvergenceError
    /// when the decay-based tail estimate exceeds the policy tolerance.
    Complex eval(const PolarArg& z) const;

    double abscissa() const { return c_; }

    /// Envelope constant C(theta) with |G(z)| <= C(theta) |z|^{-c} for
    /// every z with arg z = theta; used for per-term truncation
    /// certificates in the identity series.
    double envelope(double theta) const;

  private:
    void grow_to(double target) const;

    int k_;
    std::vector<double> b_;
    double c_;
    double h_;
    double tol_;
    bool fixed_height_;
    // lazily extended when an evaluation near the sector boundary needs
    // a taller contour than the construction-time worst case
    mutable std::vector<Complex> half_;       // at T = 0, h, 2h, ...
    mutable std::vector<Complex> gamma_prod_; // at T = -T_max .. T_max
    mutable double t_max_;
};

Complex eval_mb(const GSpec& spec, const QuadraturePolicy& policy);

/// Closed form for b-parameters in arithmetic progression
/// b, b+1/k, ..., b+(k-1)/k:
///   G = (2 pi)^{(k-1)/2} / sqrt(k) * z^b e^{-k z^{1/k}}.
Complex eval_closed_progression(double b, int order_k, const PolarArg& z);

/// Modified Bessel K of half-integer order (nu = nu_times_2 / 2,
/// nu_times_2 in {1, 3}), Re w > 0.
Complex bessel_k_half(int nu_times_2, Complex w);

} // namespace zetalab

#endif

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kpzlab::fredholm {

/// Gauss-Legendre quadrature rule on a finite interval [a, b].
///
/// Nodes and weights are computed by Newton iteration on the Legendre
/// polynomial; construction verifies the rule's own invariants (weight sum,
/// node interiority, and polynomial exactness to degree 2n-1 for small n)
/// and throws NumericError if any fails.
class QuadratureScheme {
 public:
  QuadratureScheme(int order, double a, double b);

  int order() const { return static_cast<int>(nodes_.size()); }
  double a() const { return a_; }
  double b() const { return b_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Integrate a callable over [a, b].
  template <typename F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      s += weights_[i] * f(nodes_[i]);
    }
    return s;
  }

 private:
  double a_, b_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Nodes/weights of the n-point rule on [-1, 1] (cached per order).
void gauss_legendre_reference(int order, std::vector<double>& nodes,
                              std::vector<double>& weights);

/// Integrate f over [a, b] with composite Gauss-Legendre panels, doubling the
/// panel count until two successive estimates agree to `tol` (absolute).
/// Throws NumericError if `max_panels` is exceeded.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double tol, int points_per_panel = 24,
                          int max_panels = 4096);

}  // namespace kpzlab::fredholm

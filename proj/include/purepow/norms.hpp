#ifndef PUREPOW_NORMS_HPP
#define PUREPOW_NORMS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "purepow/polyring.hpp"

namespace purepow {

/// Exact coefficient norms. All four fields are computed over the integers.
struct CoefficientNorms {
  Int l1;          // sum |a_k|
  Int l2_squared;  // sum a_k^2
  Int linf;        // max |a_k|
  std::size_t nonzero_count = 0;
};

CoefficientNorms coeff_norms(const IntPolynomial& p);

/// Certified interval around max_{|z|=1} |p(z)|.
///
/// lower = (grid max) - eval_epsilon, upper = (grid max) + pi*L/M + eval_epsilon
/// with L = sum k*|a_k| a bound on |d/dt p(e^{it})|, so the true sup-norm is
/// contained in [lower, upper]. eval_epsilon is the documented widening for
/// floating-point evaluation error (see eval_epsilon_on_grid).
struct SupNormEnclosure {
  double lower = 0.0;
  double upper = 0.0;
  double argmax_angle = 0.0;  // in [0, 2*pi); smallest angle wins ties
  std::size_t grid_size = 0;
  double lipschitz = 0.0;
  double eval_epsilon = 0.0;  // widening already applied to both ends

  double width() const { return upper - lower; }
};

/// p at the M-th roots of unity: values[k] = p(e^{2*pi*i*k/M}).
/// Coefficients are folded mod M exactly before any rounding, so the values
/// are correct for every M >= 1 (also when M <= degree). Power-of-two M uses
/// a radix-2 FFT, other M direct Horner evaluation.
std::vector<std::complex<double>> eval_on_grid(const IntPolynomial& p, std::size_t M);

/// Bound on |computed - true| for any single eval_on_grid output, from the
/// standard floating error model: c * u * ell1 * log2(M) for the FFT path,
/// c * u * ell1 * deg for Horner, with generous constants.
double eval_epsilon_on_grid(const IntPolynomial& p, std::size_t M);

/// Same bound for a single Horner evaluation at an arbitrary angle.
double eval_epsilon_at_point(const IntPolynomial& p);

/// (1/M) sum_{m<M} |p(e^{2*pi*i*m/M})|^2, Kahan-summed. Equals l2_squared up
/// to floating tolerance whenever M > degree (discrete Parseval).
double mean_square_on_grid(const IntPolynomial& p, std::size_t M);

/// Smallest power of two >= max(2^12, 4*(degree+1)).
std::size_t default_grid_size(const IntPolynomial& p);

SupNormEnclosure sup_norm_enclosure(const IntPolynomial& p, std::size_t M);

struct RefineResult {
  SupNormEnclosure enclosure;
  bool converged = false;       // width <= target reached before the cap
  std::size_t evaluations = 0;  // point evaluations spent
};

/// Shrinks the enclosure below target_width by Lipschitz branch-and-bound
/// seeded from the uniform grid: boxes around grid points are split where the
/// certified box maximum still exceeds the best sampled value. The returned
/// enclosure is intersected with the input, so it is never wider and its
/// lower end never moves down. Cap exhaustion is reported via converged.
RefineResult refine_enclosure(const IntPolynomial& p, const SupNormEnclosure& e,
                              double target_width, std::size_t eval_cap = 500000);

}  // namespace purepow

#endif

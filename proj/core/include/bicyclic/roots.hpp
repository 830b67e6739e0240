#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bicyclic {

using Complex = std::complex<double>;

struct RootFinderOptions {
  int max_iterations = 200;
  /// A root is settled once its Aberth correction drops below this (relative).
  double update_tol = 1e-13;
};

/// All roots of sum_p coeffs[p] z^p by Aberth-Ehrlich simultaneous iteration.
/// Coefficients are in ascending order and the leading one must be nonzero.
/// A root also counts as settled once |p(z)| is at rounding-error level, which
/// is what happens near multiple roots. Throws NumericalError when some root
/// is unsettled after max_iterations.
std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, const RootFinderOptions& opts = {});

/// Horner evaluation, ascending coefficients.
Complex poly_eval(std::span<const Complex> coeffs, Complex z);

/// Monic polynomial with the given roots (ascending coefficients).
std::vector<Complex> poly_from_roots(std::span<const Complex> roots);

}  // namespace bicyclic

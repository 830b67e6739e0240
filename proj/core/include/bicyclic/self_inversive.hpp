#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bicyclic/roots.hpp"

namespace bicyclic {

/// A polynomial D of nominal degree m with D(z) = w z^m conj(D(1/conj z)) for
/// some unimodular w, i.e. d_p = w conj(d_{m-p}). Coefficients are ascending.
/// The leading coefficient may vanish only together with the constant one
/// (a factor z^r), as happens for raked polynomials of lower effective degree.
class SelfInvPoly {
 public:
  /// Validates the self-inversive relation to relative tolerance `tol`.
  static SelfInvPoly from_coeffs(std::vector<Complex> coeffs, double tol = 1e-8);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator()(Complex z) const { return poly_eval(coeffs_, z); }

  /// The unimodular w in d_p = w conj(d_{m-p}).
  Complex unimodular_factor() const { return omega_; }

  /// Same polynomial scaled by a unimodular constant so that w == 1.
  SelfInvPoly balanced() const;

  /// max |d_p| over odd p != m/2, relative to max |d_p|.
  double raked_residual() const;
  /// max |Im d_p| relative to max |d_p|.
  double imag_residual() const;
  double max_abs_coeff() const;

 private:
  SelfInvPoly(std::vector<Complex> coeffs, Complex omega) : coeffs_(std::move(coeffs)), omega_(omega) {}

  std::vector<Complex> coeffs_;
  Complex omega_{1.0, 0.0};
};

struct RootEntry {
  Complex value;
  int multiplicity = 1;
};

/// Multiset of nonzero complex numbers, stored as (value, multiplicity) pairs.
class RootMultiset {
 public:
  RootMultiset() = default;
  explicit RootMultiset(std::vector<RootEntry> entries);

  /// Groups raw values by single-linkage within `radius`; each cluster becomes
  /// one entry at the cluster mean.
  static RootMultiset cluster(std::span<const Complex> values, double radius);

  const std::vector<RootEntry>& entries() const { return entries_; }
  int size() const;
  std::vector<Complex> expanded() const;

  /// M == conj(M)^-1 with matching multiplicities (tolerance relative to |zeta|).
  bool is_inverse_conjugate_closed(double tol = 1e-6) const;
  /// M == M^-1.
  bool is_inverse_closed(double tol = 1e-6) const;
  /// M == conj(M).
  bool is_conjugate_closed(double tol = 1e-6) const;

 private:
  std::vector<RootEntry> entries_;
};

/// Tolerances for root analysis of self-inversive polynomials.
struct RootOptions {
  RootFinderOptions finder;
  double cluster_radius = 1e-6;
  double circle_tol = 1e-8;
};

struct SelfInvRoots {
  RootMultiset roots;
  std::vector<RootEntry> on_circle;   // sorted by argument in [0, 2pi)
  std::vector<RootEntry> off_circle;
  bool pairing_ok = false;            // zeta <-> conj(zeta)^-1 holds
};

/// All roots of D, clustered, split into unit-circle and off-circle parts.
/// Factors z^r (vanishing leading and constant coefficients) are removed first.
SelfInvRoots selfinv_roots(const SelfInvPoly& d, const RootOptions& opts = {});

/// Power sums s_{2j-1} = sum zeta^{2j-1} for j = 1 .. k-1; |M| must be 4k-2.
std::vector<Complex> power_sum_check(const RootMultiset& m, int k);

/// Power sums s_1 .. s_count obtained from the coefficients of D through
/// Newton's identities p d_{m-p} + sum_{j=1}^p s_j d_{m-p+j} = 0.
std::vector<Complex> newton_power_sums(const SelfInvPoly& d, int count);

/// Self-inversive polynomial whose zero multiset is M (requires M == conj(M)^-1).
/// When M == conj(M) the result is rotated so the largest coefficient is real
/// positive and imaginary parts below 1e-10 (relative) are dropped.
SelfInvPoly poly_from_multiset(const RootMultiset& m);

/// Deformation M -> M_lambda: every pair {zeta, 1/zeta} is replaced by the two
/// solutions of z + 1/z = lambda (zeta + 1/zeta). Requires M == M^-1 and even
/// multiplicities at +1 and -1. Colliding images are merged by clustering.
RootMultiset deform(const RootMultiset& m, double lambda, double cluster_radius = 1e-6);

}  // namespace bicyclic

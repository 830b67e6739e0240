#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicyclic/circle.hpp"
#include "bicyclic/lp.hpp"
#include "bicyclic/polytope.hpp"
#include "bicyclic/self_inversive.hpp"
#include "bicyclic/trig_poly.hpp"

namespace bicyclic {

enum class CertificateKind { polytope_face, body_face };

/// Witness for a face. The functional is an affine function on R^2k written as
/// a raked trigonometric polynomial (the two are the same thing on SM_2k).
struct FaceCertificate {
  CertificateKind kind = CertificateKind::polytope_face;
  RakedTrigPoly functional;
  std::vector<AnglePoint> zero_set;
  std::vector<int> vertices;  // polytope faces only, sorted
  int dimension = -1;         // affine dimension of the face (polytope faces)
  /// Polytope: min of the functional off the face. Body: the LP margin s.
  double margin = 0.0;
  bool verified = false;
  /// Body faces: roots of the self-inversive image, the zero set doubled.
  RootMultiset roots;
};

/// Feasibility LP  A(v) = 0 on S, A(w) >= 1 off S. Returns the certificate
/// when S is exactly the vertex set of a face.
std::optional<FaceCertificate> is_face(const Polytope& p, std::span<const int> subset, const LpOptions& lp = {});

/// Vertex set of the smallest face containing S, sorted. Equals all vertices
/// when no proper face contains S.
std::vector<int> minimal_face(const Polytope& p, std::span<const int> subset, const LpOptions& lp = {});

/// Whether some proper face contains S.
bool common_face_feasible(const Polytope& p, std::span<const int> subset, const LpOptions& lp = {});

/// Re-checks a polytope certificate: residual < 1e-9 on the face, >= margin > 0 off it.
bool revalidate(const Polytope& p, const FaceCertificate& cert);

struct BodyFaceOptions {
  /// Grid points for the positivity constraints; 0 means 720 k.
  int grid_size = 0;
  /// Smallest LP margin accepted as a strict certificate.
  double min_margin = 1e-7;
  int scan_points = 100000;
  double scan_tol = 1e-9;
  RootOptions roots;
  LpOptions lp;
};

enum class BodyOutcome { verified, infeasible, not_verified };

std::string_view to_string(BodyOutcome o);

struct BodyFaceResult {
  BodyOutcome outcome = BodyOutcome::infeasible;
  FaceCertificate certificate;
  double lp_margin = 0.0;
  std::string reason;
};

/// Searches for a raked A >= 0 on S^1 with constant term 1 and double zeros
/// exactly at T. A is written as W B with W = prod_i (1 - cos(t - t_i)); the LP
/// maximizes s subject to B(g) >= s on the grid (cutting planes) and the even
/// frequencies of W B vanishing. A positive margin is confirmed by dividing D(z)
/// by prod (z - e^{it_i})^2, checking the quotient has no unit-circle roots, and
/// a dense sign scan.
BodyFaceResult body_face_certificate(int k, std::span<const AnglePoint> ts, const BodyFaceOptions& opts = {});

/// Independent check of a body certificate: dense sign scan, zeros at T, and the
/// root structure of D.
bool revalidate_body(const FaceCertificate& cert, const BodyFaceOptions& opts = {});

inline constexpr double kMinPsiTol = 1e-3;
inline constexpr double kMaxPsiTol = 0.5;

struct PsiInterval {
  double lo = 0.0;
  double hi = kPi;
  bool lo_verified = false;
  int evaluations = 0;
  /// (theta, LP margin) for every bisection step, in evaluation order.
  std::vector<std::pair<double, double>> trace;
  std::vector<std::string> warnings;
};

/// Bisection on the arc length theta of the pair {-theta/2, theta/2}. Verified
/// edges move lo up, everything else moves hi down.
PsiInterval psi_estimate(int k, double tol, const BodyFaceOptions& opts = {});

}  // namespace bicyclic

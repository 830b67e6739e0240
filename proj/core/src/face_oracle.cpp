#include "bicyclic/face_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bicyclic/errors.hpp"

namespace bicyclic {
namespace {

constexpr double kZeroResidual = 1e-9;
// smallest accepted margin for a functional with coefficients in [-1, 1]
constexpr double kMinBoxedMargin = 1e-8;
// Zero-set points of a body certificate must match T this closely.
constexpr double kDeflationTol = 1e-8;
constexpr double kNoiseFrequency = 1e-10;

void check_subset(const Polytope& p, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("face test: empty vertex subset");
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int i : subset) {
    if (i < 0 || i >= p.size()) throw std::invalid_argument("face test: vertex index out of range");
    if (seen[i]) throw std::invalid_argument("face test: repeated vertex index");
    seen[i] = true;
  }
}

std::vector<double> affine_row(const Polytope& p, int v, int extra) {
  const auto& x = p.point(v).coords;
  std::vector<double> row(static_cast<std::size_t>(x.size() + 1 + extra), 0.0);
  row[0] = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) row[i + 1] = x[i];
  return row;
}

double eval_affine(const Polytope& p, const Eigen::VectorXd& alpha, int v) {
  return alpha[0] + alpha.tail(alpha.size() - 1).dot(p.point(v).coords);
}

// Moves x onto {E x = r} along the least-norm correction.
Eigen::VectorXd project_onto(const Eigen::MatrixXd& e, const Eigen::VectorXd& r, const Eigen::VectorXd& x) {
  if (e.rows() == 0) return x;
  const Eigen::VectorXd residual = e * x - r;
  return x - e.completeOrthogonalDecomposition().solve(residual);
}

std::vector<bool> membership(const Polytope& p, std::span<const int> subset) {
  std::vector<bool> in(static_cast<std::size_t>(p.size()), false);
  for (int i : subset) in[i] = true;
  return in;
}

}  // namespace

std::optional<FaceCertificate> is_face(const Polytope& p, std::span<const int> subset, const LpOptions& lp_opts) {
  check_subset(p, subset);
  if (static_cast<int>(subset.size()) == p.size()) {
    throw std::invalid_argument("is_face: subset must not contain every vertex");
  }
  const int nv = 2 * p.k() + 1;
  const auto in = membership(p, subset);
  LinearProgram lp(nv);
  for (int v = 0; v < p.size(); ++v) {
    lp.add_constraint(affine_row(p, v, 0), in[v] ? Relation::equal : Relation::greater_equal, in[v] ? 0.0 : 1.0);
  }
  auto res = lp_solve(lp, lp_opts);
  if (res.status != LpStatus::optimal) {
    // faces near a cluster of points need huge functionals at margin 1, which the
    // tableau can miss; retry with bounded coefficients and the margin maximized
    LinearProgram boxed(nv + 1);
    for (int v = 0; v < p.size(); ++v) {
      auto row = affine_row(p, v, 1);
      if (!in[v]) row[nv] = -1.0;
      boxed.add_constraint(std::move(row), in[v] ? Relation::equal : Relation::greater_equal, 0.0);
    }
    for (int i = 0; i < nv; ++i) boxed.set_bounds(i, -1.0, 1.0);
    boxed.set_bounds(nv, -1.0, 1.0);
    std::vector<double> obj(static_cast<std::size_t>(nv + 1), 0.0);
    obj[nv] = 1.0;
    boxed.set_objective(std::move(obj));
    const auto alt = lp_solve(boxed, lp_opts);
    if (alt.status != LpStatus::optimal) {
      throw NumericalError("is_face: LP ended with status " + std::string(to_string(alt.status)));
    }
    if (alt.value <= kMinBoxedMargin) return std::nullopt;
    res = alt;
    res.x.resize(static_cast<std::size_t>(nv));
  }

  Eigen::VectorXd alpha = Eigen::Map<const Eigen::VectorXd>(res.x.data(), nv);
  Eigen::MatrixXd e(static_cast<Eigen::Index>(subset.size()), nv);
  for (std::size_t r = 0; r < subset.size(); ++r) {
    e(static_cast<Eigen::Index>(r), 0) = 1.0;
    e.row(static_cast<Eigen::Index>(r)).tail(nv - 1) = p.point(subset[r]).coords.transpose();
  }
  alpha = project_onto(e, Eigen::VectorXd::Zero(e.rows()), alpha);

  FaceCertificate cert;
  cert.kind = CertificateKind::polytope_face;
  cert.functional = from_functional(alpha);
  cert.vertices.assign(subset.begin(), subset.end());
  std::sort(cert.vertices.begin(), cert.vertices.end());
  for (int v : cert.vertices) cert.zero_set.push_back(p.angle(v));
  cert.dimension = p.affine_rank(cert.vertices);
  double margin = kInf;
  for (int v = 0; v < p.size(); ++v) {
    if (!in[v]) margin = std::min(margin, eval_affine(p, alpha, v));
  }
  cert.margin = margin;
  cert.verified = revalidate(p, cert);
  if (!cert.verified) {
    throw NumericalError("is_face: LP solution failed re-validation (margin " + std::to_string(margin) + ")");
  }
  return cert;
}

namespace {

// Same question with coefficients in [-1, 1]: vertices where some valid functional
// is clearly positive leave the face, round by round, until none do.
std::vector<int> minimal_face_boxed(const Polytope& p, std::span<const int> subset, std::vector<int> open,
                                    const LpOptions& lp_opts) {
  const int na = 2 * p.k() + 1;
  std::vector<int> cleared;
  while (!open.empty()) {
    const int m = static_cast<int>(open.size());
    LinearProgram lp(na + m);
    for (int v : subset) lp.add_constraint(affine_row(p, v, m), Relation::equal, 0.0);
    for (int w : cleared) lp.add_constraint(affine_row(p, w, m), Relation::greater_equal, 0.0);
    for (int j = 0; j < m; ++j) {
      auto row = affine_row(p, open[j], m);
      row[na + j] = -1.0;
      lp.add_constraint(std::move(row), Relation::greater_equal, 0.0);
      lp.set_bounds(na + j, 0.0, 1.0);
    }
    for (int i = 0; i < na; ++i) lp.set_bounds(i, -1.0, 1.0);
    std::vector<double> obj(static_cast<std::size_t>(na + m), 0.0);
    for (int j = 0; j < m; ++j) obj[na + j] = 1.0;
    lp.set_objective(std::move(obj));
    const auto res = lp_solve(lp, lp_opts);
    if (res.status != LpStatus::optimal) {
      throw NumericalError("minimal_face: LP ended with status " + std::string(to_string(res.status)));
    }
    std::vector<int> still;
    for (int j = 0; j < m; ++j) (res.x[na + j] > kMinBoxedMargin ? cleared : still).push_back(open[j]);
    if (still.size() == open.size()) break;
    open = std::move(still);
  }
  std::vector<int> face(subset.begin(), subset.end());
  face.insert(face.end(), open.begin(), open.end());
  std::sort(face.begin(), face.end());
  return face;
}

}  // namespace

std::vector<int> minimal_face(const Polytope& p, std::span<const int> subset, const LpOptions& lp_opts) {
  check_subset(p, subset);
  const int n = p.size();
  const int na = 2 * p.k() + 1;
  const auto in = membership(p, subset);
  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!in[v]) outside.push_back(v);
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  if (outside.empty()) return all;

  // variables: alpha (na), then t_w in [0, 1] for every w outside S
  const int m = static_cast<int>(outside.size());
  LinearProgram lp(na + m);
  for (int v : subset) lp.add_constraint(affine_row(p, v, m), Relation::equal, 0.0);
  for (int j = 0; j < m; ++j) {
    auto row = affine_row(p, outside[j], m);
    row[na + j] = -1.0;
    lp.add_constraint(std::move(row), Relation::greater_equal, 0.0);
    lp.set_bounds(na + j, 0.0, 1.0);
  }
  std::vector<double> obj(static_cast<std::size_t>(na + m), 0.0);
  for (int j = 0; j < m; ++j) obj[na + j] = 1.0;
  lp.set_objective(std::move(obj));
  const auto res = lp_solve(lp, lp_opts);
  if (res.status != LpStatus::optimal) return minimal_face_boxed(p, subset, outside, lp_opts);
  std::vector<int> face(subset.begin(), subset.end());
  for (int j = 0; j < m; ++j) {
    if (res.x[na + j] < 0.5) face.push_back(outside[j]);
  }
  std::sort(face.begin(), face.end());
  return face;
}

bool common_face_feasible(const Polytope& p, std::span<const int> subset, const LpOptions& lp) {
  return static_cast<int>(minimal_face(p, subset, lp).size()) < p.size();
}

bool revalidate(const Polytope& p, const FaceCertificate& cert) {
  if (cert.kind != CertificateKind::polytope_face) return false;
  const Eigen::VectorXd alpha = to_functional(cert.functional);
  if (alpha.size() != 2 * p.k() + 1) return false;
  const auto in = membership(p, cert.vertices);
  double margin = kInf;
  for (int v = 0; v < p.size(); ++v) {
    const double val = eval_affine(p, alpha, v);
    if (in[v]) {
      if (std::abs(val) >= kZeroResidual) return false;
    } else {
      margin = std::min(margin, val);
    }
  }
  return margin > 0.0 && margin >= cert.margin - kZeroResidual;
}

std::string_view to_string(BodyOutcome o) {
  switch (o) {
    case BodyOutcome::verified: return "verified";
    case BodyOutcome::infeasible: return "infeasible";
    case BodyOutcome::not_verified: return "not_verified";
  }
  return "unknown";
}

namespace {

struct RootCheck {
  bool ok = false;
  std::string reason;
  RootMultiset roots;
};

// D = prod (z - e^{it_i})^2 * Q with Q free of unit-circle roots. The double
// roots are divided out one linear factor at a time; each remainder is a
// divided difference of D and must vanish.
RootCheck check_roots(const RakedTrigPoly& a, std::span<const AnglePoint> ts, const RootOptions& opts) {
  RootCheck out;
  const SelfInvPoly d = trig_to_selfinv(a);
  const double scale = d.max_abs_coeff();
  // drop the matching roots at 0 and infinity first, or deflation residue
  // lands in a vanishing end coefficient and fakes an unpaired root
  std::size_t lo = 0;
  std::size_t hi = d.coeffs().size() - 1;
  while (lo < hi && std::abs(d.coeffs()[lo]) <= kNoiseFrequency * scale) ++lo;
  while (hi > lo && std::abs(d.coeffs()[hi]) <= kNoiseFrequency * scale) --hi;
  std::vector<Complex> q(d.coeffs().begin() + static_cast<std::ptrdiff_t>(lo),
                         d.coeffs().begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  std::vector<RootEntry> entries;
  for (const auto& t : ts) {
    const Complex z = std::polar(1.0, t.theta());
    entries.push_back({z, 2});
    for (int rep = 0; rep < 2; ++rep) {
      if (q.size() < 2) {
        out.reason = "degree of D is below 2|T|";
        return out;
      }
      std::vector<Complex> next(q.size() - 1);
      Complex carry = q.back();
      for (std::size_t i = q.size() - 1; i-- > 0;) {
        next[i] = carry;
        carry = q[i] + z * carry;
      }
      if (std::abs(carry) > kDeflationTol * scale) {
        out.reason = "T is not a set of double roots (remainder " + std::to_string(std::abs(carry) / scale) + ")";
        return out;
      }
      q = std::move(next);
    }
  }
  double qmax = 0.0;
  for (const auto& x : q) qmax = std::max(qmax, std::abs(x));
  if (q.size() > 1 && qmax > 0.0) {
    try {
      const SelfInvPoly qs = SelfInvPoly::from_coeffs(q, 1e-6);
      const auto qr = selfinv_roots(qs, opts);
      if (!qr.on_circle.empty()) {
        out.reason = "extra root on the unit circle at angle " +
                     std::to_string(normalize_angle(std::arg(qr.on_circle.front().value)));
        return out;
      }
      if (!qr.pairing_ok) {
        out.reason = "quotient roots are not paired under 1/conj";
        return out;
      }
      entries.insert(entries.end(), qr.roots.entries().begin(), qr.roots.entries().end());
    } catch (const std::invalid_argument& e) {
      out.reason = std::string("quotient is not self-inversive: ") + e.what();
      return out;
    } catch (const NumericalError& e) {
      out.reason = std::string("root finder failed: ") + e.what();
      return out;
    }
  }
  out.roots = RootMultiset(std::move(entries));
  out.ok = true;
  return out;
}

bool sign_scan(const RakedTrigPoly& a, int points, double tol) {
  for (int i = 0; i < points; ++i) {
    if (a(kTwoPi * i / points) < -tol) return false;
  }
  return true;
}

// Fourier coefficients of W(t) = prod_i (1 - cos(t - t_i)), index m + |T| for
// frequency m in [-|T|, |T|].
std::vector<Complex> weight_fourier(std::span<const AnglePoint> ts) {
  std::vector<Complex> w{Complex(1.0)};
  for (const auto& t : ts) {
    const Complex plus = -0.5 * std::polar(1.0, -t.theta());   // e^{it}
    const Complex minus = -0.5 * std::polar(1.0, t.theta());   // e^{-it}
    std::vector<Complex> next(w.size() + 2, Complex(0.0));
    for (std::size_t i = 0; i < w.size(); ++i) {
      next[i] += minus * w[i];
      next[i + 1] += w[i];
      next[i + 2] += plus * w[i];
    }
    w = std::move(next);
  }
  return w;
}

// Maps B = beta_0 + sum_l p_l cos(lt) + q_l sin(lt) (l = 1..deg) to the Fourier
// coefficient of W B at frequency m, as complex weights on (beta_0, p_1, q_1, ...).
std::vector<Complex> product_row(const std::vector<Complex>& w, int tn, int deg, int m) {
  auto wc = [&](int freq) {
    const int idx = freq + tn;
    return (idx < 0 || idx >= static_cast<int>(w.size())) ? Complex(0.0) : w[idx];
  };
  std::vector<Complex> row(static_cast<std::size_t>(2 * deg + 1));
  row[0] = wc(m);
  for (int l = 1; l <= deg; ++l) {
    row[2 * l - 1] = 0.5 * (wc(m - l) + wc(m + l));
    row[2 * l] = Complex(0.0, 0.5) * (wc(m + l) - wc(m - l));
  }
  return row;
}

}  // namespace

BodyFaceResult body_face_certificate(int k, std::span<const AnglePoint> ts, const BodyFaceOptions& opts) {
  if (k < 1) throw std::invalid_argument("body_face_certificate: k must be >= 1");
  if (ts.empty()) throw std::invalid_argument("body_face_certificate: T must be nonempty");
  if (static_cast<int>(ts.size()) > 2 * k - 1) {
    throw std::invalid_argument("body_face_certificate: |T| must be at most 2k - 1");
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (arc_distance(ts[i], ts[j]) < kAngleDedupTol) {
        throw std::invalid_argument("body_face_certificate: points of T must be distinct");
      }
    }
  }
  const int grid = opts.grid_size > 0 ? opts.grid_size : 720 * k;
  const int tn = static_cast<int>(ts.size());
  // A = W B with W >= 0 vanishing doubly on T; A >= 0 iff B >= 0
  const int deg = 2 * k - 1 - tn;
  const int nb = 2 * deg + 1;
  const int s_var = nb;
  const auto w = weight_fourier(ts);

  // A is raked with constant term 1: even frequencies vanish
  LinearProgram lp(nb + 1);
  Eigen::MatrixXd eq(0, nb);
  Eigen::VectorXd eq_rhs(0);
  double w_scale = 0.0;
  for (const auto& c : w) w_scale = std::max(w_scale, std::abs(c));
  // cancellation leaves ~1e-17 entries; equilibration would blow them up
  const double zero_tol = 1e-13 * w_scale;
  auto add_eq = [&](const std::vector<Complex>& row, bool imag, double rhs) {
    std::vector<double> coeffs(static_cast<std::size_t>(nb + 1), 0.0);
    double big = 0.0;
    for (int c = 0; c < nb; ++c) {
      const double v = imag ? row[c].imag() : row[c].real();
      coeffs[c] = std::abs(v) < zero_tol ? 0.0 : v;
      big = std::max(big, std::abs(coeffs[c]));
    }
    if (big == 0.0 && rhs == 0.0) return;
    eq.conservativeResize(eq.rows() + 1, Eigen::NoChange);
    eq_rhs.conservativeResize(eq_rhs.size() + 1);
    for (int c = 0; c < nb; ++c) eq(eq.rows() - 1, c) = coeffs[c];
    eq_rhs[eq_rhs.size() - 1] = rhs;
    lp.add_constraint(std::move(coeffs), Relation::equal, rhs);
  };
  add_eq(product_row(w, tn, deg, 0), false, 1.0);
  for (int m = 2; m <= 2 * k - 2; m += 2) {
    const auto row = product_row(w, tn, deg, m);
    add_eq(row, false, 0.0);
    add_eq(row, true, 0.0);
  }
  lp.set_bounds(s_var, -1e6, 1e6);
  std::vector<double> obj(static_cast<std::size_t>(nb + 1), 0.0);
  obj[s_var] = 1.0;
  lp.set_objective(std::move(obj));

  std::vector<double> basis(static_cast<std::size_t>(grid) * nb);
  for (int g = 0; g < grid; ++g) {
    const double t = kTwoPi * g / grid;
    double* row = &basis[static_cast<std::size_t>(g) * nb];
    row[0] = 1.0;
    for (int l = 1; l <= deg; ++l) {
      row[2 * l - 1] = std::cos(l * t);
      row[2 * l] = std::sin(l * t);
    }
  }
  auto add_grid_row = [&](int g) {
    std::vector<double> row(basis.begin() + static_cast<std::ptrdiff_t>(g) * nb,
                            basis.begin() + static_cast<std::ptrdiff_t>(g + 1) * nb);
    row.push_back(-1.0);
    lp.add_constraint(std::move(row), Relation::greater_equal, 0.0);
  };
  auto slack_at = [&](const std::vector<double>& x, int g) {
    double v = -x[s_var];
    for (int c = 0; c < nb; ++c) v += x[c] * basis[static_cast<std::size_t>(g) * nb + c];
    return v;
  };
  std::vector<bool> active(static_cast<std::size_t>(grid), false);
  const int stride = std::max(1, grid / (48 * k));
  for (int g = 0; g < grid; g += stride) {
    active[g] = true;
    add_grid_row(g);
  }

  BodyFaceResult result;
  LpResult sol;
  constexpr int kMaxRounds = 60;
  constexpr int kMaxCutsPerRound = 256;
  for (int round = 0;; ++round) {
    sol = lp_solve(lp, opts.lp);
    if (sol.status == LpStatus::infeasible) {
      result.outcome = BodyOutcome::infeasible;
      result.reason = "no raked polynomial vanishes doubly on T";
      return result;
    }
    if (sol.status != LpStatus::optimal) {
      throw NumericalError("body_face_certificate: LP ended with status " + std::string(to_string(sol.status)));
    }
    // violated grid points, worst first
    std::vector<std::pair<double, int>> cuts;
    for (int g = 0; g < grid; ++g) {
      if (active[g]) continue;
      const double v = slack_at(sol.x, g);
      if (v < -1e-12) cuts.emplace_back(v, g);
    }
    if (cuts.empty()) break;
    if (round >= kMaxRounds) {
      throw NumericalError("body_face_certificate: cutting planes did not converge");
    }
    std::sort(cuts.begin(), cuts.end());
    if (static_cast<int>(cuts.size()) > kMaxCutsPerRound) cuts.resize(kMaxCutsPerRound);
    for (const auto& [v, g] : cuts) {
      active[g] = true;
      add_grid_row(g);
    }
  }

  result.lp_margin = sol.x[s_var];
  if (result.lp_margin <= opts.min_margin) {
    result.outcome = BodyOutcome::infeasible;
    result.reason = "no strictly positive margin (s = " + std::to_string(result.lp_margin) + ")";
    return result;
  }

  Eigen::VectorXd beta = Eigen::Map<const Eigen::VectorXd>(sol.x.data(), nb);
  beta = project_onto(eq, eq_rhs, beta);
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = (Eigen::Map<const Eigen::VectorXcd>(product_row(w, tn, deg, 0).data(), nb).transpose() *
         beta.cast<Complex>())(0).real();
  for (int j = 0; j < k; ++j) {
    const auto row = product_row(w, tn, deg, 2 * j + 1);
    Complex am = 0.0;
    for (int c = 0; c < nb; ++c) am += row[c] * beta[c];
    a.b[j] = 2.0 * am.real();
    a.a[j] = -2.0 * am.imag();
  }
  // Frequencies at LP noise level would put spurious roots near 0 and infinity.
  double big = std::abs(a.c);
  for (int j = 0; j < k; ++j) big = std::max(big, std::hypot(a.a[j], a.b[j]));
  for (int j = 0; j < k; ++j) {
    if (std::hypot(a.a[j], a.b[j]) < kNoiseFrequency * big) a.a[j] = a.b[j] = 0.0;
  }

  FaceCertificate& cert = result.certificate;
  cert.kind = CertificateKind::body_face;
  cert.functional = a;
  cert.zero_set.assign(ts.begin(), ts.end());
  cert.dimension = -1;
  cert.margin = result.lp_margin;

  const auto roots = check_roots(a, ts, opts.roots);
  if (!roots.ok) {
    result.outcome = BodyOutcome::not_verified;
    result.reason = roots.reason;
    return result;
  }
  cert.roots = roots.roots;
  if (!sign_scan(a, opts.scan_points, opts.scan_tol)) {
    result.outcome = BodyOutcome::not_verified;
    result.reason = "dense sign scan found a negative value";
    return result;
  }
  cert.verified = true;
  result.outcome = BodyOutcome::verified;
  return result;
}

bool revalidate_body(const FaceCertificate& cert, const BodyFaceOptions& opts) {
  if (cert.kind != CertificateKind::body_face || cert.zero_set.empty()) return false;
  const auto& a = cert.functional;
  for (const auto& t : cert.zero_set) {
    if (std::abs(a(t)) > kZeroResidual) return false;
  }
  if (!sign_scan(a, opts.scan_points, opts.scan_tol)) return false;
  const auto roots = check_roots(a, cert.zero_set, opts.roots);
  if (!roots.ok) return false;
  for (const auto& e : roots.roots.entries()) {
    if (std::abs(std::abs(e.value) - 1.0) < opts.roots.circle_tol && e.multiplicity % 2 != 0) return false;
  }
  return true;
}

PsiInterval psi_estimate(int k, double tol, const BodyFaceOptions& opts) {
  if (k < 2) throw std::invalid_argument("psi_estimate: k must be >= 2");
  if (!(tol >= kMinPsiTol) || tol > kMaxPsiTol) {
    throw std::invalid_argument("psi_estimate: tol must lie in [" + std::to_string(kMinPsiTol) + ", " +
                                std::to_string(kMaxPsiTol) + "]");
  }
  PsiInterval out;
  out.lo = 0.0;
  out.hi = kPi;  // antipodal pairs never span an edge
  while (out.hi - out.lo > tol) {
    const double mid = 0.5 * (out.lo + out.hi);
    const AnglePoint pair[] = {AnglePoint(-mid / 2), AnglePoint(mid / 2)};
    BodyFaceResult r;
    try {
      r = body_face_certificate(k, pair, opts);
    } catch (const NumericalError& e) {
      r.outcome = BodyOutcome::not_verified;
      r.reason = e.what();
    }
    ++out.evaluations;
    out.trace.emplace_back(mid, r.lp_margin);
    if (r.outcome == BodyOutcome::verified) {
      out.lo = mid;
      out.lo_verified = true;
    } else {
      if (r.outcome == BodyOutcome::not_verified) {
        out.warnings.push_back("theta = " + std::to_string(mid) + ": positive LP margin but verification failed (" +
                               r.reason + "); treated as a non-edge");
      }
      out.hi = mid;
    }
  }
  return out;
}

}  // namespace bicyclic

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bicyclic/census.hpp"
#include "bicyclic/errors.hpp"
#include "bicyclic/face_oracle.hpp"
#include "bicyclic/fixtures.hpp"
#include "bicyclic/moment_curve.hpp"
#include "bicyclic/self_inversive.hpp"
#include "commands.hpp"

namespace bicyclic::cli {
namespace {

constexpr double kThird = kTwoPi / 3.0;

std::string tag(const std::string& suite, const std::string& what) { return suite + ": " + what; }

// |det| of the derivative matrix from its block structure: the even and odd
// derivative rows are Vandermonde systems in the squared frequencies.
double vandermonde_det(int k) {
  double det = 1.0;
  for (int i = 1; i <= k; ++i) {
    const double mi = 2 * i - 1;
    det *= mi;
    for (int j = i + 1; j <= k; ++j) {
      const double mj = 2 * j - 1;
      det *= (mj * mj - mi * mi) * (mj * mj - mi * mi);
    }
  }
  return det;
}

}  // namespace

RakedTrigPoly random_real_raked(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = u(rng);
  for (int j = 0; j < k; ++j) a.b[j] = u(rng);
  // keep the leading coefficient away from zero
  a.b[k - 1] = std::copysign(0.25 + 0.75 * std::abs(a.b[k - 1]), a.b[k - 1]);
  return a;
}

RakedTrigPoly random_raked(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  a.c = u(rng);
  for (int j = 0; j < k; ++j) {
    a.a[j] = u(rng);
    a.b[j] = u(rng);
  }
  const double top = std::hypot(a.a[k - 1], a.b[k - 1]);
  if (top < 0.5) {
    const double scale = 0.5 / std::max(top, 1e-3);
    a.a[k - 1] *= scale;
    a.b[k - 1] *= scale;
    if (top < 1e-3) a.b[k - 1] = 0.5;
  }
  return a;
}

void suite_smilansky(const RunConfig& cfg, Report& report) {
  const int n = cfg.n;
  const auto p = Polytope::build(2, equally_spaced(n));
  std::set<std::vector<int>> edges;
  int mismatches = 0;
  int edge_count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double arc = arc_distance(p.angle(i), p.angle(j));
      const bool on_threshold = std::abs(arc - kThird) < 1e-9;
      // threshold pairs are edges exactly when their triangle lies in X
      const bool predicted = arc < kThird - 1e-9 || (on_threshold && n % 3 == 0);
      const int pair[] = {i, j};
      const bool certified = is_face(p, pair).has_value();
      if (certified) {
        edges.insert({i, j});
        ++edge_count;
      }
      if (certified != predicted) ++mismatches;
    }
  }
  report.add_claim(make_claim(tag("smilansky", "edges differing from the 2pi/3 rule"), mismatches, Relation::equal, 0.0,
                              std::to_string(edge_count) + " certified edges"));
  if (n % 3 == 0) {
    int bad = 0;
    for (int i = 0; i < n / 3; ++i) {
      const int tri[] = {i, i + n / 3, i + 2 * n / 3};
      const auto cert = is_face(p, tri);
      if (!cert || cert->dimension != 2) ++bad;
    }
    report.add_claim(make_claim(tag("smilansky", "inscribed triangles not certified as 2-faces"), bad, Relation::equal,
                                0.0, std::to_string(n / 3) + " triangles"));
  }
  const auto dir = fixtures_dir(cfg.fixtures);
  if (dir && std::filesystem::exists(*dir / fixture_name(2, n))) {
    const auto fx = load_fixture(*dir / fixture_name(2, n));
    const auto fx_edges = fx.faces_of_dim(1);
    const std::set<std::vector<int>> theirs(fx_edges.begin(), fx_edges.end());
    int diff = 0;
    for (const auto& e : edges) diff += theirs.contains(e) ? 0 : 1;
    for (const auto& e : theirs) diff += edges.contains(e) ? 0 : 1;
    report.add_claim(make_claim(tag("smilansky", "edge set vs hull fixture"), diff, Relation::equal, 0.0));
  } else if (dir) {
    report.add_warning("smilansky: no hull fixture for n = " + std::to_string(n));
  }
}

void suite_deformation(const RunConfig& cfg, Report& report) {
  const int k = std::max(cfg.k, 2);
  std::mt19937_64 rng(cfg.seed);
  const double lambdas[] = {0.5, 1.01, 2.0};
  int failures = 0;
  double worst_odd = 0.0;
  double worst_imag = 0.0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RakedTrigPoly a = RakedTrigPoly::zero(k);
    if (trial < 2) {
      // 1 -+ cos((2k-1)t): double roots at the (2k-1)-th roots of +-1
      a.c = 1.0;
      a.b[k - 1] = trial == 0 ? -1.0 : 1.0;
    } else {
      a = random_real_raked(k, rng);
    }
    try {
      const auto m = selfinv_roots(trig_to_selfinv(a)).roots;
      for (double lambda : lambdas) {
        const auto d = poly_from_multiset(deform(m, lambda));
        worst_odd = std::max(worst_odd, d.raked_residual());
        worst_imag = std::max(worst_imag, d.imag_residual());
        if (d.raked_residual() >= 1e-8 || d.imag_residual() >= 1e-8) ++failures;
      }
    } catch (const std::exception& e) {
      ++failures;
      report.add_warning(std::string("deformation trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  const std::string kk = "k=" + std::to_string(k);
  report.add_claim(make_claim(tag("deformation", kk + " failed trials"), failures, Relation::equal, 0.0,
                              std::to_string(cfg.trials) + " polynomials x 3 lambdas"));
  report.add_claim(make_claim(tag("deformation", kk + " max odd coefficient (relative)"), worst_odd,
                              Relation::less_than, 1e-8));
  report.add_claim(make_claim(tag("deformation", kk + " max imaginary part (relative)"), worst_imag,
                              Relation::less_than, 1e-8));
}

void suite_newton(const RunConfig& cfg, Report& report) {
  const int k = std::max(cfg.k, 2);
  std::mt19937_64 rng(cfg.seed);
  double worst_sum = 0.0;
  double worst_newton = 0.0;
  int failures = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto a = random_raked(k, rng);
    const auto d = trig_to_selfinv(a);
    try {
      const auto r = selfinv_roots(d);
      if (!r.pairing_ok || r.roots.size() != 4 * k - 2) {
        ++failures;
        continue;
      }
      for (const auto& s : power_sum_check(r.roots, k)) worst_sum = std::max(worst_sum, std::abs(s));
      const auto newton = newton_power_sums(d, 4 * k - 2);
      for (int p = 1; p <= 4 * k - 2; ++p) {
        Complex s = 0.0;
        for (const auto& e : r.roots.entries()) s += static_cast<double>(e.multiplicity) * std::pow(e.value, p);
        worst_newton = std::max(worst_newton, std::abs(s - newton[p - 1]) / std::max(1.0, std::abs(s)));
      }
    } catch (const NumericalError& e) {
      ++failures;
      report.add_warning(std::string("newton trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  const std::string kk = "k=" + std::to_string(k);
  report.add_claim(make_claim(tag("newton", kk + " failed root computations"), failures, Relation::equal, 0.0));
  report.add_claim(make_claim(tag("newton", kk + " max |s_(2j-1)|, j < k"), worst_sum, Relation::less_than, 1e-9));
  report.add_claim(make_claim(tag("newton", kk + " roots vs coefficient power sums (relative)"), worst_newton,
                              Relation::less_than, 1e-9));
}

void suite_simplex(const RunConfig& cfg, Report& report) {
  const int kmax = std::max(cfg.k, 4);
  for (int k = 2; k <= kmax; ++k) {
    const std::string kk = "k=" + std::to_string(k);
    std::vector<AnglePoint> tau;
    for (int j = 0; j < 2 * k - 1; ++j) tau.emplace_back(kTwoPi * j / (2 * k - 1));

    FaceCertificate direct;
    direct.kind = CertificateKind::body_face;
    direct.functional = RakedTrigPoly::zero(k);
    direct.functional.c = 1.0;
    direct.functional.b[k - 1] = -1.0;
    direct.zero_set = tau;
    report.add_claim(make_claim(tag("simplex", kk + " 1 - cos((2k-1)t) certifies Delta_0"),
                                revalidate_body(direct) ? 1.0 : 0.0, Relation::equal, 1.0));

    const auto lp = body_face_certificate(k, tau);
    double coeff_err = kInf;
    if (lp.outcome == BodyOutcome::verified) {
      const auto& f = lp.certificate.functional;
      coeff_err = std::abs(f.c - 1.0) + std::abs(f.b[k - 1] + 1.0);
      for (int j = 0; j + 1 < k; ++j) coeff_err += std::abs(f.a[j]) + std::abs(f.b[j]);
      coeff_err += std::abs(f.a[k - 1]);
    }
    report.add_claim(make_claim(tag("simplex", kk + " LP certificate distance from 1 - cos((2k-1)t)"), coeff_err,
                                Relation::less_than, 1e-8, std::string(to_string(lp.outcome))));

    double lo = kInf;
    double hi = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      for (std::size_t j = i + 1; j < tau.size(); ++j) {
        const double dist = (sm_eval(k, tau[i]).coords - sm_eval(k, tau[j]).coords).norm();
        lo = std::min(lo, dist);
        hi = std::max(hi, dist);
      }
    }
    report.add_claim(make_claim(tag("simplex", kk + " spread of pairwise vertex distances"), hi - lo,
                                Relation::less_than, 1e-10));
  }
}

void suite_nonflat(const RunConfig& cfg, Report& report) {
  const int kmax = std::max(cfg.k, 1);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int k = 1; k <= kmax; ++k) {
    const std::string kk = "k=" + std::to_string(k);
    const double exact = vandermonde_det(k);
    const double at_zero = normalized_nonflatness(k, AnglePoint(0.0));
    double worst_rel = 0.0;
    double worst_shift = 0.0;
    double smallest = kInf;
    for (int i = 0; i < 100; ++i) {
      const AnglePoint t(u(rng));
      worst_rel = std::max(worst_rel, std::abs(nonflatness_check(k, t) - exact) / exact);
      const double normalized = normalized_nonflatness(k, t);
      worst_shift = std::max(worst_shift, std::abs(normalized - at_zero) / at_zero);
      smallest = std::min(smallest, normalized);
    }
    report.add_claim(make_claim(tag("nonflat", kk + " |det| vs Vandermonde product (relative)"), worst_rel,
                                Relation::less_than, 1e-8));
    report.add_claim(make_claim(tag("nonflat", kk + " t-dependence of |det| (relative)"), worst_shift,
                                Relation::less_than, 1e-8));
    report.add_claim(make_claim(tag("nonflat", kk + " min row-normalized |det|"), smallest, Relation::at_least, 1e-6));
  }
}

void suite_b6(const RunConfig& cfg, Report& report) {
  const double limit = std::acos(1.0 / 8.0);
  if (!(cfg.arc > 0.0)) throw std::invalid_argument("--arc must be positive");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const double start = kTwoPi * u(rng);
    const double span = cfg.arc * (0.05 + 0.95 * u(rng));
    const AnglePoint tri[] = {AnglePoint(start), AnglePoint(start + span * u(rng)), AnglePoint(start + span)};
    try {
      if (body_face_certificate(3, tri).outcome != BodyOutcome::verified) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  report.add_claim(make_claim(tag("b6", "triples on short arcs without a certificate"), failures, Relation::equal, 0.0,
                              std::to_string(cfg.trials) + " triples, arc <= " + std::to_string(cfg.arc)));
  report.add_claim(make_claim(tag("b6", "arc vs arccos(1/8)"), cfg.arc, Relation::less_than, limit));

  // the density claim is asymptotic; coarser samples say little
  const int n = std::max(cfg.n, 24);
  const auto p = Polytope::build(3, equally_spaced(n));
  int certified = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        const AnglePoint pts[] = {p.angle(i), p.angle(j), p.angle(l)};
        if (covering_arc(pts).length > limit + 1e-12) continue;
        const int tri[] = {i, j, l};
        const auto cert = is_face(p, tri);
        if (cert && cert->dimension == 2) ++certified;
      }
    }
  }
  const auto dir = fixtures_dir(cfg.fixtures);
  if (dir && std::filesystem::exists(*dir / fixture_name(3, n))) {
    int expected = 0;
    for (const auto& f : load_fixture(*dir / fixture_name(3, n)).faces_of_dim(2)) {
      if (f.size() != 3) continue;
      const AnglePoint pts[] = {p.angle(f[0]), p.angle(f[1]), p.angle(f[2])};
      if (covering_arc(pts).length <= limit + 1e-12) ++expected;
    }
    report.add_claim(make_claim(tag("b6", "n=" + std::to_string(n) + " short triples vs hull fixture"), certified,
                                Relation::equal, expected));
  }
  const double ratio = certified / (n * (n - 1.0) * (n - 2.0) / 6.0);
  report.add_claim(make_claim(tag("b6", "n=" + std::to_string(n) + " certified short triples / C(n,3)"), ratio,
                              Relation::at_least, 0.08, std::to_string(certified) + " triples"));
  report.add_claim(make_claim(tag("b6", "n=" + std::to_string(n) + " density vs 3 (arccos(1/8) / 2pi)^2"), ratio,
                              Relation::at_most, 3.0 * std::pow(limit / kTwoPi, 2)));
}

}  // namespace bicyclic::cli

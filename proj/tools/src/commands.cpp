#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "bicyclic/bounds.hpp"
#include "bicyclic/census.hpp"
#include "bicyclic/errors.hpp"
#include "bicyclic/face_oracle.hpp"
#include "bicyclic/fixtures.hpp"
#include "bicyclic/self_inversive.hpp"

namespace bicyclic::cli {
namespace {

nlohmann::json roots_json(const RootMultiset& m) {
  auto arr = nlohmann::json::array();
  for (const auto& e : m.entries()) arr.push_back({{"re", e.value.real()}, {"im", e.value.imag()}, {"mult", e.multiplicity}});
  return arr;
}

nlohmann::json trig_json(const RakedTrigPoly& a) { return {{"k", a.k}, {"c", a.c}, {"a", a.a}, {"b", a.b}}; }

SymmetricPointSet make_layout(const RunConfig& cfg) {
  if (cfg.layout == "equal") return equally_spaced(cfg.n);
  if (cfg.layout == "random") {
    if (cfg.n < 2 || cfg.n % 2 != 0) throw std::invalid_argument("random layout needs an even n >= 2");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    std::vector<AnglePoint> ys;
    for (int i = 0; i < cfg.n / 2; ++i) ys.emplace_back(u(rng));
    return symmetrize(ys);
  }
  throw std::invalid_argument("unknown layout '" + cfg.layout + "' (expected equal or random)");
}

// Fixture for (k, n) if the layout matches and a fixture directory is known.
std::optional<HullFixture> find_fixture(const RunConfig& cfg, Report& report) {
  const auto dir = fixtures_dir(cfg.fixtures);
  if (!dir || cfg.layout != "equal") return std::nullopt;
  const auto path = *dir / fixture_name(cfg.k, cfg.n);
  if (!std::filesystem::exists(path)) {
    report.add_warning("no hull fixture at " + path.string());
    return std::nullopt;
  }
  return load_fixture(path);
}

}  // namespace

Report cmd_census(const RunConfig& cfg) {
  Report report("census");
  report.config() = {{"k", cfg.k}, {"n", cfg.n}, {"cap", cfg.cap}, {"layout", cfg.layout}, {"seed", cfg.seed},
                     {"budget", cfg.budget}};
  if (cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  if (cfg.cap < 2) throw std::invalid_argument("--cap must be >= 2");
  const auto xs = make_layout(cfg);
  const auto p = Polytope::build(cfg.k, xs);
  const int d = p.ambient_dim();
  const int n = p.size();

  CensusOptions opts;
  opts.cap = cfg.cap;
  opts.threads = cfg.threads;
  opts.max_lp_calls = cfg.budget;
  const auto census = enumerate_faces(p, opts);
  const int complete = census.complete_through_dim;

  auto& res = report.results();
  res["affine_dim"] = p.affine_dim();
  res["non_vertices"] = p.non_vertices();
  res["f_vector"] = census.f_vector;
  res["complete_through_dim"] = complete;
  res["partial"] = census.partial;
  res["lp_calls"] = census.lp_calls;
  auto& faces = res["faces"] = nlohmann::json::object();
  for (int j = 0; j <= complete; ++j) {
    auto arr = nlohmann::json::array();
    for (const auto& f : census.faces[j]) arr.push_back(f.vertices);
    faces[std::to_string(j)] = arr;
  }
  if (complete == d - 1 && !census.partial) {
    const auto h = f_to_h(census.f_vector, d);
    res["h_vector"] = h;
    res["h_symmetric"] = h_symmetric(h);
    if (!h_symmetric(h)) report.add_warning("f-vector is not simplicial; h-vector has no combinatorial meaning");
  }
  if (complete >= 1) {
    const double density = edge_density(census);
    res["edge_density"] = density;
    res["edge_density_reference"] = 1.0 - 1.0 / (d - 1);
    report.add_claim(make_claim("edge density vs 1 - 2^-d", density, Relation::at_most,
                                static_cast<double>(n) / (n - 1) * (1.0 - std::ldexp(1.0, -d))));
  }

  report.add_claim(make_claim("census complete within budget", census.partial ? 0.0 : 1.0, Relation::equal, 1.0,
                              "lp calls " + std::to_string(census.lp_calls)));
  for (int j = 0; j <= complete; ++j) {
    const auto row = sandwich_row(census, j);
    report.add_claim(make_claim(row.bound_name + " f_" + std::to_string(j), static_cast<double>(row.f_j),
                                Relation::at_most, row.bound));
    report.add_row({n, cfg.k, j, row.f_j, row.bound, static_cast<double>(row.f_j) / row.bound,
                    row.pass ? "pass" : "fail"});
    report.add_plot_point(j, static_cast<double>(row.f_j));
  }

  if (p.centrally_symmetric()) {
    int antipodal_edges = 0;
    if (complete >= 1) {
      for (const auto& e : census.faces[1]) {
        if (p.antipode_index(e.vertices[0]) == e.vertices[1]) ++antipodal_edges;
      }
      report.add_claim(make_claim("antipodal edges", antipodal_edges, Relation::equal, 0.0));
    }
    int asymmetric = 0;
    for (int j = 0; j <= complete; ++j) {
      std::set<std::vector<int>> keys;
      for (const auto& f : census.faces[j]) keys.insert(f.vertices);
      for (const auto& f : census.faces[j]) {
        std::vector<int> image;
        for (int v : f.vertices) image.push_back(p.antipode_index(v));
        std::sort(image.begin(), image.end());
        if (!keys.contains(image)) ++asymmetric;
      }
    }
    report.add_claim(make_claim("faces without antipodal partner", asymmetric, Relation::equal, 0.0));
  }

  if (const auto fx = find_fixture(cfg, report)) {
    if (fx->dims.size() != fx->faces.size()) throw std::runtime_error("fixture lacks face dimensions");
    for (int j = 0; j <= complete; ++j) {
      std::vector<std::vector<int>> mine;
      for (const auto& f : census.faces[j]) mine.push_back(f.vertices);
      const auto theirs = fx->faces_of_dim(j);
      int mismatches = 0;
      std::set<std::vector<int>> a(mine.begin(), mine.end());
      std::set<std::vector<int>> b(theirs.begin(), theirs.end());
      for (const auto& f : a) mismatches += b.contains(f) ? 0 : 1;
      for (const auto& f : b) mismatches += a.contains(f) ? 0 : 1;
      report.add_claim(make_claim("hull fixture " + std::to_string(j) + "-faces mismatches", mismatches,
                                  Relation::equal, 0.0, std::to_string(theirs.size()) + " faces in fixture"));
    }
  }
  return report;
}

Report cmd_psi(const RunConfig& cfg) {
  Report report("psi");
  report.config() = {{"k", cfg.k}, {"tol", cfg.tol}, {"grid", cfg.grid}};
  BodyFaceOptions opts;
  opts.grid_size = cfg.grid;
  const auto psi = psi_estimate(cfg.k, cfg.tol, opts);
  const double lower = (2.0 * cfg.k - 2.0) / (2.0 * cfg.k - 1.0) * kPi;
  auto& res = report.results();
  res["lo"] = psi.lo;
  res["hi"] = psi.hi;
  res["lo_verified"] = psi.lo_verified;
  res["evaluations"] = psi.evaluations;
  res["lower_bound"] = lower;
  res["conjectured_value"] = lower;
  res["conjectured_value_note"] = "conjecture, not a proven value";
  auto trace = nlohmann::json::array();
  for (const auto& [theta, margin] : psi.trace) {
    trace.push_back({{"theta", theta}, {"margin", margin}});
    report.add_plot_point(theta, margin);
  }
  res["trace"] = trace;
  for (const auto& w : psi.warnings) report.add_warning(w);
  report.add_claim(make_claim("psi interval lo vs (2k-2)pi/(2k-1) - tol", psi.lo, Relation::at_least, lower - cfg.tol));
  report.add_claim(make_claim("psi interval hi vs pi", psi.hi, Relation::less_than, kPi));
  report.add_claim(make_claim("lower end carries a verified certificate", psi.lo_verified ? 1.0 : 0.0,
                              Relation::equal, 1.0));
  return report;
}

Report cmd_bounds(const RunConfig& cfg) {
  Report report("bounds");
  report.config() = {{"k", cfg.k}, {"n", cfg.n}, {"j", cfg.j}, {"ns", cfg.ns}};
  if (cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  const int d = 2 * cfg.k;
  auto& res = report.results();
  if (cfg.ns.empty()) {
    const int n = cfg.n;
    res["ub1"] = ub1_bound(d, n);
    auto ub2 = nlohmann::json::object();
    for (int j = 1; j <= (d - 2) / 2; ++j) ub2[std::to_string(j)] = ub2_bound(d, n, j);
    res["ub2"] = ub2;
    std::vector<long long> hb;
    for (int j = 0; j <= d / 2; ++j) hb.push_back(ubt_hbound(d, n, j));
    res["ubt_hbound"] = hb;
    std::vector<long long> h(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d / 2; ++i) h[i] = h[d - i] = hb[i];
    const auto f = h_to_f(h, d);
    res["cyclic_h"] = h;
    res["cyclic_f"] = f;
    for (int j = 0; j < d; ++j) {
      double bound = static_cast<double>(f[j + 1]);
      if (j == 1) {
        bound = ub1_bound(d, n);
      } else if (j >= 2 && j <= (d - 2) / 2) {
        bound = ub2_bound(d, n, j);
      }
      report.add_row({n, cfg.k, j, f[j + 1], bound, static_cast<double>(f[j + 1]) / static_cast<double>(binomial(n, j + 1)),
                      "formula"});
      report.add_plot_point(j, static_cast<double>(f[j + 1]));
    }
    const auto back = f_to_h(f, d);
    report.add_claim(make_claim("f->h round trip on the cyclic bound", back == h ? 1.0 : 0.0, Relation::equal, 1.0));
    return report;
  }
  CensusOptions opts;
  opts.threads = cfg.threads;
  opts.max_lp_calls = cfg.budget;
  const auto rows = sandwich_report(cfg.k, cfg.ns, cfg.j, opts);
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n}, {"f_j", r.f_j}, {"exact", r.exact}, {"bound", r.bound}, {"bound_name", r.bound_name},
                   {"ubt", r.ubt}, {"scale", r.scale}, {"ratio", r.ratio}, {"upper_ratio", r.upper_ratio}});
    report.add_row({r.n, r.k, r.j, r.f_j, r.bound, r.ratio, r.pass ? "pass" : "fail"});
    report.add_plot_point(r.n, r.ratio);
    report.add_claim(make_claim("n=" + std::to_string(r.n) + " " + r.bound_name + " f_" + std::to_string(r.j),
                                static_cast<double>(r.f_j), Relation::at_most, r.bound));
    report.add_claim(make_claim("n=" + std::to_string(r.n) + " f_" + std::to_string(r.j) + " exact",
                                r.exact ? 1.0 : 0.0, Relation::equal, 1.0));
  }
  res["sandwich"] = arr;
  return report;
}

Report cmd_deform_demo(const RunConfig& cfg) {
  Report report("deform-demo");
  report.config() = {{"k", cfg.k}, {"lambda", cfg.lambda}, {"random", cfg.random_poly}, {"seed", cfg.seed}};
  if (cfg.k < 2) throw std::invalid_argument("--k must be >= 2");
  const int k = cfg.k;
  RakedTrigPoly a = RakedTrigPoly::zero(k);
  if (cfg.random_poly) {
    std::mt19937_64 rng(cfg.seed);
    a = random_real_raked(k, rng);
  } else {
    a.c = 1.0;
    a.b[k - 1] = -1.0;
  }
  const auto d = trig_to_selfinv(a);
  const auto roots = selfinv_roots(d);
  const auto moved = deform(roots.roots, cfg.lambda);
  const auto d_lambda = poly_from_multiset(moved);
  auto& res = report.results();
  res["polynomial"] = trig_json(a);
  res["roots"] = roots_json(roots.roots);
  res["deformed_roots"] = roots_json(moved);
  auto coeffs = nlohmann::json::array();
  for (const auto& c : d_lambda.coeffs()) coeffs.push_back({c.real(), c.imag()});
  res["deformed_coefficients"] = coeffs;
  res["deformed_polynomial"] = trig_json(selfinv_to_trig(d_lambda));
  for (const auto& e : moved.entries()) report.add_plot_point(e.value.real(), e.value.imag());

  report.add_claim(make_claim("deformed multiset size", moved.size(), Relation::equal, roots.roots.size()));
  report.add_claim(make_claim("deformed odd coefficients (relative)", d_lambda.raked_residual(), Relation::less_than, 1e-8));
  report.add_claim(make_claim("deformed imaginary parts (relative)", d_lambda.imag_residual(), Relation::less_than, 1e-8));
  double worst = 0.0;
  for (const auto& s : power_sum_check(moved, k)) worst = std::max(worst, std::abs(s));
  report.add_claim(make_claim("deformed odd power sums", worst, Relation::less_than, 1e-8));

  if (!cfg.random_poly) {
    // unit-circle images at arccos(lambda cos(2 pi j / (2k-1)))
    std::vector<double> predicted;
    for (int j = 0; j < 2 * k - 1; ++j) {
      const double x = cfg.lambda * std::cos(kTwoPi * j / (2 * k - 1));
      if (std::abs(x) <= 1.0) {
        predicted.push_back(std::acos(x));
        predicted.push_back(kTwoPi - std::acos(x));
      }
    }
    double err = 0.0;
    int matched = 0;
    for (const auto& e : moved.entries()) {
      if (std::abs(std::abs(e.value) - 1.0) > 1e-8) continue;
      const AnglePoint t(std::arg(e.value));
      double best = kPi;
      for (double q : predicted) best = std::min(best, arc_distance(t, AnglePoint(q)));
      err = std::max(err, best);
      ++matched;
    }
    res["predicted_circle_angles"] = predicted;
    report.add_claim(make_claim("unit-circle images vs arccos(lambda cos(2 pi j/(2k-1)))", err, Relation::less_than,
                                1e-6, std::to_string(matched) + " distinct unit-circle roots"));
  }
  return report;
}

Report cmd_verify(const RunConfig& cfg) {
  Report report("verify");
  report.config() = {{"suite", cfg.suite}, {"k", cfg.k}, {"n", cfg.n}, {"trials", cfg.trials},
                     {"arc", cfg.arc}, {"seed", cfg.seed}};
  static const std::map<std::string, void (*)(const RunConfig&, Report&)> suites = {
      {"smilansky", suite_smilansky}, {"deformation", suite_deformation}, {"newton", suite_newton},
      {"simplex", suite_simplex},     {"nonflat", suite_nonflat},         {"b6", suite_b6}};
  if (cfg.suite == "all") {
    for (const auto& [name, fn] : suites) fn(cfg, report);
  } else {
    const auto it = suites.find(cfg.suite);
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
    it->second(cfg, report);
  }
  return report;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto start = std::chrono::steady_clock::now();
    Report report("");
    if (cfg.command == "census") {
      report = cmd_census(cfg);
    } else if (cfg.command == "psi") {
      report = cmd_psi(cfg);
    } else if (cfg.command == "verify") {
      report = cmd_verify(cfg);
    } else if (cfg.command == "bounds") {
      report = cmd_bounds(cfg);
    } else if (cfg.command == "deform-demo") {
      report = cmd_deform_demo(cfg);
    } else {
      throw std::invalid_argument("unknown command '" + cfg.command + "'");
    }
    if (cfg.timing) {
      report.set_elapsed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    if (cfg.json_path) report.write_json(*cfg.json_path);
    if (cfg.csv_path) report.write_csv(*cfg.csv_path);
    if (cfg.plot_path) report.write_plot(*cfg.plot_path);
    out << report.summary();
    return report.all_pass() ? kExitPass : kExitClaimFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bicyclic::cli

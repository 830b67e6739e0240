#include "report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bicyclic::cli {
namespace {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::less_than: return "<";
    case Relation::equal: return "==";
  }
  return "?";
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << std::setprecision(17);
  return out;
}

}  // namespace

double Claim::margin() const {
  switch (relation) {
    case Relation::at_most:
    case Relation::less_than: return bound - value;
    case Relation::at_least: return value - bound;
    case Relation::equal: return -std::abs(value - bound);
  }
  return 0.0;
}

Claim make_claim(std::string name, double value, Relation rel, double bound, std::string detail) {
  Claim c{std::move(name), value, rel, bound, false, std::move(detail)};
  switch (rel) {
    case Relation::at_most: c.pass = value <= bound; break;
    case Relation::at_least: c.pass = value >= bound; break;
    case Relation::less_than: c.pass = value < bound; break;
    case Relation::equal: c.pass = value == bound; break;
  }
  return c;
}

Report::Report(std::string command) : command_(std::move(command)) {}

const Claim& Report::add_claim(Claim c) {
  claims_.push_back(std::move(c));
  return claims_.back();
}

bool Report::all_pass() const {
  for (const auto& c : claims_) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command_;
  j["config"] = config_;
  j["results"] = results_;
  auto& claims = j["claims"] = nlohmann::json::array();
  for (const auto& c : claims_) {
    claims.push_back({{"name", c.name},
                      {"value", c.value},
                      {"relation", relation_symbol(c.relation)},
                      {"bound", c.bound},
                      {"margin", c.margin()},
                      {"status", c.pass ? "pass" : "fail"},
                      {"detail", c.detail}});
  }
  j["warnings"] = warnings_;
  j["status"] = all_pass() ? "pass" : "fail";
  if (elapsed_ >= 0.0) j["elapsed_seconds"] = elapsed_;
  return j;
}

void Report::write_json(const std::filesystem::path& path) const {
  auto out = open_out(path);
  out << to_json().dump(2) << '\n';
}

void Report::write_csv(const std::filesystem::path& path) const {
  auto out = open_out(path);
  out << "n,k,j,f_j,bound,ratio,status\n";
  for (const auto& r : rows_) {
    out << r.n << ',' << r.k << ',' << r.j << ',' << r.f_j << ',' << r.bound << ',' << r.ratio << ',' << r.status
        << '\n';
  }
}

void Report::write_plot(const std::filesystem::path& path) const {
  auto out = open_out(path);
  for (const auto& [x, y] : plot_) out << x << ' ' << y << '\n';
}

std::string Report::summary() const {
  std::ostringstream s;
  s << std::setprecision(10);
  s << command_ << '\n';
  for (const auto& c : claims_) {
    s << (c.pass ? "  PASS " : "  FAIL ") << c.name << ": " << c.value << ' ' << relation_symbol(c.relation) << ' '
      << c.bound << " (margin " << c.margin() << ")";
    if (!c.detail.empty()) s << "  " << c.detail;
    s << '\n';
  }
  for (const auto& w : warnings_) s << "  warning: " << w << '\n';
  s << (all_pass() ? "status: pass" : "status: fail") << '\n';
  return s.str();
}

}  // namespace bicyclic::cli

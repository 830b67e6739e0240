#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace bicyclic::cli {

enum class Relation { at_most, at_least, less_than, equal };

/// One numeric statement checked against a bound.
struct Claim {
  std::string name;
  double value = 0.0;
  Relation relation = Relation::at_most;
  double bound = 0.0;
  bool pass = false;
  std::string detail;

  double margin() const;
};

Claim make_claim(std::string name, double value, Relation rel, double bound, std::string detail = {});

struct CsvRow {
  int n = 0;
  int k = 0;
  int j = 0;
  long long f_j = 0;
  double bound = 0.0;
  double ratio = 0.0;
  std::string status;
};

class Report {
 public:
  explicit Report(std::string command);

  const std::string& command() const { return command_; }
  nlohmann::json& config() { return config_; }
  nlohmann::json& results() { return results_; }
  const nlohmann::json& results() const { return results_; }
  const std::vector<Claim>& claims() const { return claims_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::vector<CsvRow>& rows() const { return rows_; }
  const std::vector<std::pair<double, double>>& plot() const { return plot_; }

  const Claim& add_claim(Claim c);
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }
  void add_row(CsvRow r) { rows_.push_back(std::move(r)); }
  void add_plot_point(double x, double y) { plot_.emplace_back(x, y); }
  void set_elapsed(double seconds) { elapsed_ = seconds; }

  bool all_pass() const;
  /// Elapsed time is included only when set, so default reports are reproducible.
  nlohmann::json to_json() const;

  void write_json(const std::filesystem::path& path) const;
  void write_csv(const std::filesystem::path& path) const;
  void write_plot(const std::filesystem::path& path) const;
  std::string summary() const;

 private:
  std::string command_;
  nlohmann::json config_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  std::vector<Claim> claims_;
  std::vector<std::string> warnings_;
  std::vector<CsvRow> rows_;
  std::vector<std::pair<double, double>> plot_;
  double elapsed_ = -1.0;
};

}  // namespace bicyclic::cli

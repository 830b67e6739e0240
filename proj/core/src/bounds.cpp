#include "bicyclic/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bicyclic/circle.hpp"

namespace bicyclic {
namespace {

void check_even_dim(int d, const char* who) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument(std::string(who) + ": d must be even and >= 2");
}

}  // namespace

long long binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (long long i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i is exact; divide first to delay overflow
    const long long g = std::gcd(acc, i);
    const long long factor = (n - r + i) / (i / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) throw std::overflow_error("binomial: result exceeds int64");
  }
  return acc;
}

double ub1_bound(int d, int n) {
  check_even_dim(d, "ub1_bound");
  if (n < 2) throw std::invalid_argument("ub1_bound: n must be >= 2");
  return 0.5 * n * n * (1.0 - std::ldexp(1.0, -d));
}

double ub2_bound(int d, int n, int j) {
  check_even_dim(d, "ub2_bound");
  if (n < 2) throw std::invalid_argument("ub2_bound: n must be >= 2");
  if (j < 1 || j > (d - 2) / 2) {
    throw std::invalid_argument("ub2_bound: j must satisfy 1 <= j <= (d-2)/2");
  }
  return static_cast<double>(n) / (n - 1) * (1.0 - std::ldexp(1.0, -d)) * static_cast<double>(binomial(n, j + 1));
}

std::vector<long long> f_to_h(std::span<const long long> f, int d) {
  if (d < 1) throw std::invalid_argument("f_to_h: d must be positive");
  if (static_cast<int>(f.size()) != d + 1) {
    throw std::invalid_argument("f_to_h: expected d+1 entries f_{-1}..f_{d-1}, got " + std::to_string(f.size()));
  }
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    long long s = 0;
    for (int j = 0; j <= i; ++j) {
      const long long term = binomial(d - j, i - j) * f[j];
      s += ((i - j) % 2 == 0) ? term : -term;
    }
    h[i] = s;
  }
  return h;
}

std::vector<long long> h_to_f(std::span<const long long> h, int d) {
  if (d < 1) throw std::invalid_argument("h_to_f: d must be positive");
  if (static_cast<int>(h.size()) != d + 1) {
    throw std::invalid_argument("h_to_f: expected d+1 entries h_0..h_d, got " + std::to_string(h.size()));
  }
  std::vector<long long> f(static_cast<std::size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long s = 0;
    for (int i = 0; i <= j; ++i) s += binomial(d - i, d - j) * h[i];
    f[j] = s;
  }
  return f;
}

bool h_symmetric(std::span<const long long> h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != h[h.size() - 1 - i]) return false;
  }
  return true;
}

bool h_nonnegative(std::span<const long long> h) {
  for (long long x : h) {
    if (x < 0) return false;
  }
  return true;
}

long long ubt_hbound(int d, int n, int j) {
  check_even_dim(d, "ubt_hbound");
  if (j < 0 || j > d / 2) throw std::invalid_argument("ubt_hbound: j must satisfy 0 <= j <= d/2");
  if (n < d + 1) throw std::invalid_argument("ubt_hbound: n must be >= d+1");
  return binomial(n - d + j - 1, j);
}

long long ubt_fbound(int d, int n, int j) {
  check_even_dim(d, "ubt_fbound");
  if (j < -1 || j > d - 1) throw std::invalid_argument("ubt_fbound: j out of range");
  std::vector<long long> h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d / 2; ++i) {
    h[i] = ubt_hbound(d, n, i);
    h[d - i] = h[i];
  }
  return h_to_f(h, d)[j + 1];
}

SandwichRow sandwich_row(const FaceCensus& census, int j) {
  const int k = census.k;
  const int d = 2 * k;
  const int n = census.n;
  if (j < 0 || j > d - 1) throw std::invalid_argument("sandwich_row: j out of range");
  SandwichRow row;
  row.n = n;
  row.k = k;
  row.j = j;
  row.f_j = census.f(j);
  row.exact = !census.partial && j <= census.complete_through_dim;
  row.ubt = ubt_fbound(d, n, j);
  if (j == 1) {
    row.bound = ub1_bound(d, n);
    row.bound_name = "UB1";
  } else if (j >= 1 && j <= (d - 2) / 2) {
    row.bound = ub2_bound(d, n, j);
    row.bound_name = "UB2";
  } else {
    row.bound = static_cast<double>(row.ubt);
    row.bound_name = "UBT";
  }
  row.scale = j < k ? binomial(n, j + 1) : binomial(n, k);
  row.ratio = static_cast<double>(row.f_j) / static_cast<double>(row.scale);
  row.upper_ratio = static_cast<double>(row.ubt) / static_cast<double>(row.scale);
  row.pass = static_cast<double>(row.f_j) <= row.bound && row.f_j <= row.ubt;
  return row;
}

std::vector<SandwichRow> sandwich_report(int k, std::span<const int> ns, int j, const CensusOptions& opts) {
  if (k < 1) throw std::invalid_argument("sandwich_report: k must be >= 1");
  if (j < 0 || j >= 2 * k) throw std::invalid_argument("sandwich_report: j must satisfy 0 <= j < 2k");
  std::vector<SandwichRow> rows;
  for (int n : ns) {
    const auto p = Polytope::build(k, equally_spaced(n));
    CensusOptions o = opts;
    o.cap = std::max(o.cap, j + 1);
    rows.push_back(sandwich_row(enumerate_faces(p, o), j));
  }
  return rows;
}

}  // namespace bicyclic

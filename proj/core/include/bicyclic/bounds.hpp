#pragma once

#include <span>
#include <string>
#include <vector>

#include "bicyclic/census.hpp"

namespace bicyclic {

/// C(n, r); zero outside 0 <= r <= n. Throws std::overflow_error past int64.
long long binomial(long long n, long long r);

/// n^2 (1 - 2^-d) / 2, the edge bound for centrally symmetric d-polytopes.
double ub1_bound(int d, int n);

/// n/(n-1) (1 - 2^-d) C(n, j+1), for 1 <= j <= (d-2)/2.
double ub2_bound(int d, int n, int j);

/// f = (f_{-1}, f_0, ..., f_{d-1}) -> h = (h_0, ..., h_d).
std::vector<long long> f_to_h(std::span<const long long> f, int d);
/// Inverse of f_to_h.
std::vector<long long> h_to_f(std::span<const long long> h, int d);

bool h_symmetric(std::span<const long long> h);
bool h_nonnegative(std::span<const long long> h);

/// C(n-d+j-1, j), for 0 <= j <= d/2.
long long ubt_hbound(int d, int n, int j);

/// Upper bound on f_j of a d-polytope with n vertices (d even): the f-vector
/// obtained from the h-bounds extended symmetrically, i.e. the cyclic polytope.
long long ubt_fbound(int d, int n, int j);

struct SandwichRow {
  int n = 0;
  int k = 0;
  int j = 0;
  long long f_j = 0;
  bool exact = false;
  /// UB1/UB2 where they apply, otherwise the upper-bound-theorem value.
  double bound = 0.0;
  std::string bound_name;
  long long ubt = 0;
  /// Denominator: C(n, j+1) for j < k, C(n, k) otherwise.
  long long scale = 1;
  double ratio = 0.0;
  double upper_ratio = 0.0;
  bool pass = false;
};

/// f_j of B_2k(equally_spaced(n)) from a census with cap j+1, next to its bounds.
std::vector<SandwichRow> sandwich_report(int k, std::span<const int> ns, int j, const CensusOptions& opts = {});

/// Same comparison for a census that has already been computed.
SandwichRow sandwich_row(const FaceCensus& census, int j);

}  // namespace bicyclic

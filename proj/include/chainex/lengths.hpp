#pragma once

#include <optional>
#include <vector>

#include "chainex/rational.hpp"

namespace chainex::core {

// beta_k = 1 + (k-1) alpha_k
Rational beta_from_alpha(const Rational& alpha, long long k);
// alpha_k = (beta_k - 1) / (k-1); undefined for k == 1
std::optional<Rational> alpha_from_beta(const Rational& beta, long long k);

// Upper bound on the asymptotic l-length implied by a known k-length:
// l(k-1)/(k(l-1)) * alpha_k + (l-k)/(k(l-1)), for l >= k >= 2.
Rational alpha_upper_bound(long long l, long long k, const Rational& alpha_k);
// The l -> infinity form: (k-1)/k * alpha_k + 1/k.
Rational alpha_upper_bound_limit(long long k, const Rational& alpha_k);

struct LengthPoint {
  long long n = 0;          // instance parameter, echoed into the row
  int ambient_dim = 0;      // dimension of the polytope the chain lives in
  long long excess = 0;     // chain excess (exact minimum or constructed)
  long long facet_arg = 0;  // argument handed to facet_bound for E_k
};

struct LengthEstimateRow {
  long long n = 0;
  int k = 0;
  long long excess = 0;
  long long e_bound = 0;                // E_k
  std::optional<Rational> ratio;        // excess / E_k; nullopt when E_k == 0
  std::optional<Rational> beta_finite;  // f_k / ambient; nullopt in dim 0
};

struct LengthTable {
  std::vector<LengthEstimateRow> rows;
  // non-decreasing over consecutive defined ratios, in input order
  bool ratio_non_decreasing = true;
};

LengthTable length_estimates(const std::vector<LengthPoint>& points, int k);

}  // namespace chainex::core

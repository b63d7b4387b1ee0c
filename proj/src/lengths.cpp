#include "chainex/lengths.hpp"

#include <stdexcept>

#include "chainex/core.hpp"

namespace chainex::core {

Rational beta_from_alpha(const Rational& alpha, long long k) {
  if (k < 1) throw std::invalid_argument("beta_from_alpha: k must be >= 1");
  return Rational(1) + Rational(k - 1) * alpha;
}

std::optional<Rational> alpha_from_beta(const Rational& beta, long long k) {
  if (k < 1) throw std::invalid_argument("alpha_from_beta: k must be >= 1");
  if (k == 1) return std::nullopt;
  return (beta - Rational(1)) / Rational(k - 1);
}

Rational alpha_upper_bound(long long l, long long k, const Rational& alpha_k) {
  if (k < 2) throw std::invalid_argument("alpha_upper_bound: k must be >= 2");
  if (l < k) throw std::invalid_argument("alpha_upper_bound: l must be >= k");
  return Rational(l * (k - 1), k * (l - 1)) * alpha_k + Rational(l - k, k * (l - 1));
}

Rational alpha_upper_bound_limit(long long k, const Rational& alpha_k) {
  if (k < 2) throw std::invalid_argument("alpha_upper_bound_limit: k must be >= 2");
  return Rational(k - 1, k) * alpha_k + Rational(1, k);
}

LengthTable length_estimates(const std::vector<LengthPoint>& points, int k) {
  if (k < 1) throw std::invalid_argument("length_estimates: k must be >= 1");
  LengthTable table;
  table.rows.reserve(points.size());

  std::optional<Rational> prev_ratio;
  for (const LengthPoint& pt : points) {
    LengthEstimateRow row;
    row.n = pt.n;
    row.k = k;
    row.excess = pt.excess;
    row.e_bound = facet_bound(k, pt.facet_arg);
    if (row.e_bound != 0) row.ratio = Rational(pt.excess, row.e_bound);
    if (pt.ambient_dim > 0) {
      // excess determines the chain's dimension sum
      long long f = pt.ambient_dim - 1 - pt.excess + k;
      row.beta_finite = Rational(f, pt.ambient_dim);
    }
    if (row.ratio) {
      if (prev_ratio && *prev_ratio > *row.ratio) table.ratio_non_decreasing = false;
      prev_ratio = row.ratio;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace chainex::core

#pragma once

#include <optional>
#include <vector>

#include "chainex/associahedron.hpp"
#include "chainex/lengths.hpp"
#include "chainex/permutahedron.hpp"
#include "chainex/rational.hpp"

namespace chainex::cert {

// Per-member comparison of the measured block count against the closed-form
// prediction (l-1)n - 1 for l > 2 (n for l <= 2), where applicable.
struct PartComparison {
  int l = 0;
  long long measured = 0;
  std::optional<long long> predicted;
  bool match() const { return predicted.has_value() && *predicted == measured; }
};

struct ZebraCertificate {
  int m = 0, n = 0, k = 0;
  bool partial = false;
  long long ground = 0;  // the chain lives in the permutahedron on {1..ground}
  perm::PartitionChain chain;
  std::vector<bool> pair_valid;  // consecutive-pair verdicts, re-verified

  // Comparisons against the square-grid closed forms; empty/nullopt when the
  // forms do not apply (non-square or partial grids, k < 2, n < k-2).
  std::vector<PartComparison> part_counts;
  std::optional<long long> predicted_excess;

  long long excess = 0;
  long long e_bound = 0;  // facet_bound(k, ground)
  std::optional<Rational> ratio;
  std::optional<Rational> beta_finite;
};

ZebraCertificate zebra_certificate(int m, int n, int k);
ZebraCertificate partial_zebra_certificate(int a, int k);

struct ThujaCertificate {
  int n = 0, k = 0;
  assoc::TreeChain chain;
  std::vector<bool> pair_valid;
  std::vector<int> dims_formula;  // floor((n-l)/2)
  // Whether top(member l) equals bottom(member l+1); the chain relation holds
  // with equality everywhere it is true.
  std::vector<bool> top_matches_next_bottom;

  long long excess = 0;          // measured on the chain
  long long excess_formula = 0;  // (n-3) - sum(floor((n-l)/2) - 1)
  long long e_bound = 0;         // facet_bound(k, n-2)
  std::optional<Rational> ratio;
  std::optional<Rational> k_length_bound;  // (k-2)/(2k-2) for k >= 2
  std::optional<Rational> beta_finite;
};

ThujaCertificate thuja_certificate(int n, int k);

}  // namespace chainex::cert

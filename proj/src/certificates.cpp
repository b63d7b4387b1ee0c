#include "chainex/certificates.hpp"

#include "chainex/core.hpp"

namespace chainex::cert {

namespace {

void finish_zebra(ZebraCertificate& c, int k) {
  for (size_t i = 0; i + 1 < c.chain.members.size(); ++i)
    c.pair_valid.push_back(perm::weak_face_leq(c.chain.members[i], c.chain.members[i + 1]));

  c.excess = c.chain.excess();
  c.e_bound = core::facet_bound(k, c.ground);
  if (c.e_bound != 0) c.ratio = Rational(c.excess, c.e_bound);
  const int ambient = c.chain.ambient_dim();
  if (ambient > 0) {
    const long long f = ambient - 1 - c.excess + k;
    c.beta_finite = Rational(f, ambient);
  }

  // Closed forms are stated for full square grids only.
  if (!c.partial && c.m == c.n) {
    const long long n = c.n;
    for (int l = 1; l <= k; ++l) {
      PartComparison pc;
      pc.l = l;
      pc.measured = c.chain.members[l - 1].block_count();
      if (l <= 2) {
        pc.predicted = n;
      } else if (n >= l - 2) {
        pc.predicted = (l - 1) * n - 1;
      }
      c.part_counts.push_back(pc);
    }
    if (k >= 2 && n >= k - 2)
      c.predicted_excess =
          (1 - k) * n * n + (1 + static_cast<long long>(k) * (k - 1) / 2) * n + 1;
  }
}

}  // namespace

ZebraCertificate zebra_certificate(int m, int n, int k) {
  ZebraCertificate c;
  c.m = m;
  c.n = n;
  c.k = k;
  c.partial = false;
  c.ground = static_cast<long long>(m) * n;
  c.chain = perm::zebra_chain(m, n, k);
  finish_zebra(c, k);
  return c;
}

ZebraCertificate partial_zebra_certificate(int a, int k) {
  ZebraCertificate c;
  c.k = k;
  c.partial = true;
  c.ground = a;
  c.chain = perm::partial_zebra_chain(a, k);
  int s = 0;
  while ((s + 1) * (s + 1) <= a - 1) ++s;
  c.n = s + 1;                     // grid width
  c.m = (a + c.n - 1) / c.n;       // occupied rows
  finish_zebra(c, k);
  return c;
}

ThujaCertificate thuja_certificate(int n, int k) {
  ThujaCertificate c;
  c.n = n;
  c.k = k;
  c.chain = assoc::thuja_chain(n, k);

  for (size_t i = 0; i + 1 < c.chain.members.size(); ++i) {
    c.pair_valid.push_back(assoc::tree_face_leq(c.chain.members[i], c.chain.members[i + 1]));
    const auto top = assoc::tree_face_extremes(c.chain.members[i]).second;
    const auto bottom = assoc::tree_face_extremes(c.chain.members[i + 1]).first;
    c.top_matches_next_bottom.push_back(top == bottom);
  }
  for (int l = 1; l <= k; ++l) c.dims_formula.push_back((n - l) / 2);

  c.excess = c.chain.excess();
  c.excess_formula = assoc::thuja_excess(n, k);
  c.e_bound = core::facet_bound(k, n - 2);
  if (c.e_bound != 0) c.ratio = Rational(c.excess, c.e_bound);
  if (k >= 2) c.k_length_bound = Rational(k - 2, 2 * k - 2);
  const int ambient = c.chain.ambient_dim();
  if (ambient > 0) {
    const long long f = ambient - 1 - c.excess + k;
    c.beta_finite = Rational(f, ambient);
  }
  return c;
}

}  // namespace chainex::cert

#include "chainex/rational.hpp"

#include <cstdio>
#include <cstdlib>

namespace chainex {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal(const Rational& r, int places) {
  long long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  long long num = r.numerator();
  long long den = r.denominator();  // > 0, boost keeps the sign in num
  long long scaled = num * scale;
  long long q = scaled / den;
  long long rem = scaled % den;
  if (2 * std::llabs(rem) >= den) q += (num < 0) ? -1 : 1;

  long long ip = std::llabs(q) / scale;
  long long fp = std::llabs(q) % scale;
  char buf[64];
  if (places > 0) {
    std::snprintf(buf, sizeof buf, "%s%lld.%0*lld", q < 0 ? "-" : "", ip, places, fp);
  } else {
    std::snprintf(buf, sizeof buf, "%s%lld", q < 0 ? "-" : "", ip);
  }
  return buf;
}

}  // namespace chainex

#pragma once

#include <boost/rational.hpp>
#include <string>

namespace chainex {

using Rational = boost::rational<long long>;

// "p/q", with "/q" omitted when q == 1
std::string format_rational(const Rational& r);

// Fixed-point decimal with `places` digits, rounding half away from zero.
std::string format_decimal(const Rational& r, int places = 6);

}  // namespace chainex

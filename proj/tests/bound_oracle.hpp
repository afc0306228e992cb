#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace qnf::testing {

using Dec = boost::multiprecision::cpp_dec_float_100;

inline Dec factorial(unsigned n) {
  Dec f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Dec dec_pi() { return boost::math::constants::pi<Dec>(); }

// Direct evaluation of B / A and the bound, no logarithms until the end.
inline Dec oracle_bound(const Dec& epsilon, unsigned p) {
  const unsigned d = p * p - 1;
  Dec b = boost::multiprecision::sqrt(boost::multiprecision::pow(Dec(2), p - 1) * p) *
          boost::multiprecision::pow(dec_pi(), (p - 1) * (p - 2) / 2);
  for (unsigned k = 1; k < p; ++k) b /= factorial(k);
  // d = p^2 - 1 is divisible by 8 for odd p, so Gamma(d/2) = (d/2 - 1)!
  const Dec a = boost::multiprecision::pow(Dec(p), 4) * boost::multiprecision::pow(dec_pi(), d / 2) /
                (Dec(p * (p - 1) - 1) * factorial(d / 2 - 1));
  return (boost::multiprecision::log(b / a) + d * boost::multiprecision::log(1 / epsilon)) /
         boost::multiprecision::log(Dec(p * (p - 1)));
}

}  // namespace qnf::testing

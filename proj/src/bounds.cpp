#include "qnf/bounds.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qnf/errors.hpp"
#include "qnf/residue.hpp"

namespace qnf {

namespace {

BigCount ipow(BigCount base, unsigned e) { return boost::multiprecision::pow(base, e); }

}  // namespace

BigCount m_count(unsigned t, unsigned p) {
  require_supported_prime(p);
  if (t < 1) throw DomainError("m(t) needs t >= 1");
  const BigCount q = p;
  return q * q * ipow(q * (q - 1), t + 1) * (1 + q) * (1 + q);
}

BigCount clifford_count(unsigned p) {
  require_supported_prime(p);
  const BigCount q = p;
  return ipow(q, 4) * (q * q - 1);
}

BigCount n_cumulative(unsigned n, unsigned p) {
  require_supported_prime(p);
  if (n < 1) throw DomainError("N(n) needs n >= 1");
  const BigCount q = p;
  const BigCount num = ipow(q, 4) * ((q * q - 1) * (q * q - 1) * ipow(q * (q - 1), n) - q * q * q + q);
  const BigCount den = q * (q - 1) - 1;
  if (num % den != 0) throw std::logic_error("N(n) closed form is not integral");
  return num / den;
}

Real log_vol_su(unsigned p) {
  require_supported_prime(p);
  using boost::multiprecision::log;
  const Real pi = boost::math::constants::pi<Real>();
  // sqrt(2^{p-1} p) pi^{(p-1)(p-2)/2} / prod_{k<p} k!
  Real s = (Real(p - 1) * log(Real(2)) + log(Real(p))) / 2;
  s += Real((p - 1) * (p - 2)) / 2 * log(pi);
  for (unsigned k = 1; k < p; ++k) s -= boost::math::lgamma(Real(k + 1));
  return s;
}

Real vol_su(unsigned p) { return boost::multiprecision::exp(log_vol_su(p)); }

Real log_a_constant(unsigned p, GammaVariant variant) {
  require_supported_prime(p);
  using boost::multiprecision::log;
  const Real pi = boost::math::constants::pi<Real>();
  const Real d = Real(p) * p - 1;
  const Real gamma_arg = variant == GammaVariant::Theorem ? d / 2 : d / 2 + 1;
  return 4 * log(Real(p)) + d / 2 * log(pi) - log(Real(p) * (p - 1) - 1) - boost::math::lgamma(gamma_arg);
}

Real t_lower_bound(const Real& epsilon, unsigned p, GammaVariant variant) {
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0, 1)");
  using boost::multiprecision::log;
  const Real d = Real(p) * p - 1;
  return (log_vol_su(p) - log_a_constant(p, variant) + d * log(1 / epsilon)) / log(Real(p) * (p - 1));
}

}  // namespace qnf

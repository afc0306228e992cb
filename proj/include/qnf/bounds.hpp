#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qnf {

using BigCount = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

// Normal forms with T-count exactly t >= 1, phases included.
BigCount m_count(unsigned t, unsigned p);
// T-count 0: the Clifford group in SU(p), p^4 (p^2 - 1) elements.
BigCount clifford_count(unsigned p);
// Closed form of clifford_count + sum_{t=1}^{n} m_count(t); n >= 1.
BigCount n_cumulative(unsigned n, unsigned p);

Real log_vol_su(unsigned p);
Real vol_su(unsigned p);

// Which Gamma factor enters the constant A: Gamma((p^2 - 1)/2) as in the
// theorem statement, or the ball-volume Gamma(d/2 + 1) with d = p^2 - 1.
enum class GammaVariant { Theorem, BallVolume };

Real log_a_constant(unsigned p, GammaVariant variant = GammaVariant::Theorem);
// (ln(B / A) + (p^2 - 1) ln(1 / epsilon)) / ln(p (p - 1)); epsilon in (0, 1).
Real t_lower_bound(const Real& epsilon, unsigned p, GammaVariant variant = GammaVariant::Theorem);

}  // namespace qnf

#include "qnf/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include "qnf/errors.hpp"

namespace qnf {

namespace {

void check_same(unsigned a, unsigned b) {
  if (a != b) throw PrimeMismatch();
}

unsigned reduce_exponent(std::int64_t k, unsigned p) {
  std::int64_t r = k % static_cast<std::int64_t>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

}  // namespace

CycloInt::CycloInt(unsigned p) : p_(p) {
  require_supported_prime(p);
  coeffs_.resize(p - 1);
}

CycloInt::CycloInt(unsigned p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_supported_prime(p);
  if (coeffs_.size() != p - 1) {
    throw DomainError("CycloInt needs exactly p-1 = " + std::to_string(p - 1) + " coefficients");
  }
}

CycloInt CycloInt::from_integer(unsigned p, BigInt n) {
  CycloInt x(p);
  x.coeffs_[0] = std::move(n);
  return x;
}

CycloInt CycloInt::omega_power(unsigned p, std::int64_t k) {
  CycloInt x(p);
  const unsigned e = reduce_exponent(k, p);
  if (e == p - 1) {
    for (auto& c : x.coeffs_) c = -1;
  } else {
    x.coeffs_[e] = 1;
  }
  return x;
}

CycloInt CycloInt::chi(unsigned p) {
  CycloInt x(p);
  x.coeffs_[0] = 1;
  x.coeffs_[1] = -1;
  return x;
}

CycloInt CycloInt::chi_power(unsigned p, std::size_t k) {
  CycloInt x = from_integer(p, 1);
  for (std::size_t i = 0; i < k; ++i) x = x.mul_chi();
  return x;
}

CycloInt CycloInt::from_redundant(unsigned p, std::vector<BigInt> coeffs) {
  // w^{p-1} = -(1 + w + ... + w^{p-2})
  const BigInt top = coeffs[p - 1];
  coeffs.pop_back();
  if (!top.is_zero()) {
    for (auto& c : coeffs) c -= top;
  }
  return CycloInt(p, std::move(coeffs));
}

bool CycloInt::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  check_same(p_, o.p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  check_same(p_, o.p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  check_same(a.p_, b.p_);
  const unsigned p = a.p_;
  std::vector<BigInt> acc(p);
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j + 1 < p; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      unsigned k = i + j;
      if (k >= p) k -= p;
      acc[k].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return CycloInt::from_redundant(p, std::move(acc));
}

CycloInt CycloInt::operator-() const {
  CycloInt r(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

CycloInt CycloInt::mul_omega_power(std::int64_t k) const {
  const unsigned s = reduce_exponent(k, p_);
  if (s == 0) return *this;
  std::vector<BigInt> acc(p_);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    unsigned t = i + s;
    if (t >= p_) t -= p_;
    acc[t] = coeffs_[i];
  }
  return from_redundant(p_, std::move(acc));
}

CycloInt CycloInt::mul_chi() const {
  // (1 - w) x: coefficient i becomes a_i - a_{i-1}, then w^{p-1} = -(sum of lower powers)
  std::vector<BigInt> acc(p_);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    acc[i] += coeffs_[i];
    acc[i + 1] -= coeffs_[i];
  }
  return from_redundant(p_, std::move(acc));
}

CycloInt CycloInt::scaled(const BigInt& n) const {
  CycloInt r = *this;
  for (auto& c : r.coeffs_) c *= n;
  return r;
}

std::string CycloInt::to_string() const {
  std::string out;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const BigInt mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!(mag == BigInt(1))) out += mag.to_string() + "*";
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::complex<double> CycloInt::to_complex() const {
  std::complex<double> z = 0;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * i / p_;
    z += coeffs_[i].wide().convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

Residue parity(const CycloInt& x) {
  std::int64_t s = 0;
  const std::int64_t p = x.prime();
  for (const auto& c : x.coeffs()) {
    s += c.mod(p);
  }
  return {s, x.prime()};
}

CycloInt div_chi_exact(const CycloInt& x) {
  // With b = x / chi and s = b_{p-2}: x_0 = b_0 + s, x_i = b_i - b_{i-1} + s,
  // hence p*s = sum(x_i) and b_i = (x_0 + ... + x_i) - (i+1) s.
  const unsigned p = x.prime();
  BigInt total;
  for (const auto& c : x.coeffs()) total += c;
  if (total.mod(p) != 0) throw NotDivisible();
  const BigInt s = total.divexact(p);
  std::vector<BigInt> b(p - 1);
  BigInt prefix;
  BigInt shift;
  for (unsigned i = 0; i + 1 < p; ++i) {
    prefix += x.coeff(i);
    shift += s;
    b[i] = prefix - shift;
  }
  return CycloInt(p, std::move(b));
}

std::optional<std::size_t> chi_valuation(const CycloInt& x) {
  if (x.is_zero()) return std::nullopt;
  std::size_t e = 0;
  CycloInt y = x;
  while (parity(y).is_zero()) {
    y = div_chi_exact(y);
    ++e;
  }
  return e;
}

std::size_t chi_valuation_capped(const CycloInt& x, std::size_t bound) {
  if (bound == 0) return 0;
  if (!parity(x).is_zero()) return 0;
  if (x.is_zero()) return bound;
  std::size_t e = 0;
  CycloInt y = x;
  while (e < bound && parity(y).is_zero()) {
    y = div_chi_exact(y);
    ++e;
  }
  return e;
}

CycloInt galois_automorphism(const CycloInt& x, unsigned k) {
  const unsigned p = x.prime();
  if (k % p == 0) throw DomainError("galois automorphism exponent must be a unit mod p");
  std::vector<BigInt> acc(p);
  for (unsigned i = 0; i + 1 < p; ++i) {
    acc[(static_cast<std::uint64_t>(i) * k) % p] += x.coeff(i);
  }
  return CycloInt::from_redundant(p, std::move(acc));
}

CycloInt galois_conjugate(const CycloInt& x) { return galois_automorphism(x, x.prime() - 1); }

std::optional<unsigned> as_omega_power(const CycloInt& x) {
  const unsigned p = x.prime();
  bool all_minus_one = true;
  std::optional<unsigned> single;
  unsigned nonzero = 0;
  for (unsigned i = 0; i + 1 < p; ++i) {
    const BigInt& c = x.coeff(i);
    if (!(c == BigInt(-1))) all_minus_one = false;
    if (c.is_zero()) continue;
    ++nonzero;
    if (c == BigInt(1)) single = i;
  }
  if (all_minus_one) return p - 1;
  if (nonzero == 1 && single) return single;
  return std::nullopt;
}

std::optional<CycloInt> divide_exact(const CycloInt& x, const CycloInt& d) {
  check_same(x.prime(), d.prime());
  if (d.is_zero()) throw ZeroArgument("division by zero in Z[w]");
  const unsigned p = x.prime();
  // x / d = x * conj_product / N(d) where conj_product = prod_{k=2}^{p-1} sigma_k(d).
  CycloInt conj_product = CycloInt::from_integer(p, 1);
  for (unsigned k = 2; k < p; ++k) conj_product *= galois_automorphism(d, k);
  const CycloInt norm = d * conj_product;
  const BigInt n = norm.coeff(0);
  CycloInt q = x * conj_product;
  std::vector<BigInt> out(p - 1);
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (!(q.coeff(i) % n).is_zero()) return std::nullopt;
    out[i] = q.coeff(i) / n;
  }
  CycloInt result(p, std::move(out));
  if (!(result * d == x)) return std::nullopt;
  return result;
}

CycloFrac::CycloFrac(CycloInt num, std::size_t chi_exp) : num_(std::move(num)), chi_exp_(chi_exp) {
  if (num_.is_zero()) {
    chi_exp_ = 0;
    return;
  }
  while (chi_exp_ > 0 && parity(num_).is_zero()) {
    num_ = div_chi_exact(num_);
    --chi_exp_;
  }
}

CycloInt CycloFrac::numerator_at(std::size_t target) const {
  if (target < chi_exp_) throw DenominatorTooLarge("requested denominator exponent is below the least one");
  CycloInt x = num_;
  for (std::size_t i = chi_exp_; i < target; ++i) x = x.mul_chi();
  return x;
}

CycloFrac operator+(const CycloFrac& a, const CycloFrac& b) {
  check_same(a.prime(), b.prime());
  const std::size_t e = std::max(a.chi_exp_, b.chi_exp_);
  return {a.numerator_at(e) + b.numerator_at(e), e};
}

CycloFrac operator-(const CycloFrac& a, const CycloFrac& b) {
  check_same(a.prime(), b.prime());
  const std::size_t e = std::max(a.chi_exp_, b.chi_exp_);
  return {a.numerator_at(e) - b.numerator_at(e), e};
}

CycloFrac operator*(const CycloFrac& a, const CycloFrac& b) { return {a.num_ * b.num_, a.chi_exp_ + b.chi_exp_}; }

std::string CycloFrac::to_string() const {
  if (chi_exp_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/chi^" + std::to_string(chi_exp_);
}

std::complex<double> CycloFrac::to_complex() const {
  const unsigned p = prime();
  const std::complex<double> chi = 1.0 - std::polar(1.0, 2.0 * std::numbers::pi / p);
  return num_.to_complex() / std::pow(chi, static_cast<double>(chi_exp_));
}

const CycloInt& unit_p_over_chi(unsigned p) {
  require_supported_prime(p);
  static std::array<std::optional<CycloInt>, kMaxPrime + 1> cache;
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (unsigned q = kMinPrime; q <= kMaxPrime; ++q) {
      if (!is_supported_prime(q)) continue;
      const CycloInt c = CycloInt::chi_power(q, q - 1);
      std::vector<BigInt> u(q - 1);
      for (unsigned i = 0; i + 1 < q; ++i) u[i] = c.coeff(i).divexact(q);
      cache[q] = CycloInt(q, std::move(u));
    }
  });
  return *cache[p];
}

CycloFrac from_p_denominator(const CycloInt& a, unsigned m) {
  const unsigned p = a.prime();
  CycloInt num = a;
  const CycloInt& u = unit_p_over_chi(p);
  for (unsigned i = 0; i < m; ++i) num *= u;
  return {std::move(num), static_cast<std::size_t>(m) * (p - 1)};
}

std::size_t lde_scalar(const CycloFrac& y) { return y.chi_exp(); }

CycloFrac galois_conjugate(const CycloFrac& y) {
  // conj(chi) = -w^{-1} chi, so conj(x / chi^e) = conj(x) (-w)^e / chi^e.
  const std::size_t e = y.chi_exp();
  CycloInt num = galois_conjugate(y.num()).mul_omega_power(static_cast<std::int64_t>(e % y.prime()));
  if (e % 2 == 1) num = -num;
  return {std::move(num), e};
}

}  // namespace qnf

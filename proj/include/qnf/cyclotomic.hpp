#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnf/bigint.hpp"
#include "qnf/residue.hpp"

namespace qnf {

// Element of Z[w], w = exp(2 pi i / p), stored in the integral basis
// {1, w, ..., w^{p-2}}. The representation is unique.
class CycloInt {
 public:
  explicit CycloInt(unsigned p);
  CycloInt(unsigned p, std::vector<BigInt> coeffs);

  static CycloInt from_integer(unsigned p, BigInt n);
  static CycloInt omega_power(unsigned p, std::int64_t k);
  // chi = 1 - w
  static CycloInt chi(unsigned p);
  static CycloInt chi_power(unsigned p, std::size_t k);
  // Reduces a length-p vector of coefficients of 1, w, ..., w^{p-1}.
  static CycloInt from_redundant(unsigned p, std::vector<BigInt> coeffs);

  unsigned prime() const noexcept { return p_; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const noexcept;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  CycloInt operator-() const;
  friend bool operator==(const CycloInt& a, const CycloInt& b) = default;

  // this * w^k, done as a coefficient rotation.
  CycloInt mul_omega_power(std::int64_t k) const;
  // this * chi
  CycloInt mul_chi() const;
  CycloInt scaled(const BigInt& n) const;

  // "a0 + a1*w + a2*w^2 + ..." with zero terms dropped; "0" for zero.
  std::string to_string() const;
  // Diagnostic only; never used for decisions.
  std::complex<double> to_complex() const;

 private:
  unsigned p_;
  std::vector<BigInt> coeffs_;
};

// Ring homomorphism Z[w] -> Z_p, w -> 1. Its kernel is the ideal (chi).
Residue parity(const CycloInt& x);
// Largest e with chi^e | x; nullopt stands for +infinity (x = 0).
std::optional<std::size_t> chi_valuation(const CycloInt& x);
// min(chi_valuation(x), bound) without dividing further than needed.
std::size_t chi_valuation_capped(const CycloInt& x, std::size_t bound);
// x / chi. Throws NotDivisible when parity(x) != 0.
CycloInt div_chi_exact(const CycloInt& x);
// Complex conjugation, w -> w^{-1}.
CycloInt galois_conjugate(const CycloInt& x);
// The automorphism w -> w^k, k a unit mod p.
CycloInt galois_automorphism(const CycloInt& x, unsigned k);
// Some e in [0, p) with x = w^e, if x is a root of unity of that shape.
std::optional<unsigned> as_omega_power(const CycloInt& x);
// q with q * d = x when d divides x in Z[w]; nullopt otherwise.
std::optional<CycloInt> divide_exact(const CycloInt& x, const CycloInt& d);

// Element num / chi^chi_exp of Z[w, 1/p]. Always canonical: chi_exp = 0 or
// chi does not divide num; zero has chi_exp = 0.
class CycloFrac {
 public:
  explicit CycloFrac(unsigned p) : num_(p) {}
  CycloFrac(CycloInt num, std::size_t chi_exp = 0);  // NOLINT(google-explicit-constructor)

  unsigned prime() const noexcept { return num_.prime(); }
  const CycloInt& num() const noexcept { return num_; }
  std::size_t chi_exp() const noexcept { return chi_exp_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  CycloFrac& operator+=(const CycloFrac& o) { return *this = *this + o; }
  CycloFrac& operator-=(const CycloFrac& o) { return *this = *this - o; }
  CycloFrac& operator*=(const CycloFrac& o) { return *this = *this * o; }
  friend CycloFrac operator+(const CycloFrac& a, const CycloFrac& b);
  friend CycloFrac operator-(const CycloFrac& a, const CycloFrac& b);
  friend CycloFrac operator*(const CycloFrac& a, const CycloFrac& b);
  CycloFrac operator-() const { return {-num_, chi_exp_}; }
  friend bool operator==(const CycloFrac& a, const CycloFrac& b) = default;

  // num rescaled to denominator chi^target; requires target >= chi_exp.
  CycloInt numerator_at(std::size_t target) const;

  std::string to_string() const;
  std::complex<double> to_complex() const;

 private:
  CycloInt num_;
  std::size_t chi_exp_ = 0;
};

// The unit u = chi^{p-1} / p (coefficientwise exact division), so 1/p = u / chi^{p-1}.
const CycloInt& unit_p_over_chi(unsigned p);
// a / p^m in canonical form.
CycloFrac from_p_denominator(const CycloInt& a, unsigned m);
std::size_t lde_scalar(const CycloFrac& y);
CycloFrac galois_conjugate(const CycloFrac& y);

}  // namespace qnf

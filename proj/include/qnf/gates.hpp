#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qnf/cyclotomic.hpp"
#include "qnf/word.hpp"

namespace qnf {

// Exact p x p matrix over Z[w, 1/p].
//
// Stored as an integral numerator matrix N over Z[w] with one shared
// denominator chi^k, k minimal (k = 0 or some entry of N is not divisible by
// chi). k is therefore the least denominator exponent of the matrix, and
// entry(i, j) returns the canonical CycloFrac N(i, j) / chi^k.
class UMatrix {
 public:
  static UMatrix identity(unsigned p);
  static UMatrix zero(unsigned p);
  // Row-major p*p entries.
  static UMatrix from_entries(unsigned p, std::span<const CycloFrac> entries);
  // Row-major numerators over the shared denominator chi^chi_exp; canonicalizes.
  static UMatrix from_scaled(unsigned p, std::vector<CycloInt> numerators, std::size_t chi_exp);

  unsigned prime() const noexcept { return p_; }
  unsigned dim() const noexcept { return p_; }
  std::size_t chi_exp() const noexcept { return chi_exp_; }
  const CycloInt& numerator(unsigned row, unsigned col) const { return num_[row * p_ + col]; }
  CycloFrac entry(unsigned row, unsigned col) const { return {numerator(row, col), chi_exp_}; }

  // Entries N(i,j) are pure monomials: at most one nonzero per row and column.
  bool is_monomial() const;

  // w^k * this
  UMatrix mul_omega_power(std::int64_t k) const;

  std::string to_string() const;
  std::vector<std::complex<double>> to_complex() const;

  friend bool operator==(const UMatrix&, const UMatrix&) = default;

 private:
  UMatrix(unsigned p, std::vector<CycloInt> num, std::size_t chi_exp);
  void canonicalize();

  unsigned p_;
  std::vector<CycloInt> num_;
  std::size_t chi_exp_;
};

UMatrix mat_H(unsigned p);
UMatrix mat_S(unsigned p);
UMatrix mat_T(unsigned p);
UMatrix mat_X(unsigned p);
UMatrix mat_Z(unsigned p);
UMatrix mat_omega(unsigned p);

// Diagonal exponents e_k of the diagonal generators: S -> w^{k(k+1)/2}, T -> w^{k^3/6}.
unsigned s_exponent(unsigned k, unsigned p);
unsigned t_exponent(unsigned k, unsigned p);

UMatrix mat_mul(const UMatrix& a, const UMatrix& b);
inline UMatrix operator*(const UMatrix& a, const UMatrix& b) { return mat_mul(a, b); }
UMatrix dagger(const UMatrix& a);
CycloFrac det(const UMatrix& a);
bool is_unitary(const UMatrix& a);

// Some a with A = w^a B, if any.
std::optional<Residue> equal_up_to_omega(const UMatrix& a, const UMatrix& b);

std::size_t lde_matrix(const UMatrix& m);
// parity of every entry of chi^k M, row-major. Throws DenominatorTooLarge for k < lde.
std::vector<Residue> parity_matrix(const UMatrix& m, std::size_t k);

// Structured products; each equals the corresponding mat_mul exactly.
UMatrix mul_H_left(const UMatrix& m);
UMatrix mul_H_right(const UMatrix& m);
UMatrix mul_Hinv_left(const UMatrix& m);
// diag(w^{e_0}, ..., w^{e_{p-1}}) * M and M * diag(...)
UMatrix mul_diag_left(std::span<const unsigned> exponents, const UMatrix& m);
UMatrix mul_diag_right(const UMatrix& m, std::span<const unsigned> exponents);
// M * X^shift and X^shift * M
UMatrix mul_X_right(const UMatrix& m, unsigned shift);
UMatrix mul_X_left(unsigned shift, const UMatrix& m);

// Least denominator exponent of the scalar g/p realizing H's prefactor, and its numerator.
std::size_t h_scalar_chi_exp(unsigned p);
const CycloInt& h_scalar_numerator(unsigned p);
const CycloInt& hinv_scalar_numerator(unsigned p);

// Ordered product of generator matrices.
UMatrix word_to_matrix(const Word& w);

// Entry with rational coefficients, (sum_i c_i w^i) / chi^chi_exp.
struct RationalEntry {
  std::vector<boost::multiprecision::cpp_rational> coeffs;
  std::size_t chi_exp = 0;
};

// Throws EntriesOutsideRing when a coefficient denominator is not a power of p.
CycloFrac ring_element_from_rational(unsigned p, const RationalEntry& e);
UMatrix ring_matrix_from_rationals(unsigned p, std::span<const RationalEntry> entries);

}  // namespace qnf

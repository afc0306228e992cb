#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnf/gates.hpp"
#include "qnf/residue.hpp"

namespace qnf {

// [[a, b], [c, d]] with ad - bc = 1, acting on column vectors (x, z).
struct SL2 {
  Residue a, b, c, d;

  unsigned prime() const noexcept { return a.modulus(); }
  bool lower_triangular() const noexcept { return b.is_zero(); }

  static SL2 identity(unsigned p);
  // H^ = [[0, -1], [1, 0]], S^ = [[1, 0], [1, 1]], F_a = diag(a, a^-1)
  static SL2 hadamard(unsigned p);
  static SL2 phase(unsigned p);
  static SL2 scaling(Residue alpha);
  // Throws DomainError unless ad - bc = 1.
  static SL2 make(Residue a, Residue b, Residue c, Residue d);

  SL2 operator*(const SL2& o) const;
  SL2 inverse() const { return {d, -b, -c, a}; }
  std::pair<Residue, Residue> apply(Residue x, Residue z) const { return {a * x + b * z, c * x + d * z}; }
  // Dense index in [0, p^4), used for tables.
  std::uint32_t key() const noexcept;

  friend bool operator==(const SL2&, const SL2&) = default;
};

std::string to_string(const SL2& f);

// All p(p^2 - 1) elements, in a fixed order.
const std::vector<SL2>& enumerate_sl2(unsigned p);

// w^phase * D(x, z) * V(frame), an element of SU(p).
struct CliffordElem {
  Residue phase;
  Residue x, z;
  SL2 frame;

  unsigned prime() const noexcept { return phase.modulus(); }
  friend bool operator==(const CliffordElem&, const CliffordElem&) = default;
};

std::string to_string(const CliffordElem& c);

CliffordElem clifford_identity(unsigned p);
CliffordElem clifford_H(unsigned p);
CliffordElem clifford_S(unsigned p);
CliffordElem clifford_X(unsigned p);
CliffordElem clifford_Z(unsigned p);
CliffordElem clifford_omega(unsigned p);
CliffordElem clifford_V(const SL2& f);
// H_d = S^d H
CliffordElem clifford_Hd(unsigned d, unsigned p);

UMatrix v_map(const SL2& f);
UMatrix d_map(Residue x, Residue z);
UMatrix clifford_to_matrix(const CliffordElem& c);
// Throws NotClifford.
CliffordElem matrix_to_clifford(const UMatrix& m);
std::optional<CliffordElem> try_matrix_to_clifford(const UMatrix& m);

CliffordElem clifford_mul(const CliffordElem& c1, const CliffordElem& c2);
CliffordElem clifford_inv(const CliffordElem& c);
inline CliffordElem operator*(const CliffordElem& a, const CliffordElem& b) { return clifford_mul(a, b); }

// Serial reference versions, computed through exact matrices.
CliffordElem clifford_mul_reference(const CliffordElem& c1, const CliffordElem& c2);
CliffordElem clifford_inv_reference(const CliffordElem& c);

inline bool in_P(const CliffordElem& c) noexcept { return c.frame.lower_triangular(); }

// C = H_head * tail with tail in P; head is nullopt for the identity coset.
struct CosetSplit {
  std::optional<unsigned> head;
  CliffordElem tail;
};
CosetSplit coset_decompose(const CliffordElem& c);

// Uniform over all p^4 (p^2 - 1) triples.
CliffordElem random_clifford(unsigned p, std::mt19937_64& rng);
// Uniform over the p^4 (p - 1) triples in P.
CliffordElem random_P(unsigned p, std::mt19937_64& rng);

}  // namespace qnf

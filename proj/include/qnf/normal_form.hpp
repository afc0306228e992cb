#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qnf/clifford.hpp"
#include "qnf/gates.hpp"
#include "qnf/word.hpp"

namespace qnf {

// H_d T^m with d in [0, p), m in [1, p).
struct HTPair {
  unsigned d;
  unsigned m;
  friend bool operator==(const HTPair&, const HTPair&) = default;
};

// T^{m0} (H_{d1} T^{m1}) ... (H_{dn} T^{mn}) C
struct NormalForm {
  unsigned p;
  unsigned m0 = 0;
  std::vector<HTPair> syllables;
  CliffordElem tail;

  static NormalForm identity(unsigned p) { return {p, 0, {}, clifford_identity(p)}; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Throws DomainError on out-of-range exponents or indices.
void validate(const NormalForm& nf);

std::size_t h_count(const NormalForm& nf);
std::size_t nf_t_count(const NormalForm& nf);

struct TPower {
  unsigned m;
};
struct TThenHT {
  unsigned m0;
  HTPair ht;
};
struct HT {
  HTPair ht;
};
struct CliffordOnly {
  CliffordElem c;
};
struct TThenClifford {
  unsigned m0;
  CliffordElem c;
};
using Syllable = std::variant<TPower, TThenHT, HT, CliffordOnly, TThenClifford>;

// How a leading T^{m0} followed by syllables is split. SplitLeadingT yields
// TPower(m0) first (as in the worked example T^2 S H T ... -> T^2);
// CaseList keeps T^{m0} H_{d1} T^{m1} together.
enum class LeftmostRule { SplitLeadingT, CaseList };

std::pair<Syllable, NormalForm> leftmost_syllable(const NormalForm& nf,
                                                  LeftmostRule rule = LeftmostRule::SplitLeadingT);
// Repeated leftmost_syllable until a Clifford-terminated syllable is produced.
std::vector<Syllable> syllable_chain(const NormalForm& nf, LeftmostRule rule = LeftmostRule::SplitLeadingT);
NormalForm reassemble(unsigned p, std::span<const Syllable> chain);
std::string to_string(const Syllable& s);

// A shortest word over {H, S} for the frame, then w, X, Z fix the rest.
Word clifford_word(const CliffordElem& c);
Word nf_to_word(const NormalForm& nf);
UMatrix nf_to_matrix(const NormalForm& nf);

// m0 uniform, tail uniform over all triples (over P when h = 0), and as many
// uniform syllables as make h_count(nf) = h.
NormalForm random_nf(unsigned p, std::size_t h, std::mt19937_64& rng);
NormalForm random_nf(unsigned p, std::size_t h, std::uint64_t seed);

}  // namespace qnf

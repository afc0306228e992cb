#pragma once

#include "qnf/clifford.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/word.hpp"

namespace qnf {

// P T^m = T^{m'} P' with P, P' in P.
struct TCommuted {
  unsigned m;
  CliffordElem p;
};
// Throws NotInP, DomainError for m outside [1, p).
TCommuted commute_P_through_T(const CliffordElem& p_elem, unsigned m);

// Incremental left-to-right normalizer: feed gates, read the current normal form.
class Normalizer {
 public:
  explicit Normalizer(unsigned p);

  void apply(Gate g, unsigned power);
  void apply_clifford(const CliffordElem& c);
  void apply_T(unsigned m);
  const NormalForm& current() const noexcept { return nf_; }

 private:
  NormalForm nf_;
};

NormalForm normalize(const Word& w);

}  // namespace qnf

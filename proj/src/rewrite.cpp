#include "qnf/rewrite.hpp"

#include "qnf/errors.hpp"

namespace qnf {

TCommuted commute_P_through_T(const CliffordElem& p_elem, unsigned m) {
  if (!in_P(p_elem)) throw NotInP();
  const unsigned p = p_elem.prime();
  if (m == 0 || m >= p) throw DomainError("T power out of range");
  // V(L) T^m V(L)^-1 = T^{m alpha^-3}; conjugating by X^x leaves
  // w^{-m' x^3/6} Z^{m' x^2/2} V([[1, 0], [-m' x, 1]]) behind.
  const Residue alpha_inv = inv_mod(p_elem.frame.a);
  const Residue mp = Residue(m, p) * alpha_inv * alpha_inv * alpha_inv;
  const Residue x = p_elem.x;
  const Residue zero(0, p), one(1, p);
  const CliffordElem q{-(mp * x * x * x * inv_mod(Residue(6, p))), zero, mp * x * x * inv_mod(Residue(2, p)),
                       SL2{one, zero, -(mp * x), one}};
  return {mp.value(), q * p_elem};
}

Normalizer::Normalizer(unsigned p) : nf_(NormalForm::identity(p)) { require_supported_prime(p); }

void Normalizer::apply(Gate g, unsigned power) {
  const unsigned p = nf_.p;
  if (g == Gate::T) {
    if (power % p != 0) apply_T(power % p);
    return;
  }
  CliffordElem gen = clifford_identity(p);
  switch (g) {
    case Gate::H: gen = clifford_H(p); break;
    case Gate::S: gen = clifford_S(p); break;
    case Gate::X: gen = clifford_X(p); break;
    case Gate::Z: gen = clifford_Z(p); break;
    case Gate::W: gen = clifford_omega(p); break;
    case Gate::T: break;
  }
  CliffordElem c = nf_.tail;
  for (unsigned i = 0; i < power % gate_order(g, p); ++i) c = c * gen;
  nf_.tail = c;
}

void Normalizer::apply_clifford(const CliffordElem& c) { nf_.tail = nf_.tail * c; }

void Normalizer::apply_T(unsigned m) {
  const unsigned p = nf_.p;
  // tail T^m = H_head P T^m = H_head T^{m'} P'
  const CosetSplit split = coset_decompose(nf_.tail);
  const TCommuted moved = commute_P_through_T(split.tail, m);
  if (split.head) {
    nf_.syllables.push_back({*split.head, moved.m});
    nf_.tail = moved.p;
    return;
  }
  if (nf_.syllables.empty()) {
    nf_.m0 = (nf_.m0 + moved.m) % p;
    nf_.tail = moved.p;
    return;
  }
  HTPair& last = nf_.syllables.back();
  last.m = (last.m + moved.m) % p;
  if (last.m != 0) {
    nf_.tail = moved.p;
    return;
  }
  // T^p = 1: the syllable collapses to its H_d, which rejoins the Clifford tail
  const unsigned d = last.d;
  nf_.syllables.pop_back();
  nf_.tail = clifford_Hd(d, p) * moved.p;
}

NormalForm normalize(const Word& w) {
  Normalizer n(w.p);
  for (const auto& t : w.tokens) n.apply(t.gate, t.power);
  return n.current();
}

}  // namespace qnf

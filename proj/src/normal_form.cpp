#include "qnf/normal_form.hpp"

#include <array>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "qnf/errors.hpp"
#include "qnf/rng.hpp"

namespace qnf {

namespace {

struct FrameWord {
  std::vector<Token> tokens;
  CliffordElem value;
};

struct FrameWords {
  std::once_flag once;
  std::unordered_map<std::uint32_t, FrameWord> by_frame;
};

const FrameWord& frame_word(const SL2& frame) {
  const unsigned p = frame.prime();
  static std::array<FrameWords, kMaxPrime + 1> all;
  FrameWords& t = all[p];
  std::call_once(t.once, [&t, p] {
    // breadth-first over right multiplication by H and S
    const CliffordElem gens[] = {clifford_H(p), clifford_S(p)};
    const Gate letters[] = {Gate::H, Gate::S};
    std::deque<std::uint32_t> queue;
    const CliffordElem id = clifford_identity(p);
    t.by_frame.emplace(id.frame.key(), FrameWord{{}, id});
    queue.push_back(id.frame.key());
    while (!queue.empty()) {
      const FrameWord cur = t.by_frame.at(queue.front());
      queue.pop_front();
      for (int g = 0; g < 2; ++g) {
        const CliffordElem next = cur.value * gens[g];
        if (t.by_frame.count(next.frame.key())) continue;
        FrameWord w{cur.tokens, next};
        w.tokens.push_back({letters[g], 1});
        t.by_frame.emplace(next.frame.key(), std::move(w));
        queue.push_back(next.frame.key());
      }
    }
  });
  return t.by_frame.at(frame.key());
}

}  // namespace

void validate(const NormalForm& nf) {
  require_supported_prime(nf.p);
  if (nf.tail.prime() != nf.p) throw PrimeMismatch();
  if (nf.m0 >= nf.p) throw DomainError("m0 out of range");
  for (const auto& s : nf.syllables) {
    if (s.d >= nf.p || s.m == 0 || s.m >= nf.p) throw DomainError("syllable out of range");
  }
}

std::size_t h_count(const NormalForm& nf) { return nf.syllables.size() + (in_P(nf.tail) ? 0 : 1); }

std::size_t nf_t_count(const NormalForm& nf) { return nf.syllables.size() + (nf.m0 != 0 ? 1 : 0); }

std::pair<Syllable, NormalForm> leftmost_syllable(const NormalForm& nf, LeftmostRule rule) {
  const unsigned p = nf.p;
  if (nf.syllables.empty()) {
    if (nf.m0 != 0) return {TThenClifford{nf.m0, nf.tail}, NormalForm::identity(p)};
    return {CliffordOnly{nf.tail}, NormalForm::identity(p)};
  }
  NormalForm rest = nf;
  rest.m0 = 0;
  if (nf.m0 != 0 && rule == LeftmostRule::SplitLeadingT) return {TPower{nf.m0}, rest};
  rest.syllables.erase(rest.syllables.begin());
  if (nf.m0 != 0) return {TThenHT{nf.m0, nf.syllables.front()}, rest};
  return {HT{nf.syllables.front()}, rest};
}

std::vector<Syllable> syllable_chain(const NormalForm& nf, LeftmostRule rule) {
  std::vector<Syllable> chain;
  NormalForm cur = nf;
  while (true) {
    auto [s, rest] = leftmost_syllable(cur, rule);
    const bool last = std::holds_alternative<CliffordOnly>(s) || std::holds_alternative<TThenClifford>(s);
    chain.push_back(std::move(s));
    if (last) return chain;
    cur = std::move(rest);
  }
}

NormalForm reassemble(unsigned p, std::span<const Syllable> chain) {
  NormalForm nf = NormalForm::identity(p);
  for (const auto& s : chain) {
    if (const auto* t = std::get_if<TPower>(&s)) {
      nf.m0 = t->m;
    } else if (const auto* tht = std::get_if<TThenHT>(&s)) {
      nf.m0 = tht->m0;
      nf.syllables.push_back(tht->ht);
    } else if (const auto* ht = std::get_if<HT>(&s)) {
      nf.syllables.push_back(ht->ht);
    } else if (const auto* c = std::get_if<CliffordOnly>(&s)) {
      nf.tail = c->c;
    } else if (const auto* tc = std::get_if<TThenClifford>(&s)) {
      nf.m0 = tc->m0;
      nf.tail = tc->c;
    }
  }
  return nf;
}

std::string to_string(const Syllable& s) {
  struct Visitor {
    std::string operator()(const TPower& t) const { return "T^" + std::to_string(t.m); }
    std::string operator()(const TThenHT& t) const {
      return "T^" + std::to_string(t.m0) + " H_" + std::to_string(t.ht.d) + " T^" + std::to_string(t.ht.m);
    }
    std::string operator()(const HT& t) const {
      return "H_" + std::to_string(t.ht.d) + " T^" + std::to_string(t.ht.m);
    }
    std::string operator()(const CliffordOnly& c) const { return to_string(c.c); }
    std::string operator()(const TThenClifford& c) const { return "T^" + std::to_string(c.m0) + " " + to_string(c.c); }
  };
  return std::visit(Visitor{}, s);
}

Word clifford_word(const CliffordElem& c) {
  const unsigned p = c.prime();
  const FrameWord& fw = frame_word(c.frame);
  // c = (c fw^-1) fw and c fw^-1 = w^b D(x, z) = w^{b + xz/2} X^x Z^z
  const CliffordElem rest = c * clifford_inv(fw.value);
  const Residue phase = rest.phase + inv_mod(Residue(2, p)) * rest.x * rest.z;
  Word w{p, {}};
  w.append(Gate::W, phase.value());
  w.append(Gate::X, rest.x.value());
  w.append(Gate::Z, rest.z.value());
  for (const auto& t : fw.tokens) w.append(t.gate, t.power);
  return w;
}

Word nf_to_word(const NormalForm& nf) {
  validate(nf);
  Word w{nf.p, {}};
  w.append(Gate::T, nf.m0);
  for (const auto& s : nf.syllables) {
    w.append(Gate::S, s.d);
    w.append(Gate::H, 1);
    w.append(Gate::T, s.m);
  }
  w.append(clifford_word(nf.tail));
  return w;
}

UMatrix nf_to_matrix(const NormalForm& nf) { return word_to_matrix(nf_to_word(nf)); }

NormalForm random_nf(unsigned p, std::size_t h, std::mt19937_64& rng) {
  require_supported_prime(p);
  NormalForm nf = NormalForm::identity(p);
  nf.m0 = static_cast<unsigned>(uniform_below(rng, p));
  nf.tail = h == 0 ? random_P(p, rng) : random_clifford(p, rng);
  const std::size_t n = (h == 0 || in_P(nf.tail)) ? h : h - 1;
  nf.syllables.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<unsigned>(uniform_below(rng, p));
    const auto m = static_cast<unsigned>(1 + uniform_below(rng, p - 1));
    nf.syllables.push_back({d, m});
  }
  return nf;
}

NormalForm random_nf(unsigned p, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_nf(p, h, rng);
}

}  // namespace qnf

#include "qnf/synthesis.hpp"

#include "qnf/clifford.hpp"
#include "qnf/errors.hpp"

namespace qnf {

std::size_t conjectured_lde(std::size_t h, unsigned p) {
  if (h == 0) return 0;
  const std::size_t n = (p + 2) / 3 - 1;
  return (n * h + 1) / 2 + n;
}

std::vector<std::size_t> infer_h(std::size_t k, unsigned p) {
  std::vector<std::size_t> out;
  // conjectured_lde(h) >= h / 2, so nothing beyond 2k + 2 can match
  for (std::size_t h = 0; h <= 2 * k + 2; ++h) {
    if (conjectured_lde(h, p) == k) out.push_back(h);
  }
  return out;
}

std::string to_string(SynthFailure f) {
  switch (f) {
    case SynthFailure::NotUnitary: return "NotUnitary";
    case SynthFailure::EntriesOutsideRing: return "EntriesOutsideRing";
    case SynthFailure::SynthesisFailed: return "SynthesisFailed";
  }
  return "?";
}

namespace {

class Search {
 public:
  Search(unsigned p, SynthReport& report, const SynthOptions& options)
      : p_(p), report_(report), options_(options), t_exps_(p), s_exps_(p) {
    for (unsigned k = 0; k < p; ++k) {
      t_exps_[k] = t_exponent(k, p);
      s_exps_[k] = s_exponent(k, p);
    }
  }

  // r = T^{m} (H_{d} T ...) ... C with H'-count h_left once the leading T is stripped.
  bool run(const UMatrix& r, std::size_t h_left, bool first) {
    if (h_left == 0) return finish(r, first);
    const std::size_t target = conjectured_lde(h_left - 1, p_);
    const std::size_t lde_before = lde_matrix(r);
    std::vector<unsigned> e(p_);
    for (unsigned t = first ? 0 : 1; t < p_; ++t) {
      for (unsigned d = 0; d < p_; ++d) {
        if (report_.backtracks > options_.backtrack_budget) return false;
        // H^{-1} S^{-d} T^{-t} r
        for (unsigned k = 0; k < p_; ++k) e[k] = (2 * p_ * p_ - t * t_exps_[k] - d * s_exps_[k]) % p_;
        ++report_.candidates_tested;
        UMatrix next = mul_Hinv_left(mul_diag_left(e, r));
        if (lde_matrix(next) != target) continue;
        if (first) m0_ = t;
        if (!first) syllables_.back().m = t;
        syllables_.push_back({d, 0});
        report_.peels.push_back({t, d, lde_before, target});
        if (run(next, h_left - 1, false)) return true;
        syllables_.pop_back();
        report_.peels.pop_back();
        ++report_.backtracks;
      }
    }
    return false;
  }

  NormalForm result() const { return {p_, m0_, syllables_, *tail_}; }

 private:
  // r = T^t C with C in P; t = 0 after a peel means that H_d belongs to the tail.
  bool finish(const UMatrix& r, bool first) {
    if (lde_matrix(r) != 0) return false;
    std::vector<unsigned> e(p_);
    for (unsigned t = 0; t < p_; ++t) {
      for (unsigned k = 0; k < p_; ++k) e[k] = (p_ * p_ - t * t_exps_[k]) % p_;
      const auto c = try_matrix_to_clifford(mul_diag_left(e, r));
      if (!c || !in_P(*c)) continue;
      if (first) {
        m0_ = t;
        tail_ = *c;
      } else if (t != 0) {
        syllables_.back().m = t;
        tail_ = *c;
      } else {
        const unsigned d = syllables_.back().d;
        syllables_.pop_back();
        tail_ = clifford_Hd(d, p_) * *c;
      }
      return true;
    }
    return false;
  }

  unsigned p_;
  SynthReport& report_;
  const SynthOptions& options_;
  std::vector<unsigned> t_exps_, s_exps_;
  unsigned m0_ = 0;
  std::vector<HTPair> syllables_;
  std::optional<CliffordElem> tail_;
};

}  // namespace

SynthReport exact_synthesize(const UMatrix& m, const SynthOptions& options) {
  const unsigned p = m.prime();
  SynthReport report;
  if (!is_unitary(m)) {
    report.failure = SynthFailure::NotUnitary;
    report.message = "matrix is not unitary";
    return report;
  }
  if (auto c = try_matrix_to_clifford(m)) {
    report.result = NormalForm{p, 0, {}, *c};
    return report;
  }
  const std::size_t k = lde_matrix(m);
  const auto hs = infer_h(k, p);
  for (std::size_t h : hs) {
    Search search(p, report, options);
    report.peels.clear();
    if (search.run(m, h, true)) {
      report.result = search.result();
      return report;
    }
  }
  report.failure = SynthFailure::SynthesisFailed;
  report.message = hs.empty() ? "lde " + std::to_string(k) + " matches no H'-count"
                              : "no left syllable reproduces the conjectured lde pattern";
  return report;
}

SynthReport exact_synthesize(unsigned p, std::span<const RationalEntry> entries, const SynthOptions& options) {
  try {
    return exact_synthesize(ring_matrix_from_rationals(p, entries), options);
  } catch (const EntriesOutsideRing& e) {
    SynthReport report;
    report.failure = SynthFailure::EntriesOutsideRing;
    report.message = e.what();
    return report;
  }
}

}  // namespace qnf

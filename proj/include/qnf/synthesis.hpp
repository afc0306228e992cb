#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnf/gates.hpp"
#include "qnf/normal_form.hpp"

namespace qnf {

// Conjectured lde of an operator with H'-count h: 0 for h = 0, else
// ceil(n h / 2) + n with n = ceil(p / 3) - 1.
std::size_t conjectured_lde(std::size_t h, unsigned p);
// Every h with conjectured_lde(h, p) = k, ascending.
std::vector<std::size_t> infer_h(std::size_t k, unsigned p);

enum class SynthFailure { NotUnitary, EntriesOutsideRing, SynthesisFailed };
std::string to_string(SynthFailure f);

// One accepted left block H_d^{-1} T^{-t} (t is the T power preceding H_d).
struct Peel {
  unsigned t;
  unsigned d;
  std::size_t lde_before;
  std::size_t lde_after;
};

struct SynthReport {
  std::optional<NormalForm> result;
  std::optional<SynthFailure> failure;
  std::string message;
  std::vector<Peel> peels;
  std::size_t backtracks = 0;
  std::size_t candidates_tested = 0;

  bool ok() const noexcept { return result.has_value(); }
};

struct SynthOptions {
  // Abort after this many rejected accepted-then-abandoned branches.
  std::size_t backtrack_budget = 100000;
};

SynthReport exact_synthesize(const UMatrix& m, const SynthOptions& options = {});
// Entries given with rational coefficients; reports EntriesOutsideRing when
// a coefficient denominator is not a power of p.
SynthReport exact_synthesize(unsigned p, std::span<const RationalEntry> entries, const SynthOptions& options = {});

}  // namespace qnf

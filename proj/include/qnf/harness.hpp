#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qnf {

struct VerifyReport {
  std::string check;
  unsigned p = 0;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;
  // Extra key=value fields (per-h tallies and the like), in output order.
  std::vector<std::pair<std::string, std::string>> details;
  double wall_seconds = 0;

  bool ok() const noexcept { return passed == attempted; }
};

// One line of space-separated key=value fields; values with spaces are quoted.
// Wall time is left out unless asked for, so records diff cleanly.
std::string to_record(const VerifyReport& r, bool include_time = false);

struct HarnessOptions {
  // 1 runs the serial loop; more runs the OpenMP loop with that many threads.
  unsigned workers = 1;
  // Corrupts exactly one trial (index seed mod attempted) to exercise the reporting path.
  bool inject_fault = false;
};

// nullopt on success, else a description of the counterexample.
using TrialFn = std::function<std::optional<std::string>(std::size_t index)>;

struct TrialOutcome {
  std::vector<char> ok;  // per trial
  std::optional<std::pair<std::size_t, std::string>> first_failure;
  std::size_t passed = 0;
};

TrialOutcome run_trials_serial(std::size_t n, const TrialFn& fn);
TrialOutcome run_trials_parallel(std::size_t n, unsigned workers, const TrialFn& fn);
TrialOutcome run_trials(std::size_t n, const HarnessOptions& options, const TrialFn& fn);

struct VMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static VMode all_pairs() { return {true, 0, 0}; }
  static VMode sampled(std::size_t n, std::uint64_t seed) { return {false, n, seed}; }
};

// V(F) V(G) = V(FG) exactly. Exhaustive mode is limited to p <= 7.
VerifyReport verify_v_homomorphism(unsigned p, const VMode& mode, const HarnessOptions& options = {});
// S T = T S, X T = w^{-1/6} T X S^{p-1}, V(F_a) T = T^{a^-3} V(F_a), V(F_a)^dagger T V(F_a) = T^{a^3},
// and the generator orders.
VerifyReport verify_relations(unsigned p, const HarnessOptions& options = {});
// `trials` random normal forms for every h in [0, h_max]; lde must equal conjectured_lde.
VerifyReport verify_conjecture(unsigned p, std::size_t h_max, std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& options = {});
// Pairs of normal forms with the same H'-count that differ other than in the
// tail phase must not be equal up to a power of w.
VerifyReport verify_uniqueness(unsigned p, std::size_t h, std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& options = {});

}  // namespace qnf

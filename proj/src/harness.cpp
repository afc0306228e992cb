#include "qnf/harness.hpp"

#include <omp.h>

#include <chrono>
#include <random>
#include <sstream>

#include "qnf/clifford.hpp"
#include "qnf/errors.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/synthesis.hpp"

namespace qnf {

namespace {

std::optional<std::string> guarded(const TrialFn& fn, std::size_t i) {
  try {
    return fn(i);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

TrialOutcome merge(std::vector<std::optional<std::string>>& results) {
  TrialOutcome out;
  out.ok.resize(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.ok[i] = !results[i].has_value();
    if (out.ok[i]) {
      ++out.passed;
    } else if (!out.first_failure) {
      out.first_failure.emplace(i, std::move(*results[i]));
    }
  }
  return out;
}

std::string quote(const std::string& v) {
  if (v.find_first_of(" \t\"") == std::string::npos && !v.empty()) return v;
  std::string q = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + '"';
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void fill(VerifyReport& r, const TrialOutcome& t) {
  r.attempted = t.ok.size();
  r.passed = t.passed;
  if (t.first_failure) r.counterexample = "trial " + std::to_string(t.first_failure->first) + ": " + t.first_failure->second;
}

bool faulty(const HarnessOptions& o, std::uint64_t seed, std::size_t n, std::size_t i) {
  return o.inject_fault && n > 0 && i == seed % n;
}

UMatrix t_pow(unsigned p, unsigned m) {
  std::vector<unsigned> e(p);
  for (unsigned k = 0; k < p; ++k) e[k] = t_exponent(k, p) * m % p;
  return mul_diag_left(e, UMatrix::identity(p));
}

UMatrix mat_pow(const UMatrix& m, unsigned k) {
  UMatrix r = UMatrix::identity(m.prime());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

std::string to_record(const VerifyReport& r, bool include_time) {
  std::ostringstream os;
  os << "check=" << r.check << " p=" << r.p << " attempted=" << r.attempted << " passed=" << r.passed
     << " status=" << (r.ok() ? "ok" : "fail");
  for (const auto& [k, v] : r.details) os << ' ' << k << '=' << quote(v);
  os << " counterexample=" << (r.counterexample ? quote(*r.counterexample) : "none");
  if (include_time) os << " wall_seconds=" << r.wall_seconds;
  return os.str();
}

TrialOutcome run_trials_serial(std::size_t n, const TrialFn& fn) {
  std::vector<std::optional<std::string>> results(n);
  for (std::size_t i = 0; i < n; ++i) results[i] = guarded(fn, i);
  return merge(results);
}

TrialOutcome run_trials_parallel(std::size_t n, unsigned workers, const TrialFn& fn) {
  std::vector<std::optional<std::string>> results(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(static_cast<int>(workers))
  for (std::int64_t i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = guarded(fn, static_cast<std::size_t>(i));
  return merge(results);
}

TrialOutcome run_trials(std::size_t n, const HarnessOptions& options, const TrialFn& fn) {
  if (options.workers <= 1) return run_trials_serial(n, fn);
  return run_trials_parallel(n, options.workers, fn);
}

VerifyReport verify_v_homomorphism(unsigned p, const VMode& mode, const HarnessOptions& options) {
  require_supported_prime(p);
  Timer timer;
  VerifyReport r{"v-hom", p};
  const auto& group = enumerate_sl2(p);
  const std::size_t g = group.size();
  TrialOutcome t;
  if (mode.exhaustive) {
    if (p > 7) throw DomainError("exhaustive V-homomorphism check is limited to p <= 7");
    std::vector<UMatrix> v;
    v.reserve(g);
    for (const auto& f : group) v.push_back(v_map(f));
    const std::size_t n = g * g;
    t = run_trials(n, options, [&](std::size_t i) -> std::optional<std::string> {
      const std::size_t a = i / g, b = i % g;
      UMatrix lhs = v[a] * v[b];
      if (faulty(options, mode.seed, n, i)) lhs = lhs.mul_omega_power(1);
      if (lhs == v_map(group[a] * group[b])) return std::nullopt;
      return "F=" + to_string(group[a]) + " G=" + to_string(group[b]);
    });
    r.details.emplace_back("mode", "exhaustive");
  } else {
    t = run_trials(mode.samples, options, [&](std::size_t i) -> std::optional<std::string> {
      std::mt19937_64 rng(mode.seed + i);
      const SL2& a = group[rng() % g];
      const SL2& b = group[rng() % g];
      UMatrix lhs = v_map(a) * v_map(b);
      if (faulty(options, mode.seed, mode.samples, i)) lhs = lhs.mul_omega_power(1);
      if (lhs == v_map(a * b)) return std::nullopt;
      return "F=" + to_string(a) + " G=" + to_string(b);
    });
    r.details.emplace_back("mode", "sampled");
    r.details.emplace_back("seed", std::to_string(mode.seed));
  }
  fill(r, t);
  r.wall_seconds = timer.seconds();
  return r;
}

VerifyReport verify_relations(unsigned p, const HarnessOptions& options) {
  require_supported_prime(p);
  Timer timer;
  struct Relation {
    std::string name;
    std::function<std::pair<UMatrix, UMatrix>()> sides;
  };
  std::vector<Relation> rel;
  const UMatrix id = UMatrix::identity(p);
  rel.push_back({"ST=TS", [p] { return std::pair{mat_S(p) * mat_T(p), mat_T(p) * mat_S(p)}; }});
  rel.push_back({"XT=w^(-1/6)TXS^(p-1)", [p] {
                   const unsigned phase = (p - inv_mod(Residue(6, p)).value()) % p;
                   return std::pair{mat_X(p) * mat_T(p),
                                    (mat_T(p) * mat_X(p) * mat_pow(mat_S(p), p - 1)).mul_omega_power(phase)};
                 }});
  for (unsigned a = 1; a < p; ++a) {
    const Residue ra(a, p);
    rel.push_back({"V(F_" + std::to_string(a) + ")T=T^(a^-3)V(F_a)", [p, ra] {
                     const UMatrix v = v_map(SL2::scaling(ra));
                     return std::pair{v * mat_T(p), t_pow(p, inv_mod(ra.pow(3)).value()) * v};
                   }});
    rel.push_back({"V(F_" + std::to_string(a) + ")^dag T V(F_a)=T^(a^3)", [p, ra] {
                     const UMatrix v = v_map(SL2::scaling(ra));
                     return std::pair{dagger(v) * mat_T(p) * v, t_pow(p, ra.pow(3).value())};
                   }});
  }
  rel.push_back({"T^p=I", [p, id] { return std::pair{mat_pow(mat_T(p), p), id}; }});
  rel.push_back({"S^p=I", [p, id] { return std::pair{mat_pow(mat_S(p), p), id}; }});
  rel.push_back({"X^p=I", [p, id] { return std::pair{mat_pow(mat_X(p), p), id}; }});
  rel.push_back({"Z^p=I", [p, id] { return std::pair{mat_pow(mat_Z(p), p), id}; }});
  rel.push_back({"H^4=I", [p, id] { return std::pair{mat_pow(mat_H(p), 4), id}; }});
  const std::size_t n = rel.size();
  const TrialOutcome t = run_trials(n, options, [&](std::size_t i) -> std::optional<std::string> {
    auto [lhs, rhs] = rel[i].sides();
    if (faulty(options, 0, n, i)) lhs = lhs.mul_omega_power(1);
    if (lhs == rhs) return std::nullopt;
    return rel[i].name;
  });
  VerifyReport r{"relations", p};
  fill(r, t);
  r.wall_seconds = timer.seconds();
  return r;
}

VerifyReport verify_conjecture(unsigned p, std::size_t h_max, std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& options) {
  require_supported_prime(p);
  if (h_max < 1) throw DomainError("h_max must be at least 1");
  Timer timer;
  const std::size_t n = (h_max + 1) * trials;
  const TrialOutcome t = run_trials(n, options, [&](std::size_t i) -> std::optional<std::string> {
    const std::size_t h = i / trials;
    const NormalForm nf = random_nf(p, h, seed + i);
    std::size_t expected = conjectured_lde(h_count(nf), p);
    if (faulty(options, seed, n, i)) ++expected;
    const std::size_t got = lde_matrix(nf_to_matrix(nf));
    if (got == expected) return std::nullopt;
    return "h=" + std::to_string(h) + " lde=" + std::to_string(got) + " expected=" + std::to_string(expected) +
           " word=" + print(nf_to_word(nf));
  });
  VerifyReport r{"conjecture", p};
  fill(r, t);
  r.details.emplace_back("seed", std::to_string(seed));
  for (std::size_t h = 0; h <= h_max; ++h) {
    std::size_t ok = 0;
    for (std::size_t j = 0; j < trials; ++j) ok += t.ok[h * trials + j] ? 1 : 0;
    r.details.emplace_back("h" + std::to_string(h), std::to_string(ok) + "/" + std::to_string(trials));
  }
  r.wall_seconds = timer.seconds();
  return r;
}

VerifyReport verify_uniqueness(unsigned p, std::size_t h, std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& options) {
  require_supported_prime(p);
  if (h < 1) throw DomainError("h must be at least 1");
  Timer timer;
  auto same_ignoring_phase = [](NormalForm a, NormalForm b) {
    a.tail.phase = b.tail.phase;
    return a == b;
  };
  const TrialOutcome t = run_trials(trials, options, [&](std::size_t i) -> std::optional<std::string> {
    std::mt19937_64 rng(seed + i);
    const NormalForm a = random_nf(p, h, rng);
    NormalForm b = random_nf(p, h, rng);
    if (faulty(options, seed, trials, i)) {
      b = a;
    } else {
      while (same_ignoring_phase(a, b)) b = random_nf(p, h, rng);
    }
    if (!equal_up_to_omega(nf_to_matrix(a), nf_to_matrix(b))) return std::nullopt;
    return "a=" + print(nf_to_word(a)) + " b=" + print(nf_to_word(b));
  });
  VerifyReport r{"uniqueness", p};
  fill(r, t);
  r.details.emplace_back("h", std::to_string(h));
  r.details.emplace_back("seed", std::to_string(seed));
  r.wall_seconds = timer.seconds();
  return r;
}

}  // namespace qnf

// Acceptance criteria, one test per criterion. Prints one PASS/FAIL line each.
#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "bound_oracle.hpp"
#include "qnf/bounds.hpp"
#include "qnf/cli.hpp"
#include "qnf/clifford.hpp"
#include "qnf/errors.hpp"
#include "qnf/harness.hpp"
#include "qnf/matrix_io.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/residue.hpp"
#include "qnf/rewrite.hpp"
#include "qnf/synthesis.hpp"
#include "support.hpp"

using namespace qnf;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(const Stopwatch& clock, double limit, const std::string& detail = "") {
  const double s = clock.seconds();
  EXPECT_LT(s, limit) << "time limit exceeded";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  ::testing::Test::RecordProperty("seconds", buf);
  if (!detail.empty()) ::testing::Test::RecordProperty("detail", detail);
}

UMatrix power(const UMatrix& m, unsigned n) {
  UMatrix r = UMatrix::identity(m.prime());
  for (unsigned i = 0; i < n; ++i) r = r * m;
  return r;
}

CycloFrac one(unsigned p) { return CycloFrac(CycloInt::from_integer(p, 1)); }

class CriterionPrinter : public ::testing::EmptyTestEventListener {
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const auto* r = info.result();
    std::string seconds, detail;
    for (int i = 0; i < r->test_property_count(); ++i) {
      const auto& prop = r->GetTestProperty(i);
      if (std::string(prop.key()) == "seconds") seconds = prop.value();
      if (std::string(prop.key()) == "detail") detail = prop.value();
    }
    std::printf("%s %s %ss%s%s\n", r->Passed() ? "PASS" : "FAIL", info.name(), seconds.c_str(),
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

TEST(Acceptance, criterion_01_generator_fidelity) {
  const Stopwatch clock;
  // diag(1, w, w^3, w^2, w^4)
  const unsigned shown[] = {0, 1, 3, 2, 4};
  const UMatrix t5 = mat_T(5);
  for (unsigned j = 0; j < 5; ++j) {
    for (unsigned k = 0; k < 5; ++k) {
      const CycloFrac want = j == k ? CycloFrac(CycloInt::omega_power(5, shown[j])) : CycloFrac(5);
      EXPECT_EQ(t5.entry(j, k), want) << j << "," << k;
    }
  }
  for (unsigned p : qnf::testing::kSmallPrimes) {
    EXPECT_EQ(det(mat_H(p)), one(p)) << p;
    EXPECT_EQ(det(mat_S(p)), one(p)) << p;
    EXPECT_EQ(det(mat_T(p)), one(p)) << p;
    EXPECT_EQ(power(mat_T(p), p), UMatrix::identity(p)) << p;
  }
  finish(clock, 5);
}

TEST(Acceptance, criterion_02_v_homomorphism) {
  const Stopwatch clock;
  const VerifyReport all = verify_v_homomorphism(5, VMode::all_pairs());
  EXPECT_EQ(all.attempted, 14400U);
  EXPECT_TRUE(all.ok()) << to_record(all);
  std::string detail = "p5=" + std::to_string(all.passed) + "/" + std::to_string(all.attempted);
  for (unsigned p : {7U, 11U}) {
    const VerifyReport r = verify_v_homomorphism(p, VMode::sampled(2000, p));
    EXPECT_EQ(r.attempted, 2000U);
    EXPECT_TRUE(r.ok()) << to_record(r);
    detail += " p" + std::to_string(p) + "=" + std::to_string(r.passed) + "/" + std::to_string(r.attempted);
  }
  finish(clock, 60, detail);
}

TEST(Acceptance, criterion_03_gauss_sum_square) {
  const Stopwatch clock;
  for (unsigned p : qnf::testing::kSmallPrimes) {
    const std::int64_t sign = p % 4 == 1 ? 1 : -1;
    const CycloInt want = CycloInt::from_integer(p, sign * static_cast<std::int64_t>(p));
    for (unsigned a = 1; a < p; ++a) {
      const CycloInt g = gauss_sum(Residue(a, p));
      EXPECT_EQ(g * g, want) << "p=" << p << " a=" << a;
    }
  }
  finish(clock, 5);
}

TEST(Acceptance, criterion_04_commutation_relations) {
  const Stopwatch clock;
  for (unsigned p : {5U, 7U}) {
    const UMatrix t = mat_T(p), s = mat_S(p), x = mat_X(p);
    EXPECT_EQ(s * t, t * s) << p;
    const auto sixth = static_cast<std::int64_t>(inv_mod(Residue(6, p)).value());
    EXPECT_EQ(x * t, (t * x * power(s, p - 1)).mul_omega_power(-sixth)) << p;
    for (unsigned a = 1; a < p; ++a) {
      const Residue alpha(a, p);
      const UMatrix v = v_map(SL2::scaling(alpha));
      EXPECT_EQ(v * t, power(t, inv_mod(alpha).pow(3).value()) * v) << "p=" << p << " a=" << a;
    }
    const VerifyReport r = verify_relations(p);
    EXPECT_TRUE(r.ok()) << to_record(r);
  }
  finish(clock, 10);
}

TEST(Acceptance, criterion_05_conjecture_desk_scale) {
  const Stopwatch clock;
  std::size_t mismatches = 0, total = 0;
  for (unsigned p : qnf::testing::kSmallPrimes) {
    const VerifyReport r = verify_conjecture(p, 8, 200, 1);
    EXPECT_EQ(r.attempted, 9U * 200U);
    EXPECT_TRUE(r.ok()) << to_record(r);
    mismatches += r.attempted - r.passed;
    total += r.attempted;
  }
  finish(clock, 600, "normal_forms=" + std::to_string(total) + " mismatches=" + std::to_string(mismatches));
}

TEST(Acceptance, criterion_06_normalization_soundness) {
  const Stopwatch clock;
  EXPECT_EQ(t_count(parse("H T^2 H T^3 H", 5)), 2U);
  std::mt19937_64 rng(6);
  std::size_t words = 0;
  for (unsigned p : {5U, 7U}) {
    for (int i = 0; i < 500; ++i, ++words) {
      const Word w = qnf::testing::random_word(p, 40, rng);
      const NormalForm nf = normalize(w);
      EXPECT_EQ(nf_to_matrix(nf), word_to_matrix(w)) << print(w);
      EXPECT_LE(nf_t_count(nf), t_count(w)) << print(w);
    }
  }
  finish(clock, 120, "words=" + std::to_string(words));
}

TEST(Acceptance, criterion_07_synthesis_round_trip) {
  const Stopwatch clock;
  std::string detail;
  for (unsigned p : {5U, 7U}) {
    std::size_t failures = 0, backtracks = 0;
    for (std::size_t i = 0; i < 250; ++i) {
      const NormalForm nf = random_nf(p, i % 7, 7000 + i);
      const SynthReport r = exact_synthesize(nf_to_matrix(nf));
      backtracks += r.backtracks;
      const bool same = r.ok() && print(nf_to_word(*r.result)) == print(nf_to_word(nf));
      if (!same) ++failures;
      EXPECT_TRUE(same) << "p=" << p << " " << print(nf_to_word(nf)) << " " << r.message;
    }
    if (p == 7) EXPECT_EQ(backtracks, 0U);
    detail += (detail.empty() ? "" : " ") + std::string("p") + std::to_string(p) +
              ":failures=" + std::to_string(failures) + ",backtracks=" + std::to_string(backtracks);
  }
  finish(clock, 600, detail);
}

TEST(Acceptance, criterion_08_uniqueness_sampling) {
  const Stopwatch clock;
  const VerifyReport r = verify_uniqueness(5, 3, 10000, 8);
  EXPECT_EQ(r.attempted, 10000U);
  EXPECT_TRUE(r.ok()) << to_record(r);
  finish(clock, 300, "pairs=" + std::to_string(r.passed) + "/" + std::to_string(r.attempted));
}

TEST(Acceptance, criterion_09_bounds) {
  const Stopwatch clock;
  for (unsigned p : qnf::testing::kSmallPrimes) {
    // Count normal-form tuples directly: a tail Clifford (phase, displacement,
    // frame), an optional leading T power, and n syllables of p (p - 1) each.
    const BigCount cliffords = BigCount(p) * p * p * enumerate_sl2(p).size();
    BigCount sum = cliffords;
    for (unsigned t = 1; t <= 20; ++t) {
      BigCount syllables = 1;
      for (unsigned i = 0; i + 1 < t; ++i) syllables *= p * (p - 1);
      // T-count t from t - 1 syllables and a leading T^{m0}, or t syllables and m0 = 0
      sum += cliffords * syllables * (p - 1) + cliffords * syllables * p * (p - 1);
      EXPECT_EQ(n_cumulative(t, p), sum) << "p=" << p << " n=" << t;
    }
  }
  const Real got = t_lower_bound(Real("1e-2"), 5);
  const qnf::testing::Dec want = qnf::testing::oracle_bound(qnf::testing::Dec("1e-2"), 5);
  const double rel = static_cast<double>(abs((qnf::testing::Dec(got.str(60)) - want) / want));
  EXPECT_LT(rel, 1e-6);
  std::ostringstream detail;
  detail << "t_lower_bound(1e-2,5)=" << got.str(12) << " rel_err=" << rel;
  finish(clock, 5, detail.str());
}

TEST(Acceptance, criterion_10_rejection) {
  const Stopwatch clock;
  const auto expect_cli = [](const std::string& file, const std::string& reason) {
    std::ostringstream out, err;
    std::istringstream in(file);
    EXPECT_EQ(run_cli({"synth", "-"}, out, err, in), kExitSemantic);
    EXPECT_NE(err.str().find(reason), std::string::npos) << err.str();
  };

  // 1/2 in the (0,0) entry of the identity
  std::vector<RationalEntry> half;
  for (unsigned i = 0; i < 25; ++i) {
    RationalEntry e;
    e.coeffs.assign(4, 0);
    if (i % 6 == 0) e.coeffs[0] = i == 0 ? boost::multiprecision::cpp_rational(1, 2) : 1;
    half.push_back(e);
  }
  EXPECT_EQ(exact_synthesize(5, half).failure, std::optional(SynthFailure::EntriesOutsideRing));
  std::string text = write_matrix_file(UMatrix::identity(5));
  const auto pos = text.find("\"1\"");
  ASSERT_NE(pos, std::string::npos);
  expect_cli(text.replace(pos, 3, "\"1/2\""), "EntriesOutsideRing");

  // Unitary with det 1 and entries in the ring, but not Clifford+T: H times a
  // non-affine signed permutation (p = 5) and H times diag(w^{k^4}) (p = 7).
  std::vector<UMatrix> bad;
  {
    std::vector<CycloInt> num(25, CycloInt(5));
    num[1] = CycloInt::from_integer(5, -1);
    num[5] = CycloInt::from_integer(5, 1);
    for (unsigned k = 2; k < 5; ++k) num[k * 5 + k] = CycloInt::from_integer(5, 1);
    bad.push_back(mat_H(5) * UMatrix::from_scaled(5, std::move(num), 0));
  }
  {
    std::vector<unsigned> e(7);
    for (unsigned k = 0; k < 7; ++k) e[k] = k * k * k * k % 7;
    bad.push_back(mat_H(7) * mul_diag_left(e, UMatrix::identity(7)));
  }
  for (const UMatrix& m : bad) {
    EXPECT_TRUE(is_unitary(m));
    EXPECT_EQ(det(m), one(m.prime()));
    EXPECT_EQ(exact_synthesize(m).failure, std::optional(SynthFailure::SynthesisFailed));
    expect_cli(write_matrix_file(m), "SynthesisFailed");
  }
  finish(clock, 5);
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  auto& listeners = ::testing::UnitTest::GetInstance()->listeners();
  listeners.Append(new CriterionPrinter);
  return RUN_ALL_TESTS();
}

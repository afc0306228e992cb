#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bound_oracle.hpp"
#include "qnf/cli.hpp"
#include "qnf/errors.hpp"
#include "qnf/matrix_io.hpp"
#include "qnf/normal_form.hpp"
#include "support.hpp"

using namespace qnf;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string entry(const std::vector<std::string>& num, std::size_t chi) {
  std::string s = "{\"num\":[";
  for (std::size_t i = 0; i < num.size(); ++i) s += (i ? ",\"" : "\"") + num[i] + "\"";
  return s + "],\"chi\":" + std::to_string(chi) + "}";
}

// Identity matrix for p = 5 with entry (0,0) replaced.
std::string identity_file_with(const std::string& first) {
  std::string s = "{\"version\":1,\"p\":5,\"entries\":[";
  for (int i = 0; i < 5; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 5; ++j) {
      if (j) s += ",";
      if (i == 0 && j == 0) {
        s += first;
      } else {
        s += entry({i == j ? "1" : "0", "0", "0", "0"}, 0);
      }
    }
    s += "]";
  }
  return s + "]}";
}

}  // namespace

TEST(Normalize, PowerOfTIsIdentity) {
  for (const char* w : {"T^5", ""}) {
    const CliRun r = run({"normalize", "-p", "5", w});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"", "tcount=0 hcount=0 lde=0"}));
  }
}

TEST(Normalize, OutputWordHasTheSameMatrix) {
  const std::string input = "H T^2 H T^3 H";
  const CliRun r = run({"normalize", "-p", "5", input});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2U);
  EXPECT_EQ(word_to_matrix(parse(ls[0], 5)), word_to_matrix(parse(input, 5)));
  EXPECT_LE(t_count(parse(ls[0], 5)), 2U);
  EXPECT_EQ(ls[1].rfind("tcount=2 hcount=", 0), 0U) << ls[1];
}

TEST(Normalize, SyntaxErrorIsUsageError) {
  const CliRun r = run({"normalize", "-p", "5", "H Q"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("position 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"normalize", "-p", "4", "H"}).code, kExitUsage);
}

TEST(Usage, BadInvocations) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"normalize", "H"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "-p", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "v-hom", "-p", "11", "--exhaustive"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "-p", "5", "--epsilon", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "-p", "5", "--epsilon", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(MatrixFile, WriteReadRoundTrip) {
  std::mt19937_64 rng(3);
  for (unsigned p : {5U, 7U}) {
    for (int i = 0; i < 20; ++i) {
      const UMatrix m = word_to_matrix(qnf::testing::random_word(p, 30, rng));
      const MatrixFile f = read_matrix_file(write_matrix_file(m));
      EXPECT_TRUE(f.warnings.empty());
      EXPECT_EQ(to_umatrix(f), m);
    }
  }
}

TEST(MatrixFile, ReaderRecanonicalizesAndWarns) {
  // (1 - w) / chi = 1
  const MatrixFile f = read_matrix_file(identity_file_with(entry({"1", "-1", "0", "0"}, 1)));
  ASSERT_EQ(f.warnings.size(), 1U);
  EXPECT_EQ(to_umatrix(f), UMatrix::identity(5));
  // 5/5 written as a fraction
  const MatrixFile g = read_matrix_file(identity_file_with(entry({"5/5", "0", "0", "0"}, 0)));
  EXPECT_EQ(to_umatrix(g), UMatrix::identity(5));
}

TEST(MatrixFile, MalformedInputs) {
  EXPECT_THROW(read_matrix_file("not json"), FormatError);
  EXPECT_THROW(read_matrix_file("{\"version\":2,\"p\":5,\"entries\":[]}"), FormatError);
  EXPECT_THROW(read_matrix_file("{\"version\":1,\"p\":5,\"entries\":[]}"), FormatError);
  EXPECT_THROW(read_matrix_file(identity_file_with(entry({"1", "0", "0"}, 0))), FormatError);
  EXPECT_THROW(read_matrix_file(identity_file_with(entry({"1", "x", "0", "0"}, 0))), FormatError);
  EXPECT_THROW(read_matrix_file(identity_file_with(entry({"1/0", "0", "0", "0"}, 0))), FormatError);
  EXPECT_THROW(read_matrix_file("{\"version\":1,\"p\":9,\"entries\":[]}"), UnsupportedPrime);
}

TEST(Synth, IdentityFileGivesEmptyWord) {
  const CliRun r = run({"synth", "-"}, identity_file_with(entry({"1", "0", "0", "0"}, 0)));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).at(0), "");
}

TEST(Synth, HalfIsOutsideTheRing) {
  const CliRun r = run({"synth", "-"}, identity_file_with(entry({"1/2", "0", "0", "0"}, 0)));
  EXPECT_EQ(r.code, kExitSemantic);
  EXPECT_NE(r.err.find("EntriesOutsideRing"), std::string::npos) << r.err;
}

TEST(Synth, NonUnitaryAndMalformed) {
  const CliRun r = run({"synth", "-"}, identity_file_with(entry({"2", "0", "0", "0"}, 0)));
  EXPECT_EQ(r.code, kExitSemantic);
  EXPECT_NE(r.err.find("NotUnitary"), std::string::npos) << r.err;
  EXPECT_EQ(run({"synth", "-"}, "{").code, kExitUsage);
  EXPECT_EQ(run({"synth", "/nonexistent/file.json"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "-p", "7", "-"}, identity_file_with(entry({"1", "0", "0", "0"}, 0))).code, kExitUsage);
}

TEST(Synth, MatrixOfRandomNormalFormRoundTrips) {
  const auto dir = std::filesystem::temp_directory_path();
  for (unsigned p : {5U, 7U}) {
    for (std::size_t h = 0; h <= 4; ++h) {
      const CliRun word = run({"random-word", "-p", std::to_string(p), "--hcount", std::to_string(h), "--seed", "9"});
      ASSERT_EQ(word.code, 0) << word.err;
      const std::string text = lines(word.out).at(0);
      const auto path = (dir / ("qnf_cli_" + std::to_string(p) + "_" + std::to_string(h) + ".json")).string();
      ASSERT_EQ(run({"matrix", "-p", std::to_string(p), text, "-o", path}).code, 0);
      const CliRun s = run({"synth", path});
      std::filesystem::remove(path);
      ASSERT_EQ(s.code, 0) << s.err;
      EXPECT_EQ(lines(s.out).at(0), text);
    }
  }
}

TEST(Bound, MatchesOracle) {
  const CliRun r = run({"bound", "-p", "5", "--epsilon", "1e-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = std::stold(r.out);
  const auto oracle = static_cast<long double>(qnf::testing::oracle_bound(qnf::testing::Dec("1e-2"), 5));
  EXPECT_LT(std::abs((v - oracle) / oracle), 1e-6L);
  EXPECT_EQ(run({"bound", "-p", "5", "--epsilon", "1e-2", "--gamma-variant", "ball"}).code, 0);
}

TEST(RandomWord, Deterministic) {
  const CliRun a = run({"random-word", "-p", "5", "--hcount", "4", "--seed", "42"});
  const CliRun b = run({"random-word", "-p", "5", "--hcount", "4", "--seed", "42"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"random-word", "-p", "5", "--hcount", "4", "--seed", "43"}).out);
}

TEST(Verify, ConjectureDeskScale) {
  const CliRun r = run({"verify", "conjecture", "-p", "5", "--hmax", "8", "--trials", "200", "--seed", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("status=ok"), std::string::npos) << r.out;
}

TEST(Verify, InjectedFaultExitsTwo) {
  const CliRun r = run({"verify", "relations", "-p", "5", "--inject-fault"});
  EXPECT_EQ(r.code, kExitSemantic);
  EXPECT_NE(r.out.find("status=fail"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("counterexample=none"), std::string::npos) << r.out;
}

TEST(Verify, WorkersDoNotChangeTheRecord) {
  const std::vector<std::string> base = {"verify", "uniqueness", "-p", "5", "--hcount", "2", "--trials", "200"};
  auto parallel = base;
  parallel.insert(parallel.end(), {"--workers", "3"});
  const CliRun a = run(base);
  const CliRun b = run(parallel);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "v-hom", "-p", "5", "--exhaustive"}).code, 0);
}

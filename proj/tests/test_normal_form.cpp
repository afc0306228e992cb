#include <gtest/gtest.h>

#include <random>

#include "qnf/errors.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/rewrite.hpp"
#include "support.hpp"

using namespace qnf;

TEST(WordSyntax, ParseExamples) {
  EXPECT_EQ(parse("H T^2 H T^3 H", 5).tokens.size(), 5U);
  EXPECT_TRUE(parse("", 5).tokens.empty());
  EXPECT_THROW(parse("Q", 5), SyntaxError);
  EXPECT_THROW(parse("T^0", 5), SyntaxError);
  EXPECT_THROW(parse("T^", 5), SyntaxError);
  EXPECT_THROW(parse("T", 4), UnsupportedPrime);
  try {
    parse("H T Q", 5);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_EQ(parse("T^7 H^5 w", 5), (Word{5, {{Gate::T, 2}, {Gate::H, 1}, {Gate::W, 1}}}));
  EXPECT_TRUE(parse("T^5 H^4", 5).tokens.empty());
  EXPECT_EQ(parse("HT^2HT^3H", 5), parse("H T^2 H T^3 H", 5));
  EXPECT_EQ(print(parse("H T^2 W^3", 7)), "H T^2 w^3");
  EXPECT_EQ(print(parse("", 7)), "");
}

TEST(WordSyntax, TCount) {
  EXPECT_EQ(t_count(parse("H T^2 H T^3 H", 5)), 2U);
  EXPECT_EQ(t_count(parse("", 5)), 0U);
  EXPECT_EQ(t_count(parse("T T T T T", 5)), 0U);
  EXPECT_EQ(t_count(parse("T T H T", 5)), 2U);
}

TEST(WordSyntax, PrintParseRoundTripAndTpInsertion) {
  std::mt19937_64 rng(2);
  for (unsigned p : {5U, 7U}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = qnf::testing::random_word(p, 30, rng);
      EXPECT_EQ(parse(print(w), p), w);
      // a T^p block anywhere never changes the count
      const std::string text = print(w);
      const std::size_t cut = text.empty() ? 0 : rng() % text.size();
      const std::size_t space = text.find(' ', cut);
      const std::string with = space == std::string::npos ? text + " T^" + std::to_string(p)
                                                          : text.substr(0, space) + " T^" + std::to_string(p) +
                                                                text.substr(space);
      EXPECT_EQ(t_count(parse(with, p)), t_count(w));
    }
  }
}

TEST(NormalForm, Counts) {
  const unsigned p = 5;
  EXPECT_EQ(h_count(normalize(parse("S", p))), 0U);
  EXPECT_EQ(h_count(normalize(parse("H", p))), 1U);
  NormalForm nf = NormalForm::identity(p);
  nf.syllables = {{1, 1}, {2, 3}, {0, 4}};
  EXPECT_EQ(h_count(nf), 3U);
  EXPECT_EQ(nf_t_count(nf), 3U);
  nf.m0 = 3;
  EXPECT_EQ(nf_t_count(nf), 4U);
  nf.syllables.pop_back();
  EXPECT_EQ(nf_t_count(nf), 3U);
  nf.m0 = 0;
  EXPECT_EQ(nf_t_count(nf), 2U);
  EXPECT_EQ(nf_t_count(NormalForm::identity(p)), 0U);
}

TEST(NormalForm, LeftmostSyllableExamples) {
  const unsigned p = 5;
  const NormalForm a = normalize(parse("T^2 S H T S^2 H T^2 S", p));
  ASSERT_EQ(a.m0, 2U);
  ASSERT_EQ(a.syllables, (std::vector<HTPair>{{1, 1}, {2, 2}}));
  EXPECT_EQ(a.tail, clifford_S(p));
  const auto [first, rest] = leftmost_syllable(a);
  ASSERT_TRUE(std::holds_alternative<TPower>(first));
  EXPECT_EQ(std::get<TPower>(first).m, 2U);
  EXPECT_EQ(rest.m0, 0U);
  const auto [kept, rest2] = leftmost_syllable(a, LeftmostRule::CaseList);
  ASSERT_TRUE(std::holds_alternative<TThenHT>(kept));
  EXPECT_EQ(std::get<TThenHT>(kept).ht, (HTPair{1, 1}));
  EXPECT_EQ(rest2.syllables.size(), 1U);

  const NormalForm b = normalize(parse("S H T S^2 H T^2 S", p));
  const auto [hb, restb] = leftmost_syllable(b);
  ASSERT_TRUE(std::holds_alternative<HT>(hb));
  EXPECT_EQ(std::get<HT>(hb).ht, (HTPair{1, 1}));
  EXPECT_EQ(to_string(hb), "H_1 T^1");

  const NormalForm c = normalize(parse("H S", p));
  EXPECT_TRUE(std::holds_alternative<CliffordOnly>(leftmost_syllable(c).first));
  const NormalForm d = normalize(parse("T^3 H S", p));
  EXPECT_TRUE(std::holds_alternative<TThenClifford>(leftmost_syllable(d).first));
}

TEST(NormalForm, SyllableChainsReassemble) {
  std::mt19937_64 rng(6);
  for (unsigned p : {5U, 7U}) {
    for (int trial = 0; trial < 200; ++trial) {
      const NormalForm nf = random_nf(p, rng() % 6, rng);
      for (auto rule : {LeftmostRule::SplitLeadingT, LeftmostRule::CaseList}) {
        const auto chain = syllable_chain(nf, rule);
        EXPECT_EQ(reassemble(p, chain), nf);
      }
    }
  }
}

TEST(NormalForm, MatrixExamples) {
  for (unsigned p : {5U, 7U}) {
    EXPECT_EQ(nf_to_matrix(NormalForm::identity(p)), UMatrix::identity(p));
    NormalForm nf = NormalForm::identity(p);
    nf.syllables = {{0, 1}};
    EXPECT_EQ(nf_to_matrix(nf), mat_H(p) * mat_T(p));
  }
}

TEST(NormalForm, WordAndMatrixAgreeWithTripleProduct) {
  std::mt19937_64 rng(12);
  for (unsigned p : {5U, 7U}) {
    for (int trial = 0; trial < 60; ++trial) {
      const NormalForm nf = random_nf(p, rng() % 5, rng);
      UMatrix m = UMatrix::identity(p);
      for (unsigned i = 0; i < nf.m0; ++i) m = m * mat_T(p);
      for (const auto& s : nf.syllables) {
        m = m * clifford_to_matrix(clifford_Hd(s.d, p));
        for (unsigned i = 0; i < s.m; ++i) m = m * mat_T(p);
      }
      m = m * clifford_to_matrix(nf.tail);
      EXPECT_EQ(nf_to_matrix(nf), m);
      EXPECT_EQ(word_to_matrix(clifford_word(nf.tail)), clifford_to_matrix(nf.tail));
    }
  }
}

TEST(NormalForm, CliffordWordsCoverEveryFrame) {
  for (unsigned p : {5U, 7U}) {
    for (const auto& f : enumerate_sl2(p)) {
      const CliffordElem c{Residue(3, p), Residue(1, p), Residue(2, p), f};
      EXPECT_EQ(normalize(clifford_word(c)).tail, c);
    }
  }
}

TEST(NormalForm, RandomDraws) {
  for (unsigned p : {5U, 7U}) {
    const NormalForm zero = random_nf(p, 0, std::uint64_t{3});
    EXPECT_TRUE(zero.syllables.empty());
    EXPECT_TRUE(in_P(zero.tail));
    EXPECT_EQ(random_nf(p, 4, std::uint64_t{42}), random_nf(p, 4, std::uint64_t{42}));
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const NormalForm nf = random_nf(5, 4, rng);
    EXPECT_EQ(h_count(nf), 4U);
    EXPECT_NO_THROW(validate(nf));
  }
}

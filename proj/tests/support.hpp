#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qnf/cyclotomic.hpp"
#include "qnf/gates.hpp"

namespace qnf::testing {

inline constexpr unsigned kSmallPrimes[] = {5, 7, 11, 13};

inline CycloInt random_cyclo(unsigned p, std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<BigInt> c(p - 1);
  for (auto& x : c) x = dist(rng);
  return {p, std::move(c)};
}

// Independent numeric oracle: evaluates sum c_i w^i directly in long double.
inline std::complex<long double> embed(const CycloInt& x) {
  const unsigned p = x.prime();
  const long double pi = std::acos(-1.0L);
  std::complex<long double> s = 0;
  for (unsigned i = 0; i + 1 < p; ++i) {
    const long double c = std::stold(x.coeff(i).to_string());
    s += c * std::polar(1.0L, 2 * pi * i / p);
  }
  return s;
}

inline std::complex<long double> embed(const CycloFrac& y) {
  const unsigned p = y.prime();
  const long double pi = std::acos(-1.0L);
  const std::complex<long double> chi = 1.0L - std::polar(1.0L, 2 * pi / p);
  return embed(y.num()) / std::pow(chi, static_cast<long double>(y.chi_exp()));
}

inline bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-9L) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

// Row-major complex matrix of M, computed entry by entry with the oracle.
inline std::vector<std::complex<long double>> embed(const UMatrix& m) {
  std::vector<std::complex<long double>> out;
  for (unsigned i = 0; i < m.dim(); ++i) {
    for (unsigned j = 0; j < m.dim(); ++j) out.push_back(embed(m.entry(i, j)));
  }
  return out;
}

}  // namespace qnf::testing

#include "qnf/word.hpp"

namespace qnf::testing {

inline Word random_word(unsigned p, std::size_t max_len, std::mt19937_64& rng) {
  static constexpr Gate kGates[] = {Gate::H, Gate::S, Gate::T, Gate::T, Gate::X, Gate::Z, Gate::W};
  Word w{p, {}};
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const Gate g = kGates[rng() % std::size(kGates)];
    w.append(g, 1 + static_cast<unsigned>(rng() % (gate_order(g, p) - 1)));
  }
  return w;
}

}  // namespace qnf::testing

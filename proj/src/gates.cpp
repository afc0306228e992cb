#include "qnf/gates.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "qnf/errors.hpp"

namespace qnf {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct ScalarCache {
  std::size_t chi_exp = 0;
  std::optional<CycloInt> h_num;
  std::optional<CycloInt> hinv_num;
};

const ScalarCache& scalars(unsigned p) {
  require_supported_prime(p);
  static std::array<ScalarCache, kMaxPrime + 1> cache;
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (unsigned q = kMinPrime; q <= kMaxPrime; ++q) {
      if (!is_supported_prime(q)) continue;
      // H = (g/p) * DFT with g = sum_m w^{2 m^2}; H^{-1} = H^dagger uses conj(g) = sum_m w^{-2 m^2}.
      const CycloFrac h = from_p_denominator(gauss_sum(Residue(2, q)), 1);
      const CycloFrac hinv = from_p_denominator(gauss_sum(Residue(-2, q)), 1);
      cache[q].chi_exp = h.chi_exp();
      cache[q].h_num = h.num();
      cache[q].hinv_num = hinv.num();
    }
  });
  return cache[p];
}

void check_same(unsigned a, unsigned b) {
  if (a != b) throw PrimeMismatch();
}

// out(j, c) = scalar * sum_k w^{sign*j*k} N(k, c)   (left = true)
// out(r, k) = scalar * sum_j N(r, j) w^{sign*j*k}   (left = false)
UMatrix apply_fourier(const UMatrix& m, int sign, const CycloInt& scalar, std::size_t scalar_chi, bool left) {
  const unsigned p = m.prime();
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  std::vector<BigInt> acc(p);
  for (unsigned row = 0; row < p; ++row) {
    for (unsigned col = 0; col < p; ++col) {
      for (auto& a : acc) a = 0;
      const unsigned fixed = left ? row : col;
      for (unsigned k = 0; k < p; ++k) {
        const CycloInt& x = left ? m.numerator(k, col) : m.numerator(row, k);
        const std::int64_t raw = sign * static_cast<std::int64_t>((fixed * k) % p);
        unsigned shift = static_cast<unsigned>(raw < 0 ? raw + p : raw);
        for (unsigned i = 0; i + 1 < p; ++i) {
          const BigInt& c = x.coeff(i);
          if (c.is_zero()) continue;
          unsigned t = i + shift;
          if (t >= p) t -= p;
          acc[t] += c;
        }
      }
      out.push_back(scalar * CycloInt::from_redundant(p, acc));
    }
  }
  return UMatrix::from_scaled(p, std::move(out), m.chi_exp() + scalar_chi);
}

}  // namespace

UMatrix::UMatrix(unsigned p, std::vector<CycloInt> num, std::size_t chi_exp)
    : p_(p), num_(std::move(num)), chi_exp_(chi_exp) {}

UMatrix UMatrix::identity(unsigned p) {
  require_supported_prime(p);
  std::vector<CycloInt> num(static_cast<std::size_t>(p) * p, CycloInt(p));
  for (unsigned i = 0; i < p; ++i) num[i * p + i] = CycloInt::from_integer(p, 1);
  return {p, std::move(num), 0};
}

UMatrix UMatrix::zero(unsigned p) {
  require_supported_prime(p);
  return {p, std::vector<CycloInt>(static_cast<std::size_t>(p) * p, CycloInt(p)), 0};
}

UMatrix UMatrix::from_entries(unsigned p, std::span<const CycloFrac> entries) {
  require_supported_prime(p);
  if (entries.size() != static_cast<std::size_t>(p) * p) throw DomainError("matrix needs p*p entries");
  std::size_t k = 0;
  for (const auto& e : entries) {
    check_same(e.prime(), p);
    k = std::max(k, e.chi_exp());
  }
  std::vector<CycloInt> num;
  num.reserve(entries.size());
  for (const auto& e : entries) num.push_back(e.numerator_at(k));
  return from_scaled(p, std::move(num), k);
}

UMatrix UMatrix::from_scaled(unsigned p, std::vector<CycloInt> numerators, std::size_t chi_exp) {
  require_supported_prime(p);
  if (numerators.size() != static_cast<std::size_t>(p) * p) throw DomainError("matrix needs p*p entries");
  for (const auto& n : numerators) check_same(n.prime(), p);
  UMatrix m(p, std::move(numerators), chi_exp);
  m.canonicalize();
  return m;
}

void UMatrix::canonicalize() {
  bool all_zero = true;
  for (const auto& n : num_) all_zero = all_zero && n.is_zero();
  if (all_zero) {
    chi_exp_ = 0;
    return;
  }
  while (chi_exp_ > 0) {
    for (const auto& n : num_) {
      if (!parity(n).is_zero()) return;
    }
    for (auto& n : num_) n = div_chi_exact(n);
    --chi_exp_;
  }
}

bool UMatrix::is_monomial() const {
  for (unsigned i = 0; i < p_; ++i) {
    unsigned row_nonzero = 0;
    unsigned col_nonzero = 0;
    for (unsigned j = 0; j < p_; ++j) {
      row_nonzero += !numerator(i, j).is_zero();
      col_nonzero += !numerator(j, i).is_zero();
    }
    if (row_nonzero > 1 || col_nonzero > 1) return false;
  }
  return true;
}

UMatrix UMatrix::mul_omega_power(std::int64_t k) const {
  std::vector<CycloInt> num;
  num.reserve(num_.size());
  for (const auto& n : num_) num.push_back(n.mul_omega_power(k));
  return {p_, std::move(num), chi_exp_};
}

std::string UMatrix::to_string() const {
  std::ostringstream os;
  for (unsigned i = 0; i < p_; ++i) {
    for (unsigned j = 0; j < p_; ++j) {
      if (j) os << " | ";
      os << entry(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::complex<double>> UMatrix::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(num_.size());
  for (unsigned i = 0; i < p_; ++i) {
    for (unsigned j = 0; j < p_; ++j) out.push_back(entry(i, j).to_complex());
  }
  return out;
}

unsigned s_exponent(unsigned k, unsigned p) {
  const Residue kk(k, p);
  return (kk * (kk + Residue(1, p)) * inv_mod(Residue(2, p))).value();
}

unsigned t_exponent(unsigned k, unsigned p) {
  const Residue kk(k, p);
  return (kk * kk * kk * inv_mod(Residue(6, p))).value();
}

namespace {

UMatrix diagonal(unsigned p, unsigned (*exponent)(unsigned, unsigned)) {
  std::vector<unsigned> e(p);
  for (unsigned k = 0; k < p; ++k) e[k] = exponent(k, p);
  return mul_diag_left(e, UMatrix::identity(p));
}

}  // namespace

UMatrix mat_H(unsigned p) { return mul_H_left(UMatrix::identity(p)); }
UMatrix mat_S(unsigned p) { return diagonal(p, s_exponent); }
UMatrix mat_T(unsigned p) { return diagonal(p, t_exponent); }
UMatrix mat_Z(unsigned p) {
  return diagonal(p, [](unsigned k, unsigned) { return k; });
}
UMatrix mat_X(unsigned p) { return mul_X_right(UMatrix::identity(p), 1); }
UMatrix mat_omega(unsigned p) { return UMatrix::identity(p).mul_omega_power(1); }

UMatrix mat_mul(const UMatrix& a, const UMatrix& b) {
  check_same(a.prime(), b.prime());
  const unsigned p = a.prime();
  const std::size_t n = static_cast<std::size_t>(p) * p;
  // nonzero coefficient positions of every entry of a
  std::vector<std::vector<unsigned>> support(n);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned k = 0; k < p; ++k) {
      const CycloInt& x = a.numerator(i, k);
      for (unsigned c = 0; c + 1 < p; ++c) {
        if (!x.coeff(c).is_zero()) support[i * p + k].push_back(c);
      }
    }
  }
  std::vector<CycloInt> out;
  out.reserve(n);
  std::vector<BigInt> acc(p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      for (auto& v : acc) v = 0;
      for (unsigned k = 0; k < p; ++k) {
        const auto& sup = support[i * p + k];
        if (sup.empty()) continue;
        const CycloInt& x = a.numerator(i, k);
        const CycloInt& y = b.numerator(k, j);
        for (unsigned d = 0; d + 1 < p; ++d) {
          const BigInt& yd = y.coeff(d);
          if (yd.is_zero()) continue;
          for (unsigned c : sup) {
            unsigned t = c + d;
            if (t >= p) t -= p;
            acc[t].add_product(x.coeff(c), yd);
          }
        }
      }
      out.push_back(CycloInt::from_redundant(p, acc));
    }
  }
  return UMatrix::from_scaled(p, std::move(out), a.chi_exp() + b.chi_exp());
}

UMatrix dagger(const UMatrix& a) {
  // conj(N / chi^k) = conj(N) (-w)^k / chi^k
  const unsigned p = a.prime();
  const std::size_t k = a.chi_exp();
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      CycloInt x = galois_conjugate(a.numerator(j, i)).mul_omega_power(static_cast<std::int64_t>(k % p));
      out.push_back(k % 2 == 1 ? -x : x);
    }
  }
  return UMatrix::from_scaled(p, std::move(out), k);
}

CycloFrac det(const UMatrix& a) {
  // Fraction-free Bareiss elimination over Z[w] on the numerator matrix.
  const unsigned p = a.prime();
  std::vector<CycloInt> m;
  m.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) m.push_back(a.numerator(i, j));
  }
  auto at = [&](unsigned i, unsigned j) -> CycloInt& { return m[i * p + j]; };
  bool negate = false;
  CycloInt prev = CycloInt::from_integer(p, 1);
  for (unsigned k = 0; k + 1 < p; ++k) {
    unsigned pivot = k;
    while (pivot < p && at(pivot, k).is_zero()) ++pivot;
    if (pivot == p) return CycloFrac(p);
    if (pivot != k) {
      for (unsigned j = 0; j < p; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (unsigned i = k + 1; i < p; ++i) {
      for (unsigned j = k + 1; j < p; ++j) {
        const CycloInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        auto q = divide_exact(t, prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        at(i, j) = std::move(*q);
      }
      at(i, k) = CycloInt(p);
    }
    prev = at(k, k);
  }
  CycloInt d = at(p - 1, p - 1);
  if (negate) d = -d;
  return {std::move(d), a.chi_exp() * p};
}

bool is_unitary(const UMatrix& a) { return mat_mul(a, dagger(a)) == UMatrix::identity(a.prime()); }

std::optional<Residue> equal_up_to_omega(const UMatrix& a, const UMatrix& b) {
  check_same(a.prime(), b.prime());
  const unsigned p = a.prime();
  if (a.chi_exp() != b.chi_exp()) return std::nullopt;
  unsigned pivot = 0;
  const unsigned n = p * p;
  while (pivot < n && b.numerator(pivot / p, pivot % p).is_zero()) ++pivot;
  if (pivot == n) {
    if (a == b) return Residue(0, p);
    return std::nullopt;
  }
  const CycloInt& ref = b.numerator(pivot / p, pivot % p);
  const CycloInt& target = a.numerator(pivot / p, pivot % p);
  for (unsigned e = 0; e < p; ++e) {
    if (ref.mul_omega_power(e) == target) {
      if (b.mul_omega_power(e) == a) return Residue(e, p);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::size_t lde_matrix(const UMatrix& m) { return m.chi_exp(); }

std::vector<Residue> parity_matrix(const UMatrix& m, std::size_t k) {
  if (k < m.chi_exp()) throw DenominatorTooLarge("parity_matrix needs k >= lde_matrix(M)");
  const unsigned p = m.prime();
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      // any extra chi factor lands in the kernel of the parity map
      out.push_back(k > m.chi_exp() ? Residue(0, p) : parity(m.numerator(i, j)));
    }
  }
  return out;
}

std::size_t h_scalar_chi_exp(unsigned p) { return scalars(p).chi_exp; }
const CycloInt& h_scalar_numerator(unsigned p) { return *scalars(p).h_num; }
const CycloInt& hinv_scalar_numerator(unsigned p) { return *scalars(p).hinv_num; }

UMatrix mul_H_left(const UMatrix& m) {
  const auto& s = scalars(m.prime());
  return apply_fourier(m, +1, *s.h_num, s.chi_exp, true);
}

UMatrix mul_H_right(const UMatrix& m) {
  const auto& s = scalars(m.prime());
  return apply_fourier(m, +1, *s.h_num, s.chi_exp, false);
}

UMatrix mul_Hinv_left(const UMatrix& m) {
  const auto& s = scalars(m.prime());
  return apply_fourier(m, -1, *s.hinv_num, s.chi_exp, true);
}

UMatrix mul_diag_left(std::span<const unsigned> exponents, const UMatrix& m) {
  const unsigned p = m.prime();
  if (exponents.size() != p) throw DomainError("diagonal needs p exponents");
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) out.push_back(m.numerator(i, j).mul_omega_power(exponents[i]));
  }
  return UMatrix::from_scaled(p, std::move(out), m.chi_exp());
}

UMatrix mul_diag_right(const UMatrix& m, std::span<const unsigned> exponents) {
  const unsigned p = m.prime();
  if (exponents.size() != p) throw DomainError("diagonal needs p exponents");
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) out.push_back(m.numerator(i, j).mul_omega_power(exponents[j]));
  }
  return UMatrix::from_scaled(p, std::move(out), m.chi_exp());
}

UMatrix mul_X_right(const UMatrix& m, unsigned shift) {
  // (M X^s)(r, k) = M(r, k + s)
  const unsigned p = m.prime();
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) out.push_back(m.numerator(i, (j + shift) % p));
  }
  return UMatrix::from_scaled(p, std::move(out), m.chi_exp());
}

UMatrix mul_X_left(unsigned shift, const UMatrix& m) {
  // (X^s M)(r, c) = M(r - s, c)
  const unsigned p = m.prime();
  shift %= p;
  std::vector<CycloInt> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) out.push_back(m.numerator((i + p - shift) % p, j));
  }
  return UMatrix::from_scaled(p, std::move(out), m.chi_exp());
}

UMatrix word_to_matrix(const Word& w) {
  const unsigned p = w.p;
  UMatrix m = UMatrix::identity(p);
  std::vector<unsigned> e(p);
  for (const auto& t : w.tokens) {
    switch (t.gate) {
      case Gate::H:
        for (unsigned i = 0; i < t.power; ++i) m = mul_H_right(m);
        break;
      case Gate::S:
        for (unsigned k = 0; k < p; ++k) e[k] = (s_exponent(k, p) * t.power) % p;
        m = mul_diag_right(m, e);
        break;
      case Gate::T:
        for (unsigned k = 0; k < p; ++k) e[k] = (t_exponent(k, p) * t.power) % p;
        m = mul_diag_right(m, e);
        break;
      case Gate::Z:
        for (unsigned k = 0; k < p; ++k) e[k] = (k * t.power) % p;
        m = mul_diag_right(m, e);
        break;
      case Gate::X:
        m = mul_X_right(m, t.power % p);
        break;
      case Gate::W:
        m = m.mul_omega_power(t.power);
        break;
    }
  }
  return m;
}

CycloFrac ring_element_from_rational(unsigned p, const RationalEntry& e) {
  require_supported_prime(p);
  if (e.coeffs.size() != p - 1) throw DomainError("entry needs p-1 coefficients");
  using boost::multiprecision::cpp_int;
  cpp_int lcm = 1;
  for (const auto& c : e.coeffs) {
    const cpp_int d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  unsigned m = 0;
  cpp_int rest = lcm;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) {
    throw EntriesOutsideRing("coefficient denominator " + lcm.str() + " is not a power of " + std::to_string(p));
  }
  std::vector<BigInt> num(p - 1);
  for (unsigned i = 0; i + 1 < p; ++i) {
    const Rational scaled = e.coeffs[i] * Rational(lcm);
    num[i] = BigInt(cpp_int(boost::multiprecision::numerator(scaled)));
  }
  const CycloFrac f = from_p_denominator(CycloInt(p, std::move(num)), m);
  return {f.num(), f.chi_exp() + e.chi_exp};
}

UMatrix ring_matrix_from_rationals(unsigned p, std::span<const RationalEntry> entries) {
  std::vector<CycloFrac> fr;
  fr.reserve(entries.size());
  for (const auto& e : entries) fr.push_back(ring_element_from_rational(p, e));
  return UMatrix::from_entries(p, fr);
}

}  // namespace qnf

#include "qnf/residue.hpp"

#include "qnf/cyclotomic.hpp"
#include "qnf/errors.hpp"

namespace qnf {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_supported_prime(unsigned p) {
  if (!is_supported_prime(p)) {
    throw UnsupportedPrime("unsupported prime " + std::to_string(p) + " (need a prime in [" +
                           std::to_string(kMinPrime) + ", " + std::to_string(kMaxPrime) + "])");
  }
}

Residue::Residue(std::int64_t value, unsigned modulus) : modulus_(modulus) {
  require_supported_prime(modulus);
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  value_ = static_cast<unsigned>(r < 0 ? r + modulus : r);
}

Residue Residue::operator+(Residue o) const {
  if (o.modulus_ != modulus_) throw PrimeMismatch();
  unsigned v = value_ + o.value_;
  return {v >= modulus_ ? v - modulus_ : v, modulus_, Unchecked{}};
}

Residue Residue::operator-(Residue o) const {
  if (o.modulus_ != modulus_) throw PrimeMismatch();
  return {value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_, modulus_, Unchecked{}};
}

Residue Residue::operator*(Residue o) const {
  if (o.modulus_ != modulus_) throw PrimeMismatch();
  return {(value_ * o.value_) % modulus_, modulus_, Unchecked{}};
}

Residue Residue::pow(std::uint64_t e) const {
  Residue result(1, modulus_);
  Residue b = *this;
  while (e > 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

Residue inv_mod(Residue a) {
  if (a.is_zero()) throw ZeroInverse();
  return a.pow(a.modulus() - 2);
}

int legendre(Residue a) {
  if (a.is_zero()) return 0;
  // Euler's criterion.
  return a.pow((a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

std::string to_string(FourthRoot r) {
  static const char* const names[] = {"1", "i", "-1", "-i"};
  return names[r.exponent % 4];
}

FourthRoot epsilon_p(unsigned p) {
  require_supported_prime(p);
  return {p % 4 == 1 ? 0U : 1U};
}

FourthRoot delta_p(unsigned p) {
  require_supported_prime(p);
  switch (p % 8) {
    case 1: return {0};
    case 3: return {3};
    case 5: return {2};
    default: return {1};
  }
}

Residue primitive_root(unsigned p) {
  require_supported_prime(p);
  for (unsigned g = 2; g < p; ++g) {
    Residue r(g, p);
    Residue x = r;
    unsigned order = 1;
    while (x.value() != 1) {
      x *= r;
      ++order;
    }
    if (order == p - 1) return r;
  }
  return {1, p};  // unreachable for prime p
}

CycloInt gauss_sum(Residue a) {
  if (a.is_zero()) throw ZeroArgument("gauss_sum needs a nonzero argument");
  const unsigned p = a.modulus();
  CycloInt sum(p);
  for (unsigned k = 0; k < p; ++k) {
    sum += CycloInt::omega_power(p, (a * Residue(k * k, p)).value());
  }
  return sum;
}

}  // namespace qnf

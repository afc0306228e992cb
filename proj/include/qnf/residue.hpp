#pragma once

#include <cstdint>
#include <string>

namespace qnf {

class CycloInt;

inline constexpr unsigned kMinPrime = 5;
inline constexpr unsigned kMaxPrime = 31;

bool is_prime(unsigned n) noexcept;

inline constexpr bool is_supported_prime(unsigned p) noexcept {
  constexpr std::uint64_t kPrimeMask = (1ULL << 5) | (1ULL << 7) | (1ULL << 11) | (1ULL << 13) | (1ULL << 17) |
                                       (1ULL << 19) | (1ULL << 23) | (1ULL << 29) | (1ULL << 31);
  return p >= kMinPrime && p <= kMaxPrime && ((kPrimeMask >> p) & 1U);
}
// Throws UnsupportedPrime unless p is a prime in [kMinPrime, kMaxPrime].
void require_supported_prime(unsigned p);

// Element of Z_p. The modulus travels with the value.
class Residue {
 public:
  Residue(std::int64_t value, unsigned modulus);

  unsigned value() const noexcept { return value_; }
  unsigned modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue operator+(Residue o) const;
  Residue operator-(Residue o) const;
  Residue operator*(Residue o) const;
  Residue operator-() const { return Residue(modulus_ - value_, modulus_); }
  Residue& operator+=(Residue o) { return *this = *this + o; }
  Residue& operator-=(Residue o) { return *this = *this - o; }
  Residue& operator*=(Residue o) { return *this = *this * o; }
  Residue pow(std::uint64_t e) const;

  friend bool operator==(Residue a, Residue b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Unchecked {};
  Residue(unsigned value, unsigned modulus, Unchecked) noexcept : value_(value), modulus_(modulus) {}

  unsigned value_;
  unsigned modulus_;
};

Residue inv_mod(Residue a);
// Legendre symbol (a/p): +1, -1, or 0 when p divides a.
int legendre(Residue a);

// i^exponent; bookkeeping for the fourth-root-of-unity phases.
struct FourthRoot {
  unsigned exponent = 0;

  friend FourthRoot operator*(FourthRoot a, FourthRoot b) { return {(a.exponent + b.exponent) % 4}; }
  friend bool operator==(FourthRoot, FourthRoot) = default;
  static FourthRoot from_sign(int sign) { return {sign < 0 ? 2U : 0U}; }
};

std::string to_string(FourthRoot r);

FourthRoot epsilon_p(unsigned p);
FourthRoot delta_p(unsigned p);
// Smallest generator of Z_p^*.
Residue primitive_root(unsigned p);

// sum_{k=0}^{p-1} w^{a k^2} as an exact element of Z[w]. Throws ZeroArgument for a = 0.
CycloInt gauss_sum(Residue a);

}  // namespace qnf

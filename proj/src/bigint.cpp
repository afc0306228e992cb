#include "qnf/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace qnf {

BigInt BigInt::from_string(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  Wide value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return BigInt(negative ? Wide(-value) : value);
}

std::string BigInt::to_string() const {
  if (!wide_) return std::to_string(small_);
  return wide_->str();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) return BigInt(a.small_ / b.small_);
  return BigInt(BigInt::Wide(a.wide() / b.wide()));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) return BigInt(a.small_ % b.small_);
  return BigInt(BigInt::Wide(a.wide() % b.wide()));
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace qnf

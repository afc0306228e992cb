#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qnf {

// Arbitrary-precision integer with an inline int64 fast path. Values that fit
// in int64 never allocate; anything wider spills into a heap cpp_int. The
// representation is normalized: wide_ is non-null iff the value does not fit.
class BigInt {
 public:
  using Wide = boost::multiprecision::cpp_int;

  BigInt() noexcept = default;
  BigInt(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) noexcept : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit BigInt(Wide w) { assign(std::move(w)); }

  BigInt(const BigInt& o) : small_(o.small_), wide_(o.wide_ ? std::make_unique<Wide>(*o.wide_) : nullptr) {}
  BigInt(BigInt&&) noexcept = default;
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      small_ = o.small_;
      wide_ = o.wide_ ? std::make_unique<Wide>(*o.wide_) : nullptr;
    }
    return *this;
  }
  BigInt& operator=(BigInt&&) noexcept = default;
  ~BigInt() = default;

  // Decimal, optional leading '-'. Throws std::invalid_argument.
  static BigInt from_string(std::string_view text);
  std::string to_string() const;

  bool is_small() const noexcept { return !wide_; }
  bool is_zero() const noexcept { return !wide_ && small_ == 0; }
  int sign() const noexcept {
    if (wide_) return wide_->sign();
    return (small_ > 0) - (small_ < 0);
  }
  Wide wide() const { return wide_ ? *wide_ : Wide(small_); }

  BigInt& operator+=(const BigInt& o) {
    if (!wide_ && !o.wide_) {
      std::int64_t r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(wide() + o.wide());
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    if (!wide_ && !o.wide_) {
      std::int64_t r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(wide() - o.wide());
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    if (!wide_ && !o.wide_) {
      std::int64_t r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(wide() * o.wide());
    return *this;
  }
  // *this += a * b
  void add_product(const BigInt& a, const BigInt& b) {
    if (!wide_ && !a.wide_ && !b.wide_) {
      std::int64_t prod;
      std::int64_t r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &prod) && !__builtin_add_overflow(small_, prod, &r)) {
        small_ = r;
        return;
      }
    }
    assign(wide() + a.wide() * b.wide());
  }

  BigInt operator-() const {
    if (!wide_ && small_ != INT64_MIN) return BigInt(-small_);
    return BigInt(Wide(-wide()));
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  // Truncating division and remainder, as for built-in integers.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // Non-negative residue modulo m > 0.
  std::int64_t mod(std::int64_t m) const {
    if (!wide_) {
      std::int64_t r = small_ % m;
      return r < 0 ? r + m : r;
    }
    Wide r = *wide_ % m;
    if (r < 0) r += m;
    return r.convert_to<std::int64_t>();
  }
  // Exact division by d != 0; the caller guarantees divisibility.
  BigInt divexact(std::int64_t d) const {
    if (!wide_ && !(small_ == INT64_MIN && d == -1)) return BigInt(small_ / d);
    return BigInt(Wide(wide() / d));
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    if (!a.wide_ && !b.wide_) return a.small_ == b.small_;
    if (a.wide_ && b.wide_) return *a.wide_ == *b.wide_;
    return false;  // normalized: a wide value never fits int64
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (!a.wide_ && !b.wide_) return a.small_ <=> b.small_;
    const int c = a.wide().compare(b.wide());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void assign(Wide w) {
    if (w >= INT64_MIN && w <= INT64_MAX) {
      small_ = w.convert_to<std::int64_t>();
      wide_.reset();
    } else {
      small_ = 0;
      wide_ = std::make_unique<Wide>(std::move(w));
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<Wide> wide_;
};

BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace qnf

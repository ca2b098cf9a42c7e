#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bihom {

/// Exact rational number in lowest terms with a positive denominator.
///
/// The wrapped GMP value is deliberately not exposed: there is no conversion to
/// or from floating point anywhere in the library.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  Scalar(double) = delete;
  Scalar(float) = delete;

  /// Parses "p", "-p", "p/q" (q != 0). Throws Error(ParseError) otherwise.
  static Scalar parse(std::string_view text);
  /// Renders "p/q", or "p" when q = 1.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without a temporary on the caller side.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { Scalar r; r.q_ = -q_; return r; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (throws on zero base).
  Scalar pow(long exponent) const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^e for a parity exponent.
inline int koszul(unsigned e) { return (e & 1U) ? -1 : 1; }

}  // namespace bihom

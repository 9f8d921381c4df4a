#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hlya {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Values whose numerator and denominator both fit in int64 are stored
/// inline; anything larger lives in a GMP mpq. The representation is unique
/// for a given value, so equality is representation equality.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : num_(n) {}           // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "p/q", "p" or "-p/q". Throws hlya::Error(ErrorCode::Parse) on bad input.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;
  /// "p/q", with "/q" omitted when q = 1.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws hlya::Error(ErrorCode::DivisionByZero) on a zero divisor.
  Rational& operator/=(const Rational& rhs);

  /// this += a * b, the inner loop of every elimination and contraction.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void assign_canonical(__int128 num, __int128 den);
  void assign_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hlya

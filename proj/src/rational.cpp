#include "hlya/rational.hpp"

#include <limits>
#include <ostream>

#include "hlya/error.hpp"

namespace hlya {

namespace {

constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v > kMin && v <= kMax; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? static_cast<std::uint64_t>(-(b + 1)) + 1 : static_cast<std::uint64_t>(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  assign_canonical(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
      big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
      big_.reset();
    }
  }
  return *this;
}

void Rational::assign_canonical(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  unsigned __int128 un = num < 0 ? static_cast<unsigned __int128>(-num) : static_cast<unsigned __int128>(num);
  unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign_mpq(std::move(q));
}

void Rational::assign_mpq(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  // Demote whenever the value fits, keeping the representation unique.
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::to_mpq() const {
  if (big_) {
    return *big_;
  }
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    const auto b = v.find_first_not_of(" \t\n\r");
    const auto e = v.find_last_not_of(" \t\n\r");
    v = (b == std::string::npos) ? std::string() : v.substr(b, e - b + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i) {
      if (v[i] < '0' || v[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw Error(ErrorCode::Parse, "not a rational literal: \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_string() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }

std::string Rational::denominator_string() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_mpq(-*big_);
  } else {
    r.assign_canonical(-static_cast<__int128>(num_), den_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      const __int128 s = static_cast<__int128>(num_) + rhs.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    if (den_ == rhs.den_) {
      assign_canonical(static_cast<__int128>(num_) + rhs.num_, den_);
      return *this;
    }
    const std::int64_t g = gcd64(den_, rhs.den_);
    const __int128 n = static_cast<__int128>(num_) * (rhs.den_ / g) + static_cast<__int128>(rhs.num_) * (den_ / g);
    const __int128 d = static_cast<__int128>(den_ / g) * rhs.den_;
    assign_canonical(n, d);
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = gcd64(num_, rhs.den_);
    const std::int64_t g2 = gcd64(rhs.num_, den_);
    const __int128 n = static_cast<__int128>(num_ / g1) * (rhs.num_ / g2);
    const __int128 d = static_cast<__int128>(den_ / g2) * (rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_canonical(n, d);
    return *this;
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  }
  if (!big_ && !rhs.big_) {
    const std::int64_t g1 = gcd64(num_, rhs.num_);
    const std::int64_t g2 = gcd64(den_, rhs.den_);
    const __int128 n = static_cast<__int128>(num_ / g1) * (rhs.den_ / g2);
    const __int128 d = static_cast<__int128>(den_ / g2) * (rhs.num_ / g1);
    assign_canonical(n, d);
    return *this;
  }
  assign_mpq(to_mpq() / rhs.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    const __int128 s = static_cast<__int128>(a.num_) * b.num_ + num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return;
    }
  }
  Rational p = a;
  p *= b;
  *this += p;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hlya

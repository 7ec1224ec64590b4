#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibred {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}                 // NOLINT(implicit)
  Rational(long v) : value_(v) {}                // NOLINT(implicit)
  Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(unsigned v) : value_(v) {}            // NOLINT(implicit)
  Rational(unsigned long v) : value_(v) {}       // NOLINT(implicit)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, 1) / mpq_class(den, 1);
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }
  explicit Rational(const mpz_class& v) : value_(v) {}

  /// Parses "p", "-p", "p/q"; rejects q == 0 and anything else.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      const auto b = t.find_first_not_of(" \t");
      const auto e = t.find_last_not_of(" \t");
      t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    auto is_int = [](std::string_view t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t k = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) k = 1;
      if (k == t.size()) return false;
      for (; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') return false;
      return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!is_int(num, true) || !is_int(den, false))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
  }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// Only meaningful when is_integer() and the value fits.
  [[nodiscard]] long to_long() const { return value_.get_num().get_si(); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }
  [[nodiscard]] mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Six significant digits; advisory only.
  [[nodiscard]] std::string decimal_hint() const {
    std::ostringstream os;
    os << std::setprecision(6) << to_double();
    return os.str();
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace fibred

template <>
struct std::hash<fibred::Rational> {
  std::size_t operator()(const fibred::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};

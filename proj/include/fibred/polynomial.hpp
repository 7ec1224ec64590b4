#pragma once

// Sparse multivariate polynomials over Q in the three variables that appear in
// coefficient families (g, q, i), and quotients of them.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fibred/error.hpp"
#include "fibred/rational.hpp"

namespace fibred {

enum class Var : int { g = 0, q = 1, i = 2 };
inline constexpr int kVarCount = 3;
inline constexpr std::array<const char*, kVarCount> kVarNames{"g", "q", "i"};

using Monomial = std::array<int, kVarCount>;

/// Values for (g, q, i); unset entries must not be needed by the expression.
struct Point {
  std::array<std::optional<Rational>, kVarCount> v;

  Point() = default;
  explicit Point(Rational g) { v[0] = std::move(g); }
  Point(Rational g, Rational q) {
    v[0] = std::move(g);
    v[1] = std::move(q);
  }
  Point(Rational g, Rational q, Rational i) {
    v[0] = std::move(g);
    v[1] = std::move(q);
    v[2] = std::move(i);
  }
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(implicit)

  static Polynomial variable(Var x) {
    Polynomial p;
    Monomial m{};
    m[static_cast<int>(x)] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  /// Builds sum_k coeffs[k] * x^k.
  static Polynomial univariate(Var x, const std::vector<Rational>& coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      Monomial m{};
      m[static_cast<int>(x)] = static_cast<int>(k);
      p.terms_[m] = coeffs[k];
    }
    return p;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  [[nodiscard]] Rational constant_term() const {
    const auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }

  [[nodiscard]] int degree(Var x) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(x)]);
    return d;
  }
  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
  }
  [[nodiscard]] bool uses(Var x) const { return degree(x) > 0; }

  /// The single variable this polynomial depends on, if there is exactly one.
  [[nodiscard]] std::optional<Var> sole_variable() const {
    std::optional<Var> found;
    for (int k = 0; k < kVarCount; ++k) {
      if (!uses(static_cast<Var>(k))) continue;
      if (found) return std::nullopt;
      found = static_cast<Var>(k);
    }
    return found;
  }

  /// Coefficients in x, lowest degree first. Throws if another variable occurs.
  [[nodiscard]] std::vector<Rational> coefficients(Var x) const {
    std::vector<Rational> out(static_cast<std::size_t>(degree(x)) + 1, Rational(0));
    for (const auto& [m, c] : terms_) {
      for (int k = 0; k < kVarCount; ++k)
        if (k != static_cast<int>(x) && m[k] != 0)
          throw Error(ErrorKind::Unsupported, "polynomial is not univariate in " +
                                                  std::string(kVarNames[static_cast<int>(x)]));
      out[m[static_cast<int>(x)]] = c;
    }
    return out;
  }

  /// Leading coefficient in the monomial order (deterministic, used to
  /// normalise quotients).
  [[nodiscard]] Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
  }

  [[nodiscard]] Rational evaluate(const Point& at) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (int k = 0; k < kVarCount; ++k) {
        if (m[k] == 0) continue;
        if (!at.v[k])
          throw Error(ErrorKind::Unsupported,
                      std::string("no value for variable ") + kVarNames[k]);
        for (int e = 0; e < m[k]; ++e) term *= *at.v[k];
      }
      total += term;
    }
    return total;
  }

  /// Replaces x by a number.
  [[nodiscard]] Polynomial substitute(Var x, const Rational& value) const {
    Polynomial out;
    const int k = static_cast<int>(x);
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      for (int e = 0; e < m[k]; ++e) coeff *= value;
      Monomial reduced = m;
      reduced[k] = 0;
      out.add_term(reduced, coeff);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] Polynomial scaled(const Rational& s) const {
    Polynomial out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool is_unit_monomial = m == Monomial{};
      Rational mag = abs(c);
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      const bool show_coeff = is_unit_monomial || mag != Rational(1);
      if (show_coeff) os << mag.str();
      bool need_star = show_coeff;
      for (int k = 0; k < kVarCount; ++k) {
        if (m[k] == 0) continue;
        if (need_star) os << "*";
        os << kVarNames[k];
        if (m[k] > 1) os << "^" << m[k];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

namespace detail {

/// Euclidean division of univariate coefficient vectors over Q.
inline std::pair<std::vector<Rational>, std::vector<Rational>> divide(std::vector<Rational> a,
                                                                      const std::vector<Rational>& b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  std::vector<Rational> bt = b;
  trim(bt);
  if (bt.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < bt.size()) return {{}, a};
  std::vector<Rational> quot(a.size() - bt.size() + 1, Rational(0));
  while (a.size() >= bt.size() && !a.empty()) {
    const std::size_t shift = a.size() - bt.size();
    const Rational f = a.back() / bt.back();
    quot[shift] = f;
    for (std::size_t k = 0; k < bt.size(); ++k) a[shift + k] -= f * bt[k];
    trim(a);
  }
  return {quot, a};
}

inline std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

/// num/den with den != 0. Univariate quotients are kept in lowest terms;
/// multivariate ones only have their denominator made monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(int c) : RationalFunction(Rational(c)) {}           // NOLINT(implicit)
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable(Var x) { return RationalFunction(Polynomial::variable(x)); }

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] Rational constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::Unsupported, "rational function is not constant");
    return num_.constant_term() / den_.constant_term();
  }
  [[nodiscard]] bool uses(Var x) const { return num_.uses(x) || den_.uses(x); }

  [[nodiscard]] Rational evaluate(const Point& at) const {
    const Rational d = den_.evaluate(at);
    if (d.is_zero()) throw Error(ErrorKind::DomainViolation, "denominator vanishes at evaluation point");
    return num_.evaluate(at) / d;
  }

  [[nodiscard]] RationalFunction substitute(Var x, const Rational& value) const {
    Polynomial d = den_.substitute(x, value);
    if (d.is_zero()) throw Error(ErrorKind::DomainViolation, "denominator vanishes after substitution");
    return {num_.substitute(x, value), d};
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  [[nodiscard]] std::string str() const {
    if (den_.is_constant() && den_.constant_term() == Rational(1)) return num_.str();
    auto wrap = [](const Polynomial& p) {
      const std::string s = p.str();
      return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    // Reduce by the gcd when both sides live in the same single variable.
    std::optional<Var> x = num_.sole_variable();
    std::optional<Var> y = den_.sole_variable();
    if (!x) x = y;
    if (!y) y = x;
    const bool univariate = x && y && *x == *y && (num_.is_constant() || num_.sole_variable()) &&
                            (den_.is_constant() || den_.sole_variable());
    if (univariate && !den_.is_constant()) {
      const auto cn = num_.coefficients(*x);
      const auto cd = den_.coefficients(*x);
      const auto gg = detail::gcd(cn, cd);
      if (gg.size() > 1) {
        num_ = Polynomial::univariate(*x, detail::divide(cn, gg).first);
        den_ = Polynomial::univariate(*x, detail::divide(cd, gg).first);
      }
    }
    const Rational lead = den_.leading_coefficient();
    if (lead != Rational(1)) {
      const Rational inv = Rational(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction rf_g() { return RationalFunction::variable(Var::g); }
inline RationalFunction rf_q() { return RationalFunction::variable(Var::q); }
inline RationalFunction rf_i() { return RationalFunction::variable(Var::i); }

}  // namespace fibred

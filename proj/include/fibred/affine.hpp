#pragma once

// Affine inequalities over named invariant symbols, and their evaluated slack.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibred/error.hpp"
#include "fibred/polynomial.hpp"
#include "fibred/rational.hpp"

namespace fibred {

enum class Relation { Le, Lt, Eq };

constexpr std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
  }
  return "?";
}

/// `lhs rel rhs`, each side an affine combination of symbols.
template <class S>
struct AffineForm {
  std::string id;
  std::map<std::string, S> lhs;
  std::map<std::string, S> rhs;
  S lhs_constant{};
  S rhs_constant{};
  Relation rel = Relation::Le;
  std::vector<std::string> hypotheses;

  AffineForm& left(const std::string& sym, const S& c) {
    accumulate(lhs, sym, c);
    return *this;
  }
  AffineForm& right(const std::string& sym, const S& c) {
    accumulate(rhs, sym, c);
    return *this;
  }

  /// Coefficients of lhs - rhs with zero entries dropped.
  [[nodiscard]] std::map<std::string, S> difference() const {
    std::map<std::string, S> out = lhs;
    for (const auto& [sym, c] : rhs) accumulate(out, sym, -c);
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }
  [[nodiscard]] S difference_constant() const { return lhs_constant - rhs_constant; }

  static void accumulate(std::map<std::string, S>& side, const std::string& sym, const S& c) {
    auto [it, inserted] = side.try_emplace(sym, c);
    if (!inserted) it->second = it->second + c;
  }
};

using NumericForm = AffineForm<Rational>;
using SymbolicForm = AffineForm<RationalFunction>;

/// Normal form `sum coeffs*x + constant  rel  0`.
template <class S>
AffineForm<S> normal_form(const AffineForm<S>& f) {
  AffineForm<S> out;
  out.id = f.id;
  out.rel = f.rel;
  out.hypotheses = f.hypotheses;
  out.lhs = f.difference();
  out.lhs_constant = f.difference_constant();
  return out;
}

inline SymbolicForm lift(const NumericForm& f) {
  SymbolicForm out;
  out.id = f.id;
  out.rel = f.rel;
  out.hypotheses = f.hypotheses;
  for (const auto& [s, c] : f.lhs) out.lhs.emplace(s, RationalFunction(c));
  for (const auto& [s, c] : f.rhs) out.rhs.emplace(s, RationalFunction(c));
  out.lhs_constant = RationalFunction(f.lhs_constant);
  out.rhs_constant = RationalFunction(f.rhs_constant);
  return out;
}

inline NumericForm instantiate(const SymbolicForm& f, const Point& at) {
  NumericForm out;
  out.id = f.id;
  out.rel = f.rel;
  out.hypotheses = f.hypotheses;
  for (const auto& [s, c] : f.lhs) out.lhs.emplace(s, c.evaluate(at));
  for (const auto& [s, c] : f.rhs) out.rhs.emplace(s, c.evaluate(at));
  out.lhs_constant = f.lhs_constant.evaluate(at);
  out.rhs_constant = f.rhs_constant.evaluate(at);
  return out;
}

using SymbolValues = std::map<std::string, Rational>;

struct SlackReport {
  std::string id;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs
  Relation rel = Relation::Le;
  bool holds = false;
  bool equality = false;
  bool hypotheses_met = true;
  bool applicable = true;
  std::vector<std::string> hypotheses;
  std::string note;

  [[nodiscard]] std::string verdict() const {
    if (!applicable) return "not applicable";
    if (!hypotheses_met) return "hypotheses not met";
    if (holds) return equality && rel != Relation::Eq ? "holds at equality" : "holds";
    if (rel == Relation::Lt && equality) return "violated (boundary case)";
    return "violated";
  }
};

/// holds <=> slack >= 0 for <=, slack > 0 for <, slack == 0 for =.
inline bool relation_holds(Relation rel, const Rational& slack) {
  switch (rel) {
    case Relation::Le: return slack.sign() >= 0;
    case Relation::Lt: return slack.sign() > 0;
    case Relation::Eq: return slack.is_zero();
  }
  return false;
}

inline SlackReport make_report(std::string id, Rational lhs, Rational rhs, Relation rel) {
  SlackReport r;
  r.id = std::move(id);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.slack = r.rhs - r.lhs;
  r.rel = rel;
  r.holds = relation_holds(rel, r.slack);
  r.equality = r.slack.is_zero();
  return r;
}

inline SlackReport not_applicable(std::string id, std::string why) {
  SlackReport r;
  r.id = std::move(id);
  r.applicable = false;
  r.holds = false;
  r.note = std::move(why);
  return r;
}

inline Rational side_value(const std::map<std::string, Rational>& side, const Rational& constant,
                           const SymbolValues& values) {
  Rational total = constant;
  for (const auto& [sym, c] : side) {
    if (c.is_zero()) continue;
    const auto it = values.find(sym);
    if (it == values.end()) throw Error(ErrorKind::InvalidFamily, "no value for symbol '" + sym + "'");
    total += c * it->second;
  }
  return total;
}

inline SlackReport evaluate(const NumericForm& f, const SymbolValues& values) {
  auto r = make_report(f.id, side_value(f.lhs, f.lhs_constant, values),
                       side_value(f.rhs, f.rhs_constant, values), f.rel);
  r.hypotheses = f.hypotheses;
  return r;
}

}  // namespace fibred

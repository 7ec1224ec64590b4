#pragma once

// Randomised invariants shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fibred/fibred.hpp"

namespace fibred::props {

struct Outcome {
  bool ok = true;
  long cases = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

inline Rational random_rational(std::mt19937_64& rng, long max_num = 40, long max_den = 12) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// 12 ch_degree = ch_omega_sq + delta_f_hyper on random boundary data.
inline Outcome noether_identity(std::uint64_t seed, long samples = 1000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> genus(2, 30);
  Outcome out;
  for (long n = 0; n < samples; ++n) {
    const int g = genus(rng);
    RationalVector xi = zero_xi(g);
    RationalVector delta = zero_delta(g);
    for (auto& x : xi) x = random_rational(rng);
    for (std::size_t i = 1; i < delta.size(); ++i) delta[i] = random_rational(rng);
    delta[0] = xi[0] + Rational(2) * sum(xi, 1);
    const Rational lhs = Rational(12) * ch_degree(g, xi, delta);
    const Rational rhs = ch_omega_sq(g, xi, delta) + delta_f_hyper(xi, delta);
    ++out.cases;
    if (lhs != rhs) out.fail("g = " + std::to_string(g) + ": 12 deg = " + lhs.str() + ", omega^2 + delta_f = " + rhs.str());
  }
  return out;
}

/// Random tree on n vertices given by a parent array.
inline FiberRecord random_tree_fiber(std::mt19937_64& rng, int max_components, int max_mult) {
  std::uniform_int_distribution<int> count(1, max_components);
  std::uniform_int_distribution<int> genus(1, 3);
  std::uniform_int_distribution<int> mult(1, max_mult);
  FiberRecord f;
  const int n = count(rng);
  for (int v = 0; v < n; ++v) f.component_genera.push_back(genus(rng));
  if (n == 1 && f.component_genera[0] < 2) f.component_genera[0] = 2;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    f.tree_edges.push_back({parent(rng), v, mult(rng)});
  }
  return f;
}

inline int genus_of(const FiberRecord& f) {
  int g = 0;
  for (int x : f.component_genera) g += x;
  return g;
}

/// delta_i by removing each edge in turn and summing genera on one side.
inline RationalVector edge_cut_oracle(const FiberRecord& f, int g) {
  const int n = static_cast<int>(f.component_genera.size());
  RationalVector delta = zero_delta(g);
  for (std::size_t cut = 0; cut < f.tree_edges.size(); ++cut) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{f.tree_edges[cut].a};
    seen[f.tree_edges[cut].a] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < f.tree_edges.size(); ++k) {
        if (k == cut) continue;
        const auto& e = f.tree_edges[k];
        const int w = e.a == v ? e.b : e.b == v ? e.a : -1;
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    int side = 0;
    for (int v = 0; v < n; ++v)
      if (seen[v]) side += f.component_genera[v];
    delta[std::min(side, g - side)] += f.tree_edges[cut].multiplicity;
  }
  return delta;
}

inline Outcome classify_vs_oracle(std::uint64_t seed, long samples = 500) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (long n = 0; n < samples; ++n) {
    const FiberRecord f = random_tree_fiber(rng, 8, 3);
    const int g = genus_of(f);
    const auto inv = classify_fiber(f, g);
    const auto expect = edge_cut_oracle(f, g);
    ++out.cases;
    if (inv.delta != expect) out.fail("tree with " + std::to_string(f.component_genera.size()) + " components, g = " + std::to_string(g));
    if (!validate_compact_fiber(inv, g, false).ok()) out.fail("compact fiber failed validation at g = " + std::to_string(g));
  }
  return out;
}

inline RationalVector scaled(const RationalVector& v, long d) {
  RationalVector out = v;
  for (auto& x : out) x *= Rational(d);
  return out;
}

/// Boundary aggregates and the hyperelliptic invariants scale by d when every
/// node multiplicity does.
inline Outcome multiplicity_homogeneity(std::uint64_t seed, long samples = 200) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> genus(2, 12);
  std::uniform_int_distribution<int> fibers(1, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  Outcome out;
  for (long n = 0; n < samples; ++n) {
    const int g = genus(rng);
    std::vector<FiberRecord> base;
    const int count = fibers(rng);
    for (int k = 0; k < count; ++k) {
      if (coin(rng)) {
        FiberRecord f = random_tree_fiber(rng, 8, 2);
        if (genus_of(f) != g) {
          // Rebuild as a single chain whose genera add to g.
          f = FiberRecord{};
          int left = g;
          while (left > 0) {
            const int take = std::min(left, 1 + coin(rng));
            f.component_genera.push_back(take);
            left -= take;
          }
          for (int v = 1; v < static_cast<int>(f.component_genera.size()); ++v) f.tree_edges.push_back({v - 1, v, 1 + coin(rng)});
        }
        base.push_back(f);
      } else {
        FiberRecord f;
        f.compact_jacobian = false;
        RationalVector d = zero_delta(g);
        for (auto& x : d) x = Rational(std::uniform_int_distribution<int>(0, 4)(rng));
        d[0] += 1;
        f.delta = d;
        base.push_back(f);
      }
    }
    const auto agg = aggregate_boundary(base, g);
    RationalVector xi = zero_xi(g);
    for (auto& x : xi) x = random_rational(rng, 10, 3);
    RationalVector hyper_delta = agg.delta;
    hyper_delta[0] = xi[0] + Rational(2) * sum(xi, 1);

    for (long d : {2L, 3L, 5L}) {
      std::vector<FiberRecord> up = base;
      for (auto& f : up) {
        for (auto& e : f.tree_edges) e.multiplicity *= static_cast<int>(d);
        if (f.delta) *f.delta = scaled(*f.delta, d);
      }
      const auto big = aggregate_boundary(up, g);
      ++out.cases;
      const std::string where = "g = " + std::to_string(g) + ", d = " + std::to_string(d);
      if (big.delta != scaled(agg.delta, d) || big.delta_ct != scaled(agg.delta_ct, d)) out.fail(where + ": aggregate delta");
      if (big.n_nc != agg.n_nc || big.n_ct != agg.n_ct) out.fail(where + ": fiber counts changed");
      for (std::size_t k = 0; k < up.size(); ++k) {
        const auto a = classify_fiber(base[k], g);
        const auto b = classify_fiber(up[k], g);
        if (b.delta_total != a.delta_total * Rational(d)) out.fail(where + ": per-fiber delta total");
      }
      const auto sx = scaled(xi, d);
      const auto sd = scaled(hyper_delta, d);
      if (ch_degree(g, sx, sd) != Rational(d) * ch_degree(g, xi, hyper_delta)) out.fail(where + ": ch_degree");
      if (ch_omega_sq(g, sx, sd) != Rational(d) * ch_omega_sq(g, xi, hyper_delta)) out.fail(where + ": ch_omega_sq");
      if (delta_f_hyper(sx, sd) != Rational(d) * delta_f_hyper(xi, hyper_delta)) out.fail(where + ": delta_f");
    }
  }
  return out;
}

/// sharp1 with q_f = 0 is the same form as moriwaki.
inline Outcome sharp1_reduces_to_moriwaki() {
  Outcome out;
  const auto a = normal_form(sharp1_nc_form(rf_g(), RationalFunction(Rational(0))));
  const auto b = normal_form(moriwaki_form(rf_g()));
  out.cases = static_cast<long>(b.lhs.size());
  if (a.lhs.size() != b.lhs.size()) out.fail("different symbol sets");
  for (const auto& [sym, c] : b.lhs) {
    const auto it = a.lhs.find(sym);
    if (it == a.lhs.end() || !(it->second == c))
      out.fail(sym + ": sharp1 gives " + (it == a.lhs.end() ? std::string("nothing") : it->second.str()) + ", moriwaki " + c.str());
  }
  if (!(a.lhs_constant == b.lhs_constant)) out.fail("constants differ");
  if (a.rel != b.rel) out.fail("relations differ");
  return out;
}

inline const std::vector<std::string>& q_families() {
  static const std::vector<std::string> ids{"F6", "F3-alpha1", "F3-alphah", "F4-beta1", "F4-betai", "F5-xi", "F5-eta"};
  return ids;
}

/// minimize_over_q against enumeration of every admissible q.
inline Outcome minimize_vs_enumeration(long g_lo = 8, long g_hi = 50) {
  Outcome out;
  for (const auto& id : q_families()) {
    const auto fam = coefficient_family(id);
    for (long g = std::max(g_lo, fam.g_min); g <= g_hi; ++g) {
      std::vector<std::optional<long>> is{std::nullopt};
      if (fam.uses_i()) {
        is.clear();
        if (const auto ir = fam.i_range(g))
          for (long i = ir->first; i <= ir->second; ++i) is.emplace_back(i);
      }
      for (const auto& i : is) {
        const auto qr = fam.q_range(g, i.value_or(0));
        const std::string where = id + " at g = " + std::to_string(g) + (i ? ", i = " + std::to_string(*i) : "");
        ++out.cases;
        if (!qr) {
          try {
            (void)minimize_over_q(fam, g, i);
            out.fail(where + ": expected an empty range");
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::EmptyRange) out.fail(where + ": " + e.what());
          }
          continue;
        }
        std::optional<Rational> best;
        for (long q = qr->first; q <= qr->second; ++q) {
          const Rational v = fam.expr.evaluate(Point(Rational(g), Rational(q), Rational(i.value_or(0))));
          if (!best || v < *best) best = v;
        }
        const auto m = minimize_over_q(fam, g, i);
        const Rational at_q = fam.expr.evaluate(Point(Rational(g), Rational(m.q), Rational(i.value_or(0))));
        if (m.value != *best || at_q != *best)
          out.fail(where + ": minimize gives " + m.value.str() + " at q = " + std::to_string(m.q) + ", enumeration " + best->str());
      }
    }
  }
  return out;
}

}  // namespace fibred::props

#pragma once

// Data model of a one-dimensional semi-stable family of curves and the
// formula stack tying absolute, relative and boundary invariants together.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibred/error.hpp"
#include "fibred/rational.hpp"

namespace fibred {

using RationalVector = std::vector<Rational>;

/// Highest node type index for genus g, i.e. floor(g/2).
constexpr int max_delta_index(int g) { return g / 2; }
/// Highest xi index for genus g, i.e. floor((g-1)/2).
constexpr int max_xi_index(int g) { return (g - 1) / 2; }

inline RationalVector zero_delta(int g) { return RationalVector(max_delta_index(g) + 1, Rational(0)); }
inline RationalVector zero_xi(int g) { return RationalVector(max_xi_index(g) + 1, Rational(0)); }

inline Rational sum(const RationalVector& v, std::size_t from = 0) {
  Rational s;
  for (std::size_t k = from; k < v.size(); ++k) s += v[k];
  return s;
}

struct AbsoluteInvariants {
  Rational omega_S_sq;
  Rational chi_top;
  Rational chi_O;
};

struct RelativeInvariants {
  Rational omega_rel_sq;
  Rational delta_f;
  Rational deg_pushforward;

  friend bool operator==(const RelativeInvariants&, const RelativeInvariants&) = default;
};

/// 12 deg - omega^2 - delta_f; zero exactly when Noether's formula holds.
inline Rational noether_residual(const RelativeInvariants& rel) {
  return Rational(12) * rel.deg_pushforward - rel.omega_rel_sq - rel.delta_f;
}

/// Rejects relative invariants no semi-stable family can have.
inline void validate_relative(const RelativeInvariants& rel) {
  if (rel.omega_rel_sq.sign() < 0 || rel.delta_f.sign() < 0 || rel.deg_pushforward.sign() < 0)
    throw Error(ErrorKind::NegativeInvariant,
                "relative invariants must be nonnegative (omega^2=" + rel.omega_rel_sq.str() +
                    ", delta_f=" + rel.delta_f.str() + ", deg=" + rel.deg_pushforward.str() + ")");
  if (!noether_residual(rel).is_zero())
    throw Error(ErrorKind::NoetherViolation,
                "12*deg - omega^2 - delta_f = " + noether_residual(rel).str());
  if (rel.omega_rel_sq.is_zero() != rel.deg_pushforward.is_zero())
    throw Error(ErrorKind::NoetherViolation,
                "omega^2 and deg must vanish together (isotriviality criterion)");
}

/// Relative invariants of a family over a base of genus b from the absolute
/// invariants of the total space.
inline RelativeInvariants relative_invariants(const AbsoluteInvariants& abs, int g, int b) {
  if (g < 2) throw Error(ErrorKind::InvalidFamily, "fiber genus must be at least 2");
  if (b < 0) throw Error(ErrorKind::InvalidFamily, "base genus must be nonnegative");
  const Rational k = Rational(g - 1) * Rational(b - 1);
  RelativeInvariants rel{abs.omega_S_sq - Rational(8) * k, abs.chi_top - Rational(4) * k,
                         abs.chi_O - k};
  validate_relative(rel);
  return rel;
}

/// deg of the log cotangent sheaf of the base, 2b - 2 + |Delta_nc|.
constexpr long log_degree(int b, int n_nc) { return 2L * b - 2 + n_nc; }

// ---------------------------------------------------------------------------
// Singular fibers

struct TreeEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
};

/// Class of a compact-type fiber used by the refined Miyaoka-Yau bound.
enum class CtClass { Unspecified, LambdaPrime, Balanced, Unbalanced };

inline std::string_view to_string(CtClass c) {
  switch (c) {
    case CtClass::LambdaPrime: return "lambda_prime";
    case CtClass::Balanced: return "ct_b";
    case CtClass::Unbalanced: return "ct_ub";
    case CtClass::Unspecified: break;
  }
  return "unspecified";
}

struct FiberRecord {
  bool compact_jacobian = true;
  std::vector<int> component_genera;
  std::vector<TreeEdge> tree_edges;
  int nonseparating_nodes = 0;
  bool lambda_member = false;
  /// Direct node-type counts for non-compact fibers whose dual graph is not
  /// given.
  std::optional<RationalVector> delta;
  CtClass ct_class = CtClass::Unspecified;
};

struct FiberInvariants {
  RationalVector delta;            // delta_i(F), i = 0..floor(g/2)
  std::map<int, int> l;            // genus -> number of components
  int l_h = 0;                     // components of genus >= 2
  Rational delta_total;            // delta(F)
  int multiplicity_excess = 0;     // sum of (m - 1) over edges
  bool compact_jacobian = true;
  bool lambda_member = false;
  CtClass ct_class = CtClass::Unspecified;

  [[nodiscard]] int l_of(int genus) const {
    const auto it = l.find(genus);
    return it == l.end() ? 0 : it->second;
  }
  [[nodiscard]] int l1() const { return l_of(1); }
  [[nodiscard]] int components() const {
    int n = 0;
    for (const auto& [genus, count] : l) n += count;
    return n;
  }
  [[nodiscard]] Rational delta_h() const { return sum(delta, 2); }
  [[nodiscard]] bool singular() const { return delta_total.sign() > 0; }
};

namespace detail {

struct Graph {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)

  explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices)) {}

  void add(int a, int b, int id) {
    adj[a].emplace_back(b, id);
    if (a != b) adj[b].emplace_back(a, id);
  }

  /// Vertices reachable from start without crossing edge `skip`.
  [[nodiscard]] std::vector<char> reach(int start, int skip) const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, id] : adj[v]) {
        if (id == skip || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return seen;
  }
};

}  // namespace detail

/// Node-type counts and component genera of one fiber.
///
/// Each edge of multiplicity m is one node of the stable model counted m
/// times. A separating node whose removal leaves a side of arithmetic genus s
/// has type min(s, g - s); a non-separating node has type 0.
inline FiberInvariants classify_fiber(const FiberRecord& f, int g) {
  if (g < 2) throw Error(ErrorKind::InvalidFamily, "fiber genus must be at least 2");
  const int n = static_cast<int>(f.component_genera.size());
  FiberInvariants out;
  out.compact_jacobian = f.compact_jacobian;
  out.lambda_member = f.lambda_member;
  out.ct_class = f.ct_class;
  out.delta = zero_delta(g);

  int genus_sum = 0;
  for (int gi : f.component_genera) {
    if (gi < 0) throw Error(ErrorKind::InvalidFamily, "component genus must be nonnegative");
    ++out.l[gi];
    if (gi >= 2) ++out.l_h;
    genus_sum += gi;
  }
  if (f.nonseparating_nodes < 0)
    throw Error(ErrorKind::InvalidFamily, "nonseparating_nodes must be nonnegative");
  for (const auto& e : f.tree_edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw Error(ErrorKind::InvalidFamily, "edge endpoint outside the component list");
    if (e.multiplicity < 1) throw Error(ErrorKind::InvalidFamily, "edge multiplicity must be >= 1");
    out.multiplicity_excess += e.multiplicity - 1;
  }

  if (f.delta) {
    if (f.compact_jacobian)
      throw Error(ErrorKind::InvalidFamily,
                  "compact-type fibers are classified from their dual tree, not a direct delta");
    if (static_cast<int>(f.delta->size()) != max_delta_index(g) + 1)
      throw Error(ErrorKind::IndexOutOfRange, "fiber delta must have floor(g/2)+1 entries");
    for (const auto& d : *f.delta)
      if (d.sign() < 0) throw Error(ErrorKind::NegativeInvariant, "fiber delta entries must be >= 0");
    out.delta = *f.delta;
    if (out.delta[0].sign() <= 0)
      throw Error(ErrorKind::InvalidFamily, "a non-compact fiber needs a non-separating node");
    out.delta_total = sum(out.delta);
    return out;
  }

  if (n == 0) throw Error(ErrorKind::InvalidFamily, "fiber has no components");
  detail::Graph graph(n);
  for (std::size_t id = 0; id < f.tree_edges.size(); ++id)
    graph.add(f.tree_edges[id].a, f.tree_edges[id].b, static_cast<int>(id));
  const auto all = graph.reach(0, -1);
  if (std::count(all.begin(), all.end(), 1) != n)
    throw Error(f.compact_jacobian ? ErrorKind::NotATree : ErrorKind::InvalidFamily,
                "dual graph is disconnected");

  const int edges = static_cast<int>(f.tree_edges.size());
  if (f.compact_jacobian) {
    if (f.nonseparating_nodes != 0)
      throw Error(ErrorKind::NotATree, "compact-type fibers have no non-separating nodes");
    if (edges != n - 1)
      throw Error(ErrorKind::NotATree, "dual graph of a compact-type fiber must be a tree");
    if (genus_sum != g)
      throw Error(ErrorKind::GenusMismatch, "component genera sum to " + std::to_string(genus_sum) +
                                                ", expected " + std::to_string(g));
  } else if (genus_sum + (edges - n + 1) + f.nonseparating_nodes != g) {
    throw Error(ErrorKind::GenusMismatch, "arithmetic genus of the fiber differs from g");
  }

  bool has_bridge = false;
  for (int id = 0; id < edges; ++id) {
    const auto& e = f.tree_edges[id];
    const auto side = graph.reach(e.a, id);
    if (side[e.b]) {
      out.delta[0] += e.multiplicity;
      continue;
    }
    has_bridge = true;
    // Arithmetic genus of the side containing e.a.
    int side_genus = 0;
    int side_vertices = 0;
    int side_edges = 0;
    for (int v = 0; v < n; ++v)
      if (side[v]) {
        side_genus += f.component_genera[v];
        ++side_vertices;
      }
    for (int k = 0; k < edges; ++k)
      if (k != id && side[f.tree_edges[k].a]) ++side_edges;
    side_genus += side_edges - side_vertices + 1;
    const int type = std::min(side_genus, g - side_genus);
    if (type <= 0)
      throw Error(ErrorKind::InvalidFamily,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") cuts off a rational tail; the fiber is not semi-stable");
    out.delta[type] += e.multiplicity;
  }
  if (!f.compact_jacobian) {
    if (has_bridge && f.nonseparating_nodes > 0)
      throw Error(ErrorKind::AmbiguousFiber,
                  "nonseparating_nodes cannot be placed on a graph with separating nodes; "
                  "draw them as self-loops");
    out.delta[0] += f.nonseparating_nodes;
    if (out.delta[0].sign() == 0)
      throw Error(ErrorKind::InvalidFamily, "a non-compact fiber needs a non-separating node");
  }
  out.delta_total = sum(out.delta);
  return out;
}

struct ValidationReport {
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Numerical constraints on a compact-type fiber. With `hyperelliptic_stable`
/// set, the stable model must have no rational component.
inline ValidationReport validate_compact_fiber(const FiberInvariants& inv, int g,
                                               bool hyperelliptic_stable) {
  ValidationReport report;
  long weighted = 0;
  for (const auto& [genus, count] : inv.l) weighted += static_cast<long>(genus) * count;
  if (weighted != g)
    report.violations.push_back("sum of i*l_i is " + std::to_string(weighted) + ", expected g = " +
                                std::to_string(g));
  if (!inv.delta.empty() && !inv.delta[0].is_zero())
    report.violations.push_back("compact-type fiber has delta_0 = " + inv.delta[0].str());
  const Rational nodes = sum(inv.delta);
  const Rational expected = Rational(inv.components() - 1 + inv.multiplicity_excess);
  if (nodes != expected)
    report.violations.push_back("sum of delta_j is " + nodes.str() + ", expected " + expected.str() +
                                " from the dual tree");
  if (Rational(inv.l_h - 1) > inv.delta_h())
    report.violations.push_back("l_h - 1 = " + std::to_string(inv.l_h - 1) + " exceeds delta_h = " +
                                inv.delta_h().str());
  if (hyperelliptic_stable && inv.l_of(0) != 0)
    report.violations.push_back("rational component present in a hyperelliptic compact-type fiber");
  return report;
}

struct BoundaryAggregate {
  RationalVector delta;
  RationalVector delta_ct;
  int n_nc = 0;
  int n_ct = 0;

  [[nodiscard]] Rational delta_h() const { return sum(delta, 2); }
  [[nodiscard]] Rational delta_ct_h() const { return sum(delta_ct, 2); }
};

/// Componentwise sums of per-fiber node types, split by Jacobian type.
/// Smooth records contribute nothing and are not counted.
inline BoundaryAggregate aggregate_boundary(const std::vector<FiberRecord>& fibers, int g) {
  BoundaryAggregate agg{zero_delta(g), zero_delta(g), 0, 0};
  for (const auto& f : fibers) {
    const auto inv = classify_fiber(f, g);
    if (!inv.singular()) continue;
    for (std::size_t i = 0; i < inv.delta.size(); ++i) {
      agg.delta[i] += inv.delta[i];
      if (inv.compact_jacobian) agg.delta_ct[i] += inv.delta[i];
    }
    if (inv.compact_jacobian) {
      ++agg.n_ct;
    } else {
      ++agg.n_nc;
    }
  }
  return agg;
}

// ---------------------------------------------------------------------------
// Families

/// User-asserted hypotheses that are not decidable from numerical data.
struct Assertions {
  bool pushforward_semistable = false;
  bool torelli_representing = false;
  bool non_hyperelliptic_torelli = false;
};

struct FamilyData {
  int g = 2;
  int b = 0;
  bool hyperelliptic = false;
  std::optional<int> q_f;
  int n_nc = 0;
  int n_ct = 0;
  int lambda_count = 0;
  RationalVector delta;
  RationalVector delta_ct;
  RationalVector xi;
  std::optional<int> rank_A;
  std::optional<std::vector<FiberRecord>> per_fiber;
  Assertions assertions;
  /// Degree of the pulled-back hyperelliptic divisor class (genus 3 only).
  std::optional<Rational> h;

  [[nodiscard]] Rational delta_h() const { return sum(delta, 2); }
  [[nodiscard]] Rational delta_ct_h() const { return sum(delta_ct, 2); }
  [[nodiscard]] Rational delta_at(int i) const {
    return i < static_cast<int>(delta.size()) ? delta[i] : Rational(0);
  }
  [[nodiscard]] Rational delta_ct_at(int i) const {
    return i < static_cast<int>(delta_ct.size()) ? delta_ct[i] : Rational(0);
  }
  [[nodiscard]] long log_deg() const { return log_degree(b, n_nc); }
  [[nodiscard]] bool has_singular_fibers() const { return n_nc + n_ct > 0; }
};

/// Zero-filled family of the given signature.
inline FamilyData make_family(int g, int b, bool hyperelliptic) {
  FamilyData fam;
  fam.g = g;
  fam.b = b;
  fam.hyperelliptic = hyperelliptic;
  fam.delta = zero_delta(g);
  fam.delta_ct = zero_delta(g);
  fam.xi = zero_xi(g);
  return fam;
}

/// rank A^{1,0}: the explicit value, else g - q_f for hyperelliptic families.
inline std::optional<int> effective_rank_A(const FamilyData& fam) {
  if (fam.rank_A) return fam.rank_A;
  if (fam.hyperelliptic && fam.q_f) return fam.g - *fam.q_f;
  return std::nullopt;
}

inline int require_irregularity(const FamilyData& fam) {
  if (!fam.q_f) throw Error(ErrorKind::MissingIrregularity, "relative irregularity q_f is required");
  return *fam.q_f;
}

/// Throws on the first violated FamilyData invariant.
inline void validate_family(const FamilyData& fam) {
  const int g = fam.g;
  if (g < 2) throw Error(ErrorKind::InvalidFamily, "fiber genus must be at least 2");
  if (fam.b < 0) throw Error(ErrorKind::InvalidFamily, "base genus must be nonnegative");
  if (fam.n_nc < 0 || fam.n_ct < 0 || fam.lambda_count < 0)
    throw Error(ErrorKind::InvalidFamily, "fiber counts must be nonnegative");
  if (fam.q_f && *fam.q_f < 0) throw Error(ErrorKind::InvalidFamily, "q_f must be nonnegative");
  if (fam.q_f && *fam.q_f > g) throw Error(ErrorKind::InvalidFamily, "q_f cannot exceed g");
  if (static_cast<int>(fam.delta.size()) != max_delta_index(g) + 1 ||
      static_cast<int>(fam.delta_ct.size()) != max_delta_index(g) + 1)
    throw Error(ErrorKind::IndexOutOfRange, "delta vectors must have floor(g/2)+1 entries");
  if (static_cast<int>(fam.xi.size()) != max_xi_index(g) + 1)
    throw Error(ErrorKind::IndexOutOfRange, "xi must have floor((g-1)/2)+1 entries");
  for (std::size_t i = 0; i < fam.delta.size(); ++i) {
    if (fam.delta[i].sign() < 0 || fam.delta_ct[i].sign() < 0)
      throw Error(ErrorKind::NegativeInvariant, "delta entries must be nonnegative");
    if (fam.delta_ct[i] > fam.delta[i])
      throw Error(ErrorKind::InvalidFamily,
                  "delta_ct[" + std::to_string(i) + "] exceeds delta[" + std::to_string(i) + "]");
  }
  if (!fam.delta_ct[0].is_zero())
    throw Error(ErrorKind::InvalidFamily, "compact-Jacobian fibers require delta_0 = 0");
  for (const auto& x : fam.xi)
    if (x.sign() < 0) throw Error(ErrorKind::NegativeInvariant, "xi entries must be nonnegative");
  if (fam.hyperelliptic) {
    const Rational rhs = fam.xi[0] + Rational(2) * sum(fam.xi, 1);
    if (fam.delta[0] != rhs)
      throw Error(ErrorKind::Delta0Mismatch,
                  "delta_0 = " + fam.delta[0].str() + " but xi_0 + 2*sum xi_j = " + rhs.str());
    if (fam.lambda_count != 0)
      throw Error(ErrorKind::LambdaOnHyperelliptic, "hyperelliptic families have no Torelli ramification");
  } else {
    for (const auto& x : fam.xi)
      if (!x.is_zero()) throw Error(ErrorKind::InvalidFamily, "xi is only defined for hyperelliptic families");
  }
  if (fam.rank_A && (*fam.rank_A < 0 || *fam.rank_A > g))
    throw Error(ErrorKind::InvalidFamily, "rank_A must lie in [0, g]");
  if (fam.hyperelliptic && fam.q_f && fam.rank_A && *fam.rank_A != g - *fam.q_f)
    throw Error(ErrorKind::InvalidFamily, "hyperelliptic families have rank_A = g - q_f");
  if (fam.h && g != 3) throw Error(ErrorKind::InvalidFamily, "h is only defined in genus 3");
  if (fam.h && fam.h->sign() < 0) throw Error(ErrorKind::NegativeInvariant, "h must be nonnegative");
  if (fam.per_fiber) {
    const auto agg = aggregate_boundary(*fam.per_fiber, g);
    if (agg.delta != fam.delta || agg.delta_ct != fam.delta_ct)
      throw Error(ErrorKind::InvalidFamily, "delta vectors disagree with the per-fiber records");
    if (agg.n_nc != fam.n_nc || agg.n_ct != fam.n_ct)
      throw Error(ErrorKind::InvalidFamily, "fiber counts disagree with the per-fiber records");
    int lambda_fibers = 0;
    for (const auto& f : *fam.per_fiber) lambda_fibers += f.lambda_member ? 1 : 0;
    if (lambda_fibers > fam.lambda_count)
      throw Error(ErrorKind::InvalidFamily, "more fibers flagged lambda_member than lambda_count");
  }
}

/// Family whose boundary data is aggregated from its fiber records.
inline FamilyData family_from_fibers(int g, int b, bool hyperelliptic,
                                     std::vector<FiberRecord> fibers) {
  FamilyData fam = make_family(g, b, hyperelliptic);
  const auto agg = aggregate_boundary(fibers, g);
  fam.delta = agg.delta;
  fam.delta_ct = agg.delta_ct;
  fam.n_nc = agg.n_nc;
  fam.n_ct = agg.n_ct;
  fam.per_fiber = std::move(fibers);
  return fam;
}

/// Degrees of the pulled-back Hodge class and boundary divisors.
inline std::vector<std::pair<std::string, Rational>> moduli_degrees(const FamilyData& fam,
                                                                    const RelativeInvariants& rel) {
  if (rel.deg_pushforward.sign() <= 0)
    throw Error(ErrorKind::IsotrivialFamily, "moduli degrees need a non-isotrivial family");
  std::vector<std::pair<std::string, Rational>> out{{"lambda", rel.deg_pushforward}};
  for (std::size_t i = 0; i < fam.delta.size(); ++i)
    out.emplace_back("Delta_" + std::to_string(i), fam.delta[i]);
  return out;
}

}  // namespace fibred

#pragma once

// Pullback of Higgs data along the Torelli map and the per-genus exclusion
// report for special curves.

#include <optional>
#include <string>
#include <vector>

#include "fibred/certificate.hpp"
#include "fibred/error.hpp"
#include "fibred/inequalities.hpp"

namespace fibred {

/// A curve C in A_g: deg E^{1,0}, rank of its ample part, deg Omega^1(log).
struct CurveData {
  int g = 2;
  Rational deg_E;
  int rank_A = 0;
  long log_deg_C = 0;
  bool in_hyperelliptic_locus = false;
};

inline void validate_curve(const CurveData& c) {
  if (c.g < 2) throw Error(ErrorKind::InvalidFamily, "genus must be at least 2");
  if (c.log_deg_C <= 0) throw Error(ErrorKind::DegenerateBase, "log degree of the curve must be positive");
  if (c.rank_A < 0 || c.rank_A > c.g) throw Error(ErrorKind::InvalidFamily, "rank_A must lie in [0, g]");
  if (c.deg_E.sign() < 0) throw Error(ErrorKind::NegativeInvariant, "deg E^{1,0} must be nonnegative");
  if (c.deg_E > Rational(c.g, 2) * Rational(c.log_deg_C))
    throw Error(ErrorKind::InvalidFamily, "deg E^{1,0} = " + c.deg_E.str() + " exceeds g/2 * log degree");
}

/// Higgs data of the representing family over B.
inline HiggsData pullback(const CurveData& c, int lambda_count) {
  validate_curve(c);
  if (lambda_count < 0) throw Error(ErrorKind::InvalidFamily, "lambda_count must be nonnegative");
  if (c.in_hyperelliptic_locus) {
    if (lambda_count != 0)
      throw Error(ErrorKind::LambdaOnHyperelliptic, "the Torelli map is unramified over the hyperelliptic locus");
    return {c.deg_E, c.rank_A, Rational(c.log_deg_C), c.g};
  }
  return {Rational(2) * c.deg_E, c.rank_A, Rational(2 * c.log_deg_C + lambda_count), c.g};
}

enum class TransferBranch { Hyperelliptic, NonhyperForward, NonhyperBackward };

inline std::string_view to_string(TransferBranch b) {
  switch (b) {
    case TransferBranch::Hyperelliptic: return "hyperelliptic";
    case TransferBranch::NonhyperForward: return "nonhyper-forward";
    case TransferBranch::NonhyperBackward: return "nonhyper-backward";
  }
  return "?";
}

struct TransferResult {
  std::optional<HiggsClass> classification;  // transferred class, if any
  std::optional<Rational> deg_B;              // backward: forced deg over B
  std::string statement;
};

/// Moves a Higgs classification across the Torelli pullback. For the backward
/// branch cls is the class over C and log_deg_B the log degree over B.
inline TransferResult higgs_transfer(HiggsClass cls, TransferBranch branch, int lambda_count, int g = 2,
                                     int rank_A = 0, const Rational& log_deg_B = Rational(0)) {
  if (lambda_count < 0) throw Error(ErrorKind::InconsistentBranch, "lambda_count must be nonnegative");
  TransferResult r;
  switch (branch) {
    case TransferBranch::Hyperelliptic:
      if (lambda_count != 0)
        throw Error(ErrorKind::InconsistentBranch, "hyperelliptic branch with nonempty ramification locus");
      r.classification = cls;
      r.statement = "classification unchanged";
      return r;
    case TransferBranch::NonhyperForward:
      if (cls == HiggsClass::Neither) {
        r.statement = "no conclusion over C";
        return r;
      }
      r.classification = cls;
      r.statement = std::string(to_string(cls)) + " over B implies the same over C";
      return r;
    case TransferBranch::NonhyperBackward: {
      if (cls == HiggsClass::Neither) {
        r.statement = "no conclusion over B";
        return r;
      }
      if (log_deg_B <= Rational(lambda_count))
        throw Error(ErrorKind::InconsistentBranch,
                    "log_deg_B - |Lambda| = 2 deg Omega_C(log) must be positive, got " +
                        (log_deg_B - Rational(lambda_count)).str());
      if (cls == HiggsClass::StrictlyMaximal && rank_A != 0 && rank_A != g)
        throw Error(ErrorKind::InconsistentBranch, "strictly maximal over C needs rank_A = g");
      const int rank = cls == HiggsClass::StrictlyMaximal ? g : rank_A;
      if (rank < 0 || rank > g) throw Error(ErrorKind::InconsistentBranch, "rank_A must lie in [0, g]");
      r.deg_B = Rational(rank, 2) * (log_deg_B - Rational(lambda_count));
      r.statement = "deg_B = " + std::to_string(rank) + "/2 * (log_deg_B - |Lambda|) = " + r.deg_B->str();
      if (lambda_count == 0) r.classification = cls;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exclusion report

struct ClaimVerdict {
  std::string id;
  std::string statement;
  std::string paper_bound;   // e.g. "g > 11"
  bool paper_excluded = false;
  std::optional<bool> engine_excluded;
  std::string engine_basis;  // certificate scenario or reason
  std::string note;

  /// The displayed verdict follows the stated bound.
  [[nodiscard]] bool excluded() const { return paper_excluded; }
  [[nodiscard]] bool disagrees() const { return engine_excluded && *engine_excluded != paper_excluded; }
};

struct ExclusionSummary {
  int g = 0;
  std::vector<ClaimVerdict> claims;
};

namespace detail {

/// Builds and verifies a certificate. A range error counts as "not excluded".
inline bool certified(const std::string& scenario, long g, std::string& basis) {
  try {
    const auto cert = build_certificate(scenario, g);
    const bool ok = verify_certificate(cert);
    basis = "certificate " + scenario + " at g = " + std::to_string(g) + (ok ? " verified" : " FAILED verification");
    return ok;
  } catch (const Error& e) {
    basis = "no certificate: " + std::string(e.what());
    return false;
  }
}

}  // namespace detail

inline ExclusionSummary oort_exclusion_report(int g) {
  if (g < 2) throw Error(ErrorKind::OutOfRange, "genus must be at least 2");
  ExclusionSummary out;
  out.g = g;

  ClaimVerdict shimura;
  shimura.id = "typeI-II";
  shimura.statement = "Shimura curves of type I or II in the Torelli locus";
  shimura.paper_bound = "g > 11";
  shimura.paper_excluded = g > 11;
  shimura.engine_excluded = detail::certified("typeI-II", g, shimura.engine_basis);
  shimura.note = "engine threshold " + std::to_string(min_genus(coefficient_family("F2-certified"))) +
                 " from the certified gap; the displayed gap coefficient gives " +
                 std::to_string(min_genus(coefficient_family("F2"))) + " (stronger than stated, unreviewed)";
  out.claims.push_back(shimura);

  ClaimVerdict strict;
  strict.id = "strictly-maximal";
  strict.statement = "families of semi-stable curves with strictly maximal Higgs field";
  strict.paper_bound = "g > 4";
  strict.paper_excluded = g > 4;
  strict.engine_excluded = detail::certified("family-strict-arakelov", g, strict.engine_basis);
  out.claims.push_back(strict);

  ClaimVerdict geodesic;
  geodesic.id = "hyperelliptic-geodesic";
  geodesic.statement = "totally geodesic curves in the hyperelliptic Torelli locus";
  geodesic.paper_bound = "g > 7";
  geodesic.paper_excluded = g > 7;
  const auto hx = hyperelliptic_exclusion(g);
  geodesic.engine_excluded = hx.excluded;
  geodesic.engine_basis = "hyperelliptic exclusion over every admissible q_f";
  for (const auto& c : hx.checks)
    if (!c.feasible) {
      geodesic.engine_basis = std::string(c.nc_branch ? "Delta_nc nonempty" : "Delta_nc empty") + ", q_f = " +
                              std::to_string(c.q) + ": " + c.detail;
      break;
    }
  out.claims.push_back(geodesic);

  ClaimVerdict nonhyper;
  nonhyper.id = "nonhyper-strictly-maximal";
  nonhyper.statement = "non-hyperelliptic families with strictly maximal Higgs field";
  nonhyper.paper_bound = "g >= 3";
  nonhyper.paper_excluded = g >= 3;
  if (g == 2) {
    nonhyper.engine_excluded = false;
    nonhyper.engine_basis = "every genus-2 curve is hyperelliptic; the claim is vacuous";
  } else if (g == 3) {
    nonhyper.engine_excluded = detail::certified("g3-nonhyper", g, nonhyper.engine_basis);
  } else if (g == 4) {
    nonhyper.engine_basis = "equality-case argument only; no linear certificate";
  } else {
    nonhyper.engine_excluded = detail::certified("family-strict-arakelov", g, nonhyper.engine_basis);
  }
  out.claims.push_back(nonhyper);

  if (g == 3)
    out.claims.front().note +=
        "; a type I Shimura curve of genus 3 exists and cannot be represented by a family with strictly maximal "
        "Higgs field";
  return out;
}

}  // namespace fibred

#pragma once

// JSON family and fiber documents. Rationals are strings "p/q" or integers on
// input, and always strings on output.

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fibred/error.hpp"
#include "fibred/invariants.hpp"
#include "json.hpp"

namespace fibred {

using json = nlohmann::ordered_json;

struct FamilyDocument {
  FamilyData family;
  std::optional<AbsoluteInvariants> absolute;
  /// Relative invariants stated directly (non-hyperelliptic families without
  /// absolute data); delta_f may be left to Noether.
  std::optional<RelativeInvariants> relative;
};

struct FiberDocument {
  int g = 2;
  bool hyperelliptic = false;
  FiberRecord fiber;
};

namespace doc {

inline json rational(const Rational& r) { return r.str(); }

inline json rationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

/// 1-based line of the first occurrence of "key" in the source, or 0.
inline int line_of(std::string_view text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string_view::npos) return 0;
  int line = 1;
  for (std::size_t k = 0; k < pos; ++k) line += text[k] == '\n' ? 1 : 0;
  return line;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& key, const std::string& what) const {
    const int line = line_of(text_, key);
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
    throw Error(ErrorKind::ParseError, where + "field '" + path + "': " + what);
  }

  int integer(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_number_integer()) fail(path, key, "expected an integer");
    return j.get<int>();
  }

  bool boolean(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_boolean()) fail(path, key, "expected true or false");
    return j.get<bool>();
  }

  Rational rational(const json& j, const std::string& path, const std::string& key) const {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
      try {
        return Rational::parse(j.get<std::string>());
      } catch (const std::exception&) {
        fail(path, key, "'" + j.get<std::string>() + "' is not a rational \"p/q\"");
      }
    }
    fail(path, key, "expected an integer or a \"p/q\" string");
  }

  RationalVector rationals(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_array()) fail(path, key, "expected an array");
    RationalVector out;
    for (std::size_t k = 0; k < j.size(); ++k)
      out.push_back(rational(j[k], path + "[" + std::to_string(k) + "]", key));
    return out;
  }

  std::vector<int> integers(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_array()) fail(path, key, "expected an array");
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(integer(j[k], path + "[" + std::to_string(k) + "]", key));
    return out;
  }

  /// Pads to `size` with zeros; longer vectors are an index error.
  RationalVector padded(const json& j, const std::string& path, std::size_t size) const {
    auto v = rationals(j, path, path);
    if (v.size() > size)
      throw Error(ErrorKind::IndexOutOfRange, "field '" + path + "' has " + std::to_string(v.size()) +
                                                  " entries, at most " + std::to_string(size) + " allowed");
    v.resize(size, Rational(0));
    return v;
  }

  FiberRecord fiber(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, path, "expected an object");
    FiberRecord f;
    for (const auto& [key, value] : j.items()) {
      const std::string p = path + "." + key;
      if (key == "compact_jacobian") {
        f.compact_jacobian = boolean(value, p, key);
      } else if (key == "component_genera") {
        f.component_genera = integers(value, p, key);
      } else if (key == "tree_edges") {
        if (!value.is_array()) fail(p, key, "expected an array of [a, b] pairs");
        for (std::size_t k = 0; k < value.size(); ++k) {
          const auto& e = value[k];
          if (!e.is_array() || e.size() != 2) fail(p, key, "edge " + std::to_string(k) + " is not an [a, b] pair");
          f.tree_edges.push_back({integer(e[0], p, key), integer(e[1], p, key), 1});
        }
      } else if (key == "edge_multiplicities" || key == "nonseparating_nodes" || key == "lambda_member" ||
                 key == "delta" || key == "ct_class") {
        continue;  // second pass
      } else {
        fail(p, key, "unknown key");
      }
    }
    if (j.contains("edge_multiplicities")) {
      const auto m = integers(j["edge_multiplicities"], path + ".edge_multiplicities", "edge_multiplicities");
      if (m.size() != f.tree_edges.size())
        fail(path + ".edge_multiplicities", "edge_multiplicities", "length differs from tree_edges");
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] < 1) fail(path + ".edge_multiplicities", "edge_multiplicities", "multiplicities must be >= 1");
        f.tree_edges[k].multiplicity = m[k];
      }
    }
    if (j.contains("nonseparating_nodes"))
      f.nonseparating_nodes = integer(j["nonseparating_nodes"], path + ".nonseparating_nodes", "nonseparating_nodes");
    if (j.contains("lambda_member"))
      f.lambda_member = boolean(j["lambda_member"], path + ".lambda_member", "lambda_member");
    if (j.contains("delta")) f.delta = rationals(j["delta"], path + ".delta", "delta");
    if (j.contains("ct_class")) {
      const auto& c = j["ct_class"];
      if (!c.is_string()) fail(path + ".ct_class", "ct_class", "expected a string");
      const auto s = c.get<std::string>();
      if (s == "lambda_prime") {
        f.ct_class = CtClass::LambdaPrime;
      } else if (s == "ct_b") {
        f.ct_class = CtClass::Balanced;
      } else if (s == "ct_ub") {
        f.ct_class = CtClass::Unbalanced;
      } else if (s != "unspecified") {
        fail(path + ".ct_class", "ct_class", "expected lambda_prime, ct_b, ct_ub or unspecified");
      }
    }
    return f;
  }

 private:
  std::string_view text_;
};

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) line += text[k] == '\n' ? 1 : 0;
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace doc

inline FamilyDocument parse_family_document(std::string_view text) {
  const json j = doc::parse_json(text);
  const doc::Reader rd(text);
  if (!j.is_object()) rd.fail("<root>", "", "expected an object");
  static const std::vector<std::string> known{
      "genus",  "base_genus", "hyperelliptic", "relative_irregularity", "rank_A", "n_nc",     "n_ct",    "lambda_count",
      "delta",  "delta_ct",   "xi",            "fibers",                "assertions", "absolute", "relative", "h"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) rd.fail(key, key, "unknown key");
  for (const char* required : {"genus", "base_genus"})
    if (!j.contains(required)) rd.fail(required, required, "missing required key");

  const int g = rd.integer(j["genus"], "genus", "genus");
  if (g < 2) rd.fail("genus", "genus", "genus must be at least 2");
  const int b = rd.integer(j["base_genus"], "base_genus", "base_genus");
  const bool hyp = j.contains("hyperelliptic") && rd.boolean(j["hyperelliptic"], "hyperelliptic", "hyperelliptic");

  FamilyDocument out;
  FamilyData& fam = out.family;
  if (j.contains("fibers")) {
    const auto& fj = j["fibers"];
    if (!fj.is_array()) rd.fail("fibers", "fibers", "expected an array");
    std::vector<FiberRecord> fibers;
    for (std::size_t k = 0; k < fj.size(); ++k) fibers.push_back(rd.fiber(fj[k], "fibers[" + std::to_string(k) + "]"));
    fam = family_from_fibers(g, b, hyp, std::move(fibers));
  } else {
    fam = make_family(g, b, hyp);
  }
  const auto delta_size = static_cast<std::size_t>(max_delta_index(g) + 1);
  if (j.contains("delta")) fam.delta = rd.padded(j["delta"], "delta", delta_size);
  if (j.contains("delta_ct")) fam.delta_ct = rd.padded(j["delta_ct"], "delta_ct", delta_size);
  if (j.contains("xi")) fam.xi = rd.padded(j["xi"], "xi", static_cast<std::size_t>(max_xi_index(g) + 1));
  if (j.contains("n_nc")) fam.n_nc = rd.integer(j["n_nc"], "n_nc", "n_nc");
  if (j.contains("n_ct")) fam.n_ct = rd.integer(j["n_ct"], "n_ct", "n_ct");
  if (j.contains("lambda_count")) fam.lambda_count = rd.integer(j["lambda_count"], "lambda_count", "lambda_count");
  if (j.contains("relative_irregularity"))
    fam.q_f = rd.integer(j["relative_irregularity"], "relative_irregularity", "relative_irregularity");
  if (j.contains("rank_A")) fam.rank_A = rd.integer(j["rank_A"], "rank_A", "rank_A");
  if (j.contains("h")) fam.h = rd.rational(j["h"], "h", "h");
  if (j.contains("assertions")) {
    const auto& a = j["assertions"];
    if (!a.is_array()) rd.fail("assertions", "assertions", "expected an array of names");
    for (const auto& name : a) {
      const std::string s = name.is_string() ? name.get<std::string>() : "";
      if (s == "pushforward_semistable") {
        fam.assertions.pushforward_semistable = true;
      } else if (s == "torelli_representing") {
        fam.assertions.torelli_representing = true;
      } else if (s == "non_hyperelliptic_torelli") {
        fam.assertions.non_hyperelliptic_torelli = true;
      } else {
        rd.fail("assertions", "assertions", "unknown assertion '" + (name.is_string() ? s : name.dump()) + "'");
      }
    }
  }
  if (j.contains("absolute")) {
    const auto& a = j["absolute"];
    if (!a.is_object()) rd.fail("absolute", "absolute", "expected an object");
    AbsoluteInvariants abs;
    for (const char* key : {"omega_S_sq", "chi_top", "chi_O"})
      if (!a.contains(key)) rd.fail(std::string("absolute.") + key, key, "missing required key");
    for (const auto& [key, value] : a.items())
      if (key != "omega_S_sq" && key != "chi_top" && key != "chi_O") rd.fail("absolute." + key, key, "unknown key");
    abs.omega_S_sq = rd.rational(a["omega_S_sq"], "absolute.omega_S_sq", "omega_S_sq");
    abs.chi_top = rd.rational(a["chi_top"], "absolute.chi_top", "chi_top");
    abs.chi_O = rd.rational(a["chi_O"], "absolute.chi_O", "chi_O");
    out.absolute = abs;
  }
  if (j.contains("relative")) {
    const auto& r = j["relative"];
    if (!r.is_object()) rd.fail("relative", "relative", "expected an object");
    for (const char* key : {"omega_rel_sq", "deg_pushforward"})
      if (!r.contains(key)) rd.fail(std::string("relative.") + key, key, "missing required key");
    RelativeInvariants rel;
    rel.omega_rel_sq = rd.rational(r["omega_rel_sq"], "relative.omega_rel_sq", "omega_rel_sq");
    rel.deg_pushforward = rd.rational(r["deg_pushforward"], "relative.deg_pushforward", "deg_pushforward");
    rel.delta_f = r.contains("delta_f") ? rd.rational(r["delta_f"], "relative.delta_f", "delta_f")
                                        : Rational(12) * rel.deg_pushforward - rel.omega_rel_sq;
    out.relative = rel;
  }
  validate_family(fam);
  return out;
}

inline FamilyDocument load_family_document(const std::string& path) {
  return parse_family_document(doc::read_file(path));
}

/// A single fiber: "genus" plus the fiber keys at top level.
inline FiberDocument parse_fiber_document(std::string_view text) {
  json j = doc::parse_json(text);
  const doc::Reader rd(text);
  if (!j.is_object()) rd.fail("<root>", "", "expected an object");
  if (!j.contains("genus")) rd.fail("genus", "genus", "missing required key");
  FiberDocument out;
  out.g = rd.integer(j["genus"], "genus", "genus");
  if (out.g < 2) rd.fail("genus", "genus", "genus must be at least 2");
  if (j.contains("hyperelliptic")) out.hyperelliptic = rd.boolean(j["hyperelliptic"], "hyperelliptic", "hyperelliptic");
  j.erase("genus");
  j.erase("hyperelliptic");
  out.fiber = rd.fiber(j, "fiber");
  return out;
}

inline FiberDocument load_fiber_document(const std::string& path) {
  return parse_fiber_document(doc::read_file(path));
}

/// Serialized family in the input schema.
inline json to_json(const FamilyData& fam) {
  json j;
  j["genus"] = fam.g;
  j["base_genus"] = fam.b;
  j["hyperelliptic"] = fam.hyperelliptic;
  if (fam.q_f) j["relative_irregularity"] = *fam.q_f;
  if (fam.rank_A) j["rank_A"] = *fam.rank_A;
  j["n_nc"] = fam.n_nc;
  j["n_ct"] = fam.n_ct;
  j["lambda_count"] = fam.lambda_count;
  j["delta"] = doc::rationals(fam.delta);
  j["delta_ct"] = doc::rationals(fam.delta_ct);
  j["xi"] = doc::rationals(fam.xi);
  if (fam.h) j["h"] = fam.h->str();
  json a = json::array();
  if (fam.assertions.pushforward_semistable) a.push_back("pushforward_semistable");
  if (fam.assertions.torelli_representing) a.push_back("torelli_representing");
  if (fam.assertions.non_hyperelliptic_torelli) a.push_back("non_hyperelliptic_torelli");
  j["assertions"] = a;
  return j;
}

}  // namespace fibred

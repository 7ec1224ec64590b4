#pragma once

#include <string>
#include <vector>

// Family documents and the exit code the report command must return.
struct FixtureCase {
  const char* file;
  int exit_code;
};

inline const std::vector<FixtureCase>& fixture_table() {
  static const std::vector<FixtureCase> table{
      {"example_genus3.json", 0},         {"example_genus4.json", 0},
      {"invalid_delta_ct0.json", 2},      {"invalid_syntax.json", 2},
      {"invalid_delta0_mismatch.json", 2}, {"invalid_rational.json", 2},
      {"synthetic_absolute.json", 0},     {"synthetic_genus3_h.json", 0},
      {"synthetic_hyper_indices.json", 0}, {"synthetic_hyper_q2.json", 1},
      {"synthetic_strict_violation.json", 1}, {"synthetic_tagged.json", 1},
  };
  return table;
}

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

#pragma once
// Reproduction harness: each suite runs a fixed list of deterministic checks.

#include <cstdint>
#include <string>
#include <vector>

#include "vsym/io.hpp"

namespace vsym {

struct CheckResult {
  std::string id;
  std::string tag;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  double seconds() const;
};

struct VerifyOptions {
  int jobs = 1;
  double hom_budget = 1e9;
  int faithful_max_n = 8;
  std::uint64_t seed = 0x5eed'2024ULL;
  int random_elements = 200;
  int random_words = 500;
};

/// reduced-vt, reduced-vl, comm-vt, comm-vl, pvl, nilpotent, chordal,
/// crysto, abelian, rewriting. "all" runs each in this order.
const std::vector<std::string>& suite_names();
std::vector<SuiteReport> verify_paper(const std::string& suite, const VerifyOptions& opt = {});

/// Timing stays out of the JSON so repeated runs print identical output.
json to_json(const SuiteReport& r);

}  // namespace vsym

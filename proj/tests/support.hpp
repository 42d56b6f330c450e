#pragma once
// Small helpers shared by the unit tests. Oracles live in the test files.

#include <random>
#include <vector>

#include "vsym/words.hpp"

namespace testing_support {

inline vsym::Word W(const char* text) { return vsym::parse_word(text); }

/// Unreduced random letter sequence over the given symbols.
inline std::vector<vsym::Letter> random_letters(std::mt19937_64& rng, const std::vector<vsym::GenSym>& gens,
                                                int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(gens.size()) - 1), sign(0, 1);
  std::vector<vsym::Letter> out;
  for (int k = len(rng); k > 0; --k) out.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return out;
}

}  // namespace testing_support

#include <catch_amalgamated.hpp>

template <>
struct Catch::StringMaker<vsym::Word> {
  static std::string convert(const vsym::Word& w) { return "\"" + vsym::to_string(w) + "\""; }
};

#pragma once
// Finite quotients: permutations, finite groups as multiplication tables,
// evaluation of words, homomorphism checks and hom-count fingerprints.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "vsym/presentations.hpp"
#include "vsym/words.hpp"

namespace vsym {

/// Permutation of {0..n-1}, stored as images. compose(a, b) = a o b, so
/// b is applied first; this matches the left-to-right product of words.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based, validated
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);  // 0-based points
  /// tau_i = (i, i+1) with 1-based i.
  static Permutation adjacent(int n, int i);
  static Permutation from_one_line(const std::vector<int>& one_based);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_line() const;  // 1-based

  Permutation inverse() const;
  bool is_identity() const;
  long long order() const;
  std::vector<int> cycle_type() const;  // nontrivial cycle lengths, descending

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }
Permutation pow(const Permutation& p, long long k);
std::string to_string(const Permutation& p);  // cycle notation, 1-based

/// Finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::uint32_t> table, int order);

  /// S_k with elements in lexicographic order of one-line notation.
  static FiniteGroup symmetric(int k);
  /// (Z_2)^k, element index = bit vector.
  static FiniteGroup elementary_abelian2(int k);
  /// Closure of permutation generators (breadth-first, identity first).
  static FiniteGroup generated_by(std::string name, const std::vector<Permutation>& gens);
  static FiniteGroup trivial();
  /// Names understood by the CLI: S1..S6, A4, D4, Z2, Z2xZ2, Z2^k, trivial.
  static FiniteGroup by_name(const std::string& name);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return static_cast<int>(table_[static_cast<std::size_t>(a) * n_ + b]); }
  int inv(int a) const { return inv_[a]; }
  const std::uint32_t* row(int a) const { return table_.data() + static_cast<std::size_t>(a) * n_; }

  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(int a) const { return perms_.at(a); }
  int index_of(const Permutation& p) const;  // throws if not an element

 private:
  std::string name_;
  int n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<int> inv_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::string, int> perm_index_;
  void index_permutations(std::vector<Permutation> perms);
};

/// Assignment of generators to target elements. `domain` may be left
/// empty for maps that are defined on a whole alphabet (e.g. projection).
struct QuotientMap {
  Presentation domain;
  std::shared_ptr<const FiniteGroup> target;
  std::unordered_map<GenSym, int> assignment;

  int image(const GenSym& g) const;  // throws DomainError if unassigned
};

int eval(const QuotientMap& m, const Word& w);
int eval(const QuotientMap& m, const std::vector<Letter>& raw);

struct HomCheck {
  bool ok = true;
  std::vector<Word> failing;
};
HomCheck check_homomorphism(const QuotientMap& m);

/// The projection onto S_n sending sigma_i, s_i, y_i, rho_i, tau_i to
/// (i, i+1) and kappa_{i,j}, lambda_{i,j} to the identity.
QuotientMap projection_to_symmetric(int n, const Presentation& domain = {});

/// Parity map onto Z_2 x Z_2: bit 0 counts the non-rho generators, bit 1
/// the rho generators. Used for the commutator subgroups.
QuotientMap parity_map(const Presentation& domain);

struct HomCountOptions {
  double budget = 1e9;  // max |target|^|generators|
  int jobs = 1;
};

/// Number of homomorphisms p -> target, by exhaustive backtracking.
/// Throws BudgetError when |target|^g exceeds the budget.
std::uint64_t hom_count(const Presentation& p, const FiniteGroup& target,
                        const HomCountOptions& opt = {});

}  // namespace vsym

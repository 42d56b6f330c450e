#pragma once
// Reidemeister-Schreier rewriting over a finite quotient.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vsym/presentations.hpp"
#include "vsym/quotients.hpp"

namespace vsym {

/// A prefix-closed set of coset representatives, one per element of the
/// quotient's target. words[k] is the k-th representative in rep order and
/// represents the element elements[k].
struct SchreierTransversal {
  QuotientMap quotient;
  std::vector<int> elements;
  std::vector<Word> words;
  std::vector<int> rep_of;  // target element -> rep index

  std::size_t size() const { return words.size(); }
  const Word& rep_for(int element) const { return words[rep_of[element]]; }
  int index_of_word(const Word& w) const;  // -1 if w is not a representative
};

/// Checks bijectivity, identity -> empty word, prefix closure and
/// eval(rep) = element. Throws DomainError with the first violation.
void validate(const SchreierTransversal& t);

/// {1, a, rho_1, a rho_1} over the parity map, where a is the split
/// generator (s_1 or y_1).
SchreierTransversal transversal_m2(const Presentation& p, const GenSym& split);

/// Products m_{1,i_1} ... m_{n-1,i_{n-1}} with m_{k,i} = rho_k rho_{k-1}
/// ... rho_{i+1}, over the projection onto S_n. Rep order is lexicographic
/// in (i_1, ..., i_{n-1}) with i_k running from k down to 0.
SchreierTransversal transversal_mn(int n, const Presentation& domain = {});

/// Index-one subgroup: the trivial quotient with the single rep 1.
SchreierTransversal transversal_trivial(const Presentation& p);

Word representative(const SchreierTransversal& t, const Word& w);

struct RSGenerator {
  Word mu;
  GenSym a;
  Word value;  // mu a (rep of mu a)^-1, freely reduced
  int rep_index = 0;
  int gen_index = 0;
  std::optional<GenSym> symbol;  // unset when value is trivial

  bool trivial() const { return value.empty(); }
};

/// Alias map (representative word, generator) -> symbol for the generator
/// gamma(mu, a). Unlisted generators are named g<rep index>_<gen index>.
using GammaAliases = std::map<std::pair<Word, GenSym>, GenSym>;

/// Rewriting engine for one transversal and one generator list.
class SchreierRewriter {
 public:
  SchreierRewriter(SchreierTransversal t, std::vector<GenSym> generators,
                   const GammaAliases& aliases = {});

  const SchreierTransversal& transversal() const { return t_; }
  const std::vector<GenSym>& generators() const { return gens_; }
  const RSGenerator& gamma(int rep, int gen) const;
  RSGenerator gamma(const Word& mu, const GenSym& a) const;

  /// Nontrivial generators in rep order x generator order.
  std::vector<RSGenerator> nontrivial() const;
  std::vector<GenSym> symbols() const;
  std::optional<Word> value_of(const GenSym& symbol) const;

  /// Rewrite a raw (not necessarily reduced) word that lies in the
  /// subgroup. Throws DomainError otherwise.
  Word tau(const std::vector<Letter>& raw) const;
  Word tau(const Word& w) const { return tau(w.letters()); }

  /// Substitute the gamma values back; inverse of tau up to free reduction.
  Word expand(const Word& gamma_word) const;

 private:
  SchreierTransversal t_;
  std::vector<GenSym> gens_;
  std::vector<RSGenerator> table_;  // rep-major
  std::map<GenSym, std::size_t> by_symbol_;
  int gen_pos(const GenSym& g) const;
};

RSGenerator gamma(const SchreierTransversal& t, const Word& mu, const GenSym& a);
/// Uses the quotient's domain generators for naming.
Word tau_rewrite(const SchreierTransversal& t, const Word& w);

/// Generators: the nontrivial gamma symbols. Relators: tau(mu r mu^-1)
/// over reps x relators, with mu r mu^-1 formed without cancellation.
Presentation subgroup_presentation(const Presentation& p, const SchreierTransversal& t,
                                   const GammaAliases& aliases = {}, int jobs = 1);

/// The x_i, z, w (split s_1) or alpha_i, beta, delta (split y_1) names for
/// the m2 transversal on a reduced presentation. gamma(s_1, rho_i) for
/// i >= 3 gets the custom name z<i> (beta<i> for y_1), to be eliminated.
GammaAliases paper_aliases(const Presentation& p);

struct CommutatorRewrite {
  Presentation raw;      // straight out of the rewriting
  Presentation reduced;  // after Tietze elimination
  SchreierTransversal transversal;
};

/// Commutator subgroup of a reduced virtual twin or triplet presentation:
/// m2 transversal on the split generator, conventional aliases, then elimination.
CommutatorRewrite commutator_by_rewriting(const Presentation& p, int jobs = 1,
                                          const TietzePolicy& policy = TietzePolicy::autom());

/// Rewrite a pure word in y_i, rho_i as a word in kappa_{i,j}, i < j.
/// y_i^-1 is read as y_i (y_i is an involution).
Word pure_to_kappa(int n, const Word& w);

/// Rewriting of the full virtual triplet presentation over transversal_mn,
/// with every gamma replaced by its kappa expression.
Presentation pvl_by_rewriting(int n, int jobs = 1);

}  // namespace vsym

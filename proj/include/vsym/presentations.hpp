#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vsym/words.hpp"

namespace vsym {

/// Finite presentation. Relators are kept canonical (relator_canonical),
/// nonempty and pairwise distinct; make_presentation enforces this.
struct Presentation {
  std::string name;
  std::vector<GenSym> generators;
  std::vector<Word> relators;

  bool has_generator(const GenSym& g) const;
  int generator_index(const GenSym& g) const;  // -1 if absent
};

/// Canonicalize, drop trivial and duplicate relators (first occurrence
/// wins), and check that every relator symbol is a generator.
Presentation make_presentation(std::string name, std::vector<GenSym> generators,
                               const std::vector<Word>& relators);

enum class Kind {
  symmetric,
  braid,
  twin,
  triplet,
  virtual_braid,
  virtual_twin,
  virtual_triplet,
  virtual_twin_reduced,
  virtual_triplet_reduced,
  vt_commutator,
  vl_commutator,
  pvl,
  pvt_raag
};

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view name);  // throws ParseError
const std::vector<Kind>& all_kinds();
int min_rank(Kind k);

/// Presentation of the named family on n strands. Throws RangeError when n
/// is below the family's bound.
Presentation family(Kind kind, int n);

/// Relation u = v stored as the relator u v^-1.
Word relation(const Word& u, const Word& v);

struct TietzePolicy {
  bool automatic = true;
  std::vector<GenSym> order;  // used when !automatic

  static TietzePolicy autom() { return {}; }
  static TietzePolicy explicit_list(std::vector<GenSym> gens) { return {false, std::move(gens)}; }
};

/// Eliminate generators that occur exactly once in some relator.
///
/// Explicit policy: the listed generators, in the listed order; a generator
/// without an eligible relator raises DomainError.
///
/// Auto policy: repeat until nothing is eligible. Custom-family symbols are
/// tried first, then the named families, each group in symbol order. For a
/// chosen generator the shortest eligible relator (ties by canonical order)
/// is used.
Presentation tietze_eliminate(const Presentation& p, const TietzePolicy& policy = {});

/// Canonical relator multisets agree after renaming p's generators. The
/// rename map must be a bijection generators(p) -> generators(q).
bool same_relator_set(const Presentation& p, const Presentation& q,
                      const std::map<GenSym, GenSym>& rename);
bool same_relator_set(const Presentation& p, const Presentation& q);

/// Sorted canonical relators, convenient for comparisons and diffs.
std::vector<Word> sorted_relators(const Presentation& p);

}  // namespace vsym

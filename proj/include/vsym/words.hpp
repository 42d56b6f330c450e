#pragma once
// Free-group words over the typed generator alphabet used throughout the
// library: sigma_i, s_i, y_i, rho_i, tau_i, kappa_{i,j}, lambda_{i,j}, x_i,
// z, w, alpha_i, beta, delta and free-form custom symbols.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vsym {

/// Symbol families. The enumerator order is the primary key of the total
/// symbol order, so it must not be rearranged.
enum class Family : std::uint8_t {
  sigma, s, y, rho, tau, kappa, lambda, x, z, w, alpha, beta, delta, custom
};

enum class Arity { none, single, pair, named };

Arity arity(Family f);
std::string_view family_name(Family f);

/// A generator symbol. Indices are 1-based; unused indices are 0.
class GenSym {
 public:
  GenSym() = default;

  static GenSym indexed(Family f, int i);
  static GenSym pair(Family f, int i, int j);
  static GenSym plain(Family f);
  static GenSym custom(std::string name);

  Family family() const { return family_; }
  int index1() const { return i1_; }
  int index2() const { return i2_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend std::strong_ordering operator<=>(const GenSym& a, const GenSym& b);

 private:
  Family family_ = Family::custom;
  int i1_ = 0;
  int i2_ = 0;
  std::string name_;
};

// Shorthands for the common families.
inline GenSym sigma(int i) { return GenSym::indexed(Family::sigma, i); }
inline GenSym s(int i) { return GenSym::indexed(Family::s, i); }
inline GenSym y(int i) { return GenSym::indexed(Family::y, i); }
inline GenSym rho(int i) { return GenSym::indexed(Family::rho, i); }
inline GenSym tau(int i) { return GenSym::indexed(Family::tau, i); }
inline GenSym x(int i) { return GenSym::indexed(Family::x, i); }
inline GenSym alpha(int i) { return GenSym::indexed(Family::alpha, i); }
inline GenSym kappa(int i, int j) { return GenSym::pair(Family::kappa, i, j); }
inline GenSym lambda(int i, int j) { return GenSym::pair(Family::lambda, i, j); }
inline GenSym z() { return GenSym::plain(Family::z); }
inline GenSym w() { return GenSym::plain(Family::w); }
inline GenSym beta() { return GenSym::plain(Family::beta); }
inline GenSym delta() { return GenSym::plain(Family::delta); }

struct Letter {
  GenSym sym;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {sym, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  /// (symbol, exponent) with +1 ordered before -1.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b);
};

/// A freely reduced word. Construction always reduces, so every Word value
/// is canonical in the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);
  /// Single generator (exponent +1).
  explicit Word(const GenSym& g);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic on letters; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend Word free_reduce(const std::vector<Letter>& letters);
  std::vector<Letter> letters_;
};

/// Unique freely reduced form of an arbitrary letter sequence.
Word free_reduce(const std::vector<Letter>& letters);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }
/// g w g^-1
Word conjugate(const Word& w, const Word& g);
/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);
Word power(const Word& w, int k);

/// Strip matching first/last letters until the word is cyclically reduced.
Word cyclic_reduce(const Word& w);

/// Least word among the rotations of the cyclic reduction of w and of its
/// inverse. Relators that differ only by conjugation by a non-trivial word
/// are not identified.
Word relator_canonical(const Word& w);

/// Exponent of g summed over the word.
int exponent_sum(const Word& w, const GenSym& g);
/// Number of letters equal to g^{+-1}.
int occurrences(const Word& w, const GenSym& g);

/// Replace every generator via `image`; symbols mapped to std::nullopt are
/// kept unchanged.
Word substitute(const Word& w,
                const std::function<std::optional<Word>(const GenSym&)>& image);

// Text syntax: "rho1 s1^-1 k1_3 z w^2". Exponents may be any nonzero integer.
std::string to_string(const GenSym& g);
std::string to_string(const Word& w);
GenSym parse_gensym(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace vsym

template <>
struct std::hash<vsym::GenSym> {
  std::size_t operator()(const vsym::GenSym& g) const noexcept;
};

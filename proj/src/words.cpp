#include "vsym/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "vsym/errors.hpp"

namespace vsym {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view prefix;
  Arity arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::sigma, "sigma", Arity::single}, {Family::s, "s", Arity::single},
    {Family::y, "y", Arity::single},         {Family::rho, "rho", Arity::single},
    {Family::tau, "tau", Arity::single},     {Family::kappa, "k", Arity::pair},
    {Family::lambda, "l", Arity::pair},      {Family::x, "x", Arity::single},
    {Family::z, "z", Arity::none},           {Family::w, "w", Arity::none},
    {Family::alpha, "alpha", Arity::single}, {Family::beta, "beta", Arity::none},
    {Family::delta, "delta", Arity::none},   {Family::custom, "", Arity::named},
};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<int>(f)]; }

bool all_digits(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int to_int(std::string_view t) {
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw ParseError("bad integer '" + std::string(t) + "'");
  return v;
}

bool valid_identifier(std::string_view t) {
  if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_'))
    return false;
  return std::all_of(t.begin(), t.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Arity arity(Family f) { return info(f).arity; }
std::string_view family_name(Family f) { return info(f).prefix; }

GenSym GenSym::indexed(Family f, int i) {
  if (arity(f) != Arity::single)
    fail_domain("family '" + std::string(family_name(f)) + "' does not take one index");
  if (i < 1) fail_domain("generator index must be >= 1");
  GenSym g;
  g.family_ = f;
  g.i1_ = i;
  return g;
}

GenSym GenSym::pair(Family f, int i, int j) {
  if (arity(f) != Arity::pair)
    fail_domain("family '" + std::string(family_name(f)) + "' does not take two indices");
  if (i < 1 || j < 1) fail_domain("generator index must be >= 1");
  if (i == j) fail_domain("pair symbol needs distinct indices");
  GenSym g;
  g.family_ = f;
  g.i1_ = i;
  g.i2_ = j;
  return g;
}

GenSym GenSym::plain(Family f) {
  if (arity(f) != Arity::none)
    fail_domain("family '" + std::string(family_name(f)) + "' needs indices");
  GenSym g;
  g.family_ = f;
  return g;
}

GenSym GenSym::custom(std::string name) {
  if (!valid_identifier(name)) fail_domain("bad custom generator name '" + name + "'");
  GenSym g;
  g.family_ = Family::custom;
  g.name_ = std::move(name);
  return g;
}

std::strong_ordering operator<=>(const GenSym& a, const GenSym& b) {
  if (auto c = a.family_ <=> b.family_; c != 0) return c;
  if (auto c = a.i1_ <=> b.i1_; c != 0) return c;
  if (auto c = a.i2_ <=> b.i2_; c != 0) return c;
  return a.name_.compare(b.name_) <=> 0;
}

std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  if (auto c = a.sym <=> b.sym; c != 0) return c;
  // +1 sorts before -1
  return b.exp <=> a.exp;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters).letters_) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word::Word(const GenSym& g) { letters_.push_back({g, 1}); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) fail_domain("letter exponent must be +1 or -1");
    if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word conjugate(const Word& w, const Word& g) { return g * w * invert(g); }

Word commutator(const Word& a, const Word& b) { return a * b * invert(a) * invert(b); }

Word power(const Word& w, int k) {
  const Word base = k < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo].sym == l[hi - 1].sym && l[lo].exp == -l[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(l.begin() + lo, l.begin() + hi));
}

namespace {

// Index of the lexicographically least rotation (naive, words here are short).
std::vector<Letter> least_rotation(const std::vector<Letter>& l) {
  const std::size_t n = l.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = l[(r + k) % n];
      const auto& b = l[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(l[(best + k) % n]);
  return out;
}

}  // namespace

Word relator_canonical(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  auto a = least_rotation(c.letters());
  auto b = least_rotation(invert(c).letters());
  // Rotations of a cyclically reduced word stay freely reduced.
  return Word(std::min(a, b));
}

int exponent_sum(const Word& w, const GenSym& g) {
  int total = 0;
  for (const auto& l : w)
    if (l.sym == g) total += l.exp;
  return total;
}

int occurrences(const Word& w, const GenSym& g) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](const Letter& l) { return l.sym == g; }));
}

Word substitute(const Word& w,
                const std::function<std::optional<Word>(const GenSym&)>& image) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    auto img = image(l.sym);
    if (!img) {
      out.push_back(l);
      continue;
    }
    const Word piece = l.exp > 0 ? *img : invert(*img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return Word(std::move(out));
}

std::string to_string(const GenSym& g) {
  const auto& fi = info(g.family());
  switch (fi.arity) {
    case Arity::none:
      return std::string(fi.prefix);
    case Arity::single:
      return std::string(fi.prefix) + std::to_string(g.index1());
    case Arity::pair:
      return std::string(fi.prefix) + std::to_string(g.index1()) + "_" + std::to_string(g.index2());
    case Arity::named:
      return g.name();
  }
  return {};
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l.sym);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

GenSym parse_gensym(std::string_view t) {
  if (!valid_identifier(t)) throw ParseError("bad generator '" + std::string(t) + "'");
  for (const auto& fi : kFamilies) {
    if (fi.family == Family::custom || !t.starts_with(fi.prefix)) continue;
    const auto rest = t.substr(fi.prefix.size());
    try {
      switch (fi.arity) {
        case Arity::none:
          if (rest.empty()) return GenSym::plain(fi.family);
          break;
        case Arity::single:
          if (all_digits(rest)) return GenSym::indexed(fi.family, to_int(rest));
          break;
        case Arity::pair: {
          const auto us = rest.find('_');
          if (us == std::string_view::npos) break;
          const auto a = rest.substr(0, us), b = rest.substr(us + 1);
          if (all_digits(a) && all_digits(b))
            return GenSym::pair(fi.family, to_int(a), to_int(b));
          break;
        }
        case Arity::named:
          break;
      }
    } catch (const DomainError& e) {
      throw ParseError("bad generator '" + std::string(t) + "': " + e.what());
    }
  }
  return GenSym::custom(std::string(t));
}

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "1" || tok == "e") continue;  // explicit identity
    int e = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      e = to_int(tok.substr(caret + 1));
      if (e == 0) throw ParseError("zero exponent in '" + std::string(tok) + "'");
      tok = tok.substr(0, caret);
    }
    const GenSym g = parse_gensym(tok);
    for (int k = 0; k < std::abs(e); ++k) out.push_back({g, e > 0 ? 1 : -1});
  }
  return Word(std::move(out));
}

}  // namespace vsym

std::size_t std::hash<vsym::GenSym>::operator()(const vsym::GenSym& g) const noexcept {
  std::size_t h = std::hash<int>()(static_cast<int>(g.family()));
  h = h * 1000003u ^ std::hash<int>()(g.index1());
  h = h * 1000003u ^ std::hash<int>()(g.index2());
  return h * 1000003u ^ std::hash<std::string>()(g.name());
}

#include "vsym/presentations.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "vsym/errors.hpp"

namespace vsym {

bool Presentation::has_generator(const GenSym& g) const { return generator_index(g) >= 0; }

int Presentation::generator_index(const GenSym& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

Presentation make_presentation(std::string name, std::vector<GenSym> generators,
                               const std::vector<Word>& relators) {
  std::unordered_set<GenSym> gens(generators.begin(), generators.end());
  if (gens.size() != generators.size()) fail_domain("duplicate generator in " + name);
  Presentation p{std::move(name), std::move(generators), {}};
  std::set<Word> seen;
  for (const auto& r : relators) {
    for (const auto& l : r)
      if (!gens.count(l.sym))
        fail_domain("relator uses '" + to_string(l.sym) + "' which is not a generator of " + p.name);
    Word c = relator_canonical(r);
    if (c.empty() || !seen.insert(c).second) continue;
    p.relators.push_back(std::move(c));
  }
  return p;
}

Word relation(const Word& u, const Word& v) { return u * invert(v); }

namespace {

constexpr std::array<std::string_view, 13> kKindNames = {
    "symmetric",     "braid",           "twin",
    "triplet",       "virtual_braid",   "virtual_twin",
    "virtual_triplet", "virtual_twin_reduced", "virtual_triplet_reduced",
    "vt_commutator", "vl_commutator",   "pvl",
    "pvt_raag"};

Word W(const GenSym& g) { return Word(g); }

Word W(std::initializer_list<GenSym> gs) {
  std::vector<Letter> l;
  for (const auto& g : gs) l.push_back({g, 1});
  return Word(std::move(l));
}

Word inv(const GenSym& g) { return Word({Letter{g, -1}}); }

// Shared relation schemas.
void involutions(std::vector<Word>& out, GenSym (*gen)(int), int n) {
  for (int i = 1; i < n; ++i) out.push_back(power(W(gen(i)), 2));
}

void far_commute(std::vector<Word>& out, GenSym (*a)(int), GenSym (*b)(int), int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2) out.push_back(relation(W({a(i), b(j)}), W({b(j), a(i)})));
}

void braid_rel(std::vector<Word>& out, GenSym (*a)(int), int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) == 1)
        out.push_back(relation(W({a(i), a(j), a(i)}), W({a(j), a(i), a(j)})));
}

// rho_i a_j rho_i = rho_j a_i rho_j for |i-j| = 1
void mixed(std::vector<Word>& out, GenSym (*a)(int), int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) == 1)
        out.push_back(relation(W({rho(i), a(j), rho(i)}), W({rho(j), a(i), rho(j)})));
}

std::vector<GenSym> indexed_gens(GenSym (*gen)(int), int n) {
  std::vector<GenSym> g;
  for (int i = 1; i < n; ++i) g.push_back(gen(i));
  return g;
}

std::string named(std::string_view base, int n) { return std::string(base) + "_" + std::to_string(n); }

Presentation reduced(GenSym split, const std::string& name, int n, bool vt) {
  std::vector<GenSym> gens{split};
  for (int i = 1; i < n; ++i) gens.push_back(rho(i));
  std::vector<Word> rels;
  rels.push_back(power(W(split), 2));
  involutions(rels, rho, n);
  if (vt && n == 3) {
    rels.push_back(power(W({rho(1), rho(2)}), 3));
    return make_presentation(name, gens, rels);
  }
  far_commute(rels, rho, rho, n);
  for (int i = 1; i + 1 < n; ++i)
    rels.push_back(relation(W({rho(i), rho(i + 1), rho(i)}), W({rho(i + 1), rho(i), rho(i + 1)})));
  for (int i = 3; i < n; ++i) rels.push_back(relation(W({rho(i), split}), W({split, rho(i)})));
  if (vt)
    rels.push_back(power(W({split, rho(2), rho(1), rho(3), rho(2)}), 4));
  else
    rels.push_back(power(W({split, rho(1), rho(2), split, rho(2), rho(1)}), 3));
  return make_presentation(name, gens, rels);
}

Presentation commutator_presentation(bool vt, int n) {
  const std::string name = named(vt ? "VT" : "VL", n) + "'";
  auto a = [&](int i) { return vt ? x(i) : alpha(i); };
  const GenSym b = vt ? z() : beta();
  const GenSym c = vt ? w() : delta();
  if (n == 2) return make_presentation(name, {c}, {});
  if (n == 3) return make_presentation(name, {a(2), b, c}, {power(W(a(2)), 3), power(W(b), 3)});

  std::vector<GenSym> gens;
  for (int i = 2; i < n; ++i) gens.push_back(a(i));
  gens.push_back(b);
  gens.push_back(c);
  std::vector<Word> r;
  r.push_back(power(W(a(2)), 3));
  for (int j = 3; j < n; ++j) r.push_back(power(W(a(j)), 2));
  r.push_back(power(W(b), 3));
  for (int i = 2; i + 1 < n; ++i) r.push_back(power(W(a(i)) * inv(a(i + 1)), 3));
  for (int i = 2; i + 1 < n; ++i)
    for (int j = i + 2; j < n; ++j) r.push_back(power(W(a(i)) * inv(a(j)), 2));
  for (int j = 3; j < n; ++j) r.push_back(power(W({a(j), c}), 2));
  r.push_back(power(W(b) * inv(c) * inv(a(3)), 3));
  for (int j = 4; j < n; ++j) r.push_back(power(W(b) * inv(c) * inv(a(j)), 2));
  if (vt) {
    r.push_back(power(W(b) * inv(c) * inv(a(3)) * inv(b) * W({a(2), a(3)}) * inv(a(2)), 2));
    r.push_back(power(W(c) * inv(b) * W({a(3), c, b}) * inv(c) * inv(a(2)) * inv(a(3)) * W(a(2)), 2));
  } else {
    r.push_back(power(inv(a(2)) * W(b), 3));
    r.push_back(power(W({c, b}) * inv(c) * inv(a(2)), 3));
  }
  return make_presentation(name, gens, r);
}

}  // namespace

std::string_view kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> v;
    for (std::size_t i = 0; i < kKindNames.size(); ++i) v.push_back(static_cast<Kind>(i));
    return v;
  }();
  return kinds;
}

Kind parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  throw ParseError("unknown family '" + std::string(name) + "'");
}

int min_rank(Kind k) {
  return (k == Kind::virtual_twin_reduced || k == Kind::virtual_triplet_reduced) ? 3 : 2;
}

Presentation family(Kind kind, int n) {
  if (n < min_rank(kind))
    throw RangeError(std::string(kind_name(kind)) + " is defined for n >= " +
                     std::to_string(min_rank(kind)) + ", got n = " + std::to_string(n));
  std::vector<Word> r;
  switch (kind) {
    case Kind::symmetric:
      involutions(r, tau, n);
      braid_rel(r, tau, n);
      far_commute(r, tau, tau, n);
      return make_presentation(named("S", n), indexed_gens(tau, n), r);
    case Kind::braid:
      far_commute(r, sigma, sigma, n);
      braid_rel(r, sigma, n);
      return make_presentation(named("B", n), indexed_gens(sigma, n), r);
    case Kind::twin:
      involutions(r, s, n);
      far_commute(r, s, s, n);
      return make_presentation(named("T", n), indexed_gens(s, n), r);
    case Kind::triplet:
      involutions(r, y, n);
      braid_rel(r, y, n);
      return make_presentation(named("L", n), indexed_gens(y, n), r);
    case Kind::virtual_braid:
    case Kind::virtual_twin:
    case Kind::virtual_triplet: {
      GenSym (*a)(int) = kind == Kind::virtual_braid ? sigma : kind == Kind::virtual_twin ? s : y;
      if (kind != Kind::virtual_braid) involutions(r, a, n);
      involutions(r, rho, n);
      if (kind != Kind::virtual_triplet) far_commute(r, a, a, n);
      far_commute(r, rho, rho, n);
      far_commute(r, a, rho, n);
      if (kind != Kind::virtual_twin) braid_rel(r, a, n);
      braid_rel(r, rho, n);
      mixed(r, a, n);
      auto gens = indexed_gens(a, n);
      auto rg = indexed_gens(rho, n);
      gens.insert(gens.end(), rg.begin(), rg.end());
      const char* base = kind == Kind::virtual_braid ? "VB" : kind == Kind::virtual_twin ? "VT" : "VL";
      return make_presentation(named(base, n), gens, r);
    }
    case Kind::virtual_twin_reduced:
      return reduced(s(1), named("VT", n) + "/reduced", n, true);
    case Kind::virtual_triplet_reduced:
      return reduced(y(1), named("VL", n) + "/reduced", n, false);
    case Kind::vt_commutator:
      return commutator_presentation(true, n);
    case Kind::vl_commutator:
      return commutator_presentation(false, n);
    case Kind::pvl: {
      std::vector<GenSym> gens;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(kappa(i, j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            r.push_back(relation(W({kappa(i, j), kappa(i, k), kappa(j, k)}),
                                 W({kappa(j, k), kappa(i, k), kappa(i, j)})));
      return make_presentation(named("PVL", n), gens, r);
    }
    case Kind::pvt_raag: {
      std::vector<GenSym> gens;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(lambda(i, j));
      for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
          const auto& p = gens[a];
          const auto& q = gens[b];
          std::set<int> idx{p.index1(), p.index2(), q.index1(), q.index2()};
          if (idx.size() == 4) r.push_back(commutator(W(p), W(q)));
        }
      return make_presentation(named("PVT", n), gens, r);
    }
  }
  fail_domain("unhandled family");
}

namespace {

struct Candidate {
  std::size_t relator;
  bool found = false;
};

// Shortest relator (then least canonical) containing g exactly once.
Candidate eligible_relator(const Presentation& p, const GenSym& g) {
  Candidate best;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto& r = p.relators[i];
    if (occurrences(r, g) != 1) continue;
    if (!best.found || r.size() < p.relators[best.relator].size() ||
        (r.size() == p.relators[best.relator].size() && r < p.relators[best.relator])) {
      best.relator = i;
      best.found = true;
    }
  }
  return best;
}

Presentation eliminate(const Presentation& p, const GenSym& g, std::size_t ri) {
  const auto& l = p.relators[ri].letters();
  const auto pos = static_cast<std::size_t>(
      std::find_if(l.begin(), l.end(), [&](const Letter& x) { return x.sym == g; }) - l.begin());
  // r = A g^e B  ~  g^e (B A) = 1
  std::vector<Letter> tail(l.begin() + pos + 1, l.end());
  tail.insert(tail.end(), l.begin(), l.begin() + pos);
  Word ba(std::move(tail));
  const Word value = l[pos].exp > 0 ? invert(ba) : ba;

  std::vector<GenSym> gens;
  for (const auto& h : p.generators)
    if (h != g) gens.push_back(h);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == ri) continue;
    rels.push_back(substitute(p.relators[i], [&](const GenSym& h) -> std::optional<Word> {
      if (h == g) return value;
      return std::nullopt;
    }));
  }
  return make_presentation(p.name, std::move(gens), rels);
}

}  // namespace

Presentation tietze_eliminate(const Presentation& p, const TietzePolicy& policy) {
  Presentation cur = p;
  if (!policy.automatic) {
    for (const auto& g : policy.order) {
      if (!cur.has_generator(g))
        fail_domain("cannot eliminate '" + to_string(g) + "': not a generator");
      auto c = eligible_relator(cur, g);
      if (!c.found)
        fail_domain("cannot eliminate '" + to_string(g) + "': no relator contains it exactly once");
      cur = eliminate(cur, g, c.relator);
    }
    return cur;
  }
  for (;;) {
    std::vector<GenSym> order = cur.generators;
    std::stable_sort(order.begin(), order.end(), [](const GenSym& a, const GenSym& b) {
      const bool ca = a.family() == Family::custom, cb = b.family() == Family::custom;
      if (ca != cb) return ca;
      return a < b;
    });
    bool progressed = false;
    for (const auto& g : order) {
      auto c = eligible_relator(cur, g);
      if (!c.found) continue;
      cur = eliminate(cur, g, c.relator);
      progressed = true;
      break;
    }
    if (!progressed) return cur;
  }
}

std::vector<Word> sorted_relators(const Presentation& p) {
  std::vector<Word> r = p.relators;
  std::sort(r.begin(), r.end());
  return r;
}

bool same_relator_set(const Presentation& p, const Presentation& q,
                      const std::map<GenSym, GenSym>& rename) {
  if (rename.size() != p.generators.size() || p.generators.size() != q.generators.size())
    fail_domain("rename map is not a bijection between the generator sets");
  std::set<GenSym> image;
  for (const auto& g : p.generators) {
    auto it = rename.find(g);
    if (it == rename.end()) fail_domain("rename map misses generator '" + to_string(g) + "'");
    if (!q.has_generator(it->second))
      fail_domain("rename target '" + to_string(it->second) + "' is not a generator of " + q.name);
    image.insert(it->second);
  }
  if (image.size() != q.generators.size()) fail_domain("rename map is not injective");

  std::vector<Word> mapped;
  for (const auto& r : p.relators) {
    mapped.push_back(relator_canonical(substitute(r, [&](const GenSym& g) -> std::optional<Word> {
      return Word(rename.at(g));
    })));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == sorted_relators(q);
}

bool same_relator_set(const Presentation& p, const Presentation& q) {
  std::map<GenSym, GenSym> id;
  for (const auto& g : p.generators) id[g] = g;
  return same_relator_set(p, q, id);
}

}  // namespace vsym

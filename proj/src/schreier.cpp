#include "vsym/schreier.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "vsym/errors.hpp"

namespace vsym {

int SchreierTransversal::index_of_word(const Word& w) const {
  auto it = std::find(words.begin(), words.end(), w);
  return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

void validate(const SchreierTransversal& t) {
  const int order = t.quotient.target->order();
  if (static_cast<int>(t.words.size()) != order || static_cast<int>(t.elements.size()) != order)
    fail_domain("transversal size differs from the quotient order");
  std::vector<int> hit(order, 0);
  for (std::size_t k = 0; k < t.words.size(); ++k) {
    const int e = eval(t.quotient, t.words[k]);
    if (e != t.elements[k]) fail_domain("representative " + to_string(t.words[k]) + " has the wrong image");
    if (hit[e]++) fail_domain("two representatives for one coset");
    if (t.rep_of[e] != static_cast<int>(k)) fail_domain("rep_of table out of sync");
  }
  if (!t.words[t.rep_of[0]].empty()) fail_domain("identity coset must be represented by the empty word");
  std::set<Word> all(t.words.begin(), t.words.end());
  for (const auto& w : t.words)
    for (std::size_t len = 0; len < w.size(); ++len) {
      Word prefix(std::vector<Letter>(w.begin(), w.begin() + len));
      if (!all.count(prefix)) fail_domain("transversal is not prefix closed at " + to_string(w));
    }
}

namespace {

SchreierTransversal assemble(QuotientMap q, std::vector<Word> words) {
  SchreierTransversal t;
  t.quotient = std::move(q);
  t.rep_of.assign(t.quotient.target->order(), -1);
  for (auto& w : words) {
    const int e = eval(t.quotient, w);
    if (t.rep_of[e] >= 0) fail_domain("two representatives for one coset");
    t.rep_of[e] = static_cast<int>(t.words.size());
    t.elements.push_back(e);
    t.words.push_back(std::move(w));
  }
  validate(t);
  return t;
}

}  // namespace

SchreierTransversal transversal_m2(const Presentation& p, const GenSym& split) {
  if (!(split == s(1) || split == y(1)))
    fail_domain("split generator must be s1 or y1, got " + to_string(split));
  if (!p.has_generator(split) || !p.has_generator(rho(1)))
    fail_domain(p.name + " lacks " + to_string(split) + " or rho1");
  for (const auto& g : p.generators)
    if (g.family() != Family::rho && g.family() != split.family())
      fail_domain("m2 transversal needs a virtual twin or triplet presentation; found " + to_string(g));
  auto q = parity_map(p);
  if (auto h = check_homomorphism(q); !h.ok)
    fail_domain("parity map does not factor through " + p.name + ": " + to_string(h.failing.front()));
  return assemble(std::move(q), {Word(), Word(split), Word(rho(1)), Word({Letter{split, 1}, Letter{rho(1), 1}})});
}

SchreierTransversal transversal_mn(int n, const Presentation& domain) {
  if (n < 2) fail_domain("transversal_mn needs n >= 2");
  auto q = projection_to_symmetric(n, domain);
  std::vector<Word> words;
  std::vector<int> idx(n, 0);  // idx[k] = i_k, 1 <= k <= n-1
  for (int k = 1; k < n; ++k) idx[k] = k;
  for (;;) {
    std::vector<Letter> l;
    for (int k = 1; k < n; ++k)
      for (int j = k; j > idx[k]; --j) l.push_back({rho(j), 1});
    words.emplace_back(std::move(l));
    int k = n - 1;
    while (k >= 1 && idx[k] == 0) {
      idx[k] = k;
      --k;
    }
    if (k < 1) break;
    --idx[k];
  }
  return assemble(std::move(q), std::move(words));
}

SchreierTransversal transversal_trivial(const Presentation& p) {
  QuotientMap q;
  q.domain = p;
  q.target = std::make_shared<FiniteGroup>(FiniteGroup::trivial());
  for (const auto& g : p.generators) q.assignment[g] = 0;
  return assemble(std::move(q), {Word()});
}

Word representative(const SchreierTransversal& t, const Word& w) {
  return t.rep_for(eval(t.quotient, w));
}

SchreierRewriter::SchreierRewriter(SchreierTransversal t, std::vector<GenSym> generators,
                                   const GammaAliases& aliases)
    : t_(std::move(t)), gens_(std::move(generators)) {
  std::set<GenSym> used;
  for (std::size_t r = 0; r < t_.size(); ++r) {
    for (std::size_t a = 0; a < gens_.size(); ++a) {
      RSGenerator g;
      g.mu = t_.words[r];
      g.a = gens_[a];
      g.rep_index = static_cast<int>(r);
      g.gen_index = static_cast<int>(a);
      const int target = t_.quotient.target->mul(t_.elements[r], t_.quotient.image(gens_[a]));
      g.value = g.mu * Word(g.a) * invert(t_.rep_for(target));
      if (!g.value.empty()) {
        auto it = aliases.find({g.mu, g.a});
        GenSym sym = it != aliases.end()
                         ? it->second
                         : GenSym::custom("g" + std::to_string(r) + "_" + std::to_string(a));
        if (!used.insert(sym).second) fail_domain("gamma symbol '" + to_string(sym) + "' assigned twice");
        by_symbol_[sym] = table_.size();
        g.symbol = sym;
      }
      table_.push_back(std::move(g));
    }
  }
}

int SchreierRewriter::gen_pos(const GenSym& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) fail_domain("'" + to_string(g) + "' is not a generator of the ambient group");
  return static_cast<int>(it - gens_.begin());
}

const RSGenerator& SchreierRewriter::gamma(int rep, int gen) const {
  return table_.at(static_cast<std::size_t>(rep) * gens_.size() + gen);
}

RSGenerator SchreierRewriter::gamma(const Word& mu, const GenSym& a) const {
  const int r = t_.index_of_word(mu);
  if (r < 0) fail_domain(to_string(mu) + " is not a representative");
  return gamma(r, gen_pos(a));
}

std::vector<RSGenerator> SchreierRewriter::nontrivial() const {
  std::vector<RSGenerator> out;
  for (const auto& g : table_)
    if (!g.trivial()) out.push_back(g);
  return out;
}

std::vector<GenSym> SchreierRewriter::symbols() const {
  std::vector<GenSym> out;
  for (const auto& g : table_)
    if (g.symbol) out.push_back(*g.symbol);
  return out;
}

std::optional<Word> SchreierRewriter::value_of(const GenSym& symbol) const {
  auto it = by_symbol_.find(symbol);
  if (it == by_symbol_.end()) return std::nullopt;
  return table_[it->second].value;
}

Word SchreierRewriter::tau(const std::vector<Letter>& raw) const {
  const auto& grp = *t_.quotient.target;
  std::vector<Letter> out;
  int state = 0;
  for (const auto& l : raw) {
    const int gi = gen_pos(l.sym);
    const int img = t_.quotient.image(l.sym);
    if (l.exp > 0) {
      const auto& g = gamma(t_.rep_of[state], gi);
      if (g.symbol) out.push_back({*g.symbol, 1});
      state = grp.mul(state, img);
    } else {
      state = grp.mul(state, grp.inv(img));
      const auto& g = gamma(t_.rep_of[state], gi);
      if (g.symbol) out.push_back({*g.symbol, -1});
    }
  }
  if (state != 0) fail_domain("word does not lie in the subgroup");
  return Word(std::move(out));
}

Word SchreierRewriter::expand(const Word& gamma_word) const {
  return substitute(gamma_word, [&](const GenSym& g) -> std::optional<Word> {
    auto v = value_of(g);
    if (!v) fail_domain("'" + to_string(g) + "' is not a gamma symbol");
    return v;
  });
}

RSGenerator gamma(const SchreierTransversal& t, const Word& mu, const GenSym& a) {
  return SchreierRewriter(t, t.quotient.domain.generators).gamma(mu, a);
}

Word tau_rewrite(const SchreierTransversal& t, const Word& w) {
  return SchreierRewriter(t, t.quotient.domain.generators).tau(w);
}

Presentation subgroup_presentation(const Presentation& p, const SchreierTransversal& t,
                                   const GammaAliases& aliases, int jobs) {
  SchreierRewriter rw(t, p.generators, aliases);
  const std::size_t nr = p.relators.size();
  const std::size_t total = t.size() * nr;
  std::vector<Word> rels(total);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < total; k += step) {
      const Word& mu = t.words[k / nr];
      const Word& r = p.relators[k % nr];
      std::vector<Letter> raw(mu.letters());
      raw.insert(raw.end(), r.begin(), r.end());
      const Word mi = invert(mu);
      raw.insert(raw.end(), mi.begin(), mi.end());
      rels[k] = rw.tau(raw);
    }
  };
  const std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  if (nj == 1 || total < 64) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < nj; ++j) pool.emplace_back(work, j, nj);
    for (auto& th : pool) th.join();
  }
  return make_presentation(p.name + "/subgroup", rw.symbols(), rels);
}

GammaAliases paper_aliases(const Presentation& p) {
  const bool twin = p.has_generator(s(1));
  const bool triplet = p.has_generator(y(1));
  if (twin == triplet) fail_domain("conventional aliases need exactly one of s1, y1 in " + p.name);
  const GenSym split = twin ? s(1) : y(1);
  int n = 1;
  while (p.has_generator(rho(n))) ++n;  // rho_1 .. rho_{n-1}
  GammaAliases a;
  const Word one;
  const Word sp(split);
  for (int i = 2; i < n; ++i) {
    a[{one, rho(i)}] = twin ? x(i) : alpha(i);
    const std::string stem = twin ? "z" : "beta";
    a[{sp, rho(i)}] = i == 2 ? (twin ? z() : beta()) : GenSym::custom(stem + std::to_string(i));
  }
  a[{Word(rho(1)), split}] = twin ? w() : delta();
  return a;
}

CommutatorRewrite commutator_by_rewriting(const Presentation& p, int jobs, const TietzePolicy& policy) {
  const GenSym split = p.has_generator(s(1)) ? s(1) : y(1);
  CommutatorRewrite out{{}, {}, transversal_m2(p, split)};
  out.raw = subgroup_presentation(p, out.transversal, paper_aliases(p), jobs);
  out.reduced = tietze_eliminate(out.raw, policy);
  return out;
}

Word pure_to_kappa(int n, const Word& word) {
  std::vector<int> q(n);
  for (int i = 0; i < n; ++i) q[i] = i;
  std::vector<Letter> out;
  for (const auto& l : word) {
    const auto f = l.sym.family();
    if (f != Family::y && f != Family::rho)
      fail_domain("pure_to_kappa accepts only y and rho letters, got " + to_string(l.sym));
    const int i = l.sym.index1();
    if (i >= n) fail_domain(to_string(l.sym) + " is out of range for n = " + std::to_string(n));
    if (f == Family::y) {
      const int a = q[i - 1], b = q[i];
      out.push_back(a < b ? Letter{kappa(a + 1, b + 1), 1} : Letter{kappa(b + 1, a + 1), -1});
    }
    std::swap(q[i - 1], q[i]);  // q <- q o tau_i
  }
  for (int i = 0; i < n; ++i)
    if (q[i] != i) fail_domain("word is not pure: its permutation image is nontrivial");
  return Word(std::move(out));
}

Presentation pvl_by_rewriting(int n, int jobs) {
  const Presentation p = family(Kind::virtual_triplet, n);
  auto t = transversal_mn(n, p);
  const Presentation sub = subgroup_presentation(p, t, {}, jobs);
  SchreierRewriter rw(t, p.generators);
  std::map<GenSym, Word> image;
  std::set<GenSym> kappas;
  for (const auto& g : rw.nontrivial()) {
    Word k = pure_to_kappa(n, g.value);
    for (const auto& l : k) kappas.insert(l.sym);
    image.emplace(*g.symbol, std::move(k));
  }
  std::vector<Word> rels;
  for (const auto& r : sub.relators)
    rels.push_back(substitute(r, [&](const GenSym& g) -> std::optional<Word> { return image.at(g); }));
  return make_presentation("PVL_" + std::to_string(n) + "/rewritten",
                           std::vector<GenSym>(kappas.begin(), kappas.end()), rels);
}

}  // namespace vsym

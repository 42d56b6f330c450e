#include "vsym/quotients.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "vsym/errors.hpp"

namespace vsym {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) fail_domain("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  if (i < 0 || j < 0 || i >= n || j >= n) fail_domain("transposition point out of range");
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n)
    fail_domain("tau_" + std::to_string(i) + " is not defined in S_" + std::to_string(n));
  return transposition(n, i - 1, i);
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> v;
  for (int x : one_based) v.push_back(x - 1);
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> v;
  for (int x : img_) v.push_back(x + 1);
  return v;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

long long Permutation::order() const {
  long long o = 1;
  for (int l : cycle_type()) o = std::lcm(o, static_cast<long long>(l));
  return o;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail_domain("permutation degree mismatch");
  std::vector<int> v(a.degree());
  for (int i = 0; i < a.degree(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

Permutation pow(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  Permutation r = Permutation::identity(p.degree());
  for (long long e = std::llabs(k); e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    base = base * base;
  }
  return r;
}

std::string to_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::string perm_key(const Permutation& p) {
  return std::string(p.images().begin(), p.images().end());
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::uint32_t> table, int order)
    : name_(std::move(name)), n_(order), table_(std::move(table)), inv_(order, -1) {
  if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_)
    fail_domain("multiplication table has wrong size");
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) fail_domain("element 0 must be the identity");
    for (int b = 0; b < n_; ++b) {
      if (table_[static_cast<std::size_t>(a) * n_ + b] >= static_cast<std::uint32_t>(n_))
        fail_domain("table entry out of range");
      if (mul(a, b) == 0) inv_[a] = b;
    }
    if (inv_[a] < 0) fail_domain("element without inverse in table");
  }
}

void FiniteGroup::index_permutations(std::vector<Permutation> perms) {
  perms_ = std::move(perms);
  for (int i = 0; i < n_; ++i) perm_index_[perm_key(perms_[i])] = i;
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = perm_index_.find(perm_key(p));
  if (it == perm_index_.end()) fail_domain("permutation " + to_string(p) + " is not in " + name_);
  return it->second;
}

FiniteGroup FiniteGroup::generated_by(std::string name, const std::vector<Permutation>& gens) {
  if (gens.empty()) return trivial();
  const int deg = gens.front().degree();
  std::vector<Permutation> elems{Permutation::identity(deg)};
  std::unordered_map<std::string, int> index{{perm_key(elems[0]), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto p = elems[i] * g;
      if (index.emplace(perm_key(p), static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > 5040) throw BudgetError("permutation group too large to tabulate");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(perm_key(elems[a] * elems[b]));
  FiniteGroup g(std::move(name), std::move(table), n);
  g.index_permutations(std::move(elems));
  return g;
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1) fail_domain("S_k needs k >= 1");
  if (k > 6) throw BudgetError("S_" + std::to_string(k) + " is too large to tabulate (k <= 6)");
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> elems;
  do elems.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  const int n = static_cast<int>(elems.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[perm_key(elems[i])] = i;
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(perm_key(elems[a] * elems[b]));
  FiniteGroup g("S" + std::to_string(k), std::move(table), n);
  g.index_permutations(std::move(elems));
  return g;
}

FiniteGroup FiniteGroup::elementary_abelian2(int k) {
  if (k < 0 || k > 12) fail_domain("Z2^k needs 0 <= k <= 12");
  const int n = 1 << k;
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = a ^ b;
  std::string name = k == 2 ? "Z2xZ2" : k == 1 ? "Z2" : "Z2^" + std::to_string(k);
  return FiniteGroup(name, std::move(table), n);
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("trivial", {0u}, 1); }

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "trivial" || name == "1") return trivial();
  if (name == "Z2") return elementary_abelian2(1);
  if (name == "Z2xZ2") return elementary_abelian2(2);
  if (name == "A4")
    return generated_by("A4", {Permutation::from_one_line({2, 3, 1, 4}),
                               Permutation::from_one_line({2, 1, 4, 3})});
  if (name == "D4")
    return generated_by("D4", {Permutation::from_one_line({2, 3, 4, 1}),
                               Permutation::from_one_line({3, 2, 1, 4})});
  if (name.size() > 3 && name.rfind("Z2^", 0) == 0) return elementary_abelian2(std::stoi(name.substr(3)));
  if (name.size() == 2 && name[0] == 'S' && std::isdigit(static_cast<unsigned char>(name[1])))
    return symmetric(name[1] - '0');
  throw ParseError("unknown target group '" + name + "'");
}

int QuotientMap::image(const GenSym& g) const {
  auto it = assignment.find(g);
  if (it == assignment.end()) fail_domain("generator '" + to_string(g) + "' is not assigned");
  return it->second;
}

int eval(const QuotientMap& m, const std::vector<Letter>& raw) {
  int acc = 0;
  for (const auto& l : raw) {
    int e = m.image(l.sym);
    acc = m.target->mul(acc, l.exp > 0 ? e : m.target->inv(e));
  }
  return acc;
}

int eval(const QuotientMap& m, const Word& w) { return eval(m, w.letters()); }

HomCheck check_homomorphism(const QuotientMap& m) {
  HomCheck res;
  for (const auto& r : m.domain.relators)
    if (eval(m, r) != 0) {
      res.ok = false;
      res.failing.push_back(r);
    }
  return res;
}

namespace {

std::shared_ptr<const FiniteGroup> cached_symmetric(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const FiniteGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(n));
  return slot;
}

}  // namespace

QuotientMap projection_to_symmetric(int n, const Presentation& domain) {
  QuotientMap m;
  m.domain = domain;
  m.target = cached_symmetric(n);
  for (int i = 1; i < n; ++i) {
    const int t = m.target->index_of(Permutation::adjacent(n, i));
    for (auto g : {sigma(i), s(i), y(i), rho(i), tau(i)}) m.assignment[g] = t;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        m.assignment[kappa(i, j)] = 0;
        m.assignment[lambda(i, j)] = 0;
      }
  return m;
}

QuotientMap parity_map(const Presentation& domain) {
  QuotientMap m;
  m.domain = domain;
  m.target = std::make_shared<FiniteGroup>(FiniteGroup::elementary_abelian2(2));
  for (const auto& g : domain.generators) {
    switch (g.family()) {
      case Family::rho:
        m.assignment[g] = 2;
        break;
      case Family::s:
      case Family::y:
      case Family::sigma:
        m.assignment[g] = 1;
        break;
      default:
        fail_domain("parity map is not defined on generator '" + to_string(g) + "'");
    }
  }
  return m;
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<int, bool>> letters;  // (generator index, inverted)
  int depth;                                  // largest generator index used
};

class HomCounter {
 public:
  HomCounter(const Presentation& p, const FiniteGroup& g) : grp_(g), ngen_(static_cast<int>(p.generators.size())) {
    by_depth_.resize(ngen_);
    for (const auto& r : p.relators) {
      CompiledRelator c{{}, -1};
      for (const auto& l : r) {
        int gi = p.generator_index(l.sym);
        c.letters.push_back({gi, l.exp < 0});
        c.depth = std::max(c.depth, gi);
      }
      by_depth_[c.depth].push_back(std::move(c));
    }
  }

  std::uint64_t count_from(int first_choice) const {
    std::vector<int> assign(ngen_), inv(ngen_);
    return descend(0, first_choice, assign, inv);
  }

  int ngen() const { return ngen_; }

 private:
  const FiniteGroup& grp_;
  int ngen_;
  std::vector<std::vector<CompiledRelator>> by_depth_;

  bool holds(int depth, const std::vector<int>& a, const std::vector<int>& ai) const {
    for (const auto& r : by_depth_[depth]) {
      int acc = 0;
      for (auto [gi, neg] : r.letters) acc = grp_.mul(acc, neg ? ai[gi] : a[gi]);
      if (acc != 0) return false;
    }
    return true;
  }

  std::uint64_t descend(int k, int fixed, std::vector<int>& a, std::vector<int>& ai) const {
    if (k == ngen_) return 1;
    std::uint64_t total = 0;
    const int lo = (k == 0) ? fixed : 0;
    const int hi = (k == 0) ? fixed + 1 : grp_.order();
    for (int e = lo; e < hi; ++e) {
      a[k] = e;
      ai[k] = grp_.inv(e);
      if (holds(k, a, ai)) total += descend(k + 1, fixed, a, ai);
    }
    return total;
  }
};

}  // namespace

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& target, const HomCountOptions& opt) {
  const double tuples = std::pow(static_cast<double>(target.order()), static_cast<double>(p.generators.size()));
  if (tuples > opt.budget)
    throw BudgetError("hom_count would enumerate " + std::to_string(target.order()) + "^" +
                      std::to_string(p.generators.size()) + " assignments, above the budget");
  if (p.generators.empty()) return 1;  // relators of an empty generator set are all trivial
  HomCounter hc(p, target);
  const int n = target.order();
  const int jobs = std::max(1, std::min(opt.jobs, n));
  std::vector<std::uint64_t> partial(n, 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int e; (e = next.fetch_add(1)) < n;) partial[e] = hc.count_from(e);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace vsym

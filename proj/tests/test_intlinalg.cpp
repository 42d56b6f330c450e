#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "support.hpp"
#include "vsym/intlinalg.hpp"
#include "vsym/quotients.hpp"

using namespace vsym;
using testing_support::W;

namespace {

// Fraction-free (Bareiss) determinant.
mpz_class det(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Oracle: d_1 ... d_k = gcd of the k x k minors.
std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(static_cast<int>(m.rows()), k, 0, cur, rs);
    subsets(static_cast<int>(m.cols()), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        mpz_class d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? mpz_class(0) : mpz_class(g / prev));
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u = IntMatrix::Identity(n, n);
  std::uniform_int_distribution<int> pick(0, n - 1), q(-3, 3);
  for (int k = 0; k < 3 * n; ++k) {
    const int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    u.row(a) += mpz_class(q(rng)) * u.row(b);
  }
  return u;
}

bool is_diagonal_chain(const IntMatrix& d) {
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const Eigen::Index k = std::min(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    if (i + 1 < k && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
  }
  return true;
}

// Oracle for |G / gamma_3(G)| on a permutation group: explicit closures.
using Perm = std::vector<int>;
Perm mul(const Perm& a, const Perm& b) {  // a o b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}
Perm inv(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}
std::set<Perm> closure(std::set<Perm> gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> g{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (const auto& b : gens) {
        auto c = mul(a, b);
        if (g.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return g;
}
std::set<Perm> commutator_subgroup(const std::set<Perm>& a, const std::set<Perm>& b, std::size_t degree) {
  std::set<Perm> gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.insert(mul(mul(x, y), mul(inv(x), inv(y))));
  return closure(gens, degree);
}
std::pair<std::size_t, std::size_t> lower_central_indices(const std::vector<Perm>& gens) {
  const std::size_t d = gens.front().size();
  const auto g = closure({gens.begin(), gens.end()}, d);
  const auto g2 = commutator_subgroup(g, g, d);
  const auto g3 = commutator_subgroup(g, g2, d);
  return {g.size() / g2.size(), g.size() / g3.size()};
}

Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

// Left regular representation of Q8 = {+-1, +-i, +-j, +-k}.
std::vector<Perm> quaternion_generators() {
  // index = 4 * negative + unit, unit 0..3 = 1, i, j, k
  const int table[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                              {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                              {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                              {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
  auto left = [&](int u) {
    Perm p(8);
    for (int e = 0; e < 8; ++e) {
      const int neg = e / 4, v = e % 4;
      const auto& r = table[u][v];
      p[e] = 4 * ((neg + r[1]) % 2) + r[0];
    }
    return p;
  };
  return {left(1), left(2)};
}

Presentation two_generator(const char* name, std::vector<Word> rels) {
  const GenSym a = GenSym::custom("a"), b = GenSym::custom("b");
  return make_presentation(name, {a, b}, rels);
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  IntMatrix m(2, 2);
  m << 2, 0, 0, 0;
  auto r = smith_normal_form(m);
  CHECK(r.D == m);
  CHECK(r.U == IntMatrix::Identity(2, 2));
  CHECK(r.V == IntMatrix::Identity(2, 2));

  m << 2, 4, 6, 8;
  r = smith_normal_form(m);
  CHECK(r.diagonal() == std::vector<mpz_class>{2, 4});
  CHECK(invariant_factors_by_minors(m) == std::vector<mpz_class>{2, 4});
  CHECK(r.U * m * r.V == r.D);
}

TEST_CASE("Smith normal form against minors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 2 + trial % 4, cols = 2 + (trial / 4) % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 9);
    const auto r = smith_normal_form(m);
    CHECK(r.U * m * r.V == r.D);
    CHECK(abs(det(r.U)) == 1);
    CHECK(abs(det(r.V)) == 1);
    CHECK(is_diagonal_chain(r.D));
    CHECK(r.diagonal() == invariant_factors_by_minors(m));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 5, 9);
    CHECK(smith_normal_form(m).diagonal() == invariant_factors_by_minors(m));
  }
}

TEST_CASE("Smith normal form is invariant under unimodular changes") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 6, 5);
    const IntMatrix n = random_unimodular(rng, 4) * m * random_unimodular(rng, 6);
    CHECK(cokernel_invariants(m) == cokernel_invariants(n));
  }
}

TEST_CASE("Smith normal form on machine integers") {
  Mat<long long> m(3, 3);
  m << 4, 6, 8, 6, 9, 12, 2, 3, 5;
  const auto r = smith_normal_form(m);
  CHECK(r.U * m * r.V == r.D);
  CHECK(r.diagonal() == std::vector<long long>{1, 1, 0});
}

TEST_CASE("abelian invariants") {
  AbelianInvariants a{{2, 2}, 1};
  CHECK(a.describe() == "Z2 + Z2 + Z");
  CHECK_FALSE(a.finite());
  CHECK(AbelianInvariants{{2, 6}, 0}.order() == 12);
  CHECK(AbelianInvariants{}.describe() == "0");

  for (int n : {3, 4, 5}) {
    CHECK(abelianization(family(Kind::virtual_triplet, n)) == AbelianInvariants{{2, 2}, 0});
    CHECK(abelianization(family(Kind::virtual_twin, n)) == AbelianInvariants{{2, 2}, 0});
    CHECK(abelianization(family(Kind::pvl, n)) == AbelianInvariants{{}, n * (n - 1) / 2});
  }
  CHECK(abelianization(family(Kind::vt_commutator, 3)) == AbelianInvariants{{3, 3}, 1});
  CHECK(abelianization(family(Kind::braid, 4)) == AbelianInvariants{{}, 1});
}

TEST_CASE("class-two quotients of free and free abelian groups") {
  const GenSym a = GenSym::custom("a"), b = GenSym::custom("b"), c = GenSym::custom("c");
  auto q = class2_quotient(make_presentation("Z2", {a, b}, {commutator(Word(a), Word(b))}));
  CHECK(q.abelian == AbelianInvariants{{}, 2});
  CHECK(q.central == AbelianInvariants{});

  q = class2_quotient(make_presentation("F3", {a, b, c}, {}));
  CHECK(q.abelian == AbelianInvariants{{}, 3});
  CHECK(q.central == AbelianInvariants{{}, 3});
  CHECK_FALSE(q.order);
}

TEST_CASE("class-two quotients against permutation groups") {
  struct Case {
    Presentation p;
    std::vector<Perm> gens;
  };
  const std::vector<Case> cases{
      {two_generator("S3", {W("a a a"), W("b b"), W("a b a b")}), {from_cycles(3, {{0, 1, 2}}), from_cycles(3, {{0, 1}})}},
      {two_generator("D4", {W("a a a a"), W("b b"), W("a b a b")}), {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 2}})}},
      {two_generator("D8", {power(W("a"), 8), W("b b"), W("a b a b")}),
       {from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), from_cycles(8, {{0, 7}, {1, 6}, {2, 5}, {3, 4}})}},
      {two_generator("Q8", {W("a a a a"), W("a a b^-1 b^-1"), W("b^-1 a b a")}), quaternion_generators()},
      {two_generator("H27", {W("a a a"), W("b b b"), power(W("a b a^-1 b^-1"), 3),
                             commutator(W("a"), W("a b a^-1 b^-1")), commutator(W("b"), W("a b a^-1 b^-1"))}),
       // (x, y) -> (x + 1, y) and (x, y) -> (x, y + x) on Z3^2
       [] {
         Perm a(9), b(9);
         for (int x = 0; x < 3; ++x)
           for (int y = 0; y < 3; ++y) {
             a[3 * x + y] = 3 * ((x + 1) % 3) + y;
             b[3 * x + y] = 3 * x + (y + x) % 3;
           }
         return std::vector<Perm>{a, b};
       }()},
  };
  for (const auto& c : cases) {
    const auto [ab_index, g3_index] = lower_central_indices(c.gens);
    const auto q = class2_quotient(c.p);
    INFO(c.p.name);
    REQUIRE(q.order);
    CHECK(*q.abelian.order() == ab_index);
    CHECK(*q.order == g3_index);
  }
}

TEST_CASE("class-two quotients of the triplet and virtual families") {
  for (int n : {3, 4, 5}) {
    CHECK(class2_quotient(family(Kind::triplet, n)).order == mpz_class(2));
  }
  for (int n : {4, 5}) {
    CHECK(class2_quotient(family(Kind::virtual_twin, n)).order == mpz_class(4));
    CHECK(class2_quotient(family(Kind::virtual_triplet, n)).order == mpz_class(4));
  }
  // For n = 3 both groups map onto D4 (all rho to one reflection, all s or y
  // to another), so gamma_2 / gamma_3 is not trivial there.
  for (Kind k : {Kind::virtual_twin, Kind::virtual_triplet}) {
    const auto q = class2_quotient(family(k, 3));
    CHECK(q.central == AbelianInvariants{{2}, 0});
    CHECK(q.order == mpz_class(8));
  }
}

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "vsym/crysto.hpp"
#include "vsym/io.hpp"

using namespace vsym;
using testing_support::W;

namespace {

using Elem = CrystoElement<long long>;

Vec<long long> unit(int n, int i, int j, long long c = 1) {
  const PairIndexer idx(n);
  Vec<long long> v = Vec<long long>::Zero(idx.dim());
  v(idx.index(i, j)) = c;
  return v;
}

// Matrix of a permutation on pairs, straight from the rule, without words.
Eigen::MatrixXi rule_matrix(const Permutation& s) {
  const int n = s.degree();
  const PairIndexer idx(n);
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(idx.dim(), idx.dim());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int p = s(i - 1) + 1, q = s(j - 1) + 1;
      m(idx.index(std::min(p, q), std::max(p, q)), idx.index(i, j)) = p < q ? 1 : -1;
    }
  return m;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Elem random_element(std::mt19937_64& rng, int n, int bound) {
  const PairIndexer idx(n);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  std::uniform_int_distribution<long long> c(-bound, bound);
  Elem e{Vec<long long>::Zero(idx.dim()), Permutation(img)};
  for (int k = 0; k < idx.dim(); ++k) e.v(k) = c(rng);
  return e;
}

}  // namespace

TEST_CASE("pair indexing") {
  const PairIndexer idx(4);
  CHECK(idx.dim() == 6);
  CHECK(idx.index(1, 2) == 0);
  CHECK(idx.index(3, 4) == 5);
  CHECK(idx.pair(3) == std::pair{2, 3});
  CHECK_THROWS_AS(idx.index(2, 2), RangeError);
  CHECK_THROWS_AS(idx.index(3, 5), RangeError);
  CHECK_THROWS_AS(idx.index(0, 1), RangeError);
}

TEST_CASE("action on pairs") {
  const auto t1 = Permutation::adjacent(3, 1);
  CHECK(act(t1, unit(3, 1, 2)) == unit(3, 1, 2, -1));
  CHECK(act(t1, unit(3, 1, 3)) == unit(3, 2, 3));
  CHECK(act(t1, unit(3, 2, 3)) == unit(3, 1, 3));
  for (int n = 2; n <= 5; ++n) {
    const auto spec = ActionSpec::virtual_triplet(n);
    CHECK(spec.coxeter_relations_hold());
    for (const auto& s : all_permutations(n)) {
      REQUIRE(spec.matrix(s) == rule_matrix(s));
      Permutation back = Permutation::identity(n);
      for (int l : adjacent_word(s)) back = back * Permutation::adjacent(n, l);
      REQUIRE(back == s);
    }
  }
}

TEST_CASE("the action is a homomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = random_element(rng, n, 5), b = random_element(rng, n, 5);
    CHECK(act(a.sigma * b.sigma, a.v) == act(a.sigma, act(b.sigma, a.v)));
    const auto spec = ActionSpec::virtual_triplet(n);
    CHECK(act(spec, b.sigma, a.v) == act(b.sigma, a.v));
  }
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = random_element(rng, n, 4), b = random_element(rng, n, 4), c = random_element(rng, n, 4);
    const auto one = Elem::identity(n);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)) == one);
    CHECK(multiply(inverse(a), a) == one);
    CHECK(multiply(one, a) == a);
    CHECK(power(a, 3) == multiply(a, multiply(a, a)));
    CHECK(power(a, -2) == inverse(power(a, 2)));
  }
}

TEST_CASE("element orders") {
  const auto t1 = Permutation::adjacent(3, 1);
  const Elem a{unit(3, 1, 2), t1};
  CHECK(multiply(a, a) == Elem::identity(3));
  CHECK(order(a) == 2);
  CHECK_FALSE(order(Elem{unit(3, 1, 3), t1}));
  CHECK(order(Elem::identity(4)) == 1);
  CHECK_FALSE(order(Elem{unit(3, 1, 2), Permutation::identity(3)}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    auto e = random_element(rng, n, 2);
    if (trial % 2) e.v = e.v - act(e.sigma, e.v);  // coboundary: always finite order
    const auto o = order(e);
    CHECK(o == order_by_orbits(e));
    CHECK(o == order_naive(e, 12));
    if (trial % 2) CHECK(o == e.sigma.order());
  }
}

TEST_CASE("orbit representatives") {
  CHECK(orbit_representatives(Permutation::adjacent(4, 1)) ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {3, 4}});
  CHECK(orbit_representatives(Permutation::identity(3)).size() == 3);
  CHECK(orbit_representatives(Permutation::from_one_line({2, 3, 1})) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("torsion blocks") {
  const auto b2 = torsion_blocks(3, {2});
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].closure == -1);
  CHECK(b2[0].solved == -1);
  CHECK(b2[0].free_count() == 1);

  const auto b3 = torsion_blocks(3, {3});
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].orbit.size() == 3);
  CHECK(b3[0].closure == 1);
  CHECK(b3[0].free_count() == 2);
  CHECK(torsion_free_parameters(3, {3}) == 2);

  CHECK_THROWS_AS(torsion_blocks(4, {2, 3}), DomainError);
  CHECK_THROWS_AS(torsion_blocks(4, {1}), DomainError);
}

TEST_CASE("torsion elements") {
  const auto e = torsion_element<long long>(5, {2, 3});
  CHECK(e.sigma.cycle_type() == std::vector<int>{3, 2});
  CHECK(order(e) == 6);

  std::set<std::vector<long long>> seen;
  for (long long k = 0; k < 100; ++k) {
    const auto t = torsion_element<long long>(3, {2}, {k});
    CHECK(order(t) == 2);
    seen.insert({t.v.begin(), t.v.end()});
  }
  CHECK(seen.size() == 100);

  CHECK_NOTHROW(torsion_element<long long>(3, {3}, {0, 0, 0}));
  CHECK_THROWS_AS(torsion_element<long long>(3, {3}, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(torsion_element<long long>(3, {3}, {1}), DomainError);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> c(-50, 50);
  const std::vector<std::pair<int, std::vector<int>>> types{{4, {2, 2}}, {4, {4}}, {5, {5}}, {6, {3, 3}}, {6, {2, 4}}};
  for (const auto& [n, ct] : types) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long long> params(torsion_free_parameters(n, ct));
      for (auto& p : params) p = c(rng);
      const auto t = torsion_element<long long>(n, ct, params);
      CHECK(order(t) == t.sigma.order());
      CHECK(order_naive(t, t.sigma.order()) == t.sigma.order());
    }
  }
}

TEST_CASE("big integer scalars") {
  const auto e = torsion_element<mpz_class>(4, {4}, {mpz_class("1000000000000000000000"), 3, -7});
  CHECK(order(e) == 4);
  auto a = CrystoElement<mpz_class>::identity(3);
  a.v(0) = mpz_class("123456789012345678901234567890");
  a.sigma = Permutation::adjacent(3, 2);
  CHECK_FALSE(order(a));
  CHECK(multiply(a, inverse(a)) == CrystoElement<mpz_class>::identity(3));
}

TEST_CASE("folding words") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      const std::string yi = "y" + std::to_string(i), ri = "rho" + std::to_string(i);
      CHECK(fold_word<long long>(n, parse_word(yi + " " + yi)) == Elem::identity(n));
      CHECK(fold_word<long long>(n, parse_word(ri + " " + ri)) == Elem::identity(n));
    }
  CHECK(fold_word<long long>(3, W("k1_3")).v == unit(3, 1, 3));
  CHECK(fold_word<long long>(3, W("k3_1")).v == unit(3, 1, 3, -1));
  CHECK_THROWS_AS(fold_word<long long>(3, W("s1")), DomainError);

  for (int n = 2; n <= 5; ++n)
    for (const auto& r : family(Kind::virtual_triplet, n).relators) {
      INFO(to_string(r));
      CHECK(fold_word<long long>(n, r) == Elem::identity(n));
    }
}

TEST_CASE("holonomy faithfulness") {
  for (int n = 2; n <= 6; ++n) {
    const auto r = holonomy_faithful(n);
    CHECK(r.faithful);
    CHECK(r.checked == std::tgamma(n + 1) - 1);
  }
  const auto control = holonomy_faithful(2, false);
  CHECK_FALSE(control.faithful);
  REQUIRE(control.kernel_element);
  CHECK(*control.kernel_element == Permutation::adjacent(2, 1));
  CHECK(holonomy_faithful(4, false).faithful);
  CHECK_THROWS_AS(holonomy_faithful(9), BudgetError);
  CHECK_THROWS_AS(holonomy_faithful(1), DomainError);
}

TEST_CASE("user-supplied actions") {
  const auto tri = ActionSpec::virtual_triplet(3);
  CHECK_THROWS_AS(ActionSpec(3, {tri.generator(1)}), DomainError);
  CHECK_THROWS_AS(ActionSpec(3, {tri.generator(1), Eigen::MatrixXi::Identity(2, 2)}), DomainError);
  Eigen::MatrixXi bad = Eigen::MatrixXi::Identity(3, 3);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(ActionSpec(3, {tri.generator(1), bad}), DomainError);
  bad = Eigen::MatrixXi::Identity(3, 3) * 2;
  CHECK_THROWS_AS(ActionSpec(3, {tri.generator(1), bad}), DomainError);

  const ActionSpec broken(3, {tri.generator(1), Eigen::MatrixXi::Identity(3, 3)});
  CHECK_FALSE(broken.coxeter_relations_hold());
  const ActionSpec unsigned_spec(3, {to_matrix(unsigned_pair_action(Permutation::adjacent(3, 1))),
                                     to_matrix(unsigned_pair_action(Permutation::adjacent(3, 2)))});
  CHECK(unsigned_spec.coxeter_relations_hold());

  const json j = json::parse(R"({"n": 2, "generators": [[[-1]]]})");
  const auto spec = action_from_json(j);
  CHECK(spec.generator(1) == tri.generator(1).topLeftCorner(1, 1));
  CHECK_THROWS_AS(action_from_json(json::parse(R"({"n": 2, "generators": [[[1, 1]]]})")), DomainError);
}

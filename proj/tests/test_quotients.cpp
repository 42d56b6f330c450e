#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "vsym/errors.hpp"
#include "vsym/quotients.hpp"

using namespace vsym;
using testing_support::W;

namespace {

// Oracle: enumerate generator tuples over all of S_k as explicit
// permutations and compose letter by letter, with no tables.
std::uint64_t naive_hom_count(const Presentation& p, int k) {
  std::vector<Permutation> all;
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  do all.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  const std::size_t g = p.generators.size();
  std::vector<std::size_t> pick(g, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      Permutation acc = Permutation::identity(k);
      for (const auto& l : r) {
        const Permutation& e = all[pick[p.generator_index(l.sym)]];
        acc = acc * (l.exp > 0 ? e : e.inverse());
      }
      if (!acc.is_identity()) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t d = 0;
    while (d < g && ++pick[d] == all.size()) pick[d++] = 0;
    if (d == g) break;
  }
  return count;
}

}  // namespace

TEST_CASE("permutations") {
  const auto p = Permutation::from_one_line({2, 3, 1, 5, 4});
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<int>{3, 2});
  CHECK((p * p.inverse()).is_identity());
  CHECK(pow(p, 6).is_identity());
  CHECK(pow(p, -1) == p.inverse());
  // b is applied first.
  const auto a = Permutation::adjacent(3, 1), b = Permutation::adjacent(3, 2);
  CHECK((a * b)(0) == 1);
  CHECK(to_string(a * b * a) == "(1 3)");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
}

TEST_CASE("evaluation") {
  const auto pi = projection_to_symmetric(3, family(Kind::virtual_triplet, 3));
  const auto& g = *pi.target;
  CHECK(g.permutation(eval(pi, W("y1 rho2 y1"))) == Permutation::transposition(3, 0, 2));
  CHECK(eval(pi, Word()) == 0);

  const auto pk = projection_to_symmetric(3);
  CHECK(eval(pk, W("k1_2")) == 0);
  CHECK(eval(pk, W("y1 rho1")) == 0);

  const auto par = parity_map(family(Kind::virtual_twin, 4));
  CHECK(eval(par, power(W("rho1 s1"), 2)) == 0);
  CHECK(par.target->order() == 4);

  QuotientMap partial = pi;
  partial.assignment.erase(y(2));
  CHECK_THROWS_AS(eval(partial, W("y2")), DomainError);
}

TEST_CASE("homomorphism checks") {
  CHECK(check_homomorphism(projection_to_symmetric(4, family(Kind::virtual_triplet, 4))).ok);

  auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(3));
  QuotientMap m{family(Kind::virtual_triplet, 2), s3, {}};
  m.assignment[y(1)] = s3->index_of(Permutation::from_one_line({2, 1, 3}));
  m.assignment[rho(1)] = s3->index_of(Permutation::from_one_line({3, 2, 1}));
  CHECK(check_homomorphism(m).ok);

  QuotientMap bad{family(Kind::twin, 2), s3, {}};
  bad.assignment[s(1)] = s3->index_of(Permutation::from_one_line({2, 3, 1}));
  const auto h = check_homomorphism(bad);
  CHECK_FALSE(h.ok);
  CHECK(h.failing == std::vector<Word>{W("s1 s1")});
}

TEST_CASE("hom counts against enumeration") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(hom_count(family(Kind::virtual_twin, 2), s3) == naive_hom_count(family(Kind::virtual_twin, 2), 3));
  CHECK(hom_count(family(Kind::virtual_twin, 2), s3) == 16);
  CHECK(hom_count(family(Kind::symmetric, 3), s3) == naive_hom_count(family(Kind::symmetric, 3), 3));
  CHECK(hom_count(family(Kind::braid, 3), s3) == naive_hom_count(family(Kind::braid, 3), 3));
  CHECK(hom_count(family(Kind::virtual_triplet, 3), s3) == naive_hom_count(family(Kind::virtual_triplet, 3), 3));
  CHECK(hom_count(family(Kind::triplet, 3), FiniteGroup::symmetric(4)) ==
        naive_hom_count(family(Kind::triplet, 3), 4));
  CHECK(hom_count(make_presentation("free", {}, {}), s3) == 1);
  CHECK(hom_count(family(Kind::virtual_twin, 4), s3) == hom_count(family(Kind::virtual_twin_reduced, 4), s3));
}

TEST_CASE("hom counts do not depend on the worker count") {
  const auto s4 = FiniteGroup::symmetric(4);
  const auto p = family(Kind::virtual_triplet, 3);
  const auto one = hom_count(p, s4, {1e9, 1});
  CHECK(hom_count(p, s4, {1e9, 3}) == one);
  CHECK(hom_count(p, s4, {1e9, 7}) == one);
}

TEST_CASE("hom count budget") {
  CHECK_THROWS_AS(hom_count(family(Kind::virtual_twin, 6), FiniteGroup::symmetric(5), {1e6, 1}), BudgetError);
}

TEST_CASE("named targets") {
  CHECK(FiniteGroup::by_name("A4").order() == 12);
  CHECK(FiniteGroup::by_name("D4").order() == 8);
  CHECK(FiniteGroup::by_name("Z2^3").order() == 8);
  CHECK(FiniteGroup::by_name("S4").order() == 24);
  CHECK_THROWS_AS(FiniteGroup::by_name("M11"), ParseError);
  CHECK_THROWS_AS(FiniteGroup::symmetric(7), BudgetError);
}

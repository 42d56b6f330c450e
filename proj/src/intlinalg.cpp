#include "vsym/intlinalg.hpp"

#include "vsym/errors.hpp"

namespace vsym {

std::optional<mpz_class> AbelianInvariants::order() const {
  if (!finite()) return std::nullopt;
  mpz_class o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianInvariants::describe() const {
  std::string out;
  for (const auto& d : torsion) out += (out.empty() ? "Z" : " + Z") + d.get_str();
  for (int i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  return out.empty() ? "0" : out;
}

AbelianInvariants cokernel_invariants(const IntMatrix& rows_span) {
  AbelianInvariants inv;
  const auto snf = smith_normal_form(rows_span);
  int rank = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = static_cast<int>(rows_span.cols()) - rank;
  return inv;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(p.relators.size()),
                                static_cast<Eigen::Index>(p.generators.size()));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r]) {
      const int g = p.generator_index(l.sym);
      if (g < 0) fail_domain("relator symbol '" + to_string(l.sym) + "' is not a generator");
      m(static_cast<Eigen::Index>(r), g) += l.exp;
    }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) { return cokernel_invariants(relation_matrix(p)); }

namespace {

// Free class-2 nilpotent group on g generators: (u, v) with u in Z^g and v
// indexed by pairs i < j, multiplied with the cocycle c(u1, u2)_{ij} = u1_j u2_i.
class FreeClass2 {
 public:
  struct Elem {
    IntVector u, v;
  };

  explicit FreeClass2(int g) : g_(g), pairs_(g * (g - 1) / 2) {}

  int pairs() const { return pairs_; }
  Elem one() const { return {IntVector::Zero(g_), IntVector::Zero(pairs_)}; }
  Elem gen(int i) const {
    Elem e = one();
    e.u(i) = 1;
    return e;
  }

  IntVector cocycle(const IntVector& a, const IntVector& b) const {
    IntVector c(pairs_);
    int k = 0;
    for (int i = 0; i < g_; ++i)
      for (int j = i + 1; j < g_; ++j) c(k++) = a(j) * b(i);
    return c;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    return {a.u + b.u, a.v + b.v + cocycle(a.u, b.u)};
  }

  // (u, v)^c = (c u, c v + C(c, 2) cocycle(u, u)); valid for negative c too.
  Elem power(const Elem& a, const mpz_class& c) const {
    const mpz_class binom = c * (c - 1) / 2;
    IntVector u = a.u * c;
    IntVector v = a.v * c + cocycle(a.u, a.u) * binom;
    return {u, v};
  }

  Elem inverse(const Elem& a) const { return power(a, -1); }

  Elem commutator(const Elem& a, const Elem& b) const {
    return mul(mul(a, b), mul(inverse(a), inverse(b)));
  }

 private:
  int g_, pairs_;
};

}  // namespace

Class2Quotient class2_quotient(const Presentation& p) {
  const int g = static_cast<int>(p.generators.size());
  FreeClass2 F(g);
  std::vector<FreeClass2::Elem> images;
  for (const auto& r : p.relators) {
    auto acc = F.one();
    for (const auto& l : r) {
      const int gi = p.generator_index(l.sym);
      if (gi < 0) fail_domain("relator symbol '" + to_string(l.sym) + "' is not a generator");
      acc = F.mul(acc, l.exp > 0 ? F.gen(gi) : F.inverse(F.gen(gi)));
    }
    images.push_back(std::move(acc));
  }
  const auto nr = static_cast<Eigen::Index>(images.size());

  Class2Quotient out;
  IntMatrix A(g, nr);  // columns: abelian parts of the relators
  for (Eigen::Index r = 0; r < nr; ++r) A.col(r) = images[r].u;
  out.abelian = cokernel_invariants(A.transpose());

  // Central lattice: commutators with generators plus the central parts of
  // relator products whose abelian part vanishes.
  std::vector<IntVector> central;
  for (int j = 0; j < g; ++j)
    for (const auto& im : images) central.push_back(F.commutator(F.gen(j), im).v);
  if (nr > 0 && g > 0) {
    const auto snf = smith_normal_form(A);
    for (Eigen::Index c = 0; c < nr; ++c) {
      if (c < std::min<Eigen::Index>(g, nr) && snf.D(c, c) != 0) continue;
      auto prod = F.one();
      for (Eigen::Index r = 0; r < nr; ++r)
        if (snf.V(r, c) != 0) prod = F.mul(prod, F.power(images[r], snf.V(r, c)));
      for (Eigen::Index i = 0; i < prod.u.size(); ++i)
        if (prod.u(i) != 0) fail_domain("kernel vector with nonzero abelian part");
      central.push_back(prod.v);
    }
  }
  IntMatrix L(static_cast<Eigen::Index>(central.size()), F.pairs());
  for (std::size_t k = 0; k < central.size(); ++k) L.row(static_cast<Eigen::Index>(k)) = central[k].transpose();
  out.central = cokernel_invariants(L);

  auto a = out.abelian.order(), c = out.central.order();
  if (a && c) out.order = *a * *c;
  return out;
}

}  // namespace vsym

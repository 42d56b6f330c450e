#pragma once
// Z^{n(n-1)/2} x| S_n with the signed pair action: kappa_{i,j} goes to
// kappa_{s(i),s(j)}, read as kappa_{s(j),s(i)}^-1 when s(i) > s(j).

#include <Eigen/Core>

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsym/errors.hpp"
#include "vsym/intlinalg.hpp"
#include "vsym/quotients.hpp"
#include "vsym/words.hpp"

namespace vsym {

/// Lexicographic numbering of the pairs 1 <= i < j <= n.
class PairIndexer {
 public:
  explicit PairIndexer(int n);
  int n() const { return n_; }
  int dim() const { return static_cast<int>(pairs_.size()); }
  int index(int i, int j) const;  // 1-based, i < j
  std::pair<int, int> pair(int k) const { return pairs_.at(k); }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> table_;
};

/// Action of one permutation on the basis: e_k -> sign[k] * e_{target[k]}.
struct SignedPerm {
  std::vector<int> target;
  std::vector<int> sign;
};

/// The signed pair rule applied to a permutation directly.
SignedPerm pair_action(const Permutation& s);
/// Unsigned variant, used only as a negative control.
SignedPerm unsigned_pair_action(const Permutation& s);

/// Action given by signed permutation matrices for tau_1 .. tau_{n-1}.
/// Arbitrary permutations act through a word in adjacent transpositions.
class ActionSpec {
 public:
  ActionSpec(int n, std::vector<Eigen::MatrixXi> generators);
  static ActionSpec virtual_triplet(int n);

  int n() const { return n_; }
  int dim() const { return n_ * (n_ - 1) / 2; }
  const Eigen::MatrixXi& generator(int i) const { return gens_.at(i - 1); }  // tau_i
  Eigen::MatrixXi matrix(const Permutation& s) const;
  /// M_i^2 = 1, (M_i M_{i+1})^3 = 1, (M_i M_j)^2 = 1 for |i-j| >= 2.
  bool coxeter_relations_hold() const;

 private:
  int n_;
  std::vector<Eigen::MatrixXi> gens_;
};

/// tau_{l_1} o ... o tau_{l_k} = s, as 1-based indices l.
std::vector<int> adjacent_word(const Permutation& s);

Eigen::MatrixXi to_matrix(const SignedPerm& a);

template <typename Scalar>
using TransVec = Vec<Scalar>;

template <typename Scalar = long long>
struct CrystoElement {
  TransVec<Scalar> v;
  Permutation sigma;

  int n() const { return sigma.degree(); }
  static CrystoElement identity(int n) {
    return {TransVec<Scalar>::Zero(n * (n - 1) / 2), Permutation::identity(n)};
  }
  friend bool operator==(const CrystoElement& a, const CrystoElement& b) {
    return a.sigma == b.sigma && a.v == b.v;
  }
};

template <typename Scalar>
TransVec<Scalar> act(const Permutation& s, const TransVec<Scalar>& v) {
  const int n = s.degree();
  if (v.size() != n * (n - 1) / 2) fail_domain("translation vector has the wrong dimension");
  const SignedPerm a = pair_action(s);
  TransVec<Scalar> out = TransVec<Scalar>::Zero(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(a.target[k]) += Scalar(a.sign[k]) * v(k);
  return out;
}

template <typename Scalar>
TransVec<Scalar> act(const ActionSpec& spec, const Permutation& s, const TransVec<Scalar>& v) {
  if (spec.n() != s.degree() || v.size() != spec.dim()) fail_domain("dimension mismatch");
  return spec.matrix(s).cast<Scalar>() * v;
}

template <typename Scalar>
CrystoElement<Scalar> multiply(const CrystoElement<Scalar>& a, const CrystoElement<Scalar>& b) {
  if (a.n() != b.n()) fail_domain("elements of different rank");
  return {a.v + act(a.sigma, b.v), a.sigma * b.sigma};
}

template <typename Scalar>
CrystoElement<Scalar> inverse(const CrystoElement<Scalar>& a) {
  const Permutation si = a.sigma.inverse();
  return {-act(si, a.v), si};
}

template <typename Scalar>
CrystoElement<Scalar> power(const CrystoElement<Scalar>& a, long long k) {
  CrystoElement<Scalar> base = k < 0 ? inverse(a) : a;
  auto r = CrystoElement<Scalar>::identity(a.n());
  for (long long e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) r = multiply(r, base);
    base = multiply(base, base);
  }
  return r;
}

/// ord(sigma) if the orbit sum of v vanishes, otherwise infinite (nullopt).
template <typename Scalar>
std::optional<long long> order(const CrystoElement<Scalar>& a) {
  const long long t = a.sigma.order();
  TransVec<Scalar> sum = TransVec<Scalar>::Zero(a.v.size());
  Permutation p = Permutation::identity(a.n());
  for (long long k = 0; k < t; ++k) {
    sum += act(p, a.v);
    p = p * a.sigma;
  }
  for (Eigen::Index i = 0; i < sum.size(); ++i)
    if (sum(i) != Scalar(0)) return std::nullopt;
  return t;
}

/// Least pair of each orbit of s on unordered pairs, sorted.
std::vector<std::pair<int, int>> orbit_representatives(const Permutation& s);

/// Same answer as order(), via one signed sum per orbit representative.
template <typename Scalar>
std::optional<long long> order_by_orbits(const CrystoElement<Scalar>& a) {
  const int n = a.n();
  const PairIndexer idx(n);
  const long long t = a.sigma.order();
  const Permutation back = a.sigma.inverse();
  auto coeff = [&](int i, int j) -> Scalar {
    return i < j ? a.v(idx.index(i, j)) : Scalar(-a.v(idx.index(j, i)));
  };
  for (auto [r, s] : orbit_representatives(a.sigma)) {
    Scalar total(0);
    int i = r - 1, j = s - 1;
    for (long long l = 0; l < t; ++l) {
      total += coeff(i + 1, j + 1);
      i = back(i);
      j = back(j);
    }
    if (total != Scalar(0)) return std::nullopt;
  }
  return t;
}

/// Smallest k in [1, cap] with a^k = 1, by repeated multiplication.
template <typename Scalar>
std::optional<long long> order_naive(const CrystoElement<Scalar>& a, long long cap) {
  auto p = a;
  const auto one = CrystoElement<Scalar>::identity(a.n());
  for (long long k = 1; k <= cap; ++k) {
    if (p == one) return k;
    p = multiply(p, a);
  }
  return std::nullopt;
}

/// Image of a word in y_i, rho_i, kappa_{i,j}: y_i -> (e_{i,i+1}, tau_i),
/// rho_i -> (0, tau_i), kappa_{i,j} -> (e_{i,j}, 1).
template <typename Scalar>
CrystoElement<Scalar> fold_word(int n, const Word& w) {
  const PairIndexer idx(n);
  auto acc = CrystoElement<Scalar>::identity(n);
  for (const auto& l : w) {
    auto g = CrystoElement<Scalar>::identity(n);
    const int i = l.sym.index1();
    switch (l.sym.family()) {
      case Family::y:
        g.v(idx.index(i, i + 1)) = 1;
        g.sigma = Permutation::adjacent(n, i);
        break;
      case Family::rho:
        g.sigma = Permutation::adjacent(n, i);
        break;
      case Family::kappa: {
        const int j = l.sym.index2();
        g.v(idx.index(std::min(i, j), std::max(i, j))) = i < j ? 1 : -1;
        break;
      }
      default:
        fail_domain("cannot fold '" + to_string(l.sym) + "' into the crystallographic quotient");
    }
    acc = multiply(acc, l.exp > 0 ? g : inverse(g));
  }
  return acc;
}

/// One cycle block of a torsion element: the orbit of e_{b,b+1} under
/// theta = tau_b o ... o tau_{b+m-2}, listed in traversal order.
struct TorsionBlock {
  int start = 1;  // b
  int length = 2;  // m
  Permutation theta;
  std::vector<std::pair<int, int>> orbit;
  std::vector<int> sign;  // act(theta^l, e_orbit[0]) = sign[l] e_orbit[l]
  int closure = 1;        // act(theta^L, e_orbit[0]) = closure * e_orbit[0]
  /// Entry solved from the zero orbit sum, or -1 when every entry is free.
  int solved = -1;
  int free_count() const { return static_cast<int>(orbit.size()) - (solved >= 0 ? 1 : 0); }
};

std::vector<TorsionBlock> torsion_blocks(int n, const std::vector<int>& cycle_type);
int torsion_free_parameters(int n, const std::vector<int>& cycle_type);

/// Product of block elements (orbit translation, theta_k). params holds
/// either the free exponents (orbit order, solved entry skipped), a full
/// exponent list per orbit (validated), or nothing (all zero).
template <typename Scalar = long long>
CrystoElement<Scalar> torsion_element(int n, const std::vector<int>& cycle_type,
                                      const std::vector<Scalar>& params = {}) {
  const auto blocks = torsion_blocks(n, cycle_type);
  std::size_t nfree = 0, nfull = 0;
  for (const auto& b : blocks) {
    nfree += b.free_count();
    nfull += b.orbit.size();
  }
  const bool full = !params.empty() && params.size() == nfull && nfull != nfree;
  if (!params.empty() && params.size() != nfree && !full)
    fail_domain("expected " + std::to_string(nfree) + " free or " + std::to_string(nfull) +
                " full torsion parameters, got " + std::to_string(params.size()));
  const PairIndexer idx(n);
  auto acc = CrystoElement<Scalar>::identity(n);
  std::size_t pos = 0;
  for (const auto& b : blocks) {
    const std::size_t L = b.orbit.size();
    std::vector<Scalar> a(L, Scalar(0));
    for (std::size_t l = 0; l < L; ++l) {
      if (full || static_cast<int>(l) != b.solved) a[l] = params.empty() ? Scalar(0) : params[pos++];
    }
    if (b.solved >= 0) {
      Scalar sum(0);
      for (std::size_t l = 0; l < L; ++l)
        if (full || static_cast<int>(l) != b.solved) sum += Scalar(b.sign[l]) * a[l];
      if (full && sum != Scalar(0)) {
        std::string pairs;
        for (auto [i, j] : b.orbit) pairs += (pairs.empty() ? "" : " ") + std::to_string(i) + "," + std::to_string(j);
        fail_domain("orbit sum over {" + pairs + "} is not zero");
      }
      if (!full) a[b.solved] = Scalar(-Scalar(b.sign[b.solved]) * sum);
    }
    CrystoElement<Scalar> wk{TransVec<Scalar>::Zero(idx.dim()), b.theta};
    for (std::size_t l = 0; l < L; ++l) wk.v(idx.index(b.orbit[l].first, b.orbit[l].second)) = a[l];
    acc = multiply(acc, wk);
  }
  return acc;
}

struct FaithfulnessReport {
  bool faithful = true;
  long long checked = 0;  // non-identity permutations examined
  std::optional<Permutation> kernel_element;
};

/// Exhaustive over S_n; BudgetError above max_n.
FaithfulnessReport holonomy_faithful(int n, bool signed_action = true, int max_n = 8);

}  // namespace vsym

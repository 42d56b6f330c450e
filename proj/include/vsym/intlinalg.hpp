#pragma once
// Exact integer linear algebra on Eigen matrices: Smith normal form,
// abelian invariants and class-2 nilpotent quotients. The scalar is a
// template parameter; mpz_class is the default for anything that can grow.

#include <Eigen/Core>
#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsym/presentations.hpp"

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace vsym {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<mpz_class>;
using IntVector = Vec<mpz_class>;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < Scalar(0) ? Scalar(-a) : a;
}

template <typename Scalar>
void add_row(Mat<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  for (Eigen::Index k = 0; k < m.cols(); ++k) m(dst, k) += q * m(src, k);
}

template <typename Scalar>
void add_col(Mat<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  for (Eigen::Index k = 0; k < m.rows(); ++k) m(k, dst) += q * m(k, src);
}

}  // namespace detail

template <typename Scalar>
struct SmithResult {
  Mat<Scalar> D, U, V;  // D = U * M * V

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (const auto& d : diagonal())
      if (d != Scalar(0)) ++r;
    return r;
  }
};

/// Smith normal form with unimodular transforms. Pivot: least nonzero
/// absolute value in the active block, ties broken by (row, col).
template <typename Derived>
SmithResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithResult<Scalar> r{M.eval(), Mat<Scalar>::Identity(m, m), Mat<Scalar>::Identity(n, n)};
  Mat<Scalar>& D = r.D;
  const Scalar zero(0);

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (D(i, j) != zero && (pr < 0 || abs_value(D(i, j)) < abs_value(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return r;  // remaining block is zero

      if (pr != t) {
        D.row(pr).swap(D.row(t));
        r.U.row(pr).swap(r.U.row(t));
      }
      if (pc != t) {
        D.col(pc).swap(D.col(t));
        r.V.col(pc).swap(r.V.col(t));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == zero) continue;
        const Scalar q = Scalar(-(D(i, t) / D(t, t)));
        detail::add_row(D, i, t, q);
        detail::add_row(r.U, i, t, q);
        if (D(i, t) != zero) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == zero) continue;
        const Scalar q = Scalar(-(D(t, j) / D(t, t)));
        detail::add_col(D, j, t, q);
        detail::add_col(r.V, j, t, q);
        if (D(t, j) != zero) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < m && divides; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (Scalar(D(i, j) % D(t, t)) != zero) {
            detail::add_row(D, t, i, Scalar(1));
            detail::add_row(r.U, t, i, Scalar(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < zero) {
      D.row(t) *= Scalar(-1);
      r.U.row(t) *= Scalar(-1);
    }
  }
  return r;
}

struct AbelianInvariants {
  std::vector<mpz_class> torsion;  // d_1 | d_2 | ..., each >= 2
  int free_rank = 0;

  bool finite() const { return free_rank == 0; }
  std::optional<mpz_class> order() const;
  std::string describe() const;  // e.g. "Z2 + Z2 + Z"
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of Z^cols / (row span of M).
AbelianInvariants cokernel_invariants(const IntMatrix& rows_span);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

struct Class2Quotient {
  AbelianInvariants abelian;  // G / gamma_2
  AbelianInvariants central;  // gamma_2 / gamma_3
  std::optional<mpz_class> order;  // |G / gamma_3| when finite
};

/// Exact G / gamma_3(G), computed inside the free class-2 nilpotent group.
Class2Quotient class2_quotient(const Presentation& p);

}  // namespace vsym

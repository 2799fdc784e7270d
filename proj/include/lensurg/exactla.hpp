#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lensurg/scalar.hpp"

namespace lensurg {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Builds an IntMatrix from nested rows; every row must have the same length.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntVector int_vector(std::initializer_list<long long> entries);

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so the scalar only needs to be an integral domain.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "det");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Exact solution of m * x = b over the rationals.
template <typename DerivedM, typename DerivedB>
RatVector solve(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_square(m, "solve");
  if (b.rows() != m.rows() || b.cols() != 1) {
    throw DimensionError("solve: right-hand side has length " + std::to_string(b.rows()) +
                         ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  const Eigen::Index n = m.rows();
  RatMatrix a = m.template cast<Rational>();
  RatVector x = b.template cast<Rational>();

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("solve: matrix is singular");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      std::swap(x(k), x(pivot));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      a.row(i).tail(n - k) -= f * a.row(k).tail(n - k);
      x(i) -= f * x(k);
    }
  }
  for (Eigen::Index k = n; k-- > 0;) {
    Rational acc = x(k);
    for (Eigen::Index j = k + 1; j < n; ++j) acc -= a(k, j) * x(j);
    x(k) = acc / a(k, k);
  }
  return x;
}

/// Counts of positive, negative and zero eigenvalues of a symmetric form.
struct Inertia {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;

  Eigen::Index signature() const { return positive - negative; }
};

/// Inertia by rational congruence diagonalization. A zero diagonal with a
/// nonzero off-diagonal entry b is split off as the hyperbolic block
/// [[0, b], [b, 0]], which contributes one positive and one negative square.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& m) {
  if (!detail::is_symmetric(m)) throw ShapeError("inertia: matrix is not symmetric");
  const Eigen::Index n = m.rows();
  RatMatrix a = m.template cast<Rational>();
  Inertia result;

  auto swap_index = [&a](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };
  // row_r += c * row_s and col_r += c * col_s
  auto add_multiple = [&a](Eigen::Index r, Eigen::Index s, const Rational& c) {
    a.row(r) += c * a.row(s);
    a.col(r) += c * a.col(s);
  };

  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index diag = k;
    while (diag < n && a(diag, diag) == 0) ++diag;
    if (diag < n) {
      swap_index(k, diag);
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) add_multiple(r, k, Rational(-a(r, k) / a(k, k)));
      }
      (a(k, k) > 0 ? result.positive : result.negative) += 1;
      ++k;
      continue;
    }

    // Whole trailing block has zero diagonal; look for a hyperbolic pair.
    Eigen::Index pi = n, pj = n;
    for (Eigen::Index i = k; i < n && pi == n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      result.zero += n - k;
      break;
    }
    swap_index(k, pi);
    swap_index(k + 1, pj);
    const Rational b = a(k, k + 1);
    for (Eigen::Index r = k + 2; r < n; ++r) {
      const Rational ck = -a(r, k + 1) / b;
      const Rational ck1 = -a(r, k) / b;
      if (ck != 0) add_multiple(r, k, ck);
      if (ck1 != 0) add_multiple(r, k + 1, ck1);
    }
    result.positive += 1;
    result.negative += 1;
    k += 2;
  }
  return result;
}

template <typename Derived>
Eigen::Index signature(const Eigen::MatrixBase<Derived>& m) {
  return inertia(m).signature();
}

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// nonnegative, zeros trailing.
struct SmithDecomposition {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  /// One factor per row of M: the diagonal of D, padded with zeros when M
  /// has more rows than columns.
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith(const IntMatrix& m);

/// Checks every invariant of a decomposition of m.
bool verify_smith(const IntMatrix& m, const SmithDecomposition& s);

/// Number of Smith decompositions produced (and certified) so far by this process.
std::size_t smith_certificates_verified();

/// Image of a vector in coker(m) = Z^rows / m Z^cols, written in Smith
/// coordinates. Unit factors are dropped; order 0 denotes a free summand.
struct CokernelClass {
  std::vector<Integer> orders;
  std::vector<Integer> coords;

  bool is_zero() const;
  friend bool operator==(const CokernelClass&, const CokernelClass&) = default;
};

/// Precomputed presentation of coker(m), reusable across vectors.
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& m);

  const std::vector<Integer>& orders() const { return orders_; }
  bool is_trivial() const { return orders_.empty(); }
  /// Exactly one nontrivial summand.
  bool is_cyclic() const { return orders_.size() == 1; }

  CokernelClass classify(const IntVector& v) const;
  const SmithDecomposition& decomposition() const { return smith_; }

 private:
  SmithDecomposition smith_;
  std::vector<Eigen::Index> rows_;  // rows of D carrying nontrivial summands
  std::vector<Integer> orders_;
};

CokernelClass cokernel_coordinates(const IntMatrix& m, const IntVector& v);

}  // namespace lensurg

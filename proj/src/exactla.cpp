#include "lensurg/exactla.hpp"

#include <atomic>
#include <stdexcept>

namespace lensurg {

namespace {

std::atomic<std::size_t> g_certified{0};

Integer abs_of(const Integer& z) { return z < 0 ? Integer(-z) : z; }

IntMatrix identity(Eigen::Index n) {
  IntMatrix id = IntMatrix::Constant(n, n, Integer(0));
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

// Elementary operations applied simultaneously to the working matrix and to
// the transform they accumulate into.
struct SmithState {
  IntMatrix a, u, v;

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  }
  // row_i += c * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Integer& c) {
    a.row(i) += c * a.row(j);
    u.row(i) += c * u.row(j);
  }
  // col_i += c * col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Integer& c) {
    a.col(i) += c * a.col(j);
    v.col(i) += c * v.col(j);
  }
  void negate_col(Eigen::Index i) {
    a.col(i) = -a.col(i);
    v.col(i) = -v.col(i);
  }
};

}  // namespace

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw DimensionError("int_matrix: ragged rows");
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector int_vector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long x : entries) v(i++) = x;
  return v;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(D.rows()));
  for (Eigen::Index i = 0; i < D.rows(); ++i) out.push_back(i < D.cols() ? D(i, i) : Integer(0));
  return out;
}

SmithDecomposition smith(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithState st{m, identity(rows), identity(cols)};
  const Eigen::Index rank_bound = std::min(rows, cols);

  for (Eigen::Index t = 0; t < rank_bound; ++t) {
    bool exhausted = false;
    for (;;) {
      // pivot: entry of minimal nonzero absolute value in the trailing block
      Eigen::Index pi = -1, pj = -1;
      Integer best = 0;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (st.a(i, j) != 0 && (pi < 0 || abs_of(st.a(i, j)) < best)) {
            best = abs_of(st.a(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (st.a(i, t) == 0) continue;
        st.add_row(i, t, Integer(-div_floor(st.a(i, t), st.a(t, t))));
        if (st.a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (st.a(t, j) == 0) continue;
        st.add_col(j, t, Integer(-div_floor(st.a(t, j), st.a(t, t))));
        if (st.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < rows && offender < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (st.a(i, j) % st.a(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender < 0) break;
      st.add_row(t, offender, Integer(1));
    }
    if (exhausted) break;
    if (st.a(t, t) < 0) st.negate_col(t);
  }

  SmithDecomposition out{std::move(st.a), std::move(st.u), std::move(st.v)};
  if (!verify_smith(m, out)) throw std::logic_error("smith: certificate check failed");
  ++g_certified;
  return out;
}

bool verify_smith(const IntMatrix& m, const SmithDecomposition& s) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (s.U.rows() != rows || s.U.cols() != rows) return false;
  if (s.V.rows() != cols || s.V.cols() != cols) return false;
  if (s.D.rows() != rows || s.D.cols() != cols) return false;
  if (abs_of(det(s.U)) != 1 || abs_of(det(s.V)) != 1) return false;
  if (rows > 0 && cols > 0 && IntMatrix(s.U * m * s.V) != s.D) return false;

  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (i != j && s.D(i, j) != 0) return false;

  const Eigen::Index diag = std::min(rows, cols);
  for (Eigen::Index i = 0; i < diag; ++i) {
    if (s.D(i, i) < 0) return false;
    if (i + 1 < diag) {
      const Integer& here = s.D(i, i);
      const Integer& next = s.D(i + 1, i + 1);
      // zeros trail; a nonzero factor must divide its successor
      if (here == 0 && next != 0) return false;
      if (here != 0 && next % here != 0) return false;
    }
  }
  return true;
}

std::size_t smith_certificates_verified() { return g_certified.load(); }

bool CokernelClass::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Cokernel::Cokernel(const IntMatrix& m) : smith_(smith(m)) {
  const auto factors = smith_.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 1) continue;
    rows_.push_back(static_cast<Eigen::Index>(i));
    orders_.push_back(factors[i]);
  }
}

CokernelClass Cokernel::classify(const IntVector& v) const {
  if (v.rows() != smith_.U.rows()) {
    throw DimensionError("cokernel: vector has length " + std::to_string(v.rows()) + ", expected " +
                         std::to_string(smith_.U.rows()));
  }
  CokernelClass out;
  out.orders = orders_;
  if (v.rows() == 0) return out;
  const IntVector image = smith_.U * v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Integer& x = image(rows_[k]);
    out.coords.push_back(orders_[k] == 0 ? x : mod_floor(x, orders_[k]));
  }
  return out;
}

CokernelClass cokernel_coordinates(const IntMatrix& m, const IntVector& v) {
  if (m.rows() != m.cols()) throw DimensionError("cokernel_coordinates: expected a square matrix");
  return Cokernel(m).classify(v);
}

}  // namespace lensurg

#pragma once

#include <random>
#include <string>
#include <vector>

#include "lensurg/diagram.hpp"
#include "lensurg/exactla.hpp"

namespace lensurg::test {

inline std::string fixture(const std::string& name) { return std::string(LENSURG_FIXTURES) + "/" + name; }

// Linking matrix of the exceptional trefoil diagram, bottom to top.
inline IntMatrix fig2_m() {
  return int_matrix({{0, -1, -1, -1, 0},
                     {-1, 0, -1, -1, 0},
                     {-1, -1, -3, -1, 0},
                     {-1, -1, -1, -3, -1},
                     {0, 0, 0, -1, -2}});
}

inline IntMatrix fig2_m0() {
  return int_matrix({{0, -1, -1, -1, -1, 0},
                     {-1, 0, -1, -1, -1, 0},
                     {-1, -1, 0, -1, -1, 0},
                     {-1, -1, -1, -3, -1, 0},
                     {-1, -1, -1, -1, -3, -1},
                     {0, 0, 0, 0, -1, -2}});
}

// Diagram left after the cancellation: one (+1)-unknot and three (-1)-knots.
inline IntMatrix reduced_m() {
  return int_matrix({{0, -1, -1, 0}, {-1, -3, -1, 0}, {-1, -1, -3, -1}, {0, 0, -1, -2}});
}

// Full relation matrix with L surgered, all signs flipped, last diagonal m+1.
inline IntMatrix section4_relations(long long m) {
  IntMatrix r = int_matrix({{2, 1, 1, 1, 1, 0},
                            {1, 0, 1, 1, 1, 0},
                            {1, 1, 0, 1, 1, 0},
                            {1, 1, 1, 3, 1, 0},
                            {1, 1, 1, 1, 3, 1},
                            {0, 0, 0, 0, 1, 0}});
  r(5, 5) = m + 1;
  return r;
}

// Cofactor expansion along the first row; independent of Bareiss.
inline Integer cofactor_det(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer acc = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

// d_1 d_2 ... d_k = gcd of all k x k minors (determinantal divisors).
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Integer> out;
  const Eigen::Index kmax = std::min(rows, cols);
  for (Eigen::Index k = 1; k <= kmax; ++k) {
    Integer g = 0;
    std::vector<Eigen::Index> ri(k), ci(k);
    // enumerate k-subsets by bitmask (small matrices only)
    for (unsigned rm = 0; rm < (1u << rows); ++rm) {
      if (__builtin_popcount(rm) != k) continue;
      for (unsigned cm = 0; cm < (1u << cols); ++cm) {
        if (__builtin_popcount(cm) != k) continue;
        IntMatrix sub(k, k);
        Eigen::Index a = 0;
        for (Eigen::Index r = 0; r < rows; ++r) {
          if (!(rm >> r & 1u)) continue;
          Eigen::Index b = 0;
          for (Eigen::Index c = 0; c < cols; ++c)
            if (cm >> c & 1u) sub(a, b++) = m(r, c);
          ++a;
        }
        g = gcd(g, abs_int(cofactor_det(sub)));
      }
    }
    out.push_back(g);
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937& rng, Eigen::Index n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

// Product of random elementary integer operations: always unimodular.
inline IntMatrix random_unimodular(std::mt19937& rng, Eigen::Index n, int steps = 8) {
  IntMatrix g = IntMatrix::Constant(n, n, Integer(0));
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = 1;
  if (n < 2) {
    if (n == 1 && rng() % 2) g(0, 0) = -1;
    return g;
  }
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const Eigen::Index i = idx(rng), j = idx(rng);
    if (i == j) {
      g.row(i) = -g.row(i);
      continue;
    }
    const Integer c = coef(rng);
    g.row(i) += c * g.row(j);
  }
  return g;
}

// Random valid diagram with small framings, rot values, and optional knot.
inline SurgeryDiagram random_diagram(std::mt19937& rng, std::size_t size, bool with_knot) {
  std::uniform_int_distribution<int> tb(-6, -1), rot(-3, 3), lk(-2, 2), coin(0, 3);
  SurgeryDiagram d;
  for (std::size_t i = 0; i < size; ++i)
    d.components.push_back({"c" + std::to_string(i), tb(rng), rot(rng), coin(rng) == 0 ? 1 : -1});
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) d.set_linking(d.components[i].id, d.components[j].id, lk(rng));
  if (with_knot) {
    DistinguishedKnot k{"K", tb(rng), rot(rng), {}};
    for (const auto& c : d.components) k.lk[c.id] = lk(rng);
    d.knot = k;
  }
  return d;
}

inline SurgeryDiagram permuted(const SurgeryDiagram& d, const std::vector<std::size_t>& order) {
  SurgeryDiagram out = d;
  out.components.clear();
  for (auto i : order) out.components.push_back(d.components[i]);
  return out;
}

}  // namespace lensurg::test

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Exact signature triple of a symmetric bilinear form.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  bool operator==(const Inertia&) const = default;
  std::string str() const {
    return "(" + std::to_string(n_plus) + "," + std::to_string(n_zero) + "," +
           std::to_string(n_minus) + ")";
  }
};

/// Inertia by Sylvester's law via congruence diagonalization over the
/// rationals.  A zero diagonal with a nonzero off-diagonal entry is
/// handled by the standard congruence adding a row/column pair; the
/// result is independent of pivot order.
template <typename Derived>
Inertia inertia_of(const Eigen::MatrixBase<Derived>& sym) {
  Mat a = sym;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw input_error("inertia_of: matrix not square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw input_error("inertia_of: matrix not symmetric");

  Inertia out;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index diag = -1;
      for (Eigen::Index j = k + 1; j < n; ++j)
        if (a(j, j) != 0) {
          diag = j;
          break;
        }
      if (diag >= 0) {
        a.row(k).swap(a.row(diag));
        a.col(k).swap(a.col(diag));
      } else {
        Eigen::Index oi = -1, oj = -1;
        for (Eigen::Index i = k; i < n && oi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (a(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          out.n_zero += static_cast<int>(n - k);
          return out;
        }
        // x_i <- x_i + x_j turns the hyperbolic pair into a nonzero diagonal.
        a.row(oi) += a.row(oj);
        a.col(oi) += a.col(oj);
        if (oi != k) {
          a.row(k).swap(a.row(oi));
          a.col(k).swap(a.col(oi));
        }
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / pivot;
      a.row(i) -= factor * a.row(k);
      a.col(i) -= factor * a.col(k);
    }
  }
  return out;
}

/// Exact rank by Gaussian elimination with any-nonzero pivoting.
inline int rank_of(Mat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(row));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Rational factor = a(i, col) / a(row, col);
      a.row(i) -= factor * a.row(row);
    }
    ++rank;
    ++row;
  }
  return rank;
}

/// Nullspace basis (columns) of an exact rational matrix.
inline Mat nullspace_of(Mat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      a.row(i) -= a(i, col) * a.row(row);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_col) is_pivot[c] = true;
  Eigen::Index null_dim = cols - static_cast<Eigen::Index>(pivot_col.size());
  Mat basis = Mat::Zero(cols, null_dim);
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, out) = 1;
    for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(pivot_col.size()); ++r)
      basis(pivot_col[r], out) = -a(r, free_col);
    ++out;
  }
  return basis;
}

/// Phase-1 simplex with Bland's rule: decides whether A x = b admits a
/// solution x >= 0, exactly.  Small dense tableaux only.
inline bool nonneg_solution_exists(Mat a, Vec b, Vec* solution = nullptr) {
  const Eigen::Index m = a.rows(), n = a.cols();
  if (b.size() != m) throw input_error("nonneg_solution_exists: size mismatch");
  for (Eigen::Index i = 0; i < m; ++i)
    if (b[i] < 0) {
      a.row(i) = -a.row(i);
      b[i] = -b[i];
    }
  // Tableau over [x | artificials]; minimize the artificial sum.
  Mat t = Mat::Zero(m + 1, n + m + 1);
  t.block(0, 0, m, n) = a;
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, n + i) = 1;
    t(i, n + m) = b[i];
  }
  for (Eigen::Index j = 0; j <= n + m; ++j) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  for (Eigen::Index i = 0; i < m; ++i) t(m, n + i) = 0;
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rational best_ratio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw internal_error("phase-1 simplex unbounded");
    Rational pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      t.row(i) -= t(i, enter) * t.row(leave);
    }
    basis[leave] = enter;
  }
  if (t(m, n + m) != 0) return false;
  if (solution) {
    *solution = Vec::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[i] < n) (*solution)[basis[i]] = t(i, n + m);
  }
  return true;
}

/// Is `target` a nonnegative combination of the given generators?
inline bool in_conic_hull(const std::vector<Vec>& gens, const Vec& target,
                          Vec* coefficients = nullptr) {
  if (gens.empty()) {
    for (Eigen::Index i = 0; i < target.size(); ++i)
      if (target[i] != 0) return false;
    return true;
  }
  Mat a(target.size(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = gens[j];
  return nonneg_solution_exists(a, target, coefficients);
}

/// Is `target` a convex combination of the given points?
inline bool in_convex_hull(const std::vector<Vec>& points, const Vec& target) {
  if (points.empty()) return false;
  const Eigen::Index dim = target.size();
  Mat a(dim + 1, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    a.col(static_cast<Eigen::Index>(j)).head(dim) = points[j];
    a(dim, static_cast<Eigen::Index>(j)) = 1;
  }
  Vec b(dim + 1);
  b.head(dim) = target;
  b[dim] = 1;
  return nonneg_solution_exists(a, b);
}

}  // namespace lorentz

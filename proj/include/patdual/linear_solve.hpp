#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "patdual/errors.hpp"

namespace patdual {

template <typename T>
concept ExactField = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <ExactField T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!a[i][j].is_zero() && !x[j].is_zero()) acc = acc + a[i][j] * x[j];
    }
    out[i] = acc;
  }
  return out;
}

/// Solves A x = b exactly by Gaussian elimination with first-nonzero pivoting.
/// Throws SingularMatrixError naming the first column without a pivot, and
/// PreconditionError on shape mismatch. The result is checked against A x = b.
template <ExactField T>
std::vector<T> solve_linear_system(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PreconditionError("solve_linear_system: rhs length differs from row count");
  for (const auto& row : a) {
    if (row.size() != m) throw PreconditionError("solve_linear_system: matrix is not square");
  }

  Matrix<T> w = a;
  std::vector<T> rhs = b;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && w[piv][col].is_zero()) ++piv;
    if (piv == m) {
      throw SingularMatrixError(col, "singular matrix: no nonzero pivot in column " + std::to_string(col));
    }
    if (piv != col) {
      std::swap(w[piv], w[col]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      if (w[r][col].is_zero()) continue;
      const T factor = w[r][col] / w[col][col];
      w[r][col] = T{};
      for (std::size_t c = col + 1; c < m; ++c) {
        if (!w[col][c].is_zero()) w[r][c] = w[r][c] - factor * w[col][c];
      }
      rhs[r] = rhs[r] - factor * rhs[col];
    }
  }

  std::vector<T> x(m);
  for (std::size_t k = m; k-- > 0;) {
    T acc = rhs[k];
    for (std::size_t c = k + 1; c < m; ++c) {
      if (!w[k][c].is_zero()) acc = acc - w[k][c] * x[c];
    }
    x[k] = acc / w[k][k];
  }

  if (!(mat_vec(a, x) == b)) throw Error("solve_linear_system: residual check failed");
  return x;
}

}  // namespace patdual

#pragma once

// Smith normal form of an integer matrix, for abelianizing presentations.

#include <Eigen/Core>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace knotplate {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
Scalar sub_mul(Scalar a, Scalar q, Scalar b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar prod{}, out{};
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
      throw std::overflow_error("integer overflow in Smith normal form");
    return out;
  } else {
    return a - q * b;
  }
}

template <typename Scalar>
Scalar abs_value(Scalar x) {
  return x < Scalar(0) ? -x : x;
}

}  // namespace detail

// Nonzero diagonal entries d1 | d2 | ... | dr (all positive) of the Smith
// normal form. r is the rank.
template <typename Scalar>
std::vector<Scalar> smith_diagonal(IntMatrix<Scalar> a) {
  using detail::abs_value;
  using detail::sub_mul;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Scalar> diag;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Loop until row t and column t are clear beyond the pivot and the pivot
    // divides the rest of the block.
    while (true) {
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != Scalar(0) && (pr < 0 || abs_value(a(i, j)) < abs_value(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return diag;
      a.row(t).swap(a.row(pr));
      a.col(t).swap(a.col(pc));

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == Scalar(0)) continue;
        const Scalar q = a(i, t) / a(t, t);
        for (Eigen::Index j = t; j < cols; ++j) a(i, j) = sub_mul(a(i, j), q, a(t, j));
        dirty |= a(i, t) != Scalar(0);
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == Scalar(0)) continue;
        const Scalar q = a(t, j) / a(t, t);
        for (Eigen::Index i = t; i < rows; ++i) a(i, j) = sub_mul(a(i, j), q, a(i, t));
        dirty |= a(t, j) != Scalar(0);
      }
      if (dirty) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = t; j < cols; ++j) a(t, j) = sub_mul(a(t, j), Scalar(-1), a(bad, j));
    }
    diag.push_back(abs_value(a(t, t)));
  }
  return diag;
}

}  // namespace knotplate

#pragma once

#include <cstddef>
#include <vector>

namespace g2flat::linalg {

/// Dense row-major matrix over the field described by `Ops`.
template <class Ops>
struct Matrix {
  using Elem = typename Ops::Elem;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const Ops& ops) : rows(r), cols(c), data(r * c, ops.zero()) {}

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// In-place reduced row echelon form with pivots chosen left to right, first
/// nonzero row from the top. Returns the pivot columns.
template <class Ops>
std::vector<std::size_t> rref(Matrix<Ops>& m, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && ops.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const auto inv = ops.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = ops.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || ops.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) {
        m.at(r, c) = ops.sub(m.at(r, c), ops.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Ops>
std::size_t rank(Matrix<Ops> m, const Ops& ops) {
  return rref(m, ops).size();
}

/// Basis of the right kernel {x : m x = 0}; one vector per free column, with
/// a 1 in that column (free columns in increasing order).
template <class Ops>
std::vector<std::vector<typename Ops::Elem>> kernel(Matrix<Ops> m, const Ops& ops) {
  const auto pivots = rref(m, ops);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename Ops::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Ops::Elem> v(m.cols, ops.zero());
    v[free] = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ops.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace g2flat::linalg

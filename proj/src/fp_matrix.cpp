// Copyright 2026 The cdu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdu/fp_matrix.hpp"

#include <algorithm>
#include <utility>

#include "cdu/error.hpp"
#include "cdu/poly_fp.hpp"

namespace cdu::solvers {

namespace {

struct Echelon {
  FpMatrix m;
  std::vector<std::uint32_t> pivot_cols;
};

// Reduced row echelon form over the first `ncols` columns; extra columns ride along.
Echelon reduce(FpMatrix m, std::uint32_t ncols) {
  const std::uint32_t p = m.p();
  std::vector<std::uint32_t> pivots;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::uint32_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::uint32_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const std::uint32_t inv = poly::inv_mod(m.at(row, col), p);
    for (std::uint32_t c = 0; c < m.cols(); ++c) m.at(row, c) = static_cast<std::uint32_t>(std::uint64_t(m.at(row, c)) * inv % p);
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t factor = m.at(r, col);
      for (std::uint32_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - factor) * m.at(row, c)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t rows, std::uint32_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(std::size_t{rows} * cols, 0) {}

FpMatrix FpMatrix::stacked(const FpMatrix& below) const {
  if (below.cols_ != cols_ || below.p_ != p_) throw Error(Errc::ShapeMismatch, "cannot stack matrices");
  FpMatrix out(rows_ + below.rows_, cols_, p_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::uint32_t rank(const FpMatrix& m) {
  return static_cast<std::uint32_t>(reduce(m, m.cols()).pivot_cols.size());
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& m) {
  const auto e = reduce(m, m.cols());
  const std::uint32_t p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::uint32_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = (p - e.m.at(r, free)) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve(const FpMatrix& m, const std::vector<std::uint32_t>& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::ShapeMismatch, "rhs length != rows");
  FpMatrix aug(m.rows(), m.cols() + 1, m.p());
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    for (std::uint32_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r] % m.p();
  }
  const auto e = reduce(std::move(aug), m.cols());
  const auto npiv = static_cast<std::uint32_t>(e.pivot_cols.size());
  for (std::uint32_t r = npiv; r < m.rows(); ++r) {
    if (e.m.at(r, m.cols()) != 0) return std::nullopt;
  }
  std::vector<std::uint32_t> x(m.cols(), 0);
  for (std::uint32_t r = 0; r < npiv; ++r) x[e.pivot_cols[r]] = e.m.at(r, m.cols());
  return x;
}

}  // namespace cdu::solvers

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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cdu::solvers {

/// Dense matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t rows, std::uint32_t cols, std::uint32_t p);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return data_[std::size_t{r} * cols_ + c]; }
  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return data_[std::size_t{r} * cols_ + c]; }

  /// Rows of `below` appended under this matrix (ShapeMismatch on width).
  FpMatrix stacked(const FpMatrix& below) const;

 private:
  std::uint32_t rows_, cols_, p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t rank(const FpMatrix& m);
/// Basis of {x : M x = 0}; size cols - rank.
std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& m);
/// One x with M x = rhs, if any.
std::optional<std::vector<std::uint32_t>> solve(const FpMatrix& m, const std::vector<std::uint32_t>& rhs);

}  // namespace cdu::solvers

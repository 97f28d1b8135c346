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
#include <functional>
#include <vector>

#include "cdu/field.hpp"
#include "cdu/fp_matrix.hpp"

namespace cdu::solvers {

/// L(X) = sum_i coeffs[i] X^{p^i}, 0 <= i < n.
struct LinearizedPoly {
  gf::FieldPtr ctx;
  std::vector<gf::Elem> coeffs;

  explicit LinearizedPoly(gf::FieldPtr field);
  /// coeffs[i mod n] += c.
  LinearizedPoly& add_term(std::uint64_t i, gf::Elem c);
  gf::Elem operator()(gf::Elem x) const;
};

/// sum_i (a_i X^{p^i} + (a_i X)^{p^{n-i}}): the linear part attached to the
/// quadratic form Tr(sum_i a_i X^{p^i + 1}).
LinearizedPoly quadratic_associate(gf::FieldPtr ctx, const std::vector<gf::Elem>& a);

/// Matrix of an F_p-linear map in the polynomial basis: column j holds the
/// digits of map(X^j).
FpMatrix matrix_of(const gf::FieldCtx& ctx, const std::function<gf::Elem(gf::Elem)>& map);
FpMatrix matrix_of(const LinearizedPoly& l);

struct Kernel {
  std::vector<gf::Elem> basis;
  std::uint32_t dim = 0;
};

Kernel linearized_kernel(const LinearizedPoly& l);
/// Common kernel of several maps on the same field.
Kernel joint_kernel(const std::vector<LinearizedPoly>& maps);

/// All F_p-combinations of the basis vectors, sorted by index.
std::vector<gf::Elem> span(const gf::FieldCtx& ctx, const std::vector<gf::Elem>& basis);

/// Every x with L(x) = rhs, sorted; each one is checked by substitution.
std::vector<gf::Elem> solve_affine(const LinearizedPoly& l, gf::Elem rhs);

}  // namespace cdu::solvers

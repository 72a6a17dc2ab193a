#pragma once

#include <vector>

#include "cubicsym/linalg/matrix.hpp"

namespace cubicsym {

struct EchelonForm {
  std::size_t rank = 0;
  Matrix echelon;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the cyclotomic field.
///
/// Pivots are chosen as the first nonzero entry in column order. Each pivot is
/// inverted once and its row normalized; all other rows are cleared against
/// it, so the result is the unique RREF.
EchelonForm rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}; one vector per free column.
std::vector<std::vector<Cyclotomic>> nullspace(const Matrix& m);

/// Dimension of {X : X g = g X for every generator}, from the homogeneous
/// system in the n^2 entries of X.
std::size_t commutant_dimension(const std::vector<Matrix>& generators);

}  // namespace cubicsym

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cubicsym/groups/matrix_group.hpp"
#include "cubicsym/invariants/cubic_form.hpp"

namespace cubicsym {

struct InvariantSpace {
  std::vector<Matrix> generators;
  /// Rows of the reduced echelon form of the invariant subspace: each element
  /// has coefficient 1 on its own pivot monomial and 0 on every other pivot.
  std::vector<CubicForm> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Group average of the substitution matrices; a projector onto the
/// invariant cubics.
Matrix reynolds_operator(const MatrixGroup& g);

/// Basis of the image of the Reynolds operator.
InvariantSpace reynolds_basis(const MatrixGroup& g);

/// Common fixed space of the generators' substitution matrices, reduced the
/// same way as reynolds_basis.
InvariantSpace fixed_space(const std::vector<Matrix>& generators);

/// Variables occurring with positive exponent in some element of the span.
std::set<int> variable_support(const InvariantSpace& s);

/// Lowest i such that x_i occurs in the span, and only through x_i^3. Such
/// an i makes every member a triple cover branched along a cubic surface.
std::optional<int> split_variable_check(const InvariantSpace& s);

/// Dimension of the span of `forms`.
std::size_t span_dimension(const std::vector<CubicForm>& forms);

}  // namespace cubicsym

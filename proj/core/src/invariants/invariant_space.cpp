#include "cubicsym/invariants/invariant_space.hpp"

#include "cubicsym/linalg/echelon.hpp"

namespace cubicsym {

namespace {

// Nonzero rows of the RREF of a matrix whose rows span the space.
std::vector<CubicForm> reduced_rows(const Matrix& rows) {
  const EchelonForm e = rref(rows);
  std::vector<CubicForm> out;
  for (std::size_t r = 0; r < e.rank; ++r) {
    const auto row = e.echelon.row(r);
    out.push_back(CubicForm::from_coefficients(std::vector<Cyclotomic>(row.begin(), row.end())));
  }
  return out;
}

}  // namespace

Matrix reynolds_operator(const MatrixGroup& g) {
  const std::size_t n = cubic_monomials().size();
  Matrix r(n, n);
  // averaging over g or g^-1 gives the same operator
  for (const auto& e : g.elements()) r += substitution_matrix(e);
  r *= Cyclotomic(Rational(1, static_cast<long>(g.order())));
  return r;
}

InvariantSpace reynolds_basis(const MatrixGroup& g) {
  return InvariantSpace{g.generators(), reduced_rows(reynolds_operator(g).transpose())};
}

InvariantSpace fixed_space(const std::vector<Matrix>& generators) {
  const std::size_t n = cubic_monomials().size();
  Matrix stacked(n * generators.size(), n);
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const Matrix d = substitution_matrix(generators[s]) - Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(s * n + i, j) = d(i, j);
  }
  const auto kernel = nullspace(stacked);
  Matrix rows(kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = kernel[i][j];
  return InvariantSpace{generators, kernel.empty() ? std::vector<CubicForm>{} : reduced_rows(rows)};
}

std::set<int> variable_support(const InvariantSpace& s) {
  std::set<int> out;
  for (const auto& f : s.basis) out.merge(f.variables());
  return out;
}

std::optional<int> split_variable_check(const InvariantSpace& s) {
  const auto support = variable_support(s);
  for (int i : support) {
    bool only_cube = true;
    for (const auto& f : s.basis)
      for (const auto& [m, c] : f.terms())
        if (m.exponents[i] > 0 && m.exponents[i] != 3) only_cube = false;
    if (only_cube) return i;
  }
  return std::nullopt;
}

std::size_t span_dimension(const std::vector<CubicForm>& forms) {
  if (forms.empty()) return 0;
  Matrix m(forms.size(), cubic_monomials().size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    const auto c = forms[r].coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) m(r, j) = c[j];
  }
  return rank(m);
}

}  // namespace cubicsym

#include "cubicsym/linalg/echelon.hpp"

#include "cubicsym/errors.hpp"

namespace cubicsym {

EchelonForm rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    if (!a(r, col).is_one()) {
      const Cyclotomic inv = a(r, col).inverse();
      for (std::size_t j = col; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, col).is_zero()) continue;
      const Cyclotomic f = a(i, col);
      for (std::size_t j = col; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  out.echelon = std::move(a);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<Cyclotomic>> nullspace(const Matrix& m) {
  const EchelonForm e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivot_columns[i]] = -e.echelon(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t commutant_dimension(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw Error("commutant of an empty generator list");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw Error("generators must be square of equal size");
  // unknown X_{ab} sits at column a*n + b; equation (X g - g X)_{ij} = 0
  Matrix system(generators.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          // (X g)_{ij} = sum_k X_{ik} g_{kj}
          if (!g(k, j).is_zero()) system(row, i * n + k) += g(k, j);
          // (g X)_{ij} = sum_k g_{ik} X_{kj}
          if (!g(i, k).is_zero()) system(row, k * n + j) -= g(i, k);
        }
      }
  }
  return n * n - rank(system);
}

}  // namespace cubicsym

#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cubicsym/linalg/matrix.hpp"

namespace cubicsym {

inline constexpr int kVariables = 5;

/// x0^e0 * ... * x4^e4.
struct Monomial {
  std::array<int, kVariables> exponents{};

  int degree() const;
  std::string to_string() const;

  /// Graded lexicographic: lower degree first, then larger leading exponents
  /// first, so x0^3 precedes x0^2*x1.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// The 35 cubic monomials in graded-lex order.
const std::vector<Monomial>& cubic_monomials();
/// Position of a cubic monomial in cubic_monomials().
std::size_t cubic_index(const Monomial& m);

/// Homogeneous cubic in x0..x4; zero coefficients are never stored.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(const Monomial& m, const Cyclotomic& c = Cyclotomic(1));
  /// From 35 coefficients in cubic_monomials() order.
  static CubicForm from_coefficients(const std::vector<Cyclotomic>& dense);
  /// Parses `coeff*x0^a*x1^b + ...`; coefficients use the E(n)^k encoding and
  /// may be parenthesized. Throws ParseError.
  static CubicForm parse(std::string_view text);

  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(const Monomial& m) const;
  std::vector<Cyclotomic> coefficients() const;
  bool is_zero() const { return terms_.empty(); }
  std::set<int> variables() const;
  int conductor() const;
  std::string to_string() const;

  CubicForm& operator+=(const CubicForm& other);
  CubicForm& operator-=(const CubicForm& other);
  CubicForm& operator*=(const Cyclotomic& c);
  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  void add(const Monomial& m, const Cyclotomic& c);
  std::map<Monomial, Cyclotomic> terms_;
};

CubicForm operator+(CubicForm a, const CubicForm& b);
CubicForm operator-(CubicForm a, const CubicForm& b);
CubicForm operator*(const Cyclotomic& c, CubicForm f);
std::ostream& operator<<(std::ostream& os, const CubicForm& f);

/// 35x35 matrix whose column j holds the coefficients of m_j(A x).
Matrix substitution_matrix(const Matrix& a);

/// (g.F)(x) = F(g^-1 x).
CubicForm act(const Matrix& g, const CubicForm& f);

}  // namespace cubicsym

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicsym {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Number of integers in [1, n] coprime to n.
int euler_phi(int n);

/// Conductor normalization: Q(zeta_2m) = Q(zeta_m) for odd m, so n = 2 mod 4
/// is replaced by n / 2.
int normalize_conductor(int n);

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// The value is stored in the power basis 1, z, ..., z^(phi(n)-1) of
/// Q[x]/(Phi_n) as integer numerators over one positive common denominator.
/// Every value is kept in canonical form: the conductor is the smallest n
/// (with n != 2 mod 4) whose field contains the value, and
/// gcd(content(numerators), denominator) = 1. Two values are equal exactly
/// when their representations are equal.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k, reduced to its minimal conductor.
  static Cyclotomic root_of_unity(long n, long k);

  /// Builds sum_j coeffs[j] * zeta_n^j. Any length is accepted; exponents are
  /// reduced modulo n and the result is brought into canonical form.
  static Cyclotomic from_power_sum(int n, const std::vector<Rational>& coeffs);

  /// Parses the E(n)^k text encoding, e.g. "-1/2*E(11)^3 + 2".
  static Cyclotomic parse(std::string_view text);

  int conductor() const { return n_; }
  std::size_t degree() const { return num_.size(); }
  Rational coefficient(std::size_t j) const;
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  bool is_integer() const { return n_ == 1 && den_ == 1; }
  /// Throws Error if the value is not rational.
  Rational to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  /// Multiplicative inverse; throws ZeroDivision on zero.
  Cyclotomic inverse() const;
  /// Complex conjugate, the Galois automorphism zeta_n -> zeta_n^(n-1).
  Cyclotomic conjugate() const;
  /// Galois automorphism zeta -> zeta^k on the value's own field; k must be
  /// coprime to the conductor.
  Cyclotomic galois(long k) const;
  Cyclotomic pow(long e) const;

  /// Value expressed over Q(zeta_n) for a multiple n of the conductor.
  std::vector<Rational> coefficients_in(int n) const;

  /// Numeric embedding with zeta_n = exp(2 pi i / n). Display only.
  std::complex<double> to_complex() const;

  /// Canonical E(n)^k encoding. Parsing the result gives back an equal value.
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

 private:
  Cyclotomic(int n, std::vector<Integer> num, Integer den);
  void canonicalize();
  void remove_content();
  void descend();
  static Cyclotomic lift(const Cyclotomic& a, int n);

  int n_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
inline Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

}  // namespace cubicsym

template <>
struct std::hash<cubicsym::Cyclotomic> {
  std::size_t operator()(const cubicsym::Cyclotomic& c) const noexcept {
    return c.hash();
  }
};

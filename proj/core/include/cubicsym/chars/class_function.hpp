#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/exact/cyclotomic.hpp"
#include "cubicsym/groups/matrix_group.hpp"

namespace cubicsym {

/// A function on the conjugacy classes of a finite group.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const ClassStructure> classes, std::vector<Cyclotomic> values);

  static ClassFunction trivial(std::shared_ptr<const ClassStructure> classes);

  const ClassStructure& classes() const { return *classes_; }
  const std::shared_ptr<const ClassStructure>& class_structure() const { return classes_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const { return values_.size(); }
  /// Value at the identity class.
  const Cyclotomic& degree() const { return values_.front(); }

  /// c -> value(class of g^k) for g in c.
  ClassFunction compose_power(int k) const;
  ClassFunction conjugate() const;

  ClassFunction& operator+=(const ClassFunction& other);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  std::shared_ptr<const ClassStructure> classes_;
  std::vector<Cyclotomic> values_;
};

ClassFunction operator+(ClassFunction a, const ClassFunction& b);
ClassFunction operator*(long k, const ClassFunction& a);
std::string to_string(const ClassFunction& f);

/// Pointwise product. Throws GroupMismatch.
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

/// Character of the k-th symmetric power, k in {2, 3}.
ClassFunction sym_power(const ClassFunction& chi, int k);

struct InnerProduct {
  Rational value;
  /// Set when both arguments were declared characters but the value is not a
  /// nonnegative integer.
  bool non_integral = false;
};

/// (1/|G|) sum_C |C| a(C) conj(b(C)). Throws GroupMismatch, and Error when
/// the sum is not rational.
InnerProduct inner_product(const ClassFunction& a, const ClassFunction& b,
                           bool characters = true);

/// Traces of the class representatives.
ClassFunction character_of(const MatrixGroup& g);

/// Determinants of the class representatives, cross-checked against the
/// power-map route; throws ContractViolation when they differ.
ClassFunction det_character(const MatrixGroup& g);

/// det from the power sums chi(g^k), k = 1..n, by Newton's identities.
/// Needs power maps 2, 3 and 5 when the degree is 5.
ClassFunction det_from_power_maps(const ClassFunction& chi);

/// <S^3 chi, 1>: dimension of the invariant cubic forms.
std::size_t dim_invariant_cubics(const ClassFunction& chi);

/// <S^2(det chi (x) chi), 1>.
std::size_t dim_special_subvariety(const ClassFunction& chi, const ClassFunction& det);

/// Character data for a group known only through its class structure.
struct AbstractCharDatum {
  std::string name;
  std::shared_ptr<const ClassStructure> classes;
  std::vector<std::string> character_names;
  std::vector<ClassFunction> characters;

  /// Throws Error for an unknown name.
  const ClassFunction& character(const std::string& name) const;
};

/// Parses a datum from JSON text:
///   {"name", "group_order",
///    "classes": [{"label", "order", "size"}...],
///    "power_maps": {"2": [label...], ...},
///    "characters": [{"name", "values": ["E(n)^k" text...]}...]}
/// Throws ContractViolation when sizes do not sum to the order or a power map
/// moves the identity class.
AbstractCharDatum parse_char_datum(const std::string& json_text);
AbstractCharDatum load_char_datum(const std::filesystem::path& path);

}  // namespace cubicsym

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/linalg/matrix.hpp"

namespace cubicsym {

struct GroupConfig {
  /// Closure stops with CapExceeded beyond this many elements.
  std::size_t cap = 20000;
  /// A generator whose order exceeds this bound is declared NotFinite.
  int order_bound = 1000;
};

/// Class sizes, power maps and labels; shared by matrix groups and abstract
/// character data.
struct ClassStructure {
  std::size_t group_order = 0;
  std::vector<std::size_t> sizes;
  std::vector<int> element_orders;
  std::vector<std::string> labels;
  /// power_maps[k][c] = class of g^k for g in class c.
  std::map<int, std::vector<std::size_t>> power_maps;

  std::size_t size() const { return sizes.size(); }
  bool has_power_map(int k) const { return power_maps.count(k) != 0; }
  /// Class of g^k, composing stored maps when k factors over them; throws
  /// MissingPowerMap otherwise.
  std::size_t power_class(std::size_t c, int k) const;
};

struct ConjClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;  // sorted element indices
  std::size_t size = 0;
  int element_order = 1;
  std::map<int, std::size_t> power_class;  // k in {2, 3, 5}
  std::string label;
};

/// Finite subgroup of GL(n) with every element enumerated.
///
/// Elements are sorted by the printed canonical form of their entries, so
/// indices are reproducible across runs. Conjugacy classes list the
/// identity class first, then classes by element order, size and smallest
/// member. Values are immutable and cheap to copy.
class MatrixGroup {
 public:
  static MatrixGroup generate(std::vector<Matrix> generators, const GroupConfig& config = {});

  std::size_t dimension() const;
  std::size_t order() const;
  const std::vector<Matrix>& generators() const;
  const std::vector<Matrix>& elements() const;
  const Matrix& element(std::size_t i) const { return elements()[i]; }
  std::optional<std::size_t> index_of(const Matrix& m) const;
  std::size_t identity_index() const;

  const std::vector<ConjClass>& classes() const;
  std::size_t class_of(std::size_t element) const;
  const std::shared_ptr<const ClassStructure>& class_structure() const;
  int element_order(std::size_t element) const;
  /// Least common multiple of the entry conductors of the generators.
  int conductor() const;
  const GroupConfig& config() const;

  /// Index of element(i) * element(j). The first call builds the full
  /// multiplication table (order^2 entries).
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;

 private:
  struct Impl;
  explicit MatrixGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Multiset of eigenvalues of a finite-order matrix as exponents of zeta_n.
struct EigenProfile {
  int order = 1;
  std::vector<int> multiplicity;  // index k -> multiplicity of zeta_n^k

  int count(int k) const;
  int total() const;
  /// Profile of g^j for j coprime to the order.
  EigenProfile power(int j) const;
  friend bool operator==(const EigenProfile&, const EigenProfile&) = default;
};

std::string to_string(const EigenProfile& p);

/// Smallest n >= 1 with g^n = 1; throws NotFiniteOrder beyond `bound`.
int matrix_order(const Matrix& g, int bound = 1000);

/// Eigen profile from m_k = (1/n) sum_j trace(g^j) zeta_n^(-jk). Throws Error
/// when the multiplicities are not nonnegative integers.
EigenProfile eigen_profile(const Matrix& g, int bound = 1000);

/// True iff the identity is the only scalar matrix in the group.
bool is_projectively_faithful(const MatrixGroup& g);

/// The group generated by g and zeta_3 * identity.
MatrixGroup scalar_saturate(const MatrixGroup& g);

/// (order, abelian?, element-order multiset): separates every subgroup type
/// of the groups treated here.
struct GroupFingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::map<int, std::size_t> element_orders;

  /// Conventional name when the fingerprint pins one down, e.g. "Alt(4)".
  std::string type_name() const;
  friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const MatrixGroup& g);

struct SubgroupClass {
  std::vector<std::size_t> elements;    // sorted indices into the parent
  std::vector<std::size_t> generators;  // at most two parent indices
  GroupFingerprint fingerprint;
};

/// Subgroups generated by at most two elements, one per conjugacy class in
/// the parent, sorted by fingerprint. Requires order <= 1000.
std::vector<SubgroupClass> subgroups_two_generated(const MatrixGroup& g);

/// The subgroup as a standalone matrix group.
MatrixGroup materialize(const MatrixGroup& parent, const SubgroupClass& sub);

}  // namespace cubicsym

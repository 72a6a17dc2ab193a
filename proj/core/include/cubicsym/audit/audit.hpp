#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/groups/matrix_group.hpp"
#include "cubicsym/invariants/invariant_space.hpp"
#include "cubicsym/smoothprobe/smoothprobe.hpp"

namespace cubicsym {

struct CyclicLocus {
  bool certified = false;  // false means Unknown
  std::string reason;
};

struct LiftabilityViolation {
  std::string class_label;
  int order = 1;
  std::string profile;
  std::string condition;
};

struct NonEmptyEvidence {
  enum class Status { Certified, Inconclusive, EmptyCertified };
  Status status = Status::Inconclusive;
  std::string reason;
  std::optional<ProbeResult> probe;
};

std::string to_string(NonEmptyEvidence::Status s);

struct AuditConfig {
  ProbeConfig probe;
  /// Threads for lattice audits; 0 means one per hardware thread.
  unsigned workers = 0;
};

struct Provenance {
  std::string version;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::int64_t> primes;  // requested; empty means the default rule
};

struct AuditReport {
  std::string group_id;
  std::size_t order = 0;
  std::string type;
  bool projectively_faithful = true;
  std::size_t dim_U = 0;
  std::size_t commutant_dim = 0;
  /// Present only when the family is certified nonempty.
  std::optional<std::size_t> dim_moduli;
  std::size_t dim_special = 0;
  /// Present exactly when dim_moduli is.
  std::optional<bool> criterion_holds;
  CyclicLocus cyclic_locus;
  std::vector<LiftabilityViolation> liftability_violations;
  NonEmptyEvidence nonempty;
  std::vector<std::string> invariant_basis;
  Provenance provenance;
};

/// Necessary conditions on the eigenvalues of elements of order 2, 4 and 5
/// in a lifting that fixes a smooth cubic; checked on class representatives.
std::vector<LiftabilityViolation> liftability_check(const MatrixGroup& g);

/// Liftability violations, then a missing variable (cone), certify
/// emptiness; otherwise the finite-field probe decides.
NonEmptyEvidence nonempty_evidence(const InvariantSpace& s,
                                   const std::vector<LiftabilityViolation>& violations,
                                   const ProbeConfig& config = {});

/// dim U^G - dim of the commutant when `evidence` certifies a nonempty
/// family; nullopt otherwise. Throws NotProjectivelyFaithful.
std::optional<std::size_t> dim_moduli(const MatrixGroup& g, const NonEmptyEvidence& evidence);

/// Certified when some element has eigenvalues (a, a, a, a, b) with b/a a
/// primitive cube root of unity (a property of the projective class, so it
/// holds for the scalar saturation as well), or when split_variable_check
/// succeeds.
CyclicLocus cyclic_locus_flag(const MatrixGroup& g, const InvariantSpace& s);

/// Full audit. Throws NotProjectivelyFaithful.
AuditReport check_criterion(const MatrixGroup& g, const std::string& group_id,
                            const AuditConfig& config = {});

struct LatticeNode {
  GroupFingerprint fingerprint;
  std::vector<std::size_t> generators;  // indices into the parent
  AuditReport report;
};

/// One audit per conjugacy class of two-generated subgroups, in fingerprint
/// order; nodes are audited in parallel and the first failing node's error
/// is rethrown.
std::vector<LatticeNode> lattice_report(const MatrixGroup& g, const AuditConfig& config = {});

/// Canonical JSON (sorted keys, two-space indent).
std::string to_json(const AuditReport& r);
std::string to_text(const AuditReport& r);
std::string lattice_to_json(const std::vector<LatticeNode>& nodes);
std::string lattice_to_text(const std::vector<LatticeNode>& nodes);
/// Columns: node, order, type, dim_M, dim_Z, criterion.
std::string lattice_to_csv(const std::vector<LatticeNode>& nodes);

}  // namespace cubicsym

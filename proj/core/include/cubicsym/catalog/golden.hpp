#pragma once

#include <string>
#include <vector>

#include "cubicsym/audit/audit.hpp"

namespace cubicsym {

struct GoldenCheck {
  int criterion = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // observed values, or the first mismatch
};

/// The reference values of the published computations, one check per
/// acceptance criterion, in criterion order. Criterion 12 needs the enabled
/// order-660 entry and fails with a note otherwise. Errors raised inside a
/// check fail that check only.
std::vector<GoldenCheck> golden_checks(const AuditConfig& config = {});

}  // namespace cubicsym

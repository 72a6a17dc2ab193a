#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/chars/class_function.hpp"
#include "cubicsym/groups/matrix_group.hpp"
#include "cubicsym/invariants/cubic_form.hpp"

namespace cubicsym {

/// Where a generator comes from: "published", "derived" or "trivial", with a
/// one-line justification.
struct GeneratorSource {
  std::string kind;
  std::string note;
};

/// The character must equal one of the listed integer combinations of the
/// datum's irreducibles under some class bijection that preserves element
/// orders, class sizes and power maps.
struct CharacterContract {
  std::string datum;
  std::vector<std::map<std::string, long>> any_of;
};

/// Every present field is checked when an entry is loaded.
struct ValidationContract {
  std::optional<std::size_t> order;
  std::optional<std::size_t> class_count;
  /// Character values in the group's canonical class order.
  std::optional<std::vector<Cyclotomic>> character;
  std::optional<CharacterContract> character_of;
  /// A form every generator must fix.
  std::optional<CubicForm> fixed_form;
  std::optional<std::size_t> invariant_dim;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  int conductor = 1;
  bool enabled = true;
  std::vector<Matrix> generators;
  std::vector<GeneratorSource> sources;  // one per generator
  ValidationContract contract;
};

/// Throws ParseError on malformed input and ContractViolation when sources
/// and generators disagree in number or a generator is not 5 x 5.
CatalogEntry parse_catalog_entry(const std::string& json_text);
/// Canonical JSON; parse_catalog_entry(to_catalog_json(e)) reproduces e.
std::string to_catalog_json(const CatalogEntry& e);

/// $CUBICSYM_DATA_DIR if set, else the installed data directory if present,
/// else the source tree's.
std::filesystem::path data_dir();

/// Sorted ids of the shipped entries.
std::vector<std::string> catalog_ids(bool include_disabled = false);

/// An id from the catalog directory, or a path to an entry file.
CatalogEntry load_entry(const std::string& id_or_path);

/// Throws ContractViolation naming the first failed check.
void validate(const CatalogEntry& e, const MatrixGroup& g);

/// Loads, generates and validates. Disabled entries load only on request.
MatrixGroup load_group(const std::string& id_or_path, bool allow_disabled = false,
                       const GroupConfig& config = {});

/// Class bijection a -> b preserving orders, sizes, power maps and values;
/// result[i] is the class of b matched to class i of a.
std::optional<std::vector<std::size_t>> match_characters(const ClassFunction& a,
                                                         const ClassFunction& b);

}  // namespace cubicsym

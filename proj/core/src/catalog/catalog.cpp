#include "cubicsym/catalog/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cubicsym/errors.hpp"
#include "cubicsym/invariants/invariant_space.hpp"
#include "json.hpp"

#ifndef CUBICSYM_INSTALL_DATA_DIR
#define CUBICSYM_INSTALL_DATA_DIR ""
#endif
#ifndef CUBICSYM_SOURCE_DATA_DIR
#define CUBICSYM_SOURCE_DATA_DIR ""
#endif

namespace cubicsym {

using nlohmann::json;

namespace {

Matrix parse_matrix(const json& rows) {
  if (!rows.is_array() || rows.size() != 5) throw ContractViolation("generator must have 5 rows");
  Matrix m(5, 5);
  for (std::size_t r = 0; r < 5; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 5)
      throw ContractViolation("generator row must have 5 entries");
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = Cyclotomic::parse(rows[r][c].get<std::string>());
  }
  return m;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ClassFunction combination(const AbstractCharDatum& d, const std::map<std::string, long>& coeffs) {
  std::optional<ClassFunction> sum;
  for (const auto& [name, k] : coeffs) {
    const ClassFunction term = k * d.character(name);
    sum = sum ? *sum + term : term;
  }
  if (!sum) throw ContractViolation("empty character combination");
  return *sum;
}

std::string describe(const std::map<std::string, long>& coeffs) {
  std::string out;
  for (const auto& [name, k] : coeffs) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += name;
  }
  return out;
}

}  // namespace

CatalogEntry parse_catalog_entry(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog entry: ") + e.what());
  }
  try {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.description = j.value("description", "");
    e.conductor = j.value("conductor", 1);
    e.enabled = j.value("enabled", true);
    for (const auto& g : j.at("generators")) e.generators.push_back(parse_matrix(g));
    for (const auto& s : j.value("sources", json::array()))
      e.sources.push_back({s.at("kind").get<std::string>(), s.value("note", "")});
    if (e.generators.empty()) throw ContractViolation(e.id + ": no generators");
    if (e.sources.size() != e.generators.size())
      throw ContractViolation(e.id + ": every generator needs a source");

    const json c = j.value("contract", json::object());
    auto& v = e.contract;
    if (c.contains("order")) v.order = c["order"].get<std::size_t>();
    if (c.contains("class_count")) v.class_count = c["class_count"].get<std::size_t>();
    if (c.contains("invariant_dim")) v.invariant_dim = c["invariant_dim"].get<std::size_t>();
    if (c.contains("fixed_form")) v.fixed_form = CubicForm::parse(c["fixed_form"].get<std::string>());
    if (c.contains("character")) {
      std::vector<Cyclotomic> values;
      for (const auto& x : c["character"]) values.push_back(Cyclotomic::parse(x.get<std::string>()));
      v.character = std::move(values);
    }
    if (c.contains("character_of")) {
      CharacterContract cc;
      cc.datum = c["character_of"].at("datum").get<std::string>();
      for (const auto& combo : c["character_of"].at("any_of"))
        cc.any_of.push_back(combo.get<std::map<std::string, long>>());
      v.character_of = std::move(cc);
    }
    return e;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("catalog entry: ") + ex.what());
  }
}

std::string to_catalog_json(const CatalogEntry& e) {
  json j;
  j["id"] = e.id;
  j["description"] = e.description;
  j["conductor"] = e.conductor;
  j["enabled"] = e.enabled;
  json gens = json::array();
  for (const auto& m : e.generators) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  json sources = json::array();
  for (const auto& s : e.sources) sources.push_back({{"kind", s.kind}, {"note", s.note}});
  j["sources"] = sources;
  json c = json::object();
  const auto& v = e.contract;
  if (v.order) c["order"] = *v.order;
  if (v.class_count) c["class_count"] = *v.class_count;
  if (v.invariant_dim) c["invariant_dim"] = *v.invariant_dim;
  if (v.fixed_form) c["fixed_form"] = v.fixed_form->to_string();
  if (v.character) {
    json values = json::array();
    for (const auto& x : *v.character) values.push_back(x.to_string());
    c["character"] = values;
  }
  if (v.character_of) c["character_of"] = {{"datum", v.character_of->datum}, {"any_of", v.character_of->any_of}};
  j["contract"] = c;
  return j.dump(2) + "\n";
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CUBICSYM_DATA_DIR"); env && *env) return env;
  const std::filesystem::path installed = CUBICSYM_INSTALL_DATA_DIR;
  if (!installed.empty() && std::filesystem::exists(installed / "catalog")) return installed;
  return CUBICSYM_SOURCE_DATA_DIR;
}

std::vector<std::string> catalog_ids(bool include_disabled) {
  std::vector<std::string> ids;
  const auto dir = data_dir() / "catalog";
  if (!std::filesystem::is_directory(dir)) return ids;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() != ".json") continue;
    if (!include_disabled && !parse_catalog_entry(read_file(f.path())).enabled) continue;
    ids.push_back(f.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

CatalogEntry load_entry(const std::string& id_or_path) {
  std::filesystem::path p = id_or_path;
  if (!std::filesystem::is_regular_file(p)) p = data_dir() / "catalog" / (id_or_path + ".json");
  if (!std::filesystem::is_regular_file(p)) throw Error("unknown catalog entry: " + id_or_path);
  return parse_catalog_entry(read_file(p));
}

std::optional<std::vector<std::size_t>> match_characters(const ClassFunction& a,
                                                         const ClassFunction& b) {
  const auto& ca = *a.class_structure();
  const auto& cb = *b.class_structure();
  if (ca.group_order != cb.group_order || ca.size() != cb.size()) return std::nullopt;
  const std::size_t n = ca.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  auto power_maps_commute = [&] {
    for (const auto& [k, map] : ca.power_maps) {
      const auto it = cb.power_maps.find(k);
      if (it == cb.power_maps.end()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (image[map[c]] != it->second[image[c]]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return power_maps_commute();
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || ca.element_orders[i] != cb.element_orders[t] || ca.sizes[i] != cb.sizes[t] ||
          !(a[i] == b[t]))
        continue;
      used[t] = true;
      image[i] = t;
      if (self(self, i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

void validate(const CatalogEntry& e, const MatrixGroup& g) {
  const auto fail = [&e](const std::string& what) { throw ContractViolation(e.id + ": " + what); };
  const auto& v = e.contract;
  if (e.conductor % g.conductor() != 0)
    fail("declared conductor " + std::to_string(e.conductor) + " does not contain the entries");
  if (v.order && g.order() != *v.order)
    fail("order " + std::to_string(g.order()) + ", expected " + std::to_string(*v.order));
  if (v.class_count && g.classes().size() != *v.class_count)
    fail(std::to_string(g.classes().size()) + " classes, expected " + std::to_string(*v.class_count));
  const ClassFunction chi = character_of(g);
  if (v.character && chi.values() != *v.character) fail("character differs from the declared values");
  if (v.character_of) {
    const auto datum = load_char_datum(data_dir() / "characters" / (v.character_of->datum + ".json"));
    const bool ok = std::any_of(v.character_of->any_of.begin(), v.character_of->any_of.end(),
                                [&](const auto& combo) {
                                  return match_characters(chi, combination(datum, combo)).has_value();
                                });
    if (!ok) {
      std::string options;
      for (const auto& combo : v.character_of->any_of)
        options += (options.empty() ? "" : " or ") + describe(combo);
      fail("character matches none of " + options + " in " + v.character_of->datum);
    }
  }
  if (v.fixed_form)
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      if (!(act(g.generators()[i], *v.fixed_form) == *v.fixed_form))
        fail("generator " + std::to_string(i) + " moves " + v.fixed_form->to_string());
  if (v.invariant_dim) {
    const std::size_t d = dim_invariant_cubics(chi);
    if (d != *v.invariant_dim)
      fail("invariant cubics have dimension " + std::to_string(d) + ", expected " +
           std::to_string(*v.invariant_dim));
  }
}

MatrixGroup load_group(const std::string& id_or_path, bool allow_disabled, const GroupConfig& config) {
  const CatalogEntry e = load_entry(id_or_path);
  if (!e.enabled && !allow_disabled) throw Error(e.id + " is disabled until it validates");
  MatrixGroup g = MatrixGroup::generate(e.generators, config);
  validate(e, g);
  return g;
}

}  // namespace cubicsym

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "cubicsym/audit/audit.hpp"
#include "cubicsym/catalog/catalog.hpp"
#include "cubicsym/catalog/golden.hpp"
#include "cubicsym/errors.hpp"
#include "json.hpp"

namespace {

using namespace cubicsym;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Settings {
  GroupConfig group;
  AuditConfig audit;
};

// Keys: cap, order_bound, primes, seed, trials, workers. Command-line flags
// override the file.
void read_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    s.group.cap = j.value("cap", s.group.cap);
    s.group.order_bound = j.value("order_bound", s.group.order_bound);
    s.audit.probe.primes = j.value("primes", s.audit.probe.primes);
    s.audit.probe.seed = j.value("seed", s.audit.probe.seed);
    s.audit.probe.trials = j.value("trials", s.audit.probe.trials);
    s.audit.workers = j.value("workers", s.audit.workers);
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
}

// Audits run in parallel; results are printed in argument order.
int run_audits(const std::vector<std::string>& entries, const Settings& s, bool json, bool csv) {
  std::vector<AuditReport> reports(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      try {
        reports[i] = check_criterion(load_group(entries[i], true, s.group), load_entry(entries[i]).id, s.audit);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = s.audit.workers ? s.audit.workers : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers && w < entries.size(); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (csv) {
    std::vector<LatticeNode> rows;
    for (const auto& r : reports) rows.push_back({{}, {}, r});
    std::cout << lattice_to_csv(rows);
  } else if (json && reports.size() == 1) {
    std::cout << to_json(reports.front());
  } else if (json) {
    auto array = nlohmann::json::array();
    for (const auto& r : reports) array.push_back(nlohmann::json::parse(to_json(r)));
    std::cout << array.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << to_text(reports[i]);
  }
  return kOk;
}

bool resolvable(const std::string& entry) {
  return std::filesystem::is_regular_file(entry) ||
         std::filesystem::is_regular_file(data_dir() / "catalog" / (entry + ".json"));
}

int run_selftest(const Settings& s) {
  int failed = 0;
  for (const auto& c : golden_checks(s.audit)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.criterion << ' ' << c.title << ": " << c.detail << '\n';
    failed += !c.passed;
  }
  std::cout << (failed ? std::to_string(failed) + " golden check(s) failed" : "all golden checks passed") << '\n';
  return failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant cubic threefolds of finite matrix groups"};
  app.require_subcommand(1);
  Settings s;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with cap, order_bound, primes, seed, trials, workers")
      ->check(CLI::ExistingFile);

  std::vector<std::string> entries;
  bool json = false, csv = false;
  std::vector<std::int64_t> primes;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  auto* audit = app.add_subcommand("audit", "Audit catalog entries or entry files");
  audit->add_option("entry", entries, "Catalog id or path to an entry file")->required();
  auto* json_flag = audit->add_flag("--json", json, "Canonical JSON report");
  audit->add_flag("--csv", csv, "One CSV row per entry")->excludes(json_flag);
  audit->add_option("--prime", primes, "Probe prime (repeatable)");
  audit->add_option("--seed", seed, "Probe seed");
  audit->add_option("--trials", trials, "Probe samples per prime")->check(CLI::PositiveNumber);

  std::string lattice_entry;
  bool lattice_json = false, lattice_csv = false;
  auto* lattice = app.add_subcommand("lattice", "Audit every two-generated subgroup class");
  lattice->add_option("entry", lattice_entry, "Catalog id or path")->required();
  auto* lattice_json_flag = lattice->add_flag("--json", lattice_json, "JSON array of reports");
  lattice->add_flag("--csv", lattice_csv, "CSV table")->excludes(lattice_json_flag);

  std::string invariants_entry;
  auto* invariants = app.add_subcommand("invariants", "Print the invariant cubic basis");
  invariants->add_option("entry", invariants_entry, "Catalog id or path")->required();

  auto* catalog = app.add_subcommand("catalog", "Catalog operations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");

  auto* selftest = app.add_subcommand("selftest", "Run the golden checks");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) read_config(config_path, s);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (!primes.empty()) s.audit.probe.primes = primes;
  if (seed) s.audit.probe.seed = *seed;
  if (trials) s.audit.probe.trials = *trials;

  std::vector<std::string> named = entries;
  if (*lattice) named.push_back(lattice_entry);
  if (*invariants) named.push_back(invariants_entry);
  for (const auto& e : named)
    if (!resolvable(e)) {
      std::cerr << "unknown entry: " << e << " (see `catalog list`)\n";
      return kUsage;
    }

  try {
    if (*audit) return run_audits(entries, s, json, csv);
    if (*lattice) {
      const auto nodes = lattice_report(load_group(lattice_entry, true, s.group), s.audit);
      std::cout << (lattice_json ? lattice_to_json(nodes)
                                 : lattice_csv ? lattice_to_csv(nodes) : lattice_to_text(nodes));
      return kOk;
    }
    if (*invariants) {
      for (const auto& f : reynolds_basis(load_group(invariants_entry, true, s.group)).basis)
        std::cout << f.to_string() << '\n';
      return kOk;
    }
    if (*list) {
      for (const auto& id : catalog_ids(true)) {
        const auto e = load_entry(id);
        std::cout << id << (e.enabled ? "" : " (disabled)") << "  " << e.description << '\n';
      }
      return kOk;
    }
    if (*selftest) return run_selftest(s);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

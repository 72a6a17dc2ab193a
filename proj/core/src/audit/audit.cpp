#include "cubicsym/audit/audit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "cubicsym/chars/class_function.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/linalg/echelon.hpp"
#include "json.hpp"

#ifndef CUBICSYM_VERSION
#define CUBICSYM_VERSION "unknown"
#endif

namespace cubicsym {

using nlohmann::json;

std::string to_string(NonEmptyEvidence::Status s) {
  switch (s) {
    case NonEmptyEvidence::Status::Certified: return "Certified";
    case NonEmptyEvidence::Status::Inconclusive: return "Inconclusive";
    case NonEmptyEvidence::Status::EmptyCertified: return "EmptyCertified";
  }
  return "";
}

std::vector<LiftabilityViolation> liftability_check(const MatrixGroup& g) {
  std::vector<LiftabilityViolation> out;
  for (const auto& c : g.classes()) {
    const int n = c.element_order;
    if (n != 2 && n != 4 && n != 5) continue;
    const EigenProfile p = eigen_profile(g.element(c.representative), g.config().order_bound);
    std::string condition;
    if (n == 2 && p.count(1) != 1 && p.count(1) != 2) {
      condition = "an involution must have eigenvalue -1 with multiplicity 1 or 2";
    } else if (n == 4 && p.count(0) == 4 && (p.count(1) == 1 || p.count(3) == 1)) {
      condition = "an element of order 4 must not have eigenvalues (+-i, 1, 1, 1, 1)";
    } else if (n == 5 && !std::all_of(p.multiplicity.begin(), p.multiplicity.end(),
                                       [](int m) { return m == 1; })) {
      condition = "an element of order 5 must have every fifth root of unity as eigenvalue";
    }
    if (!condition.empty()) out.push_back({c.label, n, to_string(p), condition});
  }
  return out;
}

NonEmptyEvidence nonempty_evidence(const InvariantSpace& s,
                                   const std::vector<LiftabilityViolation>& violations,
                                   const ProbeConfig& config) {
  NonEmptyEvidence out;
  if (!violations.empty()) {
    out.status = NonEmptyEvidence::Status::EmptyCertified;
    out.reason = "liftability: class " + violations.front().class_label + " (" +
                 violations.front().condition + ")";
    return out;
  }
  if (s.basis.empty()) {
    out.status = NonEmptyEvidence::Status::EmptyCertified;
    out.reason = "no invariant cubic forms";
    return out;
  }
  const auto support = variable_support(s);
  for (int i = 0; i < kVariables; ++i) {
    if (support.count(i)) continue;
    ProjectivePoint vertex{};
    vertex[i] = 1;
    std::ostringstream os;
    os << "cone: x" << i << " occurs in no invariant, every member is singular at [";
    for (int k = 0; k < kVariables; ++k) os << (k ? ":" : "") << vertex[k];
    os << ']';
    out.status = NonEmptyEvidence::Status::EmptyCertified;
    out.reason = os.str();
    return out;
  }
  try {
    out.probe = probe_nonempty(s, config);
  } catch (const BadPrime& e) {
    out.status = NonEmptyEvidence::Status::Inconclusive;
    out.reason = std::string("probe unavailable: ") + e.what();
    return out;
  }
  if (out.probe->status == ProbeResult::Status::NonEmptyCertified) {
    out.status = NonEmptyEvidence::Status::Certified;
    out.reason = "smooth member over F_" + std::to_string(out.probe->prime);
  } else {
    out.status = NonEmptyEvidence::Status::Inconclusive;
    out.reason = "no smooth member in " + std::to_string(out.probe->trials_run) + " samples";
  }
  return out;
}

std::optional<std::size_t> dim_moduli(const MatrixGroup& g, const NonEmptyEvidence& evidence) {
  if (!is_projectively_faithful(g)) throw NotProjectivelyFaithful();
  if (evidence.status != NonEmptyEvidence::Status::Certified) return std::nullopt;
  return dim_invariant_cubics(character_of(g)) - commutant_dimension(g.generators());
}

CyclicLocus cyclic_locus_flag(const MatrixGroup& g, const InvariantSpace& s) {
  const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  for (const auto& c : g.classes()) {
    if (c.element_order % 3 != 0) continue;
    const EigenProfile p = eigen_profile(g.element(c.representative), g.config().order_bound);
    int four = -1, one = -1;
    for (int k = 0; k < p.order; ++k) {
      if (p.multiplicity[k] == 4) four = k;
      if (p.multiplicity[k] == 1) one = k;
    }
    if (four < 0 || one < 0) continue;
    const Cyclotomic ratio = Cyclotomic::root_of_unity(p.order, one - four);
    if (ratio == w || ratio == w * w)
      return {true, "element of class " + c.label + " is a scalar multiple of a conjugate of "
                    "Diag(E(3), 1, 1, 1, 1) or its inverse"};
  }
  if (auto i = split_variable_check(s))
    return {true, "x" + std::to_string(*i) + " occurs only through x" + std::to_string(*i) + "^3"};
  return {false, "no certificate"};
}

AuditReport check_criterion(const MatrixGroup& g, const std::string& group_id,
                            const AuditConfig& config) {
  AuditReport r;
  r.group_id = group_id;
  r.order = g.order();
  r.type = fingerprint(g).type_name();
  r.projectively_faithful = is_projectively_faithful(g);
  if (!r.projectively_faithful) throw NotProjectivelyFaithful();
  const ClassFunction chi = character_of(g);
  const InvariantSpace s = reynolds_basis(g);
  r.dim_U = s.dimension();
  if (r.dim_U != dim_invariant_cubics(chi))
    throw ContractViolation("invariant dimension disagrees with <S^3 chi, 1>");
  r.commutant_dim = commutant_dimension(g.generators());
  r.dim_special = dim_special_subvariety(chi, det_character(g));
  r.liftability_violations = liftability_check(g);
  r.nonempty = nonempty_evidence(s, r.liftability_violations, config.probe);
  if (r.nonempty.status == NonEmptyEvidence::Status::Certified) {
    r.dim_moduli = r.dim_U - r.commutant_dim;
    r.criterion_holds = *r.dim_moduli == r.dim_special;
  }
  r.cyclic_locus = cyclic_locus_flag(g, s);
  for (const auto& f : s.basis) r.invariant_basis.push_back(f.to_string());
  r.provenance = {CUBICSYM_VERSION, config.probe.seed, config.probe.trials, config.probe.primes};
  return r;
}

std::vector<LatticeNode> lattice_report(const MatrixGroup& g, const AuditConfig& config) {
  const auto subs = subgroups_two_generated(g);
  std::vector<LatticeNode> out(subs.size());
  std::vector<std::exception_ptr> errors(subs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < subs.size();) {
      try {
        const MatrixGroup h = materialize(g, subs[i]);
        out[i] = {subs[i].fingerprint, subs[i].generators,
                  check_criterion(h, subs[i].fingerprint.type_name(), config)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers && w < subs.size(); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

json report_json(const AuditReport& r) {
  json j;
  j["group_id"] = r.group_id;
  j["order"] = r.order;
  j["type"] = r.type;
  j["projectively_faithful"] = r.projectively_faithful;
  j["dim_U"] = r.dim_U;
  j["commutant_dim"] = r.commutant_dim;
  j["dim_moduli"] = r.dim_moduli ? json(*r.dim_moduli) : json(nullptr);
  j["dim_special"] = r.dim_special;
  j["criterion_holds"] = r.criterion_holds ? json(*r.criterion_holds) : json(nullptr);
  j["cyclic_locus"] = {{"status", r.cyclic_locus.certified ? "CertifiedYes" : "Unknown"},
                       {"reason", r.cyclic_locus.reason}};
  json violations = json::array();
  for (const auto& v : r.liftability_violations)
    violations.push_back({{"class", v.class_label},
                          {"order", v.order},
                          {"profile", v.profile},
                          {"condition", v.condition}});
  j["liftability_violations"] = violations;
  json ne = {{"status", to_string(r.nonempty.status)}, {"reason", r.nonempty.reason}};
  if (r.nonempty.probe) {
    const auto& p = *r.nonempty.probe;
    ne["probe"] = {{"status", to_string(p.status)},
                   {"prime", p.prime},
                   {"seed", p.seed},
                   {"trials_run", p.trials_run},
                   {"sample", p.sample}};
  }
  j["nonempty"] = ne;
  j["invariant_basis"] = r.invariant_basis;
  j["provenance"] = {{"version", r.provenance.version},
                     {"seed", r.provenance.seed},
                     {"trials", r.provenance.trials},
                     {"primes", r.provenance.primes}};
  return j;
}

std::string optional_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "withheld";
}

std::string relation(const AuditReport& r) {
  if (!r.dim_moduli) return "-";
  const auto m = *r.dim_moduli;
  return m == r.dim_special ? "=" : (m < r.dim_special ? "<" : ">");
}

}  // namespace

std::string to_json(const AuditReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_text(const AuditReport& r) {
  std::ostringstream os;
  auto row = [&os](const std::string& key, const std::string& value) {
    os << std::left << std::setw(24) << key << value << '\n';
  };
  row("group", r.group_id);
  row("order", std::to_string(r.order));
  row("type", r.type);
  row("projectively faithful", r.projectively_faithful ? "yes" : "no");
  row("dim U^G", std::to_string(r.dim_U));
  row("dim commutant", std::to_string(r.commutant_dim));
  row("dim M_G", optional_text(r.dim_moduli));
  row("dim Z_G", std::to_string(r.dim_special));
  row("criterion", r.criterion_holds ? (*r.criterion_holds ? "holds" : "fails") : "undetermined");
  row("nonempty", to_string(r.nonempty.status) + " (" + r.nonempty.reason + ")");
  row("cyclic locus",
      (r.cyclic_locus.certified ? "CertifiedYes (" : "Unknown (") + r.cyclic_locus.reason + ")");
  row("liftability violations", std::to_string(r.liftability_violations.size()));
  for (const auto& v : r.liftability_violations)
    row("", v.class_label + " " + v.profile + ": " + v.condition);
  row("invariant basis", r.invariant_basis.empty() ? "(none)" : r.invariant_basis.front());
  for (std::size_t i = 1; i < r.invariant_basis.size(); ++i) row("", r.invariant_basis[i]);
  row("seed", std::to_string(r.provenance.seed));
  return os.str();
}

std::string lattice_to_json(const std::vector<LatticeNode>& nodes) {
  json j = json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    json node = report_json(nodes[i].report);
    node["node"] = i;
    j.push_back(node);
  }
  return j.dump(2) + "\n";
}

std::string lattice_to_text(const std::vector<LatticeNode>& nodes) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "node" << std::setw(7) << "order" << std::setw(14) << "type"
     << std::setw(7) << "dim_M" << std::setw(4) << "" << std::setw(7) << "dim_Z"
     << "nonempty\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& r = nodes[i].report;
    os << std::left << std::setw(6) << i << std::setw(7) << r.order << std::setw(14) << r.type
       << std::setw(7) << optional_text(r.dim_moduli) << std::setw(4) << relation(r)
       << std::setw(7) << r.dim_special << to_string(r.nonempty.status) << '\n';
  }
  return os.str();
}

std::string lattice_to_csv(const std::vector<LatticeNode>& nodes) {
  std::ostringstream os;
  os << "node,order,type,dim_M,dim_Z,criterion\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& r = nodes[i].report;
    os << i << ',' << r.order << ',' << r.type << ','
       << (r.dim_moduli ? std::to_string(*r.dim_moduli) : "") << ',' << r.dim_special << ','
       << (r.criterion_holds ? (*r.criterion_holds ? "true" : "false") : "") << '\n';
  }
  return os.str();
}

}  // namespace cubicsym

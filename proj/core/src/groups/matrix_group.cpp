#include "cubicsym/groups/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cubicsym/errors.hpp"

namespace cubicsym {

std::size_t ClassStructure::power_class(std::size_t c, int k) const {
  if (k == 1) return c;
  if (auto it = power_maps.find(k); it != power_maps.end()) return it->second[c];
  for (const auto& [p, map] : power_maps) {
    if (p > 1 && k % p == 0) return power_class(map[c], k / p);
  }
  throw MissingPowerMap(k);
}

struct MatrixGroup::Impl {
  GroupConfig config;
  std::size_t dim = 0;
  int conductor = 1;
  std::vector<Matrix> generators;
  std::vector<Matrix> elements;
  std::unordered_map<Matrix, std::size_t> index;
  std::size_t identity = 0;
  // left[s][i] = index of generators[s] * elements[i]
  std::vector<std::vector<std::uint32_t>> left;
  // closure tree: elements[bfs[t]] = generators[via[t]] * elements[parent[t]]
  std::vector<std::size_t> bfs_order;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::vector<ConjClass> classes;
  std::vector<std::size_t> class_of;
  std::shared_ptr<const ClassStructure> structure;

  mutable std::once_flag table_once;
  mutable std::vector<std::uint32_t> table;
  mutable std::vector<std::uint32_t> inverse;

  void build_table() const {
    std::call_once(table_once, [this] {
      const std::size_t n = elements.size();
      table.assign(n * n, 0);
      std::vector<bool> done(n, false);
      for (std::size_t j = 0; j < n; ++j) table[identity * n + j] = static_cast<std::uint32_t>(j);
      done[identity] = true;
      for (std::size_t i : bfs_order) {
        if (done[i]) continue;
        const auto& ls = left[via[i]];
        const std::size_t p = parent[i];
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = ls[table[p * n + j]];
        done[i] = true;
      }
      inverse.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (table[i * n + j] == identity) {
            inverse[i] = static_cast<std::uint32_t>(j);
            break;
          }
    });
  }
};

namespace {

std::string class_letter(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

std::vector<std::string> sort_key(const Matrix& m) {
  std::vector<std::string> key;
  key.reserve(m.entries().size());
  for (const auto& e : m.entries()) key.push_back(e.to_string());
  return key;
}

}  // namespace

int matrix_order(const Matrix& g, int bound) {
  if (!g.is_square()) throw Error("order of a non-square matrix");
  Matrix p = g;
  for (int n = 1; n <= bound; ++n) {
    if (p.is_identity()) return n;
    p = p * g;
  }
  throw NotFiniteOrder("element order exceeds " + std::to_string(bound));
}

MatrixGroup MatrixGroup::generate(std::vector<Matrix> generators, const GroupConfig& config) {
  if (generators.empty()) throw Error("at least one generator is required");
  const std::size_t dim = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) throw Error("generators must be square of equal size");
    if (determinant(g).is_zero()) throw Error("generator is not invertible");
    try {
      matrix_order(g, config.order_bound);
    } catch (const NotFiniteOrder&) {
      throw NotFinite("generator order exceeds " + std::to_string(config.order_bound));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->config = config;
  impl->dim = dim;
  impl->generators = generators;
  for (const auto& g : generators) impl->conductor = std::lcm(impl->conductor, g.conductor());

  // Breadth-first closure under left multiplication by generators.
  std::vector<Matrix> elems{Matrix::identity(dim)};
  std::unordered_map<Matrix, std::size_t> index{{elems[0], 0}};
  std::vector<std::size_t> parent{0}, via{0};
  std::vector<std::vector<std::uint32_t>> left(generators.size());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Matrix y = generators[s] * elems[head];
      auto it = index.find(y);
      std::size_t idx;
      if (it == index.end()) {
        if (elems.size() >= config.cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(config.cap));
        idx = elems.size();
        index.emplace(y, idx);
        elems.push_back(std::move(y));
        parent.push_back(head);
        via.push_back(s);
      } else {
        idx = it->second;
      }
      left[s].push_back(static_cast<std::uint32_t>(idx));
    }
  }
  const std::size_t n = elems.size();

  // Canonical ordering.
  std::vector<std::vector<std::string>> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = sort_key(elems[i]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  impl->elements.reserve(n);
  for (std::size_t r = 0; r < n; ++r) impl->elements.push_back(elems[order[r]]);
  for (std::size_t r = 0; r < n; ++r) impl->index.emplace(impl->elements[r], r);
  impl->identity = rank[0];
  impl->left.assign(generators.size(), std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < generators.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      impl->left[s][rank[i]] = static_cast<std::uint32_t>(rank[left[s][i]]);
  impl->parent.assign(n, 0);
  impl->via.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    impl->bfs_order.push_back(rank[i]);
    impl->parent[rank[i]] = rank[parent[i]];
    impl->via[rank[i]] = via[i];
  }

  // Conjugation by s^-1: x -> s^-1 x s, via right multiplication by s and the
  // inverse of the left-regular permutation of s.
  std::vector<std::vector<std::uint32_t>> conj(generators.size(), std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < generators.size(); ++s) {
    std::vector<std::uint32_t> left_inv(n);
    for (std::size_t i = 0; i < n; ++i) left_inv[impl->left[s][i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t xs = impl->index.at(impl->elements[i] * generators[s]);
      conj[s][i] = left_inv[xs];
    }
  }

  // Orbits.
  std::vector<std::size_t> class_of(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of[start] != SIZE_MAX) continue;
    std::vector<std::size_t> orbit{start};
    class_of[start] = orbits.size();
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto& c : conj) {
        const std::size_t y = c[orbit[h]];
        if (class_of[y] == SIZE_MAX) {
          class_of[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<ConjClass> classes;
  for (auto& orbit : orbits) {
    ConjClass c;
    c.representative = orbit.front();
    c.size = orbit.size();
    c.members = std::move(orbit);
    c.element_order = matrix_order(impl->elements[c.representative], config.order_bound);
    classes.push_back(std::move(c));
  }
  const std::size_t id = impl->identity;
  std::sort(classes.begin(), classes.end(), [id](const ConjClass& a, const ConjClass& b) {
    const bool ai = a.representative == id, bi = b.representative == id;
    if (ai != bi) return ai;
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.members.front() < b.members.front();
  });
  impl->class_of.assign(n, 0);
  std::map<int, std::size_t> letters;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto m : classes[k].members) impl->class_of[m] = k;
    classes[k].label =
        std::to_string(classes[k].element_order) + class_letter(letters[classes[k].element_order]++);
  }
  for (auto& c : classes) {
    const Matrix& rep = impl->elements[c.representative];
    for (int k : {2, 3, 5}) c.power_class[k] = impl->class_of[impl->index.at(power(rep, k))];
  }
  impl->classes = std::move(classes);

  auto cs = std::make_shared<ClassStructure>();
  cs->group_order = n;
  for (const auto& c : impl->classes) {
    cs->sizes.push_back(c.size);
    cs->element_orders.push_back(c.element_order);
    cs->labels.push_back(c.label);
  }
  for (int k : {2, 3, 5}) {
    auto& map = cs->power_maps[k];
    for (const auto& c : impl->classes) map.push_back(c.power_class.at(k));
  }
  impl->structure = std::move(cs);
  return MatrixGroup(std::move(impl));
}

std::size_t MatrixGroup::dimension() const { return impl_->dim; }
std::size_t MatrixGroup::order() const { return impl_->elements.size(); }
const std::vector<Matrix>& MatrixGroup::generators() const { return impl_->generators; }
const std::vector<Matrix>& MatrixGroup::elements() const { return impl_->elements; }

std::optional<std::size_t> MatrixGroup::index_of(const Matrix& m) const {
  auto it = impl_->index.find(m);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::identity_index() const { return impl_->identity; }
const std::vector<ConjClass>& MatrixGroup::classes() const { return impl_->classes; }
std::size_t MatrixGroup::class_of(std::size_t e) const { return impl_->class_of.at(e); }
const std::shared_ptr<const ClassStructure>& MatrixGroup::class_structure() const {
  return impl_->structure;
}
int MatrixGroup::element_order(std::size_t e) const {
  return impl_->classes[class_of(e)].element_order;
}
int MatrixGroup::conductor() const { return impl_->conductor; }
const GroupConfig& MatrixGroup::config() const { return impl_->config; }

std::size_t MatrixGroup::multiply(std::size_t i, std::size_t j) const {
  impl_->build_table();
  return impl_->table[i * order() + j];
}

std::size_t MatrixGroup::inverse_index(std::size_t i) const {
  impl_->build_table();
  return impl_->inverse[i];
}

int EigenProfile::count(int k) const {
  k %= order;
  if (k < 0) k += order;
  return multiplicity.at(static_cast<std::size_t>(k));
}

int EigenProfile::total() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

EigenProfile EigenProfile::power(int j) const {
  EigenProfile out{order, std::vector<int>(order, 0)};
  for (int k = 0; k < order; ++k) {
    long e = (static_cast<long>(k) * j) % order;
    if (e < 0) e += order;
    out.multiplicity[e] += multiplicity[k];
  }
  return out;
}

std::string to_string(const EigenProfile& p) {
  std::ostringstream os;
  os << "order " << p.order << " {";
  bool first = true;
  for (int k = 0; k < p.order; ++k) {
    if (p.multiplicity[k] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << k << ':' << p.multiplicity[k];
  }
  os << '}';
  return os.str();
}

EigenProfile eigen_profile(const Matrix& g, int bound) {
  const int n = matrix_order(g, bound);
  std::vector<Cyclotomic> traces;
  traces.reserve(n);
  Matrix p = Matrix::identity(g.rows());
  for (int j = 0; j < n; ++j) {
    traces.push_back(p.trace());
    p = p * g;
  }
  EigenProfile out{n, std::vector<int>(n, 0)};
  for (int k = 0; k < n; ++k) {
    Cyclotomic m;
    for (int j = 0; j < n; ++j)
      m += traces[j] * Cyclotomic::root_of_unity(n, -static_cast<long>(j) * k);
    m /= Cyclotomic(n);
    if (!m.is_integer() || m.to_rational() < 0)
      throw Error("eigenvalue multiplicity " + m.to_string() + " is not a nonnegative integer");
    out.multiplicity[k] = static_cast<int>(m.to_rational().get_num().get_si());
  }
  if (out.total() != static_cast<int>(g.rows()))
    throw Error("eigenvalue multiplicities do not sum to the dimension");
  return out;
}

bool is_projectively_faithful(const MatrixGroup& g) {
  // scalars are central, hence sit in singleton classes
  for (const auto& c : g.classes()) {
    if (c.size != 1 || c.representative == g.identity_index()) continue;
    if (g.element(c.representative).is_scalar()) return false;
  }
  return true;
}

MatrixGroup scalar_saturate(const MatrixGroup& g) {
  auto gens = g.generators();
  gens.push_back(Matrix::scalar(g.dimension(), Cyclotomic::root_of_unity(3, 1)));
  return MatrixGroup::generate(std::move(gens), g.config());
}

namespace {

bool is_abelian(const MatrixGroup& g) {
  return g.classes().size() == g.order();
}

GroupFingerprint fingerprint_of(const std::vector<std::size_t>& elems, const MatrixGroup& parent) {
  GroupFingerprint f;
  f.order = elems.size();
  for (auto e : elems) ++f.element_orders[parent.element_order(e)];
  f.abelian = true;
  for (std::size_t a = 0; a < elems.size() && f.abelian; ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (parent.multiply(elems[a], elems[b]) != parent.multiply(elems[b], elems[a])) {
        f.abelian = false;
        break;
      }
  return f;
}

std::vector<std::size_t> closure(const MatrixGroup& g, std::size_t a, std::size_t b,
                                 std::vector<char>& mark) {
  std::vector<std::size_t> elems{g.identity_index()};
  mark[g.identity_index()] = 1;
  for (std::size_t h = 0; h < elems.size(); ++h) {
    for (std::size_t s : {a, b}) {
      const std::size_t y = g.multiply(elems[h], s);
      if (!mark[y]) {
        mark[y] = 1;
        elems.push_back(y);
      }
    }
  }
  for (auto e : elems) mark[e] = 0;
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

GroupFingerprint fingerprint(const MatrixGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.abelian = is_abelian(g);
  for (const auto& c : g.classes()) f.element_orders[c.element_order] += c.size;
  return f;
}

std::string GroupFingerprint::type_name() const {
  auto count = [this](int k) -> std::size_t {
    auto it = element_orders.find(k);
    return it == element_orders.end() ? 0 : it->second;
  };
  const int n = static_cast<int>(order);
  if (order == 1) return "1";
  if (abelian) {
    if (count(n) > 0) return "Z/" + std::to_string(n);
    if (order == 4 && count(2) == 3) return "(Z/2)^2";
    if (order == 9 && count(3) == 8) return "(Z/3)^2";
    return "abelian(" + std::to_string(n) + ")";
  }
  if (order == 6) return "Sym(3)";
  if (order == 12 && count(2) == 3 && count(3) == 8) return "Alt(4)";
  if (order == 12 && count(2) == 7) return "D12";
  if (order == 12 && count(4) == 6) return "Z/3:Z/4";
  if (order == 10) return "D10";
  if (order == 55) return "Z/11:Z/5";
  if (order == 60 && count(5) == 24 && count(2) == 15) return "Alt(5)";
  if (order == 660 && count(11) == 120) return "PSL(2,11)";
  if (order == 18 && count(6) == 6 && count(2) == 3) return "Z/3xSym(3)";
  if (order % 2 == 0 && count(n / 2) == 2 && count(2) == order / 2 + 1)
    return "D" + std::to_string(n);
  return "group(" + std::to_string(n) + ")";
}

std::vector<SubgroupClass> subgroups_two_generated(const MatrixGroup& g) {
  const std::size_t n = g.order();
  if (n > 1000) throw CapExceeded("subgroup scan requires order <= 1000");
  std::vector<char> mark(n, 0);
  std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> found;
  for (const auto& c : g.classes()) {
    const std::size_t a = c.representative;
    for (std::size_t b = 0; b < n; ++b) {
      auto h = closure(g, a, b, mark);
      found.emplace(std::move(h), std::make_pair(a, b));
    }
  }
  // Deduplicate up to conjugacy: canonical key is the smallest conjugate.
  std::map<std::vector<std::size_t>, SubgroupClass> reps;
  std::vector<std::size_t> conj;
  for (const auto& [elems, gens] : found) {
    std::vector<std::size_t> best = elems;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xi = g.inverse_index(x);
      conj.clear();
      for (auto e : elems) conj.push_back(g.multiply(g.multiply(x, e), xi));
      std::sort(conj.begin(), conj.end());
      if (conj < best) best = conj;
    }
    if (reps.count(best)) continue;
    SubgroupClass s;
    s.elements = elems;
    s.generators = {gens.first};
    if (gens.second != g.identity_index()) {
      const auto cyclic = closure(g, gens.first, gens.first, mark);
      if (!std::binary_search(cyclic.begin(), cyclic.end(), gens.second))
        s.generators.push_back(gens.second);
    }
    s.fingerprint = fingerprint_of(elems, g);
    reps.emplace(std::move(best), std::move(s));
  }
  std::vector<SubgroupClass> out;
  for (auto& [key, s] : reps) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    return a.elements < b.elements;
  });
  return out;
}

MatrixGroup materialize(const MatrixGroup& parent, const SubgroupClass& sub) {
  std::vector<Matrix> gens;
  for (auto i : sub.generators) gens.push_back(parent.element(i));
  return MatrixGroup::generate(std::move(gens), parent.config());
}

}  // namespace cubicsym

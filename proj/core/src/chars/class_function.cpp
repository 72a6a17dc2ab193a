#include "cubicsym/chars/class_function.hpp"

#include <fstream>
#include <sstream>

#include "cubicsym/errors.hpp"
#include "json.hpp"

namespace cubicsym {

namespace {

bool same_group(const ClassStructure& a, const ClassStructure& b) {
  return &a == &b || (a.group_order == b.group_order && a.sizes == b.sizes &&
                      a.element_orders == b.element_orders && a.labels == b.labels);
}

void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (!same_group(a.classes(), b.classes())) throw GroupMismatch();
}

std::size_t nonnegative_integer(const InnerProduct& ip, const char* what) {
  if (ip.non_integral)
    throw ContractViolation(std::string(what) + " is " + to_string(ip.value) +
                            ", not a nonnegative integer");
  return ip.value.get_num().get_ui();
}

}  // namespace

ClassFunction::ClassFunction(std::shared_ptr<const ClassStructure> classes,
                             std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_ || values_.size() != classes_->size())
    throw Error("class function length does not match the number of classes");
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const ClassStructure> classes) {
  std::vector<Cyclotomic> ones(classes->size(), Cyclotomic(1));
  return ClassFunction(std::move(classes), std::move(ones));
}

ClassFunction ClassFunction::compose_power(int k) const {
  std::vector<Cyclotomic> out;
  out.reserve(size());
  for (std::size_t c = 0; c < size(); ++c) out.push_back(values_[classes_->power_class(c, k)]);
  return ClassFunction(classes_, std::move(out));
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclotomic> out;
  out.reserve(size());
  for (const auto& v : values_) out.push_back(v.conjugate());
  return ClassFunction(classes_, std::move(out));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same(*this, other);
  for (std::size_t c = 0; c < size(); ++c) values_[c] += other.values_[c];
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_group(a.classes(), b.classes()) && a.values_ == b.values_;
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }

ClassFunction operator*(long k, const ClassFunction& a) {
  std::vector<Cyclotomic> out;
  for (const auto& v : a.values()) out.push_back(Cyclotomic(k) * v);
  return ClassFunction(a.class_structure(), std::move(out));
}

std::string to_string(const ClassFunction& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t c = 0; c < f.size(); ++c) os << (c ? ", " : "") << f[c].to_string();
  os << ')';
  return os.str();
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  std::vector<Cyclotomic> out;
  out.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out.push_back(a[c] * b[c]);
  return ClassFunction(a.class_structure(), std::move(out));
}

ClassFunction sym_power(const ClassFunction& chi, int k) {
  std::vector<Cyclotomic> out;
  out.reserve(chi.size());
  if (k == 2) {
    const auto p2 = chi.compose_power(2);
    for (std::size_t c = 0; c < chi.size(); ++c) out.push_back((chi[c] * chi[c] + p2[c]) / 2);
  } else if (k == 3) {
    const auto p2 = chi.compose_power(2);
    const auto p3 = chi.compose_power(3);
    for (std::size_t c = 0; c < chi.size(); ++c) {
      const auto& x = chi[c];
      out.push_back((x * x * x + 3 * x * p2[c] + 2 * p3[c]) / 6);
    }
  } else {
    throw Error("symmetric power " + std::to_string(k) + " is not supported");
  }
  return ClassFunction(chi.class_structure(), std::move(out));
}

InnerProduct inner_product(const ClassFunction& a, const ClassFunction& b, bool characters) {
  require_same(a, b);
  const auto& cs = a.classes();
  Cyclotomic sum;
  for (std::size_t c = 0; c < a.size(); ++c)
    sum += Cyclotomic(static_cast<long>(cs.sizes[c])) * a[c] * b[c].conjugate();
  sum /= Cyclotomic(static_cast<long>(cs.group_order));
  if (!sum.is_rational()) throw Error("inner product " + sum.to_string() + " is not rational");
  InnerProduct out{sum.to_rational(), false};
  out.non_integral = characters && (out.value.get_den() != 1 || out.value < 0);
  return out;
}

ClassFunction character_of(const MatrixGroup& g) {
  std::vector<Cyclotomic> out;
  for (const auto& c : g.classes()) out.push_back(g.element(c.representative).trace());
  return ClassFunction(g.class_structure(), std::move(out));
}

ClassFunction det_from_power_maps(const ClassFunction& chi) {
  if (!chi.degree().is_integer() || chi.degree().to_rational() < 1)
    throw Error("degree must be a positive integer");
  const int n = static_cast<int>(chi.degree().to_rational().get_num().get_si());
  std::vector<ClassFunction> p;
  for (int k = 1; k <= n; ++k) p.push_back(chi.compose_power(k));
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<Cyclotomic> e{Cyclotomic(1)};
    for (int k = 1; k <= n; ++k) {
      Cyclotomic s;
      for (int i = 1; i <= k; ++i) {
        const Cyclotomic term = e[k - i] * p[i - 1][c];
        if (i % 2) s += term; else s -= term;
      }
      e.push_back(s / k);
    }
    out.push_back(e[n]);
  }
  return ClassFunction(chi.class_structure(), std::move(out));
}

ClassFunction det_character(const MatrixGroup& g) {
  std::vector<Cyclotomic> out;
  for (const auto& c : g.classes()) out.push_back(determinant(g.element(c.representative)));
  ClassFunction det(g.class_structure(), std::move(out));
  if (det_from_power_maps(character_of(g)) != det)
    throw ContractViolation("determinant character disagrees with the power-map route");
  return det;
}

std::size_t dim_invariant_cubics(const ClassFunction& chi) {
  const auto triv = ClassFunction::trivial(chi.class_structure());
  return nonnegative_integer(inner_product(sym_power(chi, 3), triv), "<S^3 chi, 1>");
}

std::size_t dim_special_subvariety(const ClassFunction& chi, const ClassFunction& det) {
  const auto triv = ClassFunction::trivial(chi.class_structure());
  return nonnegative_integer(inner_product(sym_power(tensor(det, chi), 2), triv),
                             "<S^2(det chi (x) chi), 1>");
}

const ClassFunction& AbstractCharDatum::character(const std::string& name) const {
  for (std::size_t i = 0; i < character_names.size(); ++i)
    if (character_names[i] == name) return characters[i];
  throw Error("unknown character " + name + " in " + this->name);
}

AbstractCharDatum parse_char_datum(const std::string& json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("character datum: ") + e.what());
  }
  try {
    AbstractCharDatum d;
    d.name = j.value("name", "");
    auto cs = std::make_shared<ClassStructure>();
    cs->group_order = j.at("group_order").get<std::size_t>();
    for (const auto& c : j.at("classes")) {
      cs->labels.push_back(c.at("label").get<std::string>());
      cs->element_orders.push_back(c.at("order").get<int>());
      cs->sizes.push_back(c.at("size").get<std::size_t>());
    }
    std::size_t total = 0;
    for (auto s : cs->sizes) total += s;
    if (total != cs->group_order)
      throw ContractViolation(d.name + ": class sizes sum to " + std::to_string(total) +
                              ", not " + std::to_string(cs->group_order));
    auto index_of = [&](const std::string& label) {
      for (std::size_t i = 0; i < cs->labels.size(); ++i)
        if (cs->labels[i] == label) return i;
      throw ContractViolation(d.name + ": unknown class label " + label);
    };
    for (const auto& [key, row] : j.at("power_maps").items()) {
      std::vector<std::size_t> map;
      for (const auto& label : row) map.push_back(index_of(label.get<std::string>()));
      if (map.size() != cs->size())
        throw ContractViolation(d.name + ": power map " + key + " has the wrong length");
      if (map.front() != 0)
        throw ContractViolation(d.name + ": power map " + key + " moves the identity class");
      cs->power_maps[std::stoi(key)] = std::move(map);
    }
    d.classes = cs;
    for (const auto& ch : j.at("characters")) {
      std::vector<Cyclotomic> values;
      for (const auto& v : ch.at("values")) values.push_back(Cyclotomic::parse(v.get<std::string>()));
      if (values.size() != cs->size())
        throw ContractViolation(d.name + ": character row has the wrong length");
      d.character_names.push_back(ch.at("name").get<std::string>());
      d.characters.emplace_back(d.classes, std::move(values));
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("character datum: ") + e.what());
  }
}

AbstractCharDatum load_char_datum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_char_datum(ss.str());
}

}  // namespace cubicsym

#include "cubicsym/invariants/cubic_form.hpp"

#include <numeric>
#include <ostream>
#include <regex>

#include "cubicsym/errors.hpp"

namespace cubicsym {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kVariables; ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exponents[i] > 1) out += '^' + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < kVariables; ++i)
    if (a.exponents[i] != b.exponents[i]) return b.exponents[i] <=> a.exponents[i];
  return std::strong_ordering::equal;
}

namespace {

struct Tables {
  std::vector<Monomial> cubics;
  std::map<Monomial, std::size_t> cubic_pos;
  std::vector<Monomial> quadrics;
  std::map<Monomial, std::size_t> quadric_pos;
  // variable triples (a <= b <= c) of each cubic, and pairs of each quadric
  std::vector<std::array<int, 3>> cubic_vars;
  std::vector<std::array<int, 2>> quadric_vars;
  // times[q][k] = cubic index of quadric q times x_k
  std::vector<std::array<std::size_t, kVariables>> times;

  Tables() {
    for (int a = 0; a < kVariables; ++a)
      for (int b = a; b < kVariables; ++b) {
        Monomial m;
        ++m.exponents[a];
        ++m.exponents[b];
        quadrics.push_back(m);
        for (int c = b; c < kVariables; ++c) {
          Monomial n = m;
          ++n.exponents[c];
          cubics.push_back(n);
        }
      }
    std::sort(quadrics.begin(), quadrics.end());
    std::sort(cubics.begin(), cubics.end());
    for (std::size_t i = 0; i < quadrics.size(); ++i) {
      quadric_pos[quadrics[i]] = i;
      std::array<int, 2> v{};
      int k = 0;
      for (int x = 0; x < kVariables; ++x)
        for (int e = 0; e < quadrics[i].exponents[x]; ++e) v[k++] = x;
      quadric_vars.push_back(v);
    }
    for (std::size_t i = 0; i < cubics.size(); ++i) {
      cubic_pos[cubics[i]] = i;
      std::array<int, 3> v{};
      int k = 0;
      for (int x = 0; x < kVariables; ++x)
        for (int e = 0; e < cubics[i].exponents[x]; ++e) v[k++] = x;
      cubic_vars.push_back(v);
    }
    for (const auto& q : quadrics) {
      std::array<std::size_t, kVariables> row{};
      for (int k = 0; k < kVariables; ++k) {
        Monomial n = q;
        ++n.exponents[k];
        row[k] = cubic_pos.at(n);
      }
      times.push_back(row);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::vector<Monomial>& cubic_monomials() { return tables().cubics; }

std::size_t cubic_index(const Monomial& m) {
  const auto& pos = tables().cubic_pos;
  auto it = pos.find(m);
  if (it == pos.end()) throw Error("not a cubic monomial: " + m.to_string());
  return it->second;
}

CubicForm::CubicForm(const Monomial& m, const Cyclotomic& c) {
  cubic_index(m);
  add(m, c);
}

CubicForm CubicForm::from_coefficients(const std::vector<Cyclotomic>& dense) {
  const auto& mons = cubic_monomials();
  if (dense.size() != mons.size()) throw Error("a cubic form has 35 coefficients");
  CubicForm f;
  for (std::size_t i = 0; i < mons.size(); ++i) f.add(mons[i], dense[i]);
  return f;
}

void CubicForm::add(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic CubicForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::vector<Cyclotomic> CubicForm::coefficients() const {
  std::vector<Cyclotomic> out(cubic_monomials().size());
  for (const auto& [m, c] : terms_) out[cubic_index(m)] = c;
  return out;
}

std::set<int> CubicForm::variables() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kVariables; ++i)
      if (m.exponents[i] > 0) out.insert(i);
  return out;
}

int CubicForm::conductor() const {
  int n = 1;
  for (const auto& [m, c] : terms_) n = std::lcm(n, c.conductor());
  return n;
}

std::string CubicForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = false;
    const bool single = c.is_rational() ||
                        (coeff.find(" + ") == std::string::npos && coeff.find(" - ") == std::string::npos);
    if (single && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (!single) coeff = '(' + coeff + ')';
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1") out += coeff + '*';
    out += m.to_string();
  }
  return out;
}

CubicForm CubicForm::parse(std::string_view text) {
  // split into signed top-level terms
  std::vector<std::pair<bool, std::string>> terms;
  std::string current;
  bool negative = false;
  int depth = 0;
  auto flush = [&] {
    auto b = current.find_first_not_of(" \t\n");
    if (b == std::string::npos) {
      if (!terms.empty() || negative) throw ParseError("empty term in cubic form");
      return;
    }
    terms.emplace_back(negative, current.substr(b, current.find_last_not_of(" \t\n") - b + 1));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) throw ParseError("unbalanced parenthesis in cubic form");
    const bool sign = depth == 0 && (ch == '+' || ch == '-');
    // a sign right after '^' belongs to an exponent
    std::size_t prev = current.find_last_not_of(" \t\n");
    const bool exponent_sign = prev != std::string::npos && current[prev] == '^';
    if (sign && !exponent_sign) {
      if (current.find_first_not_of(" \t\n") != std::string::npos) {
        flush();
      } else if (!terms.empty()) {
        throw ParseError("dangling sign in cubic form");
      }
      negative = ch == '-';
      continue;
    }
    current += ch;
  }
  if (depth != 0) throw ParseError("unbalanced parenthesis in cubic form");
  flush();

  static const std::regex variable(R"(\s*x([0-4])\s*(\^\s*([0-9]+))?\s*)");
  CubicForm f;
  for (const auto& [neg, term] : terms) {
    Monomial m;
    std::string coeff;
    std::size_t start = 0;
    depth = 0;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i <= term.size(); ++i) {
      if (i < term.size() && term[i] == '(') ++depth;
      if (i < term.size() && term[i] == ')') --depth;
      if (i == term.size() || (term[i] == '*' && depth == 0)) {
        factors.push_back(term.substr(start, i - start));
        start = i + 1;
      }
    }
    for (const auto& factor : factors) {
      std::smatch match;
      if (std::regex_match(factor, match, variable)) {
        m.exponents[match[1].str()[0] - '0'] += match[3].matched ? std::stoi(match[3].str()) : 1;
      } else {
        coeff += (coeff.empty() ? "" : "*") + ("(" + factor + ")");
      }
    }
    if (m.degree() != 3) throw ParseError("term '" + term + "' is not of degree 3");
    Cyclotomic c = coeff.empty() ? Cyclotomic(1) : Cyclotomic::parse(coeff);
    if (neg) c = -c;
    f.add(m, c);
  }
  return f;
}

CubicForm& CubicForm::operator+=(const CubicForm& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

CubicForm& CubicForm::operator-=(const CubicForm& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

CubicForm& CubicForm::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CubicForm operator+(CubicForm a, const CubicForm& b) { return a += b; }
CubicForm operator-(CubicForm a, const CubicForm& b) { return a -= b; }
CubicForm operator*(const Cyclotomic& c, CubicForm f) { return f *= c; }

std::ostream& operator<<(std::ostream& os, const CubicForm& f) { return os << f.to_string(); }

Matrix substitution_matrix(const Matrix& a) {
  if (a.rows() != kVariables || a.cols() != kVariables)
    throw Error("substitution needs a 5x5 matrix");
  const auto& t = tables();
  // quadric[q] = coefficients of L_u L_v for the quadric x_u x_v, where
  // L_i = sum_k a(i,k) x_k
  std::vector<std::vector<Cyclotomic>> quadric(t.quadrics.size(),
                                               std::vector<Cyclotomic>(t.quadrics.size()));
  for (std::size_t q = 0; q < t.quadrics.size(); ++q) {
    const auto [u, v] = t.quadric_vars[q];
    for (int k = 0; k < kVariables; ++k) {
      if (a(u, k).is_zero()) continue;
      for (int l = 0; l < kVariables; ++l) {
        if (a(v, l).is_zero()) continue;
        Monomial m;
        ++m.exponents[k];
        ++m.exponents[l];
        quadric[q][t.quadric_pos.at(m)] += a(u, k) * a(v, l);
      }
    }
  }
  Matrix s(t.cubics.size(), t.cubics.size());
  for (std::size_t j = 0; j < t.cubics.size(); ++j) {
    const auto [u, v, w] = t.cubic_vars[j];
    Monomial uv;
    ++uv.exponents[u];
    ++uv.exponents[v];
    const auto& qv = quadric[t.quadric_pos.at(uv)];
    for (std::size_t q = 0; q < qv.size(); ++q) {
      if (qv[q].is_zero()) continue;
      for (int k = 0; k < kVariables; ++k) {
        if (a(w, k).is_zero()) continue;
        s(t.times[q][k], j) += qv[q] * a(w, k);
      }
    }
  }
  return s;
}

CubicForm act(const Matrix& g, const CubicForm& f) {
  const Matrix s = substitution_matrix(inverse(g));
  const auto c = f.coefficients();
  return CubicForm::from_coefficients(s * std::span<const Cyclotomic>(c));
}

}  // namespace cubicsym

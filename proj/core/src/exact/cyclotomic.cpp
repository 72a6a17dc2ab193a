#include "cubicsym/exact/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>

#include "cubicsym/errors.hpp"

namespace cubicsym {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int normalize_conductor(int n) { return n % 4 == 2 ? n / 2 : n; }

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long positive_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Per-conductor data. power[e] holds x^e mod Phi_n for 0 <= e < n.
struct Field {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;
  std::vector<std::vector<long>> power;
};

std::vector<long> compute_cyclotomic_polynomial(int n);

// Read-mostly caches, initialized on first use.
class FieldCache {
 public:
  const Field& get(int n) {
    {
      std::shared_lock lock(mutex_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return *it->second;
    }
    auto field = build(n);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = fields_.emplace(n, std::move(field));
    return *it->second;
  }

  const std::vector<long>& polynomial(int n) {
    {
      std::shared_lock lock(mutex_);
      auto it = polys_.find(n);
      if (it != polys_.end()) return it->second;
    }
    auto poly = compute_cyclotomic_polynomial(n);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = polys_.emplace(n, std::move(poly));
    return it->second;
  }

 private:
  std::unique_ptr<Field> build(int n) {
    auto f = std::make_unique<Field>();
    f->n = n;
    f->poly = polynomial(n);
    f->phi = static_cast<int>(f->poly.size()) - 1;
    const int phi = f->phi;
    f->power.assign(n, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    if (phi == 0) return f;
    for (int e = 0; e < n; ++e) {
      f->power[e] = cur;
      // multiply by x, reducing the x^phi term with the monic polynomial
      long top = cur[phi - 1];
      for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
      }
    }
    return f;
  }

  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<Field>> fields_;
  std::map<int, std::vector<long>> polys_;
};

FieldCache& field_cache() {
  static FieldCache cache;
  return cache;
}

const Field& field(int n) { return field_cache().get(n); }

std::vector<long> poly_divide_exact(std::vector<long> num,
                                    const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i] / den[dn];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(p, field_cache().polynomial(d));
  }
  return p;
}

Integer content_gcd(const std::vector<Integer>& v, const Integer& seed) {
  Integer g = seed;
  for (const auto& x : v) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

// Solves A y = b over Q for square invertible A; returns nullopt-like empty
// vector when A is singular.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Q(zeta_m) inside Q(zeta_n): columns are zeta_m^j = zeta_n^(j n/m) in the
// power basis of n. `rows` selects phi(m) coordinates on which the embedding
// is invertible and `inverse` is that inverse.
struct Embedding {
  std::vector<std::vector<long>> columns;
  std::vector<int> rows;
  std::vector<std::vector<Rational>> inverse;
};

class EmbeddingCache {
 public:
  const Embedding& get(int n, int m) {
    const auto key = std::make_pair(n, m);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *it->second;
    }
    auto e = build(n, m);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(e));
    return *it->second;
  }

 private:
  static std::unique_ptr<Embedding> build(int n, int m) {
    const Field& big = field(n);
    const Field& small = field(m);
    auto e = std::make_unique<Embedding>();
    const int step = n / m;
    for (int j = 0; j < small.phi; ++j) e->columns.push_back(big.power[j * step]);
    // Greedy row selection by elimination on the transpose.
    std::vector<std::vector<Rational>> basis;
    std::vector<int> pivots;
    for (int r = 0; r < big.phi && static_cast<int>(e->rows.size()) < small.phi; ++r) {
      std::vector<Rational> row(small.phi);
      for (int j = 0; j < small.phi; ++j) row[j] = e->columns[j][r];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (row[pivots[b]] != 0) {
          Rational f = row[pivots[b]];
          for (int j = 0; j < small.phi; ++j) row[j] -= f * basis[b][j];
        }
      }
      int p = 0;
      while (p < small.phi && row[p] == 0) ++p;
      if (p == small.phi) continue;
      Rational inv = 1 / row[p];
      for (auto& x : row) x *= inv;
      basis.push_back(row);
      pivots.push_back(p);
      e->rows.push_back(r);
    }
    // inverse of the selected square block, one column at a time
    std::vector<std::vector<Rational>> block(small.phi,
                                             std::vector<Rational>(small.phi));
    for (int i = 0; i < small.phi; ++i)
      for (int j = 0; j < small.phi; ++j) block[i][j] = e->columns[j][e->rows[i]];
    e->inverse.assign(small.phi, std::vector<Rational>(small.phi));
    for (int c = 0; c < small.phi; ++c) {
      std::vector<Rational> unit(small.phi, 0);
      unit[c] = 1;
      auto col = solve_square(block, unit);
      for (int i = 0; i < small.phi; ++i) e->inverse[i][c] = col[i];
    }
    return e;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::unique_ptr<Embedding>> cache_;
};

EmbeddingCache& embedding_cache() {
  static EmbeddingCache cache;
  return cache;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic polynomial requires n >= 1");
  return field_cache().polynomial(n);
}

Cyclotomic::Cyclotomic() : n_(1), num_{0}, den_(1) {}

Cyclotomic::Cyclotomic(long value) : n_(1), num_{Integer(value)}, den_(1) {}

Cyclotomic::Cyclotomic(const Integer& value) : n_(1), num_{value}, den_(1) {}

Cyclotomic::Cyclotomic(const Rational& value) : n_(1) {
  Rational c = value;
  c.canonicalize();
  num_ = {c.get_num()};
  den_ = c.get_den();
}

Cyclotomic::Cyclotomic(int n, std::vector<Integer> num, Integer den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw Error("root_of_unity requires n >= 1");
  k = positive_mod(k, n);
  long g = std::gcd(k, n);
  if (k == 0) return Cyclotomic(1);
  n /= g;
  k /= g;
  // zeta_2m^k = (-1)^k zeta_m^(k (m+1)/2) for odd m
  long sign = 1;
  if (n % 4 == 2) {
    const long m = n / 2;
    if (k % 2 != 0) sign = -1;
    k = positive_mod(k * ((m + 1) / 2), m);
    n = m;
  }
  if (n == 1) return Cyclotomic(sign);
  const Field& f = field(static_cast<int>(n));
  std::vector<Integer> num(f.phi);
  for (int i = 0; i < f.phi; ++i) num[i] = sign * f.power[k][i];
  return Cyclotomic(static_cast<int>(n), std::move(num), Integer(1));
}

Cyclotomic Cyclotomic::from_power_sum(int n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw Error("conductor must be positive");
  Integer den = 1;
  for (const auto& c : coeffs) {
    Rational r = c;
    r.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  const Field& f = field(n);
  std::vector<Integer> num(f.phi, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Rational r = coeffs[j];
    r.canonicalize();
    Integer scaled = r.get_num() * (den / r.get_den());
    const auto& row = f.power[j % n];
    for (int i = 0; i < f.phi; ++i)
      if (row[i] != 0) num[i] += scaled * row[i];
  }
  return Cyclotomic(n, std::move(num), std::move(den));
}

Rational Cyclotomic::coefficient(std::size_t j) const {
  if (j >= num_.size()) return 0;
  Rational r(num_[j], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) out[j] = coefficient(j);
  return out;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && num_[0] == 0; }

bool Cyclotomic::is_one() const { return n_ == 1 && num_[0] == 1 && den_ == 1; }

Rational Cyclotomic::to_rational() const {
  if (n_ != 1) throw Error("value " + to_string() + " is not rational");
  return coefficient(0);
}

void Cyclotomic::remove_content() {
  bool all_zero = std::all_of(num_.begin(), num_.end(),
                              [](const Integer& x) { return x == 0; });
  if (all_zero) {
    n_ = 1;
    num_.assign(1, 0);
    den_ = 1;
    return;
  }
  Integer g = content_gcd(num_, den_);
  if (g != 1) {
    for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void Cyclotomic::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  remove_content();
  if (n_ != 1) descend();
}

// Brings the value to its minimal conductor.
void Cyclotomic::descend() {
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    if (std::all_of(num_.begin() + 1, num_.end(),
                    [](const Integer& x) { return x == 0; })) {
      num_.resize(1);
      n_ = 1;
      return;
    }
    for (int p : prime_divisors(n_)) {
      const int m = normalize_conductor(n_ / p);
      if (m == 1) continue;  // covered by the rational test above
      const Field& small = field(m);
      std::vector<Integer> reduced;
      if (m == n_ / p && m % p == 0) {
        // p^2 | n: Phi_n(x) = Phi_{n/p}(x^p), so the embedding is a
        // coordinate selection
        bool ok = true;
        for (std::size_t i = 0; i < num_.size() && ok; ++i)
          if (i % p != 0 && num_[i] != 0) ok = false;
        if (!ok) continue;
        reduced.resize(small.phi);
        for (int j = 0; j < small.phi; ++j) reduced[j] = num_[j * p];
      } else {
        const Embedding& e = embedding_cache().get(n_, m);
        std::vector<Rational> y(small.phi, 0);
        for (int i = 0; i < small.phi; ++i)
          for (int r = 0; r < small.phi; ++r)
            if (e.inverse[i][r] != 0) y[i] += e.inverse[i][r] * num_[e.rows[r]];
        Integer yden = 1;
        for (auto& v : y) {
          v.canonicalize();
          mpz_lcm(yden.get_mpz_t(), yden.get_mpz_t(), v.get_den_mpz_t());
        }
        reduced.resize(small.phi);
        for (int j = 0; j < small.phi; ++j)
          reduced[j] = y[j].get_num() * (yden / y[j].get_den());
        // verify: E * reduced == num * yden
        bool ok = true;
        for (std::size_t i = 0; i < num_.size() && ok; ++i) {
          Integer s = 0;
          for (int j = 0; j < small.phi; ++j)
            if (e.columns[j][i] != 0) s += reduced[j] * e.columns[j][i];
          if (s != num_[i] * yden) ok = false;
        }
        if (!ok) continue;
        den_ *= yden;
      }
      n_ = m;
      num_ = std::move(reduced);
      remove_content();
      changed = true;
      break;
    }
  }
}

Cyclotomic Cyclotomic::lift(const Cyclotomic& a, int n) {
  if (a.n_ == n) return a;
  Cyclotomic out;
  out.n_ = n;
  out.den_ = a.den_;
  const Field& f = field(n);
  out.num_.assign(f.phi, 0);
  const int step = n / a.n_;
  for (std::size_t j = 0; j < a.num_.size(); ++j) {
    if (a.num_[j] == 0) continue;
    const auto& row = f.power[(j * step) % n];
    for (int i = 0; i < f.phi; ++i)
      if (row[i] != 0) out.num_[i] += a.num_[j] * row[i];
  }
  return out;
}

std::vector<Rational> Cyclotomic::coefficients_in(int n) const {
  if (n % n_ != 0) throw Error("conductor does not divide target field");
  Cyclotomic l = lift(*this, n);
  std::vector<Rational> out(l.num_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = Rational(l.num_[j], l.den_);
    out[j].canonicalize();
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.num_) x = -x;
  return out;
}

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  int n = n_;
  if (rhs.n_ != n_) n = std::lcm(n_, rhs.n_);
  Cyclotomic a = lift(*this, n);
  const Cyclotomic& b0 = rhs;
  Cyclotomic b = (rhs.n_ == n) ? b0 : lift(rhs, n);
  Integer den = lcm(a.den_, b.den_);
  Integer fa = den / a.den_;
  Integer fb = den / b.den_;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (fa != 1) a.num_[i] *= fa;
    if (b.num_[i] != 0) a.num_[i] += b.num_[i] * fb;
  }
  a.den_ = den;
  a.canonicalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Cyclotomic();
  if (rhs.n_ == 1) {
    for (auto& x : num_) x *= rhs.num_[0];
    den_ *= rhs.den_;
    canonicalize();
    return *this;
  }
  if (n_ == 1) {
    Cyclotomic out = rhs;
    for (auto& x : out.num_) x *= num_[0];
    out.den_ *= den_;
    out.canonicalize();
    return *this = std::move(out);
  }
  const int n = (n_ == rhs.n_) ? n_ : std::lcm(n_, rhs.n_);
  const Cyclotomic a = lift(*this, n);
  const Cyclotomic b = lift(rhs, n);
  const Field& f = field(n);
  const int phi = f.phi;
  std::vector<Integer> prod(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(),
                 b.num_[j].get_mpz_t());
    }
  }
  std::vector<Integer> out(prod.begin(), prod.begin() + phi);
  for (int e = phi; e < 2 * phi - 1; ++e) {
    if (prod[e] == 0) continue;
    const auto& row = f.power[e % n];
    for (int i = 0; i < phi; ++i) {
      if (row[i] > 0)
        mpz_addmul_ui(out[i].get_mpz_t(), prod[e].get_mpz_t(), row[i]);
      else if (row[i] < 0)
        mpz_submul_ui(out[i].get_mpz_t(), prod[e].get_mpz_t(), -row[i]);
    }
  }
  return *this = Cyclotomic(n, std::move(out), a.den_ * b.den_);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ZeroDivision();
  if (n_ == 1) return Cyclotomic(Rational(den_, num_[0]));
  // Solve (multiplication-by-this) y = 1 in the power basis.
  const Field& f = field(n_);
  const int phi = f.phi;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, 0));
  for (int j = 0; j < phi; ++j) {
    // column j: this * x^j
    for (int i = 0; i < phi; ++i) {
      if (num_[i] == 0) continue;
      const auto& row = f.power[(i + j) % n_];
      for (int r = 0; r < phi; ++r)
        if (row[r] != 0) m[r][j] += Rational(num_[i] * row[r]);
    }
  }
  for (auto& row : m)
    for (auto& x : row) x /= den_;
  std::vector<Rational> unit(phi, 0);
  unit[0] = 1;
  auto y = solve_square(std::move(m), std::move(unit));
  if (y.empty()) throw ZeroDivision();
  return from_power_sum(n_, y);
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  k = positive_mod(k, n_);
  if (std::gcd(k, static_cast<long>(n_)) != 1)
    throw Error("Galois exponent must be coprime to the conductor");
  const Field& f = field(n_);
  std::vector<Integer> out(f.phi, 0);
  for (int j = 0; j < f.phi; ++j) {
    if (num_[j] == 0) continue;
    const auto& row = f.power[(static_cast<long>(j) * k) % n_];
    for (int i = 0; i < f.phi; ++i)
      if (row[i] != 0) out[i] += num_[j] * row[i];
  }
  return Cyclotomic(n_, std::move(out), den_);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  const double d = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const double angle = 2.0 * M_PI * static_cast<double>(j) / n_;
    sum += num_[j].get_d() / d * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  if (n_ == 1) return cubicsym::to_string(coefficient(0));
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    Rational c = coefficient(j);
    const bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << cubicsym::to_string(a);
      continue;
    }
    if (a != 1) os << cubicsym::to_string(a) << '*';
    os << "E(" << n_ << ")^" << j;
  }
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>{}(n_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& x : num_) mix(mpz_get_si(x.get_mpz_t()) ^ (mpz_sgn(x.get_mpz_t()) << 1));
  mix(mpz_get_ui(den_.get_mpz_t()));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

}  // namespace cubicsym

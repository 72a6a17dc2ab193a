#include "cubicsym/smoothprobe/smoothprobe.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <random>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

std::int64_t reduce_integer(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Partial derivatives as (coefficient multiplier, monomial of degree 2) per
// cubic monomial and variable; quadric monomials are encoded by exponents.
struct Derivative {
  std::size_t cubic;
  int multiplier;
  std::array<int, 5> exponents;
};

const std::array<std::vector<Derivative>, 5>& derivative_table() {
  static const auto table = [] {
    std::array<std::vector<Derivative>, 5> t;
    const auto& mons = cubic_monomials();
    for (std::size_t j = 0; j < mons.size(); ++j)
      for (int k = 0; k < kVariables; ++k) {
        const int e = mons[j].exponents[k];
        if (e == 0) continue;
        Derivative d{j, e, mons[j].exponents};
        --d.exponents[k];
        t[k].push_back(d);
      }
    return t;
  }();
  return table;
}

using Row = std::array<std::int64_t, 35>;

// Reduced row echelon form mod p; returns the nonzero rows.
std::vector<std::vector<std::int64_t>> echelon_mod(std::vector<std::vector<std::int64_t>> m,
                                                   std::size_t cols, std::int64_t p,
                                                   std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::int64_t inv = powmod(m[r][c], p - 2, p);
    for (auto& v : m[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - mulmod(f, m[r][k], p)) % p + p) % p;
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  m.resize(r);
  return m;
}

// Cubics over F_p fixed by the reduced generators. For p not dividing the
// group order this is the reduction of the invariant lattice saturated at
// the prime, whatever denominators the field basis carries.
std::vector<Row> fixed_space_mod(const std::vector<Matrix>& gens, const PrimeReduction& r) {
  const std::int64_t p = r.prime();
  const auto& mons = cubic_monomials();
  const std::size_t n = mons.size();
  std::vector<std::vector<std::int64_t>> system;
  for (const auto& g : gens) {
    std::array<std::array<std::int64_t, 5>, 5> a{};
    for (int i = 0; i < kVariables; ++i)
      for (int k = 0; k < kVariables; ++k) a[i][k] = r(g(i, k));
    // column j of S(g) - I: coefficients of m_j(g x) - m_j(x)
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> vars;
      for (int i = 0; i < kVariables; ++i)
        for (int e = 0; e < mons[j].exponents[i]; ++e) vars.push_back(i);
      for (int k = 0; k < kVariables; ++k)
        for (int l = 0; l < kVariables; ++l)
          for (int m = 0; m < kVariables; ++m) {
            const std::int64_t c = mulmod(mulmod(a[vars[0]][k], a[vars[1]][l], p), a[vars[2]][m], p);
            if (c == 0) continue;
            Monomial mono{};
            ++mono.exponents[k];
            ++mono.exponents[l];
            ++mono.exponents[m];
            auto& v = cols[j][cubic_index(mono)];
            v = (v + c) % p;
          }
      cols[j][j] = (cols[j][j] + p - 1) % p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = cols[j][i];
      system.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> pivots;
  const auto e = echelon_mod(std::move(system), n, p, &pivots);
  std::vector<Row> kernel;
  std::size_t next = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (next < pivots.size() && pivots[next] == f) {
      ++next;
      continue;
    }
    Row v{};
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - e[i][f]) % p;
    kernel.push_back(v);
  }
  return kernel;
}

// Rescales f so that its coefficients have integral numerators with no
// common factor; the span is unchanged.
CubicForm primitive_integral(const CubicForm& f) {
  const auto c = f.coefficients();
  Integer den = 1;
  for (const auto& x : c) den = lcm(den, x.denominator());
  Integer content = 0;
  for (const auto& x : c)
    for (const auto& a : x.numerators()) content = gcd(content, Integer(a * (den / x.denominator())));
  if (content == 0) return f;
  return Cyclotomic(Rational(den, content)) * f;
}

}  // namespace

PrimeReduction::PrimeReduction(int conductor, std::int64_t p) : n_(conductor), p_(p) {
  if (!is_prime(p) || p <= 3) throw BadPrime(std::to_string(p) + " is not a prime above 3");
  if ((p - 1) % conductor != 0)
    throw BadPrime("no element of order " + std::to_string(conductor) + " mod " +
                   std::to_string(p));
  zeta_ = powmod(primitive_root(p), (p - 1) / conductor, p);
}

std::int64_t PrimeReduction::default_prime(int conductor) {
  for (std::int64_t p = 7; p <= 31; ++p)
    if (is_prime(p) && (p - 1) % conductor == 0) return p;
  throw BadPrime("no prime p <= 31 with " + std::to_string(conductor) + " | p - 1");
}

std::int64_t PrimeReduction::operator()(const Cyclotomic& c) const {
  const int m = c.conductor();
  if (n_ % m != 0)
    throw BadPrime("conductor " + std::to_string(m) + " does not divide " + std::to_string(n_));
  const std::int64_t den = reduce_integer(c.denominator(), p_);
  if (den == 0) throw BadPrime("denominator vanishes mod " + std::to_string(p_));
  const std::int64_t root = powmod(zeta_, n_ / m, p_);
  std::int64_t acc = 0, power = 1;
  for (const auto& a : c.numerators()) {
    acc = (acc + mulmod(reduce_integer(a, p_), power, p_)) % p_;
    power = mulmod(power, root, p_);
  }
  return mulmod(acc, powmod(den, p_ - 2, p_), p_);
}

ReducedCubic reduce(const CubicForm& f, const PrimeReduction& r) {
  ReducedCubic out;
  out.p = r.prime();
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out.coefficients[i] = r(c[i]);
  return out;
}

std::int64_t projective_point_count(std::int64_t p) {
  return (((p + 1) * p + 1) * p + 1) * p + 1;
}

std::optional<ProjectivePoint> singular_scan(const ReducedCubic& f, unsigned workers) {
  const std::int64_t p = f.p;
  if (p == 3) throw BadPrime("singular scan needs p != 3");
  // Gradient components as lists of (coefficient, exponents) with zero terms dropped.
  struct Term {
    std::int64_t c;
    std::array<int, 5> e;
  };
  std::array<std::vector<Term>, 5> grad;
  const auto& table = derivative_table();
  for (int k = 0; k < kVariables; ++k)
    for (const auto& d : table[k]) {
      const std::int64_t c = mulmod(f.coefficients[d.cubic], d.multiplier, p);
      if (c != 0) grad[k].push_back({c, d.exponents});
    }

  // Points are numbered lead-major: block `lead` holds p^(4 - lead) points
  // with x[lead] = 1 and x[i] = 0 for i < lead.
  std::array<std::int64_t, kVariables + 1> offset{};
  for (int lead = 0; lead < kVariables; ++lead) {
    std::int64_t block = 1;
    for (int i = 0; i < kVariables - 1 - lead; ++i) block *= p;
    offset[lead + 1] = offset[lead] + block;
  }
  const std::int64_t total = offset[kVariables];

  auto point_at = [&](std::int64_t index) {
    int lead = 0;
    while (index >= offset[lead + 1]) ++lead;
    ProjectivePoint x{};
    x[lead] = 1;
    std::int64_t r = index - offset[lead];
    for (int i = kVariables - 1; i > lead; --i) {
      x[i] = r % p;
      r /= p;
    }
    return x;
  };
  auto singular = [&](const ProjectivePoint& x) {
    std::array<std::array<std::int64_t, 3>, 5> pw;
    for (int i = 0; i < kVariables; ++i) pw[i] = {1, x[i], x[i] * x[i] % p};
    for (const auto& g : grad) {
      std::int64_t s = 0;
      for (const auto& t : g) {
        std::int64_t v = t.c;
        for (int i = 0; i < kVariables; ++i)
          if (t.e[i]) v = v * pw[i][t.e[i]] % p;
        s += v;
      }
      if (s % p != 0) return false;
    }
    return true;
  };

  // Workers claim fixed-size chunks in increasing order and stop once every
  // unclaimed chunk lies past the best hit; the minimum index wins.
  constexpr std::int64_t kChunk = 1 << 14;
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> best{total};
  auto work = [&] {
    for (;;) {
      const std::int64_t begin = next.fetch_add(kChunk);
      if (begin >= total || begin >= best.load()) return;
      const std::int64_t end = std::min(begin + kChunk, total);
      for (std::int64_t i = begin; i < end; ++i)
        if (singular(point_at(i))) {
          std::int64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
    }
  };
  if (workers == 0) workers = total < 4 * kChunk ? 1u : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (best.load() == total) return std::nullopt;
  return point_at(best.load());
}

std::string to_string(ProbeResult::Status s) {
  return s == ProbeResult::Status::NonEmptyCertified ? "NonEmptyCertified" : "Inconclusive";
}

ProbeResult probe_nonempty(const InvariantSpace& s, const ProbeConfig& config) {
  if (s.basis.empty()) throw Error("cannot probe an empty span");
  int n = 1;
  for (const auto& f : s.basis) n = std::lcm(n, f.conductor());
  for (const auto& g : s.generators) n = std::lcm(n, g.conductor());
  std::vector<std::int64_t> primes = config.primes;
  if (primes.empty()) primes.push_back(PrimeReduction::default_prime(n));

  ProbeResult out;
  out.seed = config.seed;
  std::mt19937_64 rng(config.seed);
  for (const auto p : primes) {
    const PrimeReduction r(n, p);
    std::vector<Row> basis;
    if (!s.generators.empty()) {
      basis = fixed_space_mod(s.generators, r);
      if (basis.size() != s.basis.size())
        throw BadPrime("invariant dimension changes mod " + std::to_string(p));
    } else {
      for (const auto& f : s.basis) basis.push_back(reduce(primitive_integral(f), r).coefficients);
    }
    out.prime = p;
    for (int t = 0; t < config.trials; ++t) {
      ++out.trials_run;
      ReducedCubic f;
      f.p = p;
      for (const auto& b : basis) {
        const auto a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        for (std::size_t i = 0; i < f.coefficients.size(); ++i)
          f.coefficients[i] = (f.coefficients[i] + a * b[i]) % p;
      }
      auto point = singular_scan(f);
      if (!point) {
        out.status = ProbeResult::Status::NonEmptyCertified;
        out.sample.assign(f.coefficients.begin(), f.coefficients.end());
        out.last_singular_point.reset();
        return out;
      }
      out.last_singular_point = point;
    }
  }
  return out;
}

}  // namespace cubicsym

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/invariants/invariant_space.hpp"

namespace cubicsym {

/// Reduction of Q(zeta_n) modulo a prime p with n | p - 1, sending zeta_n to
/// a fixed element of exact order n.
class PrimeReduction {
 public:
  /// Throws BadPrime unless p is a prime other than 2 and 3 with n | p - 1.
  PrimeReduction(int conductor, std::int64_t p);

  /// Smallest prime p >= 7 with n | p - 1, provided p <= 31; BadPrime otherwise.
  static std::int64_t default_prime(int conductor);

  std::int64_t prime() const { return p_; }
  int conductor() const { return n_; }
  /// Image of zeta_n: g^((p-1)/n) for the least primitive root g.
  std::int64_t zeta_image() const { return zeta_; }

  /// Throws BadPrime when a denominator vanishes mod p or the element does
  /// not lie in Q(zeta_n).
  std::int64_t operator()(const Cyclotomic& c) const;

 private:
  int n_;
  std::int64_t p_;
  std::int64_t zeta_;
};

/// Cubic over F_p; coefficients follow cubic_monomials() order.
struct ReducedCubic {
  std::int64_t p = 0;
  std::array<std::int64_t, 35> coefficients{};
};

ReducedCubic reduce(const CubicForm& f, const PrimeReduction& r);

using ProjectivePoint = std::array<std::int64_t, 5>;

/// Scans all points of P^4(F_p) (first nonzero coordinate 1, ordered by the
/// position of that coordinate and then lexicographically) for a common zero
/// of the five partial derivatives; returns the first one. For p != 3 the
/// Euler relation makes such a point lie on the hypersurface. `workers` = 0
/// uses every hardware thread for large scans; the result does not depend on
/// the number of workers.
std::optional<ProjectivePoint> singular_scan(const ReducedCubic& f, unsigned workers = 0);

/// Number of points of P^4(F_p).
std::int64_t projective_point_count(std::int64_t p);

struct ProbeConfig {
  /// Primes to try in order; empty means default_prime of the conductor.
  std::vector<std::int64_t> primes;
  std::uint64_t seed = 20240601;
  int trials = 8;
};

struct ProbeResult {
  enum class Status { NonEmptyCertified, Inconclusive };
  Status status = Status::Inconclusive;
  std::int64_t prime = 0;
  std::uint64_t seed = 0;
  int trials_run = 0;
  /// Coefficients over F_p of the certified smooth member, in
  /// cubic_monomials() order.
  std::vector<std::int64_t> sample;
  /// Singular point of the last rejected sample.
  std::optional<ProjectivePoint> last_singular_point;
};

std::string to_string(ProbeResult::Status s);

/// Samples random members of the reduced span until one is smooth over F_p.
/// With generators present the reduced span is the space of cubics over F_p
/// fixed by the reduced generators, which must have the same dimension as
/// the basis (BadPrime otherwise); without them each basis form is scaled to
/// coprime integral numerators and reduced. The prime is chosen from the
/// conductor of the generators and the basis together. Never certifies
/// emptiness. Throws Error for an empty span.
ProbeResult probe_nonempty(const InvariantSpace& s, const ProbeConfig& config = {});

}  // namespace cubicsym

#pragma once

// Primality, bounded-effort factorization and prime-power splits.

#include "irrcert/poly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace irrcert {

enum class PrimalityVerdict { composite, prime_deterministic, probable_prime };

struct PrimalityResult {
  PrimalityVerdict verdict = PrimalityVerdict::composite;
  std::string method;

  bool is_prime() const { return verdict != PrimalityVerdict::composite; }
  bool deterministic() const { return verdict != PrimalityVerdict::probable_prime; }
};

/// Miller-Rabin with the first 13 prime bases is a proof below this value.
const Integer& deterministic_mr_limit();

/// Trial division for tiny N, deterministic Miller-Rabin below
/// deterministic_mr_limit(), Baillie-PSW above it (reported probable_prime).
/// Method tags: "trivial", "trial_division", "miller_rabin", "baillie_psw".
PrimalityResult is_prime(const Integer& n);

/// Strong probable-prime test to base a; n odd, n > 2.
bool strong_probable_prime(const Integer& n, const Integer& a);
/// Strong Lucas probable-prime test with Selfridge's parameters; n odd, n > 2.
bool strong_lucas_probable_prime(const Integer& n);

struct FactorConfig {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iteration_cap = 10'000'000;
  std::uint64_t rng_seed = 0x5eed;
};

struct PrimeFactor {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// sign * prod(p^e) * cofactor == the factored value.
struct FactoredInteger {
  int sign = 1;
  std::vector<PrimeFactor> factors;  // strictly ascending primes
  Integer cofactor = 1;               // 1 when complete

  bool complete() const { return cofactor == 1; }
  Integer value() const;
};

/// Trial division up to cfg.trial_bound, perfect-power extraction, then
/// Brent's Pollard rho capped at cfg.rho_iteration_cap steps per composite.
/// Whatever resists is left in the cofactor. Throws on N == 0.
FactoredInteger factor(const Integer& n, const FactorConfig& cfg = {});

/// Largest k with p^k | n. Throws unless n != 0 and p >= 2 is prime.
unsigned long valuation(const Integer& n, const Integer& p);

/// |N| = p^k * d with p not dividing d.
struct PrimePowerSplit {
  Integer p;
  unsigned long k = 0;
  Integer d;

  friend bool operator==(const PrimePowerSplit&, const PrimePowerSplit&) = default;
};

/// One split per distinct prime, ordered by ascending d then ascending p.
/// Throws std::invalid_argument on an incomplete factorization.
std::vector<PrimePowerSplit> prime_power_splits(const FactoredInteger& f);

/// Ascending primes covering at least [2, bound]; the table is shared and
/// may extend past bound.
std::shared_ptr<const std::vector<std::uint32_t>> prime_table(std::uint64_t bound);

}  // namespace irrcert

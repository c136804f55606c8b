#pragma once

// Fixtures and independent reference computations shared by the test suites.
// The reference routines deliberately avoid the library's code paths.

#include "irrcert/poly.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace irrcert::testing {

inline Polynomial u_poly() { return Polynomial{7, 5, -16, 6, 2, 7, 1, 6, 2, 8, 4}; }
inline Polynomial v_poly() { return Polynomial{49147, 49153, 0, 36864, 12288}; }

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

/// sum a_i * x^i with explicit powers, no Horner.
inline Integer naive_eval(const Polynomial& f, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) acc += f.coeffs()[i] * ipow(x, i);
  return acc;
}

/// f^(i)(n) = sum_{k>=i} a_k * k!/(k-i)! * n^(k-i).
inline Integer nth_derivative_at(const Polynomial& f, std::size_t i, const Integer& n) {
  Integer acc = 0;
  for (std::size_t k = i; k < f.coeffs().size(); ++k) {
    Integer falling = 1;
    for (std::size_t t = 0; t < i; ++t) falling *= static_cast<unsigned long>(k - t);
    acc += f.coeffs()[k] * falling * ipow(n, k - i);
  }
  return acc;
}

inline Integer factorial(std::size_t i) {
  Integer r = 1;
  for (std::size_t t = 2; t <= i; ++t) r *= static_cast<unsigned long>(t);
  return r;
}

inline bool brute_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Random polynomial with exact degree `deg` and coefficients in [-bound, bound].
inline Polynomial random_poly(std::mt19937_64& rng, long deg, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
  for (auto& a : c) a = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return Polynomial(std::move(c));
}

/// Random primitive polynomial with content divided out.
inline Polynomial random_primitive(std::mt19937_64& rng, long deg, long bound) {
  for (;;) {
    Polynomial f = random_poly(rng, deg, bound);
    Polynomial g = primitive_part(f);
    if (g.degree() == deg) return g;
  }
}

struct LemmaInstance {
  Polynomial f1, f2, f;
  Integer p;
  unsigned long k = 0;
  unsigned long j = 0;
};

inline unsigned long p_adic(Integer x, const Integer& p) {
  if (x == 0) return ~0UL;
  unsigned long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Draws f1, f2 with p | f1(0), p | f2(0) and v_p(f1(0) f2(0)) = k, then
/// checks whether p^k divides a_0..a_{j-1} of f = f1 f2. Returns false when
/// the draw misses the hypotheses; callers discard those.
inline bool draw_lemma_instance(std::mt19937_64& rng, LemmaInstance& out) {
  static const long primes[] = {2, 3, 5, 7};
  const Integer p = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
  const unsigned long k = std::uniform_int_distribution<unsigned long>(2, 5)(rng);
  const long r1 = std::uniform_int_distribution<long>(1, 3)(rng);
  const long r2 = std::uniform_int_distribution<long>(1, 3)(rng);
  const unsigned long m = static_cast<unsigned long>(r1 + r2);
  const unsigned long j = std::uniform_int_distribution<unsigned long>(1, m)(rng);
  if (std::gcd(k, j) != 1) return false;

  const unsigned long e1 = std::uniform_int_distribution<unsigned long>(1, k - 1)(rng);
  std::uniform_int_distribution<unsigned long> expo(0, k);
  std::uniform_int_distribution<long> unit(-6, 6);
  auto draw = [&](long deg, unsigned long e0) {
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      Integer u = 0;
      while (u == 0 || (i == 0 && u % p == 0)) u = unit(rng);
      c[i] = u * ipow(p, i == 0 ? e0 : expo(rng));
    }
    return Polynomial(std::move(c));
  };
  LemmaInstance inst{draw(r1, e1), draw(r2, k - e1), {}, p, k, j};
  inst.f = inst.f1 * inst.f2;

  const auto& a = inst.f.coeffs();
  if (p_adic(a[0], p) != k) return false;
  for (unsigned long i = 1; i < j; ++i) {
    if (p_adic(a[i], p) < k) return false;
  }
  out = std::move(inst);
  return true;
}

}  // namespace irrcert::testing

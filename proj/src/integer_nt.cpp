#include "irrcert/integer_nt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace irrcert {

namespace {

constexpr unsigned kSmallPrimeLimit = 1000;
constexpr unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::vector<std::uint32_t> sieve(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

std::shared_ptr<const std::vector<std::uint32_t>> prime_table(std::uint64_t bound) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<std::uint32_t>> cached;
  static std::uint64_t cached_bound = 0;
  if (bound > 0xffffffffULL) throw std::invalid_argument("prime table bound exceeds 2^32");
  std::lock_guard lock(mu);
  if (!cached || cached_bound < bound) {
    const std::uint64_t b = std::max<std::uint64_t>(bound, kSmallPrimeLimit);
    cached = std::make_shared<const std::vector<std::uint32_t>>(sieve(b));
    cached_bound = b;
  }
  return cached;
}

const Integer& deterministic_mr_limit() {
  static const Integer limit("3317044064679887385961981", 10);
  return limit;
}

bool strong_probable_prime(const Integer& n, const Integer& a) {
  const Integer n1 = n - 1;
  Integer d = n1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool strong_lucas_probable_prime(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1.
  long dval = 5;
  for (;;) {
    const Integer dd(dval);
    const int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dd) != n) return false;
    dval = dval > 0 ? -(dval + 2) : -dval + 2;
  }
  const Integer D(dval);
  const Integer Q((1 - dval) / 4);
  const Integer P(1);

  Integer d = n + 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  auto mod = [&](Integer& v) { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t()); };
  auto half = [&](Integer& v) {
    if (mpz_odd_p(v.get_mpz_t())) v += n;
    mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
  };

  Integer U = 1, V = P, Qk = Q;
  mod(Qk);
  const long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  for (long b = bits - 2; b >= 0; --b) {
    U = U * V;
    mod(U);
    V = V * V - 2 * Qk;
    mod(V);
    Qk = Qk * Qk;
    mod(Qk);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(b))) {
      Integer u2 = P * U + V;
      Integer v2 = D * U + P * V;
      mod(u2);
      mod(v2);
      half(u2);
      half(v2);
      U = std::move(u2);
      V = std::move(v2);
      Qk = Qk * Q;
      mod(Qk);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = V * V - 2 * Qk;
    mod(V);
    if (V == 0) return true;
    Qk = Qk * Qk;
    mod(Qk);
  }
  return false;
}

PrimalityResult is_prime(const Integer& n) {
  using V = PrimalityVerdict;
  if (n < 2) return {V::composite, "trivial"};
  const auto table = prime_table(kSmallPrimeLimit);
  for (std::uint32_t p : *table) {
    if (p > kSmallPrimeLimit) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      return {n == p ? V::prime_deterministic : V::composite, "trial_division"};
    }
  }
  if (n < kSmallPrimeLimit * kSmallPrimeLimit) return {V::prime_deterministic, "trial_division"};
  if (n < deterministic_mr_limit()) {
    for (unsigned long a : kMrBases) {
      if (!strong_probable_prime(n, Integer(a))) return {V::composite, "miller_rabin"};
    }
    return {V::prime_deterministic, "miller_rabin"};
  }
  if (!strong_probable_prime(n, Integer(2)) || !strong_lucas_probable_prime(n)) {
    return {V::composite, "baillie_psw"};
  }
  return {V::probable_prime, "baillie_psw"};
}

Integer FactoredInteger::value() const {
  Integer v = cofactor * sign;
  for (const auto& f : factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pk;
  }
  return v;
}

namespace {

class Factorizer {
 public:
  explicit Factorizer(const FactorConfig& cfg) : cfg_(cfg), rng_(cfg.rng_seed) {}

  void run(Integer m) {
    m = trial_divide(std::move(m));
    if (m > 1) split(m, 1);
  }

  FactoredInteger result(int sign) && {
    FactoredInteger out;
    out.sign = sign;
    for (auto& [p, e] : primes_) out.factors.push_back({p, e});
    out.cofactor = std::move(leftover_);
    return out;
  }

 private:
  void add_prime(const Integer& p, unsigned long e) { primes_[p] += e; }

  Integer trial_divide(Integer m) {
    const auto table = prime_table(cfg_.trial_bound);
    std::size_t since_check = 0;
    bool changed = true;
    for (std::uint32_t p : *table) {
      if (p > cfg_.trial_bound) break;
      if (m == 1) break;
      if (Integer(p) * p > m) {
        add_prime(m, 1);
        return Integer(1);
      }
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        const unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Integer(p).get_mpz_t());
        add_prime(Integer(p), e);
        changed = true;
      }
      // A prime remainder ends trial division early; the outcome is the same.
      if (++since_check >= 2048 && changed && m > 1) {
        since_check = 0;
        changed = false;
        if (is_prime(m).is_prime()) {
          add_prime(m, 1);
          return Integer(1);
        }
      }
    }
    return m;
  }

  // m > 1 has no prime factor below the trial bound.
  void split(const Integer& m, unsigned long mult) {
    if (is_prime(m).is_prime()) {
      add_prime(m, mult);
      return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      const unsigned long top = mpz_sizeinbase(m.get_mpz_t(), 2);
      for (unsigned long k = top; k >= 2; --k) {
        Integer r;
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
          split(r, mult * k);
          return;
        }
      }
    }
    Integer g;
    if (!rho(m, g)) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), m.get_mpz_t(), mult);
      leftover_ *= pw;
      return;
    }
    split(g, mult);
    split(Integer(m / g), mult);
  }

  Integer random_below(const Integer& n) {
    Integer r = rng_();
    r <<= 64;
    r += rng_();
    return r % n;
  }

  // Brent's variant with batched gcds. Returns a nontrivial factor in g.
  bool rho(const Integer& n, Integer& g) {
    std::uint64_t steps = 0;
    constexpr std::uint64_t kBatch = 128;
    while (steps < cfg_.rho_iteration_cap) {
      const Integer c = random_below(n - 3) + 1;
      Integer y = random_below(n), x, ys, q = 1, t;
      auto f = [&](Integer& v) {
        v *= v;
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        ++steps;
      };
      g = 1;
      for (std::uint64_t r = 1; g == 1 && steps < cfg_.rho_iteration_cap; r *= 2) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
          ys = y;
          const std::uint64_t lim = std::min(kBatch, r - k);
          for (std::uint64_t i = 0; i < lim; ++i) {
            f(y);
            t = x - y;
            q *= t;
            mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
          }
          mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
      }
      if (g == n || g == 0) {
        // The batch overshot; replay it one step at a time.
        do {
          f(ys);
          t = x - ys;
          mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
      }
      if (g != 1 && g != n) return true;
    }
    return false;
  }

  const FactorConfig& cfg_;
  std::mt19937_64 rng_;
  std::map<Integer, unsigned long> primes_;
  Integer leftover_ = 1;
};

}  // namespace

FactoredInteger factor(const Integer& n, const FactorConfig& cfg) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorizer fz(cfg);
  fz.run(abs(n));
  return std::move(fz).result(n < 0 ? -1 : 1);
}

unsigned long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (p < 2 || !is_prime(p).is_prime()) {
    throw std::invalid_argument("valuation: p must be prime");
  }
  Integer m = n;
  return mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

std::vector<PrimePowerSplit> prime_power_splits(const FactoredInteger& f) {
  if (!f.complete()) {
    throw std::invalid_argument("prime_power_splits: factorization is incomplete");
  }
  Integer total = 1;
  for (const auto& pf : f.factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pf.prime.get_mpz_t(), pf.exponent);
    total *= pk;
  }
  std::vector<PrimePowerSplit> out;
  out.reserve(f.factors.size());
  for (const auto& pf : f.factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pf.prime.get_mpz_t(), pf.exponent);
    out.push_back({pf.prime, pf.exponent, Integer(total / pk)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.p < b.p;
  });
  return out;
}

}  // namespace irrcert

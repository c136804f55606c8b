#include "irrcert/oracle.hpp"

#include "irrcert/integer_nt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace irrcert {

namespace {

std::vector<Integer> positive_divisors(const Integer& v) {
  const FactoredInteger fi = factor(v);
  if (!fi.complete()) throw std::runtime_error("oracle: could not factor " + v.get_str());
  std::vector<Integer> divs{1};
  for (const auto& pf : fi.factors) {
    const std::size_t base = divs.size();
    Integer pe = 1;
    for (unsigned long e = 1; e <= pf.exponent; ++e) {
      pe *= pf.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Integer points 0, 1, -1, 2, -2, ...
long nth_point(std::size_t i) {
  const long half = static_cast<long>((i + 1) / 2);
  return i % 2 == 1 ? half : -half;
}

struct Sample {
  long x;
  Integer y;
};

// L*g(x) = sum_i y_i * M_i(x) for the Lagrange basis scaled to a common
// denominator L; g is integral iff every coefficient is divisible by L.
class Interpolator {
 public:
  explicit Interpolator(const std::vector<long>& xs) : size_(xs.size()) {
    std::vector<std::vector<Integer>> num(size_);
    std::vector<Integer> den(size_);
    lcm_ = 1;
    for (std::size_t i = 0; i < size_; ++i) {
      std::vector<Integer> poly{1};
      Integer d = 1;
      for (std::size_t j = 0; j < size_; ++j) {
        if (j == i) continue;
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] += poly[k];
          next[k] -= poly[k] * xs[j];
        }
        poly = std::move(next);
        d *= xs[i] - xs[j];
      }
      num[i] = std::move(poly);
      den[i] = d;
      mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(), d.get_mpz_t());
    }
    basis_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      const Integer w = lcm_ / den[i];
      basis_[i].resize(size_);
      for (std::size_t k = 0; k < size_; ++k) basis_[i][k] = num[i][k] * w;
    }
    scratch_.resize(size_);
  }

  // Interpolant through (xs[i], ys[i]) when it has integer coefficients.
  bool interpolate(const std::vector<const Integer*>& ys, Polynomial& out) {
    for (std::size_t k = 0; k < size_; ++k) {
      mpz_set_ui(scratch_[k].get_mpz_t(), 0);
      for (std::size_t i = 0; i < size_; ++i) {
        mpz_addmul(scratch_[k].get_mpz_t(), ys[i]->get_mpz_t(), basis_[i][k].get_mpz_t());
      }
      if (!mpz_divisible_p(scratch_[k].get_mpz_t(), lcm_.get_mpz_t())) return false;
    }
    std::vector<Integer> c(size_);
    for (std::size_t k = 0; k < size_; ++k) {
      mpz_divexact(c[k].get_mpz_t(), scratch_[k].get_mpz_t(), lcm_.get_mpz_t());
    }
    out = Polynomial(std::move(c));
    return true;
  }

 private:
  std::size_t size_;
  Integer lcm_;
  std::vector<std::vector<Integer>> basis_;
  std::vector<Integer> scratch_;
};

}  // namespace

OracleVerdict kronecker_factor(const Polynomial& f, const OracleBudget& budget) {
  if (f.degree() < 2) throw std::invalid_argument("kronecker_factor: degree must be >= 2");
  if (!is_primitive(f)) throw std::invalid_argument("kronecker_factor: f must be primitive");

  OracleVerdict verdict;
  const auto m = static_cast<std::size_t>(f.degree());

  // f has at most m integer zeros, so 2m+4 candidates leave enough nonzero values.
  std::vector<Sample> pool;
  for (std::size_t i = 0; i < 2 * m + 4; ++i) {
    const long x = nth_point(i);
    Integer y = evaluate(f, Integer(x));
    if (y == 0) {
      verdict.status = OracleStatus::reducible;
      verdict.g = Polynomial{-x, 1};
      if (!divides_exactly(f, verdict.g, verdict.h)) {
        throw std::logic_error("kronecker_factor: root division failed");
      }
      return verdict;
    }
    pool.push_back({x, std::move(y)});
  }
  // Fewest divisors first keeps the tuple space small.
  std::vector<std::pair<std::vector<Integer>, const Sample*>> ranked;
  for (const auto& s : pool) ranked.emplace_back(positive_divisors(abs(s.y)), &s);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : abs(a.second->y) < abs(b.second->y);
  });

  for (std::size_t t = 1; t <= m / 2; ++t) {
    const std::size_t npts = t + 1;
    std::vector<long> xs;
    std::vector<std::vector<Integer>> choices;
    for (std::size_t i = 0; i < npts; ++i) {
      xs.push_back(ranked[i].second->x);
      std::vector<Integer> signed_divs;
      for (const auto& dv : ranked[i].first) {
        signed_divs.push_back(dv);
        if (i > 0) signed_divs.push_back(-dv);  // g and -g are the same factor
      }
      choices.push_back(std::move(signed_divs));
    }
    // Spare points screen candidates cheaply before the exact division.
    std::vector<const Sample*> checks;
    for (std::size_t i = npts; i < ranked.size(); ++i) checks.push_back(ranked[i].second);

    Interpolator interp(xs);
    std::vector<std::size_t> idx(npts, 0);
    std::vector<const Integer*> ys(npts);
    std::uint64_t tuples = 0;
    Polynomial g;

    // Depth-first over partial tuples; an integer g satisfies
    // (x_a - x_b) | g(x_a) - g(x_b), which prunes most branches early.
    std::size_t depth = 0;
    bool found = false;
    while (!found) {
      if (idx[depth] == choices[depth].size()) {
        if (depth == 0) break;
        idx[depth] = 0;
        ++idx[--depth];
        continue;
      }
      if (++tuples > budget.max_tuples_per_degree) {
        verdict.status = OracleStatus::inconclusive;
        verdict.tuples_tried += tuples - 1;
        return verdict;
      }
      ys[depth] = &choices[depth][idx[depth]];
      bool consistent = true;
      for (std::size_t l = 0; l < depth && consistent; ++l) {
        const Integer diff = *ys[depth] - *ys[l];
        consistent = mpz_divisible_ui_p(diff.get_mpz_t(),
                                        static_cast<unsigned long>(std::labs(xs[depth] - xs[l])));
      }
      if (!consistent) {
        ++idx[depth];
        continue;
      }
      if (depth + 1 < npts) {
        ++depth;
        continue;
      }
      if (interp.interpolate(ys, g) && g.degree() >= 1 &&
          mpz_divisible_p(f.leading().get_mpz_t(), g.leading().get_mpz_t()) &&
          std::all_of(checks.begin(), checks.end(), [&](const Sample* s) {
            const Integer gv = evaluate(g, Integer(s->x));
            return gv != 0 && mpz_divisible_p(s->y.get_mpz_t(), gv.get_mpz_t());
          })) {
        ++verdict.divisions_tried;
        Polynomial h;
        if (divides_exactly(f, g, h) && h.degree() >= 1) {
          verdict.g = g;
          verdict.h = h;
          found = true;
        }
      }
      ++idx[depth];
    }
    verdict.tuples_tried += tuples;
    if (found) {
      verdict.status = OracleStatus::reducible;
      return verdict;
    }
  }
  verdict.status = OracleStatus::irreducible;
  return verdict;
}

namespace {

using cd = std::complex<double>;

struct Eval {
  cd value;
  double scale;  // sum |a_i| |z|^i
};

Eval horner(const std::vector<double>& a, cd z) {
  cd v = 0;
  double s = 0;
  const double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    v = v * z + a[i];
    s = s * r + std::abs(a[i]);
  }
  return {v, s};
}

bool durand_kerner(const std::vector<double>& a, double phase, std::vector<cd>& z) {
  constexpr double kTol = 1e-10;
  constexpr int kMaxSweeps = 1000;
  const std::size_t m = a.size() - 1;
  const double lead = a.back();
  std::vector<double> monic(a.size());
  double bound = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    monic[i] = a[i] / lead;
    if (i < m) bound = std::max(bound, std::abs(monic[i]));
  }
  const double radius = 0.5 * (1.0 + bound);
  z.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + phase;
    z[k] = std::polar(radius, angle);
  }
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double step = 0;
    for (std::size_t k = 0; k < m; ++k) {
      cd denom = 1;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (denom == cd(0)) denom = cd(1e-300);
      const cd delta = horner(monic, z[k]).value / denom;
      z[k] -= delta;
      step = std::max(step, std::abs(delta) / std::max(1.0, std::abs(z[k])));
    }
    converged = std::all_of(z.begin(), z.end(), [&](cd r) {
      const Eval e = horner(a, r);
      return std::abs(e.value) <= kTol * e.scale;
    });
    if (converged && step < 1e-13) break;
  }
  return converged;
}

}  // namespace

std::vector<std::complex<double>> float_roots(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("float_roots: degree must be >= 1");
  std::vector<double> a;
  for (const auto& c : f.coeffs()) a.push_back(c.get_d());
  std::vector<cd> z;
  if (durand_kerner(a, 0.4, z)) return z;
  if (durand_kerner(a, 1.1, z)) return z;
  throw std::runtime_error("float_roots: Durand-Kerner did not converge");
}

}  // namespace irrcert

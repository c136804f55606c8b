#include "irrcert/criterion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irrcert {

std::string_view to_string(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::accepted: return "accepted";
    case OutcomeStatus::precondition_failed: return "precondition_failed";
    case OutcomeStatus::not_applicable: return "not_applicable";
    case OutcomeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(ReasonCode r) {
  switch (r) {
    case ReasonCode::none: return "none";
    case ReasonCode::not_admissible: return "not_admissible";
    case ReasonCode::derivative_divisible: return "derivative_divisible";
    case ReasonCode::no_valid_j: return "no_valid_j";
    case ReasonCode::value_unit_or_zero: return "value_unit_or_zero";
    case ReasonCode::incomplete_factorization: return "incomplete_factorization";
    case ReasonCode::variant_disabled: return "variant_disabled";
    case ReasonCode::d_above_cap: return "d_above_cap";
  }
  return "?";
}

namespace {

Integer power(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

bool divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

void require_criterion_input(const Polynomial& f) {
  if (f.degree() < 2) {
    throw std::invalid_argument("polynomial must have degree >= 2");
  }
  const Integer c = content(f);
  if (c != 1) {
    throw std::invalid_argument("polynomial is not primitive (content " + c.get_str() + ")");
  }
}

void require_witness_input(const Polynomial& f, const Integer& n,
                           const PrimePowerSplit& split, int sign) {
  require_criterion_input(f);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (split.k < 1 || split.d < 1 || split.p < 2) {
    throw std::invalid_argument("split needs p >= 2, k >= 1, d >= 1");
  }
  if (divides(split.p, split.d)) throw std::invalid_argument("split has p | d");
  if (sign * power(split.p, split.k) * split.d != evaluate(f, n)) {
    throw std::invalid_argument("sign * p^k * d does not equal f(n)");
  }
}

CriterionOutcome accept(Variant v, const Integer& n, int sign,
                        const PrimePowerSplit& split, unsigned long j) {
  CriterionOutcome out;
  out.status = OutcomeStatus::accepted;
  out.variant = v;
  out.witness = Witness{n, sign, split, j};
  return out;
}

CriterionOutcome reject(OutcomeStatus s, ReasonCode r, std::string message) {
  CriterionOutcome out;
  out.status = s;
  out.reason = r;
  out.message = std::move(message);
  return out;
}

std::string split_text(const PrimePowerSplit& s) {
  return "p=" + s.p.get_str() + ", k=" + std::to_string(s.k) + ", d=" + s.d.get_str();
}

// Shared front half of both checks: admissibility and the k = 1 branch.
std::optional<CriterionOutcome> admissibility_or_girstmair(
    const Polynomial& f, const Integer& n, const PrimePowerSplit& split, int sign) {
  const RootBound h = root_bound(f);
  if (!admissible(h, n, split.d)) {
    std::ostringstream msg;
    msg << "n < H+d+1 (n=" << n << ", H=" << h.num << "/" << h.den << ", d=" << split.d << ")";
    return reject(OutcomeStatus::precondition_failed, ReasonCode::not_admissible, msg.str());
  }
  if (split.k == 1) return accept(Variant::girstmair, n, sign, split, 1);
  return std::nullopt;
}

}  // namespace

CriterionOutcome check_theorem1(const Polynomial& f, const Integer& n,
                                const PrimePowerSplit& split, int sign) {
  require_witness_input(f, n, split, sign);
  if (auto early = admissibility_or_girstmair(f, n, split, sign)) return *early;
  const Integer fp = evaluate(derivative(f), n);
  if (divides(split.p, fp)) {
    return reject(OutcomeStatus::not_applicable, ReasonCode::derivative_divisible,
                  "p | f'(n) with k > 1 (" + split_text(split) + ", f'(n)=" + fp.get_str() + ")");
  }
  return accept(Variant::theorem1, n, sign, split, 1);
}

CriterionOutcome check_theorem2(const Polynomial& f, const Integer& n,
                                const PrimePowerSplit& split, int sign) {
  require_witness_input(f, n, split, sign);
  if (auto early = admissibility_or_girstmair(f, n, split, sign)) return *early;
  const TaylorCoefficients t = taylor_shift(f, n);
  const Integer pk = power(split.p, split.k);
  const auto m = static_cast<unsigned long>(f.degree());
  for (unsigned long j = 1; j <= m; ++j) {
    const Integer& sj = t.s[j];
    if (std::gcd(split.k, j) == 1 && !divides(split.p, sj)) {
      return accept(j == 1 ? Variant::theorem1 : Variant::theorem2, n, sign, split, j);
    }
    // s_j joins the p^k-divisible prefix for every larger j.
    if (!divides(pk, sj)) break;
  }
  return reject(OutcomeStatus::not_applicable, ReasonCode::no_valid_j,
                "no j <= m with gcd(k,j)=1, p^k | s_i (i<j) and p not dividing s_j (" +
                    split_text(split) + ")");
}

Certificate make_certificate(const Polynomial& f, const CriterionOutcome& accepted) {
  if (!accepted.accepted() || !accepted.witness || !accepted.variant) {
    throw std::invalid_argument("make_certificate needs an accepted outcome");
  }
  const Witness& w = *accepted.witness;
  Certificate c;
  c.polynomial = f;
  c.n = w.n;
  c.sign = w.sign;
  c.p = w.split.p;
  c.k = w.split.k;
  c.d = w.split.d;
  c.variant = *accepted.variant;
  c.j = w.j;
  const TaylorCoefficients t = taylor_shift(f, w.n);
  const std::size_t last = std::max<unsigned long>(w.j, 1);
  c.taylor_evidence.assign(t.s.begin(), t.s.begin() + static_cast<long>(last) + 1);
  const PrimalityResult pr = is_prime(w.split.p);
  c.primality_method = pr.method;
  c.primality_deterministic = pr.deterministic();
  return c;
}

namespace {

int failure_rank(const CriterionOutcome& o) {
  switch (o.reason) {
    case ReasonCode::derivative_divisible:
    case ReasonCode::no_valid_j: return 3;
    case ReasonCode::not_admissible: return 2;
    default: return 1;
  }
}

}  // namespace

CertifyResult certify_at(const Polynomial& f, const Integer& n, const SearchConfig& cfg) {
  require_criterion_input(f);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (cfg.variants.empty()) throw std::invalid_argument("no criterion variant enabled");

  CertifyResult result;
  const Integer value = evaluate(f, n);
  if (abs(value) <= 1) {
    result.outcome = reject(OutcomeStatus::not_applicable, ReasonCode::value_unit_or_zero,
                            "|f(n)| = " + Integer(abs(value)).get_str() + " has no prime factor");
    return result;
  }
  const FactoredInteger fi = factor(value, cfg.factoring);
  if (!fi.complete()) {
    result.outcome = reject(OutcomeStatus::inconclusive, ReasonCode::incomplete_factorization,
                            "could not fully factor f(n); unfactored part " +
                                fi.cofactor.get_str());
    return result;
  }
  const int sign = fi.sign;
  const bool allow_t1 = cfg.variants.contains(Variant::theorem1);
  const bool allow_t2 = cfg.variants.contains(Variant::theorem2);

  for (const PrimePowerSplit& split : prime_power_splits(fi)) {
    CriterionOutcome o;
    if (cfg.d_max && split.d > *cfg.d_max) {
      o = reject(OutcomeStatus::precondition_failed, ReasonCode::d_above_cap,
                 "d above configured cap (" + split_text(split) + ")");
    } else if (split.k == 1 || allow_t1 || allow_t2) {
      o = (split.k > 1 && allow_t2) ? check_theorem2(f, n, split, sign)
                                    : check_theorem1(f, n, split, sign);
    } else {
      o = reject(OutcomeStatus::not_applicable, ReasonCode::variant_disabled,
                 "k > 1 needs theorem1 or theorem2 (" + split_text(split) + ")");
    }
    if (!o.witness) o.witness = Witness{n, sign, split, 1};
    result.attempts.push_back(o);
    if (o.accepted()) {
      result.outcome = o;
      result.certificate = make_certificate(f, o);
      return result;
    }
  }
  const CriterionOutcome* best = nullptr;
  for (const auto& a : result.attempts) {
    if (!best || failure_rank(a) > failure_rank(*best)) best = &a;
  }
  result.outcome = *best;
  return result;
}

SearchResult search(const Polynomial& f, const SearchConfig& cfg) {
  require_criterion_input(f);
  SearchResult out;
  Integer n = smallest_admissible_n(root_bound(f), Integer(1));
  if (cfg.n_min && *cfg.n_min > n) n = *cfg.n_min;
  out.report.n_first = n;
  out.report.n_last = n - 1;
  for (; n <= cfg.n_max; ++n) {
    out.report.n_last = n;
    CertifyResult r = certify_at(f, n, cfg);
    if (r.certificate) {
      out.certificate = std::move(r.certificate);
      return out;
    }
    switch (r.outcome.status) {
      case OutcomeStatus::inconclusive: out.report.inconclusive.push_back(n); break;
      case OutcomeStatus::precondition_failed: ++out.report.precondition_failed; break;
      default: ++out.report.not_applicable; break;
    }
  }
  return out;
}

}  // namespace irrcert

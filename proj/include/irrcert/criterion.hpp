#pragma once

// Witness checks for the prime-power irreducibility criteria and the search
// for the smallest certifying n.

#include "irrcert/certificate.hpp"
#include "irrcert/integer_nt.hpp"
#include "irrcert/poly.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace irrcert {

enum class OutcomeStatus { accepted, precondition_failed, not_applicable, inconclusive };

std::string_view to_string(OutcomeStatus s);

enum class ReasonCode {
  none,
  not_admissible,        // n < H+d+1
  derivative_divisible,  // k > 1 and p | f'(n)
  no_valid_j,            // k > 1 and the Taylor scan found no j
  value_unit_or_zero,    // |f(n)| in {0, 1}
  incomplete_factorization,
  variant_disabled,
  d_above_cap,
};

std::string_view to_string(ReasonCode r);

struct Witness {
  Integer n;
  int sign = 1;
  PrimePowerSplit split;
  unsigned long j = 1;
};

struct CriterionOutcome {
  OutcomeStatus status = OutcomeStatus::inconclusive;
  std::optional<Variant> variant;
  /// Set on acceptance; certify_at also attaches the tried split to each
  /// rejected attempt.
  std::optional<Witness> witness;
  ReasonCode reason = ReasonCode::none;
  std::string message;

  bool accepted() const { return status == OutcomeStatus::accepted; }
};

struct SearchConfig {
  Integer n_max = 10'000;
  /// Raised to the smallest admissible n when lower.
  std::optional<Integer> n_min;
  std::optional<Integer> d_max;
  FactorConfig factoring;
  std::set<Variant> variants{Variant::girstmair, Variant::theorem1, Variant::theorem2};
};

/// Girstmair (k = 1) and the j = 1 derivative condition for k > 1.
/// Throws std::invalid_argument when f is not primitive, has degree < 2,
/// n < 1, or sign * p^k * d != f(n).
CriterionOutcome check_theorem1(const Polynomial& f, const Integer& n,
                                const PrimePowerSplit& split, int sign);

/// Scans j = 1..m on the Taylor coefficients of f(x+n) and accepts the
/// smallest j with gcd(k, j) = 1, p^k | s_i for i < j, and p not dividing s_j.
CriterionOutcome check_theorem2(const Polynomial& f, const Integer& n,
                                const PrimePowerSplit& split, int sign);

/// Builds the certificate for an accepted outcome.
Certificate make_certificate(const Polynomial& f, const CriterionOutcome& accepted);

struct CertifyResult {
  CriterionOutcome outcome;
  std::optional<Certificate> certificate;
  /// One entry per split tried, in trial order.
  std::vector<CriterionOutcome> attempts;
};

/// Factors |f(n)| and tries every split (ascending d, then p) through the
/// enabled variants. Throws std::invalid_argument when f is not primitive or
/// degree(f) < 2.
CertifyResult certify_at(const Polynomial& f, const Integer& n,
                         const SearchConfig& cfg = {});

struct SearchReport {
  Integer n_first;
  Integer n_last;  // n_first - 1 when the range is empty
  std::vector<Integer> inconclusive;
  std::size_t precondition_failed = 0;
  std::size_t not_applicable = 0;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  SearchReport report;
};

/// Smallest n in [max(H+2, cfg.n_min), cfg.n_max] where certify_at accepts.
SearchResult search(const Polynomial& f, const SearchConfig& cfg = {});

}  // namespace irrcert

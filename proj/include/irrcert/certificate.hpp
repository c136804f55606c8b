#pragma once

// Irreducibility certificates: canonical JSON form and an independent
// verifier that re-derives every hypothesis from scratch.

#include "irrcert/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irrcert {

enum class Variant { girstmair, theorem1, theorem2 };

std::string_view to_string(Variant v);
/// Throws std::invalid_argument on an unknown name.
Variant variant_from_string(std::string_view name);

inline constexpr int kCertificateFormatVersion = 1;
inline constexpr std::string_view kToolVersion = "irrcert 1.0.0";
inline constexpr std::string_view kCertificateExtension = ".irrcert.json";

struct Certificate {
  int format_version = kCertificateFormatVersion;
  Polynomial polynomial;
  Integer n;
  int sign = 1;
  Integer p;
  unsigned long k = 1;
  Integer d;
  Variant variant = Variant::girstmair;
  unsigned long j = 1;
  /// s_0 .. s_max(j,1) of f(x+n).
  std::vector<Integer> taylor_evidence;
  std::string primality_method;
  bool primality_deterministic = true;
  std::string tool_version{kToolVersion};

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Structural problem in a certificate document; field() names the culprit.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Field-level invariants that do not need arithmetic on f: ranges, variant
/// coherence, evidence length. Throws CertificateError.
void check_structure(const Certificate& c);

/// Canonical document: fixed key order, integers as decimal strings.
std::string serialize(const Certificate& c);
/// Rejects unknown or missing fields, non-canonical integers, unknown
/// versions and structural violations with a CertificateError.
Certificate deserialize(std::string_view bytes);

struct VerifyFailure {
  std::string condition;  // stable id, e.g. "value", "admissible"
  std::string message;    // e.g. "f(n) != sign*p^k*d"
  std::string expected;
  std::string found;
};

struct VerifyReport {
  bool valid = false;
  std::vector<std::string> caveats;
  std::vector<VerifyFailure> failures;
};

/// Recomputes primitivity, the value identity, primality of p, admissibility,
/// and the variant's divisibility conditions. Never throws.
VerifyReport verify(const Certificate& c);

}  // namespace irrcert

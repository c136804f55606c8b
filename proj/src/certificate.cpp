#include "irrcert/certificate.hpp"

#include "irrcert/integer_nt.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace irrcert {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::girstmair: return "girstmair";
    case Variant::theorem1: return "theorem1";
    case Variant::theorem2: return "theorem2";
  }
  return "?";
}

Variant variant_from_string(std::string_view name) {
  if (name == "girstmair") return Variant::girstmair;
  if (name == "theorem1") return Variant::theorem1;
  if (name == "theorem2") return Variant::theorem2;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

void check_structure(const Certificate& c) {
  auto fail = [](const char* field, const std::string& what) {
    throw CertificateError(field, what);
  };
  if (c.format_version != kCertificateFormatVersion) {
    fail("format_version", "unknown version " + std::to_string(c.format_version));
  }
  if (c.polynomial.is_zero()) fail("polynomial", "must be nonzero");
  if (c.n < 1) fail("n", "n must be >= 1");
  if (c.sign != 1 && c.sign != -1) fail("sign", "sign must be 1 or -1");
  if (c.p < 2) fail("p", "p must be >= 2");
  if (c.k < 1) fail("k", "k must be >= 1");
  if (c.d < 1) fail("d", "d must be >= 1");
  if (c.j < 1) fail("j", "j must be >= 1");
  switch (c.variant) {
    case Variant::girstmair:
      if (c.k != 1 || c.j != 1) fail("variant", "girstmair requires k = 1 and j = 1");
      break;
    case Variant::theorem1:
      if (c.k < 2 || c.j != 1) fail("variant", "theorem1 requires k > 1 and j = 1");
      break;
    case Variant::theorem2:
      if (c.k < 2 || c.j < 2) fail("variant", "theorem2 requires k > 1 and j >= 2");
      break;
  }
  if (c.taylor_evidence.size() != std::max<unsigned long>(c.j, 1) + 1) {
    fail("taylor_evidence", "expected s_0..s_" + std::to_string(std::max<unsigned long>(c.j, 1)));
  }
  if (c.primality_method.empty()) fail("primality", "method tag is empty");
}

std::string serialize(const Certificate& c) {
  check_structure(c);
  ordered_json doc;
  doc["format_version"] = c.format_version;
  ordered_json poly = ordered_json::array();
  for (const auto& a : c.polynomial.coeffs()) poly.push_back(a.get_str());
  doc["polynomial"] = std::move(poly);
  doc["n"] = c.n.get_str();
  doc["sign"] = c.sign;
  doc["p"] = c.p.get_str();
  doc["k"] = c.k;
  doc["d"] = c.d.get_str();
  doc["variant"] = std::string(to_string(c.variant));
  doc["j"] = c.j;
  ordered_json ev = ordered_json::array();
  for (const auto& s : c.taylor_evidence) ev.push_back(s.get_str());
  doc["taylor_evidence"] = std::move(ev);
  doc["primality"] = ordered_json{{"method", c.primality_method},
                                  {"deterministic", c.primality_deterministic}};
  doc["tool_version"] = c.tool_version;
  return doc.dump(2) + "\n";
}

namespace {

constexpr std::array<std::string_view, 12> kFields = {
    "format_version", "polynomial", "n", "sign", "p", "k",
    "d", "variant", "j", "taylor_evidence", "primality", "tool_version"};

bool canonical_decimal(const std::string& s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  if (!std::all_of(s.begin() + static_cast<long>(i), s.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return false;
  }
  if (s[i] == '0') return s.size() == 1;  // rejects "-0" and leading zeros
  return true;
}

Integer decimal(const ordered_json& v, const std::string& field) {
  if (!v.is_string()) throw CertificateError(field, "expected a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  if (!canonical_decimal(s)) throw CertificateError(field, "not a canonical decimal integer");
  return Integer(s, 10);
}

long long small_int(const ordered_json& v, const std::string& field) {
  if (!v.is_number_integer()) throw CertificateError(field, "expected an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
      throw CertificateError(field, "integer out of range");
    }
    return static_cast<long long>(u);
  }
  return v.get<long long>();
}

}  // namespace

Certificate deserialize(std::string_view bytes) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateError("document", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateError("document", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      throw CertificateError(key, "unknown field");
    }
  }
  for (auto key : kFields) {
    if (!doc.contains(key)) throw CertificateError(std::string(key), "missing field");
  }

  Certificate c;
  const long long version = small_int(doc["format_version"], "format_version");
  if (version != kCertificateFormatVersion) {
    throw CertificateError("format_version", "unknown version " + std::to_string(version));
  }
  c.format_version = static_cast<int>(version);

  const auto& poly = doc["polynomial"];
  if (!poly.is_array() || poly.empty()) {
    throw CertificateError("polynomial", "expected a nonempty array of decimal strings");
  }
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    coeffs.push_back(decimal(poly[i], "polynomial[" + std::to_string(i) + "]"));
  }
  if (coeffs.back() == 0) throw CertificateError("polynomial", "leading coefficient is zero");
  c.polynomial = Polynomial(std::move(coeffs));

  c.n = decimal(doc["n"], "n");
  const long long sign = small_int(doc["sign"], "sign");
  if (sign != 1 && sign != -1) throw CertificateError("sign", "sign must be 1 or -1");
  c.sign = static_cast<int>(sign);
  c.p = decimal(doc["p"], "p");
  const long long k = small_int(doc["k"], "k");
  if (k < 1) throw CertificateError("k", "k must be >= 1");
  c.k = static_cast<unsigned long>(k);
  c.d = decimal(doc["d"], "d");
  if (!doc["variant"].is_string()) throw CertificateError("variant", "expected a string");
  try {
    c.variant = variant_from_string(doc["variant"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CertificateError("variant", e.what());
  }
  const long long j = small_int(doc["j"], "j");
  if (j < 1) throw CertificateError("j", "j must be >= 1");
  c.j = static_cast<unsigned long>(j);

  const auto& ev = doc["taylor_evidence"];
  if (!ev.is_array()) throw CertificateError("taylor_evidence", "expected an array");
  for (std::size_t i = 0; i < ev.size(); ++i) {
    c.taylor_evidence.push_back(decimal(ev[i], "taylor_evidence[" + std::to_string(i) + "]"));
  }

  const auto& pr = doc["primality"];
  if (!pr.is_object() || pr.size() != 2 || !pr.contains("method") ||
      !pr.contains("deterministic") || !pr["method"].is_string() ||
      !pr["deterministic"].is_boolean()) {
    throw CertificateError("primality", "expected {\"method\": string, \"deterministic\": bool}");
  }
  c.primality_method = pr["method"].get<std::string>();
  c.primality_deterministic = pr["deterministic"].get<bool>();

  if (!doc["tool_version"].is_string()) throw CertificateError("tool_version", "expected a string");
  c.tool_version = doc["tool_version"].get<std::string>();

  check_structure(c);
  return c;
}

namespace {

class Report {
 public:
  void fail(std::string condition, std::string message, std::string expected,
            std::string found) {
    r_.failures.push_back({std::move(condition), std::move(message), std::move(expected),
                           std::move(found)});
  }
  void caveat(std::string text) { r_.caveats.push_back(std::move(text)); }
  VerifyReport finish() && {
    r_.valid = r_.failures.empty();
    return std::move(r_);
  }

 private:
  VerifyReport r_;
};

bool divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

}  // namespace

VerifyReport verify(const Certificate& c) {
  Report rep;
  try {
    check_structure(c);
  } catch (const CertificateError& e) {
    rep.fail("structure", e.what(), "well-formed certificate", e.field());
    return std::move(rep).finish();
  }

  const Polynomial& f = c.polynomial;
  if (f.degree() < 2) {
    rep.fail("degree", "degree(f) < 2", ">= 2", std::to_string(f.degree()));
    return std::move(rep).finish();
  }
  const Integer cont = content(f);
  if (cont != 1) rep.fail("primitive", "f is not primitive", "content 1", cont.get_str());

  const auto m = static_cast<unsigned long>(f.degree());
  const Integer value = evaluate(f, c.n);

  // p >= 2, so p^k > |f(n)| once k exceeds its bit length.
  const bool k_plausible = value != 0 && c.k <= mpz_sizeinbase(value.get_mpz_t(), 2);
  Integer pk;
  if (k_plausible) {
    mpz_pow_ui(pk.get_mpz_t(), c.p.get_mpz_t(), c.k);
    const Integer claimed = c.sign * pk * c.d;
    if (claimed != value) {
      rep.fail("value", "f(n) != sign*p^k*d", value.get_str(), claimed.get_str());
    }
  } else {
    rep.fail("value", "f(n) != sign*p^k*d", value.get_str(),
             "p^k exceeds |f(n)| (k=" + std::to_string(c.k) + ")");
  }

  const PrimalityResult pr = is_prime(c.p);
  if (!pr.is_prime()) {
    rep.fail("p_prime", "p is not prime", "prime", "composite (" + pr.method + ")");
  } else if (!pr.deterministic()) {
    rep.caveat("p is a probable prime (" + pr.method + "), not proven prime");
  }
  if (pr.method != c.primality_method || pr.deterministic() != c.primality_deterministic) {
    rep.fail("primality_tag", "recorded primality method disagrees with recomputation",
             pr.method + (pr.deterministic() ? " deterministic" : " probable"),
             c.primality_method + (c.primality_deterministic ? " deterministic" : " probable"));
  }

  if (divides(c.p, c.d)) rep.fail("p_coprime_d", "p | d", "p does not divide d", "p | d");

  const RootBound h = root_bound(f);
  if (!admissible(h, c.n, c.d)) {
    rep.fail("admissible", "n < H+d+1",
             "n >= " + h.num.get_str() + "/" + h.den.get_str() + " + " + c.d.get_str() + " + 1",
             c.n.get_str());
  }

  if (std::gcd(c.k, c.j) != 1) {
    rep.fail("gcd_kj", "gcd(k, j) != 1", "1", std::to_string(std::gcd(c.k, c.j)));
  }
  if (c.j > m) rep.fail("j_range", "j > degree(f)", "<= " + std::to_string(m), std::to_string(c.j));

  const TaylorCoefficients t = taylor_shift(f, c.n);
  for (std::size_t i = 0; i < c.taylor_evidence.size(); ++i) {
    const std::string id = "s_" + std::to_string(i);
    if (i >= t.s.size()) {
      rep.fail("taylor_evidence", id + " beyond degree", "absent", c.taylor_evidence[i].get_str());
    } else if (t.s[i] != c.taylor_evidence[i]) {
      rep.fail("taylor_evidence", id + " does not match f(x+n)", t.s[i].get_str(),
               c.taylor_evidence[i].get_str());
    }
  }

  switch (c.variant) {
    case Variant::girstmair:
      break;
    case Variant::theorem1: {
      const Integer fp = evaluate(derivative(f), c.n);
      if (divides(c.p, fp)) {
        rep.fail("derivative", "p | f'(n) with k > 1", "p does not divide f'(n)", fp.get_str());
      }
      break;
    }
    case Variant::theorem2: {
      if (!k_plausible || c.j > m) {
        rep.fail("taylor_divisibility", "p^k | s_i for i < j cannot be checked", "checkable",
                 "k or j out of range");
        break;
      }
      for (unsigned long i = 0; i < c.j; ++i) {
        if (!divides(pk, t.s[i])) {
          rep.fail("taylor_divisibility", "p^k does not divide s_" + std::to_string(i),
                   "0 mod p^k", t.s[i].get_str());
        }
      }
      if (divides(c.p, t.s[c.j])) {
        rep.fail("taylor_nondivisibility", "p | s_j with k > 1", "p does not divide s_j",
                 t.s[c.j].get_str());
      }
      break;
    }
  }
  return std::move(rep).finish();
}

}  // namespace irrcert

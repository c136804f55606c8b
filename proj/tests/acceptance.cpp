// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "irrcert/certificate.hpp"
#include "irrcert/criterion.hpp"
#include "irrcert/oracle.hpp"
#include "support.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace irrcert;
using namespace irrcert::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail << what;
    }
  }
};

SearchConfig only(std::set<Variant> variants, long n_max) {
  SearchConfig cfg;
  cfg.variants = std::move(variants);
  cfg.n_max = n_max;
  return cfg;
}

void criterion1(Verdict& v) {
  const Polynomial u = u_poly();
  const auto h = root_bound(u);
  v.require(h.value() == 4, "H != 4");
  v.require(evaluate(u, 10) == Integer("48261724457"), "u(10) mismatch");
  v.require(ipow(137, 5) == Integer("48261724457"), "137^5 mismatch");
  const Integer du = evaluate(derivative(u), 10);
  v.require(du == Integer("47402959485") && du % 137 != 0, "u'(10) mismatch");
  const auto r = certify_at(u, 10);
  v.require(r.certificate.has_value(), "no certificate at n=10");
  if (!r.certificate) return;
  const Certificate& c = *r.certificate;
  v.require(c.p == 137 && c.k == 5 && c.d == 1 && c.j == 1 && c.variant == Variant::theorem1,
            "witness differs from (137, 5, 1, 1, theorem1)");
  v.require(verify(c).valid, "verify rejected the certificate");
}

void criterion2(Verdict& v) {
  const Polynomial u = u_poly();
  const auto res = search(u, only({Variant::girstmair}, 60));
  v.require(res.certificate.has_value(), "no Girstmair certificate up to 60");
  if (!res.certificate) return;
  const Certificate& c = *res.certificate;
  v.require(c.n == 50, "smallest Girstmair n is " + c.n.get_str() + " with p=" + c.p.get_str() +
                           " (expected 50)");
  v.require(c.p == Integer("406332830325710257") && c.k == 1 && c.d == 1,
            "witness differs from (406332830325710257, 1, 1)");
  SearchConfig cfg = only({Variant::girstmair}, 60);
  for (Integer n = smallest_admissible_n(root_bound(u), 1); n < 50; ++n) {
    if (certify_at(u, n, cfg).certificate) {
      v.require(false, "Girstmair accepts n=" + n.get_str() + " < 50");
      break;
    }
  }
}

void criterion3(Verdict& v) {
  const auto res = search(v_poly(), only({Variant::girstmair}, 30));
  v.require(res.certificate.has_value(), "no certificate up to 30");
  if (!res.certificate) return;
  const Certificate& c = *res.certificate;
  v.require(c.n == 20 && c.p == 251336023 && c.d == 9 && c.k == 1, "witness differs");
  v.require(verify(c).valid, "verify rejected the certificate");
}

void criterion4(Verdict& v) {
  const Polynomial f = v_poly();
  const auto h = root_bound(f);
  v.require(h.num == 49153 && h.den == 12288, "H != 49153/12288");
  const auto r = certify_at(f, 5);
  bool saw_split = false;
  for (const auto& a : r.attempts) {
    if (a.witness && a.witness->split == PrimePowerSplit{2, 22, 3}) {
      saw_split = true;
      v.require(a.status == OutcomeStatus::precondition_failed &&
                    a.message.find("n < H+d+1") != std::string::npos,
                "split (2, 22, 3) at n=5 was not rejected as n < H+d+1");
    }
  }
  v.require(saw_split, "split (2, 22, 3) never attempted at n=5");
  v.require(!r.certificate, "certificate issued at n=5");

  const auto res = search(f, only({Variant::theorem1}, 10'000));
  v.require(res.certificate.has_value(), "search(v) with theorem1 found nothing");
  if (!res.certificate) return;
  const Certificate& c = *res.certificate;
  v.require(verify(c).valid, "verify rejected search(v)");
  v.require(kronecker_factor(f).status == OracleStatus::irreducible, "oracle disagrees on v");
  v.require(c.p == 2, "search(v) returned n=" + c.n.get_str() + " p=" + c.p.get_str() +
                          " k=" + std::to_string(c.k) + " d=" + c.d.get_str() +
                          "; no certificate with p=2");
}

void criterion5(Verdict& v) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> deg(2, 6);
  int issued = 0;
  for (int i = 0; i < 1000 && v.pass; ++i) {
    const Polynomial f = random_primitive(rng, deg(rng), 20);
    const auto res = search(f, only({Variant::girstmair, Variant::theorem1, Variant::theorem2}, 200));
    if (!res.certificate) continue;
    ++issued;
    const auto o = kronecker_factor(f);
    v.require(o.status == OracleStatus::irreducible,
              "certificate for " + to_string(f) + " but oracle says not irreducible");
  }
  std::uniform_int_distribution<long> d1(1, 3);
  int products = 0;
  for (int i = 0; i < 1000 && v.pass; ++i) {
    const long a = d1(rng);
    const long b = std::uniform_int_distribution<long>(1, 6 - a)(rng);
    const Polynomial f = random_primitive(rng, a, 20) * random_primitive(rng, b, 20);
    ++products;
    const auto res = search(f, only({Variant::girstmair, Variant::theorem1, Variant::theorem2}, 100));
    v.require(!res.certificate, "certificate issued for the product " + to_string(f));
  }
  if (v.pass) v.detail << issued << " certificates confirmed, " << products << " products rejected";
}

void criterion6(Verdict& v) {
  std::mt19937_64 rng(6);
  int kept = 0;
  while (kept < 1000 && v.pass) {
    LemmaInstance inst;
    if (!draw_lemma_instance(rng, inst)) continue;
    ++kept;
    v.require(inst.f.coeffs()[inst.j] % inst.p == 0,
              "counterexample f1=" + to_string(inst.f1) + " f2=" + to_string(inst.f2));
  }
  if (v.pass) v.detail << kept << " instances";
}

void criterion7(Verdict& v) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> deg(2, 10);
  std::uniform_int_distribution<long> shift(-50, 50);
  for (int i = 0; i < 500 && v.pass; ++i) {
    const Polynomial f = random_poly(rng, deg(rng), 100);
    const Integer a = shift(rng), b = shift(rng);
    const auto sa = taylor_shift(f, a);
    v.require(taylor_shift(sa.as_polynomial(), b).s == taylor_shift(f, a + b).s,
              "shift composition fails for " + to_string(f));
    v.require(sa.s[1] == evaluate(derivative(f), a), "s_1 != f'(n) for " + to_string(f));
    const double bound = root_bound(f).value().get_d() + 1.0 + 1e-6;
    for (const auto& z : float_roots(f)) {
      if (std::abs(z) >= bound) {
        v.require(false, "root outside H+1 for " + to_string(f));
        break;
      }
    }
  }
}

using Json = nlohmann::ordered_json;

Json bump_decimal(const Json& s, long delta) {
  Integer x(s.get<std::string>());
  x += delta;
  return x.get_str();
}

/// Applies one random mutation to one field; returns the field name.
std::string mutate(Json& doc, std::mt19937_64& rng) {
  static const char* fields[] = {"format_version", "polynomial", "n", "sign", "p", "k", "d",
                                 "variant", "j", "taylor_evidence", "primality"};
  std::uniform_int_distribution<long> small(1, 5);
  const long delta = small(rng) * (rng() % 2 ? 1 : -1);
  const std::string field = fields[rng() % std::size(fields)];
  Json& x = doc[field];
  if (field == "format_version") {
    x = x.get<int>() + delta;
  } else if (field == "polynomial" || field == "taylor_evidence") {
    const std::size_t i = rng() % x.size();
    x[i] = bump_decimal(x[i], delta);
  } else if (field == "n" || field == "p" || field == "d") {
    x = bump_decimal(x, delta);
  } else if (field == "sign") {
    x = -x.get<int>();
  } else if (field == "k" || field == "j") {
    const long nv = static_cast<long>(x.get<unsigned long>()) + delta;
    x = nv;
  } else if (field == "variant") {
    static const char* names[] = {"girstmair", "theorem1", "theorem2"};
    std::string nv = x.get<std::string>();
    while (nv == x.get<std::string>()) nv = names[rng() % 3];
    x = nv;
  } else {
    if (rng() % 2) {
      x["deterministic"] = !x["deterministic"].get<bool>();
    } else {
      static const char* methods[] = {"trial_division", "miller_rabin", "baillie_psw"};
      std::string nv = x["method"].get<std::string>();
      while (nv == x["method"].get<std::string>()) nv = methods[rng() % 3];
      x["method"] = nv;
    }
  }
  return field;
}

void criterion8(Verdict& v) {
  std::vector<Certificate> pool{*certify_at(u_poly(), 10).certificate,
                                *certify_at(v_poly(), 20).certificate,
                                *certify_at(Polynomial{6, -3, 16}, 4).certificate,
                                *certify_at(Polynomial{2, 2, -2, 5}, 3).certificate};
  std::mt19937_64 rng(8);
  for (int i = 0; pool.size() < 40 && i < 2000; ++i) {
    const Polynomial f = random_primitive(rng, std::uniform_int_distribution<long>(2, 6)(rng), 20);
    if (auto r = search(f, only({Variant::girstmair, Variant::theorem1, Variant::theorem2}, 200));
        r.certificate) {
      pool.push_back(*r.certificate);
    }
  }
  for (const auto& c : pool) {
    const std::string bytes = serialize(c);
    v.require(deserialize(bytes) == c && serialize(deserialize(bytes)) == bytes,
              "round trip is not the identity");
    v.require(verify(c).valid, "pool certificate does not verify");
  }
  int rejected = 0;
  for (int i = 0; i < 10'000 && v.pass; ++i) {
    const Certificate& c = pool[rng() % pool.size()];
    Json doc = Json::parse(serialize(c));
    const std::string field = mutate(doc, rng);
    bool accepted = false;
    try {
      accepted = verify(deserialize(doc.dump(2))).valid;
    } catch (const CertificateError&) {
    }
    if (accepted) {
      v.require(false, "mutation of '" + field + "' accepted: " + doc.dump());
    } else {
      ++rejected;
    }
  }
  if (v.pass) v.detail << rejected << " mutations rejected over " << pool.size() << " certificates";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "u fixture at n=10", 1, criterion1},
      {2, "u Girstmair minimality", 30, criterion2},
      {3, "v Girstmair fixture", 10, criterion3},
      {4, "v divergence check", 30, criterion4},
      {5, "soundness suite", 600, criterion5},
      {6, "lemma consistency suite", 600, criterion6},
      {7, "Taylor shift and root bound", 600, criterion7},
      {8, "certificate robustness", 60, criterion8},
  };
  int failed = 0;
  for (const auto& c : all) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.pass && secs > c.limit_seconds) {
      v.require(false, "runtime limit exceeded");
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", "
              << std::fixed << std::setprecision(2) << secs << " s)";
    const std::string d = v.detail.str();
    if (!d.empty()) std::cout << ": " << d;
    std::cout << std::endl;
  }
  return failed;
}

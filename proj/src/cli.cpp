#include "irrcert/cli.hpp"

#include "irrcert/certificate.hpp"
#include "irrcert/criterion.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace irrcert {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolyOptions {
  std::string inline_text;
  std::string file;
  bool divide_content = false;
};

struct SearchOptions {
  std::string n_max = "10000";
  std::string n_min;
  std::string d_max;
  std::string variants = "girstmair,theorem1,theorem2";
  std::uint64_t seed = FactorConfig{}.rng_seed;
  std::uint64_t trial_bound = FactorConfig{}.trial_bound;
  std::uint64_t rho_cap = FactorConfig{}.rho_iteration_cap;
};

void add_poly_options(CLI::App* cmd, PolyOptions& o) {
  cmd->add_option("-p,--poly", o.inline_text,
                  "polynomial: ascending list '7,5,-16' or expression '4*x^2-x+7'");
  cmd->add_option("--poly-file", o.file, "read the polynomial from a file");
  cmd->add_flag("--divide-content", o.divide_content,
                "divide out the content instead of rejecting non-primitive input");
}

void add_search_options(CLI::App* cmd, SearchOptions& o, bool with_range) {
  if (with_range) {
    cmd->add_option("--n-max", o.n_max, "largest n to try");
    cmd->add_option("--n-min", o.n_min, "smallest n to try (never below H+2)");
  }
  cmd->add_option("--d-max", o.d_max, "skip splits with cofactor d above this");
  cmd->add_option("--variants", o.variants, "comma-separated subset of girstmair,theorem1,theorem2");
  cmd->add_option("--seed", o.seed, "seed for Pollard rho");
  cmd->add_option("--trial-bound", o.trial_bound, "trial division bound");
  cmd->add_option("--rho-cap", o.rho_cap, "Pollard rho step cap per composite");
}

Integer integer_arg(const std::string& text, const char* what) {
  try {
    return parse_integer(text);
  } catch (const ParseError& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::set<Variant> parse_variants(const std::string& text) {
  std::set<Variant> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      out.insert(variant_from_string(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--variants: ") + e.what());
    }
  }
  if (out.empty()) throw InputError("--variants: at least one variant is required");
  return out;
}

SearchConfig make_config(const SearchOptions& o) {
  SearchConfig cfg;
  cfg.n_max = integer_arg(o.n_max, "--n-max");
  if (cfg.n_max < 1) throw InputError("--n-max must be >= 1");
  if (!o.n_min.empty()) cfg.n_min = integer_arg(o.n_min, "--n-min");
  if (!o.d_max.empty()) cfg.d_max = integer_arg(o.d_max, "--d-max");
  cfg.variants = parse_variants(o.variants);
  cfg.factoring.rng_seed = o.seed;
  cfg.factoring.trial_bound = o.trial_bound;
  cfg.factoring.rho_iteration_cap = o.rho_cap;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Polynomial load_polynomial(const PolyOptions& o, long min_degree, std::ostream& err) {
  if (o.inline_text.empty() == o.file.empty()) {
    throw InputError("give exactly one of -p/--poly or --poly-file");
  }
  const std::string text = o.file.empty() ? o.inline_text : read_file(o.file);
  Polynomial f;
  try {
    f = parse_polynomial(text);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  if (f.is_zero()) throw InputError("polynomial is zero");
  const Integer c = content(f);
  if (c != 1) {
    if (!o.divide_content) {
      throw InputError("polynomial is not primitive (content " + c.get_str() +
                       "); pass --divide-content to divide it out");
    }
    f = primitive_part(f);
    err << "divided out content " << c << "\n";
  }
  if (f.degree() < min_degree) {
    if (f.degree() == 1) {
      throw InputError("degree 1: a primitive linear polynomial is irreducible, no witness needed");
    }
    throw InputError("degree must be >= " + std::to_string(min_degree));
  }
  return f;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::string describe(const Certificate& c) {
  std::ostringstream os;
  os << "certified irreducible: " << to_string(c.variant) << " witness at n=" << c.n
     << " (p=" << c.p << ", k=" << c.k << ", d=" << c.d << ", j=" << c.j << ")";
  if (!c.primality_deterministic) os << " [p is a probable prime]";
  return os.str();
}

std::string outcome_json(const CriterionOutcome& o) {
  nlohmann::ordered_json doc;
  doc["status"] = std::string(to_string(o.status));
  doc["reason"] = std::string(to_string(o.reason));
  doc["message"] = o.message;
  return doc.dump(2) + "\n";
}

int run_certify(const PolyOptions& po, const SearchOptions& so, const std::string& n_text,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Polynomial f = load_polynomial(po, 2, err);
  const Integer n = integer_arg(n_text, "-n");
  if (n < 1) throw InputError("-n must be >= 1");
  const CertifyResult r = certify_at(f, n, make_config(so));
  if (r.certificate) {
    emit(serialize(*r.certificate), out_path, out);
    err << describe(*r.certificate) << "\n";
    return kExitSuccess;
  }
  out << outcome_json(r.outcome);
  err << to_string(r.outcome.status) << ": " << r.outcome.message << "\n";
  return r.outcome.status == OutcomeStatus::inconclusive ? kExitInconclusive : kExitNotMet;
}

int run_search(const PolyOptions& po, const SearchOptions& so, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const Polynomial f = load_polynomial(po, 2, err);
  const SearchResult r = search(f, make_config(so));
  if (r.certificate) {
    emit(serialize(*r.certificate), out_path, out);
    err << describe(*r.certificate) << "\n";
    return kExitSuccess;
  }
  const SearchReport& rep = r.report;
  nlohmann::ordered_json doc;
  doc["status"] = "exhausted";
  doc["n_first"] = rep.n_first.get_str();
  doc["n_last"] = rep.n_last.get_str();
  auto inc = nlohmann::ordered_json::array();
  for (const auto& n : rep.inconclusive) inc.push_back(n.get_str());
  doc["inconclusive"] = std::move(inc);
  doc["precondition_failed"] = rep.precondition_failed;
  doc["not_applicable"] = rep.not_applicable;
  out << doc.dump(2) << "\n";
  err << "no witness for n in [" << rep.n_first << ", " << rep.n_last << "]";
  if (!rep.inconclusive.empty()) {
    err << "; " << rep.inconclusive.size()
        << " value(s) could not be factored, raise --trial-bound/--rho-cap and retry";
  }
  err << "\n";
  return rep.inconclusive.empty() ? kExitNotMet : kExitInconclusive;
}

int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string bytes = read_file(path);
  Certificate c;
  try {
    c = deserialize(bytes);
  } catch (const CertificateError& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const VerifyReport rep = verify(c);
  for (const auto& cav : rep.caveats) err << "caveat: " << cav << "\n";
  if (rep.valid) {
    out << "valid\n";
    err << describe(c) << "\n";
    return kExitSuccess;
  }
  out << "invalid\n";
  for (const auto& f : rep.failures) {
    out << f.condition << "\t" << f.message << "\texpected " << f.expected << "\tfound "
        << f.found << "\n";
  }
  return kExitNotMet;
}

int run_compare(const PolyOptions& po, const SearchOptions& so, std::ostream& out,
                std::ostream& err) {
  const Polynomial f = load_polynomial(po, 2, err);
  const SearchConfig base = make_config(so);
  out << "variant\tsmallest_n\tp\tk\td\tj\n";
  bool any = false;
  bool inconclusive = false;
  for (Variant v : base.variants) {
    SearchConfig cfg = base;
    cfg.variants = {v};
    const SearchResult r = search(f, cfg);
    out << to_string(v);
    if (r.certificate) {
      const Certificate& c = *r.certificate;
      out << "\t" << c.n << "\t" << c.p << "\t" << c.k << "\t" << c.d << "\t" << c.j << "\n";
      any = true;
    } else {
      out << "\t\t\t\t\t\n";
      inconclusive = inconclusive || !r.report.inconclusive.empty();
      err << to_string(v) << ": no witness for n <= " << cfg.n_max << "\n";
    }
  }
  if (any) return kExitSuccess;
  return inconclusive ? kExitInconclusive : kExitNotMet;
}

int run_oracle(const PolyOptions& po, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  const Polynomial f = load_polynomial(po, 2, err);
  const OracleVerdict v = kronecker_factor(f, OracleBudget{budget});
  switch (v.status) {
    case OracleStatus::irreducible:
      out << "irreducible\n";
      return kExitSuccess;
    case OracleStatus::reducible:
      out << "reducible\t" << to_string(v.g) << "\t" << to_string(v.h) << "\n";
      err << "(" << to_expression(v.g) << ") * (" << to_expression(v.h) << ")\n";
      return kExitNotMet;
    case OracleStatus::inconclusive:
      out << "inconclusive\n";
      err << "divisor enumeration exceeded " << budget << " tuples\n";
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify irreducibility of integer polynomials from prime-power values"};
  app.name("irrcert");
  app.require_subcommand(1);

  PolyOptions po;
  SearchOptions so;
  std::string n_text;
  std::string out_path;
  std::string cert_path;
  std::uint64_t budget = OracleBudget{}.max_tuples_per_degree;

  auto* certify_cmd = app.add_subcommand("certify", "check the criteria at a fixed n");
  add_poly_options(certify_cmd, po);
  add_search_options(certify_cmd, so, false);
  certify_cmd->add_option("-n", n_text, "evaluation point")->required();
  certify_cmd->add_option("-o,--output", out_path, "write the certificate here");

  auto* search_cmd = app.add_subcommand("search", "find the smallest certifying n");
  add_poly_options(search_cmd, po);
  add_search_options(search_cmd, so, true);
  search_cmd->add_option("-o,--output", out_path, "write the certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();

  auto* compare_cmd = app.add_subcommand("compare", "smallest n per criterion variant (TSV)");
  add_poly_options(compare_cmd, po);
  add_search_options(compare_cmd, so, true);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Kronecker factorization verdict");
  add_poly_options(oracle_cmd, po);
  oracle_cmd->add_option("--budget", budget, "divisor tuples per factor degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*certify_cmd) return run_certify(po, so, n_text, out_path, out, err);
    if (*search_cmd) return run_search(po, so, out_path, out, err);
    if (*verify_cmd) return run_verify(cert_path, out, err);
    if (*compare_cmd) return run_compare(po, so, out, err);
    if (*oracle_cmd) return run_oracle(po, budget, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace irrcert

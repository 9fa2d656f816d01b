// parry: command-line front end.
//
// Exit codes: 0 success, 2 usage or parse error, 3 reducible input,
// 4 budgets exhausted with undecided entries (the partial report is still
// printed).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json.hpp"
#include "parry/atlas.hpp"
#include "parry/census.hpp"
#include "parry/criteria.hpp"
#include "parry/errors.hpp"
#include "parry/expansion.hpp"
#include "parry/factor.hpp"
#include "parry/report.hpp"
#include "parry/roots.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace parry;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { Ok = 0, Usage = 2, ReducibleInput = 3, Unknowns = 4 };

struct RunConfig {
  std::size_t orbit_budget = 50000;
  std::size_t akiyama_budget = 10000;
  long precision_max = 0;   // 0: library default
  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
  long dmin = 2;
  long dmax = 10;
  std::size_t kmax = 0;     // powers examined for Salem inputs

  SpectrumOptions spectrum() const { return {orbit_budget, akiyama_budget, kmax, jobs}; }
  cli::Budgets budgets() const {
    return {orbit_budget, akiyama_budget, static_cast<long>(precision_ceiling()), kmax};
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& s) {
  // "3/2", "1.5", "2", "1e-3"
  try {
    if (s.find('/') != std::string::npos) {
      mpq_class q(s);
      q.canonicalize();
      return q;
    }
    std::string mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mant = s.substr(0, e);
      exp10 = std::stol(s.substr(e + 1));
    }
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg || (!mant.empty() && mant[0] == '+')) mant = mant.substr(1);
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : mant) {
      if (c == '.' && !dot) {
        dot = true;
      } else if (c >= '0' && c <= '9') {
        digits += c;
        if (dot) ++frac;
      } else {
        throw UsageError("not a number: " + s);
      }
    }
    if (digits.empty()) throw UsageError("not a number: " + s);
    mpq_class q{mpz_class(digits)};
    const long shift = exp10 - frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
      q *= p10;
    else
      q /= p10;
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a number: " + s);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void require_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) throw UsageError("constant polynomial");
  if (!p.is_monic()) throw UsageError("polynomial must be monic: " + p.to_string());
  if (is_irreducible(p)) return;
  std::vector<std::string> fs;
  for (const auto& f : factor_bounded(p)) fs.push_back(f.to_string());
  throw Reducible("reducible polynomial " + p.to_string(), fs);
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& text, const RunConfig& cfg, const cli::Cache& cache) {
  IntPolynomial p = parse_polynomial(text);
  require_irreducible(p);
  const std::string key = p.to_string();

  json doc;
  if (auto hit = cache.lookup("status", key, cfg.budgets())) {
    doc = json::parse(hit->value);
  } else {
    PerronAnalysis a = analyze(p, false);
    doc["poly"] = key;
    doc["class"] = to_string(a.tag);
    if (a.tag != NumberTag::NotPerron) {
      doc["beta_approx"] = a.beta_enclosure().center.re.to_string(12);
      ParryStatus st = power_status(a, cfg.spectrum());
      doc["status"] = json::parse(status_json(st));
      doc["certificate"] = certificate(st);
    }
    if (a.tag == NumberTag::PerronOther) {
      doc["gamma_approx"] = a.gamma_enclosure().to_string();
      doc["K"] = k_bound(a);
      OrderBound ob = np_bound(a);
      doc["np_bound"] = {{"lo", ob.value.lo().to_rational().get_str()},
                         {"hi", ob.value.hi().to_rational().get_str()},
                         {"approx", ob.value.mid().to_double()}};
    }
    cache.store({key, "status", cfg.budgets(), kVersion, doc.dump()});
  }

  const bool unknown = doc.contains("status") && doc["status"]["kind"] == "Unknown";
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "poly,class,status,certificate,K,np_bound_approx\n";
    std::cout << csv_escape(key) << ',' << doc["class"].get<std::string>() << ','
              << (doc.contains("status") ? csv_escape(status_from_json(doc["status"].dump()).to_string()) : "") << ','
              << (doc.contains("certificate") ? csv_escape(doc["certificate"].get<std::string>()) : "") << ','
              << (doc.contains("K") ? std::to_string(doc["K"].get<std::size_t>()) : "") << ','
              << (doc.contains("np_bound") ? std::to_string(doc["np_bound"]["approx"].get<double>()) : "") << "\n";
  } else {
    std::cout << "poly      " << key << "\n";
    std::cout << "class     " << doc["class"].get<std::string>() << "\n";
    if (doc.contains("beta_approx")) std::cout << "beta      " << doc["beta_approx"].get<std::string>() << "\n";
    if (doc.contains("gamma_approx")) std::cout << "gamma     " << doc["gamma_approx"].get<std::string>() << "\n";
    if (doc.contains("status"))
      std::cout << "status    " << status_from_json(doc["status"].dump()).to_string() << "\n";
    if (doc.contains("K")) std::cout << "K         " << doc["K"].get<std::size_t>() << "\n";
    if (doc.contains("np_bound")) std::cout << "N_p       " << doc["np_bound"]["approx"].get<double>() << " (approx)\n";
  }
  return unknown ? Unknowns : Ok;
}

// ---------------------------------------------------------------- spectrum

SpectrumReport cached_spectrum(const IntPolynomial& p, const RunConfig& cfg, const cli::Cache& cache) {
  const std::string key = p.to_string();
  if (auto hit = cache.lookup("spectrum", key, cfg.budgets())) return spectrum_from_json(hit->value);
  SpectrumReport r = parry_spectrum(p, cfg.spectrum());
  cache.store({key, "spectrum", cfg.budgets(), kVersion, spectrum_json(r, -1)});
  return r;
}

int cmd_spectrum(const std::string& text, const RunConfig& cfg, const cli::Cache& cache) {
  IntPolynomial p = parse_polynomial(text);
  require_irreducible(p);
  SpectrumReport r = cached_spectrum(p, cfg, cache);
  if (cfg.format == "json") {
    std::cout << spectrum_json(r) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "k,poly,status,certificate\n";
    for (const auto& e : r.per_power)
      std::cout << e.k << ',' << csv_escape(e.poly.to_string()) << ',' << csv_escape(e.status.to_string()) << ','
                << csv_escape(certificate(e.status)) << "\n";
  } else {
    std::cout << spectrum_text(r);
  }
  return r.complete() ? Ok : Unknowns;
}

// ---------------------------------------------------------------- family

int cmd_family(const std::string& name, const RunConfig& cfg) {
  if (cfg.dmin > cfg.dmax) throw UsageError("--dmin exceeds --dmax");
  if (name == "cubic") {
    if (cfg.dmin < 1) throw UsageError("cubic family needs d >= 1");
    auto rows = cubic_family_spectrum(cfg.dmin, cfg.dmax, cfg.spectrum());
    bool unknown = false;
    for (const auto& r : rows) unknown |= !r.reducible && !r.report.complete();
    if (cfg.format == "json") {
      std::cout << cubic_family_json(rows) << "\n";
    } else if (cfg.format == "csv") {
      std::cout << "d,poly,reducible,spec,ord,matches\n";
      for (const auto& r : rows)
        std::cout << r.d << ',' << csv_escape(r.poly.to_string()) << ',' << r.reducible << ','
                  << csv_escape(r.reducible ? "" : r.report.spec_string()) << ','
                  << (r.reducible ? "" : r.report.ord_string()) << ',' << r.matches << "\n";
    } else {
      std::cout << cubic_family_text(rows);
    }
    return unknown ? Unknowns : Ok;
  }
  Family f;
  if (name == "beta")
    f = Family::BetaD;
  else if (name == "theta")
    f = Family::ThetaD;
  else
    throw UsageError("unknown family: " + name + " (beta, theta, cubic)");
  if (cfg.dmin < 2) throw UsageError("family needs d >= 2");
  auto rows = conjecture_harness(f, cfg.dmin, cfg.dmax, cfg.spectrum());
  bool unknown = false;
  for (const auto& r : rows) unknown |= r.verdict == Verdict::Unknown;
  if (cfg.format == "json") {
    std::cout << harness_json(rows) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "d,poly,class,K,spec,verdict,beta_approx,gamma_approx\n";
    for (const auto& r : rows)
      std::cout << r.member.d << ',' << csv_escape(r.member.poly.to_string()) << ',' << to_string(r.report.tag) << ','
                << (r.report.bound ? std::to_string(*r.report.bound) : "") << ','
                << csv_escape(r.report.spec_string()) << ',' << to_string(r.verdict) << ',' << r.beta << ','
                << csv_escape(r.gamma) << "\n";
  } else {
    std::cout << harness_text(rows);
  }
  return unknown ? Unknowns : Ok;
}

// ---------------------------------------------------------------- census

int cmd_census(int d, long n, const std::string& out_dir, bool allow_large, const RunConfig& cfg,
               const cli::Cache& cache) {
  if (n < 1) throw UsageError("N must be positive");
  if (!allow_large && (d < 2 || d > 6)) throw UsageError("degree must lie in [2, 6] (use --allow-large)");
  const std::string key = "d" + std::to_string(d) + "n" + std::to_string(n);

  std::string tally, csv, text;
  std::size_t unknown = 0;
  if (auto hit = cache.lookup("census", key, cfg.budgets())) {
    json j = json::parse(hit->value);
    tally = j.at("tally").get<std::string>();
    csv = j.at("csv").get<std::string>();
    text = j.at("text").get<std::string>();
    unknown = j.at("unknown").get<std::size_t>();
  } else {
    CensusOptions opts;
    opts.spectrum = {cfg.orbit_budget, cfg.akiyama_budget, cfg.kmax, cfg.jobs};
    opts.allow_large = allow_large;
    CensusResult r = enumerate_census(d, n, opts);
    tally = census_tally_json(r);
    csv = census_csv(r);
    text = census_text(r);
    unknown = r.tally.unknown;
    json j = {{"tally", tally}, {"csv", csv}, {"text", text}, {"unknown", unknown}};
    cache.store({key, "census", cfg.budgets(), kVersion, j.dump()});
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const std::string stem = "census_d" + std::to_string(d) + "_N" + std::to_string(n);
    std::ofstream(fs::path(out_dir) / (stem + ".csv")) << csv;
    std::ofstream(fs::path(out_dir) / (stem + ".json")) << tally << "\n";
  }
  if (cfg.format == "json")
    std::cout << tally << "\n";
  else if (cfg.format == "csv")
    std::cout << csv;
  else
    std::cout << text;
  return unknown ? Unknowns : Ok;
}

// ---------------------------------------------------------------- digits

int cmd_witness(const std::string& r_text, const std::string& eps_text, const RunConfig& cfg) {
  const mpq_class r = parse_rational(r_text);
  const mpq_class eps = parse_rational(eps_text);
  if (r <= 1) throw UsageError("target must exceed 1");
  if (eps <= 0) throw UsageError("eps must be positive");
  DensityWitness w = density_witness(r, eps);
  const Interval b = w.root.beta.interval();
  json doc;
  doc["target"] = r.get_str();
  doc["eps"] = eps.get_str();
  doc["digits"] = w.root.digits.to_string();
  doc["polynomial"] = w.root.polynomial.to_string();
  doc["minimal"] = w.root.minimal;
  doc["beta_lo"] = b.lo().to_rational().get_str();
  doc["beta_hi"] = b.hi().to_rational().get_str();
  doc["beta_approx"] = b.mid().to_string(15);
  doc["prefix"] = w.prefix;
  doc["zeros"] = w.zeros;
  doc["simple"] = w.root.digits.is_finite();
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "target,eps,digits,polynomial,beta_approx\n"
              << r.get_str() << ',' << eps.get_str() << ',' << csv_escape(doc["digits"].get<std::string>()) << ','
              << csv_escape(doc["polynomial"].get<std::string>()) << ',' << doc["beta_approx"].get<std::string>()
              << "\n";
  } else {
    std::cout << "digits    " << doc["digits"].get<std::string>() << "\n";
    std::cout << "beta      " << doc["beta_approx"].get<std::string>() << "\n";
    std::cout << (w.root.minimal ? "min poly  " : "poly      ") << doc["polynomial"].get<std::string>() << "\n";
    std::cout << "prefix j=" << w.prefix << ", zeros m=" << w.zeros << "\n";
  }
  return Ok;
}

int cmd_admissible(const std::string& text, const RunConfig& cfg) {
  DigitString d = parse_digits(text);
  const bool ok = check_self_admissible(d);
  if (cfg.format == "json")
    std::cout << json{{"digits", d.to_string()}, {"admissible", ok}}.dump(2) << "\n";
  else if (cfg.format == "csv")
    std::cout << "digits,admissible\n" << csv_escape(d.to_string()) << ',' << ok << "\n";
  else
    std::cout << d.to_string() << (ok ? "  admissible\n" : "  not admissible\n");
  return Ok;
}

int cmd_frombeta(const std::string& text, const RunConfig& cfg) {
  DigitString d = parse_digits(text);
  ExpansionRoot e = beta_from_expansion(d);
  const Interval b = e.beta.interval();
  json doc;
  doc["digits"] = e.digits.to_string();
  doc["companion"] = e.companion.to_string();
  doc["polynomial"] = e.polynomial.to_string();
  doc["minimal"] = e.minimal;
  doc["beta_lo"] = b.lo().to_rational().get_str();
  doc["beta_hi"] = b.hi().to_rational().get_str();
  doc["beta_approx"] = b.mid().to_string(15);
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "digits,companion,polynomial,minimal,beta_approx\n"
              << csv_escape(doc["digits"].get<std::string>()) << ',' << csv_escape(doc["companion"].get<std::string>())
              << ',' << csv_escape(doc["polynomial"].get<std::string>()) << ',' << e.minimal << ','
              << doc["beta_approx"].get<std::string>() << "\n";
  } else {
    std::cout << "digits     " << doc["digits"].get<std::string>() << "\n";
    std::cout << "companion  " << doc["companion"].get<std::string>() << "\n";
    std::cout << (e.minimal ? "min poly   " : "reduced    ") << doc["polynomial"].get<std::string>() << "\n";
    std::cout << "beta       " << doc["beta_approx"].get<std::string>() << "\n";
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parry numbers: beta-expansions, Parry spectra and censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  if (const char* env = std::getenv("PARRY_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--orbit-budget", cfg.orbit_budget, "Greedy orbit steps per power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--akiyama-budget", cfg.akiyama_budget, "Orbit indices scanned by the Akiyama test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--precision-max", cfg.precision_max, "Precision ceiling in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory (env PARRY_CACHE_DIR)");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--dmin", cfg.dmin, "Smallest family parameter")->capture_default_str();
  app.add_option("--dmax", cfg.dmax, "Largest family parameter")->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "Powers examined for Salem inputs")->capture_default_str();

  std::string poly;
  auto* classify = app.add_subcommand("classify", "Class, expansion or non-Parry certificate, K and N_p");
  classify->add_option("poly", poly, "Monic integer polynomial, e.g. x^3-x-1")->required();
  auto* spectrum = app.add_subcommand("spectrum", "Parry spectrum and order");
  spectrum->add_option("poly", poly, "Monic integer polynomial")->required();

  std::string family;
  auto* fam = app.add_subcommand("family", "Family tables: beta, theta, cubic");
  fam->add_option("name", family, "beta | theta | cubic")->required();

  int cd = 0;
  long cn = 0;
  std::string out_dir;
  bool allow_large = false;
  auto* census = app.add_subcommand("census", "Census of bounded-coefficient Perron numbers");
  census->add_option("d", cd, "Degree")->required();
  census->add_option("N", cn, "Coefficient bound")->required();
  census->add_option("--out-dir", out_dir, "Write census_d<d>_N<N>.csv and .json here");
  census->add_flag("--allow-large", allow_large, "Lift the degree guard");

  std::string r_text, eps_text;
  auto* witness = app.add_subcommand("witness", "Non-simple Parry number within eps of r");
  witness->add_option("r", r_text, "Target, rational or decimal")->required();
  witness->add_option("eps", eps_text, "Tolerance")->required();

  std::string digits;
  auto* admissible = app.add_subcommand("admissible", "Check the admissibility (shift) condition");
  admissible->add_option("digits", digits, "Digit string, e.g. \"5 (1 0)^w\"")->required();
  auto* frombeta = app.add_subcommand("frombeta", "Number with the given expansion of 1");
  frombeta->add_option("digits", digits, "Digit string")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (cfg.precision_max > 0) set_precision_ceiling(static_cast<mpfr_prec_t>(cfg.precision_max));
    cli::Cache cache(cfg.cache_dir);
    if (*classify) return cmd_classify(poly, cfg, cache);
    if (*spectrum) return cmd_spectrum(poly, cfg, cache);
    if (*fam) return cmd_family(family, cfg);
    if (*census) return cmd_census(cd, cn, out_dir, allow_large, cfg, cache);
    if (*witness) return cmd_witness(r_text, eps_text, cfg);
    if (*admissible) return cmd_admissible(digits, cfg);
    if (*frombeta) return cmd_frombeta(digits, cfg);
  } catch (const Reducible& e) {
    std::cerr << e.what() << "\nfactors:";
    for (const auto& f : e.factors()) std::cerr << " " << f;
    std::cerr << "\n";
    if (cfg.format == "json") std::cout << json{{"error", "reducible"}, {"factors", e.factors()}}.dump(2) << "\n";
    return ReducibleInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const ParryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

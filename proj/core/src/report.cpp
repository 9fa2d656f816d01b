#include "parry/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "parry/errors.hpp"

namespace parry {

using nlohmann::json;

namespace {

template <class E, std::size_t N>
E from_names(const std::string& s, const E (&values)[N], const char* what) {
  for (E v : values)
    if (s == to_string(v)) return v;
  throw ParseError(std::string("unknown ") + what + ": " + s);
}

json status_to(const ParryStatus& s) {
  json j;
  j["kind"] = to_string(s.kind);
  if (s.is_parry()) j["digits"] = s.digits.to_string();
  if (s.kind == StatusKind::NonParry) {
    j["criterion"] = to_string(s.criterion);
    if (s.criterion == Criterion::Akiyama) j["akiyama_index"] = s.akiyama_index;
    if (s.criterion == Criterion::Boyd) j["tail"] = s.tail.get_str();
    if (!s.conjugate.empty()) j["conjugate_approx"] = s.conjugate;
  }
  if (s.kind == StatusKind::Unknown) j["budget"] = s.budget;
  return j;
}

ParryStatus status_of(const json& j) {
  ParryStatus s;
  s.kind = status_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("digits")) s.digits = parse_digits(j["digits"].get<std::string>());
  if (j.contains("criterion")) s.criterion = criterion_from_string(j["criterion"].get<std::string>());
  if (j.contains("akiyama_index")) s.akiyama_index = j["akiyama_index"].get<std::size_t>();
  if (j.contains("tail")) s.tail = mpz_class(j["tail"].get<std::string>());
  if (j.contains("conjugate_approx")) s.conjugate = j["conjugate_approx"].get<std::string>();
  if (j.contains("budget")) s.budget = j["budget"].get<std::size_t>();
  return s;
}

json spectrum_to(const SpectrumReport& r) {
  json j;
  j["poly"] = r.poly.to_string();
  j["class"] = to_string(r.tag);
  j["K"] = r.bound ? json(*r.bound) : json(nullptr);
  json pp = json::array();
  for (const auto& e : r.per_power)
    pp.push_back({{"k", e.k}, {"poly", e.poly.to_string()}, {"status", status_to(e.status)},
                  {"certificate", certificate(e.status)}});
  j["per_power"] = pp;
  j["spec"] = r.spec;
  j["spec_text"] = r.spec_string();
  j["ord"] = r.ord_string();
  j["ord_lo"] = r.ord_lo;
  j["ord_hi"] = r.ord_hi;
  j["infinite"] = r.infinite;
  j["unknowns"] = r.unknowns;
  j["complete"] = r.complete();
  if (r.bound) j["beyond_K"] = "Solomyak";
  if (r.mahler) {
    j["np_bound"] = {{"lo", r.mahler->value.lo().to_rational().get_str()},
                     {"hi", r.mahler->value.hi().to_rational().get_str()},
                     {"precision", r.mahler->value.precision()},
                     {"approx", r.mahler->value.mid().to_double()},
                     {"non_parry", r.mahler->non_parry}};
  } else {
    j["np_bound"] = nullptr;
  }
  return j;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

NumberTag number_tag_from_string(const std::string& s) {
  static const NumberTag all[] = {NumberTag::Pisot, NumberTag::Salem, NumberTag::PerronOther, NumberTag::NotPerron};
  return from_names(s, all, "class");
}

StatusKind status_kind_from_string(const std::string& s) {
  static const StatusKind all[] = {StatusKind::SimpleParry, StatusKind::Parry, StatusKind::NonParry, StatusKind::Unknown};
  return from_names(s, all, "status");
}

Criterion criterion_from_string(const std::string& s) {
  static const Criterion all[] = {Criterion::None, Criterion::Solomyak, Criterion::Boyd, Criterion::Akiyama};
  return from_names(s, all, "criterion");
}

std::string certificate(const ParryStatus& s) {
  switch (s.kind) {
    case StatusKind::SimpleParry:
    case StatusKind::Parry:
      return "orbit";
    case StatusKind::NonParry:
      if (s.criterion == Criterion::Akiyama) return "Akiyama n=" + std::to_string(s.akiyama_index);
      return to_string(s.criterion);
    case StatusKind::Unknown:
      return "none";
  }
  return "none";
}

std::string status_json(const ParryStatus& s, int indent) { return status_to(s).dump(indent); }

ParryStatus status_from_json(const std::string& text) {
  try {
    return status_of(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad status document: ") + e.what());
  }
}

std::string spectrum_json(const SpectrumReport& r, int indent) { return spectrum_to(r).dump(indent); }

SpectrumReport spectrum_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    SpectrumReport r;
    r.poly = parse_polynomial(j.at("poly").get<std::string>());
    r.tag = number_tag_from_string(j.at("class").get<std::string>());
    if (!j.at("K").is_null()) r.bound = j["K"].get<std::size_t>();
    for (const auto& e : j.at("per_power"))
      r.per_power.push_back(PowerEntry{e.at("k").get<std::size_t>(), parse_polynomial(e.at("poly").get<std::string>()),
                                       status_of(e.at("status"))});
    r.spec = j.at("spec").get<std::vector<std::size_t>>();
    r.unknowns = j.at("unknowns").get<std::vector<std::size_t>>();
    r.infinite = j.at("infinite").get<bool>();
    r.ord_lo = j.at("ord_lo").get<std::size_t>();
    r.ord_hi = j.at("ord_hi").get<std::size_t>();
    if (!j.at("np_bound").is_null()) {
      const auto& b = j["np_bound"];
      const auto prec = b.at("precision").get<mpfr_prec_t>();
      Interval lo = Interval::from_rational(mpq_class(b.at("lo").get<std::string>()), prec);
      Interval hi = Interval::from_rational(mpq_class(b.at("hi").get<std::string>()), prec);
      OrderBound ob{Interval(lo.lo(), hi.hi()), hi.hi().to_rational(), b.at("non_parry").get<bool>()};
      r.mahler = ob;
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad spectrum document: ") + e.what());
  }
}

std::string spectrum_text(const SpectrumReport& r) {
  std::ostringstream os;
  os << "poly      " << r.poly.to_string() << "\n";
  os << "class     " << to_string(r.tag) << "\n";
  if (r.bound) os << "K         " << *r.bound << "\n";
  if (r.mahler) os << "N_p       " << fixed(r.mahler->value.mid().to_double(), 4) << " (approx)\n";
  for (const auto& e : r.per_power) os << "  k=" << std::setw(3) << e.k << "  " << e.status.to_string() << "\n";
  if (r.bound) os << "  k>=" << *r.bound << "  NonParry Solomyak\n";
  os << "spec      " << r.spec_string() << "\n";
  os << "ord       " << r.ord_string() << "\n";
  if (!r.unknowns.empty()) os << "unknowns  {" << join(r.unknowns) << "}\n";
  return os.str();
}

std::string harness_json(const std::vector<HarnessRow>& rows, int indent) {
  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["family"] = to_string(row.member.family);
    j["d"] = row.member.d;
    j["poly"] = row.member.poly.to_string();
    if (!row.member.notes.empty()) j["notes"] = row.member.notes;
    j["beta_approx"] = row.beta;
    j["gamma_approx"] = row.gamma;
    j["verdict"] = to_string(row.verdict);
    j["detail"] = row.detail;
    j["report"] = spectrum_to(row.report);
    arr.push_back(j);
  }
  return arr.dump(indent);
}

std::string harness_text(const std::vector<HarnessRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "beta" << std::setw(16) << "gamma" << std::setw(24) << "minimal polynomial"
     << std::setw(40) << "expansion" << "K\n";
  for (const auto& row : rows) {
    const SpectrumReport& r = row.report;
    std::string expansion;
    if (r.infinite) {
      expansion = std::string("Is ") + to_string(r.tag);
    } else {
      if (!r.per_power.empty() && r.per_power[0].status.is_parry()) expansion = r.per_power[0].status.digits.to_string() + " ";
      expansion += row.detail;
    }
    os << std::setw(8) << row.beta << std::setw(16) << (row.gamma.empty() ? "NA" : row.gamma) << std::setw(24)
       << row.member.poly.to_string() << std::setw(40) << expansion << " " << (r.bound ? std::to_string(*r.bound) : "NA")
       << "   [" << to_string(row.verdict) << "]\n";
  }
  return os.str();
}

std::string cubic_family_json(const std::vector<CubicFamilyRow>& rows, int indent) {
  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["d"] = row.d;
    j["poly"] = row.poly.to_string();
    j["reducible"] = row.reducible;
    if (!row.reducible) {
      j["spec"] = row.report.spec;
      j["ord"] = row.report.ord_string();
      j["K"] = row.report.bound ? json(*row.report.bound) : json(nullptr);
      j["expected"] = row.expected ? json(*row.expected) : json(nullptr);
      j["matches"] = row.matches;
      j["all_odd"] = row.all_odd;
    }
    arr.push_back(j);
  }
  return arr.dump(indent);
}

std::string cubic_family_text(const std::vector<CubicFamilyRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "d=" << std::setw(4) << std::left << row.d << std::right;
    if (row.reducible) {
      os << "reducible, skipped\n";
      continue;
    }
    os << "Spec=" << row.report.spec_string() << " ord=" << row.report.ord_string()
       << (row.matches ? "  [matches]" : "  [MISMATCH]") << "\n";
  }
  return os.str();
}

std::string census_tally_json(const CensusResult& r, int indent) {
  const CensusTally& t = r.tally;
  json j;
  j["d"] = r.d;
  j["N"] = r.n;
  j["scanned"] = r.scanned;
  j["total"] = t.total;
  j["parry"] = t.parry;
  j["pisot"] = t.pisot;
  j["salem"] = t.salem;
  j["salem_undecided"] = t.salem_undecided;
  j["parry_with_salem_assumed"] = t.parry + t.salem_undecided;
  j["unknown"] = t.unknown;
  json h = json::object();
  for (const auto& [n, c] : t.h) h["H_" + std::to_string(n)] = c;
  h["H_inf"] = t.h_inf;
  j["h"] = h;
  j["h_undecided"] = t.h_undecided;
  return j.dump(indent);
}

std::string census_text(const CensusResult& r) {
  const CensusTally& t = r.tally;
  std::ostringstream os;
  os << "d  N   #Q     Parry  Pisot  Salem  H_n\n";
  os << r.d << "  " << std::left << std::setw(4) << r.n << std::setw(7) << t.total << std::setw(7) << t.parry
     << std::setw(7) << t.pisot << std::setw(7) << t.salem;
  bool first = true;
  for (const auto& [n, c] : t.h) {
    os << (first ? "" : ", ") << "H_" << n << " = " << c;
    first = false;
  }
  os << (first ? "" : ", ") << "H_inf = " << t.h_inf << "\n";
  if (t.unknown) os << "undecided entries: " << t.unknown << "\n";
  if (t.salem_undecided) os << "Salem members with undecided orbit: " << t.salem_undecided << "\n";
  return os.str();
}

}  // namespace parry

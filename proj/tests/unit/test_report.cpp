#include <gtest/gtest.h>

#include "json.hpp"
#include "parry/errors.hpp"
#include "parry/report.hpp"

using namespace parry;
using nlohmann::json;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST(Report, StatusRoundTrip) {
  for (const char* p : {"x^2-x-1", "x^3-5x^2-2x+5", "x^12-x^10-x^9+x^4+x^3-x-1", "x^2-x-3", "x^3-5x^2-8x+5"}) {
    PerronAnalysis a = analyze(P(p));
    ParryStatus s = power_status(a, {});
    ParryStatus back = status_from_json(status_json(s));
    EXPECT_EQ(back.to_string(), s.to_string()) << p;
    EXPECT_EQ(status_json(back), status_json(s)) << p;
  }
}

TEST(Report, SpectrumRoundTripIsLossless) {
  for (const char* p : {"x^2-x-1", "x^3-5x^2-2x+5", "x^12-x^10-x^9+x^4+x^3-x-1", "x^4-x^3-x^2-x+1"}) {
    SpectrumReport r = parry_spectrum(P(p));
    const std::string once = spectrum_json(r);
    SpectrumReport back = spectrum_from_json(once);
    EXPECT_EQ(spectrum_json(back), once) << p;
    EXPECT_EQ(back.spec, r.spec);
    EXPECT_EQ(back.bound, r.bound);
  }
}

TEST(Report, SpectrumSchemaFields) {
  json j = json::parse(spectrum_json(parry_spectrum(P("x^3-5x^2-2x+5"))));
  for (const char* k : {"poly", "class", "K", "per_power", "spec", "ord", "ord_lo", "ord_hi", "infinite", "unknowns",
                        "complete", "np_bound"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["ord"], "5");
  EXPECT_EQ(j["per_power"][1]["certificate"], "Akiyama n=6");
  // exact rational strings for the bound, approximation labeled as such
  EXPECT_TRUE(j["np_bound"]["lo"].is_string());
  EXPECT_TRUE(j["np_bound"]["approx"].is_number());
}

TEST(Report, ParsersRejectUnknownNames) {
  EXPECT_EQ(number_tag_from_string("Salem"), NumberTag::Salem);
  EXPECT_EQ(criterion_from_string("Boyd"), Criterion::Boyd);
  EXPECT_THROW(number_tag_from_string("Lehmer"), ParseError);
  EXPECT_THROW(status_from_json("{not json"), ParseError);
}

TEST(Report, TextLayouts) {
  const std::string t = spectrum_text(parry_spectrum(P("x^3-5x^2-2x+5")));
  EXPECT_NE(t.find("spec      {1,3,5}"), std::string::npos);
  EXPECT_NE(t.find("k>=6  NonParry Solomyak"), std::string::npos);
  auto rows = conjecture_harness(Family::ThetaD, 6, 6);
  EXPECT_NE(harness_text(rows).find("1 0 0 0 0 1"), std::string::npos);
  EXPECT_TRUE(json::parse(harness_json(rows)).is_array());
}

TEST(Report, CensusOutputs) {
  CensusResult r = enumerate_census(2, 5);
  json j = json::parse(census_tally_json(r));
  EXPECT_EQ(j["total"].get<std::size_t>(), r.tally.total);
  EXPECT_EQ(j["h"]["H_inf"].get<std::size_t>(), r.tally.h_inf);
  const std::string csv = census_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "min_poly,class,h_class,parry,pisot,salem,source_count");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.entries.size() + 1);
}

#pragma once

// JSON and plain-text renderings of statuses, spectra, family tables and
// census tallies. JSON documents parse back losslessly where a reader is
// provided; numbers that are not integers are written as exact rational
// strings unless the field name says "approx".

#include <string>
#include <vector>

#include "parry/atlas.hpp"
#include "parry/census.hpp"
#include "parry/orbit.hpp"
#include "parry/spectrum.hpp"

namespace parry {

NumberTag number_tag_from_string(const std::string& s);
StatusKind status_kind_from_string(const std::string& s);
Criterion criterion_from_string(const std::string& s);

// "orbit" for Parry statuses, the criterion (with n for Akiyama) for
// NonParry, "none" for Unknown.
std::string certificate(const ParryStatus& s);

std::string status_json(const ParryStatus& s, int indent = -1);
ParryStatus status_from_json(const std::string& text);

// {poly, class, K, per_power:[{k, poly, status, certificate}], spec, spec_text, ord,
//  ord_lo, ord_hi, infinite, unknowns, complete, np_bound}
std::string spectrum_json(const SpectrumReport& r, int indent = 2);
SpectrumReport spectrum_from_json(const std::string& text);
std::string spectrum_text(const SpectrumReport& r);

std::string harness_json(const std::vector<HarnessRow>& rows, int indent = 2);
// Paper-style table: beta, gamma, minimal polynomial, expansion / verdict, K.
std::string harness_text(const std::vector<HarnessRow>& rows);

std::string cubic_family_json(const std::vector<CubicFamilyRow>& rows, int indent = 2);
std::string cubic_family_text(const std::vector<CubicFamilyRow>& rows);

// Row shape of the census table: d, N, total, parry, pisot, salem, H_n counts.
std::string census_tally_json(const CensusResult& r, int indent = 2);
std::string census_text(const CensusResult& r);

}  // namespace parry

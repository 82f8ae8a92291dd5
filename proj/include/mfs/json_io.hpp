#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mfs/mfsgate.hpp"
#include "mfs/polystruct.hpp"
#include "mfs/wells.hpp"

// Stable machine-readable formats: weights carry both coordinate systems,
// branch results and well slices go out as JSON arrays or CSV rows.
namespace mfs::io {

nlohmann::json weight_json(const RootDatum& d, const Weight& w);
Weight weight_from_json(const RootDatum& d, const nlohmann::json& j);

nlohmann::json datum_json(const RootDatum& d);

nlohmann::json branch_json(const RootDatum& source,
                           const std::map<Weight, long long>& decomp);
std::string branch_csv(const RootDatum& source,
                       const std::map<Weight, long long>& decomp);

struct WellSlice {
  std::string pair;
  long long mu = 0;
  Rat cutoff;
  std::vector<Weight> elements;
  std::vector<long long> degrees;
  std::vector<long long> tags;
};
WellSlice build_slice(wells::MFPair& pair, const Weight& mu, const Rat& cutoff);
nlohmann::json slice_json(const wells::MFPair& pair, const WellSlice& s);
std::string slice_csv(const wells::MFPair& pair, const WellSlice& s);

nlohmann::json leading_json(const poly::LeadingReport& rep);

nlohmann::json audit_json(const std::vector<gate::RowReport>& rows);

// fw-coordinate parser: "1,0,2"; with eps=true, rational epsilon
// coordinates like "3/2,1/2,1/2,1/2".
Weight parse_weight(const RootDatum& d, const std::string& text, bool eps);

}  // namespace mfs::io

#pragma once

// File formats. Complex data is stored as parallel "re"/"im" arrays; matrices
// as row-major nested arrays. See docs/formats.md for the schemas.

#include <string>
#include <vector>

#include <json.hpp>

#include "qclone/certifier.hpp"
#include "qclone/cloning.hpp"
#include "qclone/state_sets.hpp"

namespace qclone::io {

using json = nlohmann::json;

json to_json(const Ket& ket);
Ket ket_from_json(const json& j);

json to_json(const Operator& op);
Operator operator_from_json(const json& j);

// {"dim": d, "states": [{"label": ..., "re": [...], "im": [...]}, ...]}
// Norm deviations up to tol.norm are accepted as is; up to 1e-8 the state is
// renormalized and a warning is appended; anything larger is a FormatError.
inline constexpr double kRenormalizeLimit = 1e-8;

StateSet state_set_from_json(const json& j, std::vector<std::string>* warnings = nullptr,
                             const Tolerances& tol = {});
json to_json(const StateSet& set);

json to_json(const CloningInstance& instance);
// Rebuilds an instance and rejects it unless the unitary is unitary and clones
// the stored states.
CloningInstance instance_from_json(const json& j, const Tolerances& tol = {});

json to_json(const LoccCertificate& cert);
LoccCertificate certificate_from_json(const json& j);

json to_json(const GramAnalysis& analysis, const StateSet& set);
json to_json(const VerificationReport& report, const StateSet& set);

// Shortest round-trip representation; never locale dependent.
std::string format_double(double x);

inline constexpr const char* kSweepHeader = "alpha0,alpha1,delta_AB,delta_AAp";

std::string to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_csv(const std::string& text);

json parse(const std::string& text);
std::string dump(const json& j);

}  // namespace qclone::io

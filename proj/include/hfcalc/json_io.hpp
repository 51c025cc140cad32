#pragma once

#include <nlohmann/json.hpp>

#include "hfcalc/cfk.hpp"
#include "hfcalc/circle_bundle.hpp"
#include "hfcalc/grading.hpp"
#include "hfcalc/surgery.hpp"

namespace hfc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const PresentedModule& m);
Json to_json(const HfSummand& s);
Json to_json(const GradedModuleDescription& d);
Json to_json(const SpinCLabel& l);
Json to_json(const E1Page& page);
Json to_json(const FreeComplex& c);
Json to_json(const ZseqReport& r);
Json to_json(const DegreeProfile& p);
Json to_json(const VerdictReport& r);

Json delta_to_json(const DeltaData& d);
DeltaData delta_from_json(const Json& j);

}  // namespace hfc

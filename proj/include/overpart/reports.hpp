#pragma once

#include <json.hpp>

#include "overpart/hyper.hpp"
#include "overpart/maps.hpp"

namespace overpart {

/// {"mu", "t", "fiber": [string], "same_overlines", "one_more_overline",
/// "expected_size"}, partitions in the text syntax.
nlohmann::json to_json(const PreimageReport<Overpartition>& r);
nlohmann::json to_json(const PreimageReport<Bipartition>& r);

/// Inverses of to_json; throw ParseError on malformed input.
PreimageReport<Overpartition> phi_report_from_json(const nlohmann::json& j);
PreimageReport<Bipartition> psi_report_from_json(const nlohmann::json& j);

/// {"t", "order", "lines": [{"label", "equal_to_previous"}], "pass"}, plus
/// "matches_enumeration" when that comparison was made.
nlohmann::json to_json(const ChainReport& r);

/// Reads the summary back; line values are not part of the schema and come
/// back as zero series.
ChainReport chain_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiberCheckReport& r);

}  // namespace overpart

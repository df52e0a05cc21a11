#pragma once

// JSON forms shared by the CLI and the cache. Field order is fixed so that
// identical inputs produce byte-identical output.

#include <json.hpp>

#include "symstrata/arith.hpp"
#include "symstrata/catalog.hpp"
#include "symstrata/consistency.hpp"
#include "symstrata/hodge.hpp"
#include "symstrata/motivic.hpp"
#include "symstrata/spectral.hpp"

namespace symstrata {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "1.0.0";

/// {"flavor": ..., "classes": [{"degree","p","q","mult"}, ...]}
Json to_json(const HodgeTable& t);
HodgeTable hodge_table_from_json(const Json& j);

/// {"page_index", "shape": [dp, dq], "entries": [{"p","q","table"}, ...]}
Json to_json(const Page& page);
Page page_from_json(const Json& j);

/// [{"p","q","coeff"}, ...]
Json to_json(const EPoly& e);
EPoly epoly_from_json(const Json& j);

/// [{"power","coeff"}, ...]; coefficients are integers when integral and
/// "num/den" strings otherwise.
Json to_json(const QPoly& poly);
QPoly qpoly_from_json(const Json& j);

/// {"order", "coefficients": [...]}
Json to_json(const ZetaSeries& z);
Json to_json(const EZetaSeries& z);

Json to_json(const CountRecord& r);
CountRecord count_record_from_json(const Json& j);

Json to_json(const ConsistencyReport& r);
Json to_json(const BettiBounds& b);

}  // namespace symstrata

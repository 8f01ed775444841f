#pragma once

#include <string_view>

#include <json.hpp>

#include "packdom/bounds.hpp"
#include "packdom/constructive.hpp"
#include "packdom/exact.hpp"
#include "packdom/reductions.hpp"
#include "packdom/verify.hpp"

namespace packdom::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// 64-bit FNV-1a, rendered as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

Json to_json(const Graph& g);
Json to_json(const StructuralStats& s);
Json to_json(const SolveOutcome& o);
Json to_json(const BoundsReport& r);
Json to_json(const ConstructionTrace& t);
Json to_json(const SpanningTreeResult& r);
Json to_json(const EdgeSplit& s);
Json to_json(const Assignment& a);
Json to_json(const ReductionReport& r);
Json to_json(const SuiteReport& r);

}  // namespace packdom::cli

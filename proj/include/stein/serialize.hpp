#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stein/chain.hpp"
#include "stein/pipeline.hpp"
#include "stein/scheme.hpp"
#include "stein/spectrum.hpp"
#include "stein/verify.hpp"
#include "stein/walk.hpp"

namespace stein {

using Json = nlohmann::json;

Json to_json(const SpectrumAtomList& atoms);
Json to_json(const ExchangeableStats& stats);
Json to_json(const BoundReport& bound);
Json to_json(const PipelineResult& result);
Json to_json(const AuditReport& report, const ChainKernel& kernel);
Json to_json(const WalkCoefficients& walk);
Json to_json(const std::vector<SweepRow>& rows);
Json to_json(const std::vector<CheckResult>& checks);

std::string to_csv(const SpectrumAtomList& atoms);
std::string to_csv(const PipelineResult& result);
std::string to_csv(const AuditReport& report, const ChainKernel& kernel);
std::string to_csv(const WalkCoefficients& walk);
std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<CheckResult>& checks);

// Two-space indent, trailing newline. Parsing the output and dumping again
// gives the same bytes.
std::string dump(const Json& j);

// {"relations": [M_0, M_1, ...]}, each M either a list of rows or a flat
// row-major list of length N^2.
std::vector<RelationMatrix> parse_relations(const Json& j);

}  // namespace stein

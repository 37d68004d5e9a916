// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "homcount/engine.hpp"
#include "homcount/reductions.hpp"

namespace homcount {

using Json = nlohmann::ordered_json;

struct SpecMetadata {
    std::string name;
    std::string description;
    Json oracle;  // optional cross-check hint; null when absent
};

struct SpecFile {
    RawSpec raw;
    SpecMetadata meta;
};

// Strict parsing: unknown keys are rejected, dimensions are checked against
// the group, entries may be JSON integers or decimal strings.
SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec_file(const std::string& path);

Json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
// cols disambiguates empty matrices ([] parses as 0 x expected_cols).
IntMatrix matrix_from_json(const Json& j, int expected_cols = -1);

Json result_to_json(const CountingResult& r);

ReductionTrace trace_from_json(const Json& j);
ReductionTrace load_trace_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace homcount

// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcount/json_io.hpp"

using namespace homcount;

#ifndef HOMCOUNT_SPEC_DIR
#define HOMCOUNT_SPEC_DIR "data/specs"
#endif

TEST_CASE("bundled spec files parse and validate") {
    SpecFile file = load_spec_file(std::string(HOMCOUNT_SPEC_DIR) + "/sl2_mod_torus.json");
    CHECK(file.meta.name == "sl2_mod_torus");
    auto spec = HomogeneousSpec::validate(file.raw);
    CHECK(count_polynomial(spec, 0) == RatPoly::from_ints({0, 1, 1}));

    SpecFile conic = load_spec_file(std::string(HOMCOUNT_SPEC_DIR) + "/conic_torus.json");
    auto cspec = HomogeneousSpec::validate(conic.raw);
    CHECK(cspec.period() == 2);
}

TEST_CASE("preset parsing") {
    SpecFile gl4 = parse_spec_text(R"({
        "group": {"preset": "GL", "n": 4},
        "subtorus_restriction": [["1","0","0","-1"],["0","1","-1","0"]],
        "gamma_generators": []
    })");
    CHECK(gl4.raw.group.rank == 4);
    CHECK(gl4.raw.group.dim_g == 16);
    CHECK(gl4.raw.f0.is_identity());

    SpecFile raw_datum = parse_spec_text(R"({
        "group": {"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]},
        "subtorus_restriction": [[1]]
    })");
    CHECK(raw_datum.raw.group.all_roots.size() == 2);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_WITH_AS(parse_spec_text("{"), doctest::Contains("invalid JSON"), Error);
    CHECK_THROWS_WITH_AS(parse_spec_text(R"({"group": {"preset": "GL", "n": 2},
        "subtorus_restriction": [["1","0"]], "extra": 1})"),
                         doctest::Contains("unknown key"), Error);
    CHECK_THROWS_WITH_AS(parse_spec_text(R"({"group": {"preset": "E8", "n": 8},
        "subtorus_restriction": []})"),
                         doctest::Contains("unknown preset"), Error);
    // 2x3 gamma matrix on a rank-2 subtorus lattice.
    CHECK_THROWS_AS(parse_spec_text(R"({
        "group": {"preset": "GL", "n": 2},
        "subtorus_restriction": [["1","0"],["0","1"]],
        "gamma_generators": [[["1","0","0"],["0","1","0"]]]
    })"),
                    Error);
    // Restriction with the wrong number of columns.
    CHECK_THROWS_WITH_AS(parse_spec_text(R"({
        "group": {"preset": "GL", "n": 2},
        "subtorus_restriction": [["1","0","0"]]
    })"),
                         doctest::Contains("columns"), Error);
}

TEST_CASE("result serialization round trip and determinism") {
    SpecFile file = load_spec_file(std::string(HOMCOUNT_SPEC_DIR) + "/conic_torus.json");
    auto spec = HomogeneousSpec::validate(file.raw);
    CountingResult result = count_all(spec);
    Json j = result_to_json(result);
    CHECK(j.dump() == result_to_json(result).dump());  // byte-stable

    Json parsed = Json::parse(j.dump());
    CHECK(parsed["period"] == 2);
    CHECK(parsed["minimal_period"] == 2);
    CHECK(poly_from_json(parsed["polynomials"][0]["coeffs"]) == result.polys[0]);
    CHECK(poly_from_json(parsed["polynomials"][1]["coeffs"]) == result.polys[1]);
    CHECK(parsed["factorization"]["r"] == 1);
    CHECK(parsed["checks"]["thm12"] == true);
    CHECK(parsed["checks"]["thm13"] == true);
    CHECK(parsed["checks"]["thm14"] == true);
}

TEST_CASE("polynomial and matrix json forms") {
    RatPoly p = RatPoly::from_ints({0, -1, 1});
    Json j = poly_to_json(p);
    CHECK(j.dump() == R"(["0","-1","1"])");
    CHECK(poly_from_json(j) == p);

    IntMatrix m = IntMatrix::from_ints({{1, -2}, {0, 5}});
    Json jm = matrix_to_json(m);
    CHECK(jm.dump() == R"([["1","-2"],["0","5"]])");
    CHECK(matrix_from_json(jm) == m);

    // Empty matrix with explicit column count.
    CHECK(matrix_from_json(Json::array(), 3) == IntMatrix(0, 3));
}

TEST_CASE("trace files") {
    ReductionTrace t = trace_from_json(Json::parse(R"({
        "base": ["1", "1"],
        "steps": [{"type": "unipotent", "d": 2},
                  {"type": "parabolic", "flag": ["1", "1"]},
                  {"type": "normalizer_shift", "m": 1}]
    })"));
    CHECK(t.steps.size() == 3);
    RatPoly out = replay(t);
    // (t+1) -> t^2(t+1) -> t^2(t+1)^2 -> t(t+1)^2
    CHECK(out == RatPoly::from_ints({0, 1, 2, 1}));

    CHECK_THROWS_WITH_AS(trace_from_json(Json::parse(R"({"base": [], "steps":
        [{"type": "mystery"}]})")),
                         doctest::Contains("unknown trace step"), Error);
}

TEST_CASE("trace base can come from an engine result") {
    Json j;
    j["base"]["spec"] = std::string(HOMCOUNT_SPEC_DIR) + "/conic_torus.json";
    j["base"]["residue"] = 1;
    j["steps"] = Json::array({Json{{"type", "unipotent"}, {"d", 2}}});
    ReductionTrace t = trace_from_json(j);
    CHECK(replay(t) == RatPoly::from_ints({0, 0, 1, 1}));  // t^2 (t + 1)
}

TEST_CASE("parse errors are line anchored") {
    CHECK_THROWS_WITH_AS(parse_spec_text("{\n  \"group\": oops\n}"),
                         doctest::Contains("line 2"), Error);
}

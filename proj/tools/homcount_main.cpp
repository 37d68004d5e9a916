// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homcount/json_io.hpp"
#include "homcount/oracle.hpp"

namespace hc = homcount;
using hc::Json;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, const std::string& def = "json") {
    opts.format = def;
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    hc::require(out.good(), "io", "cannot write '" + opts.out_path + "'");
    out << payload << "\n";
}

std::string poly_render(const hc::RatPoly& p, const std::string& format) {
    if (format == "latex") return p.str("t", true);
    if (format == "text") return p.str("t", false);
    return poly_to_json(p).dump();
}

struct CheckLine {
    std::string name;
    long cases = 0;
    bool pass = true;
    std::string detail;
};

hc::RatPoly glr_expected_poly(int r) {
    hc::RatPoly t = hc::RatPoly::variable();
    hc::RatPoly one = hc::RatPoly::constant(hc::BigRat(1));
    hc::RatPoly qr =
        (t + one).pow(static_cast<unsigned>(r)) + (t - one).pow(static_cast<unsigned>(r));
    qr = qr.scaled(hc::BigRat(1, 2));
    hc::RatPoly acc = qr * hc::RatPoly::monomial(hc::BigRat(1), r * (2 * r - 1));
    for (int i = 1; i <= r; ++i)
        acc = acc * (hc::RatPoly::monomial(hc::BigRat(1), 2 * i - 1) - one);
    for (int j = 1; j <= r; ++j) {
        // (t^(2j) - 1) / (t^2 - 1)
        std::vector<hc::BigRat> geom(static_cast<std::size_t>(2 * j - 1), hc::BigRat(0));
        for (int k = 0; k < j; ++k) geom[static_cast<std::size_t>(2 * k)] = 1;
        acc = acc * hc::RatPoly(std::move(geom));
    }
    return acc;
}

// Engine vs. closed forms vs. brute-force enumeration; the oracle metadata
// of the spec file selects which enumeration applies.
std::vector<CheckLine> run_checks(const hc::SpecFile& file, const hc::HomogeneousSpec& spec,
                                  const hc::CountingResult& result, long qmax, int nmax) {
    std::vector<CheckLine> lines;

    // count_all enforced monicity, integrality, the factorization identity
    // and shift positivity on the way here.
    lines.push_back({"result_invariants", static_cast<long>(result.polys.size()), true, ""});

    {
        CheckLine l{"count_at_vs_polynomial", 0, true, ""};
        for (long q = 2; q <= qmax; ++q) {
            int p = 0, m = 0;
            if (!hc::oracle::is_prime_power(q, p, m)) continue;
            for (int n = 1; n <= nmax; ++n) {
                try {
                    hc::count_at(spec, hc::BigInt(q), n);
                } catch (const hc::Error& e) {
                    l.pass = false;
                    l.detail = e.what();
                }
                ++l.cases;
            }
        }
        lines.push_back(l);
    }

    {
        CheckLine l{"minimal_period_divides_bound", 1, true, ""};
        if (result.bound % result.minimal_period != 0) {
            l.pass = false;
            l.detail = "minimal period does not divide the bound";
        }
        lines.push_back(l);
    }

    const Json& hint = file.meta.oracle;
    if (hint.is_object() && hint.contains("kind")) {
        std::string kind = hint.at("kind").get<std::string>();
        CheckLine l{"oracle_" + kind, 0, true, ""};
        try {
            if (kind == "conic") {
                for (long q : {3L, 5L, 7L}) {
                    long size = q;
                    for (int n = 1; n <= nmax; ++n, size *= q) {
                        if (size > 2048) break;
                        hc::oracle::SmallField f(static_cast<int>(q), n);
                        long a = 0;
                        for (long c = 2; c < q; ++c)
                            if (!f.is_square(f.from_int(c))) {
                                a = c;
                                break;
                            }
                        if (a == 0) continue;  // base nonsquare became a square
                        long points = hc::oracle::conic_count(f.from_int(a), f.from_int(1), f);
                        hc::BigInt qn = hc::big_pow(hc::BigInt(q), static_cast<unsigned long>(n));
                        if (hc::BigInt(points) != spec.polynomial(n).eval_int(qn)) l.pass = false;
                        ++l.cases;
                    }
                }
            } else if (kind == "glr") {
                int r = hint.at("r").get<int>();
                if (!(glr_expected_poly(r) == spec.polynomial(0))) l.pass = false;
                ++l.cases;
                for (long q = 2; q <= qmax; ++q) {
                    int p = 0, m = 0;
                    if (!hc::oracle::is_prime_power(q, p, m)) continue;
                    if (hc::count_at(spec, hc::BigInt(q), 1) !=
                        hc::oracle::glr_closed_form(r, hc::BigInt(q)))
                        l.pass = false;
                    ++l.cases;
                }
            } else if (kind == "p1pairs") {
                std::string mode = hint.at("mode").get<std::string>();
                hc::oracle::PairMode pm = mode == "ordered"
                                              ? hc::oracle::PairMode::Ordered
                                              : hc::oracle::PairMode::UnorderedVariety;
                for (long q = 2; q <= std::max(qmax, 5L); ++q) {
                    int p = 0, m = 0;
                    if (!hc::oracle::is_prime_power(q, p, m)) continue;
                    hc::oracle::SmallField f(p, m);
                    long pairs = hc::oracle::p1_pair_count(f, pm);
                    if (hc::BigInt(pairs) != spec.polynomial(1).eval_int(hc::BigInt(q)))
                        l.pass = false;
                    ++l.cases;
                }
            } else if (kind == "flags") {
                int n = hint.at("n").get<int>();
                std::vector<int> dims = hint.at("dims").get<std::vector<int>>();
                std::vector<int> parabolic;
                for (int i = 1; i <= n - 1; ++i)
                    if (std::find(dims.begin(), dims.end(), i) == dims.end())
                        parabolic.push_back(i - 1);
                hc::RatPoly flag = hc::coset_poincare(spec.root_datum(), spec.weyl(), parabolic);
                for (long q = 2; q <= std::max(qmax, 3L); ++q) {
                    int p = 0, m = 0;
                    if (!hc::oracle::is_prime_power(q, p, m)) continue;
                    hc::oracle::SmallField f(p, m);
                    long flags = hc::oracle::flag_count(f, n, dims);
                    if (hc::BigInt(flags) != flag.eval_int(hc::BigInt(q))) l.pass = false;
                    ++l.cases;
                }
            } else {
                l.pass = false;
                l.detail = "unknown oracle kind '" + kind + "'";
            }
        } catch (const hc::Error& e) {
            l.pass = false;
            l.detail = e.what();
        }
        lines.push_back(l);
    }
    return lines;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact counting polynomials for homogeneous spaces over finite fields"};
    app.require_subcommand(1);

    std::string input;
    std::string q_text = "2";
    int n_value = 1;
    long qmax = 3;
    int nmax = 4;
    int residue = -1;

    OutputOptions poly_out, factor_out, count_out, check_out, period_out, oracle_out, reduce_out;

    auto* poly_cmd = app.add_subcommand("poly", "Counting polynomials for a spec file");
    poly_cmd->add_option("--input", input, "Spec file")->required();
    poly_cmd->add_option("--residue", residue, "Only this residue class");
    add_output_options(poly_cmd, poly_out);

    auto* factor_cmd = app.add_subcommand("factor", "(t-1)-factorization of P_0");
    factor_cmd->add_option("--input", input, "Spec file")->required();
    add_output_options(factor_cmd, factor_out);

    auto* count_cmd = app.add_subcommand("count", "Exact point count over F_{q^n}");
    count_cmd->add_option("--input", input, "Spec file")->required();
    count_cmd->add_option("--q", q_text, "Prime power q")->required();
    count_cmd->add_option("--n", n_value, "Extension degree n")->required();
    add_output_options(count_cmd, count_out, "text");

    auto* check_cmd = app.add_subcommand("check", "Cross-validate a spec end to end");
    check_cmd->add_option("--input", input, "Spec file")->required();
    check_cmd->add_option("--qmax", qmax, "Largest q for point checks");
    check_cmd->add_option("--nmax", nmax, "Largest extension degree");
    add_output_options(check_cmd, check_out, "text");

    auto* period_cmd = app.add_subcommand("period", "Period and rank bound");
    period_cmd->add_option("--input", input, "Spec file")->required();
    add_output_options(period_cmd, period_out);

    auto* reduce_cmd = app.add_subcommand("reduce", "Replay a reduction trace");
    reduce_cmd->add_option("--input", input, "Trace file")->required();
    add_output_options(reduce_cmd, reduce_out);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration oracles");
    oracle_cmd->require_subcommand(1);
    long field_q = 2;
    long elt_a = 0, elt_b = 1;
    int amb_n = 2;
    std::vector<int> dims;
    std::string mode = "ordered";
    std::string matrix_text;
    std::string matrix_path;
    int split_degree = 1;
    int glr_r = 1;

    auto* conic_cmd = oracle_cmd->add_subcommand("conic", "Points on x^2 - a y^2 = b");
    conic_cmd->add_option("--q", field_q, "Field order")->required();
    conic_cmd->add_option("--a", elt_a, "Coefficient a (field code)")->required();
    conic_cmd->add_option("--b", elt_b, "Coefficient b (field code)")->required();
    add_output_options(conic_cmd, oracle_out, "text");

    auto* flags_cmd = oracle_cmd->add_subcommand("flags", "Partial flags in F_q^n");
    flags_cmd->add_option("--q", field_q, "Field order")->required();
    flags_cmd->add_option("--n", amb_n, "Ambient dimension")->required();
    flags_cmd->add_option("--dims", dims, "Flag dimension profile")->required()->delimiter(',');
    add_output_options(flags_cmd, oracle_out, "text");

    auto* pairs_cmd = oracle_cmd->add_subcommand("p1pairs", "Pairs of points on P^1");
    pairs_cmd->add_option("--q", field_q, "Field order")->required();
    pairs_cmd->add_option("--mode", mode, "ordered | unordered_variety")
        ->check(CLI::IsMember({"ordered", "unordered_variety"}));
    add_output_options(pairs_cmd, oracle_out, "text");

    auto* tt_cmd = oracle_cmd->add_subcommand("twisted-torus", "Fixed points of q*a on a torus");
    tt_cmd->add_option("--q", field_q, "Prime power q")->required();
    tt_cmd->add_option("--matrix", matrix_text, "Automorphism as inline JSON");
    tt_cmd->add_option("--input", matrix_path, "Automorphism as a JSON file");
    tt_cmd->add_option("--split-degree", split_degree, "Degree over which the twist splits")
        ->required();
    add_output_options(tt_cmd, oracle_out, "text");

    auto* glr_cmd = oracle_cmd->add_subcommand("glr", "Closed form for GL(2r)/H_r");
    glr_cmd->add_option("--r", glr_r, "Parameter r")->required();
    glr_cmd->add_option("--q", field_q, "Prime power q")->required();
    add_output_options(glr_cmd, oracle_out, "text");

    CLI11_PARSE(app, argc, argv);

    if (*poly_cmd) {
        hc::SpecFile file = hc::load_spec_file(input);
        hc::HomogeneousSpec spec = hc::HomogeneousSpec::validate(file.raw);
        hc::CountingResult result = hc::count_all(spec);
        if (poly_out.format == "json") {
            if (residue >= 0) {
                hc::require(residue < result.period, "domain", "residue exceeds the period");
                Json out;
                out["residue"] = residue;
                out["coeffs"] = poly_to_json(result.polys[static_cast<std::size_t>(residue)]);
                emit(poly_out, out.dump());
            } else {
                emit(poly_out, result_to_json(result).dump());
            }
        } else {
            std::string payload;
            for (int r = 0; r < result.period; ++r) {
                if (residue >= 0 && r != residue) continue;
                payload += "P_" + std::to_string(r) + "(t) = " +
                           poly_render(result.polys[static_cast<std::size_t>(r)],
                                       poly_out.format) +
                           "\n";
            }
            if (!payload.empty()) payload.pop_back();
            emit(poly_out, payload);
        }
    } else if (*factor_cmd) {
        hc::SpecFile file = hc::load_spec_file(input);
        hc::HomogeneousSpec spec = hc::HomogeneousSpec::validate(file.raw);
        hc::Factorization fact = hc::factorize(spec);
        if (factor_out.format == "json") {
            Json out;
            out["r"] = fact.r;
            out["Q"] = poly_to_json(fact.q_x);
            emit(factor_out, out.dump());
        } else {
            emit(factor_out, "r = " + std::to_string(fact.r) +
                                 ", Q = " + poly_render(fact.q_x, factor_out.format));
        }
    } else if (*count_cmd) {
        hc::SpecFile file = hc::load_spec_file(input);
        hc::HomogeneousSpec spec = hc::HomogeneousSpec::validate(file.raw);
        hc::BigInt q = hc::big_from_string(q_text);
        hc::BigInt count = hc::count_at(spec, q, n_value);
        if (count_out.format == "json") {
            Json out;
            out["q"] = q.get_str();
            out["n"] = n_value;
            out["count"] = count.get_str();
            emit(count_out, out.dump());
        } else {
            emit(count_out, count.get_str());
        }
    } else if (*check_cmd) {
        hc::SpecFile file = hc::load_spec_file(input);
        hc::HomogeneousSpec spec = hc::HomogeneousSpec::validate(file.raw);
        hc::CountingResult result = hc::count_all(spec);
        std::vector<CheckLine> lines = run_checks(file, spec, result, qmax, nmax);
        bool all = true;
        for (const auto& l : lines) all = all && l.pass;
        if (check_out.format == "json") {
            Json out;
            out["spec"] = file.meta.name;
            out["all_pass"] = all;
            Json checks = Json::array();
            for (const auto& l : lines) {
                Json c;
                c["name"] = l.name;
                c["cases"] = l.cases;
                c["status"] = l.pass ? "pass" : "fail";
                if (!l.detail.empty()) c["detail"] = l.detail;
                checks.push_back(std::move(c));
            }
            out["checks"] = std::move(checks);
            emit(check_out, out.dump());
        } else {
            std::string payload;
            for (const auto& l : lines)
                payload += std::string(l.pass ? "PASS" : "FAIL") + " " + l.name + " (" +
                           std::to_string(l.cases) + " cases)" +
                           (l.detail.empty() ? "" : ": " + l.detail) + "\n";
            payload += all ? "all checks passed" : "some checks FAILED";
            emit(check_out, payload);
        }
        return all ? 0 : 1;
    } else if (*period_cmd) {
        hc::SpecFile file = hc::load_spec_file(input);
        hc::HomogeneousSpec spec = hc::HomogeneousSpec::validate(file.raw);
        hc::CountingResult result = hc::count_all(spec);
        if (period_out.format == "json") {
            Json out;
            out["rank"] = spec.root_datum().rank;
            out["bound"] = result.bound.get_str();
            out["period"] = result.period;
            out["minimal_period"] = result.minimal_period;
            emit(period_out, out.dump());
        } else {
            emit(period_out, "period " + std::to_string(result.period) + ", minimal " +
                                 std::to_string(result.minimal_period) + ", bound " +
                                 result.bound.get_str());
        }
    } else if (*reduce_cmd) {
        hc::ReductionTrace trace = hc::load_trace_file(input);
        hc::RatPoly out_poly = hc::replay(trace);
        if (reduce_out.format == "json")
            emit(reduce_out, poly_to_json(out_poly).dump());
        else
            emit(reduce_out, poly_render(out_poly, reduce_out.format));
    } else if (*oracle_cmd) {
        std::string value;
        Json meta;
        if (*conic_cmd) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(field_q);
            hc::require(elt_a >= 0 && elt_a < field_q && elt_b >= 0 && elt_b < field_q,
                        "domain", "field codes must lie in [0, q)");
            value = std::to_string(hc::oracle::conic_count(elt_a, elt_b, f));
            meta["case"] = "conic";
            meta["field_modulus"] = f.modulus();
        } else if (*flags_cmd) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(field_q);
            value = std::to_string(hc::oracle::flag_count(f, amb_n, dims));
            meta["case"] = "flags";
            meta["field_modulus"] = f.modulus();
        } else if (*pairs_cmd) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(field_q);
            value = std::to_string(hc::oracle::p1_pair_count(
                f, mode == "ordered" ? hc::oracle::PairMode::Ordered
                                     : hc::oracle::PairMode::UnorderedVariety));
            meta["case"] = "p1pairs";
        } else if (*tt_cmd) {
            hc::require(!matrix_text.empty() || !matrix_path.empty(), "domain",
                        "twisted-torus needs --matrix or --input");
            Json j;
            try {
                j = Json::parse(matrix_text.empty() ? hc::read_text_file(matrix_path)
                                                    : matrix_text);
            } catch (const Json::parse_error& e) {
                hc::fail("parse", std::string("invalid matrix JSON: ") + e.what());
            }
            hc::IntMatrix a = hc::matrix_from_json(j);
            value = std::to_string(hc::oracle::twisted_torus_count(a, field_q, split_degree));
            meta["case"] = "twisted-torus";
        } else if (*glr_cmd) {
            value = hc::oracle::glr_closed_form(glr_r, hc::BigInt(field_q)).get_str();
            meta["case"] = "glr";
        }
        if (oracle_out.format == "json") {
            meta["value"] = value;
            emit(oracle_out, meta.dump());
        } else {
            emit(oracle_out, value);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hc::Error& e) {
        Json err;
        err["error"]["kind"] = e.kind();
        err["error"]["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"]["kind"] = "internal";
        err["error"]["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
}

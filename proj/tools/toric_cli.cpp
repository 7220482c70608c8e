// Command-line front end for the toric library.
//
// Exit codes: 0 success, 1 computed/expected mismatch, 2 bad input,
// 3 instance infeasible under the engine limits.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/code.hpp"
#include "toric/cubics.hpp"
#include "toric/gf.hpp"
#include "toric/io.hpp"
#include "toric/lattice.hpp"
#include "toric/polyfact.hpp"
#include "toric/verify.hpp"

using nlohmann::ordered_json;
using namespace toric;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_MISMATCH = 1;
constexpr int EXIT_BAD_INPUT = 2;
constexpr int EXIT_INFEASIBLE = 3;

bool is_infeasible_message(const std::string& msg) {
    return msg.find("too large") != std::string::npos ||
           msg.find("limited to") != std::string::npos;
}

struct Options {
    std::string input;
    int p = 0, h = 1;
    int m = 2;
    long q_arg = 0;
    std::string engine = "auto";
    bool orbits = true;
    int workers = 1;
    bool json = false;
    bool predict = false;
    std::string budget = "quick";
    std::string table = "all";
    long ell = 4;
    std::vector<long> ks = {1};
    long scan_primes = 0;
    long ext_samples = 64;
    bool exhaustive_smoothness = false;
};

void emit(const Options& o, const ordered_json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Field field_from(const Options& o) {
    if (o.p <= 0) throw std::invalid_argument("--p is required");
    return Field::make(o.p, o.h);
}

InputSpec load_with_overrides(const Options& o) {
    if (o.input.empty()) throw std::invalid_argument("--input is required");
    InputSpec in = load_input(o.input);
    if (o.p > 0) { in.p = o.p; in.h = o.h; }
    if (o.m != 2) in.m = o.m;
    return in;
}

ordered_json json_points(const std::vector<Exponent>& pts) {
    ordered_json a = ordered_json::array();
    for (const Exponent& e : pts) a.push_back(e);
    return a;
}

ordered_json json_polygon(const Polygon& P) {
    ordered_json a = ordered_json::array();
    for (Pt v : P.verts) a.push_back({v.x, v.y});
    return a;
}

int cmd_field(const Options& o) {
    Field F = field_from(o);
    ordered_json j{{"p", F.p}, {"h", F.h}, {"q", F.q},
                   {"modulus", F.modulus}, {"alpha", F.alpha},
                   {"description", F.describe()}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s\nq = %d, alpha = %d (order %d)\n",
                  F.describe().c_str(), F.q, F.alpha, F.q - 1);
    emit(o, j, buf);
    return EXIT_OK;
}

int cmd_code(const Options& o) {
    InputSpec in = load_with_overrides(o);
    if (!in.has_field()) throw std::invalid_argument("field not given: use --p/--h or the input file");
    if (in.points.empty()) throw std::invalid_argument("code needs a \"points\" list");
    Field F = Field::make(in.p, in.h);
    ToricCode C = build_code(F, in.points, in.m);
    int k = dimension(C);

    long d = -1;
    std::string engine_used = "none";
    if (o.engine == "exhaustive" || o.engine == "auto") {
        try {
            d = min_distance_exhaustive(C, {o.orbits, o.workers});
            engine_used = o.orbits ? "exhaustive-orbit" : "exhaustive";
        } catch (const std::invalid_argument&) {
            if (o.engine == "exhaustive") throw;
        }
    }
    if (d < 0 && (o.engine == "bz" || o.engine == "auto")) {
        d = min_distance_bz(C);  // throws "too large" if infeasible
        engine_used = "bz";
    }

    ordered_json j{{"q", F.q}, {"m", C.m}, {"n", C.n}, {"k", k},
                   {"d", d}, {"engine", engine_used}, {"S", json_points(C.S)}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "[n, k, d] = [%ld, %d, %ld] over GF(%d)  (engine: %s)\n",
                  C.n, k, d, F.q, engine_used.c_str());
    std::string text = buf;

    int rc = EXIT_OK;
    if (o.predict && in.m == 2) {
        TheoremPrediction pr = predict_d_theorem(convex_hull(in.plane_points()),
                                                 in.plane_points(), F.q);
        j["prediction"] = ordered_json{{"applicable", pr.applicable},
                                       {"d", pr.applicable ? pr.d : -1},
                                       {"reason", pr.reason}};
        if (pr.applicable) {
            text += "predicted d = " + std::to_string(pr.d) +
                    (pr.d == d ? " (matches)\n" : " (MISMATCH)\n");
            if (pr.d != d) rc = EXIT_MISMATCH;
        } else {
            text += "prediction not applicable: " + pr.reason + "\n";
        }
    }
    emit(o, j, text);
    return rc;
}

const char* summand_str(const Summand& s) {
    return s.kind == Summand::Segment ? "segment" : "triangle";
}

int cmd_minklen(const Options& o) {
    InputSpec in = load_with_overrides(o);
    Polygon P = in.polygon();
    MinkLengthResult r = minkowski_length(P);
    ordered_json decs = ordered_json::array();
    std::string text = "L(P) = " + std::to_string(r.length) +
                       ", maximal decompositions: " + std::to_string(r.decompositions.size()) +
                       (r.any_t0 ? " (exceptional triangle occurs)\n" : "\n");
    for (const Decomposition& d : r.decompositions) {
        ordered_json summands = ordered_json::array();
        std::string line = "  ";
        for (const Summand& s : d.summands) {
            ordered_json sj{{"kind", summand_str(s)}};
            if (s.kind == Summand::Segment) {
                sj["dir"] = {s.dir.x, s.dir.y};
                line += "[(" + std::to_string(s.dir.x) + "," + std::to_string(s.dir.y) + ")] ";
            } else {
                sj["vertices"] = json_polygon(s.triangle);
                line += "[T0] ";
            }
            summands.push_back(std::move(sj));
        }
        decs.push_back(ordered_json{{"summands", std::move(summands)},
                                    {"sum_vertices", json_polygon(d.sum)}});
        text += line + "\n";
    }
    ordered_json j{{"vertices", json_polygon(P)}, {"length", r.length},
                   {"any_t0", r.any_t0},
                   {"distinct_maximal_subpolygons", r.distinct_sums().size()},
                   {"decompositions", std::move(decs)}};
    emit(o, j, text);
    return EXIT_OK;
}

int cmd_bounds(const Options& o) {
    InputSpec in = load_with_overrides(o);
    Polygon P = in.polygon();
    long q = o.q_arg;
    if (q == 0 && in.has_field()) {
        q = 1;
        for (int i = 0; i < in.h; ++i) q *= in.p;
    }
    if (q < 3) throw std::invalid_argument("give a field with --q or --p/--h (q >= 3)");
    MinkLengthResult r = minkowski_length(P);
    SSBounds b = ss_lower_bound(r.length, q);
    ordered_json j{{"q", q}, {"length", r.length}, {"any_t0", r.any_t0},
                   {"bound_with_t0", b.with_t0}, {"bound_without_t0", b.without_t0},
                   {"applicable_bound", r.any_t0 ? b.with_t0 : b.without_t0}};
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "L(P) = %ld over GF(%ld): d >= %ld%s\n"
                  "(with exceptional triangle: %ld, without: %ld)\n",
                  r.length, q, r.any_t0 ? b.with_t0 : b.without_t0,
                  r.any_t0 ? " (triangle present)" : "", b.with_t0, b.without_t0);
    emit(o, j, buf);
    return EXIT_OK;
}

int cmd_census(const Options& o) {
    if (o.scan_primes > 0) {
        // fast distinct-root counts for u^4 + t1 u + t2 across primes
        ordered_json rows = ordered_json::array();
        std::vector<long> zero_primes = {2, 3};  // no valid quartic count in char 2, 3
        std::string text = "p : distinct-nonzero-root quartics (u^4 + t1 u + t2)\n";
        for (long p = 5; p <= o.scan_primes; ++p) {
            if (!is_prime(p)) continue;
            Field F = Field::make(static_cast<int>(p), 1);
            long c = quartic_distinct_root_count(F);
            if (c == 0) zero_primes.push_back(p);
            rows.push_back(ordered_json{{"p", p}, {"count", c}});
            text += "  " + std::to_string(p) + " : " + std::to_string(c) + "\n";
        }
        ordered_json j{{"family", "u^4 + t1 u + t2"}, {"rows", std::move(rows)},
                       {"primes_with_zero_count", zero_primes}};
        text += "primes with count zero:";
        for (long p : zero_primes) text += " " + std::to_string(p);
        text += "\n";
        emit(o, j, text);
        return EXIT_OK;
    }

    Field F = field_from(o);
    UniFamily fam = UniFamily::make(F, o.ell, o.ks);
    CensusReport R = census(fam, o.workers);
    OrbitVerdict V = orbit_divisibility_check(fam);
    ordered_json pats = ordered_json::object();
    for (const auto& [k, v] : R.pattern_counts) pats[k] = v;
    ordered_json j{{"q", R.q}, {"m", R.m}, {"total", R.total},
                   {"pattern_counts", std::move(pats)},
                   {"lambda0_count", R.lambda0_count},
                   {"distinct_nonzero_root_count", R.distinct_nonzero_root_count},
                   {"distinct_root_free_count", R.distinct_root_free_count},
                   {"disc_locus_count", R.disc_locus_count},
                   {"disc_locus_all_t_nonzero", R.disc_locus_all_t_nonzero},
                   {"corollary_applicable", R.corollary_applicable},
                   {"ratio_lambda0", R.ratio_lambda0},
                   {"t_lambda0", R.t_lambda0},
                   {"disc_bound_holds", R.disc_bound_holds},
                   {"orbit_check_ok", V.ok()}};
    char buf[400];
    std::snprintf(buf, sizeof buf,
                  "family u^%ld + ... over GF(%ld): %ld members\n"
                  "split completely: %ld  (ratio %.5f, T(lambda) = %.5f)\n"
                  "distinct nonzero roots: %ld  (trivial stabilizer: %ld)\n"
                  "discriminant locus: %ld  (all t nonzero: %ld)\n"
                  "orbit check: %s\n",
                  o.ell, static_cast<long>(R.q), R.total, R.lambda0_count,
                  R.ratio_lambda0, R.t_lambda0, R.distinct_nonzero_root_count,
                  R.distinct_root_free_count, R.disc_locus_count,
                  R.disc_locus_all_t_nonzero, V.ok() ? "ok" : "FAILED");
    emit(o, j, buf);
    return V.ok() ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_cubics(const Options& o) {
    Field F = field_from(o);
    const long q = F.q;
    ordered_json j{{"q", q}};
    std::string text = "cubic family a x^2 y + b x y^2 + c x y z + d z^3 over GF(" +
                       std::to_string(q) + ")\n";
    bool all_ok = true;

    if (q <= 64) {
        ScanReport R = divby3_scan(F, o.exhaustive_smoothness);
        j["divby3"] = ordered_json{{"members", R.members}, {"smooth", R.smooth},
                                   {"singular", R.singular},
                                   {"divisible_ok", R.divisible_ok},
                                   {"hasse_ok", R.hasse_ok},
                                   {"max_ntor_c0", R.max_ntor_c0}};
        text += "  d=1 scan: " + std::to_string(R.smooth) + " smooth / " +
                std::to_string(R.singular) + " singular; 3 | N: " +
                (R.divisible_ok ? "ok" : "FAILED") + "; Hasse: " +
                (R.hasse_ok ? "ok" : "FAILED") + "\n";
        all_ok = all_ok && R.divisible_ok && R.hasse_ok;
    }

    if (q % 2 == 1 && q % 3 == 2) {
        if (q <= 32) {
            SupersingularVerdict V = supersingular_check(F, o.ext_samples);
            j["supersingular"] = ordered_json{{"checked", V.checked},
                                              {"ext_checked", V.ext_checked},
                                              {"base_ok", V.base_ok},
                                              {"ext_ok", V.ext_ok}};
            text += "  supersingular (c=0): base " + (V.base_ok ? std::string("ok") : "FAILED") +
                    " (" + std::to_string(V.checked) + " members), extension " +
                    (V.ext_ok ? "ok" : "FAILED") + " (" + std::to_string(V.ext_checked) +
                    " samples)\n";
            all_ok = all_ok && V.base_ok && V.ext_ok;
        }
        T0Prediction P = predict_d_T0(F.p, F.h);
        j["predict_d_T0"] = ordered_json{{"t", P.t}, {"d", P.d},
                                         {"gcd_on_p_only", P.gcd_on_p_only}};
        text += "  predicted d(C_T0) = " + std::to_string(P.d) +
                " (trace t = " + std::to_string(P.t) + ")\n";
        if (q <= 32) {
            T0SVerdict T = theorem_T0S_check(F);
            j["t0_vs_s"] = ordered_json{{"d_S", T.d_S}, {"d_T0", T.d_T0},
                                        {"witness_weight", T.witness_weight},
                                        {"ok", T.ok()}};
            bool match = T.d_T0 == P.d;
            j["prediction_matches"] = match;
            text += "  computed d(C_S) = " + std::to_string(T.d_S) +
                    ", d(C_T0) = " + std::to_string(T.d_T0) +
                    (match ? " (prediction matches)\n" : " (prediction MISMATCH)\n");
            all_ok = all_ok && T.ok() && match;
        }
    } else {
        text += "  q is not odd with q = 2 mod 3: supersingular checks skipped\n";
    }

    j["ok"] = all_ok;
    emit(o, j, text);
    return all_ok ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_verify(const Options& o) {
    Budget b = parse_budget(o.budget);
    std::vector<std::string> names;
    if (o.table == "all")
        names = verify_table_names();
    else
        names.push_back(o.table);
    bool all_ok = true;
    ordered_json jtables = ordered_json::array();
    std::string text;
    for (const std::string& name : names) {
        VerifyReport R = verify_table(name, b, o.workers);
        all_ok = all_ok && R.ok;
        ordered_json rows = ordered_json::array();
        text += "table " + name + ": " + (R.ok ? "ok" : "FAILED") + "\n";
        for (const VerifyEntry& e : R.entries) {
            rows.push_back(ordered_json{{"id", e.id}, {"expected", e.expected},
                                        {"computed", e.ran ? e.computed : -1},
                                        {"ran", e.ran}, {"ok", e.ok},
                                        {"seconds", e.seconds},
                                        {"citation", e.citation}});
            char buf[200];
            if (e.ran)
                std::snprintf(buf, sizeof buf, "  %-14s expected %ld  computed %ld  %s  (%.2fs)\n",
                              e.id.c_str(), e.expected, e.computed,
                              e.ok ? "ok" : "MISMATCH", e.seconds);
            else
                std::snprintf(buf, sizeof buf, "  %-14s expected %ld  skipped (budget)\n",
                              e.id.c_str(), e.expected);
            text += buf;
        }
        jtables.push_back(ordered_json{{"table", name}, {"ok", R.ok},
                                       {"entries", std::move(rows)}});
    }
    ordered_json j{{"budget", o.budget}, {"tables", std::move(jtables)}, {"ok", all_ok}};
    emit(o, j, text);
    return all_ok ? EXIT_OK : EXIT_MISMATCH;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized toric codes: distances, lattice bounds, and curve counts"};
    app.require_subcommand(1);
    Options o;

    auto add_field = [&](CLI::App* c) {
        c->set_help_flag("--help", "print help");  // frees -h for the field option
        c->add_option("--p", o.p, "field characteristic");
        c->add_option("--h", o.h, "extension degree (default 1)");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", o.json, "emit JSON");
        c->add_option("--workers", o.workers, "worker threads");
    };

    CLI::App* field = app.add_subcommand("field", "describe a finite field");
    add_field(field);
    add_common(field);

    CLI::App* code = app.add_subcommand("code", "build a code and compute its parameters");
    code->add_option("--input", o.input, "JSON file with the exponent set")->required();
    add_field(code);
    code->add_option("--m", o.m, "ambient dimension (default 2)");
    code->add_option("--engine", o.engine, "distance engine")
        ->check(CLI::IsMember({"auto", "exhaustive", "bz"}));
    code->add_flag("--orbits,!--no-orbits", o.orbits, "torus-orbit reduction (default on)");
    code->add_flag("--predict", o.predict, "compare against the segment-decomposition prediction");
    add_common(code);

    CLI::App* mink = app.add_subcommand("minklen", "Minkowski length and maximal decompositions");
    mink->add_option("--input", o.input, "JSON file with vertices or points")->required();
    add_common(mink);

    CLI::App* bounds = app.add_subcommand("bounds", "minimum-distance lower bounds for a polygon");
    bounds->add_option("--input", o.input, "JSON file with vertices or points")->required();
    add_field(bounds);
    bounds->add_option("--q", o.q_arg, "field size (alternative to --p/--h)");
    add_common(bounds);

    CLI::App* census = app.add_subcommand("census", "factorization census of a sparse family");
    add_field(census);
    census->add_option("--ell", o.ell, "family degree (default 4)");
    census->add_option("--k", o.ks, "inner exponents, strictly decreasing (default 1)");
    census->add_option("--scan-primes", o.scan_primes, "scan quartic counts for primes up to N");
    add_common(census);

    CLI::App* cubics = app.add_subcommand("cubics", "checks for the torus cubic family");
    add_field(cubics);
    cubics->add_option("--ext-samples", o.ext_samples, "members recounted over GF(q^2)");
    cubics->add_flag("--exhaustive-smoothness", o.exhaustive_smoothness,
                     "use the scan-based singularity test in characteristic 2 and 3");
    add_common(cubics);

    CLI::App* verify = app.add_subcommand("verify", "recompute published tables");
    verify->add_option("--table", o.table, "table name or \"all\"")
        ->check(CLI::IsMember({"all", "t0-vs-s", "figure2", "figure4", "record-code"}));
    verify->add_option("--budget", o.budget, "time budget")
        ->check(CLI::IsMember({"quick", "full", "long"}));
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_BAD_INPUT;
    }

    try {
        if (field->parsed()) return cmd_field(o);
        if (code->parsed()) return cmd_code(o);
        if (mink->parsed()) return cmd_minklen(o);
        if (bounds->parsed()) return cmd_bounds(o);
        if (census->parsed()) return cmd_census(o);
        if (cubics->parsed()) return cmd_cubics(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_infeasible_message(e.what()) ? EXIT_INFEASIBLE : EXIT_BAD_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    }
    return EXIT_BAD_INPUT;
}

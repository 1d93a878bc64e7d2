#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankforge/bases.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/properties.hpp"
#include "rankforge/ranks.hpp"

using namespace rankforge;

namespace {

constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitBug = 4;

BinaryMatrix read_matrix(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return BinaryMatrix::parse(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return BinaryMatrix::parse(buf.str());
}

Semiring parse_semiring(const std::string& name) {
    if (name == "binary") return Semiring::Binary;
    if (name == "boolean") return Semiring::Boolean;
    throw InvalidArgument("unknown semiring: " + name);
}

int cmd_rank(const std::string& input, const std::string& semiring, bool witness, bool json,
             const SolverConfig& cfg) {
    BinaryMatrix a = read_matrix(input);
    RankResult result{0, std::nullopt};
    if (semiring == "real")
        result.rank = real_rank(a);
    else if (semiring == "binary")
        result = binary_rank(a, cfg);
    else if (semiring == "boolean")
        result = boolean_rank(a, cfg);
    else
        throw InvalidArgument("unknown semiring: " + semiring);

    if (json) {
        nlohmann::json j = result;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << result.rank << "\n";
    if (witness && result.witness) {
        for (const Rectangle& rect : result.witness->rectangles) {
            std::cout << "rows";
            for (int r : rect.rows) std::cout << ' ' << r;
            std::cout << " | cols";
            for (int c : rect.cols) std::cout << ' ' << c;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bases(const std::string& input, const std::string& semiring, const std::string& graph,
              const SolverConfig& cfg) {
    BinaryMatrix a = read_matrix(input);
    Semiring s = parse_semiring(semiring);
    if (graph.empty()) {
        for (const Base& base : enumerate_bases(a, s, cfg)) {
            for (std::size_t i = 0; i < base.vectors.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << base.vectors[i].to_string();
            }
            std::cout << "\n";
        }
        return 0;
    }
    BaseGraph g = base_graph(a, s, cfg);
    if (graph == "dot")
        std::cout << to_dot(g);
    else if (graph == "json")
        std::cout << nlohmann::json(g).dump() << "\n";
    else
        throw InvalidArgument("unknown graph format: " + graph);
    return 0;
}

int cmd_check(const std::string& input, const std::string& property, const std::string& semiring,
              bool json, const SolverConfig& cfg) {
    BinaryMatrix a = read_matrix(input);
    nlohmann::json j{{"property", property}};
    bool holds = false;

    if (property == "augmentation") {
        Semiring s = parse_semiring(semiring);
        AugmentationVerdict verdict = has_augmentation_property(a, s, cfg);
        holds = verdict.holds;
        j["semiring"] = to_string(s);
        j["holds"] = holds;
        if (verdict.spanning_base) j["spanning_base"] = *verdict.spanning_base;
        if (verdict.counterexample_sources) {
            j["sources"] = {verdict.counterexample_sources->first,
                            verdict.counterexample_sources->second};
        }
        if (!json) {
            if (holds) {
                std::cout << "augmentation property holds";
                if (verdict.spanning_base) {
                    std::cout << "; spanning base:";
                    for (const ColumnVector& v : verdict.spanning_base->vectors)
                        std::cout << ' ' << v.to_string();
                }
                std::cout << "\n";
            } else {
                std::cout << "augmentation property fails; two sources:\n";
                for (const Base& src : {verdict.counterexample_sources->first,
                                        verdict.counterexample_sources->second}) {
                    for (const ColumnVector& v : src.vectors) std::cout << ' ' << v.to_string();
                    std::cout << "\n";
                }
            }
        }
    } else if (property == "disjoint-base") {
        auto base = find_disjoint_in_rows_base(a, cfg);
        holds = base.has_value();
        j["holds"] = holds;
        if (base) j["base"] = *base;
        if (!json) {
            if (base) {
                std::cout << "disjoint-in-rows base:";
                for (const ColumnVector& v : base->vectors) std::cout << ' ' << v.to_string();
                std::cout << "\n";
            } else {
                std::cout << "no disjoint-in-rows base\n";
            }
        }
    } else if (property == "unique-sums") {
        UniqueSumsVerdict verdict = has_unique_base_rows_sums(a, cfg);
        holds = verdict.holds;
        j["holds"] = holds;
        if (verdict.counterexample) {
            j["violation"] = {{"U", verdict.counterexample->decomposition.u},
                              {"V", verdict.counterexample->decomposition.v},
                              {"plus_rows", verdict.counterexample->plus_rows},
                              {"minus_rows", verdict.counterexample->minus_rows}};
        }
        if (!json) {
            if (holds) {
                std::cout << "unique base row sums property holds\n";
            } else {
                std::cout << "unique base row sums property fails; V rows";
                for (int r : verdict.counterexample->plus_rows) std::cout << ' ' << r;
                std::cout << " and";
                for (int r : verdict.counterexample->minus_rows) std::cout << ' ' << r;
                std::cout << " have equal sums in\n"
                          << verdict.counterexample->decomposition.v.serialize();
            }
        }
    } else if (property == "rows-of-a") {
        auto dec = rows_of_A_decomposition(a, cfg);
        holds = dec.has_value();
        j["holds"] = holds;
        if (dec) j["decomposition"] = {{"U", dec->u}, {"V", dec->v}};
        if (!json) {
            if (dec)
                std::cout << "rows-of-matrix decomposition found; V =\n" << dec->v.serialize();
            else
                std::cout << "no rows-of-matrix decomposition\n";
        }
    } else {
        throw InvalidArgument("unknown property: " + property);
    }

    if (json) std::cout << j.dump() << "\n";
    return holds ? 0 : kExitProperty;
}

int cmd_construct(const std::string& name, std::size_t d, std::size_t k, const std::string& out,
                  const SolverConfig& cfg) {
    Fixture f = [&]() {
        if (name == "gap_binary") return build_gap_binary(d, cfg);
        if (name == "gap_boolean") return build_gap_boolean(d, cfg);
        if (name == "a_k") return build_Ak(k);
        return fixture(name);
    }();

    // the duplication family is usually wanted in its augmented form
    BinaryMatrix emitted = f.matrix;
    if (name == "a_k") {
        std::vector<ColumnVector> xs;
        for (const auto& [vec_name, v] : f.vectors) xs.push_back(v);
        emitted = augment(f.matrix, xs);
    }
    std::string text = emitted.serialize();
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out);
    if (!file) throw FormatError("cannot write " + out);
    file << text;
    std::ofstream sidecar(out + ".json");
    if (!sidecar) throw FormatError("cannot write " + out + ".json");
    sidecar << nlohmann::json(f).dump(2) << "\n";
    return 0;
}

struct VerifyContext {
    SolverConfig cfg;
    std::map<std::string, BinaryMatrix> overrides;
    int failures = 0;

    Fixture load(const std::string& name) {
        Fixture f = fixture(name);
        auto it = overrides.find(name);
        if (it != overrides.end()) f.matrix = it->second;
        return f;
    }

    void report(bool pass, const std::string& what) {
        std::cout << (pass ? "PASS  " : "FAIL  ") << what << "\n";
        if (!pass) ++failures;
    }

    void claim(const Fixture& f, const RankClaim& c) {
        ClaimOutcome outcome = check_claim(f, c, cfg);
        report(outcome.pass, outcome.detail);
    }
};

void verify_augmentation(VerifyContext& ctx) {
    for (const std::string& name : fixture_names()) {
        Fixture f = ctx.load(name);
        for (const RankClaim& c : f.claims) ctx.claim(f, c);
    }
    struct Case {
        const char* name;
        Semiring semiring;
    };
    for (const Case& tc : {Case{"sec2_example", Semiring::Binary},
                           Case{"boolean_example", Semiring::Binary},
                           Case{"boolean_example", Semiring::Boolean},
                           Case{"single_source", Semiring::Binary},
                           Case{"identical_rows", Semiring::Binary},
                           Case{"sums_inline", Semiring::Binary},
                           Case{"gap_boolean_base", Semiring::Boolean}}) {
        Fixture f = ctx.load(tc.name);
        auto rank_of = [&](const BinaryMatrix& m) {
            return tc.semiring == Semiring::Binary ? binary_rank(m, ctx.cfg).rank
                                                   : boolean_rank(m, ctx.cfg).rank;
        };
        std::string label = std::string(tc.name) + "/" + to_string(tc.semiring);
        AugmentationVerdict verdict = has_augmentation_property(f.matrix, tc.semiring, ctx.cfg);
        int before = rank_of(f.matrix);
        if (verdict.holds) {
            BaseGraph g = base_graph(f.matrix, tc.semiring, ctx.cfg);
            std::vector<ColumnVector> xs = sample_spanned_vectors(g, 4, 0xc0ffee);
            bool each_ok = true;
            for (const ColumnVector& x : xs) each_ok &= rank_of(augment(f.matrix, {x})) == before;
            int after = rank_of(augment(f.matrix, xs));
            ctx.report(each_ok && after == before,
                       label + ": single source, simultaneous augmentation keeps rank " +
                           std::to_string(before));
        } else {
            std::vector<ColumnVector> both;
            for (const ColumnVector& v : verdict.counterexample_sources->first.vectors)
                both.push_back(v);
            for (const ColumnVector& v : verdict.counterexample_sources->second.vectors)
                both.push_back(v);
            int after = rank_of(augment(f.matrix, both));
            ctx.report(after > before, label + ": two sources raise the rank " +
                                           std::to_string(before) + " -> " + std::to_string(after));
        }
    }
}

void verify_spanning_pipeline(VerifyContext& ctx) {
    Fixture single = ctx.load("single_source");
    RowsOfAVerdict sv = spanning_base_verdict(single.matrix, ctx.cfg);
    ctx.report(sv.applies && sv.confirmed == true,
               "single_source: rows-of-matrix decomposition with unique sums spans every base");

    Fixture inline_fix = ctx.load("sums_inline");
    RowsOfAVerdict iv = spanning_base_verdict(inline_fix.matrix, ctx.cfg);
    ctx.report(iv.applies && iv.confirmed == true,
               "sums_inline: rows-of-matrix decomposition with unique sums spans every base");

    Fixture ident = ctx.load("identical_rows");
    UniqueSumsVerdict us = has_unique_base_rows_sums(ident.matrix, ctx.cfg);
    ctx.report(!us.holds && !spanning_base_verdict(ident.matrix, ctx.cfg).applies,
               "identical_rows: unique sums fails, pipeline does not apply");

    Fixture boolean_fix = ctx.load("boolean_example");
    bool boolean_aug = has_augmentation_property(boolean_fix.matrix, Semiring::Boolean, ctx.cfg).holds;
    ctx.report(!boolean_aug,
               "boolean_example: boolean rank keeps two sources despite a disjoint base");
}

void verify_gap(VerifyContext& ctx, RankFn fn, std::size_t max_d) {
    for (std::size_t d = 1; d <= max_d; ++d) {
        Fixture f = fn == RankFn::Binary ? build_gap_binary(d, ctx.cfg)
                                         : build_gap_boolean(d, ctx.cfg);
        if (d <= 2) {
            for (const RankClaim& c : f.claims) ctx.claim(f, c);
        } else {
            // beyond d = 2 the combinatorial rank follows from block
            // additivity of the single-block value
            Fixture single = fn == RankFn::Binary ? build_gap_binary(1, ctx.cfg)
                                                  : build_gap_boolean(1, ctx.cfg);
            int block = fn == RankFn::Binary ? binary_rank(single.matrix, ctx.cfg).rank
                                             : boolean_rank(single.matrix, ctx.cfg).rank;
            int real = real_rank(f.matrix);
            ctx.report(block >= 4 && real == (int)(3 * d),
                       std::string(to_string(fn)) + " gap d=" + std::to_string(d) +
                           ": block value " + std::to_string(block) + " scales to " +
                           std::to_string((std::size_t)block * d) + ", real rank " +
                           std::to_string(real));
        }
    }
}

void verify_duplication(VerifyContext& ctx, RankFn fn, std::size_t max_k) {
    for (std::size_t k = 1; k <= max_k; ++k) {
        Fixture f = build_Ak(k);
        for (const RankClaim& c : f.claims)
            if (c.fn == fn) ctx.claim(f, c);
    }
}

int cmd_verify(const std::string& theorem, std::size_t max_d, std::size_t max_k,
               const std::vector<std::string>& overrides, const SolverConfig& cfg) {
    VerifyContext ctx;
    ctx.cfg = cfg;
    for (const std::string& entry : overrides) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("override must look like name=file");
        ctx.overrides.emplace(entry.substr(0, eq), read_matrix(entry.substr(eq + 1)));
    }

    auto selected = [&](const char* id) { return theorem == "all" || theorem == id; };
    if (selected("1")) verify_augmentation(ctx);
    if (selected("2")) verify_spanning_pipeline(ctx);
    if (selected("3")) verify_gap(ctx, RankFn::Binary, max_d);
    if (selected("4")) verify_gap(ctx, RankFn::Boolean, max_d);
    if (selected("5")) verify_duplication(ctx, RankFn::Binary, max_k);
    if (selected("5")) verify_duplication(ctx, RankFn::Real, max_k);
    if (selected("6")) verify_duplication(ctx, RankFn::Boolean, max_k);

    std::cout << (ctx.failures == 0 ? "all checks passed\n"
                                    : std::to_string(ctx.failures) + " checks failed\n");
    return ctx.failures == 0 ? 0 : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binary, boolean and real ranks of 0/1 matrices"};
    app.require_subcommand(1);

    SolverConfig cfg;
    if (const char* env = std::getenv("RANKFORGE_MAX_CELLS"))
        cfg.max_cells = std::strtoull(env, nullptr, 10);
    app.add_option("--max-cells", cfg.max_cells,
                   "solver cell cap (default 576; raising it can make runs very long)");
    app.add_option("--threads", cfg.threads, "worker threads (0 = auto, 1 = serial)");

    auto* rank_cmd = app.add_subcommand("rank", "exact rank of a matrix");
    std::string rank_input, rank_semiring = "binary";
    bool rank_witness = false, rank_json = false;
    rank_cmd->add_option("input", rank_input, "matrix file or -")->required();
    rank_cmd->add_option("--semiring", rank_semiring, "binary|boolean|real");
    rank_cmd->add_flag("--witness", rank_witness, "print the optimal partition or cover");
    rank_cmd->add_flag("--json", rank_json, "emit the result as json");

    auto* bases_cmd = app.add_subcommand("bases", "list bases or the base graph");
    std::string bases_input, bases_semiring = "binary", bases_graph;
    bases_cmd->add_option("input", bases_input, "matrix file or -")->required();
    bases_cmd->add_option("--semiring", bases_semiring, "binary|boolean");
    bases_cmd->add_option("--graph", bases_graph, "dot|json");

    auto* check_cmd = app.add_subcommand("check", "decide a structural property");
    std::string check_input, check_property, check_semiring = "binary";
    bool check_json = false;
    check_cmd->add_option("input", check_input, "matrix file or -")->required();
    check_cmd->add_option("--property", check_property,
                          "augmentation|disjoint-base|unique-sums|rows-of-a")
        ->required();
    check_cmd->add_option("--semiring", check_semiring, "binary|boolean");
    check_cmd->add_flag("--json", check_json, "emit the verdict as json");

    auto* construct_cmd = app.add_subcommand("construct", "emit a bundled matrix family");
    std::string construct_name, construct_out;
    std::size_t construct_d = 1, construct_k = 1;
    construct_cmd->add_option("name", construct_name, "fixture or family name")->required();
    construct_cmd->add_option("--d", construct_d, "diagonal copies for the gap families");
    construct_cmd->add_option("--k", construct_k, "duplicated rows for a_k");
    construct_cmd->add_option("--out", construct_out,
                              "write the matrix here plus an expected-ranks json sidecar");

    auto* verify_cmd = app.add_subcommand("verify", "re-derive the bundled rank identities");
    std::string verify_theorem = "all";
    std::size_t verify_max_d = 2, verify_max_k = 4;
    std::vector<std::string> verify_overrides;
    verify_cmd->add_option("--theorem", verify_theorem, "claim group 1-6 or all");
    verify_cmd->add_option("--max-d", verify_max_d, "largest diagonal count for gap families");
    verify_cmd->add_option("--max-k", verify_max_k, "largest k for the duplication family");
    verify_cmd->add_option("--override", verify_overrides,
                           "name=file: substitute a fixture matrix (harness testing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cfg.max_cells > 576)
        std::cerr << "warning: cell cap raised to " << cfg.max_cells
                  << "; exact search may take a very long time\n";

    try {
        if (rank_cmd->parsed())
            return cmd_rank(rank_input, rank_semiring, rank_witness, rank_json, cfg);
        if (bases_cmd->parsed()) return cmd_bases(bases_input, bases_semiring, bases_graph, cfg);
        if (check_cmd->parsed())
            return cmd_check(check_input, check_property, check_semiring, check_json, cfg);
        if (construct_cmd->parsed())
            return cmd_construct(construct_name, construct_d, construct_k, construct_out, cfg);
        if (verify_cmd->parsed())
            return cmd_verify(verify_theorem, verify_max_d, verify_max_k, verify_overrides, cfg);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBug;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

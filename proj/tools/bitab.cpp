// bitab: bitableau standardization, isomorphism and clique checks, and
// greedy-versus-oracle hunts.
//
// Exit codes: 0/1/2 carry verdicts (iso: isomorphic / not / inconclusive;
// clique: found / not found / inconclusive), 3 is a usage or parse error,
// 4 an oracle or enumeration cap refusal, 5 an internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bitab/bitableau.hpp"
#include "bitab/clique.hpp"
#include "bitab/golden.hpp"
#include "bitab/graph_io.hpp"
#include "bitab/hunt.hpp"
#include "bitab/oracle.hpp"
#include "bitab/standardize.hpp"

#ifndef BITAB_GOLDEN_DIR
#define BITAB_GOLDEN_DIR "tests/golden"
#endif

namespace {

constexpr int kExitUsage = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bitab::Graph load(const std::string& path, bitab::GraphFormat format) {
    try {
        return bitab::parse_graph(read_input(path), format);
    } catch (const bitab::ParseError& e) {
        throw bitab::ParseError(e.line(), path + ": " + e.what());
    }
}

void emit(const nlohmann::json& report, const std::string& output) {
    const std::string text = report.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw UsageError("cannot write " + output);
    out << text;
}

int cmd_canonize(const std::string& file, bitab::GraphFormat format, const std::string& method, bool trace) {
    const bitab::Graph g = load(file, format);
    if (method == "vab") {
        auto r = bitab::standardize_vab(g);
        std::cout << bitab::render(r.tableau) << "permutation: " << bitab::to_cycle_string(r.vertex_perm) << "\n";
        if (trace) std::cout << bitab::format_trace(r.trace);
        if (r.budget_excess() > 0)
            std::cerr << "note: " << r.steps << " transpositions exceed the budget of " << bitab::step_budget(g.order())
                      << "\n";
    } else if (method == "ib") {
        auto r = bitab::standardize_ib(bitab::label_edges(g));
        std::cout << bitab::render(r.tableau) << "permutation: " << bitab::to_cycle_string(r.vertex_perm) << "\n"
                  << "edge permutation: " << bitab::to_cycle_string(*r.edge_perm) << "\n";
        if (trace) std::cout << bitab::format_trace(r.trace);
    } else {
        auto c = bitab::canonical_form_exhaustive(g);
        std::cout << bitab::render(c.tableau) << "permutation: " << bitab::to_cycle_string(c.witness) << "\n";
    }
    return 0;
}

int cmd_iso(const std::string& a, const std::string& b, bitab::GraphFormat format, const std::string& method,
            bool early_exit) {
    const bitab::Graph g = load(a, format), h = load(b, format);
    bitab::IsoVerdict v;
    if (method == "vab") {
        v = bitab::iso_check_vab(g, h, early_exit);
    } else if (method == "ib") {
        v = bitab::iso_check_ib(bitab::label_edges(g), bitab::label_edges(h), early_exit);
    } else {
        auto w = bitab::iso_exhaustive(g, h);
        v = w ? bitab::IsoVerdict{bitab::IsoKind::Isomorphic, w, "exhaustive search"}
              : bitab::IsoVerdict{bitab::IsoKind::NotIsomorphic, std::nullopt, "exhaustive search"};
    }
    std::cout << bitab::to_string(v.kind) << " (" << v.reason << ")\n";
    if (v.witness) std::cout << "witness: " << bitab::to_cycle_string(*v.witness) << "\n";
    switch (v.kind) {
        case bitab::IsoKind::Isomorphic: return 0;
        case bitab::IsoKind::NotIsomorphic: return 1;
        case bitab::IsoKind::Inconclusive: return 2;
    }
    return kExitInternal;
}

int cmd_clique(const std::string& file, bitab::GraphFormat format, const std::string& method, int k) {
    const bitab::Graph g = load(file, format);
    if (k < 2 || k > g.order())
        throw UsageError("--k must satisfy 2 <= k <= p (p = " + std::to_string(g.order()) + ")");
    if (method == "oracle") {
        auto found = bitab::clique_exhaustive(g, k);
        if (!found) {
            std::cout << "not-found\n";
            return 1;
        }
        std::cout << "found\n" << bitab::format_witness(*found) << "\n";
        return 0;
    }
    auto v = bitab::find_k_clique(g, k);
    std::cout << bitab::to_string(v.kind) << "\n";
    if (v.kind == bitab::CliqueKind::Found) std::cout << bitab::format_witness(v.vertices) << "\n";
    return v.kind == bitab::CliqueKind::Found ? 0 : v.kind == bitab::CliqueKind::NotFound ? 1 : 2;
}

int cmd_selftest(const std::string& dir) {
    std::vector<bitab::GoldenOutcome> results;
    try {
        results = bitab::run_golden_dir(dir);
    } catch (const std::runtime_error& e) {
        std::cerr << "bitab: " << e.what() << "\n";
        return kExitUsage;
    }
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) std::cout << ": " << r.message, ++failed;
        std::cout << "\n";
    }
    std::cout << results.size() - failed << "/" << results.size() << " golden cases passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bitableau standardization for graph isomorphism and k-clique detection"};
    app.require_subcommand(1);

    const std::map<std::string, bitab::GraphFormat> formats{{"edgelist", bitab::GraphFormat::EdgeList},
                                                            {"graph6", bitab::GraphFormat::Graph6}};
    bitab::GraphFormat format = bitab::GraphFormat::EdgeList;
    std::string canonize_method, iso_method, clique_method, output, golden_dir = BITAB_GOLDEN_DIR, mode = "exhaustive";
    std::string file = "-", file2;
    bool trace = false, early_exit = false;
    int k = 0, max_p = 0;
    std::uint64_t seed = 0, count = 0;
    std::size_t max_listed = 50;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Input format")->transform(CLI::CheckedTransformer(formats));
    };

    auto* canonize = app.add_subcommand("canonize", "Print the standardized bitableau and its permutation");
    canonize->add_option("input", file, "Graph file, or - for stdin");
    add_format(canonize);
    canonize->add_option("--method", canonize_method, "vab | ib | oracle")
        ->default_val("vab")
        ->check(CLI::IsMember({"vab", "ib", "oracle"}));
    canonize->add_flag("--trace", trace, "Print the transposition trace");

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
    iso->add_option("first", file, "First graph file")->required();
    iso->add_option("second", file2, "Second graph file")->required();
    add_format(iso);
    iso->add_option("--method", iso_method, "vab | ib | oracle")
        ->default_val("vab")
        ->check(CLI::IsMember({"vab", "ib", "oracle"}));
    iso->add_flag("--early-exit", early_exit, "Stop as soon as the tableaux coincide");

    auto* clique = app.add_subcommand("clique", "Search for a k-clique");
    clique->add_option("input", file, "Graph file, or - for stdin");
    add_format(clique);
    clique->add_option("--k", k, "Clique size")->required();
    clique->add_option("--method", clique_method, "restricted | oracle")
        ->default_val("restricted")
        ->check(CLI::IsMember({"restricted", "oracle"}));

    auto* hunt_iso = app.add_subcommand("hunt-iso", "Compare greedy standard forms with the exhaustive oracle");
    hunt_iso->add_option("--max-p", max_p, "Vertex count")->required();
    hunt_iso->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
    auto* seed_opt = hunt_iso->add_option("--seed", seed, "Seed for random mode");
    hunt_iso->add_option("--count", count, "Number of random graphs");
    hunt_iso->add_option("--max-listed", max_listed, "Counterexamples listed per category");
    hunt_iso->add_option("--output", output, "Write the JSON report here instead of stdout");

    auto* hunt_clique = app.add_subcommand("hunt-clique", "Compare restricted standardization with subset search");
    hunt_clique->add_option("--max-p", max_p, "Vertex count")->required();
    hunt_clique->add_option("--k", k, "Clique size")->required();
    hunt_clique->add_option("--max-listed", max_listed, "Counterexamples listed");
    hunt_clique->add_option("--output", output, "Write the JSON report here instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "Replay the golden cases");
    selftest->add_option("--golden-dir", golden_dir, "Directory of golden JSON cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*canonize) return cmd_canonize(file, format, canonize_method, trace);
        if (*iso) return cmd_iso(file, file2, format, iso_method, early_exit);
        if (*clique) return cmd_clique(file, format, clique_method, k);
        if (*hunt_iso) {
            bitab::HuntIsoOptions opt;
            opt.max_p = max_p;
            opt.mode = mode == "random" ? bitab::HuntMode::Random : bitab::HuntMode::Exhaustive;
            opt.count = count;
            if (*seed_opt) opt.seed = seed;
            opt.max_listed = max_listed;
            emit(bitab::hunt_iso(opt), output);
            return 0;
        }
        if (*hunt_clique) {
            bitab::HuntCliqueOptions opt;
            opt.max_p = max_p;
            opt.k = k;
            opt.max_listed = max_listed;
            emit(bitab::hunt_clique(opt), output);
            return 0;
        }
        if (*selftest) return cmd_selftest(golden_dir);
    } catch (const bitab::CapExceeded& e) {
        std::cerr << "bitab: refused: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "bitab: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "bitab: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "bitab: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

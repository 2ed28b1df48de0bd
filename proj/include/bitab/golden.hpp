#pragma once

/// \file golden.hpp
/// \brief Replays golden cases stored as JSON files (one case per file).
///
/// Every case has "name", "kind" and "graph" (edge-list text). Kinds:
///   standardize_vab    expected: tableau rows ("j | a b c")
///   act_vab            transposition: [i, j]; expected: tableau rows
///   oracle_canonical   expected: tableau rows
///   iso                other: edge-list text; method: vab|ib|oracle; expected: verdict
///   clique             k; method: restricted|oracle; expected: {verdict, witness}
///   automorphism_count expected: integer
///   below_maximum      tableau: rows that must encode `graph` under some labeling
///                      yet have a key strictly below the oracle maximum

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bitab/bitableau.hpp"
#include "bitab/clique.hpp"
#include "bitab/graph_io.hpp"
#include "bitab/oracle.hpp"
#include "bitab/standardize.hpp"

namespace bitab {

struct GoldenOutcome {
    std::string name;
    bool passed = false;
    std::string message;
};

namespace detail {

inline std::vector<std::string> rendered_rows(const std::string& rendered) {
    std::vector<std::string> rows;
    std::istringstream in(rendered);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

inline Vab vab_from_rendered(const nlohmann::json& rows) {
    Vab t;
    for (const auto& line : rows) {
        const std::string s = line.get<std::string>();
        const auto bar = s.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("tableau row without '|': " + s);
        Row r;
        std::istringstream in(s.substr(bar + 1));
        for (int x; in >> x;) r.push_back(x);
        std::sort(r.begin(), r.end());
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline std::string expect_rows(const std::string& actual, const nlohmann::json& expected) {
    auto got = rendered_rows(actual);
    auto want = expected.get<std::vector<std::string>>();
    if (got == want) return {};
    std::string msg = "tableau mismatch; got:";
    for (const auto& r : got) msg += " [" + r + "]";
    return msg;
}

inline std::string run_case(const nlohmann::json& c) {
    const std::string kind = c.at("kind").get<std::string>();
    const Graph g = parse_edge_list(c.at("graph").get<std::string>());

    if (kind == "standardize_vab") return expect_rows(render(standardize_vab(g).tableau), c.at("expected"));
    if (kind == "act_vab") {
        auto tr = c.at("transposition").get<std::vector<int>>();
        if (tr.size() != 2) throw std::invalid_argument("transposition must have two entries");
        return expect_rows(render(act_vab(build_vab(g), tr[0], tr[1])), c.at("expected"));
    }
    if (kind == "oracle_canonical") return expect_rows(render(canonical_form_exhaustive(g).tableau), c.at("expected"));
    if (kind == "automorphism_count") {
        const auto got = automorphism_count(g);
        const auto want = c.at("expected").get<std::uint64_t>();
        return got == want ? "" : "automorphism count " + std::to_string(got) + ", expected " + std::to_string(want);
    }
    if (kind == "iso") {
        const Graph h = parse_edge_list(c.at("other").get<std::string>());
        const std::string method = c.at("method").get<std::string>();
        std::string verdict;
        if (method == "oracle") verdict = iso_exhaustive(g, h) ? "isomorphic" : "not-isomorphic";
        else if (method == "vab") verdict = to_string(iso_check_vab(g, h).kind);
        else if (method == "ib") verdict = to_string(iso_check_ib(label_edges(g), label_edges(h)).kind);
        else throw std::invalid_argument("unknown iso method '" + method + "'");
        const auto want = c.at("expected").get<std::string>();
        return verdict == want ? "" : "verdict " + verdict + ", expected " + want;
    }
    if (kind == "clique") {
        const int k = c.at("k").get<int>();
        const std::string method = c.at("method").get<std::string>();
        std::string verdict, witness;
        if (method == "oracle") {
            auto found = clique_exhaustive(g, k);
            verdict = found ? "found" : "not-found";
            if (found) witness = format_witness(*found);
        } else if (method == "restricted") {
            auto v = find_k_clique(g, k);
            verdict = to_string(v.kind);
            witness = format_witness(v.vertices);
        } else {
            throw std::invalid_argument("unknown clique method '" + method + "'");
        }
        const auto& want = c.at("expected");
        if (verdict != want.at("verdict").get<std::string>()) return "verdict " + verdict;
        if (want.contains("witness") && witness != want.at("witness").get<std::string>())
            return "witness \"" + witness + "\"";
        return {};
    }
    if (kind == "below_maximum") {
        const Vab printed = vab_from_rendered(c.at("tableau"));
        if (!iso_exhaustive(g, graph_of(printed))) return "printed tableau does not encode the graph";
        const auto oracle = canonical_form_exhaustive(g);
        if (compare_keys(order_key_vab(printed), oracle.key) >= 0) return "printed tableau reaches the maximum key";
        return {};
    }
    throw std::invalid_argument("unknown golden kind '" + kind + "'");
}

}  // namespace detail

/// Runs one golden file. Unreadable or malformed files fail by name.
inline GoldenOutcome run_golden_file(const std::filesystem::path& path) {
    GoldenOutcome out{path.stem().string(), false, {}};
    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open file");
        const nlohmann::json c = nlohmann::json::parse(in);
        out.name = c.value("name", out.name);
        out.message = detail::run_case(c);
        out.passed = out.message.empty();
    } catch (const std::exception& e) {
        out.message = std::string("malformed golden case: ") + e.what();
    }
    return out;
}

/// All *.json files under `dir`, in filename order. Throws std::runtime_error
/// when the directory is missing or holds no cases.
inline std::vector<GoldenOutcome> run_golden_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error("golden directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    if (files.empty()) throw std::runtime_error("no golden cases in " + dir.string());
    std::sort(files.begin(), files.end());
    std::vector<GoldenOutcome> out;
    for (const auto& f : files) out.push_back(run_golden_file(f));
    return out;
}

}  // namespace bitab

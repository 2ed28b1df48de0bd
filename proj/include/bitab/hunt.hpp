#pragma once

/// \file hunt.hpp
/// \brief Greedy-versus-oracle counterexample hunts and their JSON reports.
///
/// Report layout (schema_version 1):
///
///   { "header": { "generated_at", "tool", "prng" },   // excluded from determinism
///     "body":   { "schema_version", "scope", "totals", "categories",
///                 "counterexamples", "counterexamples_listed",
///                 "counterexamples_total", "step_stats" } }
///
/// Objects serialize with sorted keys; lists are sorted by graph6 string, so
/// identical arguments give byte-identical bodies.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "bitab/bitableau.hpp"
#include "bitab/clique.hpp"
#include "bitab/graph.hpp"
#include "bitab/graph_io.hpp"
#include "bitab/oracle.hpp"
#include "bitab/standardize.hpp"

namespace bitab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kExhaustiveIsoMaxP = 6;
inline constexpr int kCliqueHuntMaxP = 7;
inline constexpr const char* kPrngDescription =
    "std::mt19937_64; edge bits are the low p(p-1)/2 bits of one raw draw; relabelings by "
    "Fisher-Yates using (raw draw mod (i+1))";

enum class HuntMode { Exhaustive, Random };

struct HuntIsoOptions {
    int max_p = 4;
    HuntMode mode = HuntMode::Exhaustive;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> seed;
    std::size_t max_listed = 50;  // per counterexample category
    OracleLimits limits{};
};

struct HuntCliqueOptions {
    int max_p = 4;
    int k = 3;
    std::size_t max_listed = 50;
    OracleLimits limits{};
};

/// Distribution of transposition counts against step_budget(p).
class StepStats {
public:
    explicit StepStats(int p) : budget_(step_budget(p)) {}

    void add(int steps, int degree_sort_steps) {
        ++histogram_[steps];
        ++runs_;
        over_ += steps > budget_;
        degree_sort_max_ = std::max(degree_sort_max_, degree_sort_steps);
    }

    std::uint64_t runs() const { return runs_; }
    std::uint64_t over_budget() const { return over_; }

    nlohmann::json to_json() const {
        nlohmann::json hist = nlohmann::json::array();
        int max_steps = 0;
        for (auto [steps, n] : histogram_) {
            hist.push_back({{"steps", steps}, {"runs", n}});
            max_steps = std::max(max_steps, steps);
        }
        return {{"budget", budget_},
                {"runs", runs_},
                {"over_budget", over_},
                {"over_budget_fraction", runs_ ? static_cast<double>(over_) / static_cast<double>(runs_) : 0.0},
                {"max_steps", max_steps},
                {"max_degree_sort_steps", degree_sort_max_},
                {"histogram", hist}};
    }

private:
    int budget_;
    std::map<int, std::uint64_t> histogram_;
    std::uint64_t runs_ = 0;
    std::uint64_t over_ = 0;
    int degree_sort_max_ = 0;
};

namespace detail {

inline std::uint64_t pairs(std::uint64_t n) { return n * (n - 1) / 2; }

template <class Map>
std::uint64_t pair_sum(const Map& groups) {
    std::uint64_t s = 0;
    for (const auto& kv : groups) s += pairs(kv.second);
    return s;
}

inline nlohmann::json rows_json(const std::string& rendered) {
    nlohmann::json out = nlohmann::json::array();
    std::size_t start = 0;
    while (start < rendered.size()) {
        auto nl = rendered.find('\n', start);
        out.push_back(rendered.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

inline nlohmann::json trace_json(const Trace& trace) { return rows_json(format_trace(trace)); }

/// Sorts by graph6 (then by the whole entry) and keeps the first `limit`.
inline nlohmann::json finalize_list(std::vector<nlohmann::json> items, std::size_t limit) {
    std::sort(items.begin(), items.end(), [](const nlohmann::json& a, const nlohmann::json& b) {
        return std::tie(a.at("graph6"), a) < std::tie(b.at("graph6"), b);
    });
    if (items.size() > limit) items.resize(limit);
    return nlohmann::json(items);
}

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline nlohmann::json header() {
    return {{"generated_at", utc_timestamp()}, {"tool", "bitab"}, {"prng", kPrngDescription}};
}

inline Permutation random_permutation(int p, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(p));
    std::iota(images.begin(), images.end(), 1);
    for (int i = p - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(images[static_cast<std::size_t>(i)], images[j]);
    }
    return Permutation(std::move(images));
}

}  // namespace detail

/// Compares greedy VAB standardization with the exhaustive canonical form.
///
/// Per graph: agreement when the greedy tableau equals the oracle maximum,
/// otherwise a greedy stall. Per pair, with pair totals computed from group
/// sizes rather than by enumerating pairs:
///   unsound_isomorphic_pairs        equal greedy forms, oracle says non-isomorphic (must be 0)
///   isomorphic_pairs_unequal_forms  oracle-isomorphic, greedy forms differ
///   inconclusive pairs              same certified invariants, greedy forms differ;
///                                   resolved by the oracle into the two counts below
inline nlohmann::json hunt_iso(const HuntIsoOptions& opt) {
    if (opt.max_p < 0) throw std::invalid_argument("hunt-iso: max_p must be non-negative");
    if (opt.mode == HuntMode::Exhaustive && opt.max_p > kExhaustiveIsoMaxP)
        throw CapExceeded("hunt-iso: exhaustive mode is capped at max_p = " + std::to_string(kExhaustiveIsoMaxP));
    if (opt.mode == HuntMode::Random) {
        if (!opt.seed) throw std::invalid_argument("hunt-iso: random mode requires --seed");
        if (opt.count == 0) throw std::invalid_argument("hunt-iso: random mode requires --count > 0");
        if (opt.max_p > opt.limits.max_vertices || pair_count(opt.max_p) >= 64)
            throw CapExceeded("hunt-iso: p = " + std::to_string(opt.max_p) + " exceeds the oracle cap of " +
                              std::to_string(opt.limits.max_vertices));
    }
    const int p = opt.max_p;

    StepStats stats(p);
    std::uint64_t examined = 0, agreements = 0, stalls = 0;
    std::vector<nlohmann::json> stall_items, pair_items;

    std::map<std::vector<int>, std::uint64_t> by_cert;
    std::map<std::uint64_t, std::uint64_t> by_greedy, by_oracle;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> by_both;
    // first graph seen for each (oracle class, greedy form), to exhibit unequal-form pairs
    std::map<std::uint64_t, std::map<std::uint64_t, Graph>> representatives;

    auto cert_of = [](const Graph& g) {
        auto d = degree_sequence(g);
        std::sort(d.rbegin(), d.rend());
        return d;
    };

    auto record = [&](const Graph& g, const StandardizationResult<Vab>& greedy, const CanonicalForm* oracle,
                      std::uint64_t oracle_code) {
        stats.add(greedy.steps, greedy.degree_sort_steps);
        const std::uint64_t gcode = graph_code(graph_of(greedy.tableau));
        ++by_cert[cert_of(g)];
        ++by_greedy[gcode];
        ++by_oracle[oracle_code];
        ++by_both[{gcode, oracle_code}];
        representatives[oracle_code].try_emplace(gcode, g);
        if (!oracle) return;
        ++examined;
        if (greedy.tableau == oracle->tableau) {
            ++agreements;
            return;
        }
        ++stalls;
        stall_items.push_back({{"kind", "greedy-stall"},
                               {"graph6", to_graph6(g)},
                               {"greedy_verdict", "local maximum below the oracle maximum"},
                               {"oracle_verdict", "maximum [m,n]-order form differs"},
                               {"greedy_tableau", detail::rows_json(render(greedy.tableau))},
                               {"oracle_tableau", detail::rows_json(render(oracle->tableau))},
                               {"trace", detail::trace_json(greedy.trace)},
                               {"reproduce", "bitab canonize --format graph6 --method vab --trace"}});
    };

    std::uint64_t relabeled_pairs = 0, relabeled_unequal = 0;
    if (opt.mode == HuntMode::Exhaustive) {
        for (const Graph& g : enumerate_labeled_graphs(p, kExhaustiveIsoMaxP)) {
            auto greedy = standardize_vab(g);
            auto oracle = canonical_form_exhaustive(g, opt.limits);
            record(g, greedy, &oracle, graph_code(graph_of(oracle.tableau)));
        }
    } else {
        std::mt19937_64 rng(*opt.seed);
        const int bits = pair_count(p);
        const std::uint64_t mask = bits == 0 ? 0 : (bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1);
        for (std::uint64_t s = 0; s < opt.count; ++s) {
            const Graph g = graph_from_code(p, rng() & mask);
            const Graph h = relabel(g, detail::random_permutation(p, rng));
            auto oracle = canonical_form_exhaustive(g, opt.limits);
            const std::uint64_t ocode = graph_code(graph_of(oracle.tableau));
            auto greedy_g = standardize_vab(g);
            auto greedy_h = standardize_vab(h);
            record(g, greedy_g, &oracle, ocode);
            record(h, greedy_h, nullptr, ocode);
            ++relabeled_pairs;
            if (greedy_g.tableau != greedy_h.tableau) ++relabeled_unequal;
        }
    }

    const std::uint64_t n_runs = stats.runs();
    const std::uint64_t total_pairs = detail::pairs(n_runs);
    const std::uint64_t uncertified_pairs = detail::pair_sum(by_cert);
    const std::uint64_t equal_greedy_pairs = detail::pair_sum(by_greedy);
    const std::uint64_t iso_pairs = detail::pair_sum(by_oracle);
    const std::uint64_t both_pairs = detail::pair_sum(by_both);
    const std::uint64_t unsound = equal_greedy_pairs - both_pairs;
    const std::uint64_t iso_unequal = iso_pairs - both_pairs;
    const std::uint64_t inconclusive = uncertified_pairs - equal_greedy_pairs;
    if (unsound != 0) throw std::logic_error("internal error: equal greedy forms for non-isomorphic graphs");

    for (const auto& [ocode, forms] : representatives) {
        if (forms.size() < 2) continue;
        auto first = forms.begin();
        for (auto it = std::next(first); it != forms.end(); ++it)
            pair_items.push_back({{"kind", "isomorphic-pair-unequal-forms"},
                                  {"graph6", to_graph6(first->second)},
                                  {"graph6_other", to_graph6(it->second)},
                                  {"greedy_verdict", to_string(IsoKind::Inconclusive)},
                                  {"oracle_verdict", to_string(IsoKind::Isomorphic)},
                                  {"trace", detail::trace_json(standardize_vab(first->second).trace)},
                                  {"trace_other", detail::trace_json(standardize_vab(it->second).trace)},
                                  {"reproduce", "bitab iso --format graph6 --method vab"}});
    }

    const std::size_t stall_total = stall_items.size(), pair_total = pair_items.size();
    nlohmann::json listed = nlohmann::json::array();
    for (auto& item : detail::finalize_list(std::move(stall_items), opt.max_listed)) listed.push_back(item);
    for (auto& item : detail::finalize_list(std::move(pair_items), opt.max_listed)) listed.push_back(item);

    nlohmann::json scope = {{"kind", "iso"},
                            {"method", "vab"},
                            {"max_p", p},
                            {"mode", opt.mode == HuntMode::Exhaustive ? "exhaustive" : "random"}};
    if (opt.mode == HuntMode::Random) {
        scope["seed"] = *opt.seed;
        scope["count"] = opt.count;
    }
    nlohmann::json categories = {
        {"greedy_stalls", stalls},
        {"unsound_isomorphic_pairs", unsound},
        {"isomorphic_pairs_unequal_forms", iso_unequal},
        {"isomorphic_pairs", iso_pairs},
        {"pairs_examined", total_pairs},
        {"certified_nonisomorphic_pairs", total_pairs - uncertified_pairs},
        {"inconclusive_pairs", inconclusive},
        {"inconclusive_resolved_isomorphic", iso_unequal},
        {"inconclusive_resolved_nonisomorphic", inconclusive - iso_unequal},
        {"isomorphism_classes", by_oracle.size()},
        {"distinct_greedy_forms", by_greedy.size()},
    };
    if (opt.mode == HuntMode::Random) {
        categories["relabeled_pairs"] = relabeled_pairs;
        categories["relabeled_pairs_unequal_forms"] = relabeled_unequal;
    }
    nlohmann::json body = {
        {"schema_version", kReportSchemaVersion},
        {"scope", scope},
        {"totals",
         {{"graphs_examined", examined},
          {"agreements", agreements},
          {"disagreements", stalls},
          {"inconclusive_resolved", inconclusive}}},
        {"categories", categories},
        {"counterexamples", listed},
        {"counterexamples_listed", listed.size()},
        {"counterexamples_total", stall_total + pair_total},
        {"step_stats", stats.to_json()},
    };
    return {{"header", detail::header()}, {"body", body}};
}

/// Compares find_k_clique against clique_exhaustive on every labeled graph
/// with max_p vertices.
///   agreements             Found/some, NotFound/none
///   inconclusive_resolved  greedy Inconclusive, oracle none
///   disagreements          greedy did not find a clique the oracle found
inline nlohmann::json hunt_clique(const HuntCliqueOptions& opt) {
    if (opt.k < 2) throw std::invalid_argument("hunt-clique: k must be at least 2");
    if (opt.k > opt.max_p)
        throw std::invalid_argument("hunt-clique: k = " + std::to_string(opt.k) + " exceeds max_p = " +
                                    std::to_string(opt.max_p));
    if (opt.max_p > kCliqueHuntMaxP)
        throw CapExceeded("hunt-clique: max_p is capped at " + std::to_string(kCliqueHuntMaxP));
    const int p = opt.max_p;

    StepStats stats(p);
    std::uint64_t examined = 0, agree_found = 0, agree_none = 0, resolved = 0, missed = 0, unsound_not_found = 0,
                  oracle_found = 0, filtered = 0;
    std::vector<nlohmann::json> items;
    for (const Graph& g : enumerate_labeled_graphs(p, kCliqueHuntMaxP)) {
        ++examined;
        const CliqueVerdict greedy = find_k_clique(g, opt.k);
        const auto oracle = clique_exhaustive(g, opt.k, opt.limits);
        stats.add(greedy.run.steps, 0);
        filtered += greedy.run.degree_filtered;
        oracle_found += oracle.has_value();
        if (greedy.kind == CliqueKind::Found) {
            if (!oracle) throw std::logic_error("internal error: verified clique contradicts the oracle");
            ++agree_found;
            continue;
        }
        if (!oracle) {
            if (greedy.kind == CliqueKind::NotFound) ++agree_none;
            else ++resolved;
            continue;
        }
        if (greedy.kind == CliqueKind::NotFound) ++unsound_not_found;
        else ++missed;
        items.push_back({{"kind", greedy.kind == CliqueKind::NotFound ? "unsound-not-found" : "clique-missed"},
                         {"graph6", to_graph6(g)},
                         {"greedy_verdict", to_string(greedy.kind)},
                         {"oracle_verdict", std::string("found ") + format_witness(*oracle)},
                         {"greedy_tableau", detail::rows_json(render(greedy.run.tableau.vab))},
                         {"trace", detail::trace_json(greedy.run.trace)},
                         {"reproduce", "bitab clique --format graph6 --method restricted --k " + std::to_string(opt.k)}});
    }
    const std::size_t total_items = items.size();
    nlohmann::json listed = detail::finalize_list(std::move(items), opt.max_listed);
    nlohmann::json body = {
        {"schema_version", kReportSchemaVersion},
        {"scope", {{"kind", "clique"}, {"method", "restricted"}, {"max_p", p}, {"k", opt.k}, {"mode", "exhaustive"}}},
        {"totals",
         {{"graphs_examined", examined},
          {"agreements", agree_found + agree_none},
          {"disagreements", missed + unsound_not_found},
          {"inconclusive_resolved", resolved}}},
        {"categories",
         {{"oracle_found", oracle_found},
          {"greedy_found", agree_found},
          {"greedy_missed", missed},
          {"unsound_found", 0},
          {"unsound_not_found", unsound_not_found},
          {"degree_filter_not_found", filtered},
          {"certified_not_found_agreements", agree_none}}},
        {"counterexamples", listed},
        {"counterexamples_listed", listed.size()},
        {"counterexamples_total", total_items},
        {"step_stats", stats.to_json()},
    };
    return {{"header", detail::header()}, {"body", body}};
}

}  // namespace bitab

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "bitab/bitableau.hpp"
#include "bitab/clique.hpp"
#include "bitab/graph_io.hpp"
#include "bitab/hunt.hpp"
#include "bitab/oracle.hpp"
#include "bitab/standardize.hpp"

using namespace bitab;

namespace {

using Rows = std::vector<std::vector<int>>;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

Graph data_graph(const std::string& name) {
    std::ifstream in(std::string(BITAB_DATA_DIR) + "/" + name);
    return parse_edge_list(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

std::string rows_text(const Rows& rows) {
    std::string s;
    for (const auto& r : rows) {
        s += '[';
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
        s += ']';
    }
    return s;
}

std::uint64_t u64(const nlohmann::json& j, const char* a, const char* b) { return j.at(a).at(b).get<std::uint64_t>(); }

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    if (!o.passed) ++failures;
    std::printf("%s %2d %-28s %8.3f s  %s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const Rows std1 = {{2, 3, 4}, {1, 5}, {1, 6}, {1, 7}, {2}, {3}, {4}};
    const Rows std2 = {{2, 3, 4}, {1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {2, 3, 8}, {2, 4, 8}, {3, 4, 8}, {5, 6, 7}};
    const Rows printed_f = {{2, 3, 4}, {1, 5, 6}, {1, 7, 8}, {1, 6, 7}, {2, 7, 8}, {2, 4, 8}, {3, 4, 5}, {3, 5, 6}};

    criterion(1, "example1-golden", 1.0, [&] {
        Outcome o;
        const Graph g = data_graph("example1_tree.txt");
        const auto greedy = standardize_vab(g).tableau.rows;
        o.require(greedy == std1, "greedy " + rows_text(greedy));
        const auto oracle = canonical_form_exhaustive(g).tableau.rows;
        o.require(oracle == std1, "oracle " + rows_text(oracle));
        return o;
    });

    criterion(2, "example1-intermediate", 0, [&] {
        Outcome o;
        const Vab t = act_vab(build_vab(data_graph("example1_tree.txt")), 1, 2);
        const Rows want = {{4, 6, 7}, {7}, {6}, {1, 5}, {4}, {1, 3}, {1, 2}};
        o.require(t.rows == want, "got " + rows_text(t.rows));
        return o;
    });

    criterion(3, "example2-golden", 5.0, [&] {
        Outcome o;
        const Graph g = data_graph("example2_G.txt"), h = data_graph("example2_H.txt"),
                    f = data_graph("example2_F.txt");
        const auto sg = standardize_vab(g), sh = standardize_vab(h), sf = standardize_vab(f);
        o.require(sg.tableau.rows == std2, "Std(G) " + rows_text(sg.tableau.rows));
        o.require(sh.tableau.rows == std2, "Std(H) " + rows_text(sh.tableau.rows));
        o.require(sf.tableau.rows == printed_f, "Std(F) " + rows_text(sf.tableau.rows) + " differs from the expected " +
                                                    rows_text(printed_f));
        const auto gh = iso_check_vab(g, h);
        o.require(gh.kind == IsoKind::Isomorphic && gh.witness && relabel(g, *gh.witness) == h,
                  "G vs H " + std::string(to_string(gh.kind)));
        const bool gf_iso = iso_exhaustive(g, f).has_value();
        o.require(!gf_iso, "oracle finds G isomorphic to F");
        const auto cg = canonical_form_exhaustive(g), cf = canonical_form_exhaustive(f);
        o.require(cg.tableau != cf.tableau, "oracle forms of G and F coincide");
        return o;
    });

    criterion(4, "example3-golden", 0, [&] {
        Outcome o;
        const auto v = find_k_clique(data_graph("example3.txt"), 3);
        o.require(v.kind == CliqueKind::Found, std::string("verdict ") + to_string(v.kind));
        o.require(v.vertices == std::vector<int>{2, 3, 4}, "witness " + format_witness(v.vertices));
        o.require(leading_clique_check(v.run.tableau), "leading block check fails");
        return o;
    });

    criterion(5, "oracle-completeness-p4", 30.0, [&] {
        Outcome o;
        std::vector<Graph> all;
        std::vector<OrderKey> keys;
        for (const Graph& g : enumerate_labeled_graphs(4)) {
            all.push_back(g);
            keys.push_back(canonical_form_exhaustive(g).key);
        }
        std::size_t pairs = 0, bad = 0;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b, ++pairs)
                bad += (compare_keys(keys[a], keys[b]) == 0) != iso_exhaustive(all[a], all[b]).has_value();
        o.require(pairs == 2016, std::to_string(pairs) + " pairs");
        o.require(bad == 0, std::to_string(bad) + " pairs disagree");
        o.detail = o.passed ? "2016 pairs" : o.detail;
        return o;
    });

    criterion(6, "orbit-counting-p5", 0, [&] {
        Outcome o;
        std::uint64_t fact = 1, checked = 0;
        for (int p = 0; p <= 5; ++p) {
            if (p > 0) fact *= static_cast<std::uint64_t>(p);
            for (const Graph& g : enumerate_labeled_graphs(p)) {
                ++checked;
                if (distinct_labeled_copies(g) * automorphism_count(g) != fact)
                    o.require(false, "fails on " + to_graph6(g));
            }
        }
        if (o.passed) o.detail = std::to_string(checked) + " graphs";
        return o;
    });

    criterion(7, "commutation-p5", 0, [&] {
        Outcome o;
        std::uint64_t checked = 0;
        for (int p = 2; p <= 5; ++p)
            for (const Graph& g : enumerate_labeled_graphs(p)) {
                const Vab t = build_vab(g);
                for (int i = 1; i <= p; ++i)
                    for (int j = i + 1; j <= p; ++j, ++checked)
                        if (build_vab(relabel(g, Permutation::transposition(p, i, j))) != act_vab(t, i, j))
                            o.require(false, "fails on " + to_graph6(g));
            }
        if (o.passed) o.detail = std::to_string(checked) + " graph-transposition pairs";
        return o;
    });

    nlohmann::json iso6;
    criterion(8, "hunt-iso-p6", 600.0, [&] {
        Outcome o;
        HuntIsoOptions opt;
        opt.max_p = 6;
        iso6 = hunt_iso(opt);
        const auto& b = iso6.at("body");
        o.require(u64(b, "categories", "unsound_isomorphic_pairs") == 0, "unsound isomorphic verdicts");
        o.detail = "graphs " + std::to_string(u64(b, "totals", "graphs_examined")) + ", greedy stalls " +
                   std::to_string(u64(b, "categories", "greedy_stalls")) + ", isomorphic pairs with unequal forms " +
                   std::to_string(u64(b, "categories", "isomorphic_pairs_unequal_forms")) + ", unsound 0";
        return o;
    });

    nlohmann::json clique3, clique4;
    criterion(9, "hunt-clique-p6", 600.0, [&] {
        Outcome o;
        HuntCliqueOptions opt;
        opt.max_p = 6;
        opt.k = 3;
        clique3 = hunt_clique(opt);
        opt.k = 4;
        clique4 = hunt_clique(opt);
        std::string d;
        for (const auto* r : {&clique3, &clique4}) {
            const auto& b = r->at("body");
            o.require(u64(b, "categories", "unsound_found") == 0 && u64(b, "categories", "unsound_not_found") == 0,
                      "unsound clique verdicts");
            d += "k=" + std::to_string(b.at("scope").at("k").get<int>()) + ": oracle found " +
                 std::to_string(u64(b, "categories", "oracle_found")) + ", greedy missed " +
                 std::to_string(u64(b, "categories", "greedy_missed")) + "; ";
        }
        if (o.passed) o.detail = d + "unsound 0";
        return o;
    });

    criterion(10, "step-budget-p6", 0, [&] {
        Outcome o;
        std::uint64_t runs = 0, over = 0;
        for (int p = 1; p <= 6; ++p)
            for (const Graph& g : enumerate_labeled_graphs(p)) {
                ++runs;
                over += standardize_vab(g).steps > step_budget(p);
            }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%llu of %llu runs over budget (fraction %.6f)",
                      static_cast<unsigned long long>(over), static_cast<unsigned long long>(runs),
                      runs ? static_cast<double>(over) / static_cast<double>(runs) : 0.0);
        o.detail = buf;
        return o;
    });

    criterion(11, "determinism", 0, [&] {
        Outcome o;
        HuntIsoOptions iso;
        iso.max_p = 6;
        o.require(hunt_iso(iso).at("body").dump() == iso6.at("body").dump(), "hunt-iso p=6 bodies differ");
        HuntCliqueOptions cl;
        cl.max_p = 6;
        cl.k = 3;
        o.require(hunt_clique(cl).at("body").dump() == clique3.at("body").dump(), "hunt-clique bodies differ");
        HuntIsoOptions rnd;
        rnd.max_p = 7;
        rnd.mode = HuntMode::Random;
        rnd.count = 500;
        rnd.seed = 42;
        o.require(hunt_iso(rnd).at("body").dump() == hunt_iso(rnd).at("body").dump(), "random hunt bodies differ");
        return o;
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#pragma once

/// \file oracle.hpp
/// \brief Exhaustive reference algorithms: maximum [m,n]-order over all p!
/// relabelings, isomorphism and automorphism search, labeled-copy counting
/// and k-subset clique search. Deliberately naive; they refuse inputs above
/// their caps instead of approximating.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bitab/bitableau.hpp"
#include "bitab/errors.hpp"
#include "bitab/graph.hpp"
#include "bitab/permutation.hpp"

namespace bitab {

struct OracleLimits {
    int max_vertices = 8;                     // p! relabelings
    std::uint64_t max_subsets = 50'000'000;  // C(p, k) for clique search
};

/// The maximum-key labeled copy; the witness is the lexicographically
/// smallest permutation attaining it.
struct CanonicalForm {
    Vab tableau;
    OrderKey key;
    Permutation witness;
};

namespace detail {

inline void check_vertex_cap(const Graph& g, const OracleLimits& limits, const char* what) {
    if (g.order() > limits.max_vertices)
        throw CapExceeded(std::string(what) + ": p = " + std::to_string(g.order()) + " exceeds the oracle cap of " +
                          std::to_string(limits.max_vertices) + " vertices");
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// The rank-th permutation of 1..p in lexicographic order.
inline std::vector<int> unrank_permutation(int p, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(p));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = p; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

/// Writes order_key_vab(build_vab(relabel(g, sigma))) into `out` without
/// materializing the relabeled graph. `images[v-1]` is sigma(v).
class RelabeledKey {
public:
    explicit RelabeledKey(const Graph& g) : g_(g), p_(g.order()) {
        inverse_.resize(static_cast<std::size_t>(p_));
        hist_.resize(static_cast<std::size_t>(p_) + 1);
    }

    void compute(std::span<const int> images, std::vector<int>& out) {
        out.assign(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_), 0);
        for (int v = 1; v <= p_; ++v) inverse_[images[v - 1] - 1] = v;
        std::fill(hist_.begin(), hist_.end(), 0);
        for (int n = 1; n <= p_; ++n) {
            for (int u : g_.neighbors(inverse_[n - 1])) ++hist_[images[u - 1]];
            int running = 0;
            for (int m = 1; m <= p_; ++m) {
                running += hist_[m];
                out[static_cast<std::size_t>((n - 1) * p_ + (m - 1))] = running;
            }
        }
    }

private:
    const Graph& g_;
    int p_;
    std::vector<int> inverse_;
    std::vector<int> hist_;
};

}  // namespace detail

/// Keeps the larger key; on equal keys, the smaller witness. Associative and
/// commutative, so chunked searches can be reduced in any order.
inline CanonicalForm merge(const CanonicalForm& a, const CanonicalForm& b) {
    auto c = compare_keys(a.key, b.key);
    if (c > 0) return a;
    if (c < 0) return b;
    return a.witness <= b.witness ? a : b;
}

/// Maximum over the permutations with lexicographic ranks [first, last).
inline CanonicalForm canonical_form_over(const Graph& g, std::uint64_t first, std::uint64_t last,
                                         const OracleLimits& limits = {}) {
    detail::check_vertex_cap(g, limits, "canonical_form_exhaustive");
    const int p = g.order();
    const std::uint64_t total = detail::factorial(p);
    last = std::min(last, total);
    if (first >= last) throw std::invalid_argument("canonical_form_over: empty rank range");

    std::vector<int> images = detail::unrank_permutation(p, first);
    std::vector<int> best_images = images, key, best_key;
    detail::RelabeledKey eval(g);
    eval.compute(images, best_key);
    for (std::uint64_t r = first + 1; r < last; ++r) {
        std::next_permutation(images.begin(), images.end());
        eval.compute(images, key);
        if (key > best_key) {
            best_key.swap(key);
            best_images = images;
        }
    }
    Permutation witness(best_images);
    Vab tableau = build_vab(relabel(g, witness));
    OrderKey k{p, p, std::move(best_key)};
    return {std::move(tableau), std::move(k), std::move(witness)};
}

inline CanonicalForm canonical_form_exhaustive(const Graph& g, const OracleLimits& limits = {}) {
    detail::check_vertex_cap(g, limits, "canonical_form_exhaustive");
    return canonical_form_over(g, 0, detail::factorial(g.order()), limits);
}

namespace detail {

/// Backtracking over vertex assignments 1..p in order, images tried in
/// increasing order, pruned by degree and by adjacency to already assigned
/// vertices. `visit` returns false to stop the search.
template <class Visit>
void search_isomorphisms(const Graph& g, const Graph& h, Visit&& visit) {
    const int p = g.order();
    if (h.order() != p || h.size() != g.size()) return;
    std::vector<int> images(static_cast<std::size_t>(p), 0);
    std::vector<char> used(static_cast<std::size_t>(p) + 1, 0);
    bool stop = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v > p) {
            if (!visit(images)) stop = true;
            return;
        }
        for (int w = 1; w <= p && !stop; ++w) {
            if (used[w] || g.degree(v) != h.degree(w)) continue;
            bool ok = true;
            for (int u = 1; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(images[u - 1], w);
            if (!ok) continue;
            images[v - 1] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    rec(rec, 1);
}

}  // namespace detail

/// Some sigma with relabel(g, sigma) == h (the lexicographically smallest), or none.
inline std::optional<Permutation> iso_exhaustive(const Graph& g, const Graph& h, const OracleLimits& limits = {}) {
    detail::check_vertex_cap(g, limits, "iso_exhaustive");
    detail::check_vertex_cap(h, limits, "iso_exhaustive");
    std::optional<Permutation> found;
    detail::search_isomorphisms(g, h, [&](const std::vector<int>& images) {
        found = Permutation(images);
        return false;
    });
    if (found && relabel(g, *found) != h) throw std::logic_error("internal error: iso_exhaustive witness fails");
    return found;
}

/// |Aut(g)|.
inline std::uint64_t automorphism_count(const Graph& g, const OracleLimits& limits = {}) {
    detail::check_vertex_cap(g, limits, "automorphism_count");
    std::uint64_t count = 0;
    detail::search_isomorphisms(g, g, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

/// Number of distinct edge sets among the p! relabelings of g.
inline std::uint64_t distinct_labeled_copies(const Graph& g, const OracleLimits& limits = {}) {
    detail::check_vertex_cap(g, limits, "distinct_labeled_copies");
    const int p = g.order();
    std::vector<int> images(static_cast<std::size_t>(p));
    std::iota(images.begin(), images.end(), 1);
    const auto edges = g.edges();
    std::unordered_set<std::uint64_t> seen;
    do {
        std::uint64_t code = 0;
        for (const Edge& e : edges) {
            int a = images[e.u - 1], b = images[e.v - 1];
            if (a > b) std::swap(a, b);
            // index of pair (a,b) in lexicographic pair order
            const int t = (a - 1) * p - (a - 1) * a / 2 + (b - a - 1);
            code |= std::uint64_t{1} << t;
        }
        seen.insert(code);
    } while (std::next_permutation(images.begin(), images.end()));
    return seen.size();
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// The lexicographically smallest pairwise-adjacent k-subset, or none.
inline std::optional<std::vector<int>> clique_exhaustive(const Graph& g, int k, const OracleLimits& limits = {}) {
    if (k < 0 || k > g.order())
        throw std::invalid_argument("clique_exhaustive: k = " + std::to_string(k) + " outside 0..p");
    if (binomial(g.order(), k) > limits.max_subsets)
        throw CapExceeded("clique_exhaustive: C(" + std::to_string(g.order()) + "," + std::to_string(k) +
                          ") subsets exceed the work cap of " + std::to_string(limits.max_subsets));
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 1);
    const int p = g.order();
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b) ok = g.has_edge(pick[a], pick[b]);
        if (ok) return pick;
        int i = k - 1;
        while (i >= 0 && pick[i] == p - k + i + 1) --i;
        if (i < 0) return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace bitab

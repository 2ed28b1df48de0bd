#pragma once

/// \file clique.hpp
/// \brief (k-1) degree restricted standardization and k-clique detection.
///
/// Only the first k-1 entries of each of the first k rows take part in the
/// restricted [m,n] count. Transpositions are confined to vertices of
/// degree >= k-1 and must keep the restricted prefix of every frozen row.
/// A leading k x (k-1) block with row j equal to {1..k}\{j} certifies a
/// k-clique on the current labels 1..k.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitab/bitableau.hpp"
#include "bitab/graph.hpp"
#include "bitab/standardize.hpp"

namespace bitab {

/// A VAB viewed through a restriction of width k-1.
struct RestrictedVab {
    Vab vab;
    int k = 2;

    int width() const { return k - 1; }
    int order() const { return vab.order(); }
    const Row& row(int j) const { return vab.row(j); }

    /// The first min(d(v_j), k-1) entries of row j.
    std::span<const int> restriction(int j) const {
        const Row& r = vab.row(j);
        return std::span<const int>(r).first(std::min<std::size_t>(r.size(), static_cast<std::size_t>(width())));
    }

    friend bool operator==(const RestrictedVab&, const RestrictedVab&) = default;
};

namespace detail {

inline void check_clique_k(int k, int p) {
    if (k < 2 || k > p)
        throw std::invalid_argument("clique size k = " + std::to_string(k) + " must satisfy 2 <= k <= p = " +
                                    std::to_string(p));
}

}  // namespace detail

inline RestrictedVab build_restricted_vab(const Graph& g, int k) {
    detail::check_clique_k(k, g.order());
    return {build_vab(g), k};
}

/// Counts over m in 1..p for the first k rows, restricted to each row's
/// first k-1 entries. Blocks n > k repeat block k.
inline OrderKey restricted_order_key(const Vab& t, int k) {
    return detail::count_key(t.rows, t.order(), k - 1, k);
}

inline OrderKey restricted_order_key(const RestrictedVab& t) { return restricted_order_key(t.vab, t.k); }

/// Policy for the restricted procedure used by VabStandardizer.
struct RestrictedVabPolicy {
    int k = 2;

    OrderKey key(const Vab& t) const { return restricted_order_key(t, k); }

    bool exchangeable(const Vab& t, int a, int b) const {
        const auto need = static_cast<std::size_t>(k - 1);
        return t.row(a).size() >= need && t.row(b).size() >= need;
    }

    bool preserves(const Row& row, int a, int b) const {
        const auto width = std::min(row.size(), static_cast<std::size_t>(k - 1));
        Row swapped = row;
        for (int& x : swapped) {
            if (x == a) x = b;
            else if (x == b) x = a;
        }
        std::sort(swapped.begin(), swapped.end());
        return std::equal(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width), swapped.begin());
    }

    int last_row(int p) const { return std::min(k, p); }
};

struct RestrictedStandardization {
    RestrictedVab tableau;
    Permutation vertex_perm;  // original label -> final label
    Trace trace;
    int steps = 0;
    /// Fewer than k vertices have degree >= k-1, so no k-clique exists and
    /// no transpositions were attempted.
    bool degree_filtered = false;
};

inline int vertices_with_degree_at_least(const Graph& g, int d) {
    int n = 0;
    for (int v = 1; v <= g.order(); ++v) n += g.degree(v) >= d;
    return n;
}

inline RestrictedStandardization restricted_standardize(const Graph& g, int k) {
    detail::check_clique_k(k, g.order());
    if (vertices_with_degree_at_least(g, k - 1) < k)
        return {build_restricted_vab(g, k), Permutation::identity(g.order()), {}, 0, true};
    VabStandardizer<RestrictedVabPolicy> s(g, RestrictedVabPolicy{k});
    s.run();
    return {{s.tableau(), k}, s.permutation(), s.trace(), s.steps(), false};
}

/// True iff rows 1..k each have at least k-1 entries and row j's first k-1
/// entries are exactly {1..k} \ {j}.
inline bool leading_clique_check(const RestrictedVab& t) {
    if (t.k > t.order()) return false;
    for (int j = 1; j <= t.k; ++j) {
        const Row& r = t.row(j);
        if (static_cast<int>(r.size()) < t.k - 1) return false;
        int expected = 1;
        for (int idx = 0; idx < t.k - 1; ++idx, ++expected) {
            if (expected == j) ++expected;
            if (r[static_cast<std::size_t>(idx)] != expected) return false;
        }
    }
    return true;
}

enum class CliqueKind { Found, NotFound, Inconclusive };

inline const char* to_string(CliqueKind k) {
    switch (k) {
        case CliqueKind::Found: return "found";
        case CliqueKind::NotFound: return "not-found";
        case CliqueKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct CliqueVerdict {
    CliqueKind kind = CliqueKind::Inconclusive;
    std::vector<int> vertices;  // sorted original labels when Found
    RestrictedStandardization run;
};

/// Sorted labels, space separated.
inline std::string format_witness(const std::vector<int>& vertices) {
    std::string out;
    for (int v : vertices) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

inline bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (!g.has_edge(vertices[a], vertices[b])) return false;
    return true;
}

inline CliqueVerdict find_k_clique(const Graph& g, int k) {
    CliqueVerdict out;
    out.run = restricted_standardize(g, k);
    if (out.run.degree_filtered) {
        out.kind = CliqueKind::NotFound;
        return out;
    }
    if (!leading_clique_check(out.run.tableau)) {
        out.kind = CliqueKind::Inconclusive;
        return out;
    }
    const Permutation back = invert(out.run.vertex_perm);
    for (int j = 1; j <= k; ++j) out.vertices.push_back(back(j));
    std::sort(out.vertices.begin(), out.vertices.end());
    if (!is_clique(g, out.vertices))
        throw std::logic_error("internal error: leading clique block does not map to a clique of the input");
    out.kind = CliqueKind::Found;
    return out;
}

}  // namespace bitab

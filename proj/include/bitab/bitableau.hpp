#pragma once

/// \file bitableau.hpp
/// \brief Vertex adjacency and incidence bitableaux, their [m,n] order keys,
/// and the actions of transpositions and cycles on them.
///
/// Only the right tableau is stored: the left tableau is always 1..p in
/// order and no action moves it. Rows are kept sorted ascending, so two
/// tableaux are equal exactly when their rows are equal.

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitab/graph.hpp"
#include "bitab/permutation.hpp"

namespace bitab {

using Row = std::vector<int>;

/// Vertex adjacency bitableau: row j lists the neighbors of vertex j.
struct Vab {
    std::vector<Row> rows;

    int order() const { return static_cast<int>(rows.size()); }
    const Row& row(int j) const { return rows[static_cast<std::size_t>(j - 1)]; }

    friend bool operator==(const Vab&, const Vab&) = default;
};

/// Incidence bitableau: row j lists the labels of edges incident to vertex j.
struct Ib {
    int edge_count = 0;
    std::vector<Row> rows;

    int order() const { return static_cast<int>(rows.size()); }
    const Row& row(int j) const { return rows[static_cast<std::size_t>(j - 1)]; }

    friend bool operator==(const Ib&, const Ib&) = default;
};

/// The sequence [1,1] [2,1] ... [M,1] [1,2] ... [M,N] where [m,n] counts the
/// entries <= m in the first n rows. M is p for a VAB and q for an IB.
struct OrderKey {
    int value_range = 0;  // M
    int row_count = 0;    // N
    std::vector<int> counts;

    int at(int m, int n) const {
        return counts[static_cast<std::size_t>((n - 1) * value_range + (m - 1))];
    }

    friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

/// Lexicographic comparison of the laid-out sequences. Greater means a larger
/// [m,n]-order. Keys of different lengths are not comparable.
inline std::strong_ordering compare_keys(const OrderKey& a, const OrderKey& b) {
    if (a.counts.size() != b.counts.size())
        throw std::invalid_argument("compare_keys: key lengths differ (" + std::to_string(a.counts.size()) +
                                    " vs " + std::to_string(b.counts.size()) + ")");
    return a.counts <=> b.counts;
}

namespace detail {

/// Counts with values restricted to 1..value_range; `width` caps how many
/// leading entries of a row are counted and `row_limit` how many rows
/// contribute (later blocks repeat the last contributing block).
inline OrderKey count_key(std::span<const Row> rows, int value_range, int width, int row_limit) {
    OrderKey key;
    key.value_range = value_range;
    key.row_count = static_cast<int>(rows.size());
    key.counts.assign(static_cast<std::size_t>(value_range) * rows.size(), 0);
    std::vector<int> hist(static_cast<std::size_t>(value_range) + 1, 0);
    for (int n = 1; n <= key.row_count; ++n) {
        if (n <= row_limit) {
            const Row& row = rows[static_cast<std::size_t>(n - 1)];
            const int take = std::min<int>(width, static_cast<int>(row.size()));
            for (int t = 0; t < take; ++t) ++hist[static_cast<std::size_t>(row[t])];
        }
        int running = 0;
        for (int m = 1; m <= value_range; ++m) {
            running += hist[static_cast<std::size_t>(m)];
            key.counts[static_cast<std::size_t>((n - 1) * value_range + (m - 1))] = running;
        }
    }
    return key;
}

inline void sort_rows(std::vector<Row>& rows) {
    for (auto& r : rows) std::sort(r.begin(), r.end());
}

inline void check_label(int x, int n, const char* what) {
    if (x < 1 || x > n)
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(x) + " out of range 1.." +
                                    std::to_string(n));
}

}  // namespace detail

inline Vab build_vab(const Graph& g) {
    Vab t;
    t.rows.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 1; v <= g.order(); ++v) {
        auto nb = g.neighbors(v);
        t.rows.emplace_back(nb.begin(), nb.end());
    }
    return t;
}

/// The graph a VAB describes. Throws if the rows are not symmetric.
inline Graph graph_of(const Vab& t) {
    std::vector<Edge> edges;
    for (int j = 1; j <= t.order(); ++j)
        for (int a : t.row(j)) {
            detail::check_label(a, t.order(), "graph_of");
            const Row& back = t.row(a);
            if (!std::binary_search(back.begin(), back.end(), j))
                throw std::invalid_argument("graph_of: tableau is not symmetric at (" + std::to_string(j) +
                                            "," + std::to_string(a) + ")");
            if (j < a) edges.emplace_back(j, a);
        }
    return Graph(t.order(), edges);
}

inline Ib build_ib(const EdgeLabeledGraph& g) {
    Ib t;
    t.edge_count = g.size();
    t.rows.resize(static_cast<std::size_t>(g.order()));
    for (int l = 1; l <= g.size(); ++l) {
        const Edge& e = g.edge(l);
        t.rows[static_cast<std::size_t>(e.u - 1)].push_back(l);
        t.rows[static_cast<std::size_t>(e.v - 1)].push_back(l);
    }
    detail::sort_rows(t.rows);
    return t;
}

inline OrderKey order_key_vab(const Vab& t) {
    return detail::count_key(t.rows, t.order(), t.order(), t.order());
}

inline OrderKey order_key_ib(const Ib& t) {
    return detail::count_key(t.rows, t.edge_count, std::max(t.edge_count, 1), t.order());
}

/// sigma acting on a VAB: new row sigma(v) = { sigma(a) : a in old row v }.
/// Equivalent to build_vab(relabel(g, sigma)).
inline Vab act_vab(const Vab& t, const Permutation& sigma) {
    if (sigma.size() != t.order()) throw std::invalid_argument("act_vab: permutation size mismatch");
    Vab out;
    out.rows.resize(t.rows.size());
    for (int v = 1; v <= t.order(); ++v) {
        Row& dst = out.rows[static_cast<std::size_t>(sigma(v) - 1)];
        dst.reserve(t.row(v).size());
        for (int a : t.row(v)) dst.push_back(sigma(a));
    }
    detail::sort_rows(out.rows);
    return out;
}

/// [(i,j)]: swap rows i and j and exchange the entries i and j everywhere.
inline Vab act_vab(const Vab& t, int i, int j) {
    detail::check_label(i, t.order(), "act_vab");
    detail::check_label(j, t.order(), "act_vab");
    if (i == j) throw std::invalid_argument("act_vab: transposition needs i != j");
    Vab out = t;
    std::swap(out.rows[static_cast<std::size_t>(i - 1)], out.rows[static_cast<std::size_t>(j - 1)]);
    for (auto& row : out.rows) {
        bool touched = false;
        for (int& a : row) {
            if (a == i) a = j, touched = true;
            else if (a == j) a = i, touched = true;
        }
        if (touched) std::sort(row.begin(), row.end());
    }
    return out;
}

/// [(i_1 i_2 ... i_r)]: row i_1 moves to i_2, ..., i_r to i_1, and entries
/// are rewritten the same way.
inline Vab act_vab_cycle(const Vab& t, std::span<const int> cycle) {
    return act_vab(t, Permutation::cycle(t.order(), cycle));
}

/// Vertex relabeling: row v moves to position sigma(v); entries unchanged.
inline Ib act_ib_left(const Ib& t, const Permutation& sigma) {
    if (sigma.size() != t.order()) throw std::invalid_argument("act_ib_left: permutation size mismatch");
    Ib out;
    out.edge_count = t.edge_count;
    out.rows.resize(t.rows.size());
    for (int v = 1; v <= t.order(); ++v) out.rows[static_cast<std::size_t>(sigma(v) - 1)] = t.row(v);
    return out;
}

/// Edge relabeling: each entry e becomes tau(e); rows stay in place.
inline Ib act_ib_right(const Ib& t, const Permutation& tau) {
    if (tau.size() != t.edge_count) throw std::invalid_argument("act_ib_right: permutation size mismatch");
    Ib out = t;
    for (auto& row : out.rows)
        for (int& e : row) e = tau(e);
    detail::sort_rows(out.rows);
    return out;
}

/// One line per row: "j | a1 a2 ... ak", or "j |" for an empty row.
template <class Tableau>
std::string render(const Tableau& t) {
    std::string out;
    for (int j = 1; j <= t.order(); ++j) {
        out += std::to_string(j) + " |";
        for (int a : t.row(j)) out += " " + std::to_string(a);
        out += '\n';
    }
    return out;
}

}  // namespace bitab

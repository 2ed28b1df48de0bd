#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs on vertices 1..p, relabeling, edge labels,
/// and exhaustive enumeration of labeled graphs.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitab/errors.hpp"
#include "bitab/permutation.hpp"

namespace bitab {

/// An undirected edge {u, v} stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph. Vertex j's neighbors are kept sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
    Graph(int p, std::span<const Edge> edges) : adjacency_(checked_order(p)) {
        for (const Edge& e : edges) {
            if (e.u < 1 || e.v > p)
                throw std::invalid_argument("graph: edge {" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + "} out of range 1.." +
                                            std::to_string(p));
            if (e.u == e.v) throw std::invalid_argument("graph: self-loop at " + std::to_string(e.u));
            adjacency_[e.u - 1].push_back(e.v);
            adjacency_[e.v - 1].push_back(e.u);
        }
        for (auto& row : adjacency_) {
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end())
                throw std::invalid_argument("graph: duplicate edge");
        }
        edge_count_ = static_cast<int>(edges.size());
    }

    Graph(int p, std::initializer_list<Edge> edges)
        : Graph(p, std::span<const Edge>(edges.begin(), edges.size())) {}

    static Graph empty(int p) { return Graph(p, std::span<const Edge>{}); }

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return edge_count_; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        auto row = neighbors(a);
        return std::binary_search(row.begin(), row.end(), b);
    }

    /// Edges in lexicographic (min endpoint, max endpoint) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 1; u <= order(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::size_t checked_order(int p) {
        if (p < 0) throw std::invalid_argument("graph: negative vertex count");
        return static_cast<std::size_t>(p);
    }

    std::vector<std::vector<int>> adjacency_;
    int edge_count_ = 0;
};

/// d(v_1), ..., d(v_p) in label order.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int v = 1; v <= g.order(); ++v) out[v - 1] = g.degree(v);
    return out;
}

/// Edge {u,v} of g becomes edge {sigma(u), sigma(v)}.
inline Graph relabel(const Graph& g, const Permutation& sigma) {
    if (sigma.size() != g.order())
        throw std::invalid_argument("relabel: permutation on 1.." + std::to_string(sigma.size()) +
                                    " applied to a graph on " + std::to_string(g.order()) +
                                    " vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()));
    for (const Edge& e : g.edges()) edges.emplace_back(sigma(e.u), sigma(e.v));
    return Graph(g.order(), edges);
}

/// A graph together with a bijection between its edges and 1..q.
/// edge(l) is the edge carrying label l.
class EdgeLabeledGraph {
public:
    EdgeLabeledGraph() = default;

    /// `by_label[l-1]` is the edge labeled l; must list every edge of `base` once.
    EdgeLabeledGraph(Graph base, std::vector<Edge> by_label)
        : base_(std::move(base)), by_label_(std::move(by_label)) {
        auto sorted = by_label_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != base_.edges())
            throw std::invalid_argument("edge labels must be a bijection between E(G) and 1..q");
    }

    const Graph& base() const { return base_; }
    int order() const { return base_.order(); }
    int size() const { return base_.size(); }
    const Edge& edge(int label) const { return by_label_[static_cast<std::size_t>(label - 1)]; }
    std::span<const Edge> edges_by_label() const { return by_label_; }

    friend bool operator==(const EdgeLabeledGraph&, const EdgeLabeledGraph&) = default;

private:
    Graph base_;
    std::vector<Edge> by_label_;
};

/// Labels edges 1..q in lexicographic endpoint order.
inline EdgeLabeledGraph label_edges(const Graph& g) { return EdgeLabeledGraph(g, g.edges()); }

/// Vertices relabeled by sigma, edge labels by tau: edge labeled l joining
/// {u,v} becomes edge labeled tau(l) joining {sigma(u), sigma(v)}.
inline EdgeLabeledGraph relabel(const EdgeLabeledGraph& g, const Permutation& sigma,
                                const Permutation& tau) {
    if (tau.size() != g.size()) throw std::invalid_argument("relabel: edge permutation size mismatch");
    Graph base = relabel(g.base(), sigma);
    std::vector<Edge> by_label(static_cast<std::size_t>(g.size()));
    for (int l = 1; l <= g.size(); ++l) {
        const Edge& e = g.edge(l);
        by_label[tau(l) - 1] = Edge(sigma(e.u), sigma(e.v));
    }
    return EdgeLabeledGraph(std::move(base), std::move(by_label));
}

/// Number of vertex pairs {i<j} on p vertices.
constexpr int pair_count(int p) { return p * (p - 1) / 2; }

/// The labeled graph on p vertices whose edge set is given by `code`: bit t
/// set means the t-th pair in lexicographic order (1,2),(1,3),...,(p-1,p)
/// is an edge.
inline Graph graph_from_code(int p, std::uint64_t code) {
    std::vector<Edge> edges;
    int t = 0;
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v, ++t)
            if ((code >> t) & 1U) edges.emplace_back(u, v);
    return Graph(p, edges);
}

/// Inverse of graph_from_code.
inline std::uint64_t graph_code(const Graph& g) {
    std::uint64_t code = 0;
    int t = 0;
    for (int u = 1; u <= g.order(); ++u)
        for (int v = u + 1; v <= g.order(); ++v, ++t)
            if (g.has_edge(u, v)) code |= std::uint64_t{1} << t;
    return code;
}

inline constexpr int kDefaultEnumerationCap = 7;

/// All 2^(p(p-1)/2) labeled simple graphs on p vertices, in code order.
class LabeledGraphs {
public:
    explicit LabeledGraphs(int p, int cap = kDefaultEnumerationCap) : p_(p) {
        if (p < 0) throw std::invalid_argument("enumerate_labeled_graphs: negative p");
        if (p > cap || pair_count(p) >= 63)
            throw CapExceeded("enumerate_labeled_graphs: p = " + std::to_string(p) +
                              " exceeds the enumeration cap of " + std::to_string(cap));
    }

    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(int p, std::uint64_t code) : p_(p), code_(code) {}

        Graph operator*() const { return graph_from_code(p_, code_); }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++code_;
            return old;
        }
        std::uint64_t code() const { return code_; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

    private:
        int p_ = 0;
        std::uint64_t code_ = 0;
    };

    int order() const { return p_; }
    std::uint64_t count() const { return std::uint64_t{1} << pair_count(p_); }
    Graph at(std::uint64_t code) const { return graph_from_code(p_, code); }
    iterator begin() const { return {p_, 0}; }
    iterator end() const { return {p_, count()}; }

private:
    int p_;
};

inline LabeledGraphs enumerate_labeled_graphs(int p, int cap = kDefaultEnumerationCap) {
    return LabeledGraphs(p, cap);
}

}  // namespace bitab

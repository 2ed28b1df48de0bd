#pragma once

// Test-only reference computations, written independently of the library's
// own code paths.

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "bitab/graph.hpp"
#include "bitab/graph_io.hpp"

namespace bitab::test {

/// [m,n] = number of entries <= m in rows 1..n, counted entry by entry.
inline std::vector<int> naive_key(const std::vector<std::vector<int>>& rows, int value_range) {
    std::vector<int> out;
    for (std::size_t n = 1; n <= rows.size(); ++n)
        for (int m = 1; m <= value_range; ++m) {
            int c = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (int e : rows[r]) c += e <= m;
            out.push_back(c);
        }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph data_graph(const std::string& name) {
    return parse_edge_list(read_file(std::string(BITAB_DATA_DIR) + "/" + name));
}

inline Graph k3() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline Graph p3() { return Graph(3, {{1, 2}, {2, 3}}); }
inline Graph k4() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
inline Graph c5() { return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

/// Adjacency-matrix relabeling, independent of bitab::relabel.
inline std::vector<std::vector<char>> relabeled_matrix(const Graph& g, const std::vector<int>& images) {
    const int p = g.order();
    std::vector<std::vector<char>> a(p, std::vector<char>(p, 0));
    for (int u = 1; u <= p; ++u)
        for (int v = 1; v <= p; ++v)
            if (g.has_edge(u, v)) a[images[u - 1] - 1][images[v - 1] - 1] = 1;
    return a;
}

}  // namespace bitab::test

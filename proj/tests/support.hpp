#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nbc/coloring.hpp"
#include "nbc/graph.hpp"

namespace testutil {

// Checks the structural invariants of a graph through its public surface.
// Returns an empty string when everything holds, else a description of the
// first violation.
inline std::string validity_error(const nbc::Graph& g) {
    std::int64_t degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        degree_sum += static_cast<std::int64_t>(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const int u = nb[i];
            if (u < 0 || u >= g.order())
                return "vertex " + std::to_string(v) + " has out-of-range neighbor " +
                       std::to_string(u);
            if (u == v) return "self-loop at vertex " + std::to_string(v);
            if (i > 0 && nb[i - 1] >= u)
                return "adjacency of vertex " + std::to_string(v) + " not sorted strictly";
            if (!g.adjacent(u, v))
                return "asymmetric edge (" + std::to_string(v) + ", " + std::to_string(u) + ")";
        }
    }
    if (degree_sum != 2 * g.size())
        return "edge count " + std::to_string(g.size()) + " does not match degree sum " +
               std::to_string(degree_sum);
    return "";
}

inline nbc::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return nbc::build_graph(n, edges);
}

inline nbc::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);        // outer cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5); // inner pentagram
        edges.emplace_back(v, 5 + v);               // spokes
    }
    return nbc::build_graph(10, edges);
}

inline nbc::Graph empty_graph(int n) { return nbc::build_graph(n, {}); }

inline nbc::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return nbc::build_graph(n, edges);
}

inline nbc::Graph k33() { return nbc::generate(nbc::FamilySpec::multipartite({3, 3})); }

inline nbc::Coloring k33_coloring() {
    return nbc::Coloring(nbc::Palette(3), {0, 1, 2, 0, 1, 2});
}

}  // namespace testutil

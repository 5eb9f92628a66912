#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbc/errors.hpp"

namespace nbc {

// Ceiling on the vertex count any operation may create; products and
// blow-ups refuse to exceed it.
inline constexpr std::int64_t kDefaultVertexLimit = 1'000'000;

// Immutable simple undirected graph. Neighbor lists are sorted ascending,
// loop-free and duplicate-free; adjacency is symmetric.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    std::int64_t size() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_regular() const { return min_degree() == max_degree(); }

    // Edge list as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[v])
                if (v < w) out.emplace_back(v, w);
        return out;
    }

private:
    friend class GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " not in [0, " +
                                  std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Accumulates edges for a fixed vertex count, then freezes them into a
// Graph. Loops and out-of-range endpoints are rejected as edges arrive;
// duplicates are detected when the lists are frozen.
class GraphBuilder {
public:
    explicit GraphBuilder(std::int64_t n, std::int64_t vertex_limit = kDefaultVertexLimit) {
        if (n < 0) throw InvalidFamilyParams("vertex count " + std::to_string(n) + " is negative");
        if (n > vertex_limit)
            throw SizeOverflow(std::to_string(n) + " vertices exceeds the limit of " +
                               std::to_string(vertex_limit));
        g_.n_ = static_cast<int>(n);
        g_.adj_.resize(g_.n_);
    }

    void add_edge(int u, int v) {
        if (u == v) throw SelfLoop("(" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g_.check_vertex(u);
        g_.check_vertex(v);
        g_.adj_[u].push_back(v);
        g_.adj_[v].push_back(u);
        ++g_.m_;
    }

    Graph take() {
        for (int v = 0; v < g_.n_; ++v) {
            auto& nb = g_.adj_[v];
            std::sort(nb.begin(), nb.end());
            auto dup = std::adjacent_find(nb.begin(), nb.end());
            if (dup != nb.end())
                throw DuplicateEdge("(" + std::to_string(std::min(v, *dup)) + ", " +
                                    std::to_string(std::max(v, *dup)) + ")");
        }
        return std::move(g_);
    }

private:
    Graph g_;
};

// Builds a graph from an explicit edge list.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.take();
}

enum class Family { Cycle, Complete, Multipartite, Circulant };

// Named graph family plus its integer parameters: n for Cycle/Complete,
// part sizes for Multipartite, n followed by the connection set for
// Circulant.
struct FamilySpec {
    Family kind;
    std::vector<int> params;

    static FamilySpec cycle(int n) { return {Family::Cycle, {n}}; }
    static FamilySpec complete(int n) { return {Family::Complete, {n}}; }
    static FamilySpec multipartite(std::vector<int> parts) {
        return {Family::Multipartite, std::move(parts)};
    }
    static FamilySpec circulant(int n, const std::vector<int>& conn) {
        std::vector<int> params{n};
        params.insert(params.end(), conn.begin(), conn.end());
        return {Family::Circulant, std::move(params)};
    }
};

namespace detail {

inline Graph generate_cycle(int n) {
    if (n < 3) throw InvalidFamilyParams("cycle needs n >= 3, got " + std::to_string(n));
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.take();
}

inline Graph generate_complete(int n) {
    if (n < 1) throw InvalidFamilyParams("complete graph needs n >= 1, got " + std::to_string(n));
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.take();
}

// Parts occupy consecutive index blocks in the order given.
inline Graph generate_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw InvalidFamilyParams("multipartite needs at least 2 parts");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw InvalidFamilyParams("part " + std::to_string(i + 1) + " has size " +
                                      std::to_string(parts[i]) + ", need >= 1");
        total += parts[i];
    }
    GraphBuilder b(total);
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i];
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = offset[i]; u < offset[i + 1]; ++u)
                for (int v = offset[j]; v < offset[j + 1]; ++v) b.add_edge(u, v);
    return b.take();
}

// Vertices are Z_n; v is adjacent to v +- a for every connection value a.
// Each a < n/2 contributes n edges; a = n/2 contributes n/2.
inline Graph generate_circulant(int n, std::span<const int> conn) {
    if (n < 3) throw InvalidFamilyParams("circulant needs n >= 3, got " + std::to_string(n));
    if (conn.empty()) throw InvalidFamilyParams("circulant needs a nonempty connection set");
    for (std::size_t i = 0; i < conn.size(); ++i) {
        if (conn[i] < 1 || conn[i] > n / 2)
            throw InvalidFamilyParams("connection value " + std::to_string(conn[i]) +
                                      " not in [1, " + std::to_string(n / 2) + "]");
        if (i > 0 && conn[i] <= conn[i - 1])
            throw InvalidFamilyParams("connection set not strictly increasing");
    }
    GraphBuilder b(n);
    for (int a : conn) {
        int span = (2 * a == n) ? n / 2 : n;
        for (int v = 0; v < span; ++v) b.add_edge(v, (v + a) % n);
    }
    return b.take();
}

}  // namespace detail

// Instantiates a named family; throws InvalidFamilyParams when the
// parameters fall outside the family's domain.
inline Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::Cycle:
            if (spec.params.size() != 1) throw InvalidFamilyParams("cycle takes exactly one parameter");
            return detail::generate_cycle(spec.params[0]);
        case Family::Complete:
            if (spec.params.size() != 1)
                throw InvalidFamilyParams("complete graph takes exactly one parameter");
            return detail::generate_complete(spec.params[0]);
        case Family::Multipartite:
            return detail::generate_multipartite(spec.params);
        case Family::Circulant:
            if (spec.params.size() < 2)
                throw InvalidFamilyParams("circulant takes n plus a connection set");
            return detail::generate_circulant(spec.params[0],
                                              std::span(spec.params).subspan(1));
    }
    throw InvalidFamilyParams("unknown family");
}

enum class ProductKind { Cartesian, Lexicographic, Direct, Strong };

namespace detail {

inline std::int64_t product_order(const Graph& g, const Graph& h, std::int64_t vertex_limit) {
    std::int64_t n = static_cast<std::int64_t>(g.order()) * h.order();
    if (n > vertex_limit)
        throw SizeOverflow("product on " + std::to_string(n) + " vertices exceeds the limit of " +
                           std::to_string(vertex_limit));
    return n;
}

inline void add_cartesian_edges(GraphBuilder& b, const Graph& g, const Graph& h) {
    const int nh = h.order();
    const auto g_edges = g.edges();
    const auto h_edges = h.edges();
    for (int u = 0; u < g.order(); ++u)
        for (auto [v, w] : h_edges) b.add_edge(u * nh + v, u * nh + w);
    for (auto [u, w] : g_edges)
        for (int v = 0; v < nh; ++v) b.add_edge(u * nh + v, w * nh + v);
}

inline void add_direct_edges(GraphBuilder& b, const Graph& g, const Graph& h) {
    const int nh = h.order();
    for (auto [u, u2] : g.edges())
        for (auto [v, v2] : h.edges()) {
            b.add_edge(u * nh + v, u2 * nh + v2);
            b.add_edge(u * nh + v2, u2 * nh + v);
        }
}

}  // namespace detail

// Binary graph product on vertex set V(G) x V(H); vertex (u, v) is mapped
// to index u*|V(H)| + v, i.e. the H-layer of u is a contiguous row.
inline Graph product(ProductKind kind, const Graph& g, const Graph& h,
                     std::int64_t vertex_limit = kDefaultVertexLimit) {
    GraphBuilder b(detail::product_order(g, h, vertex_limit), vertex_limit);
    const int nh = h.order();
    switch (kind) {
        case ProductKind::Cartesian:
            detail::add_cartesian_edges(b, g, h);
            break;
        case ProductKind::Direct:
            detail::add_direct_edges(b, g, h);
            break;
        case ProductKind::Strong:
            // Edge set is the disjoint union of the cartesian and direct edges.
            detail::add_cartesian_edges(b, g, h);
            detail::add_direct_edges(b, g, h);
            break;
        case ProductKind::Lexicographic:
            for (int u = 0; u < g.order(); ++u)
                for (auto [v, w] : h.edges()) b.add_edge(u * nh + v, u * nh + w);
            for (auto [u, u2] : g.edges())
                for (int v = 0; v < nh; ++v)
                    for (int w = 0; w < nh; ++w) b.add_edge(u * nh + v, u2 * nh + w);
            break;
    }
    return b.take();
}

// Join G + H: disjoint union plus all edges between the two blocks.
// G keeps indices 0..|V(G)|-1, H is shifted by |V(G)|.
inline Graph join(const Graph& g, const Graph& h, std::int64_t vertex_limit = kDefaultVertexLimit) {
    std::int64_t n = static_cast<std::int64_t>(g.order()) + h.order();
    if (n > vertex_limit)
        throw SizeOverflow("join on " + std::to_string(n) + " vertices exceeds the limit of " +
                           std::to_string(vertex_limit));
    GraphBuilder b(n, vertex_limit);
    const int shift = g.order();
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) b.add_edge(u, v + shift);
    return b.take();
}

}  // namespace nbc

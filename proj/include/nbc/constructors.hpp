#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nbc/coloring.hpp"
#include "nbc/graph.hpp"

namespace nbc {

// Output of a coloring constructor: the graph it colored (newly built or a
// copy of the input), a coloring that is balanced by construction, and the
// name of the construction that produced it.
struct ConstructionResult {
    Graph graph;
    Coloring coloring;
    std::string provenance;
};

// Two disjoint rainbow q-tuples of vertices: primary[i] and secondary[i]
// must both carry color i.
struct AnchorSet {
    std::vector<int> primary;
    std::vector<int> secondary;
};

namespace detail {

inline void require_balanced(const Graph& g, const Coloring& c, const std::string& which) {
    if (!verify(g, c).balanced) throw InputNotBalanced(which);
}

inline void require_same_palette(const Coloring& a, const Coloring& b) {
    if (!(a.palette() == b.palette()))
        throw PaletteMismatch("q = " + std::to_string(a.q()) + " vs q = " + std::to_string(b.q()));
}

inline std::vector<std::int64_t> color_counts(const Coloring& c) {
    std::vector<std::int64_t> counts(c.q(), 0);
    for (int t : c.colors()) ++counts[t];
    return counts;
}

inline void require_equal_counts(const Coloring& c, const std::string& which) {
    auto counts = color_counts(c);
    for (int t = 1; t < c.q(); ++t)
        if (counts[t] != counts[0]) {
            std::string sigma;
            for (std::size_t i = 0; i < counts.size(); ++i)
                sigma += (i ? ", " : "") + std::to_string(counts[i]);
            throw CountsNotEqual(which + " has sigma = [" + sigma + "]");
        }
}

// Additive coloring (u, v) -> cG(u) + cH(v) mod q on a product whose vertex
// (u, v) sits at index u*|V(H)| + v. Adding cG(u) rotates the layer coloring,
// so every H-layer carries a rotation of cH.
inline Coloring additive_product_coloring(const Coloring& cg, const Coloring& ch) {
    const int q = cg.q();
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(cg.size()) * ch.size());
    for (int u = 0; u < cg.size(); ++u)
        for (int v = 0; v < ch.size(); ++v) colors.push_back((cg.color(u) + ch.color(v)) % q);
    return Coloring(cg.palette(), std::move(colors));
}

}  // namespace detail

// The complete graph K_n admits a balanced coloring only in the trivial
// single-vertex case.
inline bool admits_complete(std::int64_t n, const Palette&) { return n == 1; }

// Complete multipartite coloring: requires every part size divisible by q;
// within each part the colors are assigned in equal consecutive blocks.
inline ConstructionResult color_complete_multipartite(const std::vector<int>& parts,
                                                      const Palette& palette) {
    const int q = palette.q();
    Graph g = generate(FamilySpec::multipartite(parts));
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] % q != 0)
            throw NotAdmissible("part " + std::to_string(i + 1) + " has size " +
                                std::to_string(parts[i]) + ", not divisible by " +
                                std::to_string(q));
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(g.order()));
    for (int part : parts) {
        const int block = part / q;
        for (int j = 0; j < part; ++j) colors.push_back(j / block);
    }
    return {std::move(g), Coloring(palette, std::move(colors)), "complete_multipartite"};
}

namespace detail {

// Signed label of the 1-indexed circulant vertex v: 0 when v = 1, +j when
// v = 2j, -j when v = 2j+1, all modulo q.
inline int circulant_signed_label(const Palette& palette, std::int64_t one_indexed) {
    const int q = palette.q();
    const int r = static_cast<int>(one_indexed % q);
    if (r == 1) return 0;
    if (r == 0) return -palette.k();  // residue q, the odd case j = k
    return r % 2 == 0 ? r / 2 : -(r - 1) / 2;
}

}  // namespace detail

// Circulant coloring for connection sets whose consecutive differences are
// congruent to one common p in {1..q-1} modulo q. Requires exactly q
// connection values, n divisible by 2q, and 1 <= a_1 < ... < a_q < n/2.
inline ConstructionResult color_circulant(int n, const std::vector<int>& conn,
                                          const Palette& palette) {
    const int q = palette.q();
    if (static_cast<int>(conn.size()) != q)
        throw HypothesisViolation("connection set has " + std::to_string(conn.size()) +
                                  " values, need exactly q = " + std::to_string(q));
    if (n < 2 * q || n % (2 * q) != 0)
        throw HypothesisViolation("order " + std::to_string(n) + " not a positive multiple of 2q = " +
                                  std::to_string(2 * q));
    for (std::size_t i = 0; i < conn.size(); ++i) {
        if (i > 0 && conn[i] <= conn[i - 1])
            throw HypothesisViolation("connection set not strictly increasing");
        if (conn[i] < 1 || 2 * conn[i] >= n)
            throw HypothesisViolation("connection value " + std::to_string(conn[i]) +
                                      " outside [1, " + std::to_string(n) + "/2)");
    }
    const int p = ((conn[1] - conn[0]) % q + q) % q;
    for (std::size_t i = 1; i + 1 < conn.size(); ++i)
        if (((conn[i + 1] - conn[i]) % q + q) % q != p)
            throw HypothesisViolation("difference pattern not constant modulo " + std::to_string(q));
    if (p == 0)
        throw HypothesisViolation("difference pattern p=0, need p in {1.." + std::to_string(q - 1) +
                                  "}");
    Graph g = generate(FamilySpec::circulant(n, conn));
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = color_index(palette, detail::circulant_signed_label(palette, v + 1));
    return {std::move(g), Coloring(palette, std::move(colors)), "circulant"};
}

// Lexicographic product coloring from balanced colorings of both factors.
inline ConstructionResult color_lex_product(const Graph& g, const Coloring& cg, const Graph& h,
                                            const Coloring& ch) {
    detail::require_same_palette(cg, ch);
    detail::require_balanced(g, cg, "left factor");
    detail::require_balanced(h, ch, "right factor");
    Graph p = product(ProductKind::Lexicographic, g, h);
    return {std::move(p), detail::additive_product_coloring(cg, ch), "lexicographic_product"};
}

// Lexicographic product coloring that needs no coloring of G: every H-layer
// repeats ch, which must be balanced with uniform color counts. The counts
// are checked first, so a skewed coloring is reported as CountsNotEqual even
// when it is unbalanced too.
inline ConstructionResult color_lex_product_equal_counts(const Graph& g, const Graph& h,
                                                         const Coloring& ch) {
    detail::require_equal_counts(ch, "right factor");
    detail::require_balanced(h, ch, "right factor");
    Graph p = product(ProductKind::Lexicographic, g, h);
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(g.order()) * h.order());
    for (int u = 0; u < g.order(); ++u)
        colors.insert(colors.end(), ch.colors().begin(), ch.colors().end());
    return {std::move(p), Coloring(ch.palette(), std::move(colors)),
            "lexicographic_product_uniform_counts"};
}

// Direct product coloring from a balanced coloring of one factor: every
// G-layer repeats cg, and H needs no coloring at all.
inline ConstructionResult color_direct_product(const Graph& g, const Coloring& cg,
                                               const Graph& h) {
    detail::require_balanced(g, cg, "left factor");
    Graph p = product(ProductKind::Direct, g, h);
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(g.order()) * h.order());
    for (int u = 0; u < g.order(); ++u) colors.insert(colors.end(), h.order(), cg.color(u));
    return {std::move(p), Coloring(cg.palette(), std::move(colors)), "direct_product"};
}

// K_{a,b} x K_{c,d} admits a balanced coloring exactly when one factor does,
// i.e. when q divides both part sizes of that factor.
inline bool admits_bipartite_direct(int a, int b, int c, int d, const Palette& palette) {
    const int q = palette.q();
    return (a % q == 0 && b % q == 0) || (c % q == 0 && d % q == 0);
}

// Cartesian product coloring from balanced colorings of both factors.
inline ConstructionResult color_cartesian_product(const Graph& g, const Coloring& cg,
                                                  const Graph& h, const Coloring& ch) {
    detail::require_same_palette(cg, ch);
    detail::require_balanced(g, cg, "left factor");
    detail::require_balanced(h, ch, "right factor");
    Graph p = product(ProductKind::Cartesian, g, h);
    return {std::move(p), detail::additive_product_coloring(cg, ch), "cartesian_product"};
}

// Strong product coloring; same hypotheses and coloring rule as the
// cartesian case, applied to the union of cartesian and direct edges.
inline ConstructionResult color_strong_product(const Graph& g, const Coloring& cg, const Graph& h,
                                               const Coloring& ch) {
    detail::require_same_palette(cg, ch);
    detail::require_balanced(g, cg, "left factor");
    detail::require_balanced(h, ch, "right factor");
    Graph p = product(ProductKind::Strong, g, h);
    return {std::move(p), detail::additive_product_coloring(cg, ch), "strong_product"};
}

// True when the equal-counts hypothesis of color_join holds automatically:
// both graphs regular with positive degree.
inline bool join_equal_counts_automatic(const Graph& g, const Graph& h) {
    return g.is_regular() && g.max_degree() > 0 && h.is_regular() && h.max_degree() > 0;
}

// Join coloring: concatenates the two balanced colorings; each side must
// use every color equally often.
inline ConstructionResult color_join(const Graph& g, const Coloring& cg, const Graph& h,
                                     const Coloring& ch) {
    detail::require_same_palette(cg, ch);
    detail::require_balanced(g, cg, "left summand");
    detail::require_balanced(h, ch, "right summand");
    detail::require_equal_counts(cg, "left summand");
    detail::require_equal_counts(ch, "right summand");
    Graph j = join(g, h);
    std::vector<int> colors(cg.colors().begin(), cg.colors().end());
    colors.insert(colors.end(), ch.colors().begin(), ch.colors().end());
    return {std::move(j), Coloring(cg.palette(), std::move(colors)), "join"};
}

// Embeds G as the copy-0 induced subgraph of a balanced graph on q*|V(G)|
// vertices: copy j of vertex i sits at index j*n + i, every edge of G is
// replaced by all cross-copy pairs, and copy j is colored j throughout.
inline ConstructionResult blow_up(const Graph& g, const Palette& palette,
                                  std::int64_t vertex_limit = kDefaultVertexLimit) {
    const int q = palette.q();
    const int n = g.order();
    const std::int64_t total = static_cast<std::int64_t>(q) * n;
    if (total > vertex_limit)
        throw SizeOverflow("blow-up on " + std::to_string(total) + " vertices exceeds the limit of " +
                           std::to_string(vertex_limit));
    GraphBuilder b(total, vertex_limit);
    for (auto [u, v] : g.edges())
        for (int p = 0; p < q; ++p)
            for (int r = 0; r < q; ++r) b.add_edge(p * n + u, r * n + v);
    std::vector<int> colors(static_cast<std::size_t>(total));
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(j) * n + i] = j;
    return {b.take(), Coloring(palette, std::move(colors)), "blow_up"};
}

namespace detail {

inline void validate_anchors(const Graph& g, const Coloring& c, const AnchorSet& anchors) {
    const int q = c.q();
    if (static_cast<int>(anchors.primary.size()) != q ||
        static_cast<int>(anchors.secondary.size()) != q)
        throw BadAnchors("need exactly q = " + std::to_string(q) +
                         " primary and q secondary anchors");
    std::vector<bool> used(g.order(), false);
    auto check = [&](const std::vector<int>& list, const char* which) {
        for (int i = 0; i < q; ++i) {
            const int v = list[i];
            if (v < 0 || v >= g.order())
                throw BadAnchors(std::string(which) + " anchor " + std::to_string(v) +
                                 " out of range");
            if (used[v])
                throw BadAnchors("anchor " + std::to_string(v) + " listed twice");
            used[v] = true;
            if (c.color(v) != i)
                throw BadAnchors(std::string(which) + " anchor " + std::to_string(v) +
                                 " has color " + std::to_string(c.color(v)) + ", expected " +
                                 std::to_string(i));
        }
    };
    check(anchors.primary, "primary");
    check(anchors.secondary, "secondary");
}

}  // namespace detail

// Picks the lowest-indexed pair of vertices of each color as anchors.
inline AnchorSet lowest_index_anchors(const Graph& g, const Coloring& c) {
    detail::check_length(g, c);
    const int q = c.q();
    AnchorSet anchors{std::vector<int>(q, -1), std::vector<int>(q, -1)};
    for (int v = 0; v < g.order(); ++v) {
        const int t = c.color(v);
        if (anchors.primary[t] < 0)
            anchors.primary[t] = v;
        else if (anchors.secondary[t] < 0)
            anchors.secondary[t] = v;
    }
    for (int t = 0; t < q; ++t)
        if (anchors.secondary[t] < 0)
            throw BadAnchors("color " + std::to_string(t) + " has fewer than two vertices");
    return anchors;
}

// Appends 2q-1 vertices: a hub u adjacent to all 2q anchors, then q-1
// vertices a_i adjacent to the primary anchors and q-1 vertices a'_i
// adjacent to the secondary anchors. u gets color q-1; a_i and a'_i get
// color i-1. Every color count grows by 2 except color q-1, which grows
// by 1.
inline ConstructionResult vertex_addition(const Graph& g, const Coloring& c,
                                          const AnchorSet& anchors) {
    detail::check_length(g, c);
    detail::require_balanced(g, c, "input coloring");
    detail::validate_anchors(g, c, anchors);
    const int q = c.q();
    const int n = g.order();
    const int two_k = q - 1;
    GraphBuilder b(n + 2 * q - 1);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    const int hub = n;
    for (int t = 0; t < q; ++t) {
        b.add_edge(hub, anchors.primary[t]);
        b.add_edge(hub, anchors.secondary[t]);
    }
    for (int i = 0; i < two_k; ++i) {
        const int a = n + 1 + i;
        const int a2 = n + 1 + two_k + i;
        for (int t = 0; t < q; ++t) {
            b.add_edge(a, anchors.primary[t]);
            b.add_edge(a2, anchors.secondary[t]);
        }
    }
    std::vector<int> colors(c.colors().begin(), c.colors().end());
    colors.push_back(q - 1);
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < two_k; ++i) colors.push_back(i);
    return {b.take(), Coloring(c.palette(), std::move(colors)), "vertex_addition"};
}

}  // namespace nbc

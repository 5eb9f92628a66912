#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbc/graph.hpp"

namespace nbc {

// Color count q = 2k+1, validated to be an odd prime at construction.
// Color indices are 0-based; index i stands for the i+1-th color.
class Palette {
public:
    explicit Palette(int q) : q_(q) {
        if (q < 3 || q % 2 == 0 || !is_prime(q))
            throw InvalidPalette("q = " + std::to_string(q) + " is not an odd prime >= 3");
    }

    int q() const { return q_; }
    int k() const { return (q_ - 1) / 2; }

    bool operator==(const Palette&) const = default;

private:
    static bool is_prime(int x) {
        if (x < 2) return false;
        for (int d = 2; static_cast<std::int64_t>(d) * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    }

    int q_;
};

// Signed label of a color index: 0 -> 0, j -> +j for j <= k, q-j -> -j.
inline int signed_label(const Palette& palette, int index) {
    if (index < 0 || index >= palette.q())
        throw IndexOutOfRange("color index " + std::to_string(index) + " not in [0, " +
                              std::to_string(palette.q()) + ")");
    return index <= palette.k() ? index : index - palette.q();
}

// Inverse of signed_label; accepts any representative of the congruence class.
inline int color_index(const Palette& palette, std::int64_t s) {
    const std::int64_t q = palette.q();
    return static_cast<int>(((s % q) + q) % q);
}

// Total assignment of color indices to vertices 0..n-1.
class Coloring {
public:
    Coloring(Palette palette, std::vector<int> colors)
        : palette_(palette), colors_(std::move(colors)) {
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] < 0 || colors_[v] >= palette_.q())
                throw IndexOutOfRange("color " + std::to_string(colors_[v]) + " of vertex " +
                                      std::to_string(v) + " not in [0, " +
                                      std::to_string(palette_.q()) + ")");
    }

    const Palette& palette() const { return palette_; }
    int q() const { return palette_.q(); }
    int size() const { return static_cast<int>(colors_.size()); }

    int color(int v) const {
        if (v < 0 || v >= size())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " not in [0, " +
                                  std::to_string(size()) + ")");
        return colors_[v];
    }

    std::span<const int> colors() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    Palette palette_;
    std::vector<int> colors_;
};

namespace detail {
inline void check_length(const Graph& g, const Coloring& c) {
    if (c.size() != g.order())
        throw LengthMismatch("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                             std::to_string(g.order()) + " vertices");
}
}  // namespace detail

// Sum of signed neighbor labels. Zero at every vertex is necessary for
// balance but not sufficient; verify() decides balance by counts.
inline std::int64_t weight(const Graph& g, const Coloring& c, int v) {
    detail::check_length(g, c);
    std::int64_t w = 0;
    for (int u : g.neighbors(v)) w += signed_label(c.palette(), c.color(u));
    return w;
}

// Per-color neighbor counts of v; the entries sum to deg(v).
inline std::vector<int> neighbor_color_counts(const Graph& g, const Coloring& c, int v) {
    detail::check_length(g, c);
    std::vector<int> counts(c.q(), 0);
    for (int u : g.neighbors(v)) ++counts[c.color(u)];
    return counts;
}

struct IdentityCheck {
    std::string name;
    std::int64_t expected;
    std::int64_t actual;
    bool pass;
};

struct Violation {
    int vertex;
    std::vector<int> counts;
};

// Balance status plus the vertex/edge color statistics. sigma_vertex[i]
// counts vertices of color i; sigma_edge[i][j] counts edges whose endpoint
// colors are {i, j} (the matrix is symmetric, diagonal entries counted
// once). The identity checks compare in scaled integers: q^2*sigma_edge[i][j]
// against 2|E| (i != j) or |E| (i == j), and, for regular graphs of positive
// degree, q*sigma_vertex[i] against n.
struct VerificationReport {
    bool balanced = false;
    std::vector<Violation> violations;
    std::vector<std::int64_t> sigma_vertex;
    std::vector<std::vector<std::int64_t>> sigma_edge;
    std::vector<IdentityCheck> identity_checks;

    bool identities_pass() const {
        for (const auto& check : identity_checks)
            if (!check.pass) return false;
        return true;
    }
};

// Decides balance by per-vertex count equality and fills in the statistics.
// The signed weight is not consulted: an all-zero weight profile does not
// imply equal counts.
inline VerificationReport verify(const Graph& g, const Coloring& c) {
    detail::check_length(g, c);
    const int q = c.q();
    VerificationReport report;

    report.sigma_vertex.assign(q, 0);
    for (int v = 0; v < g.order(); ++v) ++report.sigma_vertex[c.color(v)];

    report.sigma_edge.assign(q, std::vector<std::int64_t>(q, 0));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) {
                int a = c.color(v), b = c.color(u);
                ++report.sigma_edge[a][b];
                if (a != b) ++report.sigma_edge[b][a];
            }

    std::vector<int> counts(q, 0);
    for (int v = 0; v < g.order(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int u : g.neighbors(v)) ++counts[c.color(u)];
        bool even = true;
        for (int t = 1; t < q; ++t)
            if (counts[t] != counts[0]) even = false;
        if (!even) report.violations.push_back({v, counts});
    }
    report.balanced = report.violations.empty();

    const std::int64_t m = g.size();
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            IdentityCheck check;
            check.name = "sigma_edge[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            check.expected = (i == j) ? m : 2 * m;
            check.actual = static_cast<std::int64_t>(q) * q * report.sigma_edge[i][j];
            check.pass = check.expected == check.actual;
            report.identity_checks.push_back(std::move(check));
        }
    if (g.is_regular() && g.max_degree() > 0) {
        for (int i = 0; i < q; ++i) {
            IdentityCheck check;
            check.name = "sigma_vertex[" + std::to_string(i) + "]";
            check.expected = g.order();
            check.actual = static_cast<std::int64_t>(q) * report.sigma_vertex[i];
            check.pass = check.expected == check.actual;
            report.identity_checks.push_back(std::move(check));
        }
    }
    return report;
}

// Divisibility conditions that any balanced graph must satisfy. Passing is
// necessary, not sufficient.
struct NecessaryReport {
    bool degrees_ok = true;
    int first_bad_vertex = -1;  // set when degrees_ok is false
    bool regular = false;
    int degree = 0;       // common degree when regular
    bool order_ok = true; // n % q == 0; checked only when regular with degree > 0
    bool size_ok = true;  // |E| % q^2 == 0; same condition
    bool pass = true;
    std::string detail;   // first failing condition, empty when pass
};

inline NecessaryReport check_necessary(const Graph& g, const Palette& palette) {
    const int q = palette.q();
    NecessaryReport report;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % q != 0) {
            report.degrees_ok = false;
            report.first_bad_vertex = v;
            report.pass = false;
            report.detail = "degree " + std::to_string(g.degree(v)) + " of vertex " +
                            std::to_string(v) + " not divisible by " + std::to_string(q);
            break;
        }
    report.regular = g.is_regular();
    if (report.regular) report.degree = g.max_degree();
    if (report.regular && report.degree > 0) {
        report.order_ok = g.order() % q == 0;
        report.size_ok = g.size() % (static_cast<std::int64_t>(q) * q) == 0;
        if (report.pass && !report.order_ok) {
            report.pass = false;
            report.detail = "order " + std::to_string(g.order()) + " not divisible by " +
                            std::to_string(q);
        }
        if (report.pass && !report.size_ok) {
            report.pass = false;
            report.detail = "size " + std::to_string(g.size()) + " not divisible by " +
                            std::to_string(q * q);
        }
    }
    return report;
}

// Shifts every color index by the same amount, modulo q.
inline Coloring rotate_coloring(const Coloring& c, int shift) {
    const int q = c.q();
    const int s = ((shift % q) + q) % q;
    std::vector<int> colors(c.colors().begin(), c.colors().end());
    for (int& t : colors) t = (t + s) % q;
    return Coloring(c.palette(), std::move(colors));
}

// Applies a bijection on {0..q-1} to every color index.
inline Coloring permute_colors(const Coloring& c, std::span<const int> perm) {
    const int q = c.q();
    if (static_cast<int>(perm.size()) != q)
        throw NotAPermutation("got " + std::to_string(perm.size()) + " entries, need " +
                              std::to_string(q));
    std::vector<bool> seen(q, false);
    for (int t : perm) {
        if (t < 0 || t >= q) throw NotAPermutation("entry " + std::to_string(t) + " out of range");
        if (seen[t]) throw NotAPermutation("entry " + std::to_string(t) + " repeated");
        seen[t] = true;
    }
    std::vector<int> colors(c.colors().begin(), c.colors().end());
    for (int& t : colors) t = perm[t];
    return Coloring(c.palette(), std::move(colors));
}

}  // namespace nbc

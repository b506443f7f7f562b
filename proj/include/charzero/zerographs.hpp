#pragma once

// The common-zero graph on nonlinear characters, the vanishing-class graph,
// and the bipartite character/class zero graph; connected components, exact
// independence numbers and the metadata-gated bound checks.

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "vanishing.hpp"

namespace charzero {

struct SimpleGraph {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::string> annotations; // shown in DOT output
    std::vector<std::size_t> source;      // table index of each vertex (character or class)
    std::vector<std::vector<bool>> adjacency;

    std::size_t size() const noexcept { return labels.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u][v]; }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v = u + 1; v < size(); ++v) e += adjacency[u][v];
        return e;
    }
};

struct BipartiteGraph {
    std::vector<std::string> left;  // nonlinear characters
    std::vector<std::string> right; // non-central classes
    std::vector<std::size_t> left_source;
    std::vector<std::size_t> right_source;
    std::vector<std::vector<bool>> edges; // left x right
};

inline SimpleGraph gamma_v(const CharacterTable& t, const ZeroPattern& p) {
    SimpleGraph g;
    g.name = "gamma_v";
    const std::size_t n = p.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& chi = t.characters[p.nonlinear_idx[i]];
        g.labels.push_back(chi.name);
        g.annotations.push_back("deg " + chi.degree.str());
        g.source.push_back(p.nonlinear_idx[i]);
    }
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t c = 0; c < p.cols(); ++c)
                if (p.zeros[i][c] && p.zeros[j][c]) {
                    g.adjacency[i][j] = g.adjacency[j][i] = true;
                    break;
                }
    return g;
}

inline SimpleGraph delta_v(const CharacterTable& t, const ZeroPattern& p) {
    SimpleGraph g;
    g.name = "delta_v";
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < p.cols(); ++c)
        if (p.column_has_zero(c)) cols.push_back(c);
    for (std::size_t c : cols) {
        const auto& cl = t.classes[p.class_idx[c]];
        g.labels.push_back(cl.name);
        g.annotations.push_back("ord " + std::to_string(cl.element_order));
        g.source.push_back(p.class_idx[c]);
    }
    const std::size_t n = cols.size();
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t r = 0; r < p.rows(); ++r)
                if (p.zeros[r][cols[a]] && p.zeros[r][cols[b]]) {
                    g.adjacency[a][b] = g.adjacency[b][a] = true;
                    break;
                }
    return g;
}

inline BipartiteGraph theta(const CharacterTable& t, const ZeroPattern& p) {
    BipartiteGraph g;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        g.left.push_back(t.characters[p.nonlinear_idx[i]].name);
        g.left_source.push_back(p.nonlinear_idx[i]);
    }
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < p.cols(); ++c) {
        if (t.is_central(p.class_idx[c])) continue;
        cols.push_back(c);
        g.right.push_back(t.classes[p.class_idx[c]].name);
        g.right_source.push_back(p.class_idx[c]);
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
        std::vector<bool> row;
        for (std::size_t c : cols) row.push_back(p.zeros[i][c]);
        g.edges.push_back(std::move(row));
    }
    return g;
}

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Components as ascending vertex lists, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> components(const SimpleGraph& g) {
    UnionFind uf(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacency[u][v]) uf.unite(u, v);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(g.size(), SIZE_MAX);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::size_t root = uf.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(v);
    }
    return out;
}

struct IndependentSet {
    std::size_t size = 0;
    std::vector<std::size_t> witness; // ascending vertex indices
};

inline constexpr std::size_t kMaxIndependenceVertices = 256;

namespace detail {

// Fixed-width vertex set for the clique solver.
class VertexSet {
public:
    static constexpr std::size_t kWords = kMaxIndependenceVertices / 64;

    void set(std::size_t v) { w_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(std::size_t v) { w_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(std::size_t v) const { return w_[v / 64] >> (v % 64) & 1u; }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    std::size_t first() const {
        for (std::size_t i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return kMaxIndependenceVertices;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

private:
    std::array<std::uint64_t, kWords> w_{};
};

// Maximum clique in the complement graph, branch and bound with a greedy colouring bound.
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(std::vector<VertexSet> nbr) : nbr_(std::move(nbr)) {}

    VertexSet solve(const VertexSet& all) {
        expand(VertexSet{}, 0, all);
        return best_set_;
    }

private:
    void expand(const VertexSet& current, int current_size, VertexSet candidates) {
        std::vector<std::size_t> order;
        std::vector<int> colour;
        colour_sort(candidates, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_size + colour[i] <= best_size_) return;
            const std::size_t v = order[i];
            VertexSet with_v = current;
            with_v.set(v);
            const VertexSet next = candidates & nbr_[v];
            if (!next.any()) {
                if (current_size + 1 > best_size_) {
                    best_size_ = current_size + 1;
                    best_set_ = with_v;
                }
            } else {
                expand(with_v, current_size + 1, next);
            }
            candidates.reset(v);
        }
    }

    void colour_sort(VertexSet candidates, std::vector<std::size_t>& order, std::vector<int>& colour) const {
        int k = 0;
        while (candidates.any()) {
            ++k;
            VertexSet q = candidates;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q.subtract(nbr_[v]);
                candidates.reset(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
    }

    std::vector<VertexSet> nbr_;
    int best_size_ = 0;
    VertexSet best_set_;
};

} // namespace detail

inline IndependentSet independence_number(const SimpleGraph& g) {
    const std::size_t n = g.size();
    if (n > kMaxIndependenceVertices)
        throw UnsupportedSizeError("independence_number: " + std::to_string(n) + " vertices exceeds the supported " +
                                   std::to_string(kMaxIndependenceVertices));
    if (n == 0) return {};
    detail::VertexSet all;
    std::vector<detail::VertexSet> complement(n);
    for (std::size_t u = 0; u < n; ++u) {
        all.set(u);
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && !g.adjacency[u][v]) complement[u].set(v);
    }
    const detail::VertexSet best = detail::MaxCliqueSolver(std::move(complement)).solve(all);
    IndependentSet out;
    for (std::size_t v = 0; v < n; ++v)
        if (best.test(v)) out.witness.push_back(v);
    out.size = out.witness.size();
    return out;
}

// ---------------------------------------------------------------------------
// Bound checks

namespace flag {
inline constexpr const char* kFittingHeightBound = "alpha_gamma>fitting_height";  // contradicts alpha <= h(G)
inline constexpr const char* kAbelianByMetanilpotentBound = "abm_alpha_gamma>2";  // contradicts alpha <= 2
inline constexpr const char* kAlphaExceedsThree = "alpha_gamma>3";                 // four pairwise zero-free characters
inline constexpr const char* kSolvableAlphaExceedsTwo = "solvable_alpha_gamma>2";
inline constexpr const char* kTooManyComponents = "components>3";
inline constexpr const char* kSolvableTooManyComponents = "solvable_components>2";
inline constexpr const char* kComponentMismatch = "components_gamma!=delta";
inline constexpr const char* kMetadataInconsistent = "metadata_inconsistent";
} // namespace flag

struct BoundReport {
    std::optional<std::size_t> alpha_gamma; // absent when Gamma_v is too large for the exact solver
    std::optional<std::size_t> alpha_delta;
    std::size_t components_gamma = 0;
    std::size_t components_delta = 0;
    std::vector<std::string> flags;
    std::vector<std::string> notes;
};

inline BoundReport bound_checks(const CharacterTable& t, const ZeroPattern& p) {
    BoundReport r;
    const SimpleGraph gam = gamma_v(t, p);
    const SimpleGraph del = delta_v(t, p);
    r.components_gamma = components(gam).size();
    r.components_delta = components(del).size();
    const auto& m = t.metadata;

    if (!detail::metadata_problem(m).empty()) r.flags.emplace_back(flag::kMetadataInconsistent);
    if (gam.size() <= kMaxIndependenceVertices) r.alpha_gamma = independence_number(gam).size;
    else r.notes.push_back("gamma_v has " + std::to_string(gam.size()) + " vertices; independence number skipped");
    if (del.size() <= kMaxIndependenceVertices) r.alpha_delta = independence_number(del).size;

    if (r.alpha_gamma) {
        const auto alpha = static_cast<long long>(*r.alpha_gamma);
        if (m.fitting_height && alpha > *m.fitting_height) r.flags.emplace_back(flag::kFittingHeightBound);
        if (m.abelian_by_metanilpotent == true && alpha > 2) r.flags.emplace_back(flag::kAbelianByMetanilpotentBound);
        if (alpha > 3) r.flags.emplace_back(flag::kAlphaExceedsThree);
        if (m.solvable == true && alpha > 2) r.flags.emplace_back(flag::kSolvableAlphaExceedsTwo);
    }
    if (r.components_gamma > 3) r.flags.emplace_back(flag::kTooManyComponents);
    if (m.solvable == true && r.components_gamma > 2) r.flags.emplace_back(flag::kSolvableTooManyComponents);
    if (r.components_gamma != r.components_delta) r.flags.emplace_back(flag::kComponentMismatch);
    return r;
}

// ---------------------------------------------------------------------------
// Export

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') q += '\\';
        q += ch;
    }
    return q + "\"";
}

/// Two-line DOT label: each part escaped, joined by a DOT line break.
inline std::string dot_label(const std::string& top, const std::string& bottom) {
    const std::string a = dot_quote(top), b = dot_quote(bottom);
    return a.substr(0, a.size() - 1) + "\\n" + b.substr(1);
}

} // namespace detail

/// DOT text with vertices in table order; edges listed by (u, v), u < v.
inline std::string to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph " << g.name << " {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "  " << detail::dot_quote(g.labels[v]);
        if (v < g.annotations.size()) out << " [label=" << detail::dot_label(g.labels[v], g.annotations[v]) << "]";
        out << ";\n";
    }
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacency[u][v]) out << "  " << detail::dot_quote(g.labels[u]) << " -- " << detail::dot_quote(g.labels[v]) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "graph theta {\n";
    for (const auto& l : g.left) out << "  " << detail::dot_quote(l) << " [shape=box];\n";
    for (const auto& r : g.right) out << "  " << detail::dot_quote(r) << " [shape=ellipse];\n";
    for (std::size_t i = 0; i < g.left.size(); ++i)
        for (std::size_t j = 0; j < g.right.size(); ++j)
            if (g.edges[i][j]) out << "  " << detail::dot_quote(g.left[i]) << " -- " << detail::dot_quote(g.right[j]) << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacency[u][v]) edges.push_back({u, v});
    return {{"name", g.name}, {"vertices", g.labels}, {"edges", std::move(edges)}};
}

inline nlohmann::json graph_to_json(const BipartiteGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.left.size(); ++i)
        for (std::size_t j = 0; j < g.right.size(); ++j)
            if (g.edges[i][j]) edges.push_back({i, j});
    return {{"name", "theta"}, {"left", g.left}, {"right", g.right}, {"edges", std::move(edges)}};
}

} // namespace charzero

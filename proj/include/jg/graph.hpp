#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jg {

/// Vertex label. Always 1-based and positive.
using Label = int;

struct Edge {
    Label u;
    Label v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed sizes, unknown labels and other contract violations
/// on caller-supplied data.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on positive integer labels.
///
/// Vertices are stored in ascending label order; internally they are
/// addressed by dense 0-based indices and adjacency is kept in CSR form with
/// each row sorted ascending. Labels are what the public surface speaks;
/// indices are exposed only for algorithms that need dense arrays.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from labels and edges. Labels are sorted and must be
    /// unique and positive; edges must reference known labels and must not
    /// be self-loops. Duplicate edges are collapsed.
    Graph(std::vector<Label> labels, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Label> labels() const noexcept { return labels_; }
    Label label(std::size_t index) const { return labels_.at(index); }
    Label max_label() const noexcept { return labels_.empty() ? 0 : labels_.back(); }

    bool has_vertex(Label v) const noexcept;
    /// Dense index of a label; throws DomainError for unknown labels.
    std::size_t index_of(Label v) const;

    /// Neighbor indices of the vertex at `index`, ascending.
    std::span<const std::size_t> neighbor_indices(std::size_t index) const noexcept {
        return {targets_.data() + offsets_[index], targets_.data() + offsets_[index + 1]};
    }
    std::size_t degree_at(std::size_t index) const noexcept {
        return offsets_[index + 1] - offsets_[index];
    }

    /// Neighbor labels of `v`, ascending.
    std::vector<Label> neighbors(Label v) const;
    std::size_t degree(Label v) const { return degree_at(index_of(v)); }

    /// True iff u and v are adjacent. Throws DomainError on unknown labels.
    bool is_edge(Label u, Label v) const;

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    std::vector<Label> labels_;
    std::vector<std::size_t> index_by_label_;  // npos for labels not present
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> targets_;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    void init_lookup();
};

/// G_n: vertices 1..n, i ~ j iff i != j and one divides the other.
/// Built by enumerating multiples, so work is about n * H(n).
Graph build_divisibility_graph(int n);

/// Subgraph induced on `keep`, preserving the original labels.
Graph induced_subgraph(const Graph& g, std::span<const Label> keep);

/// Same graph with one vertex and its edges removed.
Graph remove_vertex(const Graph& g, Label v);

/// Connected components as ascending label lists, ordered by smallest label.
std::vector<std::vector<Label>> connected_components(const Graph& g);

struct LayoutPoint {
    Label vertex;
    double x;
    double y;
};

/// Vertex i sits at (cos(2*pi*i/n), sin(2*pi*i/n)).
std::vector<LayoutPoint> circular_layout(int n);

/// `vertex,x,y` CSV with 12 significant digits.
std::string layout_csv(std::span<const LayoutPoint> points);
/// `i,j` CSV of the edges with i < j in lexicographic order.
std::string edges_csv(const Graph& g);

}  // namespace jg

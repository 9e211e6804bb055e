#include "jg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace jg {

Graph::Graph(std::vector<Label> labels, std::span<const Edge> edges) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw DomainError("duplicate vertex label");
    if (!labels_.empty() && labels_.front() <= 0)
        throw DomainError("vertex labels must be positive");
    init_lookup();

    const std::size_t n = labels_.size();
    std::vector<std::vector<std::size_t>> rows(n);
    for (const Edge& e : edges) {
        if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
        const std::size_t a = index_of(e.u);
        const std::size_t b = index_of(e.v);
        rows[a].push_back(b);
        rows[b].push_back(a);
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = rows[i];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        offsets_[i + 1] = offsets_[i] + row.size();
    }
    targets_.reserve(offsets_[n]);
    for (auto& row : rows) targets_.insert(targets_.end(), row.begin(), row.end());
}

void Graph::init_lookup() {
    index_by_label_.assign(static_cast<std::size_t>(max_label()) + 1, npos);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        index_by_label_[static_cast<std::size_t>(labels_[i])] = i;
}

bool Graph::has_vertex(Label v) const noexcept {
    return v > 0 && static_cast<std::size_t>(v) < index_by_label_.size() &&
           index_by_label_[static_cast<std::size_t>(v)] != npos;
}

std::size_t Graph::index_of(Label v) const {
    if (!has_vertex(v)) throw DomainError("unknown vertex label " + std::to_string(v));
    return index_by_label_[static_cast<std::size_t>(v)];
}

std::vector<Label> Graph::neighbors(Label v) const {
    std::vector<Label> out;
    for (std::size_t j : neighbor_indices(index_of(v))) out.push_back(labels_[j]);
    return out;
}

bool Graph::is_edge(Label u, Label v) const {
    const std::size_t a = index_of(u);
    const std::size_t b = index_of(v);
    const auto row = neighbor_indices(a);
    return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j : neighbor_indices(i))
            if (i < j) out.push_back({labels_[i], labels_[j]});
    return out;
}

Graph build_divisibility_graph(int n) {
    if (n < 1) throw DomainError("divisibility graph needs n >= 1, got " + std::to_string(n));
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= n / 2; ++i)
        for (int m = 2 * i; m <= n; m += i) edges.push_back({i, m});
    return Graph(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Label> keep) {
    std::vector<Label> labels(keep.begin(), keep.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<char> kept(g.vertex_count(), 0);
    for (Label v : labels) kept[g.index_of(v)] = 1;

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (!kept[i]) continue;
        for (std::size_t j : g.neighbor_indices(i))
            if (i < j && kept[j]) edges.push_back({g.label(i), g.label(j)});
    }
    return Graph(std::move(labels), edges);
}

Graph remove_vertex(const Graph& g, Label v) {
    g.index_of(v);
    std::vector<Label> keep;
    keep.reserve(g.vertex_count());
    for (Label u : g.labels())
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

std::vector<std::vector<Label>> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Label>> out;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Label> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(g.label(x));
            for (std::size_t y : g.neighbor_indices(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<LayoutPoint> circular_layout(int n) {
    if (n < 1) throw DomainError("layout needs n >= 1, got " + std::to_string(n));
    std::vector<LayoutPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n;
        out.push_back({i, std::cos(angle), std::sin(angle)});
    }
    return out;
}

std::string layout_csv(std::span<const LayoutPoint> points) {
    std::ostringstream os;
    os << "vertex,x,y\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", p.vertex, p.x, p.y);
        os << buf;
    }
    return os.str();
}

std::string edges_csv(const Graph& g) {
    std::ostringstream os;
    os << "i,j\n";
    for (const Edge& e : g.edges()) os << e.u << ',' << e.v << '\n';
    return os.str();
}

}  // namespace jg

#include "jg/matching.hpp"

#include <algorithm>
#include <functional>

#include "blossom.hpp"

namespace jg {

Matching::Matching(Label max_label) : partner_(static_cast<std::size_t>(std::max(max_label, 0)) + 1, 0) {}

Matching Matching::from_pairs(Label max_label, std::span<const Edge> pairs) {
    Matching m(max_label);
    for (const Edge& e : pairs) m.match(e.u, e.v);
    return m;
}

std::optional<Label> Matching::partner(Label v) const noexcept {
    if (v <= 0 || static_cast<std::size_t>(v) >= partner_.size()) return std::nullopt;
    const Label p = partner_[static_cast<std::size_t>(v)];
    if (p == 0) return std::nullopt;
    return p;
}

std::size_t Matching::size() const noexcept { return pairs().size(); }

std::vector<Edge> Matching::pairs() const {
    std::vector<Edge> out;
    for (Label u = 1; u <= max_label(); ++u) {
        const auto p = partner(u);
        if (p && *p > u && partner(*p) == u) out.push_back({u, *p});
    }
    return out;
}

void Matching::match(Label u, Label v) {
    if (u <= 0 || v <= 0 || u > max_label() || v > max_label())
        throw DomainError("matched label outside 1.." + std::to_string(max_label()));
    partner_[static_cast<std::size_t>(u)] = v;
    partner_[static_cast<std::size_t>(v)] = u;
}

void Matching::unmatch(Label v) {
    if (const auto p = partner(v)) {
        if (partner(*p) == v) partner_[static_cast<std::size_t>(*p)] = 0;
        partner_[static_cast<std::size_t>(v)] = 0;
    }
}

bool verify_matching(const Graph& g, const Matching& m) {
    for (Label u = 1; u <= m.max_label(); ++u) {
        const auto p = m.partner(u);
        if (!p) continue;
        if (*p == u || !g.has_vertex(u) || !g.has_vertex(*p)) return false;
        if (m.partner(*p) != u) return false;
        if (!g.is_edge(u, *p)) return false;
    }
    return true;
}

namespace {

std::vector<int> to_mate(const Graph& g, const Matching& m) {
    std::vector<int> mate(g.vertex_count(), detail::kNone);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (const auto p = m.partner(g.label(i))) mate[i] = static_cast<int>(g.index_of(*p));
    return mate;
}

Matching from_mate(const Graph& g, const std::vector<int>& mate) {
    Matching m(g.max_label());
    for (std::size_t i = 0; i < mate.size(); ++i)
        if (mate[i] != detail::kNone && static_cast<std::size_t>(mate[i]) > i)
            m.match(g.label(i), g.label(static_cast<std::size_t>(mate[i])));
    return m;
}

}  // namespace

Matching maximum_matching(const Graph& g) { return from_mate(g, detail::maximum_mate(g)); }

std::size_t matching_number(const Graph& g) {
    const auto mate = detail::maximum_mate(g);
    return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](int x) { return x != detail::kNone; })) / 2;
}

std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m) {
    if (!verify_matching(g, m)) throw DomainError("input is not a valid matching of the graph");
    const std::vector<int> mate = to_mate(g, m);
    detail::BlossomForest forest(g, mate);
    const std::vector<int> path = forest.run();
    if (path.empty()) return std::nullopt;
    AlternatingPath out;
    out.vertices.reserve(path.size());
    for (int i : path) out.vertices.push_back(g.label(static_cast<std::size_t>(i)));
    return out;
}

Matching augment(const Graph& g, const Matching& m, const AlternatingPath& path) {
    const auto& vs = path.vertices;
    if (vs.size() < 2 || vs.size() % 2 != 0) throw DomainError("augmenting path must have an even number of vertices");
    if (!m.is_exposed(vs.front()) || !m.is_exposed(vs.back()))
        throw DomainError("augmenting path endpoints must be exposed");
    std::vector<Label> seen(vs);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw DomainError("augmenting path repeats a vertex");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.is_edge(vs[i], vs[i + 1])) throw DomainError("augmenting path uses a non-edge");
        const bool in_matching = m.partner(vs[i]) == vs[i + 1];
        if (in_matching != (i % 2 == 1)) throw DomainError("augmenting path does not alternate");
    }
    Matching out = m;
    for (std::size_t i = 0; i + 1 < vs.size(); i += 2) out.match(vs[i], vs[i + 1]);
    return out;
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g) {
    if (g.edge_count() > kEnumerationEdgeLimit)
        throw OversizedInstance("enumeration limited to " + std::to_string(kEnumerationEdgeLimit) + " edges, graph has " +
                                std::to_string(g.edge_count()));
    const std::vector<Edge> edges = g.edges();
    std::vector<std::vector<Edge>> best;
    std::size_t best_size = 0;
    std::vector<Edge> chosen;
    std::vector<char> used(static_cast<std::size_t>(g.max_label()) + 1, 0);

    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == edges.size()) {
            if (chosen.size() > best_size) {
                best_size = chosen.size();
                best.clear();
            }
            if (chosen.size() == best_size) best.push_back(chosen);
            return;
        }
        const Edge e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            chosen.push_back(e);
            walk(i + 1);
            chosen.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        walk(i + 1);
    };
    walk(0);

    std::sort(best.begin(), best.end());
    std::vector<Matching> out;
    out.reserve(best.size());
    for (const auto& pairs : best) out.push_back(Matching::from_pairs(g.max_label(), pairs));
    return out;
}

}  // namespace jg

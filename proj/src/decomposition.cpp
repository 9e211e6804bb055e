#include "jg/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "blossom.hpp"
#include "jg/matching.hpp"

namespace jg {

char class_letter(VertexClass c) noexcept {
    switch (c) {
        case VertexClass::D: return 'D';
        case VertexClass::A: return 'A';
        case VertexClass::C: return 'C';
    }
    return '?';
}

VertexClass Decomposition::class_of(Label v) const {
    if (std::binary_search(d.begin(), d.end(), v)) return VertexClass::D;
    if (std::binary_search(a.begin(), a.end(), v)) return VertexClass::A;
    if (std::binary_search(c.begin(), c.end(), v)) return VertexClass::C;
    throw DomainError("vertex " + std::to_string(v) + " is not in the decomposition");
}

bool Decomposition::in_d(Label v) const { return std::binary_search(d.begin(), d.end(), v); }

bool is_inessential(const Graph& g, Label v) {
    return matching_number(remove_vertex(g, v)) == matching_number(g);
}

Decomposition decompose(const Graph& g) {
    const std::vector<int> mate = detail::maximum_mate(g);
    detail::BlossomForest forest(g, mate);
    if (!forest.run().empty()) throw std::logic_error("augmenting path found after maximum matching");

    Decomposition out;
    const auto& marks = forest.marks();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        switch (marks[i]) {
            case detail::Mark::outer: out.d.push_back(g.label(i)); break;
            case detail::Mark::inner: out.a.push_back(g.label(i)); break;
            case detail::Mark::unreached: out.c.push_back(g.label(i)); break;
        }
    }
    return out;
}

Decomposition decompose_naive(const Graph& g) {
    const std::size_t nu = matching_number(g);
    const std::size_t n = g.vertex_count();
    std::vector<char> inessential(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        inessential[i] = matching_number(remove_vertex(g, g.label(i))) == nu;

    Decomposition out;
    for (std::size_t i = 0; i < n; ++i) {
        if (inessential[i]) {
            out.d.push_back(g.label(i));
            continue;
        }
        const auto row = g.neighbor_indices(i);
        const bool touches_d = std::any_of(row.begin(), row.end(), [&](std::size_t j) { return inessential[j] != 0; });
        (touches_d ? out.a : out.c).push_back(g.label(i));
    }
    return out;
}

bool verify_decomposition(const Graph& g, const Decomposition& dec) {
    std::vector<Label> all;
    for (const auto* s : {&dec.d, &dec.a, &dec.c}) {
        if (!std::is_sorted(s->begin(), s->end())) return false;
        all.insert(all.end(), s->begin(), s->end());
    }
    std::sort(all.begin(), all.end());
    if (!std::equal(all.begin(), all.end(), g.labels().begin(), g.labels().end())) return false;

    auto has_d_neighbor = [&](Label v) {
        for (Label w : g.neighbors(v))
            if (dec.in_d(w)) return true;
        return false;
    };
    for (Label v : dec.a)
        if (!has_d_neighbor(v)) return false;
    for (Label v : dec.c)
        if (has_d_neighbor(v)) return false;
    return true;
}

}  // namespace jg

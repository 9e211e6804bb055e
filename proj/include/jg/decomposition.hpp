#pragma once

#include <vector>

#include "jg/graph.hpp"

namespace jg {

enum class VertexClass { D, A, C };

char class_letter(VertexClass c) noexcept;

/// Gallai-Edmonds partition V = D u A u C. Each set ascending.
///   D: inessential vertices (missed by some maximum matching)
///   A: essential vertices with a neighbor in D
///   C: every other essential vertex
struct Decomposition {
    std::vector<Label> d;
    std::vector<Label> a;
    std::vector<Label> c;

    /// Class of a vertex; throws DomainError if the label is in no set.
    VertexClass class_of(Label v) const;
    bool in_d(Label v) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// nu(g - v) == nu(g).
bool is_inessential(const Graph& g, Label v);

/// One maximum matching, then one blossom search seeded at every exposed
/// vertex: outer vertices form D, inner vertices form A, unreached form C.
Decomposition decompose(const Graph& g);

/// Vertex-deletion oracle: classifies every vertex with is_inessential,
/// then applies the neighbor rule. O(V) maximum-matching computations.
Decomposition decompose_naive(const Graph& g);

/// Checks the partition and neighbor invariants against `g`.
bool verify_decomposition(const Graph& g, const Decomposition& dec);

}  // namespace jg

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jg/graph.hpp"

namespace jg {

/// Partner map over vertex labels. Every label up to `max_label()` has an
/// explicit entry, so exposure queries are O(1).
///
/// The type itself does not enforce the matching invariants; use
/// verify_matching against the host graph. That lets callers hand in
/// arbitrary (possibly broken) matchings for certificate checks.
class Matching {
public:
    Matching() = default;
    /// Empty matching over labels 1..max_label.
    explicit Matching(Label max_label);

    /// Pairs are recorded in order; a label reused by a later pair leaves
    /// the map asymmetric, which verify_matching rejects.
    static Matching from_pairs(Label max_label, std::span<const Edge> pairs);

    Label max_label() const noexcept { return static_cast<Label>(partner_.size()) - 1; }

    std::optional<Label> partner(Label v) const noexcept;
    bool is_exposed(Label v) const noexcept { return !partner(v).has_value(); }

    /// Number of symmetric pairs.
    std::size_t size() const noexcept;
    /// Symmetric pairs as (u, v) with u < v, ascending.
    std::vector<Edge> pairs() const;

    void match(Label u, Label v);
    void unmatch(Label v);

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Label> partner_{0};  // index = label, 0 = exposed
};

struct AlternatingPath {
    std::vector<Label> vertices;
    friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

/// Raised by the exhaustive enumerator beyond its edge budget.
class OversizedInstance : public DomainError {
public:
    using DomainError::DomainError;
};

inline constexpr std::size_t kEnumerationEdgeLimit = 24;

/// True iff `m` is symmetric, pairs only adjacent vertices of `g`, and
/// every partnered label is a vertex of `g`.
bool verify_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching by Edmonds' blossom method. Deterministic:
/// greedy seed in ascending label order, then phases searching from all
/// exposed vertices in ascending order.
Matching maximum_matching(const Graph& g);

/// Size of a maximum matching of `g`.
std::size_t matching_number(const Graph& g);

/// One phase of the blossom search against an arbitrary valid matching.
/// Returns an exposed-to-exposed alternating path iff `m` is not maximum.
/// Throws DomainError when `m` is not a valid matching of `g`.
std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const Matching& m);

/// Flips `path` against `m`. Throws DomainError if the path is not an
/// augmenting path of `m` in `g`.
Matching augment(const Graph& g, const Matching& m, const AlternatingPath& path);

/// Every maximum matching of `g`, each exactly once, ordered by their
/// sorted pair lists. Exponential; refuses graphs with more than
/// kEnumerationEdgeLimit edges.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g);

}  // namespace jg

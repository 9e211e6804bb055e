#pragma once

// Edmonds' alternating-forest search with blossom shrinking, shared by the
// matching and decomposition modules. Works on dense vertex indices.

#include <cstdint>
#include <deque>
#include <vector>

#include "jg/graph.hpp"

namespace jg::detail {

inline constexpr int kNone = -1;

enum class Mark : std::uint8_t { unreached, outer, inner };

/// Grows one alternating forest rooted at every exposed vertex of `mate`
/// (roots queued in ascending order, adjacency scanned ascending).
///
/// run() stops at the first edge joining outer vertices of two different
/// trees and returns the augmenting path it closes; otherwise it exhausts
/// the forest and returns an empty path. After an exhaustive run, marks()
/// is the final labelling: outer vertices (including everything shrunk into
/// a blossom) are those reachable from an exposed vertex by an even
/// alternating path.
class BlossomForest {
public:
    BlossomForest(const Graph& g, const std::vector<int>& mate);

    std::vector<int> run();
    const std::vector<Mark>& marks() const noexcept { return mark_; }

private:
    int common_base(int a, int b);
    void mark_path(int v, int b, int child);
    void shrink(int v, int w, int b);
    std::vector<int> path_to_root(int v) const;

    const Graph& g_;
    const std::vector<int>& mate_;
    std::vector<int> base_;
    std::vector<int> parent_;
    std::vector<Mark> mark_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<char> in_blossom_;
    std::deque<int> queue_;
};

/// Greedy maximal matching in ascending index order.
std::vector<int> greedy_mate(const Graph& g);

/// Flips the alternating path in place.
void flip_path(std::vector<int>& mate, const std::vector<int>& path);

/// Maximum matching as an index-based mate array.
std::vector<int> maximum_mate(const Graph& g);

}  // namespace jg::detail

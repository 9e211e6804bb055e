#include "blossom.hpp"

#include <algorithm>

namespace jg::detail {

BlossomForest::BlossomForest(const Graph& g, const std::vector<int>& mate)
    : g_(g),
      mate_(mate),
      base_(g.vertex_count()),
      parent_(g.vertex_count(), kNone),
      mark_(g.vertex_count(), Mark::unreached),
      stamp_(g.vertex_count(), 0),
      in_blossom_(g.vertex_count(), 0) {
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] = static_cast<int>(i);
}

std::vector<int> BlossomForest::run() {
    const int n = static_cast<int>(g_.vertex_count());
    for (int v = 0; v < n; ++v)
        if (mate_[v] == kNone) {
            mark_[v] = Mark::outer;
            queue_.push_back(v);
        }

    while (!queue_.empty()) {
        const int v = queue_.front();
        queue_.pop_front();
        for (std::size_t wi : g_.neighbor_indices(static_cast<std::size_t>(v))) {
            const int w = static_cast<int>(wi);
            if (base_[v] == base_[w] || mate_[v] == w) continue;
            if (mark_[w] == Mark::outer) {
                const int b = common_base(v, w);
                if (b == kNone) {
                    // Outer vertices of two different trees: augmenting path.
                    std::vector<int> path = path_to_root(v);
                    std::reverse(path.begin(), path.end());
                    const std::vector<int> tail = path_to_root(w);
                    path.insert(path.end(), tail.begin(), tail.end());
                    return path;
                }
                shrink(v, w, b);
            } else if (mark_[w] == Mark::unreached) {
                // Every exposed vertex is a root, so w is matched.
                parent_[w] = v;
                mark_[w] = Mark::inner;
                const int u = mate_[w];
                mark_[u] = Mark::outer;
                queue_.push_back(u);
            }
        }
    }
    return {};
}

int BlossomForest::common_base(int a, int b) {
    ++epoch_;
    for (;;) {
        a = base_[a];
        stamp_[a] = epoch_;
        if (mate_[a] == kNone) break;
        a = parent_[mate_[a]];
    }
    for (;;) {
        b = base_[b];
        if (stamp_[b] == epoch_) return b;
        if (mate_[b] == kNone) return kNone;
        b = parent_[mate_[b]];
    }
}

void BlossomForest::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        in_blossom_[base_[v]] = 1;
        in_blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

void BlossomForest::shrink(int v, int w, int b) {
    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
    mark_path(v, b, w);
    mark_path(w, b, v);
    const int n = static_cast<int>(base_.size());
    for (int i = 0; i < n; ++i) {
        if (!in_blossom_[base_[i]]) continue;
        base_[i] = b;
        if (mark_[i] != Mark::outer) {
            mark_[i] = Mark::outer;
            queue_.push_back(i);
        }
    }
}

std::vector<int> BlossomForest::path_to_root(int v) const {
    std::vector<int> path{v};
    while (mate_[v] != kNone) {
        const int m = mate_[v];
        v = parent_[m];
        path.push_back(m);
        path.push_back(v);
    }
    return path;
}

std::vector<int> greedy_mate(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> mate(static_cast<std::size_t>(n), kNone);
    for (int v = 0; v < n; ++v) {
        if (mate[v] != kNone) continue;
        for (std::size_t wi : g.neighbor_indices(static_cast<std::size_t>(v))) {
            const int w = static_cast<int>(wi);
            if (mate[w] == kNone) {
                mate[v] = w;
                mate[w] = v;
                break;
            }
        }
    }
    return mate;
}

void flip_path(std::vector<int>& mate, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
        mate[path[i]] = path[i + 1];
        mate[path[i + 1]] = path[i];
    }
}

std::vector<int> maximum_mate(const Graph& g) {
    std::vector<int> mate = greedy_mate(g);
    for (;;) {
        BlossomForest forest(g, mate);
        const std::vector<int> path = forest.run();
        if (path.empty()) return mate;
        flip_path(mate, path);
    }
}

}  // namespace jg::detail

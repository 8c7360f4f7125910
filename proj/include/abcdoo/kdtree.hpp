#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "abcdoo/point_cloud.hpp"
#include "abcdoo/simd/distance.hpp"

namespace abcdoo {

/// Candidate ordered by squared distance, ties by lower id.
struct Neighbor {
    double dist2 = 0.0;
    std::uint32_t id = 0;

    friend bool operator<(const Neighbor& a, const Neighbor& b) noexcept {
        return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.id < b.id);
    }
    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Exact k-nearest-neighbour index over a PointCloud with point masking.
///
/// Leaves are contiguous ranges of an axis-major copy of the points, scanned
/// with the dispatched squared-distance kernel. Masked points stay in the
/// tree until compact() rebuilds it from the active ones.
class KdTree {
public:
    static constexpr std::uint32_t kAbsent = UINT32_MAX;

    explicit KdTree(const PointCloud& points, std::size_t leaf_size = 32);

    std::size_t active_count() const noexcept { return active_total_; }
    std::size_t stored_count() const noexcept { return ids_.size(); }
    double masked_fraction() const noexcept {
        return ids_.empty() ? 0.0 : 1.0 - double(active_total_) / double(ids_.size());
    }
    bool is_active(std::uint32_t id) const noexcept {
        const auto pos = position_of_[id];
        return pos != kAbsent && active_[pos] != 0;
    }

    void deactivate(std::uint32_t id);

    /// Rebuilds over the active points only.
    void compact();

    /// The k nearest active points p with keep(p) true, sorted ascending by
    /// (squared distance, id). Fewer are returned if fewer qualify.
    template <class Keep>
    void nearest(std::span<const double> query, std::size_t k, Keep&& keep, std::vector<Neighbor>& out) const;

    void nearest(std::span<const double> query, std::size_t k, std::vector<Neighbor>& out) const {
        nearest(query, k, [](std::uint32_t) { return true; }, out);
    }

private:
    struct Node {
        std::uint32_t begin = 0;
        std::uint32_t end = 0;
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        std::uint32_t active = 0;
        int axis = -1;  // -1 for leaves
        double split = 0.0;
    };

    void build(std::vector<std::uint32_t> ids);
    std::uint32_t build_node(std::uint32_t begin, std::uint32_t end);

    template <class Keep>
    struct Search;

    const PointCloud* points_;
    std::size_t leaf_size_;
    int dim_;
    simd::SquaredDistanceFn kernel_;
    std::vector<std::uint32_t> ids_;       // tree order
    std::vector<double> coords_;           // axis-major over tree order
    std::vector<std::uint8_t> active_;     // per tree position
    std::vector<std::uint32_t> position_of_;
    std::vector<Node> nodes_;
    std::size_t active_total_ = 0;
};

template <class Keep>
struct KdTree::Search {
    const KdTree& tree;
    std::span<const double> query;
    std::size_t k;
    Keep& keep;
    std::vector<Neighbor>& heap;  // max-heap on Neighbor order
    std::vector<double> offsets;
    std::vector<double> scratch;

    bool full() const noexcept { return heap.size() == k; }

    bool prunable(double bound) const noexcept {
        // bound is a sum with one subtraction; the slack keeps pruning conservative
        return full() && bound > heap.front().dist2 * (1.0 + 1e-9) + 1e-12;
    }

    void offer(Neighbor cand) {
        if (!full()) {
            heap.push_back(cand);
            std::push_heap(heap.begin(), heap.end());
        } else if (cand < heap.front()) {
            std::pop_heap(heap.begin(), heap.end());
            heap.back() = cand;
            std::push_heap(heap.begin(), heap.end());
        }
    }

    void visit(std::uint32_t node_index, double bound) {
        const Node& node = tree.nodes_[node_index];
        if (node.active == 0 || prunable(bound)) return;
        if (node.axis < 0) {
            const std::size_t count = node.end - node.begin;
            scratch.resize(count);
            tree.kernel_(tree.coords_.data() + node.begin, tree.ids_.size(), count, tree.dim_, query.data(),
                         scratch.data());
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t pos = node.begin + i;
                if (!tree.active_[pos]) continue;
                const std::uint32_t id = tree.ids_[pos];
                if (!keep(id)) continue;
                offer({scratch[i], id});
            }
            return;
        }
        const double diff = query[static_cast<std::size_t>(node.axis)] - node.split;
        const std::uint32_t near = diff < 0.0 ? node.left : node.right;
        const std::uint32_t far = diff < 0.0 ? node.right : node.left;
        visit(near, bound);
        const double saved = offsets[static_cast<std::size_t>(node.axis)];
        const double far_bound = bound - saved + diff * diff;
        if (prunable(far_bound)) return;
        offsets[static_cast<std::size_t>(node.axis)] = diff * diff;
        visit(far, far_bound);
        offsets[static_cast<std::size_t>(node.axis)] = saved;
    }
};

template <class Keep>
void KdTree::nearest(std::span<const double> query, std::size_t k, Keep&& keep, std::vector<Neighbor>& out) const {
    out.clear();
    if (k == 0 || nodes_.empty()) return;
    out.reserve(k);
    Search<std::remove_reference_t<Keep>> search{*this, query, k, keep, out,
                                                 std::vector<double>(static_cast<std::size_t>(dim_), 0.0), {}};
    search.visit(0, 0.0);
    std::sort_heap(out.begin(), out.end());
}

} // namespace abcdoo

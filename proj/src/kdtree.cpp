#include "abcdoo/kdtree.hpp"

#include <numeric>

namespace abcdoo {

KdTree::KdTree(const PointCloud& points, std::size_t leaf_size)
    : points_(&points), leaf_size_(std::max<std::size_t>(leaf_size, 1)), dim_(points.dim()),
      kernel_(simd::squared_distance_kernel()) {
    std::vector<std::uint32_t> ids(points.size());
    std::iota(ids.begin(), ids.end(), 0u);
    build(std::move(ids));
}

void KdTree::build(std::vector<std::uint32_t> ids) {
    ids_ = std::move(ids);
    nodes_.clear();
    position_of_.assign(points_->size(), kAbsent);
    active_.assign(ids_.size(), 1);
    active_total_ = ids_.size();
    if (ids_.empty()) {
        coords_.clear();
        return;
    }
    nodes_.reserve(2 * (ids_.size() / leaf_size_ + 1));
    build_node(0, static_cast<std::uint32_t>(ids_.size()));
    for (std::uint32_t pos = 0; pos < ids_.size(); ++pos) position_of_[ids_[pos]] = pos;
    coords_ = points_->axis_major(ids_);
}

std::uint32_t KdTree::build_node(std::uint32_t begin, std::uint32_t end) {
    const auto index = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({begin, end, 0, 0, end - begin, -1, 0.0});
    if (end - begin <= leaf_size_) return index;

    int axis = 0;
    double widest = -1.0;
    for (int k = 0; k < dim_; ++k) {
        double lo = (*points_)[ids_[begin]][k];
        double hi = lo;
        for (std::uint32_t i = begin + 1; i < end; ++i) {
            const double v = (*points_)[ids_[i]][k];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > widest) {
            widest = hi - lo;
            axis = k;
        }
    }
    const std::uint32_t mid = begin + (end - begin) / 2;
    const auto& pts = *points_;
    std::nth_element(ids_.begin() + begin, ids_.begin() + mid, ids_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                         const double va = pts[a][axis];
                         const double vb = pts[b][axis];
                         return va < vb || (va == vb && a < b);
                     });
    const double split = pts[ids_[mid]][axis];
    const std::uint32_t left = build_node(begin, mid);
    const std::uint32_t right = build_node(mid, end);
    Node& node = nodes_[index];
    node.axis = axis;
    node.split = split;
    node.left = left;
    node.right = right;
    return index;
}

void KdTree::deactivate(std::uint32_t id) {
    const auto pos = position_of_[id];
    if (pos == kAbsent || !active_[pos]) return;
    active_[pos] = 0;
    --active_total_;
    std::uint32_t node = 0;
    while (true) {
        Node& current = nodes_[node];
        --current.active;
        if (current.axis < 0) break;
        node = pos < nodes_[current.left].end ? current.left : current.right;
    }
}

void KdTree::compact() {
    std::vector<std::uint32_t> keep;
    keep.reserve(active_total_);
    for (std::uint32_t pos = 0; pos < ids_.size(); ++pos)
        if (active_[pos]) keep.push_back(ids_[pos]);
    std::sort(keep.begin(), keep.end());
    build(std::move(keep));
}

} // namespace abcdoo

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace abcdoo {

/// Row-major points of fixed dimension.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t count, int dim) : data_(count * static_cast<std::size_t>(dim)), count_(count), dim_(dim) {}

    std::size_t size() const noexcept { return count_; }
    int dim() const noexcept { return dim_; }

    std::span<double> operator[](std::size_t i) noexcept {
        return {data_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    std::span<const double> operator[](std::size_t i) const noexcept {
        return {data_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }

    /// Axis-major copy of the points listed in ids: element k * ids.size() + i
    /// is coordinate k of points[ids[i]].
    std::vector<double> axis_major(std::span<const std::uint32_t> ids) const {
        std::vector<double> out(ids.size() * static_cast<std::size_t>(dim_));
        for (int k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < ids.size(); ++i)
                out[static_cast<std::size_t>(k) * ids.size() + i] = data_[ids[i] * static_cast<std::size_t>(dim_) + k];
        return out;
    }

private:
    std::vector<double> data_;
    std::size_t count_ = 0;
    int dim_ = 0;
};

} // namespace abcdoo

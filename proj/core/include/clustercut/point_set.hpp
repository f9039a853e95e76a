#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clustercut/errors.hpp"

namespace clustercut {

inline constexpr std::int64_t kDefaultCoordCap = 2147483647;  // 2^31 - 1

// n integer points in Z^d, row-major storage.
class PointSet {
 public:
  PointSet(int n, int d, std::vector<std::int64_t> coords,
           std::int64_t coord_cap = kDefaultCoordCap);

  int n() const { return n_; }
  int d() const { return d_; }
  std::int64_t coord(int i, int j) const { return coords_[static_cast<std::size_t>(i) * d_ + j]; }
  std::span<const std::int64_t> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * d_, static_cast<std::size_t>(d_)};
  }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t max_abs_coord() const { return max_abs_; }

  // exact squared euclidean distance; throws CapError if it leaves int64
  std::int64_t sq_dist(int i, int j) const;
  // exact sum_t |x_t - y_t|^p (the l_p radicand); throws CapError on overflow
  std::int64_t lp_pow_dist(int i, int j, int p) const;

 private:
  int n_, d_;
  std::vector<std::int64_t> coords_;
  std::int64_t max_abs_ = 0;
};

}  // namespace clustercut

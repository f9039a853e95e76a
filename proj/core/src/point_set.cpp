#include "clustercut/point_set.hpp"

#include <cstdlib>
#include <limits>

namespace clustercut {

PointSet::PointSet(int n, int d, std::vector<std::int64_t> coords, std::int64_t coord_cap)
    : n_(n), d_(d), coords_(std::move(coords)) {
  if (n < 0 || d < 1) throw PreconditionError("point set needs n >= 0 and d >= 1");
  if (coords_.size() != static_cast<std::size_t>(n) * d)
    throw PreconditionError("coordinate count does not match n*d");
  for (std::int64_t c : coords_) {
    std::int64_t a = c < 0 ? -c : c;
    if (a > coord_cap) throw CapError("coordinate magnitude exceeds cap");
    if (a > max_abs_) max_abs_ = a;
  }
}

std::int64_t PointSet::sq_dist(int i, int j) const {
  unsigned __int128 acc = 0;
  const std::int64_t* a = coords_.data() + static_cast<std::size_t>(i) * d_;
  const std::int64_t* b = coords_.data() + static_cast<std::size_t>(j) * d_;
  for (int t = 0; t < d_; ++t) {
    std::int64_t dx = a[t] - b[t];
    acc += static_cast<unsigned __int128>(dx) * dx;
  }
  if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw CapError("squared distance exceeds int64");
  return static_cast<std::int64_t>(acc);
}

std::int64_t PointSet::lp_pow_dist(int i, int j, int p) const {
  if (p < 1) throw PreconditionError("metric exponent must be >= 1");
  unsigned __int128 acc = 0;
  const std::int64_t* a = coords_.data() + static_cast<std::size_t>(i) * d_;
  const std::int64_t* b = coords_.data() + static_cast<std::size_t>(j) * d_;
  constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  for (int t = 0; t < d_; ++t) {
    std::int64_t dx = a[t] - b[t];
    unsigned __int128 mag = dx < 0 ? -static_cast<unsigned __int128>(dx) : static_cast<unsigned __int128>(dx);
    unsigned __int128 pw = 1;
    for (int e = 0; e < p; ++e) {
      if (mag != 0 && pw > kMax / mag) throw CapError("l_p distance term exceeds int64");
      pw *= mag;
    }
    acc += pw;
    if (acc > kMax) throw CapError("l_p distance exceeds int64");
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace clustercut

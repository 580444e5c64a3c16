#include "cubetile/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace cubetile {

CoverReport exact_cover_oracle(const TilingInstance& x, long long cell_budget) {
  const int n = x.dim();
  long long scale = 1;
  for (const auto& t : x.tiles()) {
    for (const auto& c : t) scale = lcm_positive(scale, c.den());
  }

  std::vector<long long> cells_per_axis(n);
  long long total = 1;
  for (int j = 0; j < n; ++j) {
    cells_per_axis[j] = x.period()[j] * scale;
    if (total > cell_budget / cells_per_axis[j]) {
      throw BudgetExceeded("cell grid larger than budget");
    }
    total *= cells_per_axis[j];
  }

  std::vector<long long> stride(n, 1);
  for (int j = n - 2; j >= 0; --j) stride[j] = stride[j + 1] * cells_per_axis[j + 1];

  std::vector<std::uint16_t> count(static_cast<size_t>(total), 0);

  // Covers one lifted cube: per axis the cube occupies `scale` consecutive
  // cells starting at corner[j]; only the part inside the box is counted.
  std::vector<long long> lo(n), hi(n);
  std::function<void(int, long long)> mark = [&](int axis, long long base) {
    if (axis == n) {
      ++count[static_cast<size_t>(base)];
      return;
    }
    for (long long c = lo[axis]; c < hi[axis]; ++c) {
      mark(axis + 1, base + c * stride[axis]);
    }
  };

  for (const auto& t : x.tiles()) {
    std::vector<long long> corner(n);
    for (int j = 0; j < n; ++j) {
      corner[j] = t[j].num() * (scale / t[j].den());
    }
    // Lift offsets k_j in [-1, L_j]; offsets whose cube misses the box
    // contribute nothing and are skipped as soon as the axis range is empty.
    std::function<void(int)> lift = [&](int axis) {
      if (axis == n) {
        mark(0, 0);
        return;
      }
      for (long long k = -1; k <= x.period()[axis]; ++k) {
        long long start = corner[axis] + k * cells_per_axis[axis];
        lo[axis] = std::max<long long>(start, 0);
        hi[axis] = std::min(start + scale, cells_per_axis[axis]);
        if (lo[axis] < hi[axis]) lift(axis + 1);
      }
    };
    lift(0);
  }

  for (long long idx = 0; idx < total; ++idx) {
    if (count[static_cast<size_t>(idx)] != 1) {
      CoverReport bad;
      bad.exact = false;
      bad.count = count[static_cast<size_t>(idx)];
      long long rest = idx;
      for (int j = 0; j < n; ++j) {
        bad.cell.push_back(Rational(rest / stride[j], scale));
        rest %= stride[j];
      }
      return bad;
    }
  }
  return CoverReport{true, {}, 1};
}

}  // namespace cubetile

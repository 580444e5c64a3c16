#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cubetile/rational.hpp"
#include "cubetile/tiling.hpp"

namespace cubetile::testing {

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

inline TileVector tv(std::initializer_list<Rational> coords) {
  return TileVector(coords);
}

inline TilingInstance make(std::vector<long long> period,
                           std::vector<TileVector> tiles) {
  return TilingInstance(std::move(period), std::move(tiles));
}

// The worked instances most tests revolve around.
inline TilingInstance z1() { return make({1}, {tv({q(0)})}); }
inline TilingInstance z2() { return make({1, 1}, {tv({q(0), q(0)})}); }
inline TilingInstance brick() {
  return make({1, 2}, {tv({q(0), q(0)}), tv({q(1, 2), q(1)})});
}
inline TilingInstance swapped_brick() {
  return make({2, 1}, {tv({q(0), q(0)}), tv({q(1), q(1, 2)})});
}
inline TilingInstance four_tile() {
  return make({2, 2}, {tv({q(0), q(0)}), tv({q(1), q(0)}),
                       tv({q(1, 2), q(1)}), tv({q(3, 2), q(1)})});
}
// Two classes whose cubes overlap: fails the pairwise criterion.
inline TilingInstance overlap_pair() {
  return make({2, 1}, {tv({q(0), q(0)}), tv({q(1, 2), q(0)})});
}

}  // namespace cubetile::testing

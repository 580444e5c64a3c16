#pragma once

#include <vector>

#include "cubetile/tiling.hpp"

namespace cubetile {

/// A column: one coordinate runs bijectively over a full coset chain while
/// the constant_coords stay fixed across the members. members are in chain
/// order (increasing running coordinate) and base is members.front(). The
/// lifts of the members stack into bi-infinite towers of cubes along the
/// direction axis. direction is 0-based and never listed in
/// constant_coords; a full column has all n-1 other coordinates constant.
struct ColumnWitness {
  int direction = 0;
  TileVector base;
  std::vector<TileVector> members;
  std::vector<int> constant_coords;
  bool operator==(const ColumnWitness&) const = default;
};

/// A shared (n-1)-face between tile lifts: u and v agree outside
/// direction and differ by +-1 mod the period along it. When the period
/// is 1 a tile is its own neighbor (u == v), which is a legitimate
/// witness: consecutive lifts of one class touch.
struct FaceWitness {
  int direction = 0;
  TileVector u, v;
  bool operator==(const FaceWitness&) const = default;
};

/// All full columns ((n-1) constant coordinates), sorted by
/// (direction, base). Throws std::invalid_argument unless the instance
/// verifies valid.
std::vector<ColumnWitness> find_columns(const TilingInstance& x);

/// Columns with at least l constant coordinates: for every direction,
/// constant set C with |C| >= l, value assignment on C and coset of the
/// running coordinate, reports a witness when every chain value is matched
/// by some tile fitting the assignment; per chain value the tile with the
/// smallest remaining coordinates is chosen. Witnesses are deduplicated by
/// (direction, member set) and sorted by (direction, members).
/// exact_l = true keeps only witnesses with exactly l constant coordinates.
/// find_l_columns(x, n-1) coincides with find_columns(x).
std::vector<ColumnWitness> find_l_columns(const TilingInstance& x, int l,
                                          bool exact_l = false);

/// All twin-face pairs, sorted by (direction, u, v) with u <= v.
std::vector<FaceWitness> find_twin_faces(const TilingInstance& x);

/// Column count per direction (indexed 0..n-1).
std::vector<long long> column_census(const TilingInstance& x);

/// "column dir=<d> base=<p/q ...> members=<count>", direction 1-based.
std::string format_witness(const ColumnWitness& w);
/// "face dir=<d> u=<p/q ...> v=<p/q ...>", direction 1-based.
std::string format_witness(const FaceWitness& w);

}  // namespace cubetile

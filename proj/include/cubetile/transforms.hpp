#pragma once

#include <vector>

#include "cubetile/tiling.hpp"

namespace cubetile {

/// Moves the origin to t: every tile becomes tile - t, renormalized.
/// A relabeling of the same system, so the result is valid iff the input
/// is; column structure is carried along unchanged.
TilingInstance translate(const TilingInstance& x, const TileVector& t);

/// Shifts the slab of tiles whose coordinate `coord` lies in the coset of
/// `coset` (mod 1) by m along that coordinate, renormalized mod the
/// period. On a valid instance this is the elementary containment move:
/// the result verifies valid, and m == 0 mod the period is the identity.
TilingInstance slab_shift(const TilingInstance& x, int coord,
                          const Rational& coset, long long m);

/// Relabels coordinates: coordinate j of the input becomes coordinate
/// sigma[j] of the result (periods move along). sigma must be a
/// permutation of 0..n-1.
TilingInstance permute_coords(const TilingInstance& x,
                              const std::vector<int>& sigma);

/// Embeds the instance in new_dim dimensions by appending zero coordinates
/// of period 1. Every appended direction is trivially a full column, which
/// is what makes extrusion useful for column-existence arguments.
TilingInstance extrude(const TilingInstance& x, int new_dim);

}  // namespace cubetile

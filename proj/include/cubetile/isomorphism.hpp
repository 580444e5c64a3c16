#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubetile/tiling.hpp"

namespace cubetile {

/// Certificate that two instances carry the same combinatorial structure:
/// sigma permutes coordinates (sigma[j] is the image of coordinate j, with
/// matching periods) and tile_map pairs every tile of the first instance
/// with its image. For every tile pair and coordinate the equality pattern
/// and the integer-difference pattern (mod the period) are preserved.
struct IsoWitness {
  std::vector<int> sigma;
  std::vector<std::pair<TileVector, TileVector>> tile_map;
};

/// Backtracking search for an isomorphism witness; returns the witness
/// that is lexicographically first by (sigma, image sequence), or nullopt.
std::optional<IsoWitness> are_isomorphic(const TilingInstance& a,
                                         const TilingInstance& b);

/// Isomorphism-class key: two instances get equal keys exactly when
/// are_isomorphic finds a witness. Computed as the lexicographic minimum,
/// over coordinate orderings and coset/index relabelings, of a serialized
/// relation encoding. Exhaustive search with pruning; refuses instances
/// beyond max_dim dimensions or 4096 tiles with BudgetExceeded.
std::vector<unsigned char> canonical_form(const TilingInstance& x,
                                          int max_dim = 8);

/// Lowercase hex, two digits per byte; the printable form of a key.
std::string to_hex(const std::vector<unsigned char>& bytes);

}  // namespace cubetile

#pragma once

#include "cubetile/tiling.hpp"

namespace cubetile {

struct CoverReport {
  bool exact = false;
  /// First cell (in lexicographic cell order) whose cover count is not 1;
  /// empty when exact. Coordinates are the cell's lower corner.
  TileVector cell;
  long long count = 0;
};

/// Brute-force ground truth for verify, sharing no logic with it: cuts the
/// fundamental box into cubical cells of side 1/D, D the lcm of all
/// coordinate denominators, and counts the covering cubes among the
/// periodic lifts of every tile with per-coordinate lift offsets in
/// [-1, L_j]. The instance tiles exactly when every cell is covered once.
///
/// Refuses with BudgetExceeded when the box holds more than cell_budget
/// cells (D^n * prod L_j).
CoverReport exact_cover_oracle(const TilingInstance& x,
                               long long cell_budget = 100000000);

}  // namespace cubetile

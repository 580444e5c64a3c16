#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cubetile/tiling.hpp"

namespace cubetile {

/// Period-2 tiling at resolution res: 2^dim vertices with coordinates in
/// {0..2*res-1}, coordinate c standing for the rational c/res. Distinct
/// vertices of a tiling must have some coordinate difference congruent to
/// res mod 2*res (the discrete form of the pairwise criterion); vertex
/// count 2^dim then forces an exact cover.
struct DiscreteTiling {
  int dim = 0;
  int res = 1;
  std::vector<std::vector<std::uint8_t>> vertices;  // sorted lexicographically
  bool operator==(const DiscreteTiling&) const = default;
};

struct NotRepresentable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The exact instance with tiles c/res and period (2,...,2).
TilingInstance to_exact(const DiscreteTiling& d);

/// Inverse embedding. Every period must be 2, the tile count 2^dim, every
/// denominator must divide res and the pairwise criterion must hold;
/// res = 0 infers the smallest resolution (lcm of the denominators).
/// Throws NotRepresentable when the instance does not fit the model.
DiscreteTiling from_discrete(const TilingInstance& x, int res = 0);

struct EnumOptions {
  long long limit = 0;           // stop after this many emissions; 0 = all
  bool dedup_canonical = false;  // one representative per isomorphism class
  long long vertex_budget = 4096;
  /// Pins the vertices of the first classes of the search (work
  /// splitting: the unrestricted stream is the concatenation of the
  /// per-prefix streams over all choices of a fixed-length prefix, in
  /// prefix order).
  std::vector<std::vector<std::uint8_t>> class_prefix;
};

/// Depth-first enumeration of every discrete tiling of (dim, res), one
/// vertex per half-integer parity class in ascending class order,
/// candidates in ascending coordinate order; the emission order is
/// deterministic. The sink returns false to stop early. Throws
/// BudgetExceeded when (2*res)^dim exceeds the vertex budget.
void enumerate_tilings(int dim, int res, const EnumOptions& opt,
                       const std::function<bool(const DiscreteTiling&)>& sink);

/// Convenience collector for enumerate_tilings.
std::vector<DiscreteTiling> enumerate_all(int dim, int res,
                                          const EnumOptions& opt = {});

/// Randomized-order backtracking completion: deterministic per
/// (dim, res, seed), and the result is always a tiling. Guarded to
/// dim <= 8 (BudgetExceeded beyond).
DiscreteTiling sample_tiling(int dim, int res, std::uint64_t seed);

/// DIMACS rendering of the discrete compatibility graph: all (2*res)^dim
/// positions as vertices, numbered from 1 in lexicographic coordinate
/// order; "p edge <V> <E>" then one "e i j" line (i < j) per compatible
/// pair. Throws BudgetExceeded when the pair scan would exceed the budget.
std::string export_dimacs(int dim, int res, long long pair_budget = 200000000);

}  // namespace cubetile

#pragma once

#include <optional>
#include <vector>

#include "cubetile/tiling.hpp"

namespace cubetile {

/// Raised when an occurring coset's values do not form a full integer
/// chain; on a verified instance this cannot happen, so seeing it means
/// the input was corrupted or never verified.
struct ChainIncomplete : std::runtime_error {
  int coord;       // 0-based coordinate
  Rational coset;  // fractional-part representative in [0,1)
  ChainIncomplete(int coord_no, const Rational& coset_frac)
      : std::runtime_error("incomplete chain in coordinate " +
                           std::to_string(coord_no + 1) + ", coset " +
                           coset_frac.str()),
        coord(coord_no),
        coset(coset_frac) {}
};

/// A natural code for an instance: per coordinate, the occurring residue
/// classes mod 1 (cosets) with an injective index map on each class's
/// values. In a verified instance the values of a coset in coordinate j
/// are exactly {f, f+1, ..., f+L_j-1}, so indices run over {1..L_j}.
///
/// The default table built by build_code_table orders cosets by increasing
/// fractional part and assigns index = integer offset + 1; recode replays
/// index permutations on top of that.
class CodeTable {
 public:
  struct Coset {
    Rational frac;
    std::vector<Rational> values;  // values[k-1] carries index k
    bool operator==(const Coset&) const = default;
  };

  CodeTable() = default;
  explicit CodeTable(std::vector<std::vector<Coset>> per_coord)
      : per_coord_(std::move(per_coord)) {}

  int dim() const { return static_cast<int>(per_coord_.size()); }
  const std::vector<Coset>& cosets(int coord) const;

  /// 1-based index of a coordinate value; throws std::out_of_range when the
  /// value does not occur in that coordinate.
  int index_of(int coord, const Rational& value) const;

  bool operator==(const CodeTable&) const = default;

 private:
  std::vector<std::vector<Coset>> per_coord_;
};

/// Builds the default code table. Throws ChainIncomplete when some
/// occurring coset is not a full chain (callers are expected to have
/// verified the instance first).
CodeTable build_code_table(const TilingInstance& x);

struct ChainReport {
  struct Violation {
    int coord;
    Rational coset;
    std::vector<Rational> values;  // what actually occurs, sorted
    bool operator==(const Violation&) const = default;
  };
  std::vector<Violation> violations;
  bool complete() const { return violations.empty(); }
};

/// Finite analog of code surjectivity: every coset occurring in coordinate
/// j must occur with all L_j integer offsets. Never throws; used both as a
/// diagnostic and as the oracle for build_code_table's error path.
ChainReport chain_fullness_check(const TilingInstance& x);

/// Applies the 1-based index permutation pi to one coset of coordinate
/// `coord` (or to every coset of that coordinate when `coset` is absent).
/// The underlying instance is untouched; only the table changes.
CodeTable recode(const CodeTable& table, int coord,
                 const std::optional<Rational>& coset,
                 const std::vector<int>& pi);

/// Geometric shadow of recode: rewrites each affected coordinate value from
/// chain position k to chain position pi(k). This is a relabeling move, so
/// it maps valid tilings to valid tilings and preserves column structure;
/// cyclic pi is exactly slab_shift.
TilingInstance apply_recode(const TilingInstance& x, const CodeTable& table,
                            int coord, const std::optional<Rational>& coset,
                            const std::vector<int>& pi);

/// Tiles whose coordinate `coord` carries index `index`, with that
/// coordinate deleted; an (n-1)-dimensional instance. For a verified input
/// the slices over index = 1..L_coord partition the tiles and each slice
/// verifies valid.
TilingInstance slice(const TilingInstance& x, const CodeTable& table,
                     int coord, int index);

}  // namespace cubetile

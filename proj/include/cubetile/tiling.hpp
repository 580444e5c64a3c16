#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cubetile/rational.hpp"

namespace cubetile {

/// One tile translation class: rational coordinates, one per dimension.
using TileVector = std::vector<Rational>;

/// "p/q p/q ..." with single spaces, the exchange form used everywhere.
std::string format_tile(const TileVector& t);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

/// A candidate periodic unit-cube tiling of n-space with integer period
/// vector L: the finite set of tile translation classes inside the
/// fundamental box prod_j [0, L_j). The full system is the set of lifts
/// t + (k_1 L_1, ..., k_n L_n) over all integer k.
///
/// Construction normalizes every coordinate into [0, L_j), sorts the tiles
/// lexicographically and rejects duplicates; instances are immutable
/// afterwards. Holding a TilingInstance does not imply the classes tile
/// space, that is what verify() decides.
class TilingInstance {
 public:
  TilingInstance(std::vector<long long> period, std::vector<TileVector> tiles);

  int dim() const { return static_cast<int>(period_.size()); }
  const std::vector<long long>& period() const { return period_; }
  const std::vector<TileVector>& tiles() const { return tiles_; }

  /// prod_j L_j, the tile count of an exact tiling with this period.
  long long volume() const;

  bool operator==(const TilingInstance&) const = default;

 private:
  std::vector<long long> period_;
  std::vector<TileVector> tiles_;  // sorted, normalized, duplicate-free
};

/// Reads the line-oriented text form:
///
///   # comment, blank lines ignored
///   dim 2
///   period 1 2
///   tile 0/1 0/1
///   tile 1/2 1/1
///
/// Fractions require an explicit positive denominator; values are reduced
/// and normalized mod the period, so any rational representative is
/// accepted. Throws ParseError with the offending line number.
TilingInstance parse_instance(std::istream& in);
TilingInstance parse_instance(const std::string& text);

/// Canonical text form: tiles in lexicographic order, fractions in lowest
/// terms, every line newline-terminated. parse(serialize(x)) == x.
std::string serialize(const TilingInstance& x);

/// Torus form of the Keller pairwise criterion: some coordinate difference
/// u_j - v_j is an integer not congruent to 0 mod L_j. Exactly when this
/// holds, every pair of lifts of u and v occupies disjoint cubes.
bool check_distinguishable(const TileVector& u, const TileVector& v,
                           const std::vector<long long>& period);

struct VerifyReport {
  struct CountMismatch {
    long long expected = 0;
    long long actual = 0;
    bool operator==(const CountMismatch&) const = default;
  };
  struct OverlapPair {
    TileVector u, v;
    bool operator==(const OverlapPair&) const = default;
  };
  struct Malformed {
    std::string detail;
    bool operator==(const Malformed&) const = default;
  };
  using Failure = std::variant<CountMismatch, OverlapPair, Malformed>;

  std::optional<Failure> failure;

  bool valid() const { return !failure.has_value(); }

  /// One-line rendering: "valid <k> tiles" or the failure.
  std::string describe(long long tile_count) const;
};

/// Decides whether the instance is an exact tiling: the tile count must be
/// prod L_j and all pairs must satisfy the pairwise criterion (count plus
/// pairwise disjointness forces exact cover by volume). Reports the first
/// failing pair in lexicographic order.
VerifyReport verify(const TilingInstance& x);

/// Shared guard for operations that refuse oversized inputs.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cubetile

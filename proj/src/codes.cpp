#include "cubetile/codes.hpp"

#include <algorithm>
#include <map>

namespace cubetile {

const std::vector<CodeTable::Coset>& CodeTable::cosets(int coord) const {
  if (coord < 0 || coord >= dim()) throw std::out_of_range("coordinate out of range");
  return per_coord_[coord];
}

int CodeTable::index_of(int coord, const Rational& value) const {
  for (const auto& c : cosets(coord)) {
    if (c.frac == value.frac()) {
      for (size_t k = 0; k < c.values.size(); ++k) {
        if (c.values[k] == value) return static_cast<int>(k) + 1;
      }
      break;
    }
  }
  throw std::out_of_range("value " + value.str() + " not present in coordinate " +
                          std::to_string(coord + 1));
}

namespace {

// Occurring values of each coordinate, grouped by fractional part and
// sorted; shared by table construction and the fullness check.
std::vector<std::map<Rational, std::vector<Rational>>> group_cosets(
    const TilingInstance& x) {
  std::vector<std::map<Rational, std::vector<Rational>>> grouped(x.dim());
  for (const auto& t : x.tiles()) {
    for (int j = 0; j < x.dim(); ++j) {
      auto& vals = grouped[j][t[j].frac()];
      auto pos = std::lower_bound(vals.begin(), vals.end(), t[j]);
      if (pos == vals.end() || *pos != t[j]) vals.insert(pos, t[j]);
    }
  }
  return grouped;
}

}  // namespace

CodeTable build_code_table(const TilingInstance& x) {
  auto grouped = group_cosets(x);
  std::vector<std::vector<CodeTable::Coset>> per_coord(x.dim());
  for (int j = 0; j < x.dim(); ++j) {
    for (auto& [frac, vals] : grouped[j]) {
      if (static_cast<long long>(vals.size()) != x.period()[j]) {
        throw ChainIncomplete(j, frac);
      }
      per_coord[j].push_back({frac, vals});
    }
  }
  return CodeTable(std::move(per_coord));
}

ChainReport chain_fullness_check(const TilingInstance& x) {
  auto grouped = group_cosets(x);
  ChainReport report;
  for (int j = 0; j < x.dim(); ++j) {
    for (auto& [frac, vals] : grouped[j]) {
      if (static_cast<long long>(vals.size()) != x.period()[j]) {
        report.violations.push_back({j, frac, vals});
      }
    }
  }
  return report;
}

namespace {

void check_permutation(const std::vector<int>& pi, size_t size) {
  if (pi.size() != size) {
    throw std::invalid_argument("permutation size does not match chain length");
  }
  std::vector<bool> hit(size, false);
  for (int v : pi) {
    if (v < 1 || static_cast<size_t>(v) > size || hit[v - 1]) {
      throw std::invalid_argument("not a permutation of 1..m");
    }
    hit[v - 1] = true;
  }
}

std::vector<Rational> permute_values(const std::vector<Rational>& values,
                                     const std::vector<int>& pi) {
  std::vector<Rational> out(values.size());
  for (size_t k = 0; k < values.size(); ++k) out[pi[k] - 1] = values[k];
  return out;
}

}  // namespace

CodeTable recode(const CodeTable& table, int coord,
                 const std::optional<Rational>& coset,
                 const std::vector<int>& pi) {
  std::vector<std::vector<CodeTable::Coset>> per_coord;
  per_coord.reserve(table.dim());
  for (int j = 0; j < table.dim(); ++j) per_coord.push_back(table.cosets(j));
  if (coord < 0 || coord >= table.dim()) {
    throw std::out_of_range("coordinate out of range");
  }
  bool found = !coset.has_value();
  for (auto& c : per_coord[coord]) {
    if (coset && c.frac != *coset) continue;
    found = true;
    check_permutation(pi, c.values.size());
    c.values = permute_values(c.values, pi);
  }
  if (!found) throw std::out_of_range("coset " + coset->str() + " not present");
  return CodeTable(std::move(per_coord));
}

TilingInstance apply_recode(const TilingInstance& x, const CodeTable& table,
                            int coord, const std::optional<Rational>& coset,
                            const std::vector<int>& pi) {
  if (coord < 0 || coord >= x.dim()) throw std::out_of_range("coordinate out of range");
  bool found = !coset.has_value();
  std::vector<TileVector> tiles = x.tiles();
  for (const auto& c : table.cosets(coord)) {
    if (coset && c.frac != *coset) continue;
    found = true;
    check_permutation(pi, c.values.size());
    for (auto& t : tiles) {
      if (t[coord].frac() != c.frac) continue;
      int k = table.index_of(coord, t[coord]);
      t[coord] = c.values[pi[k - 1] - 1];
    }
  }
  if (!found) throw std::out_of_range("coset " + coset->str() + " not present");
  return TilingInstance(x.period(), std::move(tiles));
}

TilingInstance slice(const TilingInstance& x, const CodeTable& table,
                     int coord, int index) {
  if (x.dim() < 2) throw std::invalid_argument("cannot slice a 1-dimensional instance");
  if (coord < 0 || coord >= x.dim()) throw std::out_of_range("coordinate out of range");
  if (index < 1 || index > x.period()[coord]) {
    throw std::out_of_range("slice index out of range");
  }
  std::vector<long long> period;
  for (int j = 0; j < x.dim(); ++j) {
    if (j != coord) period.push_back(x.period()[j]);
  }
  std::vector<TileVector> tiles;
  for (const auto& t : x.tiles()) {
    if (table.index_of(coord, t[coord]) != index) continue;
    TileVector reduced;
    for (int j = 0; j < x.dim(); ++j) {
      if (j != coord) reduced.push_back(t[j]);
    }
    tiles.push_back(std::move(reduced));
  }
  return TilingInstance(std::move(period), std::move(tiles));
}

}  // namespace cubetile

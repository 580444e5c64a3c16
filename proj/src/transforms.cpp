#include "cubetile/transforms.hpp"

namespace cubetile {

TilingInstance translate(const TilingInstance& x, const TileVector& t) {
  if (static_cast<int>(t.size()) != x.dim()) {
    throw std::invalid_argument("translation arity does not match dimension");
  }
  std::vector<TileVector> tiles = x.tiles();
  for (auto& tile : tiles) {
    for (int j = 0; j < x.dim(); ++j) tile[j] = tile[j] - t[j];
  }
  return TilingInstance(x.period(), std::move(tiles));
}

TilingInstance slab_shift(const TilingInstance& x, int coord,
                          const Rational& coset, long long m) {
  if (coord < 0 || coord >= x.dim()) {
    throw std::out_of_range("coordinate out of range");
  }
  Rational frac = coset.frac();
  std::vector<TileVector> tiles = x.tiles();
  for (auto& tile : tiles) {
    if (tile[coord].frac() == frac) tile[coord] = tile[coord] + Rational(m);
  }
  return TilingInstance(x.period(), std::move(tiles));
}

TilingInstance permute_coords(const TilingInstance& x,
                              const std::vector<int>& sigma) {
  const int n = x.dim();
  if (static_cast<int>(sigma.size()) != n) {
    throw std::invalid_argument("permutation arity does not match dimension");
  }
  std::vector<bool> hit(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || hit[v]) {
      throw std::invalid_argument("not a permutation of the coordinates");
    }
    hit[v] = true;
  }
  std::vector<long long> period(n);
  for (int j = 0; j < n; ++j) period[sigma[j]] = x.period()[j];
  std::vector<TileVector> tiles;
  tiles.reserve(x.tiles().size());
  for (const auto& t : x.tiles()) {
    TileVector moved(n);
    for (int j = 0; j < n; ++j) moved[sigma[j]] = t[j];
    tiles.push_back(std::move(moved));
  }
  return TilingInstance(std::move(period), std::move(tiles));
}

TilingInstance extrude(const TilingInstance& x, int new_dim) {
  if (new_dim <= x.dim()) {
    throw std::invalid_argument("extrusion requires a strictly larger dimension");
  }
  std::vector<long long> period = x.period();
  period.resize(new_dim, 1);
  std::vector<TileVector> tiles = x.tiles();
  for (auto& t : tiles) t.resize(new_dim, Rational(0));
  return TilingInstance(std::move(period), std::move(tiles));
}

}  // namespace cubetile

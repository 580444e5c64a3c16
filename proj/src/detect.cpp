#include "cubetile/detect.hpp"

#include <algorithm>
#include <map>

namespace cubetile {

namespace {

void require_valid(const TilingInstance& x) {
  VerifyReport report = verify(x);
  if (!report.valid()) {
    throw std::invalid_argument(
        "instance does not verify valid: " +
        report.describe(static_cast<long long>(x.tiles().size())));
  }
}

TileVector drop_coord(const TileVector& t, int coord) {
  TileVector out;
  out.reserve(t.size() - 1);
  for (size_t j = 0; j < t.size(); ++j) {
    if (static_cast<int>(j) != coord) out.push_back(t[j]);
  }
  return out;
}

std::vector<int> constant_coords_of(const std::vector<TileVector>& members,
                                    int direction) {
  std::vector<int> out;
  int n = static_cast<int>(members.front().size());
  for (int j = 0; j < n; ++j) {
    if (j == direction) continue;
    bool constant = true;
    for (size_t m = 1; m < members.size() && constant; ++m) {
      constant = members[m][j] == members[0][j];
    }
    if (constant) out.push_back(j);
  }
  return out;
}

bool witness_order(const ColumnWitness& a, const ColumnWitness& b) {
  if (a.direction != b.direction) return a.direction < b.direction;
  return a.members < b.members;
}

}  // namespace

std::vector<ColumnWitness> find_columns(const TilingInstance& x) {
  require_valid(x);
  const int n = x.dim();
  std::vector<ColumnWitness> out;
  for (int i = 0; i < n; ++i) {
    // Bucket tiles that agree outside i, then look for a full chain of the
    // running coordinate inside each bucket.
    std::map<TileVector, std::map<Rational, std::vector<Rational>>> buckets;
    for (const auto& t : x.tiles()) {
      buckets[drop_coord(t, i)][t[i].frac()].push_back(t[i]);
    }
    for (auto& [rest, chains] : buckets) {
      for (auto& [frac, values] : chains) {
        if (static_cast<long long>(values.size()) != x.period()[i]) continue;
        std::sort(values.begin(), values.end());
        ColumnWitness w;
        w.direction = i;
        for (const auto& v : values) {
          TileVector member = rest;
          member.insert(member.begin() + i, v);
          w.members.push_back(std::move(member));
        }
        w.base = w.members.front();
        for (int j = 0; j < n; ++j) {
          if (j != i) w.constant_coords.push_back(j);
        }
        out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ColumnWitness& a, const ColumnWitness& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    return a.base < b.base;
  });
  return out;
}

std::vector<ColumnWitness> find_l_columns(const TilingInstance& x, int l,
                                          bool exact_l) {
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  require_valid(x);
  const int n = x.dim();
  std::vector<ColumnWitness> out;
  if (l > n - 1) return out;

  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    // Constant sets of size >= l realize the "at least l" reading; a
    // witness that also keeps extra coordinates constant shows up for its
    // larger sets too and the (direction, members) dedup collapses it.
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
      if (__builtin_popcount(mask) < l) continue;
      std::vector<int> constant_set;
      for (size_t b = 0; b < others.size(); ++b) {
        if (mask & (1u << b)) constant_set.push_back(others[b]);
      }
      // Per (assignment on the constant set, coset): minimal matching tile
      // for every chain position.
      std::map<std::pair<TileVector, Rational>, std::vector<const TileVector*>>
          chains;
      for (const auto& t : x.tiles()) {
        TileVector key;
        for (int j : constant_set) key.push_back(t[j]);
        auto& slots = chains[{std::move(key), t[i].frac()}];
        slots.resize(static_cast<size_t>(x.period()[i]), nullptr);
        size_t pos = static_cast<size_t>(t[i].floor());
        if (!slots[pos] || t < *slots[pos]) slots[pos] = &t;
      }
      for (auto& [key, slots] : chains) {
        if (std::find(slots.begin(), slots.end(), nullptr) != slots.end()) {
          continue;
        }
        ColumnWitness w;
        w.direction = i;
        for (const TileVector* t : slots) w.members.push_back(*t);
        w.base = w.members.front();
        w.constant_coords = constant_coords_of(w.members, i);
        out.push_back(std::move(w));
      }
    }
  }

  std::sort(out.begin(), out.end(), witness_order);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ColumnWitness& a, const ColumnWitness& b) {
                          return a.direction == b.direction &&
                                 a.members == b.members;
                        }),
            out.end());
  if (exact_l) {
    std::erase_if(out, [l](const ColumnWitness& w) {
      return static_cast<int>(w.constant_coords.size()) != l;
    });
  }
  return out;
}

std::vector<FaceWitness> find_twin_faces(const TilingInstance& x) {
  require_valid(x);
  const int n = x.dim();
  const auto& tiles = x.tiles();
  std::vector<FaceWitness> out;
  for (int i = 0; i < n; ++i) {
    long long L = x.period()[i];
    if (L == 1) {
      // A period-1 coordinate stacks each class against its own lifts.
      for (const auto& t : tiles) out.push_back({i, t, t});
      continue;
    }
    for (size_t a = 0; a < tiles.size(); ++a) {
      for (size_t b = a + 1; b < tiles.size(); ++b) {
        bool agree = true;
        for (int j = 0; j < n && agree; ++j) {
          if (j != i) agree = tiles[a][j] == tiles[b][j];
        }
        if (!agree) continue;
        Rational d = tiles[b][i] - tiles[a][i];
        if (!d.is_integer()) continue;
        long long r = ((d.num() % L) + L) % L;
        if (r == 1 || r == L - 1) out.push_back({i, tiles[a], tiles[b]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FaceWitness& a, const FaceWitness& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

std::vector<long long> column_census(const TilingInstance& x) {
  std::vector<long long> census(x.dim(), 0);
  for (const auto& w : find_columns(x)) ++census[w.direction];
  return census;
}

std::string format_witness(const ColumnWitness& w) {
  return "column dir=" + std::to_string(w.direction + 1) + " base=" +
         format_tile(w.base) + " members=" + std::to_string(w.members.size());
}

std::string format_witness(const FaceWitness& w) {
  return "face dir=" + std::to_string(w.direction + 1) + " u=" +
         format_tile(w.u) + " v=" + format_tile(w.v);
}

}  // namespace cubetile

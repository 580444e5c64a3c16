#include "cubetile/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cubetile {

namespace {

// Label-free view of an instance: per coordinate, each tile's residue
// class (coset) and its rank inside that class. All relations between
// tiles are read off these ids, never off raw coordinates, so anything
// computed from the model is invariant under relabeling moves.
struct RelationModel {
  int n = 0;
  int tile_count = 0;
  std::vector<std::vector<int>> coset_of;    // [coord][tile]
  std::vector<std::vector<int>> offset_of;   // [coord][tile]
  std::vector<int> n_cosets;                 // [coord]
  std::vector<std::vector<int>> coset_size;  // [coord][coset] distinct values
  std::vector<std::string> sig;              // [coord] invariant signature

  // 0 = same value, 1 = same coset but different value (difference is a
  // nonzero integer mod the period), 2 = different coset.
  int rel(int i, int k, int coord) const {
    if (coset_of[coord][i] != coset_of[coord][k]) return 2;
    return offset_of[coord][i] == offset_of[coord][k] ? 0 : 1;
  }
};

void append_u64(std::string& s, unsigned long long v) {
  for (int b = 7; b >= 0; --b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

RelationModel build_model(const TilingInstance& x) {
  RelationModel m;
  m.n = x.dim();
  m.tile_count = static_cast<int>(x.tiles().size());
  m.coset_of.assign(m.n, std::vector<int>(m.tile_count));
  m.offset_of.assign(m.n, std::vector<int>(m.tile_count));
  m.n_cosets.assign(m.n, 0);
  m.coset_size.assign(m.n, {});
  m.sig.assign(m.n, {});

  for (int c = 0; c < m.n; ++c) {
    std::map<Rational, std::vector<Rational>> groups;
    for (const auto& t : x.tiles()) {
      auto& vals = groups[t[c].frac()];
      auto pos = std::lower_bound(vals.begin(), vals.end(), t[c]);
      if (pos == vals.end() || *pos != t[c]) vals.insert(pos, t[c]);
    }
    std::map<Rational, int> coset_id;
    for (auto& [frac, vals] : groups) {
      coset_id[frac] = static_cast<int>(coset_id.size());
      m.coset_size[c].push_back(static_cast<int>(vals.size()));
    }
    m.n_cosets[c] = static_cast<int>(coset_id.size());
    for (int i = 0; i < m.tile_count; ++i) {
      const Rational& v = x.tiles()[i][c];
      const auto& vals = groups.at(v.frac());
      m.coset_of[c][i] = coset_id.at(v.frac());
      m.offset_of[c][i] = static_cast<int>(
          std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
    }

    // The signature collects per-coordinate data any witness must match:
    // period, coset size multiset, equal-pair and integer-pair counts. It
    // filters sigma during the isomorphism search and pins the coordinate
    // order (up to ties) during canonicalization.
    long long eq_pairs = 0, int_pairs = 0;
    for (int i = 0; i < m.tile_count; ++i) {
      for (int k = i + 1; k < m.tile_count; ++k) {
        int r = m.rel(i, k, c);
        if (r == 0) ++eq_pairs;
        if (r == 1) ++int_pairs;
      }
    }
    std::vector<int> sizes = m.coset_size[c];
    std::sort(sizes.begin(), sizes.end());
    std::string& s = m.sig[c];
    append_u64(s, static_cast<unsigned long long>(x.period()[c]));
    append_u64(s, static_cast<unsigned long long>(sizes.size()));
    for (int z : sizes) append_u64(s, static_cast<unsigned long long>(z));
    append_u64(s, static_cast<unsigned long long>(eq_pairs));
    append_u64(s, static_cast<unsigned long long>(int_pairs));
  }
  return m;
}

bool relations_consistent(const RelationModel& ma, const RelationModel& mb,
                          const std::vector<int>& sigma,
                          const std::vector<int>& image, int i, int cand) {
  for (int k = 0; k < i; ++k) {
    for (int c = 0; c < ma.n; ++c) {
      if (ma.rel(i, k, c) != mb.rel(cand, image[k], sigma[c])) return false;
    }
  }
  return true;
}

bool match_tiles(const RelationModel& ma, const RelationModel& mb,
                 const std::vector<int>& sigma, std::vector<int>& image,
                 std::vector<bool>& used, int i) {
  if (i == ma.tile_count) return true;
  for (int cand = 0; cand < mb.tile_count; ++cand) {
    if (used[cand]) continue;
    if (!relations_consistent(ma, mb, sigma, image, i, cand)) continue;
    used[cand] = true;
    image[i] = cand;
    if (match_tiles(ma, mb, sigma, image, used, i + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const TilingInstance& a,
                                         const TilingInstance& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (a.tiles().size() != b.tiles().size()) return std::nullopt;
  {
    auto pa = a.period(), pb = b.period();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
  }

  RelationModel ma = build_model(a), mb = build_model(b);

  std::vector<int> sigma(a.dim());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool compatible = true;
    for (int c = 0; c < a.dim() && compatible; ++c) {
      compatible = ma.sig[c] == mb.sig[sigma[c]];
    }
    if (!compatible) continue;
    std::vector<int> image(ma.tile_count);
    std::vector<bool> used(mb.tile_count, false);
    if (match_tiles(ma, mb, sigma, image, used, 0)) {
      IsoWitness w;
      w.sigma = sigma;
      for (int i = 0; i < ma.tile_count; ++i) {
        w.tile_map.emplace_back(a.tiles()[i], b.tiles()[image[i]]);
      }
      return w;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

namespace {

// Minimal-encoding search for one coordinate ordering. Tiles are emitted
// one at a time; cosets and in-coset offsets receive labels on first use,
// so an emitted row depends only on relation structure, not on raw values.
// Because labels only grow as the emission advances, a tile's encoding
// never gets smaller later, hence only tiles with the minimal current row
// can start a minimal completion; ties branch.
class RowSearch {
 public:
  RowSearch(const RelationModel& m, std::vector<int> order)
      : m_(m), order_(std::move(order)), used_(m.tile_count, false) {
    coset_label_.resize(m_.n);
    offset_label_.resize(m_.n);
    next_coset_.assign(m_.n, 0);
    next_offset_.resize(m_.n);
    for (int c = 0; c < m_.n; ++c) {
      coset_label_[c].assign(m_.n_cosets[c], -1);
      next_offset_[c].assign(m_.n_cosets[c], 0);
      offset_label_[c].resize(m_.n_cosets[c]);
      for (int cid = 0; cid < m_.n_cosets[c]; ++cid) {
        offset_label_[c][cid].assign(m_.coset_size[c][cid], -1);
      }
    }
  }

  // best is shared across orderings and replaced whenever beaten.
  void run(std::vector<std::vector<int>>& best) { dfs(best); }

 private:
  std::vector<int> encode(int tile) const {
    std::vector<int> row;
    row.reserve(order_.size() * 2);
    for (int c : order_) {
      int cid = m_.coset_of[c][tile];
      int clab = coset_label_[c][cid];
      if (clab < 0) clab = next_coset_[c];
      int off = m_.offset_of[c][tile];
      int olab = offset_label_[c][cid][off];
      if (olab < 0) olab = next_offset_[c][cid];
      row.push_back(clab);
      row.push_back(olab);
    }
    return row;
  }

  void commit(int tile, std::vector<std::pair<int, int>>& fresh) {
    for (int c : order_) {
      int cid = m_.coset_of[c][tile];
      if (coset_label_[c][cid] < 0) {
        coset_label_[c][cid] = next_coset_[c]++;
        fresh.emplace_back(c, cid);
      }
      int off = m_.offset_of[c][tile];
      if (offset_label_[c][cid][off] < 0) {
        offset_label_[c][cid][off] = next_offset_[c][cid]++;
        fresh.emplace_back(~c, cid * (m_.tile_count + 1) + off);
      }
    }
  }

  void undo(const std::vector<std::pair<int, int>>& fresh) {
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) {
      auto [tag, key] = *it;
      if (tag >= 0) {
        coset_label_[tag][key] = -1;
        --next_coset_[tag];
      } else {
        int c = ~tag;
        int cid = key / (m_.tile_count + 1);
        int off = key % (m_.tile_count + 1);
        offset_label_[c][cid][off] = -1;
        --next_offset_[c][cid];
      }
    }
  }

  void dfs(std::vector<std::vector<int>>& best) {
    int depth = static_cast<int>(emitted_.size());
    if (depth == m_.tile_count) {
      if (best.empty() || emitted_ < best) best = emitted_;
      return;
    }

    // Standing of this branch against the best sequence so far. best can
    // have been replaced since the ancestors were compared, so recheck the
    // whole prefix here.
    bool tight = false;
    if (!best.empty()) {
      int d = 0;
      while (d < depth && emitted_[d] == best[d]) ++d;
      if (d < depth) {
        if (best[d] < emitted_[d]) return;  // now worse than best: dead
      } else {
        tight = true;
      }
    }

    std::vector<int> min_row;
    std::vector<int> cands;
    for (int t = 0; t < m_.tile_count; ++t) {
      if (used_[t]) continue;
      auto row = encode(t);
      if (min_row.empty() || row < min_row) {
        min_row = std::move(row);
        cands.assign(1, t);
      } else if (row == min_row) {
        cands.push_back(t);
      }
    }
    if (tight && min_row > best[depth]) return;

    for (int t : cands) {
      std::vector<std::pair<int, int>> fresh;
      used_[t] = true;
      commit(t, fresh);
      emitted_.push_back(min_row);
      dfs(best);
      emitted_.pop_back();
      undo(fresh);
      used_[t] = false;
    }
  }

  const RelationModel& m_;
  std::vector<int> order_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> coset_label_;               // [coord][coset]
  std::vector<std::vector<std::vector<int>>> offset_label_; // [coord][coset][rank]
  std::vector<int> next_coset_;
  std::vector<std::vector<int>> next_offset_;
  std::vector<std::vector<int>> emitted_;
};

void append_be16(std::vector<unsigned char>& out, unsigned v) {
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>(v & 0xff));
}

void append_be64(std::vector<unsigned char>& out, unsigned long long v) {
  for (int b = 7; b >= 0; --b) {
    out.push_back(static_cast<unsigned char>((v >> (8 * b)) & 0xff));
  }
}

}  // namespace

std::vector<unsigned char> canonical_form(const TilingInstance& x, int max_dim) {
  if (x.dim() > max_dim) {
    throw BudgetExceeded("dimension beyond canonicalization bound");
  }
  if (x.tiles().size() > 4096) {
    throw BudgetExceeded("tile count beyond canonicalization bound");
  }

  RelationModel m = build_model(x);

  // Coordinate orderings considered: signatures nondecreasing, ties free.
  // The signature is witness-invariant, so restricting the minimization to
  // these orderings keeps keys equal across isomorphic instances while
  // cutting the n! factor to the tied groups.
  std::vector<int> coords(m.n);
  std::iota(coords.begin(), coords.end(), 0);
  std::sort(coords.begin(), coords.end(), [&](int a, int b) {
    return m.sig[a] != m.sig[b] ? m.sig[a] < m.sig[b] : a < b;
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end) runs of equal sig
  for (int b = 0; b < m.n;) {
    int e = b;
    while (e < m.n && m.sig[coords[e]] == m.sig[coords[b]]) ++e;
    groups.emplace_back(b, e);
    b = e;
  }

  std::vector<std::vector<int>> best;
  while (true) {
    RowSearch(m, coords).run(best);
    // Odometer over the tied groups, last group fastest.
    int g = static_cast<int>(groups.size()) - 1;
    for (; g >= 0; --g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(coords.begin() + b, coords.begin() + e)) break;
    }
    if (g < 0) break;
  }

  // The emitted period sequence is the same for every ordering above
  // (the period leads the signature), so serialize it from the sorted order.
  std::vector<unsigned char> key;
  append_be16(key, static_cast<unsigned>(m.n));
  append_be16(key, static_cast<unsigned>(m.tile_count));
  for (int c : coords) {
    append_be64(key, static_cast<unsigned long long>(x.period()[c]));
  }
  for (const auto& row : best) {
    for (int v : row) append_be16(key, static_cast<unsigned>(v));
  }
  return key;
}

std::string to_hex(const std::vector<unsigned char>& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace cubetile

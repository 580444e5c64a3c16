#include "cubetile/discrete.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>

#include "cubetile/isomorphism.hpp"

namespace cubetile {

namespace {

// Coordinates of a vertex split into the half bit b = c / s (which of the
// two unit slabs the coordinate lies in) and the fine digit m = c % s.
// Vertices sharing all half bits are never compatible (differences stay
// below s), so a tiling holds exactly one vertex per half-bit class and
// the search fills the 2^n classes in order. The search index
// class_id * s^n + member_id groups each class into one contiguous block.
struct Geometry {
  int n = 0;
  int s = 1;
  long long classes = 0;   // 2^n
  long long members = 0;   // s^n
  long long vertex_count() const { return classes * members; }

  std::vector<std::uint8_t> decode(long long idx) const {
    long long cls = idx / members, mem = idx % members;
    std::vector<std::uint8_t> c(n);
    for (int j = n - 1; j >= 0; --j) {
      c[j] = static_cast<std::uint8_t>(mem % s);
      mem /= s;
    }
    for (int j = n - 1; j >= 0; --j) {
      if (cls & 1) c[j] = static_cast<std::uint8_t>(c[j] + s);
      cls >>= 1;
    }
    return c;
  }

  long long encode(const std::vector<std::uint8_t>& c) const {
    long long cls = 0, mem = 0;
    for (int j = 0; j < n; ++j) {
      cls = cls * 2 + (c[j] >= s ? 1 : 0);
      mem = mem * s + c[j] % s;
    }
    return cls * members + mem;
  }
};

Geometry make_geometry(int dim, int res) {
  if (dim < 1 || res < 1) throw std::invalid_argument("dimension and resolution must be positive");
  if (2 * res > 255) throw std::invalid_argument("resolution too large for packed coordinates");
  constexpr long long kCap = 1LL << 24;
  Geometry g;
  g.n = dim;
  g.s = res;
  g.classes = 1;
  g.members = 1;
  for (int j = 0; j < dim; ++j) {
    g.classes *= 2;
    g.members *= res;
    if (g.classes > kCap || g.members > kCap) {
      throw BudgetExceeded("discrete vertex space too large");
    }
  }
  return g;
}

bool compatible(const std::vector<std::uint8_t>& u,
                const std::vector<std::uint8_t>& v, int s) {
  for (size_t j = 0; j < u.size(); ++j) {
    int d = (u[j] - v[j] + 4 * s) % (2 * s);
    if (d == s) return true;
  }
  return false;
}

// Adjacency bitsets in search-index order, cached per (dim, res): the
// sampler is called once per seed and would otherwise rebuild the same
// matrix thousands of times.
struct Adjacency {
  long long vertex_count = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;  // row v at [v*words, (v+1)*words)
  const std::uint64_t* row(long long v) const { return bits.data() + v * words; }
};

constexpr long long kAdjacencyLimit = 16384;

std::shared_ptr<const Adjacency> adjacency_for(const Geometry& geo) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Adjacency>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(geo.n, geo.s);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto adj = std::make_shared<Adjacency>();
  long long V = geo.vertex_count();
  adj->vertex_count = V;
  adj->words = static_cast<int>((V + 63) / 64);
  adj->bits.assign(static_cast<size_t>(V) * adj->words, 0);
  std::vector<std::vector<std::uint8_t>> coords(V);
  for (long long v = 0; v < V; ++v) coords[v] = geo.decode(v);
  for (long long v = 0; v < V; ++v) {
    for (long long w = v + 1; w < V; ++w) {
      if (!compatible(coords[v], coords[w], geo.s)) continue;
      adj->bits[v * adj->words + (w >> 6)] |= 1ull << (w & 63);
      adj->bits[w * adj->words + (v >> 6)] |= 1ull << (v & 63);
    }
  }
  cache[key] = adj;
  return adj;
}

bool block_nonempty(const std::uint64_t* cand, long long lo, long long hi) {
  long long wlo = lo >> 6, whi = (hi - 1) >> 6;
  std::uint64_t first_mask = ~0ull << (lo & 63);
  std::uint64_t last_mask = (hi & 63) ? ((1ull << (hi & 63)) - 1) : ~0ull;
  if (wlo == whi) return (cand[wlo] & first_mask & last_mask) != 0;
  if (cand[wlo] & first_mask) return true;
  for (long long w = wlo + 1; w < whi; ++w) {
    if (cand[w]) return true;
  }
  return (cand[whi] & last_mask) != 0;
}

DiscreteTiling assemble(const Geometry& geo, const std::vector<long long>& chosen) {
  DiscreteTiling d;
  d.dim = geo.n;
  d.res = geo.s;
  for (long long v : chosen) d.vertices.push_back(geo.decode(v));
  std::sort(d.vertices.begin(), d.vertices.end());
  return d;
}

// Shared depth-first engine over the class blocks. candidate_order lets
// the sampler shuffle within a class; emit returns false to stop.
class ClassSearch {
 public:
  ClassSearch(const Geometry& geo, std::shared_ptr<const Adjacency> adj)
      : geo_(geo), adj_(std::move(adj)), words_(adj_->words) {
    cand_stack_.assign(static_cast<size_t>(geo_.classes + 1) * words_, 0);
    std::uint64_t* root = level(0);
    long long V = geo_.vertex_count();
    for (long long w = 0; w < V; ++w) root[w >> 6] |= 1ull << (w & 63);
  }

  // Returns false when the emit callback asked to stop.
  bool run(const std::vector<long long>& prefix,
           const std::function<void(std::vector<long long>&)>& order_hook,
           const std::function<bool(const std::vector<long long>&)>& emit) {
    chosen_.clear();
    for (size_t i = 0; i < prefix.size(); ++i) {
      for (size_t k = 0; k < i; ++k) {
        if (!bit(adj_->row(prefix[k]), prefix[i])) return true;  // empty branch
      }
    }
    for (long long v : prefix) {
      intersect(level(chosen_.size() + 1), level(chosen_.size()), adj_->row(v));
      chosen_.push_back(v);
    }
    order_hook_ = &order_hook;
    emit_ = &emit;
    return dfs();
  }

 private:
  std::uint64_t* level(size_t depth) { return cand_stack_.data() + depth * words_; }

  static bool bit(const std::uint64_t* row, long long v) {
    return (row[v >> 6] >> (v & 63)) & 1;
  }

  void intersect(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b) {
    for (int w = 0; w < words_; ++w) out[w] = a[w] & b[w];
  }

  bool viable(const std::uint64_t* cand, long long from_class) {
    for (long long c = from_class; c < geo_.classes; ++c) {
      if (!block_nonempty(cand, c * geo_.members, (c + 1) * geo_.members)) {
        return false;
      }
    }
    return true;
  }

  bool dfs() {
    long long cls = static_cast<long long>(chosen_.size());
    if (cls == geo_.classes) return (*emit_)(chosen_);
    const std::uint64_t* cand = level(chosen_.size());
    std::vector<long long> block;
    for (long long v = cls * geo_.members; v < (cls + 1) * geo_.members; ++v) {
      if (bit(cand, v)) block.push_back(v);
    }
    (*order_hook_)(block);
    for (long long v : block) {
      std::uint64_t* next = level(chosen_.size() + 1);
      intersect(next, cand, adj_->row(v));
      if (cls + 1 < geo_.classes && !viable(next, cls + 1)) continue;
      chosen_.push_back(v);
      bool keep_going = dfs();
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Geometry& geo_;
  std::shared_ptr<const Adjacency> adj_;
  int words_;
  std::vector<std::uint64_t> cand_stack_;
  std::vector<long long> chosen_;
  const std::function<void(std::vector<long long>&)>* order_hook_ = nullptr;
  const std::function<bool(const std::vector<long long>&)>* emit_ = nullptr;
};

}  // namespace

TilingInstance to_exact(const DiscreteTiling& d) {
  std::vector<long long> period(d.dim, 2);
  std::vector<TileVector> tiles;
  tiles.reserve(d.vertices.size());
  for (const auto& v : d.vertices) {
    TileVector t;
    t.reserve(d.dim);
    for (int j = 0; j < d.dim; ++j) t.push_back(Rational(v[j], d.res));
    tiles.push_back(std::move(t));
  }
  return TilingInstance(std::move(period), std::move(tiles));
}

DiscreteTiling from_discrete(const TilingInstance& x, int res) {
  for (long long L : x.period()) {
    if (L != 2) throw NotRepresentable("every period must be 2");
  }
  long long expected = 1;
  for (int j = 0; j < x.dim(); ++j) expected *= 2;
  if (static_cast<long long>(x.tiles().size()) != expected) {
    throw NotRepresentable("tile count must be 2^dim");
  }
  long long needed = 1;
  for (const auto& t : x.tiles()) {
    for (const auto& c : t) needed = lcm_positive(needed, c.den());
  }
  if (res == 0) {
    if (needed > 127) throw NotRepresentable("resolution too large for packed coordinates");
    res = static_cast<int>(needed);
  } else if (res < 1 || 2 * res > 255) {
    throw std::invalid_argument("resolution out of range");
  } else if (needed > res || res % needed != 0) {
    throw NotRepresentable("denominators do not divide the resolution");
  }
  DiscreteTiling d;
  d.dim = x.dim();
  d.res = res;
  for (const auto& t : x.tiles()) {
    std::vector<std::uint8_t> v(x.dim());
    for (int j = 0; j < x.dim(); ++j) {
      v[j] = static_cast<std::uint8_t>(t[j].num() * (res / t[j].den()));
    }
    d.vertices.push_back(std::move(v));
  }
  std::sort(d.vertices.begin(), d.vertices.end());
  for (size_t a = 0; a < d.vertices.size(); ++a) {
    for (size_t b = a + 1; b < d.vertices.size(); ++b) {
      if (!compatible(d.vertices[a], d.vertices[b], res)) {
        throw NotRepresentable("pairwise criterion fails in the discrete model");
      }
    }
  }
  return d;
}

void enumerate_tilings(int dim, int res, const EnumOptions& opt,
                       const std::function<bool(const DiscreteTiling&)>& sink) {
  Geometry geo = make_geometry(dim, res);
  if (geo.vertex_count() > opt.vertex_budget) {
    throw BudgetExceeded("vertex count above enumeration budget");
  }
  if (geo.vertex_count() > kAdjacencyLimit) {
    throw BudgetExceeded("vertex count above supported enumeration maximum");
  }

  std::vector<long long> prefix;
  for (const auto& v : opt.class_prefix) {
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("prefix vertex arity does not match dimension");
    }
    for (std::uint8_t c : v) {
      if (c >= 2 * res) throw std::invalid_argument("prefix coordinate out of range");
    }
    long long idx = geo.encode(v);
    long long expected_class = static_cast<long long>(prefix.size());
    if (idx / geo.members != expected_class) {
      throw std::invalid_argument("prefix vertex in the wrong class");
    }
    prefix.push_back(idx);
  }

  long long emitted = 0;
  std::set<std::vector<unsigned char>> seen;
  auto no_reorder = [](std::vector<long long>&) {};
  auto emit = [&](const std::vector<long long>& chosen) {
    DiscreteTiling d = assemble(geo, chosen);
    if (opt.dedup_canonical && !seen.insert(canonical_form(to_exact(d))).second) {
      return true;
    }
    ++emitted;
    if (!sink(d)) return false;
    return opt.limit == 0 || emitted < opt.limit;
  };
  ClassSearch(geo, adjacency_for(geo)).run(prefix, no_reorder, emit);
}

std::vector<DiscreteTiling> enumerate_all(int dim, int res, const EnumOptions& opt) {
  std::vector<DiscreteTiling> out;
  enumerate_tilings(dim, res, opt, [&](const DiscreteTiling& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling; unbiased and identical on every platform, which
  // std::uniform_int_distribution does not promise.
  std::uint64_t limit = ~0ull - ~0ull % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

// Completion without the cached adjacency matrix, for vertex counts where
// the matrix would not fit; candidates are tested directly.
DiscreteTiling sample_direct(const Geometry& geo, std::mt19937_64& rng) {
  std::vector<std::vector<std::uint8_t>> chosen;
  std::function<bool(long long)> dfs = [&](long long cls) -> bool {
    if (cls == geo.classes) return true;
    std::vector<long long> block;
    for (long long v = cls * geo.members; v < (cls + 1) * geo.members; ++v) {
      auto c = geo.decode(v);
      bool ok = true;
      for (const auto& u : chosen) {
        if (!compatible(u, c, geo.s)) {
          ok = false;
          break;
        }
      }
      if (ok) block.push_back(v);
    }
    for (size_t i = block.size(); i > 1; --i) {
      std::swap(block[i - 1], block[bounded(rng, i)]);
    }
    for (long long v : block) {
      chosen.push_back(geo.decode(v));
      if (dfs(cls + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) throw std::logic_error("discrete completion failed");
  DiscreteTiling d;
  d.dim = geo.n;
  d.res = geo.s;
  d.vertices = chosen;
  std::sort(d.vertices.begin(), d.vertices.end());
  return d;
}

}  // namespace

DiscreteTiling sample_tiling(int dim, int res, std::uint64_t seed) {
  if (dim > 8) throw BudgetExceeded("sampling guarded to dimension <= 8");
  Geometry geo = make_geometry(dim, res);
  std::seed_seq ss{static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(res),
                   static_cast<std::uint32_t>(seed & 0xffffffffull),
                   static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(ss);

  if (geo.vertex_count() > kAdjacencyLimit) return sample_direct(geo, rng);

  DiscreteTiling result;
  bool found = false;
  auto shuffle_hook = [&](std::vector<long long>& block) {
    for (size_t i = block.size(); i > 1; --i) {
      std::swap(block[i - 1], block[bounded(rng, i)]);
    }
  };
  auto emit = [&](const std::vector<long long>& chosen) {
    result = assemble(geo, chosen);
    found = true;
    return false;  // first completion wins
  };
  ClassSearch(geo, adjacency_for(geo)).run({}, shuffle_hook, emit);
  if (!found) throw std::logic_error("discrete completion failed");
  return result;
}

std::string export_dimacs(int dim, int res, long long pair_budget) {
  Geometry geo = make_geometry(dim, res);
  long long V = geo.vertex_count();
  if (V * (V - 1) / 2 > pair_budget) {
    throw BudgetExceeded("pair scan above budget");
  }

  // DIMACS numbering is by coordinate order, not search order.
  std::vector<std::vector<std::uint8_t>> coords;
  coords.reserve(static_cast<size_t>(V));
  std::vector<std::uint8_t> cur(dim, 0);
  while (true) {
    coords.push_back(cur);
    int j = dim - 1;
    while (j >= 0 && cur[j] == 2 * res - 1) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }

  std::string body;
  long long edges = 0;
  for (long long a = 0; a < V; ++a) {
    for (long long b = a + 1; b < V; ++b) {
      if (!compatible(coords[a], coords[b], res)) continue;
      ++edges;
      body += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    }
  }
  return "p edge " + std::to_string(V) + " " + std::to_string(edges) + "\n" + body;
}

}  // namespace cubetile

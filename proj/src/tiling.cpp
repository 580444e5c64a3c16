#include "cubetile/tiling.hpp"

#include <algorithm>
#include <sstream>

namespace cubetile {

std::string format_tile(const TileVector& t) {
  std::string out;
  for (size_t j = 0; j < t.size(); ++j) {
    if (j) out += ' ';
    out += t[j].str();
  }
  return out;
}

TilingInstance::TilingInstance(std::vector<long long> period,
                               std::vector<TileVector> tiles)
    : period_(std::move(period)), tiles_(std::move(tiles)) {
  if (period_.empty()) throw std::invalid_argument("dimension must be positive");
  for (long long L : period_) {
    if (L <= 0) throw std::invalid_argument("period entries must be positive");
  }
  for (auto& t : tiles_) {
    if (t.size() != period_.size()) {
      throw std::invalid_argument("tile arity does not match dimension");
    }
    for (size_t j = 0; j < t.size(); ++j) t[j] = t[j].mod(period_[j]);
  }
  std::sort(tiles_.begin(), tiles_.end());
  if (std::adjacent_find(tiles_.begin(), tiles_.end()) != tiles_.end()) {
    throw std::invalid_argument("duplicate tile");
  }
}

long long TilingInstance::volume() const {
  long long v = 1;
  for (long long L : period_) {
    if (v > (1LL << 62) / L) throw std::overflow_error("period volume overflow");
    v *= L;
  }
  return v;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty()) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
  }
  return v;
}

}  // namespace

TilingInstance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  int dim = -1;
  std::vector<long long> period;
  std::vector<TileVector> tiles;
  std::vector<TileVector> seen_sorted;  // for duplicate reporting with line info

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "dim") {
      if (dim != -1) throw ParseError(line_no, "repeated dim line");
      if (toks.size() != 2) throw ParseError(line_no, "dim expects one integer");
      long long d = parse_int(toks[1], line_no, "dimension");
      if (d < 1 || d > 64) throw ParseError(line_no, "dimension out of range");
      dim = static_cast<int>(d);
    } else if (toks[0] == "period") {
      if (dim == -1) throw ParseError(line_no, "period before dim");
      if (!period.empty()) throw ParseError(line_no, "repeated period line");
      if (static_cast<int>(toks.size()) != dim + 1) {
        throw ParseError(line_no, "period arity does not match dim");
      }
      for (int j = 1; j <= dim; ++j) {
        long long L = parse_int(toks[j], line_no, "period entry");
        if (L <= 0) throw ParseError(line_no, "nonpositive period entry");
        period.push_back(L);
      }
    } else if (toks[0] == "tile") {
      if (period.empty()) throw ParseError(line_no, "tile before period");
      if (static_cast<int>(toks.size()) != dim + 1) {
        throw ParseError(line_no, "tile arity does not match dim");
      }
      TileVector t;
      for (int j = 1; j <= dim; ++j) {
        Rational r;
        try {
          r = parse_rational(toks[j]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, e.what());
        }
        t.push_back(r.mod(period[j - 1]));
      }
      auto pos = std::lower_bound(seen_sorted.begin(), seen_sorted.end(), t);
      if (pos != seen_sorted.end() && *pos == t) {
        throw ParseError(line_no, "duplicate tile " + format_tile(t));
      }
      seen_sorted.insert(pos, t);
      tiles.push_back(std::move(t));
    } else {
      throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (dim == -1) throw ParseError(line_no + 1, "missing dim line");
  if (period.empty()) throw ParseError(line_no + 1, "missing period line");
  return TilingInstance(std::move(period), std::move(tiles));
}

TilingInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize(const TilingInstance& x) {
  std::string out = "dim " + std::to_string(x.dim()) + "\nperiod";
  for (long long L : x.period()) out += ' ' + std::to_string(L);
  out += '\n';
  for (const auto& t : x.tiles()) out += "tile " + format_tile(t) + "\n";
  return out;
}

bool check_distinguishable(const TileVector& u, const TileVector& v,
                           const std::vector<long long>& period) {
  if (u.size() != period.size() || v.size() != period.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (size_t j = 0; j < period.size(); ++j) {
    Rational d = u[j] - v[j];
    if (d.is_integer() && d.num() % period[j] != 0) return true;
  }
  return false;
}

std::string VerifyReport::describe(long long tile_count) const {
  if (!failure) return "valid " + std::to_string(tile_count) + " tiles";
  struct Printer {
    std::string operator()(const CountMismatch& c) const {
      return "CountMismatch expected=" + std::to_string(c.expected) +
             " actual=" + std::to_string(c.actual);
    }
    std::string operator()(const OverlapPair& p) const {
      return "OverlapPair (" + format_tile(p.u) + ") (" + format_tile(p.v) + ")";
    }
    std::string operator()(const Malformed& m) const {
      return "Malformed " + m.detail;
    }
  };
  return std::visit(Printer{}, *failure);
}

VerifyReport verify(const TilingInstance& x) {
  VerifyReport report;
  long long expected = x.volume();
  long long actual = static_cast<long long>(x.tiles().size());
  if (expected != actual) {
    report.failure = VerifyReport::CountMismatch{expected, actual};
    return report;
  }
  const auto& tiles = x.tiles();
  for (size_t i = 0; i < tiles.size(); ++i) {
    for (size_t j = i + 1; j < tiles.size(); ++j) {
      if (!check_distinguishable(tiles[i], tiles[j], x.period())) {
        report.failure = VerifyReport::OverlapPair{tiles[i], tiles[j]};
        return report;
      }
    }
  }
  return report;
}

}  // namespace cubetile

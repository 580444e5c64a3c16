#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cubetile/cli.hpp"
#include "cubetile/tiling.hpp"
#include "helpers.hpp"

using namespace cubetile;
using namespace cubetile::testing;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Files live under a per-process tmp directory; written once, read many.
class Workspace {
 public:
  Workspace() {
    dir_ = std::filesystem::temp_directory_path() /
           ("cubetile-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~Workspace() { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

 private:
  std::filesystem::path dir_;
};

Workspace& ws() {
  static Workspace w;
  return w;
}

std::string brick_file() {
  static std::string path = ws().file("brick.tile", serialize(brick()));
  return path;
}

std::string overlap_file() {
  static std::string path = ws().file("overlap.tile", serialize(overlap_pair()));
  return path;
}

}  // namespace

TEST_CASE("verify reports validity with matching exit codes") {
  RunResult ok = run({"verify", brick_file()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid 2 tiles\n");

  RunResult bad = run({"verify", overlap_file()});
  CHECK(bad.code == 1);
  CHECK(bad.out == "OverlapPair (0/1 0/1) (1/2 0/1)\n");
}

TEST_CASE("columns and faces print witness lines") {
  RunResult cols = run({"columns", brick_file()});
  CHECK(cols.code == 0);
  CHECK(cols.out ==
        "column dir=1 base=0/1 0/1 members=1\n"
        "column dir=1 base=1/2 1/1 members=1\n");

  RunResult faces = run({"faces", brick_file()});
  CHECK(faces.code == 0);
  CHECK(faces.out ==
        "face dir=1 u=0/1 0/1 v=0/1 0/1\n"
        "face dir=1 u=1/2 1/1 v=1/2 1/1\n");

  RunResult invalid = run({"columns", overlap_file()});
  CHECK(invalid.code == 1);
  CHECK(invalid.out.empty());
  CHECK(invalid.err.find("OverlapPair") != std::string::npos);

  RunResult exact = run({"columns", brick_file(), "--l", "0", "--exact-l"});
  CHECK(exact.code == 0);  // the cross-chain in direction 2 has no constants
}

TEST_CASE("slice cuts and serializes") {
  RunResult r = run({"slice", brick_file(), "--coord", "2", "--index", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "dim 1\nperiod 1\ntile 1/2\n");

  CHECK(run({"slice", brick_file(), "--coord", "3", "--index", "1"}).code == 2);
  CHECK(run({"slice", brick_file(), "--coord", "2", "--index", "9"}).code == 2);
}

TEST_CASE("canon and iso agree about the brick pair") {
  std::string swapped = ws().file("swapped.tile", serialize(swapped_brick()));

  RunResult a = run({"canon", brick_file()});
  RunResult b = run({"canon", swapped});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.size() > 1);

  RunResult yes = run({"iso", brick_file(), swapped});
  CHECK(yes.code == 0);
  CHECK(yes.out ==
        "isomorphic sigma=2,1\n"
        "map (0/1 0/1) -> (0/1 0/1)\n"
        "map (1/2 1/1) -> (1/1 1/2)\n");

  std::string z = ws().file("z2.tile", serialize(z2()));
  RunResult no = run({"iso", brick_file(), z});
  CHECK(no.code == 1);
  CHECK(no.out == "not isomorphic\n");
}

TEST_CASE("transform subcommands emit .tile documents") {
  RunResult shift = run({"shift", brick_file(), "--coord", "2", "--coset", "0/1",
                         "--by", "1"});
  CHECK(shift.code == 0);
  CHECK(shift.out == "dim 2\nperiod 1 2\ntile 0/1 1/1\ntile 1/2 0/1\n");

  RunResult perm = run({"permute", brick_file(), "--sigma", "2,1"});
  CHECK(perm.code == 0);
  CHECK(perm.out == serialize(swapped_brick()));

  RunResult ext = run({"extrude", brick_file(), "--dim", "3"});
  CHECK(ext.code == 0);
  CHECK(ext.out == "dim 3\nperiod 1 2 1\ntile 0/1 0/1 0/1\ntile 1/2 1/1 0/1\n");

  CHECK(run({"permute", brick_file(), "--sigma", "1"}).code == 2);
  CHECK(run({"permute", brick_file(), "--sigma", "1,x"}).code == 2);
  CHECK(run({"extrude", brick_file(), "--dim", "2"}).code == 2);
}

TEST_CASE("sample and enumerate stream tile documents") {
  RunResult one = run({"sample", "--dim", "2", "--res", "1", "--seed", "7"});
  CHECK(one.code == 0);
  CHECK(parse_instance(one.out).dim() == 2);

  RunResult two = run({"sample", "--dim", "2", "--res", "2", "--seed", "3",
                       "--count", "2"});
  CHECK(two.code == 0);
  CHECK(two.out.find("---\n") != std::string::npos);

  RunResult all = run({"enumerate", "--dim", "2", "--res", "1"});
  CHECK(all.code == 0);
  CHECK(all.out == "dim 2\nperiod 2 2\ntile 0/1 0/1\ntile 0/1 1/1\n"
                   "tile 1/1 0/1\ntile 1/1 1/1\n");

  RunResult capped = run({"enumerate", "--dim", "2", "--res", "2",
                          "--limit", "2"});
  CHECK(capped.code == 0);
  CHECK(std::count(capped.out.begin(), capped.out.end(), '-') == 3);  // one ---

  CHECK(run({"enumerate", "--dim", "13", "--res", "1"}).code == 3);
  CHECK(run({"sample", "--dim", "9", "--res", "1", "--seed", "1"}).code == 3);
}

TEST_CASE("export-dimacs matches the library text") {
  RunResult r = run({"export-dimacs", "--dim", "1", "--res", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "p edge 2 1\ne 1 2\n");
}

TEST_CASE("check-theorems summarizes the column law") {
  RunResult r = run({"check-theorems", "--max-dim", "2", "--samples", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theorem dim res mode cases valid with-column pass\n") == 0);
  CHECK(r.out.find("summary pass\n") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "/nonexistent/x.tile"}).code == 2);
  CHECK(run({"sample", "--dim", "2"}).code == 2);  // missing required options

  std::string broken = ws().file("broken.tile", "dim 1\nperiod 1\ntile 0\n");
  RunResult r = run({"verify", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("help is success") {
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
  std::vector<std::vector<std::string>> invocations{
      {"verify", brick_file()},
      {"columns", brick_file()},
      {"faces", brick_file()},
      {"canon", brick_file()},
      {"sample", "--dim", "3", "--res", "2", "--seed", "11", "--count", "3"},
      {"enumerate", "--dim", "2", "--res", "2", "--limit", "5"},
      {"export-dimacs", "--dim", "2", "--res", "1"},
  };
  for (const auto& args : invocations) {
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qshell/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qshell::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expect = kOk) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = call(args);
  REQUIRE(r.code == expect);
  return json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qshell-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("QSHELL_MAX_SUBSPACES", value, 1); }
  ~EnvGuard() { unsetenv("QSHELL_MAX_SUBSPACES"); }
};

}  // namespace

TEST_CASE("cli usage and version") {
  const auto v = call({"--version"});
  CHECK(v.code == kOk);
  CHECK(v.out.find("qshell 1.0.0") != std::string::npos);
  CHECK(call({}).code == kUsage);
  CHECK(call({"no-such-command"}).code == kUsage);
  CHECK(call({"sphere-homology", "--n", "3"}).code == kUsage);
  CHECK(call({"sphere-homology", "--n", "3", "--q", "6"}).code == kUsage);
  CHECK(call({"sphere-homology", "--n", "2", "--q", "11"}).code == kUsage);
  CHECK(call({"sphere-homology", "--n", "0", "--q", "2"}).code == kUsage);
  CHECK(call({"matroid-shell"}).code == kUsage);
  CHECK(call({"verify"}).code == kUsage);
}

TEST_CASE("cli sphere homology") {
  const auto j = call_json({"sphere-homology", "--n", "3", "--q", "2"});
  CHECK(j["match"] == true);
  CHECK(j["euler_ok"] == true);
  CHECK(j["simplex_counts"] == json::array({14, 21}));
  bool found = false;
  for (const auto& d : j["degrees"])
    if (d["p"] == 1) {
      CHECK(d["betti"] == 8);
      found = true;
    }
  CHECK(found);
  const auto one = call_json({"sphere-homology", "--n", "1", "--q", "3"});
  CHECK(one["degrees"][0]["p"] == -1);
  CHECK(one["degrees"][0]["betti"] == 1);
  const auto text = call({"sphere-homology", "--n", "2", "--q", "3"});
  CHECK(text.code == kOk);
  CHECK(text.out.find("Z^3") != std::string::npos);
}

TEST_CASE("cli JSON output is byte-identical across runs and matches --json") {
  TempDir tmp;
  const auto a = call({"sphere-homology", "--n", "3", "--q", "2", "--format", "json", "--json", tmp.file("a.json")});
  const auto b = call({"sphere-homology", "--n", "3", "--q", "2", "--format", "json"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  CHECK(slurp(tmp.file("a.json")) == a.out);
  const auto c = call({"explore-links", "--sphere", "3", "2", "--random-orders", "4", "--seed", "9", "--format", "json"});
  const auto d = call({"explore-links", "--sphere", "3", "2", "--random-orders", "4", "--seed", "9", "--format", "json"});
  CHECK(c.code == kOk);
  CHECK(c.out == d.out);
}

TEST_CASE("cli subspace caps") {
  CHECK(call({"sphere-homology", "--n", "3", "--q", "2", "--max-subspaces", "10"}).code == kCapExceeded);
  CHECK(call({"sphere-homology", "--n", "6", "--q", "3"}).code == kCapExceeded);
  {
    EnvGuard env("10");
    CHECK(call({"sphere-homology", "--n", "3", "--q", "2"}).code == kCapExceeded);
    // the flag wins over the environment
    CHECK(call({"sphere-homology", "--n", "3", "--q", "2", "--max-subspaces", "100"}).code == kOk);
  }
  {
    EnvGuard env("lots");
    CHECK(call({"sphere-homology", "--n", "3", "--q", "2"}).code == kUsage);
  }
  const auto j = call_json({"sphere-homology", "--n", "2", "--q", "2"});
  CHECK(j["parameters"]["max_subspaces"] == 100000);
}

TEST_CASE("cli matroid-shell and verify on emitted files") {
  TempDir tmp;
  const auto rt = tmp.file("u.rank"), ind = tmp.file("u.ind"), bs = tmp.file("u.bases");
  REQUIRE(call({"emit", "--uniform", "2", "3", "2", "--rank-table", rt, "--independents", ind, "--bases", bs}).code == kOk);
  const auto shell = call_json({"matroid-shell", "--rank-table", rt});
  CHECK(shell["is_shelling"] == true);
  const auto direct = call_json({"matroid-shell", "--uniform", "2", "3", "2"});
  CHECK(direct["is_shelling"] == true);
  CHECK(direct["order"] == shell["order"]);
  CHECK(call_json({"verify", "--rank-table", rt})["ok"] == true);
  CHECK(call_json({"verify", "--independents", ind})["ok"] == true);
  CHECK(call_json({"verify", "--bases", bs})["ok"] == true);

  // break submodularity: give one line rank 2
  std::string text = slurp(rt);
  const auto pos = text.find("1,0,0 | 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 9, "1,0,0 | 0");
  const auto bad = tmp.write("bad.rank", text);
  CHECK(call({"matroid-shell", "--rank-table", bad}).code == kAxiomViolation);
  const auto vr = call_json({"verify", "--rank-table", bad}, kAxiomViolation);
  CHECK(vr["ok"] == false);

  const auto garbage = tmp.write("garbage.rank", "q=2 n=3\n1,0,0 | one\n");
  CHECK(call({"verify", "--rank-table", garbage}).code == kParseFailure);
  CHECK(call({"matroid-shell", "--rank-table", garbage}).code == kAxiomViolation);
  CHECK(call({"verify", "--bases", tmp.file("missing")}).code == kParseFailure);

  const auto nested = tmp.write("nested.bases", "q=2 n=3\n1 0 0\n\n1 0 0\n0 1 0\n");
  CHECK(call({"verify", "--bases", nested}).code == kAxiomViolation);
}

TEST_CASE("cli homology from a file") {
  TempDir tmp;
  const auto f = tmp.write("pts.txt", "q=2 n=2\n1 0\n\n0 1\n\n1 1\n");
  const auto j = call_json({"homology", "--from-file", f});
  CHECK(j["faces"] == 4);  // with the zero subspace
  CHECK(j["closure_added"] == false);
  CHECK(j["degrees"][1]["betti"] == 2);
  const auto plane = tmp.write("plane.txt", "q=2 n=3\n1 0 0\n0 1 0\n");
  const auto p = call_json({"homology", "--from-file", plane});
  CHECK(p["closure_added"] == true);
  for (const auto& d : p["degrees"]) CHECK(d["betti"] == 0);
  CHECK(call({"homology", "--from-file", tmp.file("nope")}).code == kParseFailure);
  const auto broken = tmp.write("broken.txt", "q=2 n=2\n1 0 1\n");
  CHECK(call({"homology", "--from-file", broken}).code == kParseFailure);
}

TEST_CASE("cli explore-links on a sphere") {
  const auto j = call_json({"explore-links", "--sphere", "3", "2"});
  const auto& g = j["candidates"][0]["given"];
  CHECK(g["is_shelling"] == true);
  CHECK(g["hypothesis"] == true);
  CHECK(g["ell"] == 3);
  CHECK(g["prediction_matches"] == true);
  CHECK(g["predicted_betti_top"]["betti"] == 8);
}
